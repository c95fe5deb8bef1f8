#include "wres/symbol_jets.hpp"

#include <algorithm>
#include <sstream>

namespace wres {

const char* prim_kind_name(PrimKind k) {
    switch (k) {
        case PrimKind::norm_xi_sq: return "|xi|^2";
        case PrimKind::xi_n: return "xin";
        case PrimKind::xi_prime: return "xi";
        case PrimKind::xi_up: return "xi^";
        case PrimKind::c_xi: return "c(xi)";
        case PrimKind::c_e: return "c";
        case PrimKind::cbar_e: return "cb";
        case PrimKind::gamma_up: return "Gamma^";
        case PrimKind::sigma_up: return "sigma^";
        case PrimKind::a_up: return "a^";
        case PrimKind::metric_inv: return "g^";
        case PrimKind::scalar_curv: return "sM";
        case PrimKind::boundary_scalar_curv: return "sB";
        case PrimKind::witten_potential: return "T2V2";
        case PrimKind::witten_gradient: return "TcGradV";
        case PrimKind::curvature_atom: return "RM";
    }
    return "?";
}

XDeriv XDeriv::with(int dir) const {
    if (count == dirs.size()) throw missing_table_entry("derivative order above " + std::to_string(dirs.size()));
    XDeriv r = *this;
    r.dirs[r.count++] = static_cast<std::uint8_t>(dir);
    std::sort(r.dirs.begin(), r.dirs.begin() + r.count);
    return r;
}

int XDeriv::normal_count() const {
    return static_cast<int>(std::count(dirs.begin(), dirs.begin() + count, kDim));
}

std::string XDeriv::str() const {
    std::string s;
    for (int i = 0; i < count; ++i) s += "d" + std::to_string(dirs[i]);
    return s;
}

std::string Primitive::str() const {
    std::ostringstream os;
    os << d.str() << prim_kind_name(kind);
    int arity = 0;
    switch (kind) {
        case PrimKind::xi_prime:
        case PrimKind::xi_up:
        case PrimKind::c_e:
        case PrimKind::cbar_e:
        case PrimKind::gamma_up:
        case PrimKind::sigma_up:
        case PrimKind::a_up: arity = 1; break;
        case PrimKind::metric_inv: arity = 2; break;
        case PrimKind::curvature_atom: arity = 4; break;
        default: break;
    }
    if (arity > 0) {
        os << "(";
        for (int i = 0; i < arity; ++i) os << (i ? "," : "") << int(idx[i]);
        os << ")";
    }
    return os.str();
}

std::string Direction::str() const { return std::string(var == Var::x ? "x" : "xi") + std::to_string(index); }

namespace {

bool kind_commutes(PrimKind k) {
    switch (k) {
        case PrimKind::c_xi:
        case PrimKind::c_e:
        case PrimKind::cbar_e:
        case PrimKind::sigma_up:
        case PrimKind::a_up:
        case PrimKind::witten_gradient: return false;
        default: return true;
    }
}

// Coordinates and frame Clifford factors do not depend on x.
bool x_independent(PrimKind k) {
    return k == PrimKind::xi_n || k == PrimKind::xi_prime || k == PrimKind::c_e || k == PrimKind::cbar_e;
}

const JetExpr kZero = JetNode::make_const(GaussianRational(0));
const JetExpr kOne = JetNode::make_const(GaussianRational(1));

}  // namespace

std::string JetNode::str() const {
    switch (op_) {
        case Op::constant: return c_.str();
        case Op::prim: return p_.str();
        case Op::pow: return "(" + kids_[0]->str() + ")^" + std::to_string(e_);
        case Op::add:
        case Op::mul: {
            std::string s = "(";
            for (std::size_t i = 0; i < kids_.size(); ++i) {
                if (i) s += op_ == Op::add ? " + " : " * ";
                s += kids_[i]->str();
            }
            return s + ")";
        }
    }
    return "?";
}

JetExpr JetNode::make_const(const GaussianRational& c) {
    auto n = std::make_shared<JetNode>();
    n->op_ = Op::constant;
    n->c_ = c;
    return n;
}

JetExpr JetNode::make_prim(const Primitive& p) {
    auto n = std::make_shared<JetNode>();
    n->op_ = Op::prim;
    n->p_ = p;
    n->commuting_ = kind_commutes(p.kind);
    return n;
}

JetExpr JetNode::make_add(std::vector<JetExpr> terms) {
    std::vector<JetExpr> flat;
    GaussianRational c;
    for (auto& t : terms) {
        if (t->op_ == Op::constant) {
            c += t->c_;
        } else if (t->op_ == Op::add) {
            for (const auto& k : t->kids_) {
                if (k->op_ == Op::constant) c += k->c_;
                else flat.push_back(k);
            }
        } else {
            flat.push_back(std::move(t));
        }
    }
    if (!c.is_zero()) flat.push_back(make_const(c));
    if (flat.empty()) return kZero;
    if (flat.size() == 1) return flat[0];
    auto n = std::make_shared<JetNode>();
    n->op_ = Op::add;
    n->commuting_ = std::all_of(flat.begin(), flat.end(), [](const JetExpr& k) { return k->commuting_; });
    n->kids_ = std::move(flat);
    return n;
}

JetExpr JetNode::make_mul(std::vector<JetExpr> factors) {
    std::vector<JetExpr> flat;
    GaussianRational c(1);
    for (auto& f : factors) {
        if (f->op_ == Op::constant) {
            if (f->c_.is_zero()) return kZero;
            c *= f->c_;
        } else if (f->op_ == Op::mul) {
            for (const auto& k : f->kids_) {
                if (k->op_ == Op::constant) c *= k->c_;
                else flat.push_back(k);
            }
        } else {
            flat.push_back(std::move(f));
        }
    }
    if (flat.empty()) return make_const(c);
    if (c != GaussianRational(1)) flat.insert(flat.begin(), make_const(c));
    if (flat.size() == 1) return flat[0];
    auto n = std::make_shared<JetNode>();
    n->op_ = Op::mul;
    n->commuting_ = std::all_of(flat.begin(), flat.end(), [](const JetExpr& k) { return k->commuting_; });
    n->kids_ = std::move(flat);
    return n;
}

JetExpr JetNode::make_pow(JetExpr base, int e) {
    if (e == 0) return kOne;
    if (e == 1) return base;
    if (base->op_ == Op::constant) {
        if (base->c_.is_zero()) {
            if (e < 0) throw arithmetic_error("negative power of zero");
            return kZero;
        }
        GaussianRational v = ipow(base->c_, static_cast<unsigned>(std::abs(e)));
        return make_const(e < 0 ? v.inverse() : v);
    }
    if (e < 0 && !base->commuting_) throw std::logic_error("negative power of a Clifford-valued expression");
    if (base->op_ == Op::pow && base->commuting_) return make_pow(base->kids_[0], base->e_ * e);
    auto n = std::make_shared<JetNode>();
    n->op_ = Op::pow;
    n->e_ = e;
    n->commuting_ = base->commuting_;
    n->kids_.push_back(std::move(base));
    return n;
}

namespace jet {

JetExpr num(const GaussianRational& c) { return JetNode::make_const(c); }

JetExpr prim(PrimKind k, int a, int b, int c, int d) {
    Primitive p{k, {static_cast<std::int8_t>(a), static_cast<std::int8_t>(b), static_cast<std::int8_t>(c),
                    static_cast<std::int8_t>(d)},
                {}};
    return JetNode::make_prim(p);
}

JetExpr norm_xi_sq() { return prim(PrimKind::norm_xi_sq); }

JetExpr xi_lower(int k) { return k == kDim ? prim(PrimKind::xi_n) : prim(PrimKind::xi_prime, k); }

// g^{nl}ξl = ξn exactly, since g^{nn} = 1 and g^{nα} = 0.
JetExpr xi_up(int k) { return k == kDim ? prim(PrimKind::xi_n) : prim(PrimKind::xi_up, k); }

JetExpr metric_inv(int a, int b) {
    if (a == kDim || b == kDim) return num(GaussianRational(a == b ? 1 : 0));
    return prim(PrimKind::metric_inv, std::min(a, b), std::max(a, b));
}

JetExpr c(int k) { return prim(PrimKind::c_e, k); }
JetExpr cbar(int k) { return prim(PrimKind::cbar_e, k); }
JetExpr add(std::vector<JetExpr> t) { return JetNode::make_add(std::move(t)); }
JetExpr mul(std::vector<JetExpr> f) { return JetNode::make_mul(std::move(f)); }
JetExpr pow(JetExpr b, int e) { return JetNode::make_pow(std::move(b), e); }
JetExpr operator+(JetExpr a, JetExpr b) { return add({std::move(a), std::move(b)}); }
JetExpr operator-(JetExpr a, JetExpr b) { return add({std::move(a), mul({num(GaussianRational(-1)), std::move(b)})}); }
JetExpr operator*(JetExpr a, JetExpr b) { return mul({std::move(a), std::move(b)}); }
JetExpr operator*(const GaussianRational& c, JetExpr a) { return mul({num(c), std::move(a)}); }

}  // namespace jet

namespace {

class Differentiator {
public:
    explicit Differentiator(Direction d) : dir_(d) {}

    JetExpr operator()(const JetExpr& e) {
        auto it = memo_.find(e.get());
        if (it != memo_.end()) return it->second;
        JetExpr r = compute(e);
        memo_.emplace(e.get(), r);
        keep_.push_back(e);
        return r;
    }

private:
    JetExpr compute(const JetExpr& e) {
        using Op = JetNode::Op;
        switch (e->op()) {
            case Op::constant: return kZero;
            case Op::prim: return dir_.var == Direction::Var::x ? prim_x(e->prim()) : prim_xi(e->prim());
            case Op::add: {
                std::vector<JetExpr> t;
                for (const auto& k : e->kids()) t.push_back((*this)(k));
                return jet::add(std::move(t));
            }
            case Op::mul: {
                const auto& ks = e->kids();
                std::vector<JetExpr> t;
                for (std::size_t i = 0; i < ks.size(); ++i) {
                    JetExpr dk = (*this)(ks[i]);
                    if (dk->is_zero()) continue;
                    std::vector<JetExpr> f(ks.begin(), ks.end());
                    f[i] = dk;
                    t.push_back(jet::mul(std::move(f)));
                }
                return jet::add(std::move(t));
            }
            case Op::pow: {
                const JetExpr& b = e->kids()[0];
                int p = e->exponent();
                if (b->commuting())
                    return jet::mul({jet::num(GaussianRational(p)), jet::pow(b, p - 1), (*this)(b)});
                return (*this)(jet::mul(std::vector<JetExpr>(static_cast<std::size_t>(p), b)));
            }
        }
        return kZero;
    }

    JetExpr prim_x(const Primitive& p) {
        if (x_independent(p.kind)) return kZero;
        Primitive q = p;
        q.d = p.d.with(dir_.index);
        return JetNode::make_prim(q);
    }

    // ∂ξ commutes with ∂x, so differentiate the underived primitive and re-apply p.d.
    JetExpr prim_xi(const Primitive& p) {
        int j = dir_.index;
        JetExpr base;
        switch (p.kind) {
            case PrimKind::norm_xi_sq: base = jet::mul({jet::num(GaussianRational(2)), jet::xi_up(j)}); break;
            case PrimKind::xi_up: base = jet::metric_inv(p.idx[0], j); break;
            case PrimKind::xi_n: base = jet::num(GaussianRational(j == kDim ? 1 : 0)); break;
            case PrimKind::xi_prime: base = jet::num(GaussianRational(j == p.idx[0] ? 1 : 0)); break;
            case PrimKind::c_xi:
                // c(dxj) is not a frame element away from x0; no table provides it.
                throw missing_table_entry("xi-derivative of " + p.str());
            default: return kZero;
        }
        for (int i = 0; i < p.d.count; ++i) base = jet_derivative(base, Direction::x(p.d.dirs[i]));
        return base;
    }

    Direction dir_;
    std::unordered_map<const JetNode*, JetExpr> memo_;
    std::vector<JetExpr> keep_;
};

}  // namespace

JetExpr jet_derivative(const JetExpr& e, Direction dir, unsigned order) {
    if (dir.index < 1 || dir.index > kDim) throw std::out_of_range("direction index " + std::to_string(dir.index));
    JetExpr r = e;
    for (unsigned k = 0; k < order; ++k) {
        Differentiator d(dir);
        r = d(r);
    }
    return r;
}

}  // namespace wres
