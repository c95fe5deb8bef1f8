#include "wres/symbol_jets.hpp"

namespace wres {

const char* ambiguity_policy_name(AmbiguityPolicy p) {
    return p == AmbiguityPolicy::diagonal ? "diagonal" : "zero";
}

namespace {

using BV = BoundarySymbolValue;

GaussianRational q(long a, long b = 1) { return GaussianRational(make_rational(a, b)); }

BV param(Param p) { return BV::atom(param_atom(p)); }
BV xi(int k) { return k == kDim ? BV(PoleLimitedRational::xi()) : BV::atom(xi_atom(k)); }
BV cl(GenKind g, int k) { return BV::from(clifford_from_generator(g, k)); }
BV rb(int a, int b, int c, int d) { return BV::from(riemann_component(a, b, c, d), AtomKind::rb); }

// Both tangential second derivatives of the metric polarize the |ξ|² row:
// ∂γ∂δ g^{ab} = -(1/3)(R_{γaδb} + R_{γbδa}).
BV metric_second(int g, int d, int a, int b) { return q(-1, 3) * (rb(g, a, d, b) + rb(g, b, d, a)); }

}  // namespace

BV BoundaryEvaluator::table(const Primitive& p) {
    const XDeriv& d = p.d;
    const int order = d.count;
    const int nn = d.normal_count();
    const int k = p.idx[0];
    auto missing = [&]() -> BV { throw missing_table_entry("no table entry for " + p.str()); };
    auto ambiguous = [&](const BV& diag) -> BV {
        ambiguous_hits_.insert(p.str());
        return policy_ == AmbiguityPolicy::diagonal ? diag : BV();
    };
    // Values that depend on x only through h (δ-type metric data): v, h'·v, h''·v, 0 for mixed.
    auto h_scaled = [&](const BV& v, const BV& tangential) -> BV {
        if (order == 0) return v;
        if (order == 1) return nn == 1 ? param(Param::H1) * v : BV();
        if (order == 2) {
            if (nn == 2) return param(Param::H2) * v;
            if (nn == 1) return BV();
            return tangential;
        }
        return missing();
    };

    switch (p.kind) {
        case PrimKind::xi_n:
        case PrimKind::xi_prime:
        case PrimKind::c_e:
        case PrimKind::cbar_e: {
            if (order > 0) return BV();
            if (p.kind == PrimKind::xi_n) return xi(kDim);
            if (p.kind == PrimKind::xi_prime) return xi(k);
            return cl(p.kind == PrimKind::c_e ? GenKind::c : GenKind::cbar, k);
        }
        case PrimKind::norm_xi_sq: {
            BV tang;
            if (order == 2 && nn == 0) {
                for (int a = 1; a < kDim; ++a)
                    for (int b = 1; b < kDim; ++b) tang += metric_second(d.dirs[0], d.dirs[1], a, b) * xi(a) * xi(b);
            }
            if (order == 0) return BV(PoleLimitedRational::one_plus_xi_sq_pow(1));
            return h_scaled(BV(GaussianRational(1)), tang);
        }
        case PrimKind::xi_up: {
            BV tang;
            if (order == 2 && nn == 0)
                for (int b = 1; b < kDim; ++b) tang += metric_second(d.dirs[0], d.dirs[1], k, b) * xi(b);
            return h_scaled(xi(k), tang);
        }
        case PrimKind::metric_inv: {
            int b = p.idx[1];
            BV tang = (order == 2 && nn == 0) ? metric_second(d.dirs[0], d.dirs[1], k, b) : BV();
            return h_scaled(BV(GaussianRational(k == b ? 1 : 0)), tang);
        }
        case PrimKind::c_xi: {
            if (order == 0) {
                BV v = xi(kDim) * cl(GenKind::c, kDim);
                for (int j = 1; j < kDim; ++j) v += xi(j) * cl(GenKind::c, j);
                return v;
            }
            if (order == 1) return nn == 0 ? BV() : missing();
            if (order == 2 && nn == 1) return BV();
            if (order == 2 && nn == 2) {
                BV s;
                for (int j = 1; j < kDim; ++j) s += xi(j) * cl(GenKind::c, j);
                return (q(3, 4) * param(Param::H1) * param(Param::H1) - q(1, 2) * param(Param::H2)) * s;
            }
            return missing();
        }
        case PrimKind::gamma_up: {
            if (order == 0) return k == kDim ? q(3) * param(Param::H1) : BV();
            if (order == 1) {
                int g = d.dirs[0];
                if (g < kDim && k < kDim) {
                    BV s;
                    for (int i = 1; i < kDim; ++i) s += rb(i, g, i, k);
                    return q(5, 6) * s;
                }
                if (g == kDim && k == kDim)
                    return q(3) * param(Param::H2) - q(9, 2) * param(Param::H1) * param(Param::H1);
                return BV();
            }
            return missing();
        }
        case PrimKind::sigma_up:
        case PrimKind::a_up: {
            const bool is_a = p.kind == PrimKind::a_up;
            const GenKind g = is_a ? GenKind::cbar : GenKind::c;
            const GaussianRational sign = is_a ? q(1) : q(-1);
            if (order == 0) return k < kDim ? sign * q(1, 4) * param(Param::H1) * cl(g, k) * cl(g, kDim) : BV();
            if (order == 1) {
                int gam = d.dirs[0];
                if (gam < kDim && k < kDim) {
                    BV s;
                    for (int a = 1; a < kDim; ++a)
                        for (int b = 1; b < kDim; ++b)
                            if (a != b) s += rb(k, gam, a, b) * cl(g, a) * cl(g, b);
                    return sign * q(1, 8) * s;
                }
                if (gam < kDim) return BV();
                if (k < kDim) {
                    BV s;
                    for (int t = 1; t < kDim; ++t) s += cl(g, kDim) * cl(g, t);
                    BV coef = q(3, 8) * param(Param::H1) * param(Param::H1) - q(1, 4) * param(Param::H2);
                    return sign * coef * s;
                }
                // Unbound s in the row; the diagonal reading sets s = t.
                BV s;
                for (int t = 1; t < kDim; ++t) s += cl(g, t) * cl(g, t);
                BV coef = param(Param::H1) * param(Param::H1) - param(Param::H2);
                return ambiguous(sign * q(1, 8) * coef * s);
            }
            return missing();
        }
        case PrimKind::scalar_curv:
            return order == 0 ? param(Param::SM) : missing();
        case PrimKind::boundary_scalar_curv:
            return order == 0 ? param(Param::SB) : missing();
        case PrimKind::witten_potential:
            return order == 0 ? param(Param::TV) : missing();
        case PrimKind::witten_gradient: {
            if (order > 0) return missing();
            BV s;
            for (int i = 1; i <= kDim; ++i)
                for (int j = 1; j <= kDim; ++j)
                    s += BV::atom(make_atom(AtomKind::grad_v, i, j)) * cl(GenKind::c, i) * cl(GenKind::cbar, j);
            return s;
        }
        case PrimKind::curvature_atom:
            if (order > 0) return missing();
            return BV::from(riemann_component(p.idx[0], p.idx[1], p.idx[2], p.idx[3]), AtomKind::rm);
    }
    return missing();
}

BV BoundaryEvaluator::evaluate(const JetExpr& e) {
    auto it = memo_.find(e.get());
    if (it != memo_.end()) return it->second;
    BV v;
    switch (e->op()) {
        case JetNode::Op::constant: v = BV(e->constant()); break;
        case JetNode::Op::prim: v = table(e->prim()); break;
        case JetNode::Op::add:
            for (const auto& k : e->kids()) v += evaluate(k);
            break;
        case JetNode::Op::mul: {
            v = BV(GaussianRational(1));
            for (const auto& k : e->kids()) {
                BV f = evaluate(k);
                if (f.is_zero()) {
                    v = BV();
                    break;
                }
                v = v * f;
            }
            break;
        }
        case JetNode::Op::pow: {
            BV b = evaluate(e->kids()[0]);
            int p = e->exponent();
            if (p < 0) b = b.inverse();
            v = BV(GaussianRational(1));
            for (int i = 0; i < std::abs(p); ++i) v = v * b;
            break;
        }
    }
    memo_.emplace(e.get(), v);
    keep_alive_.push_back(e);
    return v;
}

std::vector<BoundarySymbolTerm> evaluate_at_boundary(const JetExpr& e, AmbiguityPolicy policy) {
    BoundaryEvaluator ev(policy);
    return ev.evaluate(e).term_list();
}

}  // namespace wres
