#include "wres/pipeline.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace wres {

namespace {

Rational factorial(unsigned n) {
    Rational f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

// Nondecreasing direction lists of length `len` over 1..dim.
void expand_alphas(int dim, unsigned len, int start, std::vector<int>& cur, std::vector<MultiIndex>& out) {
    if (cur.size() == len) {
        MultiIndex m;
        m.dirs = cur;
        Rational af = 1;
        for (std::size_t a = 0; a < cur.size();) {
            std::size_t b = a;
            while (b < cur.size() && cur[b] == cur[a]) ++b;
            af *= factorial(static_cast<unsigned>(b - a));
            a = b;
        }
        m.inv_factorial = 1 / af;
        out.push_back(std::move(m));
        return;
    }
    for (int d = start; d <= dim; ++d) {
        cur.push_back(d);
        expand_alphas(dim, len, d, cur, out);
        cur.pop_back();
    }
}

struct Shape {
    int r, l;
    unsigned k, j, alpha;
};

// Shapes (r, ℓ, k, j, |α|) in the literature's order for (7, 2, 2).
constexpr Shape kLiteratureShapes[] = {
    {-2, -2, 0, 1, 1}, {-2, -2, 0, 2, 0}, {-2, -2, 0, 0, 2}, {-2, -2, 1, 1, 0}, {-2, -2, 1, 0, 1},
    {-2, -2, 2, 0, 0}, {-2, -3, 0, 1, 0}, {-2, -3, 0, 0, 1}, {-2, -3, 1, 0, 0}, {-3, -2, 0, 1, 0},
    {-3, -2, 0, 0, 1}, {-3, -2, 1, 0, 0}, {-3, -3, 0, 0, 0}, {-2, -4, 0, 0, 0}, {-4, -2, 0, 0, 0},
};

struct LeftRight {
    JetExpr left;
    JetExpr right;
};

LeftRight integrand_factors(const CaseSpec& s, const MultiIndex& a) {
    JetExpr left = symbol_of_order(s.r);
    if (s.j) left = jet_derivative(left, Direction::x(kDim), s.j);
    for (int d : a.dirs) left = jet_derivative(left, Direction::xi(d));
    if (s.k) left = jet_derivative(left, Direction::xi(kDim), s.k);

    JetExpr right = symbol_of_order(s.l);
    for (int d : a.dirs) right = jet_derivative(right, Direction::x(d));
    right = jet_derivative(right, Direction::xi(kDim), s.j + 1);
    if (s.k) right = jet_derivative(right, Direction::x(kDim), s.k);
    return {left, right};
}

// Splits a trace monomial into its ξ' exponents and the remaining atoms.
std::pair<SphereMonomial, Monomial> split_xi(const Monomial& m) {
    std::vector<unsigned> e(kBoundaryDim, 0);
    Monomial rest;
    for (const auto& [a, p] : m.factors()) {
        if (atom_kind(a) == AtomKind::xi) {
            e[atom_indices(a)[0] - 1] = p;
        } else {
            rest = rest * Monomial::of(a, p);
        }
    }
    return {SphereMonomial(std::move(e)), rest};
}

// Integrated monomials (ξ' included) → coefficient of πΩ5, curvature reduced.
ParameterPolynomial reduce_integrated(const std::map<Monomial, GaussianRational>& parts) {
    ParameterPolynomial out;
    std::map<ParamExponents, RiemannLinear> curv;
    for (const auto& [m, c] : parts) {
        if (c.is_zero()) continue;
        ParamExponents pe{};
        std::optional<RiemannKey> rb;
        for (const auto& [a, p] : m.factors()) {
            switch (atom_kind(a)) {
                case AtomKind::param: pe[atom_indices(a)[0]] = p; break;
                case AtomKind::rb: {
                    if (rb || p != 1) throw curvature_reduction_error("nonlinear boundary curvature in " + m.str());
                    auto ix = atom_indices(a);
                    rb = RiemannKey{ix[0], ix[1], ix[2], ix[3]};
                    break;
                }
                case AtomKind::xi:
                    throw std::logic_error("unintegrated ξ' atom in " + m.str());
                default:
                    throw curvature_reduction_error("unresolved atom " + atom_name(a) + " survives integration");
            }
        }
        if (rb) {
            curv[pe][*rb] += c;
        } else {
            out.add_term(pe, c);
        }
    }
    for (const auto& [pe, lin] : curv) {
        RiemannLinear clean;
        for (const auto& [k, c] : lin)
            if (!c.is_zero()) clean[k] = c;
        if (clean.empty()) continue;
        out += reduce_to_scalar_curvature(clean) * ParameterPolynomial::monomial(pe, GaussianRational(1));
    }
    return out;
}

ParameterPolynomial sphere_integrate(const TracedIntegral& t, const GaussianRational& weight) {
    std::map<Monomial, GaussianRational> parts;
    for (const auto& [m, c] : t) {
        auto [sm, rest] = split_xi(m);
        Rational mom = sphere_moment(sm);
        if (sgn(mom) == 0) continue;
        parts[rest] += weight * c * GaussianRational(mom);
    }
    return reduce_integrated(parts);
}

ParameterPolynomial to_parameter_polynomial(const BoundarySymbolValue& v) {
    ParameterPolynomial out;
    for (const auto& [key, f] : v.terms()) {
        if (!key.word.is_identity() || !f.is_constant())
            throw std::logic_error("expected a scalar constant, got " + v.str());
        ParamExponents pe{};
        for (const auto& [a, p] : key.mono.factors()) {
            if (atom_kind(a) != AtomKind::param) throw std::logic_error("expected parameters only, got " + v.str());
            pe[atom_indices(a)[0]] = p;
        }
        out.add_term(pe, f.numerator().coeff(0));
    }
    return out;
}

ParameterPolynomial H(Param p, unsigned e = 1) { return ParameterPolynomial::var(p, e); }
GaussianRational q(long a, long b = 1, long c = 0, long d = 1) {
    return GaussianRational(make_rational(a, b), make_rational(c, d));
}

}  // namespace

std::string MultiIndex::label() const {
    if (dirs.empty()) return "()";
    std::string s = "(";
    for (std::size_t i = 0; i < dirs.size(); ++i) s += (i ? "," : "") + std::to_string(dirs[i]);
    return s + ")";
}

GaussianRational CaseSpec::prefactor() const {
    return ipow(-GaussianRational::i(), alpha + j + k + 1) / GaussianRational(factorial(j + k + 1));
}

std::vector<MultiIndex> CaseSpec::alphas(int boundary_dim) const {
    std::vector<MultiIndex> out;
    std::vector<int> cur;
    expand_alphas(boundary_dim, alpha, 1, cur, out);
    return out;
}

std::string CaseSpec::str() const {
    std::ostringstream os;
    os << "case " << case_id << ": r=" << r << " l=" << l << " k=" << k << " j=" << j << " |alpha|=" << alpha;
    return os.str();
}

std::vector<CaseSpec> enumerate_cases(int n, int p1, int p2) {
    std::vector<CaseSpec> out;
    // -r - l + 1 + k + j + |α| = n with -r ≥ p1, -l ≥ p2 bounds every variable by n - 1.
    for (int mr = p1; mr <= n; ++mr)
        for (int ml = p2; mr + ml + 1 <= n; ++ml) {
            int rest = n - mr - ml - 1;
            for (int k = 0; k <= rest; ++k)
                for (int j = 0; k + j <= rest; ++j) {
                    CaseSpec s;
                    s.r = -mr;
                    s.l = -ml;
                    s.k = static_cast<unsigned>(k);
                    s.j = static_cast<unsigned>(j);
                    s.alpha = static_cast<unsigned>(rest - k - j);
                    out.push_back(s);
                }
        }
    if (n == 7 && p1 == 2 && p2 == 2) {
        std::vector<CaseSpec> ordered;
        int id = 0;
        for (const Shape& sh : kLiteratureShapes) {
            ++id;
            auto it = std::find_if(out.begin(), out.end(), [&](const CaseSpec& s) {
                return s.r == sh.r && s.l == sh.l && s.k == sh.k && s.j == sh.j && s.alpha == sh.alpha;
            });
            if (it == out.end()) throw std::logic_error("literature shape missing from enumeration");
            CaseSpec s = *it;
            s.case_id = id;
            ordered.push_back(s);
        }
        if (ordered.size() != out.size()) throw std::logic_error("enumeration has shapes beyond the fifteen");
        return ordered;
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i].case_id = static_cast<int>(i + 1);
    return out;
}

JetExpr symbol_of_order(int r) {
    static const JetExpr s2 = build_sigma_minus2();
    static const JetExpr s3 = build_sigma_minus3();
    static const JetExpr s4 = build_sigma_minus4_DT();
    switch (r) {
        case -2: return s2;
        case -3: return s3;
        case -4: return s4;
        default: throw missing_table_entry("no symbol of order " + std::to_string(r));
    }
}

TracedIntegral traced_integral(const BoundarySymbolValue& a, const BoundarySymbolValue& b) {
    TracedIntegral out;
    for (const auto& [m, f] : (a * b).trace()) {
        GaussianRational v = integrate_real_line(f);
        if (!v.is_zero()) out[m] = v;
    }
    return out;
}

TracedIntegral subtract(const TracedIntegral& a, const TracedIntegral& b) {
    TracedIntegral out = a;
    for (const auto& [m, c] : b) {
        out[m] -= c;
        if (out[m].is_zero()) out.erase(m);
    }
    return out;
}

SwapSplit pi_plus_swap(const BoundarySymbolValue& a, const BoundarySymbolValue& b) {
    BoundarySymbolValue pa = a.pi_plus();
    BoundarySymbolValue pb = b.pi_plus();
    BoundarySymbolValue ma = a - pa;  // π⁻a; π⁺ throws unless a decays
    BoundarySymbolValue mb = b - pb;
    SwapSplit s;
    s.direct = traced_integral(pa, b);
    s.full = traced_integral(a, b);
    s.cross = traced_integral(a, pb);
    s.plus_plus = traced_integral(pa, pb);
    s.minus_minus = traced_integral(ma, mb);
    return s;
}

ParameterPolynomial value_from_ledger(const std::vector<LedgerEntry>& ledger) {
    std::map<Monomial, GaussianRational> parts;
    for (const LedgerEntry& e : ledger) {
        auto rest = split_xi(e.monomial).second;
        parts[rest] += e.weight * e.line_integral * GaussianRational(e.moment);
    }
    return reduce_integrated(parts);
}

namespace {

CaseResult compute_case_once(const CaseSpec& spec, AmbiguityPolicy policy, bool& touched) {
    CaseResult res;
    res.spec = spec;
    BoundaryEvaluator ev(policy);
    const GaussianRational pre = spec.prefactor();
    for (const MultiIndex& a : spec.alphas()) {
        auto [left, right] = integrand_factors(spec, a);
        BoundarySymbolValue lv = ev.evaluate(left).pi_plus();
        BoundarySymbolValue rv = ev.evaluate(right);
        for (const auto& [m, f] : (lv * rv).trace()) {
            auto [sm, rest] = split_xi(m);
            LedgerEntry e;
            e.alpha = a.label();
            e.monomial = m;
            e.integrand = f;
            e.weight = pre * GaussianRational(a.inv_factorial);
            e.line_integral = integrate_real_line(f);
            e.moment = sphere_moment(sm);
            res.ledger.push_back(std::move(e));
        }
    }
    touched = ev.touched_ambiguous();
    res.value = value_from_ledger(res.ledger);
    return res;
}

}  // namespace

CaseResult compute_case(const CaseSpec& spec, AmbiguityPolicy policy) {
    try {
        bool touched = false;
        CaseResult res = compute_case_once(spec, policy, touched);
        res.ambiguous = touched;
        if (touched) {
            AmbiguityPolicy other = policy == AmbiguityPolicy::diagonal ? AmbiguityPolicy::zero : AmbiguityPolicy::diagonal;
            bool t2 = false;
            res.alternative_value = compute_case_once(spec, other, t2).value;
        }
        return res;
    } catch (const case_error&) {
        throw;
    } catch (const std::exception& ex) {
        throw case_error(spec.case_id, ex.what());
    }
}

std::vector<CaseResult> compute_all_cases(AmbiguityPolicy policy) {
    std::vector<std::future<CaseResult>> jobs;
    for (const CaseSpec& s : enumerate_cases(kDim, 2, 2))
        jobs.push_back(std::async(std::launch::async, [s, policy] { return compute_case(s, policy); }));
    std::vector<CaseResult> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

SplitParts compute_case_split_parts(const CaseSpec& spec, AmbiguityPolicy policy) {
    try {
        BoundaryEvaluator ev(policy);
        const GaussianRational pre = spec.prefactor();
        SplitParts out;
        for (const MultiIndex& a : spec.alphas()) {
            auto [left, right] = integrand_factors(spec, a);
            BoundarySymbolValue lv = ev.evaluate(left);
            BoundarySymbolValue rv = ev.evaluate(right);
            GaussianRational w = pre * GaussianRational(a.inv_factorial);
            out.full += sphere_integrate(traced_integral(lv, rv), w);
            out.cross += sphere_integrate(traced_integral(lv, rv.pi_plus()), w);
        }
        return out;
    } catch (const std::exception& ex) {
        throw case_error(spec.case_id, ex.what());
    }
}

ParameterPolynomial compute_case_swapped(const CaseSpec& spec, AmbiguityPolicy policy) {
    SplitParts p = compute_case_split_parts(spec, policy);
    return p.full - p.cross;
}

ParameterPolynomial assemble_phi(const std::vector<CaseResult>& cases) {
    ParameterPolynomial phi;
    for (const CaseResult& c : cases) phi += c.value;
    return phi;
}

std::map<int, ParameterPolynomial> paper_case_values() {
    using P = Param;
    std::map<int, ParameterPolynomial> t;
    t[1] = ParameterPolynomial();
    t[2] = q(7, 8) * H(P::H1, 2) + q(-3, 8) * H(P::H2);
    t[3] = q(1, 6) * H(P::SB) + q(11, 128) * H(P::H1, 2);
    t[4] = q(-5, 8) * H(P::H1, 2);
    t[5] = ParameterPolynomial();
    t[6] = q(-3, 8) * H(P::H2) + q(7, 8) * H(P::H1, 2);
    t[7] = q(21, 8) * H(P::H1, 2);
    t[8] = q(5, 16) * H(P::SB);
    t[9] = q(9, 16) * H(P::H2) + q(-45, 16) * H(P::H1, 2);
    t[10] = q(9, 16, -45, 32) * H(P::H2) + q(-45, 16, 45, 32) * H(P::H1, 2);
    t[11] = ParameterPolynomial();
    t[12] = q(21, 8) * H(P::H1, 2);
    t[13] = q(-5, 32) * H(P::H1, 2) + q(-57, 8) * H(P::H1, 2);
    auto edge = [&](long im_sign) {
        return q(-1, 4) * H(P::SM) + q(-45, 4, -5, 8) * H(P::H1) + q(-23, 12, -3 * im_sign, 2) * H(P::H1, 2) +
               q(235, 64) * H(P::H2) + q(47, 96) * H(P::SB) - H(P::TV);
    };
    t[14] = edge(1);
    t[15] = edge(-1);
    return t;
}

ParameterPolynomial paper_phi() {
    using P = Param;
    return q(-1, 2) * H(P::SM) + q(35, 24) * H(P::SB) + q(-2) * H(P::TV) + q(-45, 2, -5, 4) * H(P::H1) +
           q(-3947, 384, 45, 32) * H(P::H1, 2) + q(247, 32, -45, 32) * H(P::H2);
}

TheoremReport theorem_wres(const ParameterPolynomial& phi) {
    TheoremReport t;
    t.boundary = phi;
    t.paper = paper_phi();
    t.imaginary_part = phi.imag_part();
    t.undeformed = phi.without(Param::TV);
    t.matches_paper = phi == t.paper;
    return t;
}

GravitationalAction gravitational_action(const ParameterPolynomial& phi) {
    GravitationalAction g;
    // K = Σ K_ij g^{ij}, K_ij = -Γ^n_ij = ½∂n g_ij = -½∂n g^{ij} at x0 (g^{ij} = δ there).
    BoundaryEvaluator ev;
    BoundarySymbolValue dg;
    for (int a = 1; a < kDim; ++a) dg += ev.evaluate(jet_derivative(jet::metric_inv(a, a), Direction::x(kDim)));
    g.k_engine = to_parameter_polynomial(dg) * q(-1, 2);
    g.k_paper = q(-5, 2) * H(Param::H1);
    g.i_gr_b_engine = g.k_engine * GaussianRational(2);
    g.i_gr_b_paper = q(-5) * H(Param::H1);
    g.q0_engine = phi;
    g.q0_paper = paper_phi();
    auto corollary = [](const ParameterPolynomial& i, const ParameterPolynomial& q0) {
        return "I_Gr,b = (" + i.str() + ") / ((" + q0.str() + ") * pi * Omega5) * Wres_b";
    };
    g.corollary_engine = corollary(g.i_gr_b_engine, g.q0_engine);
    g.corollary_paper = corollary(g.i_gr_b_paper, g.q0_paper);
    return g;
}

}  // namespace wres
