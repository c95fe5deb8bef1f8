#pragma once

// Literature values of the boundary intermediates, paired with the engine computation.
// Shared by the unit tests and the acceptance gate.

#include "wres/clifford.hpp"
#include "wres/curvature.hpp"
#include "wres/pipeline.hpp"
#include "wres/ratfunc.hpp"
#include "wres/sphere_moments.hpp"
#include "wres/symbol_jets.hpp"

#include <functional>
#include <string>
#include <vector>

namespace wres::testing {

inline BoundarySymbolValue ev(const JetExpr& e) { return BoundaryEvaluator().evaluate(e); }
inline JetExpr D(const JetExpr& e, Direction d, unsigned k = 1) { return jet_derivative(e, d, k); }
inline Direction xn() { return Direction::x(kDim); }
inline Direction xin() { return Direction::xi(kDim); }

// Equality modulo Σ ξk² = 1.
inline bool same_on_sphere(const BoundarySymbolValue& a, const BoundarySymbolValue& b) {
    return a.sphere_reduced() == b.sphere_reduced();
}

struct Check {
    std::string label;
    bool exact = false;
};

inline Check value_check(std::string label, const BoundarySymbolValue& engine, const std::string& literature) {
    return {std::move(label), same_on_sphere(engine, parse_fixture(literature))};
}

struct Intermediate {
    std::string name;
    std::function<std::vector<Check>()> run;
};

// Σ_{i,j,α,β} (R_{iαjβ} + R_{iβjα}) ξα ξβ
inline const char* kCurvatureQuadratic =
    "sum(i=1..6, sum(j=1..6, sum(a=1..6, sum(b=1..6, (R(i,a,j,b) + R(i,b,j,a)) xi(a) xi(b)))))";

inline std::vector<Intermediate> boundary_intermediates() {
    const JetExpr s2 = symbol_of_order(-2);
    const JetExpr s3 = symbol_of_order(-3);
    std::vector<Intermediate> v;
    auto one = [&](std::string name, std::function<BoundarySymbolValue()> engine, std::string lit) {
        v.push_back({name, [name, engine, lit] { return std::vector<Check>{value_check(name, engine(), lit)}; }});
    };

    one("d_xin^3 sigma-2", [=] { return ev(D(s2, xin(), 3)); }, "(24 xin - 24 xin^3)/(1+xin^2)^4");
    one("d_xn^2 sigma-2", [=] { return ev(D(s2, xn(), 2)); }, "2 h1^2/(1+xin^2)^3 - h2/(1+xin^2)^2");
    one("d_xn^2 pi+ sigma-2", [=] { return ev(D(s2, xn(), 2)).pi_plus(); },
        "(-3 i xin^2 - 9 xin + 8 i)/(8 (xin - i)^3) h1^2 + (2 + i xin)/(4 (xin - i)^2) h2");
    v.push_back({"d_xi_i d_xi_j sigma-2, all i,j < n", [=] {
                     std::vector<Check> out;
                     for (int i = 1; i < kDim; ++i)
                         for (int j = 1; j < kDim; ++j) {
                             std::string lit = "8 xi(" + std::to_string(i) + ") xi(" + std::to_string(j) +
                                               ")/(1+xin^2)^3" + (i == j ? " - 2/(1+xin^2)^2" : "");
                             out.push_back(value_check("(" + std::to_string(i) + "," + std::to_string(j) + ")",
                                                       ev(D(D(s2, Direction::xi(i)), Direction::xi(j))), lit));
                         }
                     return out;
                 }});
    v.push_back({"pi+ d_xi_i d_xi_j sigma-2, all i,j < n", [=] {
                     std::vector<Check> out;
                     for (int i = 1; i < kDim; ++i)
                         for (int j = 1; j < kDim; ++j) {
                             std::string lit = "(-3 i xin^2 - 9 xin + 8 i)/(2 (xin - i)^3) xi(" + std::to_string(i) +
                                               ") xi(" + std::to_string(j) + ")" +
                                               (i == j ? " + (2 + i xin)/(2 (xin - i)^2)" : "");
                             out.push_back(value_check(
                                 "(" + std::to_string(i) + "," + std::to_string(j) + ")",
                                 ev(D(D(s2, Direction::xi(i)), Direction::xi(j))).pi_plus(), lit));
                         }
                     return out;
                 }});
    auto tangential_pair_sum = [=](unsigned xin_order) {
        BoundarySymbolValue acc;
        for (int i = 1; i < kDim; ++i)
            for (int j = 1; j < kDim; ++j) {
                JetExpr e = D(D(s2, Direction::x(i)), Direction::x(j));
                if (xin_order) e = D(e, xin(), xin_order);
                acc += ev(e);
            }
        return acc;
    };
    one("sum_{i,j<n} d_xi d_xj sigma-2", [=] { return tangential_pair_sum(0); },
        std::string("1/(3 (1+xin^2)^2) ") + kCurvatureQuadratic + " + 2 h1^2/(1+xin^2)^3");
    one("sum_{i,j<n} d_xi d_xj d_xin sigma-2", [=] { return tangential_pair_sum(1); },
        std::string("-4 xin/(3 (1+xin^2)^3) ") + kCurvatureQuadratic + " - 12 xin h1^2/(1+xin^2)^4");
    one("d_xn d_xin pi+ sigma-2", [=] { return ev(D(D(s2, xin()), xn())).pi_plus(); },
        "h1 (-3 - i xin)/(4 (xin - i)^3)");
    one("d_xin^2 d_xn sigma-2", [=] { return ev(D(D(s2, xn()), xin(), 2)); }, "h1 (4 - 20 xin^2)/(1+xin^2)^4");
    v.push_back({"d_x' d_xn sigma-2 = 0", [=] {
                     std::vector<Check> out;
                     for (int i = 1; i < kDim; ++i)
                         out.push_back(value_check("x" + std::to_string(i), ev(D(D(s2, Direction::x(i)), xn())), "0"));
                     return out;
                 }});
    one("d_xin^2 pi+ sigma-2", [=] { return ev(D(s2, xin(), 2)).pi_plus(); }, "-i/(xin - i)^3");
    one("d_xin d_xn^2 sigma-2", [=] { return ev(D(D(s2, xn(), 2), xin())); },
        "4 xin h2/(1+xin^2)^3 - 12 xin h1^2/(1+xin^2)^4");
    one("pi+ d_xn sigma-2", [=] { return ev(D(s2, xn())).pi_plus(); }, "h1 (2 + i xin)/(4 (xin - i)^2)");
    one("d_xin^2 pi+ d_xn sigma-2", [=] { return ev(D(s2, xn())).pi_plus().d_xi_n(2); },
        "h1 (4 + i xin)/(2 (xin - i)^4)");
    v.push_back({"by-parts form of the |alpha|=1, r=-2, l=-3 integrand", [=] {
                     // -∫tr[∂α π⁺σ₋₂ · ∂x'∂ξn σ₋₃] = ∫tr[∂ξn ∂α π⁺σ₋₂ · ∂x'σ₋₃], summed over α
                     TracedIntegral lhs, rhs;
                     for (int k = 1; k < kDim; ++k) {
                         BoundarySymbolValue a = ev(D(s2, Direction::xi(k))).pi_plus();
                         for (auto& [m, c] : traced_integral(a, ev(D(D(s3, Direction::x(k)), xin())))) lhs[m] -= c;
                         for (auto& [m, c] : traced_integral(a.d_xi_n(), ev(D(s3, Direction::x(k))))) rhs[m] += c;
                     }
                     return std::vector<Check>{{"sum over alpha", subtract(lhs, rhs).empty()}};
                 }});
    v.push_back({"d_xi_k sigma-2, all k < n", [=] {
                     std::vector<Check> out;
                     for (int k = 1; k < kDim; ++k)
                         out.push_back(value_check("k=" + std::to_string(k), ev(D(s2, Direction::xi(k))),
                                                   "-2 xi(" + std::to_string(k) + ")/(1+xin^2)^2"));
                     return out;
                 }});
    v.push_back({"d_xin d_xi_k pi+ sigma-2, all k < n", [=] {
                     std::vector<Check> out;
                     for (int k = 1; k < kDim; ++k)
                         out.push_back(value_check("k=" + std::to_string(k),
                                                   ev(D(s2, Direction::xi(k))).pi_plus().d_xi_n(),
                                                   "(-3 - i xin) xi(" + std::to_string(k) + ")/(2 (xin - i)^3)"));
                     return out;
                 }});
    one("d_xin^2 sigma-2", [=] { return ev(D(s2, xin(), 2)); }, "(6 xin^2 - 2)/(1+xin^2)^3");
    one("d_xin sigma-2", [=] { return ev(D(s2, xin())); }, "-2 xin/(1+xin^2)^2");
    one("pi+ of (-5i xin - 3i xin^3)/(1+xin^2)^3",
        [] { return parse_fixture("(-5 i xin - 3 i xin^3)/(1+xin^2)^3").pi_plus(); },
        "(9 i - 7 xin)/(8 (xin - i)^3)");

    // Trace identities over the spinor bundle.
    auto trace_check = [](std::string label, const std::string& expr, const std::string& lit) {
        return Check{std::move(label), parse_fixture(expr).sphere_reduced().trace() ==
                                           parse_fixture(lit).sphere_reduced().trace()};
    };
    v.push_back({"trace identities", [=] {
                     return std::vector<Check>{
                         trace_check("sum_{s!=t} tr cb_s cb_t = 0",
                                     "sum(s=1..6, sum(t=1..6, cb(s) cb(t))) - sum(t=1..6, cb(t) cb(t))", "0"),
                         trace_check("sum_t tr cb_t cb_t = 48", "sum(t=1..6, cb(t) cb(t))", "6"),
                         trace_check("tr cb_n cb_k = 0", "sum(k=1..6, cb(n) cb(k))", "0"),
                         trace_check("sum xi_l xi_k tr[cb_n cb_k cb_n cb_l] = -8 sum xi_k^2",
                                     "sum(k=1..6, sum(l=1..6, xi(l) xi(k) cb(n) cb(k) cb(n) cb(l)))",
                                     "-sum(k=1..6, xi(k)^2)"),
                         trace_check("sum tr[cb_n cb_k c_n c_l] = 0",
                                     "sum(k=1..6, sum(l=1..6, cb(n) cb(k) c(n) c(l)))", "0"),
                         Check{"tr id = 8", clifford_trace(CliffordElement::identity()) == GaussianRational(8)},
                     };
                 }});
    v.push_back({"sphere rules", [] {
                     std::vector<Check> out;
                     bool second = true;
                     for (int m = 0; m < kBoundaryDim; ++m)
                         for (int n = 0; n < kBoundaryDim; ++n) {
                             std::vector<unsigned> e(kBoundaryDim, 0);
                             ++e[m];
                             ++e[n];
                             second &= sphere_moment(SphereMonomial(e)) == (m == n ? make_rational(1, 6) : 0);
                         }
                     out.push_back({"second moment = delta/6", second});
                     // Σ R_{iαjβ} ∫ ξα ξβ ξi ξj over all pairings vanishes by antisymmetry.
                     // slots (i, α, j, β) = labels (1, 2, 3, 4), paired as ξα ξβ ξi ξj
                     std::vector<WeightedCurvature> terms{{GaussianRational(1), CurvatureTerm{{1, 2, 3, 4}, 1}}};
                     out.push_back({"R_{i a j b} against the fourth moment = 0",
                                    contract_with_moment(terms, pairing_tensor({2, 4, 1, 3})).is_zero()});
                     bool odd = true;
                     for (unsigned a = 0; a < 4; ++a)
                         for (unsigned b = 0; b < 4; ++b)
                             if ((a + b) % 2) odd &= sgn(sphere_moment(SphereMonomial({a, b, 1, 0, 2, 0}))) == 0 &&
                                                     sgn(sphere_moment(SphereMonomial({a, b, 0, 0, 0, 0}))) == 0;
                     out.push_back({"odd moments vanish", odd});
                     return out;
                 }});
    v.push_back({"residue of (-20i xin + 88i xin^3 + 60i xin^5)/(1+xin^2)^7", [] {
                     auto f = parse_fixture("(-20 i xin + 88 i xin^3 + 60 i xin^5)/(1+xin^2)^7");
                     bool zero = true;
                     for (const auto& t : f.term_list()) zero &= integrate_real_line(t.xi_n_part).is_zero();
                     return std::vector<Check>{{"integral = 0", zero}};
                 }});
    return v;
}

}  // namespace wres::testing
