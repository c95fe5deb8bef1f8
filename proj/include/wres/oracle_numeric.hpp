#pragma once

#include "wres/pipeline.hpp"
#include "wres/ratfunc.hpp"
#include "wres/sphere_moments.hpp"

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace wres {

// Adaptive Gauss–Kronrod on [-L, L]; the tails |ξ| > L are mapped by u = 1/ξ onto [0, 1/L].
struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    double split_radius = 2.0;  // L
    unsigned max_depth = 20;    // bisection levels per interval
};

struct QuadratureResult {
    std::complex<double> value;  // ∫_R f dξn (not divided by π)
    double error_bound = 0;
};

struct quadrature_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

QuadratureResult numeric_line_integral(const PoleLimitedRational& f, const QuadratureConfig& cfg = {});

// ∫_{S^5} ξ^a via 2·ΠΓ(ai+½)/Γ(3+Σai) with ai = ei/2; exactly 0 for odd exponents.
double numeric_sphere_moment(const SphereMonomial& m);

// Random algebraic curvature tensor on R^6 (sum of Kulkarni–Nomizu squares of random
// symmetric matrices), rescaled so that Σ_{t,l} R_{tltl} equals `scalar`.
class CurvatureSample {
public:
    CurvatureSample(double scalar, std::uint64_t seed);
    double operator()(int a, int b, int c, int d) const;  // indices 1..6

private:
    std::vector<double> r_;
};

struct NumericCheck {
    int case_id = 0;
    std::complex<double> exact;    // substitute_numeric of the exact value
    std::complex<double> numeric;  // ledger re-evaluated with quadrature and Gamma moments
    double rel_error = 0;
    bool agree = false;
};

// Relative tolerance 1e-9 with an absolute floor of the same size.
NumericCheck numeric_case_check(const CaseResult& result, const ParamAssignment& assignment,
                                std::uint64_t seed = 1, const QuadratureConfig& cfg = {});

}  // namespace wres
