#pragma once

#include "wres/scalars.hpp"
#include "wres/sphere_moments.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace wres {

// R_{s0 s1 s2 s3} with opaque integer labels (abstract or concrete indices).
// sign 0 encodes the zero tensor component.
struct CurvatureTerm {
    std::array<int, 4> slots{};
    int sign = 1;

    friend bool operator==(const CurvatureTerm&, const CurvatureTerm&) = default;
};

// Lexicographically least representative under antisymmetry (12), antisymmetry (34)
// and pair swap; collapses to sign 0 when a pair repeats an index.
CurvatureTerm canonicalize_riemann(const CurvatureTerm& t);

// Basis component key: canonical slots with a<b, c<d, (a,b) <= (c,d), and not the
// Bianchi-eliminated member R_{wzxy} of an all-distinct quadruple w<x<y<z.
using RiemannKey = std::array<int, 4>;
using RiemannLinear = std::map<RiemannKey, GaussianRational>;

// Concrete component as a combination of basis keys (uses the first Bianchi identity).
RiemannLinear riemann_component(int a, int b, int c, int d);
void add_scaled(RiemannLinear& acc, const RiemannLinear& x, const GaussianRational& c);

// c·Σ_{t<l} R_{tltl} over the boundary indices 1..dim  ↦  (c/2)·SB. Throws otherwise.
struct curvature_reduction_error : std::domain_error {
    using std::domain_error::domain_error;
};
ParameterPolynomial reduce_to_scalar_curvature(const RiemannLinear& lin, int dim = kBoundaryDim);

// Σ_k coeff_k R_{labels_k} against a pairing pattern (each matching identifies its two
// labels) plus explicit traces; every label must be bound by exactly one δ.
struct WeightedCurvature {
    GaussianRational coeff;
    CurvatureTerm term;
};
ParameterPolynomial contract_with_moment(const std::vector<WeightedCurvature>& terms, const PairingTensor& pattern,
                                         const std::vector<std::pair<int, int>>& traces = {},
                                         int dim = kBoundaryDim);

}  // namespace wres
