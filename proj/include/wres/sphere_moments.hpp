#pragma once

#include "wres/scalars.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wres {

// Monomial ξ1^e1 ... ξd^ed on the unit sphere S^{d-1} ⊂ R^d.
struct SphereMonomial {
    std::vector<unsigned> exponents;

    explicit SphereMonomial(std::vector<unsigned> e) : exponents(std::move(e)) {}
    unsigned degree() const;
};

inline constexpr int kBoundaryDim = 6;

// ∫_{S^{d-1}} m / vol(S^{d-1}); with d = 6 this is the coefficient of Ω5.
Rational sphere_moment(const SphereMonomial& m);

// Common weight of every perfect matching for a degree-2m pattern: the moment of ξ1²⋯ξm².
Rational pairing_weight(unsigned half_degree, int dim = kBoundaryDim);

// Formal sum over perfect matchings of δ-products, one shared weight.
struct PairingTensor {
    Rational weight;
    std::vector<std::vector<std::pair<int, int>>> matchings;  // pairs of label positions' labels
};

// Labels are opaque integers; the result pairs labels, not positions.
PairingTensor pairing_tensor(const std::vector<int>& labels, int dim = kBoundaryDim);

}  // namespace wres
