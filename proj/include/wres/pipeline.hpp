#pragma once

#include "wres/boundary_value.hpp"
#include "wres/symbol_jets.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wres {

// Multi-index over the tangential ξ' directions, expanded to a sorted direction list.
struct MultiIndex {
    std::vector<int> dirs;
    Rational inv_factorial;  // 1/α!
    std::string label() const;
};

struct CaseSpec {
    int case_id = 0;
    int r = 0;
    int l = 0;
    unsigned k = 0;
    unsigned j = 0;
    unsigned alpha = 0;  // |α|

    // (-i)^{|α|+j+k+1} / (j+k+1)!; the 1/α! factor is carried by each MultiIndex.
    GaussianRational prefactor() const;
    std::vector<MultiIndex> alphas(int boundary_dim = kBoundaryDim) const;
    std::string str() const;
};

// Solutions of -r - l + 1 + k + j + |α| = n with r ≤ -p1, l ≤ -p2. For (7, 2, 2) the ids follow
// the fifteen-case numbering used in the literature; otherwise they are sequential.
std::vector<CaseSpec> enumerate_cases(int n, int p1, int p2);

// One traced, ξ'-monomial-resolved piece of a case integrand.
struct LedgerEntry {
    std::string alpha;
    Monomial monomial;             // ξ' powers times parameters / curvature atoms
    PoleLimitedRational integrand;  // trace, as a function of ξn
    GaussianRational weight;       // prefactor / α!
    GaussianRational line_integral;  // ∫ dξn / π
    Rational moment;                 // sphere moment of the ξ' part
};

struct CaseResult {
    CaseSpec spec;
    ParameterPolynomial value;  // coefficient of πΩ5
    std::vector<LedgerEntry> ledger;
    bool ambiguous = false;     // touched the unbound-index table entry
    std::optional<ParameterPolynomial> alternative_value;  // under the zero reading
};

struct case_error : std::runtime_error {
    int case_id;
    case_error(int id, const std::string& what)
        : std::runtime_error("case " + std::to_string(id) + ": " + what), case_id(id) {}
};

// σ_r as an expression; r in {-2, -3, -4}.
JetExpr symbol_of_order(int r);

CaseResult compute_case(const CaseSpec& spec, AmbiguityPolicy policy = AmbiguityPolicy::diagonal);
std::vector<CaseResult> compute_all_cases(AmbiguityPolicy policy = AmbiguityPolicy::diagonal);

// Σ weight·line_integral·moment·atoms, with curvature reduced to SB; throws on unresolved atoms.
ParameterPolynomial value_from_ledger(const std::vector<LedgerEntry>& ledger);

// ∫ tr[...] dξn / π, per remaining monomial.
using TracedIntegral = std::map<Monomial, GaussianRational>;
TracedIntegral traced_integral(const BoundarySymbolValue& a, const BoundarySymbolValue& b);

struct SwapSplit {
    TracedIntegral direct;       // ∫tr[π⁺a · b]
    TracedIntegral full;         // ∫tr[a · b]
    TracedIntegral cross;        // ∫tr[a · π⁺b]
    TracedIntegral plus_plus;    // ∫tr[π⁺a · π⁺b]
    TracedIntegral minus_minus;  // ∫tr[π⁻a · π⁻b]
};
SwapSplit pi_plus_swap(const BoundarySymbolValue& a, const BoundarySymbolValue& b);
TracedIntegral subtract(const TracedIntegral& a, const TracedIntegral& b);

// The case evaluated through ∫tr[a·b] - ∫tr[a·π⁺b] instead of π⁺ on the left factor.
ParameterPolynomial compute_case_swapped(const CaseSpec& spec, AmbiguityPolicy policy = AmbiguityPolicy::diagonal);

// The two parts of the swapped split, each already integrated over the sphere.
struct SplitParts {
    ParameterPolynomial full;
    ParameterPolynomial cross;
};
SplitParts compute_case_split_parts(const CaseSpec& spec, AmbiguityPolicy policy = AmbiguityPolicy::diagonal);

ParameterPolynomial assemble_phi(const std::vector<CaseResult>& cases);

// Literature values, coefficient of πΩ5 (versioned).
inline constexpr const char* kPaperTableVersion = "2";
std::map<int, ParameterPolynomial> paper_case_values();
ParameterPolynomial paper_phi();

struct TheoremReport {
    ParameterPolynomial boundary;  // engine Φ
    ParameterPolynomial interior;  // 0 for n = 7, p1 + p2 = 4
    ParameterPolynomial paper;
    ParameterPolynomial imaginary_part;
    ParameterPolynomial undeformed;  // TV monomials removed
    bool matches_paper = false;
};
TheoremReport theorem_wres(const ParameterPolynomial& phi);

struct GravitationalAction {
    ParameterPolynomial k_engine;  // K(x0) from the metric jet
    ParameterPolynomial k_paper;
    ParameterPolynomial i_gr_b_engine;  // coefficient of Vol_∂M
    ParameterPolynomial i_gr_b_paper;
    ParameterPolynomial q0_engine;
    ParameterPolynomial q0_paper;
    std::string corollary_engine;
    std::string corollary_paper;
};
GravitationalAction gravitational_action(const ParameterPolynomial& phi);

}  // namespace wres
