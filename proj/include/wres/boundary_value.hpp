#pragma once

#include "wres/clifford.hpp"
#include "wres/curvature.hpp"
#include "wres/ratfunc.hpp"
#include "wres/scalars.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wres {

// Commuting symbol appearing in evaluated symbols.
enum class AtomKind : std::uint8_t {
    param = 0,     // H1, H2, SM, SB, TV
    xi = 1,        // ξk on the unit sphere, k = 1..6
    rb = 2,        // boundary curvature basis component
    rm = 3,        // ambient curvature basis component
    grad_v = 4,    // component (i, j) of T∇V, paired as c(ẽi) c̄(ẽj)
};

using Atom = std::uint32_t;

Atom make_atom(AtomKind kind, int a = 0, int b = 0, int c = 0, int d = 0);
AtomKind atom_kind(Atom a);
std::array<int, 4> atom_indices(Atom a);
inline Atom param_atom(Param p) { return make_atom(AtomKind::param, static_cast<int>(p)); }
inline Atom xi_atom(int k) { return make_atom(AtomKind::xi, k); }
std::string atom_name(Atom a);

// Sorted (atom, exponent) list with positive exponents.
class Monomial {
public:
    using Factors = std::vector<std::pair<Atom, unsigned>>;

    Monomial() = default;
    static Monomial of(Atom a, unsigned e = 1);

    const Factors& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    unsigned exponent(Atom a) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    std::string str() const;

private:
    Factors f_;
};

struct TermKey {
    CliffordWord word;
    Monomial mono;
    friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

// One additive piece of an evaluated symbol at (x0, |ξ'| = 1).
struct BoundarySymbolTerm {
    PoleLimitedRational xi_n_part;
    Monomial monomial;  // ξ' powers, parameters, curvature components
    CliffordWord word;
};

// Finite sum of BoundarySymbolTerm with merged keys; noncommutative product.
class BoundarySymbolValue {
public:
    using Terms = std::map<TermKey, PoleLimitedRational>;

    BoundarySymbolValue() = default;
    BoundarySymbolValue(const GaussianRational& c);
    BoundarySymbolValue(const PoleLimitedRational& f);
    static BoundarySymbolValue atom(Atom a);
    static BoundarySymbolValue term(CliffordWord w, Monomial m, PoleLimitedRational f);
    static BoundarySymbolValue from(const CliffordElement& e);
    static BoundarySymbolValue from(const RiemannLinear& lin, AtomKind kind);
    static BoundarySymbolValue from(const ParameterPolynomial& p);

    const Terms& terms() const { return terms_; }
    std::vector<BoundarySymbolTerm> term_list() const;
    bool is_zero() const { return terms_.empty(); }

    void add(const TermKey& k, const PoleLimitedRational& f);

    BoundarySymbolValue& operator+=(const BoundarySymbolValue& b);
    BoundarySymbolValue& operator-=(const BoundarySymbolValue& b);
    BoundarySymbolValue& operator*=(const GaussianRational& c);
    friend BoundarySymbolValue operator+(BoundarySymbolValue a, const BoundarySymbolValue& b) { return a += b; }
    friend BoundarySymbolValue operator-(BoundarySymbolValue a, const BoundarySymbolValue& b) { return a -= b; }
    friend BoundarySymbolValue operator*(BoundarySymbolValue a, const GaussianRational& c) { return a *= c; }
    friend BoundarySymbolValue operator*(const GaussianRational& c, BoundarySymbolValue a) { return a *= c; }
    friend BoundarySymbolValue operator*(const BoundarySymbolValue& a, const BoundarySymbolValue& b);
    BoundarySymbolValue operator-() const { return *this * GaussianRational(-1); }

    friend bool operator==(const BoundarySymbolValue& a, const BoundarySymbolValue& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BoundarySymbolValue& a, const BoundarySymbolValue& b) { return !(a == b); }

    // Termwise maps in ξn.
    BoundarySymbolValue pi_plus() const;
    BoundarySymbolValue d_xi_n(unsigned order = 1) const;

    // Inverse of a pure scalar c·(ξn-i)^a(ξn+i)^b.
    BoundarySymbolValue inverse() const;

    // Clifford trace: scalar-valued terms keyed by monomial.
    std::map<Monomial, PoleLimitedRational> trace() const;

    // Canonical form modulo Σ_{k≤6} ξk² = 1: every ξ6^e with e ≥ 2 is rewritten.
    BoundarySymbolValue sphere_reduced() const;

    std::string str() const;

private:
    Terms terms_;  // no zero rational parts
};

}  // namespace wres
