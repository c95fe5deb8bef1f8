#pragma once

#include "wres/boundary_value.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace wres {

inline constexpr int kDim = 7;  // ambient dimension n; index n is the normal direction

enum class PrimKind : std::uint8_t {
    norm_xi_sq,       // |ξ|²_g
    xi_n,             // ξn
    xi_prime,         // ξk, k < n (covariant)
    xi_up,            // ξ^k = g^{kl}ξl
    c_xi,             // c(ξ)
    c_e,              // c(ẽk)
    cbar_e,           // c̄(ẽk)
    gamma_up,         // Γ^k
    sigma_up,         // σ^k
    a_up,             // a^k
    metric_inv,       // g^{αβ}
    scalar_curv,      // s_M
    boundary_scalar_curv,  // s_∂M
    witten_potential,      // T²|V|²
    witten_gradient,       // T Σ_i c(ẽi) c̄(∇_{ẽi}V)
    curvature_atom,        // ambient R^M_{ijkl}
};

const char* prim_kind_name(PrimKind k);

// Pending x-derivatives, sorted directions in 1..n (at most four stored).
struct XDeriv {
    std::array<std::uint8_t, 4> dirs{};
    std::uint8_t count = 0;

    XDeriv with(int dir) const;
    int normal_count() const;
    std::string str() const;
    friend bool operator==(const XDeriv&, const XDeriv&) = default;
};

struct Primitive {
    PrimKind kind;
    std::array<std::int8_t, 4> idx{};
    XDeriv d;

    std::string str() const;
};

struct missing_table_entry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// x-directions 1..n and ξ-directions 1..n.
struct Direction {
    enum class Var : std::uint8_t { x, xi } var;
    int index;

    static Direction x(int j) { return {Var::x, j}; }
    static Direction xi(int j) { return {Var::xi, j}; }
    std::string str() const;
};

class JetNode;
using JetExpr = std::shared_ptr<const JetNode>;

class JetNode {
public:
    enum class Op : std::uint8_t { constant, prim, add, mul, pow };

    Op op() const { return op_; }
    const GaussianRational& constant() const { return c_; }
    const Primitive& prim() const { return p_; }
    const std::vector<JetExpr>& kids() const { return kids_; }
    int exponent() const { return e_; }
    bool commuting() const { return commuting_; }
    bool is_zero() const { return op_ == Op::constant && c_.is_zero(); }

    std::string str() const;

    // Factories (simplifying: drop zeros, fold constants, flatten).
    static JetExpr make_const(const GaussianRational& c);
    static JetExpr make_prim(const Primitive& p);
    static JetExpr make_add(std::vector<JetExpr> terms);
    static JetExpr make_mul(std::vector<JetExpr> factors);
    static JetExpr make_pow(JetExpr base, int e);

private:
    Op op_ = Op::constant;
    GaussianRational c_;
    Primitive p_{PrimKind::xi_n, {}, {}};
    std::vector<JetExpr> kids_;
    int e_ = 0;
    bool commuting_ = true;
};

// Short builders.
namespace jet {
JetExpr num(const GaussianRational& c);
JetExpr prim(PrimKind k, int a = 0, int b = 0, int c = 0, int d = 0);
JetExpr norm_xi_sq();
JetExpr xi_lower(int k);  // ξk covariant; ξn for k = n
JetExpr xi_up(int k);
JetExpr metric_inv(int a, int b);  // constants where an index is n
JetExpr c(int k);
JetExpr cbar(int k);
JetExpr add(std::vector<JetExpr> t);
JetExpr mul(std::vector<JetExpr> f);
JetExpr pow(JetExpr b, int e);
JetExpr operator+(JetExpr a, JetExpr b);
JetExpr operator-(JetExpr a, JetExpr b);
JetExpr operator*(JetExpr a, JetExpr b);
JetExpr operator*(const GaussianRational& c, JetExpr a);
}  // namespace jet

JetExpr jet_derivative(const JetExpr& e, Direction dir, unsigned order = 1);

// The tabulated ∂_{xn}σ^n and ∂_{xn}a^n rows carry an unbound index s: diagonal
// reads it as s = t, zero drops the term.
enum class AmbiguityPolicy { diagonal, zero };
const char* ambiguity_policy_name(AmbiguityPolicy p);

class BoundaryEvaluator {
public:
    explicit BoundaryEvaluator(AmbiguityPolicy policy = AmbiguityPolicy::diagonal) : policy_(policy) {}

    BoundarySymbolValue evaluate(const JetExpr& e);
    // Table entry of a primitive at (x0, |ξ'| = 1); throws missing_table_entry.
    BoundarySymbolValue table(const Primitive& p);

    AmbiguityPolicy policy() const { return policy_; }
    bool touched_ambiguous() const { return !ambiguous_hits_.empty(); }
    const std::set<std::string>& ambiguous_hits() const { return ambiguous_hits_; }

private:
    AmbiguityPolicy policy_;
    std::unordered_map<const JetNode*, BoundarySymbolValue> memo_;
    std::vector<JetExpr> keep_alive_;
    std::set<std::string> ambiguous_hits_;
};

std::vector<BoundarySymbolTerm> evaluate_at_boundary(const JetExpr& e,
                                                     AmbiguityPolicy policy = AmbiguityPolicy::diagonal);

JetExpr build_sigma_minus2();
JetExpr build_sigma_minus3();
JetExpr build_sigma_minus4_DT();
// The undeformed part σ₋₄(D⁻²) alone (Witten terms omitted).
JetExpr build_sigma_minus4_D();

// Fixture grammar (whitespace-insensitive):
//   sum     := product (('+' | '-') product)*
//   product := ['-'] factor (['*' | '/'] factor)*      juxtaposition multiplies
//   factor  := atom ['^' int]
//   atom    := number | 'i' | '(' sum ')' | name ['(' index (',' index)* ')']
//            | 'sum' '(' ident '=' int '..' int ',' sum ')'
//   names   : h1 h2 sm sb tv xin xi(k) c(k) cb(k) R(a,b,c,d) RM(a,b,c,d) N(i,j)
//   index   : integer, 'n' (= 7), or a bound summation variable
// Division is allowed only by ξn-rational scalars.
struct fixture_parse_error : std::invalid_argument {
    std::size_t position;
    fixture_parse_error(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
};
BoundarySymbolValue parse_fixture(const std::string& text);

}  // namespace wres
