#include "wres/symbol_jets.hpp"

namespace wres {

namespace {

using namespace jet;

GaussianRational q(long a, long b = 1) { return GaussianRational(make_rational(a, b)); }
const GaussianRational kI = GaussianRational::i();

JetExpr rho_pow(int e) { return pow(norm_xi_sq(), e); }
JetExpr dx(const JetExpr& e, int j) { return jet_derivative(e, Direction::x(j)); }
JetExpr dxi(const JetExpr& e, int j) { return jet_derivative(e, Direction::xi(j)); }

JetExpr gamma_up(int k) { return prim(PrimKind::gamma_up, k); }
JetExpr sigma_up(int k) { return prim(PrimKind::sigma_up, k); }
JetExpr a_up(int k) { return prim(PrimKind::a_up, k); }

// Γ^k - 2σ^k
JetExpr b_up(int k) { return gamma_up(k) - q(2) * sigma_up(k); }

template <class F>
JetExpr sum1(F f) {
    std::vector<JetExpr> t;
    for (int k = 1; k <= kDim; ++k) t.push_back(f(k));
    return add(std::move(t));
}

template <class F>
JetExpr sum2(F f) {
    std::vector<JetExpr> t;
    for (int k = 1; k <= kDim; ++k)
        for (int l = 1; l <= kDim; ++l) t.push_back(f(k, l));
    return add(std::move(t));
}

// Shared pieces: S_k = ξαξβ ∂_k g^{αβ}, and a^k ξk.
struct Pieces {
    std::vector<JetExpr> s;
    JetExpr a_xi;

    Pieces() : s(kDim + 1) {
        for (int k = 1; k <= kDim; ++k)
            s[k] = sum2([&](int a, int b) { return mul({xi_lower(a), xi_lower(b), dx(metric_inv(a, b), k)}); });
        a_xi = sum1([](int k) { return a_up(k) * xi_lower(k); });
    }
};

JetExpr sigma4_undeformed(const Pieces& P) {
    const auto& S = P.s;
    JetExpr t1 = mul({num(q(-1)), rho_pow(-3),
                      sum2([](int k, int l) { return mul({xi_lower(k), xi_lower(l), b_up(k), b_up(l)}); })});
    // The free ∂_μ is contracted with ξ^k, as in the ξ^j∂_j term of σ₋₃.
    JetExpr t2 = mul({num(q(2)), rho_pow(-4),
                      sum2([&](int k, int l) { return mul({xi_up(k), xi_lower(l), b_up(l), S[k]}); })});
    JetExpr t3 = rho_pow(-2) * add({sum1([](int k) { return dx(sigma_up(k), k); }),
                                    sum1([](int k) { return sigma_up(k) * sigma_up(k); }),
                                    num(q(-1)) * sum1([](int k) { return gamma_up(k) * sigma_up(k); })});
    JetExpr t4 = mul({num(q(-1, 4)), rho_pow(-2), prim(PrimKind::scalar_curv)});
    JetExpr t5 = mul({num(q(-2)), rho_pow(-3),
                      sum2([](int k, int l) { return mul({xi_up(k), xi_lower(l), dx(b_up(l), k)}); })});
    JetExpr t6 = mul({num(q(12)), rho_pow(-5),
                      sum2([&](int k, int l) { return mul({xi_up(k), xi_lower(l), S[k], S[l]}); })});
    JetExpr t7 = mul({num(q(-4)), rho_pow(-4), sum2([&](int k, int l) {
                          JetExpr inner = sum1([&](int a) { return xi_lower(a) * dx(metric_inv(l, a), k); });
                          return mul({xi_up(k), inner, S[l]});
                      })});
    JetExpr t8 = mul({num(q(-4)), rho_pow(-4), sum2([&](int k, int l) {
                          JetExpr inner = sum2([&](int g, int d) {
                              return mul({xi_lower(g), xi_lower(d), dx(dx(metric_inv(g, d), k), l)});
                          });
                          return mul({xi_up(k), xi_up(l), inner});
                      })});
    JetExpr t9 = rho_pow(-3) * sum1([&](int k) { return b_up(k) * S[k]; });
    JetExpr t10 = mul({num(q(-1)), rho_pow(-3), sum2([&](int k, int l) {
                           JetExpr inner = sum2([&](int a, int b) {
                               return mul({xi_lower(a), xi_lower(b), dx(dx(metric_inv(a, b), k), l)});
                           });
                           return metric_inv(k, l) * inner;
                       })});
    JetExpr t11 = mul({num(q(2)), rho_pow(-4),
                       sum2([&](int k, int l) { return mul({metric_inv(k, l), S[k], S[l]}); })});
    return add({t1, t2, t3, t4, t5, t6, t7, t8, t9, t10, t11});
}

}  // namespace

JetExpr build_sigma_minus2() { return rho_pow(-1); }

JetExpr build_sigma_minus3() {
    JetExpr first = sum1([](int k) { return xi_lower(k) * (gamma_up(k) - q(2) * a_up(k) - q(2) * sigma_up(k)); });
    JetExpr second = sum1([](int j) {
        return xi_up(j) *
               sum2([&](int a, int b) { return mul({xi_lower(a), xi_lower(b), dx(metric_inv(a, b), j)}); });
    });
    return add({mul({num(-kI), rho_pow(-2), first}), mul({num(q(-2) * kI), rho_pow(-3), second})});
}

JetExpr build_sigma_minus4_D() { return sigma4_undeformed(Pieces()); }

JetExpr build_sigma_minus4_DT() {
    Pieces P;
    const JetExpr& ax = P.a_xi;
    JetExpr rho = norm_xi_sq();
    // Σ_μ ∂_{ξμ}(X) ∂_{xμ}(Y)
    auto pair_sum = [&](const JetExpr& x, const JetExpr& y) {
        return sum1([&](int m) { return dxi(x, m) * dx(y, m); });
    };

    JetExpr bxi = sum1([](int k) { return b_up(k) * xi_lower(k); });
    JetExpr w1 = mul({num(q(-4) * kI), rho_pow(-3), bxi, ax});
    JetExpr w2 = mul({num(q(-4)), rho_pow(-3), ax, ax});
    JetExpr w3 = mul({num(q(4)), rho_pow(-4), ax, pair_sum(rho, rho)});

    std::vector<JetExpr> curv;
    for (int i = 1; i <= kDim; ++i)
        for (int j = 1; j <= kDim; ++j) {
            if (i == j) continue;
            for (int k = 1; k <= kDim; ++k)
                for (int l = 1; l <= kDim; ++l) {
                    if (k == l) continue;
                    curv.push_back(mul({prim(PrimKind::curvature_atom, i, j, k, l), cbar(i), cbar(j), c(k), c(l)}));
                }
        }
    JetExpr bracket = add({
        sum1([](int i) { return dx(a_up(i), i); }),
        sum1([](int i) { return sigma_up(i) * a_up(i); }),
        sum1([](int i) { return a_up(i) * sigma_up(i); }),
        sum1([](int i) { return a_up(i) * a_up(i); }),
        num(q(-1)) * sum1([](int k) { return gamma_up(k) * a_up(k); }),
        num(q(1, 8)) * add(std::move(curv)),
        num(q(-1)) * prim(PrimKind::witten_gradient),
        num(q(-1)) * prim(PrimKind::witten_potential),
    });
    JetExpr w4 = rho_pow(-2) * bracket;
    JetExpr w5 = mul({num(q(-2)), rho_pow(-3), pair_sum(ax, rho)});
    // Kept with the literal |ξ|^{-2}.
    JetExpr w6 = mul({num(q(-2)), rho_pow(-1), pair_sum(rho, rho), ax});
    JetExpr w7 = mul({num(q(-2)), rho_pow(-2), pair_sum(rho, ax)});

    return add({sigma4_undeformed(P), w1, w2, w3, w4, w5, w6, w7});
}

}  // namespace wres
