#include "wres/oracle_numeric.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <random>

namespace wres {

namespace {

using boost::math::quadrature::gauss_kronrod;

struct Piece {
    double value = 0;
    double error = 0;
    double l1 = 0;
};

template <class F>
Piece gk(F f, double a, double b, const QuadratureConfig& cfg) {
    Piece p;
    p.value = gauss_kronrod<double, 31>::integrate(f, a, b, cfg.max_depth, cfg.rel_tol, &p.error, &p.l1);
    return p;
}

}  // namespace

QuadratureResult numeric_line_integral(const PoleLimitedRational& f, const QuadratureConfig& cfg) {
    if (!f.integrable()) throw non_integrable_error("numeric_line_integral: decay degree below 2: " + f.str());
    const double L = cfg.split_radius;
    QuadratureResult res;
    double l1 = 0;
    for (int part = 0; part < 2; ++part) {
        auto pick = [&](std::complex<double> z) { return part == 0 ? z.real() : z.imag(); };
        auto mid = [&](double x) { return pick(f.eval(x)); };
        // ∫_L^∞ f + ∫_{-∞}^{-L} f = ∫_0^{1/L} (f(1/u) + f(-1/u)) / u² du
        auto tail = [&](double u) {
            if (u == 0) return 0.0;  // not sampled by Gauss–Kronrod; the limit is finite
            return pick(f.eval(1 / u) + f.eval(-1 / u)) / (u * u);
        };
        Piece m = gk(mid, -L, L, cfg);
        Piece t = gk(tail, 0.0, 1 / L, cfg);
        double v = m.value + t.value;
        (part == 0 ? res.value.real(v) : res.value.imag(v));
        res.error_bound += m.error + t.error;
        l1 += m.l1 + t.l1;
    }
    double allowed = std::max(cfg.abs_tol, cfg.rel_tol * l1);
    if (!(res.error_bound <= allowed))
        throw quadrature_error("quadrature tolerance not reached for " + f.str() + " (error " +
                               std::to_string(res.error_bound) + ")");
    return res;
}

double numeric_sphere_moment(const SphereMonomial& m) {
    double log_num = 0;
    double a_sum = 0;
    for (unsigned e : m.exponents) {
        if (e % 2) return 0.0;
        double a = e / 2.0;
        log_num += std::lgamma(a + 0.5);
        a_sum += a;
    }
    const double half_d = m.exponents.size() / 2.0;
    return 2 * std::exp(log_num - std::lgamma(half_d + a_sum));
}

CurvatureSample::CurvatureSample(double scalar, std::uint64_t seed) : r_(6 * 6 * 6 * 6, 0.0) {
    constexpr int d = 6;
    auto at = [](int a, int b, int c, int e) { return ((a * d + b) * d + c) * d + e; };
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    double trace = 0;
    do {
        std::fill(r_.begin(), r_.end(), 0.0);
        for (int rep = 0; rep < 3; ++rep) {
            double h[d][d];
            for (int a = 0; a < d; ++a)
                for (int b = a; b < d; ++b) h[a][b] = h[b][a] = nd(rng);
            double sign = rep == 1 ? -1.0 : 1.0;  // mixed signs keep the tensor generic
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    for (int c = 0; c < d; ++c)
                        for (int e = 0; e < d; ++e)
                            r_[at(a, b, c, e)] += sign * (h[a][c] * h[b][e] - h[a][e] * h[b][c]);
        }
        trace = 0;
        for (int t = 0; t < d; ++t)
            for (int l = 0; l < d; ++l) trace += r_[at(t, l, t, l)];
    } while (std::abs(trace) < 1e-3);
    for (double& x : r_) x *= scalar / trace;
}

double CurvatureSample::operator()(int a, int b, int c, int d) const {
    return r_[(((a - 1) * 6 + (b - 1)) * 6 + (c - 1)) * 6 + (d - 1)];
}

NumericCheck numeric_case_check(const CaseResult& result, const ParamAssignment& assignment, std::uint64_t seed,
                                const QuadratureConfig& cfg) {
    const double pi = std::numbers::pi;
    const double sb = assignment.values[static_cast<int>(Param::SB)].value_or(0.0);
    CurvatureSample curv(sb, seed);

    NumericCheck out;
    out.case_id = result.spec.case_id;
    out.exact = substitute_numeric(result.value, assignment);
    for (const LedgerEntry& e : result.ledger) {
        std::vector<unsigned> xi(kBoundaryDim, 0);
        std::complex<double> atoms = 1;
        for (const auto& [a, p] : e.monomial.factors()) {
            auto ix = atom_indices(a);
            switch (atom_kind(a)) {
                case AtomKind::xi: xi[ix[0] - 1] = p; break;
                case AtomKind::param: {
                    auto v = assignment.values[ix[0]];
                    if (!v) throw std::invalid_argument(std::string("no value for ") + param_name(Param(ix[0])));
                    atoms *= std::pow(*v, p);
                    break;
                }
                case AtomKind::rb: atoms *= std::pow(curv(ix[0], ix[1], ix[2], ix[3]), p); break;
                default: throw std::invalid_argument("numeric check cannot evaluate " + atom_name(a));
            }
        }
        double moment = numeric_sphere_moment(SphereMonomial(xi)) / (pi * pi * pi);  // Ω5 = π³
        if (moment == 0) continue;
        std::complex<double> line = numeric_line_integral(e.integrand, cfg).value / pi;
        out.numeric += e.weight.to_complex() * line * moment * atoms;
    }
    double scale = std::max(1.0, std::abs(out.exact));
    out.rel_error = std::abs(out.numeric - out.exact) / scale;
    out.agree = out.rel_error <= 1e-9;
    return out;
}

}  // namespace wres
