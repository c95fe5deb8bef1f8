#include "wres/ratfunc.hpp"

#include <sstream>

namespace wres {

namespace {

const GaussianRational kI = GaussianRational::i();

// Σ a_m (ξn - center)^m as a polynomial in ξn.
Polynomial from_shifted(const std::vector<GaussianRational>& a, const GaussianRational& center) {
    Polynomial r;
    Polynomial lin({-center, GaussianRational(1)});
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * lin + Polynomial(*it);
    return r;
}

// First `terms` Taylor coefficients of N(c+u) / (c - other + u)^k at u = 0, i.e. the
// expansion data that produces the principal part at `c` of N/((ξ-c)^p (ξ-other)^k).
std::vector<GaussianRational> local_series(const Polynomial& num, const GaussianRational& c,
                                           const GaussianRational& other, unsigned k, unsigned terms) {
    std::vector<GaussianRational> n = num.taylor_at(c);
    n.resize(std::max<std::size_t>(n.size(), terms));
    GaussianRational d = c - other;  // (d + u)^-k = d^-k Σ (-1)^m C(k+m-1, m) (u/d)^m
    GaussianRational dinv = d.inverse();
    std::vector<GaussianRational> s(terms);
    GaussianRational base = ipow(dinv, k);
    mpz_class binom = 1;  // C(k+m-1, m)
    GaussianRational dm(1);
    for (unsigned m = 0; m < terms; ++m) {
        if (m > 0) {
            binom = binom * (k + m - 1) / m;
            dm *= dinv;
        }
        GaussianRational term = base * dm * GaussianRational(Rational(binom));
        s[m] = (m % 2) ? -term : term;
    }
    std::vector<GaussianRational> out(terms);
    for (unsigned a = 0; a < terms; ++a)
        for (unsigned b = 0; a + b < terms; ++b)
            if (!n[a].is_zero() && !s[b].is_zero()) out[a + b] += n[a] * s[b];
    return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const GaussianRational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Polynomial Polynomial::linear_power(const GaussianRational& root, unsigned e) {
    Polynomial r(GaussianRational(1));
    Polynomial lin({-root, GaussianRational(1)});
    for (unsigned k = 0; k < e; ++k) r = r * lin;
    return r;
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational Polynomial::operator()(const GaussianRational& x) const {
    GaussianRational r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

std::complex<double> Polynomial::eval(std::complex<double> x) const {
    std::complex<double> r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->to_complex();
    return r;
}

Polynomial Polynomial::derivative() const {
    std::vector<GaussianRational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * GaussianRational(static_cast<long>(k)));
    return Polynomial(std::move(d));
}

std::vector<GaussianRational> Polynomial::taylor_at(const GaussianRational& center) const {
    // Repeated synthetic division by (ξ - center).
    std::vector<GaussianRational> work = c_, out;
    while (!work.empty()) {
        std::vector<GaussianRational> quo(work.size() - 1);
        GaussianRational carry;
        for (std::size_t k = work.size(); k-- > 0;) {
            GaussianRational v = work[k] + carry * center;
            if (k == 0) {
                out.push_back(v);
            } else {
                quo[k - 1] = v;
            }
            carry = v;
        }
        work = std::move(quo);
    }
    return out;
}

Polynomial Polynomial::divide_root(const GaussianRational& root) const {
    if (c_.empty()) return {};
    std::vector<GaussianRational> quo(c_.size() - 1);
    GaussianRational carry;
    for (std::size_t k = c_.size(); k-- > 0;) {
        GaussianRational v = c_[k] + carry * root;
        if (k == 0) {
            if (!v.is_zero()) throw arithmetic_error("divide_root: not a root");
        } else {
            quo[k - 1] = v;
        }
        carry = v;
    }
    return Polynomial(std::move(quo));
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
    for (std::size_t k = 0; k < b.c_.size(); ++k) c_[k] += b.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
    for (std::size_t k = 0; k < b.c_.size(); ++k) c_[k] -= b.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
}

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string cs = c_[k].is_real() ? c_[k].str() : "(" + c_[k].str() + ")";
        if (k == 0) s += cs;
        else s += cs + "·ξn" + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return s;
}

PoleLimitedRational::PoleLimitedRational(Polynomial num, unsigned p, unsigned q)
    : num_(std::move(num)), p_(p), q_(q) {
    reduce();
}

PoleLimitedRational PoleLimitedRational::one_plus_xi_sq_pow(int e) {
    if (e >= 0) {
        Polynomial base({GaussianRational(1), GaussianRational(0), GaussianRational(1)});
        Polynomial r(GaussianRational(1));
        for (int k = 0; k < e; ++k) r = r * base;
        return PoleLimitedRational(r);
    }
    return PoleLimitedRational(Polynomial(GaussianRational(1)), -e, -e);
}

void PoleLimitedRational::reduce() {
    if (num_.is_zero()) {
        p_ = q_ = 0;
        return;
    }
    while (p_ > 0 && num_(kI).is_zero()) {
        num_ = num_.divide_root(kI);
        --p_;
    }
    while (q_ > 0 && num_(-kI).is_zero()) {
        num_ = num_.divide_root(-kI);
        --q_;
    }
}

PoleLimitedRational& PoleLimitedRational::operator+=(const PoleLimitedRational& b) {
    if (b.is_zero()) return *this;
    if (is_zero()) return *this = b;
    unsigned P = std::max(p_, b.p_), Q = std::max(q_, b.q_);
    Polynomial lhs = num_ * Polynomial::linear_power(kI, P - p_) * Polynomial::linear_power(-kI, Q - q_);
    Polynomial rhs = b.num_ * Polynomial::linear_power(kI, P - b.p_) * Polynomial::linear_power(-kI, Q - b.q_);
    num_ = lhs + rhs;
    p_ = P;
    q_ = Q;
    reduce();
    return *this;
}

PoleLimitedRational& PoleLimitedRational::operator-=(const PoleLimitedRational& b) { return *this += -b; }

PoleLimitedRational& PoleLimitedRational::operator*=(const PoleLimitedRational& b) {
    num_ = num_ * b.num_;
    p_ += b.p_;
    q_ += b.q_;
    reduce();
    return *this;
}

PoleLimitedRational& PoleLimitedRational::operator*=(const GaussianRational& c) {
    num_ *= c;
    if (num_.is_zero()) p_ = q_ = 0;
    return *this;
}

PoleLimitedRational PoleLimitedRational::inverse() const {
    if (is_zero()) throw arithmetic_error("inverse of zero rational function");
    Polynomial n = num_;
    unsigned a = 0, b = 0;
    while (n.degree() > 0 && n(kI).is_zero()) {
        n = n.divide_root(kI);
        ++a;
    }
    while (n.degree() > 0 && n(-kI).is_zero()) {
        n = n.divide_root(-kI);
        ++b;
    }
    if (n.degree() != 0)
        throw arithmetic_error("inverse would introduce poles away from ±i: " + str());
    // 1/f = (ξ-i)^(p-a) (ξ+i)^(q-b) / c
    GaussianRational cinv = n.lead().inverse();
    Polynomial top(cinv);
    unsigned dp = 0, dq = 0;
    if (p_ >= a) top = top * Polynomial::linear_power(kI, p_ - a);
    else dp = a - p_;
    if (q_ >= b) top = top * Polynomial::linear_power(-kI, q_ - b);
    else dq = b - q_;
    return PoleLimitedRational(top, dp, dq);
}

PoleLimitedRational PoleLimitedRational::pow(int e) const {
    PoleLimitedRational base = e < 0 ? inverse() : *this;
    PoleLimitedRational r(GaussianRational(1));
    for (int k = 0; k < std::abs(e); ++k) r *= base;
    return r;
}

std::complex<double> PoleLimitedRational::eval(std::complex<double> x) const {
    const std::complex<double> I(0, 1);
    return num_.eval(x) / (std::pow(x - I, static_cast<int>(p_)) * std::pow(x + I, static_cast<int>(q_)));
}

std::string PoleLimitedRational::str() const {
    std::string s = "(" + num_.str() + ")";
    if (p_ == 0 && q_ == 0) return s;
    s += " /";
    if (p_) s += " (ξn-i)^" + std::to_string(p_);
    if (q_) s += " (ξn+i)^" + std::to_string(q_);
    return s;
}

PoleLimitedRational rf_arith(const PoleLimitedRational& a, const PoleLimitedRational& b, RfOp op) {
    switch (op) {
        case RfOp::add: return a + b;
        case RfOp::sub: return a - b;
        case RfOp::mul: return a * b;
        case RfOp::scale:
            if (!b.is_constant()) throw std::invalid_argument("rf scale expects a constant");
            return a * b.numerator().coeff(0);
    }
    throw std::invalid_argument("unknown rf op");
}

PoleLimitedRational rf_derivative(const PoleLimitedRational& f, unsigned order) {
    PoleLimitedRational r = f;
    for (unsigned k = 0; k < order && !r.is_zero(); ++k) {
        // (N/D)' with D = (ξ-i)^p (ξ+i)^q:  [N'(ξ-i)(ξ+i) - pN(ξ+i) - qN(ξ-i)] / ((ξ-i)^{p+1}(ξ+i)^{q+1})
        const Polynomial& n = r.numerator();
        unsigned p = r.pow_minus_i(), q = r.pow_plus_i();
        Polynomial xm({-kI, GaussianRational(1)}), xp({kI, GaussianRational(1)});
        Polynomial top = n.derivative() * xm * xp - n * xp * GaussianRational(static_cast<long>(p)) -
                         n * xm * GaussianRational(static_cast<long>(q));
        r = PoleLimitedRational(top, p + 1, q + 1);
    }
    return r;
}

PartialFractions partial_fractions(const PoleLimitedRational& f) {
    PartialFractions out;
    unsigned p = f.pow_minus_i(), q = f.pow_plus_i();
    if (p > 0) {
        auto a = local_series(f.numerator(), kI, -kI, q, p);
        out.at_plus_i = PoleLimitedRational(from_shifted(a, kI), p, 0);
    }
    if (q > 0) {
        auto b = local_series(f.numerator(), -kI, kI, p, q);
        out.at_minus_i = PoleLimitedRational(from_shifted(b, -kI), 0, q);
    }
    PoleLimitedRational rest = f - out.at_plus_i - out.at_minus_i;
    if (rest.pow_minus_i() != 0 || rest.pow_plus_i() != 0)
        throw arithmetic_error("partial fraction remainder kept a pole");
    out.polynomial = rest.numerator();
    return out;
}

GaussianRational residue_plus_i(const PoleLimitedRational& f) {
    unsigned p = f.pow_minus_i();
    if (p == 0) return {};
    return local_series(f.numerator(), kI, -kI, f.pow_plus_i(), p)[p - 1];
}

GaussianRational residue_minus_i(const PoleLimitedRational& f) {
    unsigned q = f.pow_plus_i();
    if (q == 0) return {};
    return local_series(f.numerator(), -kI, kI, f.pow_minus_i(), q)[q - 1];
}

PoleLimitedRational pi_plus(const PoleLimitedRational& f) {
    if (!f.decaying()) throw projection_domain_error("pi_plus needs a decaying symbol, got " + f.str());
    if (f.pow_minus_i() == 0) return {};
    auto a = local_series(f.numerator(), kI, -kI, f.pow_plus_i(), f.pow_minus_i());
    return PoleLimitedRational(from_shifted(a, kI), f.pow_minus_i(), 0);
}

GaussianRational pi_prime(const PoleLimitedRational& f) { return kI * residue_plus_i(f); }

GaussianRational integrate_real_line(const PoleLimitedRational& f) {
    if (f.is_zero()) return {};
    if (!f.integrable()) throw non_integrable_error("integrand does not decay fast enough: " + f.str());
    // ∫_R f = 2πi Res_{+i} f, closing in the upper half-plane.
    return GaussianRational(2) * kI * residue_plus_i(f);
}

}  // namespace wres
