#pragma once

#include "wres/scalars.hpp"

#include <complex>
#include <string>
#include <vector>

namespace wres {

// Dense polynomial in ξn over Q(i); coefficient k multiplies ξn^k. No trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<GaussianRational> coeffs);
    Polynomial(const GaussianRational& c);

    static Polynomial xi() { return Polynomial({GaussianRational(0), GaussianRational(1)}); }
    // (ξn - root)^e
    static Polynomial linear_power(const GaussianRational& root, unsigned e);

    const std::vector<GaussianRational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    GaussianRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : GaussianRational(); }
    GaussianRational lead() const { return c_.empty() ? GaussianRational() : c_.back(); }

    GaussianRational operator()(const GaussianRational& x) const;
    std::complex<double> eval(std::complex<double> x) const;

    Polynomial derivative() const;
    // Coefficients of the expansion in powers of (ξn - center).
    std::vector<GaussianRational> taylor_at(const GaussianRational& center) const;
    // Exact division by (ξn - root); requires root to be a zero.
    Polynomial divide_root(const GaussianRational& root) const;

    Polynomial& operator+=(const Polynomial& b);
    Polynomial& operator-=(const Polynomial& b);
    Polynomial& operator*=(const GaussianRational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const { return *this * GaussianRational(-1); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str() const;

private:
    void trim();
    std::vector<GaussianRational> c_;
};

struct projection_domain_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct non_integrable_error : std::domain_error {
    using std::domain_error::domain_error;
};

// numerator / ((ξn - i)^p (ξn + i)^q), kept reduced: the numerator does not vanish
// at a pole that is present, and zero is stored as 0/1.
class PoleLimitedRational {
public:
    PoleLimitedRational() = default;
    PoleLimitedRational(const GaussianRational& c) : num_(c) {}
    PoleLimitedRational(Polynomial num, unsigned p = 0, unsigned q = 0);

    static PoleLimitedRational xi() { return PoleLimitedRational(Polynomial::xi()); }
    static PoleLimitedRational one_plus_xi_sq_pow(int e);  // (1+ξn²)^e, e of either sign

    const Polynomial& numerator() const { return num_; }
    unsigned pow_minus_i() const { return p_; }
    unsigned pow_plus_i() const { return q_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return p_ == 0 && q_ == 0 && num_.degree() <= 0; }
    bool decaying() const { return num_.degree() < static_cast<int>(p_ + q_); }
    bool integrable() const { return num_.degree() <= static_cast<int>(p_ + q_) - 2; }

    PoleLimitedRational& operator+=(const PoleLimitedRational& b);
    PoleLimitedRational& operator-=(const PoleLimitedRational& b);
    PoleLimitedRational& operator*=(const PoleLimitedRational& b);
    PoleLimitedRational& operator*=(const GaussianRational& c);
    friend PoleLimitedRational operator+(PoleLimitedRational a, const PoleLimitedRational& b) { return a += b; }
    friend PoleLimitedRational operator-(PoleLimitedRational a, const PoleLimitedRational& b) { return a -= b; }
    friend PoleLimitedRational operator*(PoleLimitedRational a, const PoleLimitedRational& b) { return a *= b; }
    friend PoleLimitedRational operator*(PoleLimitedRational a, const GaussianRational& c) { return a *= c; }
    friend PoleLimitedRational operator*(const GaussianRational& c, PoleLimitedRational a) { return a *= c; }
    PoleLimitedRational operator-() const { return *this * GaussianRational(-1); }

    // Defined only for c·(ξn-i)^a(ξn+i)^b numerators.
    PoleLimitedRational inverse() const;
    PoleLimitedRational pow(int e) const;

    friend bool operator==(const PoleLimitedRational& a, const PoleLimitedRational& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.num_ == b.num_;
    }
    friend bool operator!=(const PoleLimitedRational& a, const PoleLimitedRational& b) { return !(a == b); }

    std::complex<double> eval(std::complex<double> x) const;
    std::string str() const;  // "P(ξn) / (ξn-i)^p (ξn+i)^q"

private:
    void reduce();
    Polynomial num_;
    unsigned p_ = 0;
    unsigned q_ = 0;
};

enum class RfOp { add, sub, mul, scale };
PoleLimitedRational rf_arith(const PoleLimitedRational& a, const PoleLimitedRational& b, RfOp op);

PoleLimitedRational rf_derivative(const PoleLimitedRational& f, unsigned order = 1);

struct PartialFractions {
    PoleLimitedRational at_plus_i;   // principal part at +i
    PoleLimitedRational at_minus_i;  // principal part at -i
    Polynomial polynomial;
};
PartialFractions partial_fractions(const PoleLimitedRational& f);

// Laurent coefficient of (ξn - i)^-1.
GaussianRational residue_plus_i(const PoleLimitedRational& f);
GaussianRational residue_minus_i(const PoleLimitedRational& f);

PoleLimitedRational pi_plus(const PoleLimitedRational& f);
GaussianRational pi_prime(const PoleLimitedRational& f);
// ∫_R f dξn divided by π.
GaussianRational integrate_real_line(const PoleLimitedRational& f);

}  // namespace wres
