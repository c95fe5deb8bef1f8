#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wres {

// Canonical big rational. gmpxx keeps arithmetic results reduced with a
// positive denominator; make_rational() enforces it for literals.
using Rational = mpq_class;

struct arithmetic_error : std::domain_error {
    using std::domain_error::domain_error;
};

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);  // "a" or "a/b"
std::string to_string(const Rational& r);          // "a" or "a/b"

// Element of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}
    GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& b);
    GaussianRational& operator-=(const GaussianRational& b);
    GaussianRational& operator*=(const GaussianRational& b);
    GaussianRational& operator/=(const GaussianRational& b);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    // [re_num, re_den, im_num, im_den] as decimal strings.
    std::array<std::string, 4> serialize() const;
    static GaussianRational deserialize(const std::array<std::string, 4>& parts);

    // "a/b", "(c/d)i", "a/b + (c/d)i"
    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

enum class ArithOp { add, sub, mul, div };
GaussianRational gaussian_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op);

GaussianRational ipow(const GaussianRational& base, unsigned e);

// Indeterminates of the final answers.
enum class Param : int { H1 = 0, H2 = 1, SM = 2, SB = 3, TV = 4 };
inline constexpr int kParamCount = 5;
const char* param_name(Param p);

using ParamExponents = std::array<unsigned, kParamCount>;

class ParameterPolynomial {
public:
    using Terms = std::map<ParamExponents, GaussianRational>;

    ParameterPolynomial() = default;
    ParameterPolynomial(const GaussianRational& c);
    static ParameterPolynomial var(Param p, unsigned power = 1);
    static ParameterPolynomial monomial(const ParamExponents& e, const GaussianRational& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    GaussianRational coeff(const ParamExponents& e) const;
    unsigned degree_in(Param p) const;

    void add_term(const ParamExponents& e, const GaussianRational& c);

    ParameterPolynomial& operator+=(const ParameterPolynomial& b);
    ParameterPolynomial& operator-=(const ParameterPolynomial& b);
    ParameterPolynomial& operator*=(const ParameterPolynomial& b);
    ParameterPolynomial& operator*=(const GaussianRational& c);

    friend ParameterPolynomial operator+(ParameterPolynomial a, const ParameterPolynomial& b) { return a += b; }
    friend ParameterPolynomial operator-(ParameterPolynomial a, const ParameterPolynomial& b) { return a -= b; }
    friend ParameterPolynomial operator*(ParameterPolynomial a, const ParameterPolynomial& b) { return a *= b; }
    friend ParameterPolynomial operator*(ParameterPolynomial a, const GaussianRational& c) { return a *= c; }
    friend ParameterPolynomial operator*(const GaussianRational& c, ParameterPolynomial a) { return a *= c; }
    ParameterPolynomial operator-() const;

    friend bool operator==(const ParameterPolynomial& a, const ParameterPolynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParameterPolynomial& a, const ParameterPolynomial& b) { return !(a == b); }

    // Drop every monomial containing p.
    ParameterPolynomial without(Param p) const;
    ParameterPolynomial real_part() const;
    ParameterPolynomial imag_part() const;  // real coefficients

    // "7/8 · H1^2 - 3/8 · H2"; "0" when empty.
    std::string str() const;

private:
    Terms terms_;  // no zero coefficients
};

enum class PolyOp { add, mul, scale };
ParameterPolynomial param_poly_arith(const ParameterPolynomial& a, const ParameterPolynomial& b, PolyOp op);

struct ParamAssignment {
    std::array<std::optional<double>, kParamCount> values{};
    ParamAssignment& set(Param p, double v) {
        values[static_cast<int>(p)] = v;
        return *this;
    }
};

std::complex<double> substitute_numeric(const ParameterPolynomial& p, const ParamAssignment& a);

}  // namespace wres
