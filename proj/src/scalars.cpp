#include "wres/scalars.hpp"

#include <sstream>

namespace wres {

Rational make_rational(long num, long den) {
    if (den == 0) throw arithmetic_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    mpz_class num, den(1);
    try {
        num = mpz_class(text.substr(0, slash));
        if (slash != std::string::npos) den = mpz_class(text.substr(slash + 1));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
    if (den == 0) throw arithmetic_error("rational with zero denominator: " + text);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw arithmetic_error("division by zero in Q(i)");
    Rational n = re_ * re_ + im_ * im_;
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& b) {
    re_ += b.re_;
    im_ += b.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& b) {
    re_ -= b.re_;
    im_ -= b.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& b) {
    if (sgn(im_) == 0 && sgn(b.im_) == 0) {
        re_ *= b.re_;
        return *this;
    }
    Rational r = re_ * b.re_ - im_ * b.im_;
    Rational i = re_ * b.im_ + im_ * b.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& b) { return *this *= b.inverse(); }

std::array<std::string, 4> GaussianRational::serialize() const {
    return {re_.get_num().get_str(), re_.get_den().get_str(), im_.get_num().get_str(),
            im_.get_den().get_str()};
}

GaussianRational GaussianRational::deserialize(const std::array<std::string, 4>& parts) {
    return {parse_rational(parts[0] + "/" + parts[1]), parse_rational(parts[2] + "/" + parts[3])};
}

std::string GaussianRational::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag = "(" + im_.get_str() + ")i";
    if (sgn(re_) == 0) return imag;
    return re_.get_str() + " + " + imag;
}

GaussianRational gaussian_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::invalid_argument("unknown arithmetic op");
}

GaussianRational ipow(const GaussianRational& base, unsigned e) {
    GaussianRational r(1), b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

const char* param_name(Param p) {
    switch (p) {
        case Param::H1: return "H1";
        case Param::H2: return "H2";
        case Param::SM: return "SM";
        case Param::SB: return "SB";
        case Param::TV: return "TV";
    }
    return "?";
}

ParameterPolynomial::ParameterPolynomial(const GaussianRational& c) {
    if (!c.is_zero()) terms_[ParamExponents{}] = c;
}

ParameterPolynomial ParameterPolynomial::var(Param p, unsigned power) {
    ParamExponents e{};
    e[static_cast<int>(p)] = power;
    return monomial(e, GaussianRational(1));
}

ParameterPolynomial ParameterPolynomial::monomial(const ParamExponents& e, const GaussianRational& c) {
    ParameterPolynomial r;
    r.add_term(e, c);
    return r;
}

GaussianRational ParameterPolynomial::coeff(const ParamExponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational() : it->second;
}

unsigned ParameterPolynomial::degree_in(Param p) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(p)]);
    return d;
}

void ParameterPolynomial::add_term(const ParamExponents& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParameterPolynomial& ParameterPolynomial::operator+=(const ParameterPolynomial& b) {
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
}

ParameterPolynomial& ParameterPolynomial::operator-=(const ParameterPolynomial& b) {
    for (const auto& [e, c] : b.terms_) add_term(e, -c);
    return *this;
}

ParameterPolynomial& ParameterPolynomial::operator*=(const ParameterPolynomial& b) {
    ParameterPolynomial r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ParamExponents e;
            for (int k = 0; k < kParamCount; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    terms_ = std::move(r.terms_);
    return *this;
}

ParameterPolynomial& ParameterPolynomial::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

ParameterPolynomial ParameterPolynomial::operator-() const {
    ParameterPolynomial r = *this;
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

ParameterPolynomial ParameterPolynomial::without(Param p) const {
    ParameterPolynomial r;
    for (const auto& [e, c] : terms_)
        if (e[static_cast<int>(p)] == 0) r.terms_.emplace(e, c);
    return r;
}

ParameterPolynomial ParameterPolynomial::real_part() const {
    ParameterPolynomial r;
    for (const auto& [e, c] : terms_) r.add_term(e, GaussianRational(c.re()));
    return r;
}

ParameterPolynomial ParameterPolynomial::imag_part() const {
    ParameterPolynomial r;
    for (const auto& [e, c] : terms_) r.add_term(e, GaussianRational(c.im()));
    return r;
}

static std::string monomial_str(const ParamExponents& e) {
    std::string s;
    for (int k = 0; k < kParamCount; ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += " ";
        s += param_name(static_cast<Param>(k));
        if (e[k] > 1) s += "^" + std::to_string(e[k]);
    }
    return s;
}

std::string ParameterPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string m = monomial_str(e);
        bool compound = !c.is_real() && sgn(c.re()) != 0;
        bool negative = c.is_real() && sgn(c.re()) < 0;
        if (!out.empty()) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        GaussianRational shown = negative ? -c : c;
        std::string cs = compound ? "(" + shown.str() + ")" : shown.str();
        out += m.empty() ? cs : cs + " · " + m;
    }
    return out;
}

ParameterPolynomial param_poly_arith(const ParameterPolynomial& a, const ParameterPolynomial& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::mul: return a * b;
        case PolyOp::scale:
            if (b.terms().size() > 1 || (b.terms().size() == 1 && b.terms().begin()->first != ParamExponents{}))
                throw std::invalid_argument("scale expects a constant polynomial");
            return a * b.coeff(ParamExponents{});
    }
    throw std::invalid_argument("unknown polynomial op");
}

std::complex<double> substitute_numeric(const ParameterPolynomial& p, const ParamAssignment& a) {
    // Exact evaluation when every value is representable; doubles are exact rationals.
    GaussianRational total;
    for (const auto& [e, c] : p.terms()) {
        GaussianRational term = c;
        for (int k = 0; k < kParamCount; ++k) {
            if (e[k] == 0) continue;
            if (!a.values[k])
                throw std::invalid_argument(std::string("no value assigned to ") + param_name(static_cast<Param>(k)));
            term *= ipow(GaussianRational(Rational(*a.values[k])), e[k]);
        }
        total += term;
    }
    return total.to_complex();
}

}  // namespace wres
