#pragma once

#include "wres/scalars.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace wres {

inline constexpr int kCliffordDim = 7;

enum class GenKind { c, cbar };

// Canonical word: c̄ factors by ascending index, then c factors by ascending index.
// Bit (i-1) of a mask stands for generator index i.
struct CliffordWord {
    std::uint8_t bar_mask = 0;
    std::uint8_t plain_mask = 0;

    bool is_identity() const { return bar_mask == 0 && plain_mask == 0; }
    int grade() const;
    std::string str() const;  // "cb1 cb3 c2 c7"; "1" for the identity

    friend auto operator<=>(const CliffordWord&, const CliffordWord&) = default;
};

// a·b = sign · (a xor b), sign in {+1, -1}.
int word_product_sign(CliffordWord a, CliffordWord b);

class CliffordElement {
public:
    using Terms = std::map<CliffordWord, GaussianRational>;

    CliffordElement() = default;
    CliffordElement(const GaussianRational& scalar);
    CliffordElement(CliffordWord w, const GaussianRational& c);

    static CliffordElement identity() { return CliffordElement(GaussianRational(1)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    GaussianRational coeff(CliffordWord w) const;

    void add_term(CliffordWord w, const GaussianRational& c);

    CliffordElement& operator+=(const CliffordElement& b);
    CliffordElement& operator-=(const CliffordElement& b);
    CliffordElement& operator*=(const GaussianRational& c);

    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
    friend CliffordElement operator*(CliffordElement a, const GaussianRational& c) { return a *= c; }
    friend CliffordElement operator*(const GaussianRational& c, CliffordElement a) { return a *= c; }
    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);

    friend bool operator==(const CliffordElement& a, const CliffordElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const CliffordElement& a, const CliffordElement& b) { return !(a == b); }

    std::string str() const;

private:
    Terms terms_;  // no zero coefficients
};

CliffordElement clifford_from_generator(GenKind kind, int index);
CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b);

// trace[id] = 8; every non-identity word has trace 0.
inline constexpr long kSpinorTraceNorm = 8;
GaussianRational clifford_trace(const CliffordElement& a);
GaussianRational word_trace(CliffordWord w);

}  // namespace wres
