#include "wres/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace wres {

namespace {

// Positions 0..6 hold c̄1..c̄7, positions 7..13 hold c1..c7.
std::uint16_t packed(CliffordWord w) {
    return static_cast<std::uint16_t>(w.bar_mask | (static_cast<unsigned>(w.plain_mask) << kCliffordDim));
}

}  // namespace

int CliffordWord::grade() const { return std::popcount(bar_mask) + std::popcount(plain_mask); }

std::string CliffordWord::str() const {
    if (is_identity()) return "1";
    std::string s;
    auto emit = [&s](std::uint8_t mask, const char* prefix) {
        for (int i = 0; i < kCliffordDim; ++i)
            if (mask >> i & 1u) {
                if (!s.empty()) s += ' ';
                s += prefix + std::to_string(i + 1);
            }
    };
    emit(bar_mask, "cb");
    emit(plain_mask, "c");
    return s;
}

int word_product_sign(CliffordWord a, CliffordWord b) {
    unsigned pa = packed(a), pb = packed(b);
    // Each factor of b moves left past every factor of a sitting at a higher position.
    int swaps = 0;
    for (unsigned rest = pa >> 1; rest; rest >>= 1) swaps += std::popcount(rest & pb);
    // c·c = -1, c̄·c̄ = +1.
    swaps += std::popcount(static_cast<unsigned>(a.plain_mask & b.plain_mask));
    return (swaps & 1) ? -1 : 1;
}

CliffordElement::CliffordElement(const GaussianRational& scalar) { add_term(CliffordWord{}, scalar); }

CliffordElement::CliffordElement(CliffordWord w, const GaussianRational& c) { add_term(w, c); }

GaussianRational CliffordElement::coeff(CliffordWord w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void CliffordElement::add_term(CliffordWord w, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& b) {
    for (const auto& [w, c] : b.terms_) add_term(w, c);
    return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& b) {
    for (const auto& [w, c] : b.terms_) add_term(w, -c);
    return *this;
}

CliffordElement& CliffordElement::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
    CliffordElement r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            CliffordWord w{static_cast<std::uint8_t>(wa.bar_mask ^ wb.bar_mask),
                           static_cast<std::uint8_t>(wa.plain_mask ^ wb.plain_mask)};
            GaussianRational c = ca * cb;
            if (word_product_sign(wa, wb) < 0) c = -c;
            r.add_term(w, c);
        }
    return r;
}

std::string CliffordElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        if (!w.is_identity()) s += " " + w.str();
    }
    return s;
}

CliffordElement clifford_from_generator(GenKind kind, int index) {
    if (index < 1 || index > kCliffordDim)
        throw std::out_of_range("Clifford generator index " + std::to_string(index) + " outside 1..7");
    auto bit = static_cast<std::uint8_t>(1u << (index - 1));
    CliffordWord w = kind == GenKind::c ? CliffordWord{0, bit} : CliffordWord{bit, 0};
    return CliffordElement(w, GaussianRational(1));
}

CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b) { return a * b; }

GaussianRational word_trace(CliffordWord w) {
    return w.is_identity() ? GaussianRational(kSpinorTraceNorm) : GaussianRational();
}

GaussianRational clifford_trace(const CliffordElement& a) {
    return a.coeff(CliffordWord{}) * GaussianRational(kSpinorTraceNorm);
}

}  // namespace wres
