#include "wres/boundary_value.hpp"

#include "wres/sphere_moments.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wres {

namespace {

constexpr unsigned kSlotBits = 6;
constexpr unsigned kSlotMask = (1u << kSlotBits) - 1;

}  // namespace

Atom make_atom(AtomKind kind, int a, int b, int c, int d) {
    for (int v : {a, b, c, d})
        if (v < 0 || v > static_cast<int>(kSlotMask)) throw std::out_of_range("atom index out of range");
    return (static_cast<Atom>(kind) << 24) | (static_cast<Atom>(a) << 18) | (static_cast<Atom>(b) << 12) |
           (static_cast<Atom>(c) << 6) | static_cast<Atom>(d);
}

AtomKind atom_kind(Atom a) { return static_cast<AtomKind>(a >> 24); }

std::array<int, 4> atom_indices(Atom a) {
    return {static_cast<int>((a >> 18) & kSlotMask), static_cast<int>((a >> 12) & kSlotMask),
            static_cast<int>((a >> 6) & kSlotMask), static_cast<int>(a & kSlotMask)};
}

std::string atom_name(Atom a) {
    auto ix = atom_indices(a);
    std::ostringstream os;
    switch (atom_kind(a)) {
        case AtomKind::param: return param_name(static_cast<Param>(ix[0]));
        case AtomKind::xi: os << "xi" << ix[0]; break;
        case AtomKind::rb: os << "R[" << ix[0] << ix[1] << ix[2] << ix[3] << "]"; break;
        case AtomKind::rm: os << "RM[" << ix[0] << ix[1] << ix[2] << ix[3] << "]"; break;
        case AtomKind::grad_v: os << "N[" << ix[0] << ix[1] << "]"; break;
    }
    return os.str();
}

Monomial Monomial::of(Atom a, unsigned e) {
    Monomial m;
    if (e > 0) m.f_.emplace_back(a, e);
    return m;
}

unsigned Monomial::exponent(Atom a) const {
    auto it = std::lower_bound(f_.begin(), f_.end(), a, [](const auto& x, Atom v) { return x.first < v; });
    return (it != f_.end() && it->first == a) ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.f_.begin(), j = b.f_.begin();
    while (i != a.f_.end() || j != b.f_.end()) {
        if (j == b.f_.end() || (i != a.f_.end() && i->first < j->first)) {
            r.f_.push_back(*i++);
        } else if (i == a.f_.end() || j->first < i->first) {
            r.f_.push_back(*j++);
        } else {
            r.f_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return r;
}

std::string Monomial::str() const {
    if (f_.empty()) return "1";
    std::string s;
    for (const auto& [a, e] : f_) {
        if (!s.empty()) s += "·";
        s += atom_name(a);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

BoundarySymbolValue::BoundarySymbolValue(const GaussianRational& c) : BoundarySymbolValue(PoleLimitedRational(c)) {}

BoundarySymbolValue::BoundarySymbolValue(const PoleLimitedRational& f) { add(TermKey{}, f); }

BoundarySymbolValue BoundarySymbolValue::atom(Atom a) { return term({}, Monomial::of(a), GaussianRational(1)); }

BoundarySymbolValue BoundarySymbolValue::term(CliffordWord w, Monomial m, PoleLimitedRational f) {
    BoundarySymbolValue v;
    v.add(TermKey{w, std::move(m)}, f);
    return v;
}

BoundarySymbolValue BoundarySymbolValue::from(const CliffordElement& e) {
    BoundarySymbolValue v;
    for (const auto& [w, c] : e.terms()) v.add(TermKey{w, {}}, c);
    return v;
}

BoundarySymbolValue BoundarySymbolValue::from(const RiemannLinear& lin, AtomKind kind) {
    BoundarySymbolValue v;
    for (const auto& [k, c] : lin) v.add(TermKey{{}, Monomial::of(make_atom(kind, k[0], k[1], k[2], k[3]))}, c);
    return v;
}

BoundarySymbolValue BoundarySymbolValue::from(const ParameterPolynomial& p) {
    BoundarySymbolValue v;
    for (const auto& [e, c] : p.terms()) {
        Monomial m;
        for (int k = 0; k < kParamCount; ++k) m = m * Monomial::of(param_atom(static_cast<Param>(k)), e[k]);
        v.add(TermKey{{}, m}, c);
    }
    return v;
}

std::vector<BoundarySymbolTerm> BoundarySymbolValue::term_list() const {
    std::vector<BoundarySymbolTerm> out;
    for (const auto& [k, f] : terms_) out.push_back({f, k.mono, k.word});
    return out;
}

void BoundarySymbolValue::add(const TermKey& k, const PoleLimitedRational& f) {
    if (f.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, f);
    if (fresh) return;
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
}

BoundarySymbolValue& BoundarySymbolValue::operator+=(const BoundarySymbolValue& b) {
    for (const auto& [k, f] : b.terms_) add(k, f);
    return *this;
}

BoundarySymbolValue& BoundarySymbolValue::operator-=(const BoundarySymbolValue& b) {
    for (const auto& [k, f] : b.terms_) add(k, -f);
    return *this;
}

BoundarySymbolValue& BoundarySymbolValue::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, f] : terms_) f *= c;
    return *this;
}

BoundarySymbolValue operator*(const BoundarySymbolValue& a, const BoundarySymbolValue& b) {
    BoundarySymbolValue r;
    for (const auto& [ka, fa] : a.terms_)
        for (const auto& [kb, fb] : b.terms_) {
            int sign = word_product_sign(ka.word, kb.word);
            CliffordWord w{static_cast<std::uint8_t>(ka.word.bar_mask ^ kb.word.bar_mask),
                           static_cast<std::uint8_t>(ka.word.plain_mask ^ kb.word.plain_mask)};
            r.add(TermKey{w, ka.mono * kb.mono}, fa * fb * GaussianRational(sign));
        }
    return r;
}

BoundarySymbolValue BoundarySymbolValue::pi_plus() const {
    BoundarySymbolValue r;
    for (const auto& [k, f] : terms_) r.add(k, wres::pi_plus(f));
    return r;
}

BoundarySymbolValue BoundarySymbolValue::d_xi_n(unsigned order) const {
    BoundarySymbolValue r;
    for (const auto& [k, f] : terms_) r.add(k, rf_derivative(f, order));
    return r;
}

BoundarySymbolValue BoundarySymbolValue::inverse() const {
    if (terms_.size() != 1 || !terms_.begin()->first.word.is_identity() || !terms_.begin()->first.mono.is_one())
        throw arithmetic_error("inverse needs a pure ξn-rational scalar, got " + str());
    return BoundarySymbolValue(terms_.begin()->second.inverse());
}

std::map<Monomial, PoleLimitedRational> BoundarySymbolValue::trace() const {
    std::map<Monomial, PoleLimitedRational> out;
    for (const auto& [k, f] : terms_) {
        GaussianRational t = word_trace(k.word);
        if (t.is_zero()) continue;
        auto& slot = out[k.mono];
        slot += f * t;
        if (slot.is_zero()) out.erase(k.mono);
    }
    return out;
}

BoundarySymbolValue BoundarySymbolValue::sphere_reduced() const {
    const Atom last = xi_atom(kBoundaryDim);
    BoundarySymbolValue out;
    std::vector<std::pair<TermKey, PoleLimitedRational>> work(terms_.begin(), terms_.end());
    while (!work.empty()) {
        auto [key, f] = std::move(work.back());
        work.pop_back();
        unsigned e = key.mono.exponent(last);
        if (e < 2) {
            out.add(key, f);
            continue;
        }
        // ξ6^e = ξ6^{e-2} (1 - Σ_{k<6} ξk²)
        Monomial rest;
        for (const auto& [a, x] : key.mono.factors()) rest = rest * Monomial::of(a, a == last ? x - 2 : x);
        work.emplace_back(TermKey{key.word, rest}, f);
        for (int k = 1; k < kBoundaryDim; ++k)
            work.emplace_back(TermKey{key.word, rest * Monomial::of(xi_atom(k), 2)}, -f);
    }
    return out;
}

std::string BoundarySymbolValue::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, f] : terms_) {
        if (!s.empty()) s += " + ";
        s += "[" + f.str() + "]";
        if (!k.mono.is_one()) s += " · " + k.mono.str();
        if (!k.word.is_identity()) s += " · " + k.word.str();
    }
    return s;
}

}  // namespace wres
