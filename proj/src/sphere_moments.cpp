#include "wres/sphere_moments.hpp"

#include <stdexcept>

namespace wres {

unsigned SphereMonomial::degree() const {
    unsigned d = 0;
    for (unsigned e : exponents) d += e;
    return d;
}

Rational sphere_moment(const SphereMonomial& m) {
    // Π (2a_i - 1)!! / Π_{k<A} (d + 2k) for exponents 2a_i, A = Σ a_i.
    const auto dim = static_cast<long>(m.exponents.size());
    mpz_class num = 1, den = 1;
    unsigned half = 0;
    for (unsigned e : m.exponents) {
        if (e % 2) return Rational(0);
        for (long k = static_cast<long>(e) - 1; k > 1; k -= 2) num *= k;
        half += e / 2;
    }
    for (unsigned k = 0; k < half; ++k) den *= dim + 2 * static_cast<long>(k);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational pairing_weight(unsigned half_degree, int dim) {
    if (static_cast<int>(half_degree) > dim) throw std::invalid_argument("pairing weight: degree exceeds dimension");
    std::vector<unsigned> e(dim, 0);
    for (unsigned k = 0; k < half_degree; ++k) e[k] = 2;
    return sphere_moment(SphereMonomial(e));
}

namespace {

void matchings(std::vector<int> rest, std::vector<std::pair<int, int>>& cur,
               std::vector<std::vector<std::pair<int, int>>>& out) {
    if (rest.empty()) {
        out.push_back(cur);
        return;
    }
    int first = rest.front();
    for (std::size_t k = 1; k < rest.size(); ++k) {
        std::vector<int> next;
        for (std::size_t t = 1; t < rest.size(); ++t)
            if (t != k) next.push_back(rest[t]);
        cur.emplace_back(first, rest[k]);
        matchings(next, cur, out);
        cur.pop_back();
    }
}

}  // namespace

PairingTensor pairing_tensor(const std::vector<int>& labels, int dim) {
    if (labels.size() % 2) throw std::invalid_argument("pairing tensor needs an even number of indices");
    PairingTensor t;
    t.weight = pairing_weight(static_cast<unsigned>(labels.size() / 2), dim);
    std::vector<std::pair<int, int>> cur;
    matchings(labels, cur, t.matchings);
    return t;
}

}  // namespace wres
