#include "wres/curvature.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wres {

CurvatureTerm canonicalize_riemann(const CurvatureTerm& t) {
    const auto& s = t.slots;
    if (t.sign == 0 || s[0] == s[1] || s[2] == s[3]) return {s, 0};
    const std::array<std::pair<std::array<int, 4>, int>, 8> images{{
        {{s[0], s[1], s[2], s[3]}, 1},
        {{s[1], s[0], s[2], s[3]}, -1},
        {{s[0], s[1], s[3], s[2]}, -1},
        {{s[1], s[0], s[3], s[2]}, 1},
        {{s[2], s[3], s[0], s[1]}, 1},
        {{s[3], s[2], s[0], s[1]}, -1},
        {{s[2], s[3], s[1], s[0]}, -1},
        {{s[3], s[2], s[1], s[0]}, 1},
    }};
    auto best = std::min_element(images.begin(), images.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
    return {best->first, t.sign * best->second};
}

void add_scaled(RiemannLinear& acc, const RiemannLinear& x, const GaussianRational& c) {
    for (const auto& [k, v] : x) {
        auto [it, fresh] = acc.try_emplace(k, v * c);
        if (!fresh) {
            it->second += v * c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

RiemannLinear riemann_component(int a, int b, int c, int d) {
    CurvatureTerm t = canonicalize_riemann({{a, b, c, d}, 1});
    if (t.sign == 0) return {};
    auto k = t.slots;
    std::array<int, 4> sorted = k;
    std::sort(sorted.begin(), sorted.end());
    bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    const auto [w, x, y, z] = sorted;
    if (distinct && k == RiemannKey{w, z, x, y}) {
        // R_{wxyz} - R_{wyxz} + R_{wzxy} = 0
        return {{RiemannKey{w, y, x, z}, GaussianRational(t.sign)},
                {RiemannKey{w, x, y, z}, GaussianRational(-t.sign)}};
    }
    return {{k, GaussianRational(t.sign)}};
}

ParameterPolynomial reduce_to_scalar_curvature(const RiemannLinear& lin, int dim) {
    if (lin.empty()) return {};
    GaussianRational c;
    bool first = true;
    for (int t = 1; t <= dim; ++t)
        for (int l = t + 1; l <= dim; ++l) {
            auto it = lin.find(RiemannKey{t, l, t, l});
            GaussianRational v = it == lin.end() ? GaussianRational() : it->second;
            if (first) {
                c = v;
                first = false;
            } else if (v != c) {
                throw curvature_reduction_error("curvature combination is not a multiple of the scalar curvature");
            }
        }
    std::size_t diagonal = static_cast<std::size_t>(dim * (dim - 1) / 2);
    if (lin.size() != diagonal)
        throw curvature_reduction_error("curvature combination has off-diagonal components");
    return ParameterPolynomial::var(Param::SB) * (c / GaussianRational(2));
}

ParameterPolynomial contract_with_moment(const std::vector<WeightedCurvature>& terms, const PairingTensor& pattern,
                                         const std::vector<std::pair<int, int>>& traces, int dim) {
    std::set<int> labels;
    for (const auto& wc : terms) labels.insert(wc.term.slots.begin(), wc.term.slots.end());
    std::vector<int> label_list(labels.begin(), labels.end());
    auto position = [&](int label) {
        return static_cast<int>(std::lower_bound(label_list.begin(), label_list.end(), label) - label_list.begin());
    };

    RiemannLinear acc;
    const std::vector<std::vector<std::pair<int, int>>> no_pattern{{}};
    const auto& matchings = pattern.matchings.empty() ? no_pattern : pattern.matchings;
    for (const auto& m : matchings) {
        std::vector<std::pair<int, int>> deltas = m;
        deltas.insert(deltas.end(), traces.begin(), traces.end());
        std::vector<int> bound(label_list.size(), 0);
        std::vector<int> parent(label_list.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (auto [u, v] : deltas) {
            if (!labels.count(u) || !labels.count(v))
                throw std::invalid_argument("contraction references an index absent from the curvature term");
            ++bound[position(u)];
            ++bound[position(v)];
            parent[find(position(u))] = find(position(v));
        }
        for (int b : bound)
            if (b != 1) throw std::invalid_argument("unbalanced indices in curvature contraction");

        std::vector<int> roots;
        for (std::size_t k = 0; k < label_list.size(); ++k)
            if (find(static_cast<int>(k)) == static_cast<int>(k)) roots.push_back(static_cast<int>(k));
        std::vector<int> value(label_list.size(), 1);
        std::vector<int> odometer(roots.size(), 1);
        while (true) {
            for (std::size_t k = 0; k < label_list.size(); ++k) {
                int r = find(static_cast<int>(k));
                value[k] = odometer[std::find(roots.begin(), roots.end(), r) - roots.begin()];
            }
            for (const auto& wc : terms) {
                const auto& s = wc.term.slots;
                RiemannLinear comp = riemann_component(value[position(s[0])], value[position(s[1])],
                                                       value[position(s[2])], value[position(s[3])]);
                add_scaled(acc, comp, wc.coeff * GaussianRational(wc.term.sign));
            }
            std::size_t k = 0;
            while (k < odometer.size() && odometer[k] == dim) odometer[k++] = 1;
            if (k == odometer.size()) break;
            ++odometer[k];
        }
    }
    ParameterPolynomial out = reduce_to_scalar_curvature(acc, dim);
    GaussianRational w = pattern.matchings.empty() ? GaussianRational(1) : GaussianRational(pattern.weight);
    return out * w;
}

}  // namespace wres
