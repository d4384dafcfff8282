#pragma once

#include <homcost/costs.hpp>
#include <homcost/digraph.hpp>

#include <algorithm>
#include <span>
#include <vector>

namespace homcost {

/// Homomorphic product D (x) H: one vertex (u, i) per source vertex u and
/// target color i, encoded as u * |V(H)| + i. Edges join (u, i)(v, j) when
/// uv is an arc of D but ij is not an arc of H, and join every two copies of
/// the same source vertex. Independent sets of size |V(D)| are exactly the
/// homomorphisms.
struct HomProduct {
    UGraph graph;
    /// c_i(u) + mu * |V(D)|, so that a heavier independent set is never smaller.
    std::vector<Cost> weight;
    Cost mu = 0;
    int source_size = 0;
    int target_size = 0;

    auto encode(int u, int i) const -> int { return u * target_size + i; }
    auto source_of(int x) const -> int { return x / target_size; }
    auto color_of(int x) const -> int { return x % target_size; }

    auto weight_of(std::span<const int> vertices) const -> Cost
    {
        Cost total = 0;
        for (int x : vertices)
            total += weight.at(x);
        return total;
    }
};

/// `target_loops` lists colors carrying a loop; such a color i keeps u_i v_i
/// non-adjacent for arcs uv. Digraph itself is loop-free, hence the side list.
inline auto homomorphic_product(const Digraph & source, const Digraph & target, const CostMatrix & c,
    std::span<const int> target_loops = {}) -> HomProduct
{
    check_dimensions(c, source.size(), target.size());
    const int n = source.size(), p = target.size();
    std::vector<char> loop(p, 0);
    for (int i : target_loops) {
        if (i < 0 || i >= p)
            throw std::invalid_argument("loop color out of range");
        loop[i] = 1;
    }
    auto target_arc = [&](int i, int j) { return i == j ? loop[i] != 0 : target.has_arc(i, j); };

    HomProduct result;
    result.source_size = n;
    result.target_size = p;
    result.mu = c.max_entry();

    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                edges.emplace_back(result.encode(u, i), result.encode(u, j));
    for (auto [u, v] : source.arcs())
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                if (! target_arc(i, j)) {
                    int a = result.encode(u, i), b = result.encode(v, j);
                    edges.emplace_back(std::min(a, b), std::max(a, b));
                }
    // a 2-cycle uv, vu in D can produce the same edge twice
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    result.graph = UGraph(n * p, std::move(edges));

    result.weight.resize(static_cast<std::size_t>(n) * p);
    for (int u = 0; u < n; ++u)
        for (int i = 0; i < p; ++i)
            result.weight[result.encode(u, i)] = c(u, i) + result.mu * n;
    return result;
}

/// Reads a homomorphism off an independent set with one vertex in every
/// S_x = {(x, i)}. Independence is checked against the product definition
/// directly, not against a prebuilt product graph.
inline auto indset_to_hom(std::span<const int> independent_set, const Digraph & source, const Digraph & target,
    const CostMatrix & c) -> Homomorphism
{
    check_dimensions(c, source.size(), target.size());
    const int n = source.size(), p = target.size();
    std::vector<int> image(n, -1);
    for (int x : independent_set) {
        if (x < 0 || x >= n * p)
            throw std::invalid_argument("product vertex " + std::to_string(x) + " out of range");
        int u = x / p;
        if (image[u] != -1)
            throw std::invalid_argument("not independent: two copies of source vertex " + std::to_string(u));
        image[u] = x % p;
    }
    for (int u = 0; u < n; ++u)
        if (image[u] == -1)
            throw std::invalid_argument("independent set misses source vertex " + std::to_string(u));
    for (auto [u, v] : source.arcs())
        if (! target.has_arc(image[u], image[v]))
            throw std::invalid_argument("not independent: (" + std::to_string(u) + "," + std::to_string(image[u])
                + ")(" + std::to_string(v) + "," + std::to_string(image[v]) + ") is an edge");
    return Homomorphism{image, mapping_cost(c, image)};
}

/// {(x, h(x))}: sorted encoded product vertices.
inline auto hom_to_indset(const Homomorphism & h, int target_size) -> std::vector<int>
{
    std::vector<int> result;
    result.reserve(h.image.size());
    for (int u = 0; u < static_cast<int>(h.image.size()); ++u)
        result.push_back(u * target_size + h.image[u]);
    return result;
}

inline auto is_independent(const UGraph & g, std::span<const int> vertices) -> bool
{
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (vertices[a] == vertices[b] || g.has_edge(vertices[a], vertices[b]))
                return false;
    return true;
}

}
