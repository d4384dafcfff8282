#pragma once

#include <homcost/costs.hpp>
#include <homcost/digraph.hpp>

#include <stdexcept>
#include <vector>

namespace homcost {

struct GadgetInstance {
    Digraph source;
    Digraph target;
    CostMatrix costs;
};

/// Target of the independent-set reduction: the k-cycle 0 -> ... -> k-1 -> 0
/// plus a vertex k dominated by every cycle vertex (reversed when `use_dual`).
inline auto cycle_plus_sink(int k, bool use_dual = false) -> Digraph
{
    if (k < 2)
        throw std::invalid_argument("gadget cycle length must be at least 2");
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i) {
        arcs.emplace_back(i, (i + 1) % k);
        arcs.emplace_back(i, k);
    }
    Digraph h(k + 1, arcs);
    return use_dual ? dual(h) : h;
}

/// Reduction from maximum independent set in `g` to MinHOM(H) for H the
/// k-cycle plus a dominated vertex.
///
/// Source layout: vertices of g keep their indices 0..|V(g)|-1; then each edge
/// e = uv, in input order, owns a block of k+1 vertices w_1..w_{k+1}. The block
/// carries the cycle w_1 -> w_2 -> ... -> w_k -> w_1 and the arcs w_1 -> u,
/// w_{k+1} -> u, w_2 -> v, w_{k+1} -> v. Every cost is 1 except that coloring
/// a vertex of g with k costs 2, so an optimal homomorphism keeps as many
/// g-vertices off k as possible, and those form an independent set.
inline auto build_mis_gadget(const UGraph & g, int k, bool use_dual = false) -> GadgetInstance
{
    if (k < 2)
        throw std::invalid_argument("gadget cycle length must be at least 2");
    const int base = g.size();
    const int n = base + (k + 1) * static_cast<int>(g.edge_count());

    std::vector<Arc> arcs;
    int block = base;
    for (auto [u, v] : g.edges()) {
        auto w = [&](int index) { return block + index - 1; };
        for (int i = 1; i <= k; ++i)
            arcs.emplace_back(w(i), w(i % k + 1));
        arcs.emplace_back(w(1), u);
        arcs.emplace_back(w(k + 1), u);
        arcs.emplace_back(w(2), v);
        arcs.emplace_back(w(k + 1), v);
        block += k + 1;
    }
    if (use_dual)
        for (auto & [x, y] : arcs)
            std::swap(x, y);

    IntMatrix costs(n, k + 1, 1);
    for (int p = 0; p < base; ++p)
        costs(p, k) = 2;
    return {Digraph(n, arcs), cycle_plus_sink(k, use_dual), CostMatrix(std::move(costs))};
}

/// The vertices of g not colored k. For a minimum-cost homomorphism of the
/// gadget this is a maximum independent set.
inline auto recover_independent_set(const Homomorphism & f, const UGraph & g, int k, bool use_dual = false)
    -> std::vector<int>
{
    const auto gadget = build_mis_gadget(g, k, use_dual);
    if (! is_homomorphism(gadget.source, gadget.target, f.image))
        throw std::invalid_argument("recover_independent_set: mapping is not a homomorphism of the gadget");
    std::vector<int> result;
    for (int p = 0; p < g.size(); ++p)
        if (f.image[p] != k)
            result.push_back(p);
    return result;
}

/// Extends costs on an induced subdigraph to the whole target: colors outside
/// the embedding cost n * beta + 1, where beta is the largest original cost,
/// so any homomorphism touching them is dearer than every homomorphism that
/// avoids them.
inline auto lift_costs_to_superdigraph(const Digraph & sub, const Digraph & super, const std::vector<int> & embedding,
    const CostMatrix & sub_costs, int source_size) -> CostMatrix
{
    check_dimensions(sub_costs, source_size, sub.size());
    if (static_cast<int>(embedding.size()) != sub.size())
        throw std::invalid_argument("embedding must map every vertex of the subdigraph");
    std::vector<int> preimage(super.size(), -1);
    for (int i = 0; i < sub.size(); ++i) {
        int image = embedding[i];
        if (image < 0 || image >= super.size() || preimage[image] != -1)
            throw std::invalid_argument("embedding is not injective into the superdigraph");
        preimage[image] = i;
    }
    for (int i = 0; i < sub.size(); ++i)
        for (int j = 0; j < sub.size(); ++j)
            if (i != j && sub.has_arc(i, j) != super.has_arc(embedding[i], embedding[j]))
                throw std::invalid_argument("embedding does not realise an induced subdigraph");

    const Cost padding = static_cast<Cost>(source_size) * sub_costs.max_entry() + 1;
    IntMatrix result(source_size, super.size(), padding);
    for (int u = 0; u < source_size; ++u)
        for (int i = 0; i < sub.size(); ++i)
            result(u, embedding[i]) = sub_costs(u, i);
    return CostMatrix(std::move(result));
}

}
