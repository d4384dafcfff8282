#pragma once

#include <homcost/costs.hpp>
#include <homcost/cycle_census.hpp>
#include <homcost/cycle_solver.hpp>
#include <homcost/digraph.hpp>

#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace homcost {

/// Normal form of a semicomplete digraph with exactly one directed cycle:
/// arcs i -> j for all i < j plus b -> a, where b = a + ell - 1. For a 3-cycle
/// the arc a -> b is dropped; for a 2-cycle it stays, as a <-> b is the cycle.
/// The cycle occupies a..b and runs a -> a+1 -> ... -> b -> a.
struct CanonicalUnicyclic {
    int p = 0;
    int a = 0;
    int cycle_length = 0;
    std::vector<int> to_canonical;
    std::vector<int> to_original;

    auto b() const -> int { return a + cycle_length - 1; }
};

inline auto canonical_unicyclic_target(int p, int a, int cycle_length) -> Digraph
{
    if (cycle_length < 2 || cycle_length > 3 || a < 0 || a + cycle_length > p)
        throw std::invalid_argument("invalid canonical unicyclic parameters");
    const int b = a + cycle_length - 1;
    std::vector<Arc> arcs;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (! (cycle_length == 3 && i == a && j == b))
                arcs.emplace_back(i, j);
    arcs.emplace_back(b, a);
    return Digraph(p, arcs);
}

inline auto canonicalize_unicyclic(const Digraph & h) -> CanonicalUnicyclic
{
    if (! is_semicomplete(h))
        throw std::invalid_argument("target is not semicomplete");
    auto census = cycle_census(h);
    if (! census.at_most_one_cycle)
        throw std::invalid_argument("target has two or more cycles");
    if (! census.unique_cycle_vertices)
        throw std::invalid_argument("target is acyclic");
    const auto & cycle = *census.unique_cycle_vertices;

    CanonicalUnicyclic result;
    result.p = h.size();
    result.cycle_length = static_cast<int>(cycle.size());
    result.to_canonical.assign(h.size(), -1);

    // the condensation of a semicomplete digraph is a transitive tournament,
    // so its topological order is unique
    int next = 0;
    for (const auto & component : strong_components(h).components) {
        if (component.size() == 1) {
            result.to_canonical[component.front()] = next++;
            continue;
        }
        result.a = next;
        for (int v : cycle)
            result.to_canonical[v] = next++;
    }
    result.to_original.assign(h.size(), -1);
    for (int v = 0; v < h.size(); ++v)
        result.to_original[result.to_canonical[v]] = v;

    if (relabel(h, result.to_canonical) != canonical_unicyclic_target(result.p, result.a, result.cycle_length))
        throw std::logic_error("canonicalize_unicyclic: relabelled target does not match the normal form");
    return result;
}

/// Working state of the peeling phase, in canonical colors.
struct PeelState {
    std::vector<char> alive;
    /// membership flags, lists[v][color]
    std::vector<std::vector<char>> lists;
    std::vector<int> image;
    bool failed = false;
};

/// Repeatedly removes a vertex with (a) in-degree zero and a listed color
/// below a, fixing it to its smallest color and removing colors <= it from
/// its out-neighbours' lists, or (b) out-degree zero and a listed color above
/// b, fixing it to its largest color and removing colors >= it from its
/// in-neighbours' lists. Degrees count live vertices only. Vertices are
/// scanned in `scan_order` (identity when empty); rule (a) is tried first.
inline auto peel_to_cycle_residue(const Digraph & source, const CanonicalUnicyclic & canon,
    std::vector<std::vector<char>> canonical_lists, std::span<const int> scan_order = {}) -> PeelState
{
    const int n = source.size(), p = canon.p, a = canon.a, b = canon.b();
    std::vector<int> order(scan_order.begin(), scan_order.end());
    if (order.empty()) {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
    }
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("peel scan order must list every vertex");

    PeelState state{std::vector<char>(n, 1), std::move(canonical_lists), std::vector<int>(n, -1), false};
    std::vector<int> indeg(n), outdeg(n);
    for (int v = 0; v < n; ++v) {
        indeg[v] = source.in_degree(v);
        outdeg[v] = source.out_degree(v);
    }

    auto smallest = [&](int v) {
        for (int i = 0; i < p; ++i)
            if (state.lists[v][i])
                return i;
        return -1;
    };
    auto largest = [&](int v) {
        for (int i = p - 1; i >= 0; --i)
            if (state.lists[v][i])
                return i;
        return -1;
    };
    auto remove = [&](int v) {
        state.alive[v] = 0;
        for (int w : source.out(v))
            --indeg[w];
        for (int w : source.in(v))
            --outdeg[w];
    };

    while (true) {
        int chosen = -1;
        bool rule_a = true;
        for (int v : order)
            if (state.alive[v] && indeg[v] == 0 && smallest(v) != -1 && smallest(v) < a) {
                chosen = v;
                break;
            }
        if (chosen == -1) {
            rule_a = false;
            for (int v : order)
                if (state.alive[v] && outdeg[v] == 0 && largest(v) > b) {
                    chosen = v;
                    break;
                }
        }
        if (chosen == -1)
            return state;

        if (rule_a) {
            int color = smallest(chosen);
            state.image[chosen] = color;
            for (int w : source.out(chosen)) {
                if (! state.alive[w])
                    continue;
                for (int j = 0; j <= color; ++j)
                    state.lists[w][j] = 0;
                if (smallest(w) == -1)
                    state.failed = true;
            }
        }
        else {
            int color = largest(chosen);
            state.image[chosen] = color;
            for (int w : source.in(chosen)) {
                if (! state.alive[w])
                    continue;
                for (int j = color; j < p; ++j)
                    state.lists[w][j] = 0;
                if (smallest(w) == -1)
                    state.failed = true;
            }
        }
        remove(chosen);
        if (state.failed)
            return state;
    }
}

/// List homomorphism to a semicomplete digraph with exactly one cycle. After
/// peeling, every live vertex must take a cycle color; each weak component of
/// the residue then has at most ell colorings (rotations), and one compatible
/// with the lists is accepted. The returned cost is the number of vertices,
/// i.e. the cost under the 1/2 list encoding.
inline auto solve_list_unicyclic(const Digraph & source, const Digraph & target, const ListAssignment & lists,
    std::span<const int> scan_order = {}) -> std::optional<Homomorphism>
{
    lists.check(source.size(), target.size());
    const auto canon = canonicalize_unicyclic(target);
    if (lists.has_empty_list())
        return std::nullopt;

    const int n = source.size(), ell = canon.cycle_length, a = canon.a;
    std::vector<std::vector<char>> canonical_lists(n, std::vector<char>(canon.p, 0));
    for (int v = 0; v < n; ++v)
        for (int color : lists.lists[v])
            canonical_lists[v][canon.to_canonical[color]] = 1;

    auto state = peel_to_cycle_residue(source, canon, std::move(canonical_lists), scan_order);
    if (state.failed)
        return std::nullopt;

    std::vector<int> residue, index_in_residue(n, -1);
    for (int v = 0; v < n; ++v)
        if (state.alive[v]) {
            index_in_residue[v] = static_cast<int>(residue.size());
            residue.push_back(v);
        }
    std::vector<Arc> residue_arcs;
    for (int v : residue)
        for (int w : source.out(v))
            if (state.alive[w])
                residue_arcs.emplace_back(index_in_residue[v], index_in_residue[w]);
    const Digraph residue_graph(static_cast<int>(residue.size()), residue_arcs);

    for (const auto & component : weak_components(residue_graph)) {
        auto base = propagate_cycle_coloring(residue_graph, ell, component.front(), 0);
        if (! base)
            return std::nullopt;
        bool placed = false;
        for (int shift = 0; shift < ell && ! placed; ++shift) {
            placed = true;
            for (int r : component)
                if (! state.lists[residue[r]][a + ((*base)[r] + shift) % ell]) {
                    placed = false;
                    break;
                }
            if (placed)
                for (int r : component)
                    state.image[residue[r]] = a + ((*base)[r] + shift) % ell;
        }
        if (! placed)
            return std::nullopt;
    }

    Homomorphism result{std::vector<int>(n), n};
    for (int v = 0; v < n; ++v)
        result.image[v] = canon.to_original[state.image[v]];
    if (! is_homomorphism(source, target, result.image) || ! respects_lists(lists, result.image))
        throw std::logic_error("solve_list_unicyclic produced an invalid list homomorphism");
    return result;
}

}
