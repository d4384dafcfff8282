#pragma once

// Random instance generators and small independent oracles shared by the
// unit and acceptance suites.

#include <homcost/homcost.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace homcost::testing {

using Rng = std::mt19937_64;

inline auto uniform(Rng & rng, int lo, int hi) -> int
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline auto coin(Rng & rng, double p) -> bool
{
    return std::bernoulli_distribution(p)(rng);
}

inline auto random_digraph(Rng & rng, int n, double density) -> Digraph
{
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng, density))
                arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

/// Arcs only from lower to higher position of a random permutation.
inline auto random_dag(Rng & rng, int n, double density) -> Digraph
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Arc> arcs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng, density))
                arcs.emplace_back(perm[a], perm[b]);
    return Digraph(n, arcs);
}

inline auto random_ugraph(Rng & rng, int n, double density) -> UGraph
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng, density))
                edges.emplace_back(u, v);
    return UGraph(n, edges);
}

/// Each pair gets one of: u->v, v->u, both.
inline auto random_semicomplete(Rng & rng, int n, double two_cycle_rate) -> Digraph
{
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng, two_cycle_rate)) {
                arcs.emplace_back(u, v);
                arcs.emplace_back(v, u);
            }
            else if (coin(rng, 0.5))
                arcs.emplace_back(u, v);
            else
                arcs.emplace_back(v, u);
        }
    return Digraph(n, arcs);
}

inline auto random_costs(Rng & rng, int rows, int cols, int max_cost) -> CostMatrix
{
    IntMatrix m(rows, cols);
    for (int u = 0; u < rows; ++u)
        for (int i = 0; i < cols; ++i)
            m(u, i) = uniform(rng, 1, max_cost);
    return CostMatrix(std::move(m));
}

inline auto random_lists(Rng & rng, int n, int p, double keep) -> ListAssignment
{
    std::vector<std::vector<int>> lists(n);
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < p; ++i)
            if (coin(rng, keep))
                lists[v].push_back(i);
        if (lists[v].empty())
            lists[v].push_back(uniform(rng, 0, p - 1));
    }
    return ListAssignment(std::move(lists));
}

/// reach[u][v]: a directed path of >= 1 arc from u to v, by search from u.
inline auto reachability(const Digraph & g) -> std::vector<std::vector<char>>
{
    const int n = g.size();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int s = 0; s < n; ++s) {
        std::vector<int> frontier(g.out(s).begin(), g.out(s).end());
        while (! frontier.empty()) {
            int v = frontier.back();
            frontier.pop_back();
            if (reach[s][v])
                continue;
            reach[s][v] = 1;
            for (int w : g.out(v))
                frontier.push_back(w);
        }
    }
    return reach;
}

/// Every directed simple cycle, each as its vertex set, by trying every
/// ordering of every vertex subset of size >= 2.
inline auto enumerate_cycles(const Digraph & g) -> std::set<std::vector<int>>
{
    const int n = g.size();
    std::set<std::vector<int>> cycles;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1)
                vs.push_back(v);
        if (vs.size() < 2)
            continue;
        // fix the smallest vertex first so each cyclic order is tried once
        std::vector<int> rest(vs.begin() + 1, vs.end());
        do {
            std::vector<int> cyc{vs.front()};
            cyc.insert(cyc.end(), rest.begin(), rest.end());
            bool ok = true;
            for (std::size_t i = 0; i < cyc.size() && ok; ++i)
                ok = g.has_arc(cyc[i], cyc[(i + 1) % cyc.size()]);
            if (ok)
                cycles.insert(cyc);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return cycles;
}

/// Smallest adjacency bit string over all vertex relabellings.
inline auto canonical_code(const Digraph & g) -> std::vector<char>
{
    const int n = g.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> best;
    do {
        std::vector<char> code(static_cast<std::size_t>(n) * n, 0);
        for (auto [u, v] : g.arcs())
            code[perm[u] * n + perm[v]] = 1;
        if (best.empty() || code < best)
            best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// All semicomplete digraphs on n vertices, one per isomorphism class.
inline auto semicomplete_up_to_iso(int n) -> std::vector<Digraph>
{
    std::vector<Arc> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::size_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        total *= 3;
    std::map<std::vector<char>, Digraph> classes;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<Arc> arcs;
        auto rest = code;
        for (auto [u, v] : pairs) {
            switch (rest % 3) {
                case 0: arcs.emplace_back(u, v); break;
                case 1: arcs.emplace_back(v, u); break;
                default:
                    arcs.emplace_back(u, v);
                    arcs.emplace_back(v, u);
            }
            rest /= 3;
        }
        Digraph g(n, arcs);
        classes.emplace(canonical_code(g), g);
    }
    std::vector<Digraph> result;
    for (auto & [code, g] : classes)
        result.push_back(g);
    return result;
}

/// Random transitive DAG: the closure of a random DAG.
inline auto random_transitive_dag(Rng & rng, int n, double density) -> Digraph
{
    return transitive_closure(random_dag(rng, n, density));
}

/// Exhaustive maximum over all antichains of a small weighted order.
inline auto brute_force_max_antichain(const WeightedPoset & poset) -> Cost
{
    const int n = poset.order.size();
    Cost best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool antichain = true;
        Cost w = 0;
        for (int u = 0; u < n && antichain; ++u) {
            if (! (mask >> u & 1))
                continue;
            w += poset.weight[u];
            for (int v = 0; v < n; ++v)
                if ((mask >> v & 1) && poset.order.has_arc(u, v))
                    antichain = false;
        }
        if (antichain)
            best = std::max(best, w);
    }
    return best;
}

/// Exhaustive largest independent set size and heaviest independent set weight.
inline auto brute_force_independent_sets(const UGraph & g, const std::vector<Cost> & weight) -> std::pair<int, Cost>
{
    const int n = g.size();
    int largest = 0;
    Cost heaviest = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (auto [u, v] : g.edges())
            if ((mask >> u & 1) && (mask >> v & 1)) {
                independent = false;
                break;
            }
        if (! independent)
            continue;
        Cost w = 0;
        int count = 0;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) {
                w += weight[v];
                ++count;
            }
        largest = std::max(largest, count);
        heaviest = std::max(heaviest, w);
    }
    return {largest, heaviest};
}

inline auto is_connected(const UGraph & g) -> bool
{
    if (g.size() == 0)
        return true;
    std::vector<char> seen(g.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (! stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbours(v))
            if (! seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.size();
}

}
