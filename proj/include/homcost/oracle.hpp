#pragma once

#include <homcost/costs.hpp>
#include <homcost/digraph.hpp>
#include <homcost/errors.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace homcost {

/// Ground truth by exhaustive search. Nothing here is clever on purpose beyond
/// what is needed to finish: `enumerate_homs` walks every mapping, and the
/// optimisation/list oracles run a complete backtracking search.

inline constexpr std::uint64_t default_oracle_budget = 10'000'000;

/// HOMCOST_BUDGET overrides the default budget when set to a positive integer.
inline auto oracle_budget_from_env() -> std::uint64_t
{
    if (const char * value = std::getenv("HOMCOST_BUDGET")) {
        char * end = nullptr;
        auto parsed = std::strtoull(value, &end, 10);
        if (end != value && *end == '\0' && parsed > 0)
            return parsed;
    }
    return default_oracle_budget;
}

/// |V(H)|^|V(D)|, saturating at uint64 max.
inline auto mapping_count(int source_size, int target_size) -> std::uint64_t
{
    std::uint64_t total = 1;
    for (int i = 0; i < source_size; ++i) {
        if (target_size == 0)
            return 0;
        if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(target_size))
            return std::numeric_limits<std::uint64_t>::max();
        total *= static_cast<std::uint64_t>(target_size);
    }
    return total;
}

/// Every arc-preserving mapping, in lexicographic order of image vectors.
inline auto enumerate_homs(const Digraph & source, const Digraph & target,
    std::uint64_t budget = oracle_budget_from_env()) -> std::vector<std::vector<int>>
{
    const int n = source.size(), p = target.size();
    if (mapping_count(n, p) > budget)
        throw BudgetExceeded("enumerate_homs: " + std::to_string(p) + "^" + std::to_string(n)
            + " mappings exceed the budget of " + std::to_string(budget));
    std::vector<std::vector<int>> result;
    if (p == 0 && n > 0)
        return result;
    std::vector<int> image(n, 0);
    while (true) {
        if (is_homomorphism(source, target, image))
            result.push_back(image);
        int pos = n - 1;
        while (pos >= 0 && image[pos] == p - 1)
            image[pos--] = 0;
        if (pos < 0)
            break;
        ++image[pos];
    }
    return result;
}

enum class Sense { minimise, maximise };

/// All optimal homomorphisms (by full enumeration) and the optimum.
struct OptimalSet {
    Cost optimum = 0;
    std::vector<std::vector<int>> images;
};

inline auto oracle_optimal_set(const Digraph & source, const Digraph & target, const CostMatrix & c, Sense sense,
    std::uint64_t budget = oracle_budget_from_env()) -> std::optional<OptimalSet>
{
    check_dimensions(c, source.size(), target.size());
    auto homs = enumerate_homs(source, target, budget);
    if (homs.empty())
        return std::nullopt;
    OptimalSet result;
    bool first = true;
    for (auto & image : homs) {
        Cost cost = mapping_cost(c, image);
        bool better = sense == Sense::minimise ? cost < result.optimum : cost > result.optimum;
        if (first || better) {
            result.optimum = cost;
            result.images.clear();
            first = false;
        }
        if (cost == result.optimum)
            result.images.push_back(std::move(image));
    }
    return result;
}

namespace detail {

    /// Complete backtracking search minimising sum objective(u, f(u)) over
    /// homomorphisms with f(u) in the initial domain of u. Forward checking
    /// keeps domains consistent with assigned neighbours; a branch is cut
    /// when its optimistic bound cannot beat the incumbent. With
    /// `first_only`, the first solution found is returned.
    class HomSearch {
    public:
        HomSearch(const Digraph & source, const Digraph & target, const IntMatrix & objective,
            std::vector<std::uint64_t> domains, std::uint64_t budget, bool first_only) :
            _source(source),
            _objective(objective),
            _domains(std::move(domains)),
            _budget(budget),
            _first_only(first_only),
            _succ(target.size(), 0),
            _pred(target.size(), 0),
            _image(source.size(), -1)
        {
            if (target.size() > 64)
                throw BudgetExceeded("oracle search supports at most 64 target vertices");
            for (auto [i, j] : target.arcs()) {
                _succ[i] |= std::uint64_t{1} << j;
                _pred[j] |= std::uint64_t{1} << i;
            }
        }

        auto run() -> std::optional<std::vector<int>>
        {
            for (auto d : _domains)
                if (d == 0)
                    return std::nullopt;
            search(0, 0);
            return _best;
        }

    private:
        auto bound(Cost partial) const -> Cost
        {
            Cost total = partial;
            for (int v = 0; v < _source.size(); ++v)
                if (_image[v] == -1) {
                    Cost cheapest = std::numeric_limits<Cost>::max();
                    for (auto d = _domains[v]; d; d &= d - 1)
                        cheapest = std::min(cheapest, _objective(v, std::countr_zero(d)));
                    total += cheapest;
                }
            return total;
        }

        auto search(int depth, Cost partial) -> void
        {
            if (++_nodes > _budget)
                throw BudgetExceeded("oracle search exceeded the budget of " + std::to_string(_budget) + " nodes");
            if (_best && (_first_only || bound(partial) >= _best_cost))
                return;
            if (depth == _source.size()) {
                _best = _image;
                _best_cost = partial;
                return;
            }

            int var = -1;
            for (int v = 0; v < _source.size(); ++v)
                if (_image[v] == -1 && (var == -1 || std::popcount(_domains[v]) < std::popcount(_domains[var])))
                    var = v;

            std::vector<int> values;
            for (auto d = _domains[var]; d; d &= d - 1)
                values.push_back(std::countr_zero(d));
            std::stable_sort(values.begin(), values.end(),
                [&](int x, int y) { return _objective(var, x) < _objective(var, y); });

            const auto saved = _domains;
            for (int color : values) {
                _image[var] = color;
                _domains[var] = std::uint64_t{1} << color;
                bool consistent = true;
                for (int w : _source.out(var))
                    if (_image[w] == -1 && ! (_domains[w] &= _succ[color]))
                        consistent = false;
                for (int w : _source.in(var))
                    if (_image[w] == -1 && ! (_domains[w] &= _pred[color]))
                        consistent = false;
                // arcs into already-assigned vertices were enforced when those were assigned
                if (consistent)
                    search(depth + 1, partial + _objective(var, color));
                _domains = saved;
                _image[var] = -1;
                if (_best && _first_only)
                    return;
            }
        }

        const Digraph & _source;
        const IntMatrix & _objective;
        std::vector<std::uint64_t> _domains;
        std::uint64_t _budget;
        bool _first_only;
        std::vector<std::uint64_t> _succ, _pred;
        std::vector<int> _image;
        std::optional<std::vector<int>> _best;
        Cost _best_cost = 0;
        std::uint64_t _nodes = 0;
    };

    inline auto full_domains(int source_size, int target_size) -> std::vector<std::uint64_t>
    {
        std::uint64_t all = target_size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << target_size) - 1;
        return std::vector<std::uint64_t>(source_size, all);
    }
}

inline auto oracle_min_cost(const Digraph & source, const Digraph & target, const CostMatrix & c,
    std::uint64_t budget = oracle_budget_from_env()) -> std::optional<Homomorphism>
{
    check_dimensions(c, source.size(), target.size());
    detail::HomSearch search(source, target, c.entries(), detail::full_domains(source.size(), target.size()), budget, false);
    auto image = search.run();
    if (! image)
        return std::nullopt;
    return Homomorphism{*image, mapping_cost(c, *image)};
}

inline auto oracle_max_cost(const Digraph & source, const Digraph & target, const CostMatrix & c,
    std::uint64_t budget = oracle_budget_from_env()) -> std::optional<Homomorphism>
{
    check_dimensions(c, source.size(), target.size());
    IntMatrix negated(c.rows(), c.cols());
    for (int u = 0; u < c.rows(); ++u)
        for (int i = 0; i < c.cols(); ++i)
            negated(u, i) = -c(u, i);
    detail::HomSearch search(source, target, negated, detail::full_domains(source.size(), target.size()), budget, false);
    auto image = search.run();
    if (! image)
        return std::nullopt;
    return Homomorphism{*image, mapping_cost(c, *image)};
}

/// A list homomorphism if one exists. The returned cost is the number of
/// source vertices, matching the 1/2 list encoding.
inline auto oracle_list(const Digraph & source, const Digraph & target, const ListAssignment & lists,
    std::uint64_t budget = oracle_budget_from_env()) -> std::optional<Homomorphism>
{
    lists.check(source.size(), target.size());
    std::vector<std::uint64_t> domains(source.size(), 0);
    for (int v = 0; v < source.size(); ++v)
        for (int color : lists.lists[v])
            domains[v] |= std::uint64_t{1} << color;
    IntMatrix zero(source.size(), target.size(), 0);
    detail::HomSearch search(source, target, zero, std::move(domains), budget, true);
    auto image = search.run();
    if (! image)
        return std::nullopt;
    return Homomorphism{*image, source.size()};
}

struct IndependentSet {
    std::vector<int> members;
    int alpha = 0;
};

/// Maximum independent set by enumerating every vertex subset; among the
/// largest, the first in increasing bitmask order is returned.
inline auto oracle_mis(const UGraph & g, std::uint64_t budget = oracle_budget_from_env()) -> IndependentSet
{
    const int n = g.size();
    if (n >= 63 || (std::uint64_t{1} << n) > budget)
        throw BudgetExceeded("oracle_mis: 2^" + std::to_string(n) + " subsets exceed the budget");
    std::vector<std::uint64_t> neighbours(n, 0);
    for (auto [u, v] : g.edges()) {
        neighbours[u] |= std::uint64_t{1} << v;
        neighbours[v] |= std::uint64_t{1} << u;
    }
    std::uint64_t best = 0;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
        bool independent = true;
        for (auto rest = subset; rest && independent; rest &= rest - 1)
            if (neighbours[std::countr_zero(rest)] & subset)
                independent = false;
        if (independent && std::popcount(subset) > std::popcount(best))
            best = subset;
    }
    IndependentSet result;
    for (int v = 0; v < n; ++v)
        if (best >> v & 1)
            result.members.push_back(v);
    result.alpha = static_cast<int>(result.members.size());
    return result;
}

}
