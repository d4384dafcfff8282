#pragma once

#include <homcost/acyclic_solver.hpp>
#include <homcost/classifier.hpp>
#include <homcost/cycle_solver.hpp>
#include <homcost/oracle.hpp>
#include <homcost/unicyclic.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace homcost {

/// The target puts the requested problem in its NP-hard/NP-complete regime
/// and no oracle fallback was allowed.
class NpRegimeRefused : public std::runtime_error {
public:
    NpRegimeRefused(Verdict verdict, Problem problem) :
        std::runtime_error("target is in the " + to_string(verdict.for_problem(problem)) + " regime ("
            + to_string(verdict.reason) + ")"),
        _verdict(std::move(verdict))
    {
    }

    auto verdict() const -> const Verdict & { return _verdict; }

private:
    Verdict _verdict;
};

namespace detail {

    /// Costs seen through a relabelling: column t of the result is column
    /// `original_of[t]` of `c`.
    inline auto permute_columns(const CostMatrix & c, const std::vector<int> & original_of) -> CostMatrix
    {
        IntMatrix result(c.rows(), c.cols());
        for (int u = 0; u < c.rows(); ++u)
            for (int t = 0; t < c.cols(); ++t)
                result(u, t) = c(u, original_of[t]);
        return CostMatrix(std::move(result));
    }

    inline void map_back(std::optional<Homomorphism> & h, const std::vector<int> & original_of)
    {
        if (h)
            for (auto & color : h->image)
                color = original_of[color];
    }
}

/// MinHOM / MaxHOM for a semicomplete target, routed by the classifier.
inline auto solve_cost(const Digraph & source, const Digraph & target, const CostMatrix & c, Sense sense,
    bool oracle_fallback = false) -> std::optional<Homomorphism>
{
    check_dimensions(c, source.size(), target.size());
    const auto verdict = classify(target);

    if (verdict.minhom != Complexity::poly) {
        if (! oracle_fallback)
            throw NpRegimeRefused(verdict, Problem::minhom);
        return sense == Sense::minimise ? oracle_min_cost(source, target, c) : oracle_max_cost(source, target, c);
    }

    std::optional<Homomorphism> result;
    if (verdict.reason == Reason::acyclic_tournament) {
        auto order = *acyclic_tournament_order(target);
        auto relabelled = detail::permute_columns(c, order);
        result = sense == Sense::minimise ? solve_min_acyclic(source, target.size(), relabelled)
                                          : solve_max_acyclic(source, target.size(), relabelled);
        detail::map_back(result, order);
    }
    else {
        auto cycle = *cycle_census(target).unique_cycle_vertices;
        auto relabelled = detail::permute_columns(c, cycle);
        result = sense == Sense::minimise ? solve_min_cycle(source, target.size(), relabelled)
                                          : solve_max_cycle(source, target.size(), relabelled);
        detail::map_back(result, cycle);
    }
    if (result && ! is_homomorphism(source, target, result->image))
        throw std::logic_error("solve_cost produced an invalid homomorphism");
    return result;
}

/// LHOM for a semicomplete target: acyclic targets go through the cost
/// encoding and the acyclic solver, unicyclic targets through peeling.
inline auto classify_lhom_dispatch(const Digraph & source, const Digraph & target, const ListAssignment & lists,
    bool oracle_fallback = false) -> std::optional<Homomorphism>
{
    lists.check(source.size(), target.size());
    const auto verdict = classify(target);
    if (verdict.lhom != Complexity::poly) {
        if (! oracle_fallback)
            throw NpRegimeRefused(verdict, Problem::lhom);
        return oracle_list(source, target, lists);
    }
    if (verdict.reason != Reason::acyclic_tournament)
        return solve_list_unicyclic(source, target, lists);

    auto order = *acyclic_tournament_order(target);
    std::vector<int> level_of(target.size());
    for (int level = 0; level < target.size(); ++level)
        level_of[order[level]] = level;
    std::vector<std::vector<int>> relabelled(lists.lists.size());
    for (std::size_t v = 0; v < lists.lists.size(); ++v)
        for (int color : lists.lists[v])
            relabelled[v].push_back(level_of[color]);
    auto result = solve_list_acyclic(source, target.size(), ListAssignment(std::move(relabelled)));
    detail::map_back(result, order);
    return result;
}

}
