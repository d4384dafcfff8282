#pragma once

#include <homcost/costs.hpp>

namespace homcost {

/// c'(u, i) = M - c(u, i) with M = 1 + max entry. Turns a maximisation
/// problem into a minimisation one (and back) without changing optimal maps.
inline auto max_min_transform(const CostMatrix & c) -> CostMatrix
{
    const Cost m = 1 + c.max_entry();
    IntMatrix result(c.rows(), c.cols());
    for (int u = 0; u < c.rows(); ++u)
        for (int i = 0; i < c.cols(); ++i)
            result(u, i) = m - c(u, i);
    return CostMatrix(std::move(result));
}

/// Adds M' = 1 - min entry to every entry when some entry is below 1.
inline auto shift_nonnegative(const IntMatrix & c) -> CostMatrix
{
    const Cost min = c.min_entry();
    const Cost shift = min < 1 ? 1 - min : 0;
    IntMatrix result(c.rows(), c.cols());
    for (int u = 0; u < c.rows(); ++u)
        for (int i = 0; i < c.cols(); ++i)
            result(u, i) = c(u, i) + shift;
    return CostMatrix(std::move(result));
}

/// Cost 1 on listed colors, 2 elsewhere. A list homomorphism exists iff the
/// minimum cost under these costs equals the number of source vertices.
inline auto lists_to_costs(const ListAssignment & lists, int target_size) -> CostMatrix
{
    lists.check(lists.size(), target_size);
    IntMatrix result(lists.size(), target_size, 2);
    for (int u = 0; u < lists.size(); ++u)
        for (int i : lists.lists[u])
            result(u, i) = 1;
    return CostMatrix(std::move(result));
}

}
