#pragma once

#include <homcost/cycle_census.hpp>
#include <homcost/digraph.hpp>

#include <ostream>
#include <stdexcept>
#include <string>

namespace homcost {

enum class Complexity { poly, np_complete, np_hard };

enum class Reason { acyclic_tournament, exact_c2, exact_c3, unicyclic_noncycle, multicycle };

enum class Problem { hom, lhom, minhom };

inline auto to_string(Complexity c) -> std::string
{
    switch (c) {
        case Complexity::poly: return "POLY";
        case Complexity::np_complete: return "NP_COMPLETE";
        case Complexity::np_hard: return "NP_HARD";
    }
    return "?";
}

inline auto to_string(Reason r) -> std::string
{
    switch (r) {
        case Reason::acyclic_tournament: return "ACYCLIC_TOURNAMENT";
        case Reason::exact_c2: return "EXACT_C2";
        case Reason::exact_c3: return "EXACT_C3";
        case Reason::unicyclic_noncycle: return "UNICYCLIC_NONCYCLE";
        case Reason::multicycle: return "MULTICYCLE";
    }
    return "?";
}

struct Verdict {
    Complexity hom = Complexity::poly;
    Complexity lhom = Complexity::poly;
    Complexity minhom = Complexity::poly;
    Reason reason = Reason::acyclic_tournament;
    /// Solver used for MinHOM when polynomial, else for LHOM, else "oracle".
    std::string solver;

    auto for_problem(Problem problem) const -> Complexity
    {
        switch (problem) {
            case Problem::hom: return hom;
            case Problem::lhom: return lhom;
            case Problem::minhom: return minhom;
        }
        return minhom;
    }

    friend auto operator==(const Verdict &, const Verdict &) -> bool = default;
};

/// Complexity of HOM, LHOM and MinHOM/MaxHOM for a semicomplete target:
/// HOM and LHOM are polynomial iff the target has at most one cycle; MinHOM
/// is polynomial iff the target is acyclic or is exactly a 2- or 3-cycle.
inline auto classify(const Digraph & h) -> Verdict
{
    if (! is_semicomplete(h))
        throw std::invalid_argument("classification covers semicomplete targets only");
    const auto census = cycle_census(h);

    Verdict v;
    if (! census.at_most_one_cycle) {
        v.hom = v.lhom = Complexity::np_complete;
        v.minhom = Complexity::np_hard;
        v.reason = Reason::multicycle;
        v.solver = "oracle";
    }
    else if (! census.unique_cycle_vertices) {
        v.reason = Reason::acyclic_tournament;
        v.solver = "acyclic";
    }
    else if (static_cast<int>(census.unique_cycle_vertices->size()) == h.size()) {
        v.reason = h.size() == 2 ? Reason::exact_c2 : Reason::exact_c3;
        v.solver = "cycle:" + std::to_string(h.size());
    }
    else {
        v.minhom = Complexity::np_hard;
        v.reason = Reason::unicyclic_noncycle;
        v.solver = "unicyclic-list";
    }
    return v;
}

inline void write_verdict(std::ostream & out, const Verdict & v)
{
    out << "hom=" << to_string(v.hom) << '\n'
        << "lhom=" << to_string(v.lhom) << '\n'
        << "minhom=" << to_string(v.minhom) << '\n'
        << "reason=" << to_string(v.reason) << '\n'
        << "solver=" << v.solver << '\n';
}

}
