#pragma once

#include <homcost/homcost.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace homcost::cli {

enum ExitCode : int { solved = 0, no_homomorphism = 1, input_error = 2, np_refused = 3 };

namespace detail {

    /// Runs a reader, naming `path` in any parse error it raises.
    template <typename Read_>
    auto read_named(const std::string & path, Read_ && read)
    {
        try {
            return read();
        }
        catch (const ParseError & e) {
            throw ParseError(0, path + ": " + e.what());
        }
    }

    inline auto read_digraph(const std::string & path) -> Digraph
    {
        return read_named(path, [&] { return read_digraph_file(path); });
    }

    inline auto read_ugraph(const std::string & path) -> UGraph
    {
        return read_named(path, [&] { return read_ugraph_file(path); });
    }

    inline auto read_costs_file(const std::string & path, int rows, int cols) -> CostMatrix
    {
        std::ifstream in(path);
        if (! in)
            throw std::runtime_error("cannot open " + path);
        return read_named(path, [&] { return parse_costs(in, rows, cols); });
    }

    inline auto read_lists_file(const std::string & path, int rows, int cols) -> ListAssignment
    {
        std::ifstream in(path);
        if (! in)
            throw std::runtime_error("cannot open " + path);
        return read_named(path, [&] { return parse_lists(in, rows, cols); });
    }

    template <typename Write_>
    void write_file(const std::string & path, Write_ && write)
    {
        std::ofstream out(path);
        if (! out)
            throw std::runtime_error("cannot write " + path);
        write(out);
    }

    inline auto report(std::ostream & out, const std::optional<Homomorphism> & h) -> int
    {
        if (! h) {
            out << "no homomorphism\n";
            return no_homomorphism;
        }
        write_solution(out, *h);
        return solved;
    }

    inline auto parse_problem(const std::string & name) -> Problem
    {
        if (name == "hom")
            return Problem::hom;
        if (name == "lhom")
            return Problem::lhom;
        return Problem::minhom;
    }

    /// MinHOM/MaxHOM from the command line. Non-semicomplete targets (e.g.
    /// gadget targets with k >= 4) are only reachable through the oracle.
    inline auto solve_any(const Digraph & d, const Digraph & h, const CostMatrix & c, Sense sense, bool fallback)
        -> std::optional<Homomorphism>
    {
        if (fallback && ! is_semicomplete(h))
            return sense == Sense::minimise ? oracle_min_cost(d, h, c) : oracle_max_cost(d, h, c);
        return solve_cost(d, h, c, sense, fallback);
    }

    inline auto list_any(const Digraph & d, const Digraph & h, const ListAssignment & lists, bool fallback)
        -> std::optional<Homomorphism>
    {
        if (fallback && ! is_semicomplete(h))
            return oracle_list(d, h, lists);
        return classify_lhom_dispatch(d, h, lists, fallback);
    }

    // `verify` compares against the oracle; refusals are not disagreements.
    struct Check {
        bool agree = true;
        bool refused = false;
        std::string detail;
    };

    inline auto compare_costs(const Digraph & d, const Digraph & h, const CostMatrix & c) -> Check
    {
        Check check;
        for (auto sense : {Sense::minimise, Sense::maximise}) {
            std::optional<Homomorphism> got;
            try {
                got = solve_cost(d, h, c, sense);
            }
            catch (const NpRegimeRefused &) {
                check.refused = true;
                return check;
            }
            auto expected = sense == Sense::minimise ? oracle_min_cost(d, h, c) : oracle_max_cost(d, h, c);
            const char * name = sense == Sense::minimise ? "min" : "max";
            if (got.has_value() != expected.has_value()) {
                check.agree = false;
                check.detail = std::string(name) + " feasibility: solver " + (got ? "yes" : "no") + ", oracle "
                    + (expected ? "yes" : "no");
                return check;
            }
            if (got && (got->cost != expected->cost || ! is_homomorphism(d, h, got->image)
                           || mapping_cost(c, got->image) != got->cost)) {
                check.agree = false;
                check.detail = std::string(name) + " cost: solver " + std::to_string(got->cost) + ", oracle "
                    + std::to_string(expected->cost);
                return check;
            }
        }
        return check;
    }

    inline auto compare_lists(const Digraph & d, const Digraph & h, const ListAssignment & lists) -> Check
    {
        Check check;
        std::optional<Homomorphism> got;
        try {
            got = classify_lhom_dispatch(d, h, lists);
        }
        catch (const NpRegimeRefused &) {
            check.refused = true;
            return check;
        }
        auto expected = oracle_list(d, h, lists);
        if (got.has_value() != expected.has_value()) {
            check.agree = false;
            check.detail = std::string("list feasibility: solver ") + (got ? "yes" : "no") + ", oracle "
                + (expected ? "yes" : "no");
        }
        else if (got && ! (is_homomorphism(d, h, got->image) && respects_lists(lists, got->image))) {
            check.agree = false;
            check.detail = "solver mapping violates arcs or lists";
        }
        return check;
    }

    inline auto print_check(std::ostream & out, const std::string & name, const Check & check) -> bool
    {
        if (check.refused)
            out << name << " refused\n";
        else if (check.agree)
            out << name << " ok\n";
        else
            out << name << " MISMATCH " << check.detail << '\n';
        return check.agree;
    }

    using Rng = std::mt19937_64;

    inline auto uniform(Rng & rng, int lo, int hi) -> int { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    inline auto coin(Rng & rng, double p) -> bool { return std::bernoulli_distribution(p)(rng); }

    inline auto random_source(Rng & rng, int n) -> Digraph
    {
        Digraph d(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && coin(rng, 0.3))
                    d.add_arc(u, v);
        return d;
    }

    /// A shuffled semicomplete target with at most one cycle: an acyclic
    /// tournament, or the normal form carrying one 2- or 3-cycle.
    inline auto random_poly_target(Rng & rng, int p) -> Digraph
    {
        int a = -1, ell = 0;
        if (p >= 2 && coin(rng, 0.6)) {
            ell = p == 2 ? 2 : uniform(rng, 2, 3);
            a = uniform(rng, 0, p - ell);
        }
        auto canonical = a < 0 ? acyclic_tournament(p) : canonical_unicyclic_target(p, a, ell);
        std::vector<int> perm(p);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        return relabel(canonical, perm);
    }

    inline auto random_costs(Rng & rng, int n, int p) -> CostMatrix
    {
        IntMatrix m(n, p);
        for (int u = 0; u < n; ++u)
            for (int i = 0; i < p; ++i)
                m(u, i) = uniform(rng, 1, 9);
        return CostMatrix(std::move(m));
    }

    inline auto random_lists(Rng & rng, int n, int p) -> ListAssignment
    {
        std::vector<std::vector<int>> lists(n);
        for (auto & list : lists) {
            for (int i = 0; i < p; ++i)
                if (coin(rng, 0.6))
                    list.push_back(i);
            if (list.empty())
                list.push_back(uniform(rng, 0, p - 1));
        }
        return ListAssignment(std::move(lists));
    }

    inline auto verify_directory(const std::string & dir, std::ostream & out) -> int
    {
        namespace fs = std::filesystem;
        if (! fs::is_directory(dir))
            throw std::runtime_error("not a directory: " + dir);
        std::vector<std::string> names;
        for (const auto & entry : fs::directory_iterator(dir)) {
            auto file = entry.path().filename().string();
            const std::string suffix = ".D.dg";
            if (file.size() > suffix.size() && file.ends_with(suffix))
                names.push_back(file.substr(0, file.size() - suffix.size()));
        }
        std::sort(names.begin(), names.end());

        bool all_agree = true;
        for (const auto & name : names) {
            auto base = (fs::path(dir) / name).string();
            auto d = read_digraph(base + ".D.dg");
            auto h = read_digraph(base + ".H.dg");
            bool any = false;
            if (fs::exists(base + ".costs.txt")) {
                any = true;
                auto c = read_costs_file(base + ".costs.txt", d.size(), h.size());
                all_agree = print_check(out, name + " costs", compare_costs(d, h, c)) && all_agree;
            }
            if (fs::exists(base + ".lists.txt")) {
                any = true;
                auto lists = read_lists_file(base + ".lists.txt", d.size(), h.size());
                all_agree = print_check(out, name + " lists", compare_lists(d, h, lists)) && all_agree;
            }
            if (! any)
                out << name << " skipped (no costs or lists file)\n";
        }
        out << names.size() << " instances, " << (all_agree ? "no disagreements" : "DISAGREEMENTS FOUND") << '\n';
        return all_agree ? solved : 1;
    }

    inline auto verify_random(std::uint64_t seed, int count, std::ostream & out) -> int
    {
        Rng rng(seed);
        bool all_agree = true;
        int mismatches = 0;
        for (int i = 0; i < count; ++i) {
            int n = uniform(rng, 1, 5), p = uniform(rng, 1, 4);
            auto d = random_source(rng, n);
            auto h = random_poly_target(rng, p);
            auto c = random_costs(rng, n, p);
            auto lists = random_lists(rng, n, p);
            auto name = "random-" + std::to_string(i);
            auto cost_check = compare_costs(d, h, c);
            auto list_check = compare_lists(d, h, lists);
            // only disagreements are listed; the summary carries the rest
            if (! cost_check.agree)
                print_check(out, name + " costs", cost_check);
            if (! list_check.agree)
                print_check(out, name + " lists", list_check);
            if (! cost_check.agree || ! list_check.agree) {
                all_agree = false;
                ++mismatches;
            }
        }
        out << count << " random instances (seed " << seed << "), " << mismatches << " with disagreements\n";
        return all_agree ? solved : 1;
    }
}

/// Runs one command; `args` excludes the program name.
inline auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Minimum-cost and list homomorphisms to semicomplete digraphs", "homcost"};
    app.require_subcommand(1);

    std::string d_path, h_path, data_path, g_path, prefix, problem = "minhom";
    bool maximise = false, fallback = false, solve_product = false, use_dual = false, random = false;
    int k = 3, count = 200;
    std::uint64_t seed = 0;

    auto classify_cmd = app.add_subcommand("classify", "complexity verdict for a semicomplete target");
    classify_cmd->add_option("H", h_path, "target digraph")->required();
    classify_cmd->add_option("--problem", problem, "problem whose regime decides the exit code")
        ->check(CLI::IsMember({"hom", "lhom", "minhom"}));

    auto solve_cmd = app.add_subcommand("solve", "minimum (or maximum) cost homomorphism");
    solve_cmd->add_option("D", d_path)->required();
    solve_cmd->add_option("H", h_path)->required();
    solve_cmd->add_option("costs", data_path)->required();
    solve_cmd->add_flag("--max", maximise, "maximise instead of minimise");
    solve_cmd->add_flag("--oracle-fallback", fallback, "use exhaustive search in the NP-hard regime");

    auto list_cmd = app.add_subcommand("solve-list", "list homomorphism");
    list_cmd->add_option("D", d_path)->required();
    list_cmd->add_option("H", h_path)->required();
    list_cmd->add_option("lists", data_path)->required();
    list_cmd->add_flag("--oracle-fallback", fallback, "use exhaustive search in the NP-complete regime");

    auto product_cmd = app.add_subcommand("product", "write the weighted homomorphic product");
    product_cmd->add_option("D", d_path)->required();
    product_cmd->add_option("H", h_path)->required();
    product_cmd->add_option("costs", data_path)->required();
    product_cmd->add_option("-o", prefix, "writes PREFIX.ug and PREFIX.weights")->required();
    product_cmd->add_flag("--solve", solve_product, "report a maximum-weight antichain (acyclic tournament H)");

    auto gadget_cmd = app.add_subcommand("gadget", "independent-set reduction instance");
    gadget_cmd->add_option("G", g_path, "undirected graph")->required();
    gadget_cmd->add_option("--k", k, "cycle length")->required()->check(CLI::Range(2, 64));
    gadget_cmd->add_flag("--dual", use_dual, "reverse every arc");
    gadget_cmd->add_option("-o", prefix, "writes PREFIX.D.dg, PREFIX.H.dg, PREFIX.costs.txt")->required();

    auto oracle_cmd = app.add_subcommand("oracle", "exhaustive ground truth");
    oracle_cmd->require_subcommand(1);
    auto oracle_solve = oracle_cmd->add_subcommand("solve", "optimal cost by exhaustive search");
    oracle_solve->add_option("D", d_path)->required();
    oracle_solve->add_option("H", h_path)->required();
    oracle_solve->add_option("costs", data_path)->required();
    oracle_solve->add_flag("--max", maximise);
    auto oracle_list_cmd = oracle_cmd->add_subcommand("solve-list", "list homomorphism by exhaustive search");
    oracle_list_cmd->add_option("D", d_path)->required();
    oracle_list_cmd->add_option("H", h_path)->required();
    oracle_list_cmd->add_option("lists", data_path)->required();
    auto oracle_mis_cmd = oracle_cmd->add_subcommand("mis", "maximum independent set");
    oracle_mis_cmd->add_option("G", g_path)->required();
    auto oracle_enum = oracle_cmd->add_subcommand("enumerate", "every homomorphism, one per line");
    oracle_enum->add_option("D", d_path)->required();
    oracle_enum->add_option("H", h_path)->required();

    auto verify_cmd = app.add_subcommand("verify", "compare solvers against the oracle");
    verify_cmd->add_option("dir", data_path, "directory of NAME.D.dg / NAME.H.dg / NAME.costs.txt|NAME.lists.txt");
    verify_cmd->add_flag("--random", random, "generate instances instead of reading a directory");
    auto seed_opt = verify_cmd->add_option("--seed", seed, "random seed (required with --random)");
    verify_cmd->add_option("--count", count, "number of random instances")->check(CLI::PositiveNumber);

    std::vector<const char *> argv{"homcost"};
    for (const auto & a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return solved;
    }
    catch (const CLI::ParseError & e) {
        err << "homcost: " << e.what() << '\n';
        return input_error;
    }

    try {
        if (classify_cmd->parsed()) {
            auto verdict = classify(detail::read_digraph(h_path));
            write_verdict(out, verdict);
            return verdict.for_problem(detail::parse_problem(problem)) == Complexity::poly ? solved : np_refused;
        }

        if (solve_cmd->parsed() || list_cmd->parsed()) {
            auto d = detail::read_digraph(d_path);
            auto h = detail::read_digraph(h_path);
            try {
                if (solve_cmd->parsed()) {
                    auto c = detail::read_costs_file(data_path, d.size(), h.size());
                    return detail::report(out,
                        detail::solve_any(d, h, c, maximise ? Sense::maximise : Sense::minimise, fallback));
                }
                auto lists = detail::read_lists_file(data_path, d.size(), h.size());
                return detail::report(out, detail::list_any(d, h, lists, fallback));
            }
            catch (const NpRegimeRefused & e) {
                write_verdict(out, e.verdict());
                err << "homcost: " << e.what() << "; rerun with --oracle-fallback for exhaustive search\n";
                return np_refused;
            }
        }

        if (product_cmd->parsed()) {
            auto d = detail::read_digraph(d_path);
            auto h = detail::read_digraph(h_path);
            auto c = detail::read_costs_file(data_path, d.size(), h.size());
            auto product = homomorphic_product(d, h, c);
            detail::write_file(prefix + ".ug", [&](std::ostream & o) { write_ugraph(o, product.graph); });
            detail::write_file(prefix + ".weights", [&](std::ostream & o) {
                for (std::size_t x = 0; x < product.weight.size(); ++x)
                    o << x << ' ' << product.weight[x] << '\n';
            });
            out << "product " << product.graph.size() << " vertices " << product.graph.edge_count() << " edges mu "
                << product.mu << '\n';
            if (! solve_product)
                return solved;

            auto order = acyclic_tournament_order(h);
            if (! order) {
                err << "homcost: product --solve needs an acyclic tournament target\n";
                return input_error;
            }
            if (! is_acyclic(d)) {
                out << "no homomorphism\n";
                return no_homomorphism;
            }
            const int p = h.size();
            auto relabelled = homcost::detail::permute_columns(c, *order);
            auto closed = transitive_closure(d, ClosureLoops::reject);
            auto canonical = homomorphic_product(closed, acyclic_tournament(p), relabelled);
            auto antichain = max_weight_antichain(orient_product(canonical, closed));
            std::vector<int> members;
            for (int x : antichain.members)
                members.push_back(product.encode(canonical.source_of(x), (*order)[canonical.color_of(x)]));
            std::sort(members.begin(), members.end());
            out << "antichain";
            for (int x : members)
                out << ' ' << x;
            out << "\nweight " << antichain.weight << '\n';
            if (static_cast<int>(members.size()) != d.size()) {
                out << "no homomorphism\n";
                return no_homomorphism;
            }
            return detail::report(out, indset_to_hom(members, d, h, c));
        }

        if (gadget_cmd->parsed()) {
            auto g = detail::read_ugraph(g_path);
            auto gadget = build_mis_gadget(g, k, use_dual);
            detail::write_file(prefix + ".D.dg", [&](std::ostream & o) { write_digraph(o, gadget.source); });
            detail::write_file(prefix + ".H.dg", [&](std::ostream & o) { write_digraph(o, gadget.target); });
            detail::write_file(prefix + ".costs.txt", [&](std::ostream & o) { write_matrix(o, gadget.costs.entries()); });
            out << "gadget D " << gadget.source.size() << " vertices, H " << gadget.target.size() << " vertices\n";
            return solved;
        }

        if (oracle_cmd->parsed()) {
            if (oracle_mis_cmd->parsed()) {
                auto mis = oracle_mis(detail::read_ugraph(g_path));
                out << "alpha " << mis.alpha << "\nset";
                for (int v : mis.members)
                    out << ' ' << v;
                out << '\n';
                return solved;
            }
            auto d = detail::read_digraph(d_path);
            auto h = detail::read_digraph(h_path);
            if (oracle_enum->parsed()) {
                auto homs = enumerate_homs(d, h);
                for (const auto & image : homs) {
                    for (std::size_t u = 0; u < image.size(); ++u)
                        out << (u ? " " : "") << image[u];
                    out << '\n';
                }
                out << "count " << homs.size() << '\n';
                return homs.empty() ? no_homomorphism : solved;
            }
            if (oracle_solve->parsed()) {
                auto c = detail::read_costs_file(data_path, d.size(), h.size());
                return detail::report(out, maximise ? oracle_max_cost(d, h, c) : oracle_min_cost(d, h, c));
            }
            auto lists = detail::read_lists_file(data_path, d.size(), h.size());
            return detail::report(out, oracle_list(d, h, lists));
        }

        if (verify_cmd->parsed()) {
            if (random) {
                if (! *seed_opt) {
                    err << "homcost: verify --random needs --seed\n";
                    return input_error;
                }
                return detail::verify_random(seed, count, out);
            }
            if (data_path.empty()) {
                err << "homcost: verify needs a directory or --random\n";
                return input_error;
            }
            return detail::verify_directory(data_path, out);
        }
    }
    catch (const ParseError & e) {
        err << "homcost: parse error: " << e.what() << '\n';
        return input_error;
    }
    catch (const BudgetExceeded & e) {
        err << "homcost: oracle budget exceeded (set HOMCOST_BUDGET to raise it): " << e.what() << '\n';
        return input_error;
    }
    catch (const std::exception & e) {
        err << "homcost: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}

}
