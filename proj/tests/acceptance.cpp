// One line per acceptance criterion; exit status is non-zero if any fails.

#include "odiam/analysis.hpp"
#include "odiam/cnf.hpp"
#include "odiam/constructions.hpp"
#include "odiam/search.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

using namespace odiam;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome k33q_table() {
    const auto start = Clock::now();
    for (int q = 3; q <= 6; ++q) {
        Distance d = diameter(construct_33q(q).orientation);
        if (d != Distance(2))
            return fail("K(3,3," + std::to_string(q) + ") has diameter " + d.to_string());
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    if (s >= 1.0)
        return fail("took " + std::to_string(s) + " s");
    return {true, "q = 3..6 all diameter 2"};
}

Outcome k34q_table() {
    const auto start = Clock::now();
    const Orientation d10 = construct_34q(10).orientation;
    for (int q = 4; q <= 11; ++q) {
        const Orientation d = construct_34q(q).orientation;
        if (diameter(d) != Distance(2))
            return fail("K(3,4," + std::to_string(q) + ") has diameter " + diameter(d).to_string());
        if (q <= 9) {
            auto sub = induced_suborientation(d10, k34_deletion_keep(q));
            for (int a = 0; a < d.n_vertices(); ++a)
                for (int b = 0; b < d.n_vertices(); ++b)
                    if (d.has_arc(a, b) != d10.has_arc(sub.parent_vertex[a], sub.parent_vertex[b]))
                        return fail("q = " + std::to_string(q) + " is not a restriction of q = 10");
        }
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    if (s >= 1.0)
        return fail("took " + std::to_string(s) + " s");
    return {true, "q = 4..11 all diameter 2, q <= 9 restrict q = 10 arc for arc"};
}

Outcome k337_refutation() {
    SearchConfig cfg;
    cfg.node_budget = 1'000'000'000;
    cfg.time_budget_seconds = 600;
    SearchOutcome out = decide_diameter2(std::vector<int>{3, 3, 7}, cfg);
    const std::string stats = std::to_string(out.stats.nodes) + " nodes, " +
                              std::to_string(out.stats.wall_seconds) + " s";
    if (out.verdict != Verdict::None)
        return fail("verdict " + std::string(to_string(out.verdict)) + " (" + stats + ")");
    return {true, "K(3,3,7) has no diameter-2 orientation (" + stats + ")"};
}

Outcome k3412_cnf() {
    const std::vector<int> parts = {3, 4, 12};
    const auto path = std::filesystem::temp_directory_path() / "odiam_acceptance_k34_12.cnf";
    const CnfStats s = export_cnf(parts, path);
    std::ifstream in(path);
    const Cnf back = read_dimacs(in); // throws on anything malformed
    std::filesystem::remove(path);

    // Counts from the part sizes: E edges, sum of common neighbours over ordered pairs,
    // and 3m - 2 clauses / m - 1 variables per consecutive pair in a later part with m earlier columns.
    const int n = 19;
    long edges = 0, paths = 0, pairs = 0, order_vars = 0, order_clauses = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (i < j)
                edges += parts[i] * parts[j];
            const long pr = i == j ? parts[i] * (parts[i] - 1) : parts[i] * parts[j];
            pairs += pr;
            paths += pr * (i == j ? n - parts[i] : n - parts[i] - parts[j]);
        }
    int before = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) {
        order_vars += (parts[k] - 1) * (before - 1);
        order_clauses += (parts[k] - 1) * (3 * before - 2);
        before += parts[k];
    }
    const long want_vars = edges + paths + order_vars;
    const long want_clauses = pairs + 3 * paths + order_clauses;
    if (s.edge_variables != edges || s.variables != want_vars || back.variables != want_vars ||
        static_cast<long>(s.clauses) != want_clauses || static_cast<long>(back.clauses.size()) != want_clauses)
        return fail("counts differ from the encoding formulas");

    SearchConfig cfg;
    cfg.time_budget_seconds = 120;
    SearchOutcome out = decide_diameter2(parts, cfg);
    return {true, "DIMACS " + std::to_string(want_vars) + " vars / " + std::to_string(want_clauses) +
                      " clauses as predicted; internal search: " + std::string(to_string(out.verdict)) +
                      " (" + std::to_string(out.stats.wall_seconds) + " s)"};
}

void part_lists(std::vector<int> &cur, int max_part, std::vector<std::vector<int>> &out) {
    if (cur.size() >= 2)
        out.push_back(cur);
    for (int s = 1; s <= max_part; ++s) {
        cur.push_back(s);
        if (make_complete_multipartite(cur).edge_count() <= 16)
            part_lists(cur, s, out);
        cur.pop_back();
    }
}

Outcome oracle_equivalence() {
    const auto start = Clock::now();
    std::vector<std::vector<int>> lists;
    std::vector<int> cur;
    part_lists(cur, 16, lists);
    SearchConfig off;
    off.symmetry_breaking = false;
    for (const auto &parts : lists) {
        const bool oracle = brute_force_min_diameter(make_complete_multipartite(parts)) <= Distance(2);
        const Verdict want = oracle ? Verdict::Exists : Verdict::None;
        if (decide_diameter2(parts).verdict != want || decide_diameter2(parts, off).verdict != want) {
            std::string name;
            for (int p : parts)
                name += std::to_string(p) + " ";
            return fail("disagreement on parts " + name);
        }
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    if (s >= 60.0)
        return fail("took " + std::to_string(s) + " s");
    return {true, std::to_string(lists.size()) + " topologies, symmetry on and off, " + std::to_string(s) + " s"};
}

Outcome baselines() {
    auto f = [](std::initializer_list<int> parts) {
        return brute_force_min_diameter(make_complete_multipartite(parts));
    };
    if (f({1, 1, 1, 1}) != Distance(3) || f({1, 1, 1, 1, 1}) != Distance(2))
        return fail("complete graph baseline");
    if (f({2, 2}) != Distance(3) || f({2, 3}) != Distance(4))
        return fail("complete bipartite baseline");
    return {true, "f(K4)=3, f(K5)=2, f(K(2,2))=3, f(K(2,3))=4"};
}

bool lemma_and_duality(const Orientation &d) {
    const Orientation r = reverse(d);
    if (!lemma21_check(d, 0).empty() || !lemma21_check(r, 0).empty())
        return false;
    auto a = sign_partition(d, 0), b = sign_partition(r, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::uint8_t s = 0; s < 8; ++s)
            if (a[i][SignVector(s)] != b[i][SignVector(s).complement()])
                return false;
    return true;
}

// K(3,2,2) turns out to have no diameter-2 orientation, so the sweep is
// repeated on K(3,3,2), the a smallest (3,p,q) case that has some.
Outcome class_lemma() {
    const auto start = Clock::now();
    const Topology k322 = make_complete_multipartite({3, 2, 2});
    const auto listed = enumerate_diameter2(k322);
    const bool oracle_none = brute_force_min_diameter(k322) > Distance(2);
    if (!listed.empty() || !oracle_none)
        return fail("K(3,2,2) enumeration disagrees with brute force");

    const Topology k332 = make_complete_multipartite({3, 3, 2});
    const auto edges = k332.edges();
    std::size_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << edges.size()); ++m) {
        Orientation d = orientation_from_mask(k332, edges, m);
        if (!has_diameter_at_most_two(d))
            continue;
        ++count;
        if (!lemma_and_duality(d))
            return fail("lemma or reversal duality fails on a K(3,3,2) orientation");
    }
    if (count == 0)
        return fail("no diameter-2 orientations of K(3,3,2)");
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    if (s >= 30.0)
        return fail("took " + std::to_string(s) + " s");
    return {true, "K(3,2,2): 0 diameter-2 orientations (f = 3 by brute force); K(3,3,2): all " +
                      std::to_string(count) + " pass, reversal duality holds"};
}

Outcome sperner() {
    const int sizes[] = {0, 1, 2, 3, 6, 10};
    for (int p = 1; p <= 5; ++p)
        if (max_antichain(p).size != sizes[p])
            return fail("max antichain for p = " + std::to_string(p));
    if (max_antichain(4).maximum_count != 1)
        return fail("size-6 antichain over a 4-set is not unique");
    for (auto [p, q] : {std::pair{2, 3}, std::pair{3, 3}}) {
        auto t = make_complete_multipartite({p, q});
        const auto edges = t.edges();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << edges.size()); ++m) {
            Orientation d = orientation_from_mask(t, edges, m);
            bool close = true;
            for (int a = p; a < p + q; ++a)
                for (int b = p; b < p + q; ++b)
                    close = close && distance(d, a, b) <= Distance(2);
            AntichainReport r = out_neighborhood_family(d, 1);
            if (close != (r.is_antichain && r.all_nonempty_proper))
                return fail("antichain equivalence fails on K(" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
    }
    return {true, "1,2,3,6,10; unique middle layer for p = 4; K(2,3), K(3,3) equivalence"};
}

Outcome case_counts() {
    const auto a = canonical_case_classes(3, 3).size(), b = canonical_case_classes(3, 4).size();
    if (a != 10 || b != 19)
        return fail(std::to_string(a) + " and " + std::to_string(b) + " classes");
    return {true, "10 classes for p = 3, 19 for p = 4"};
}

} // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"K(3,3,q) constructions", k33q_table},
        {"K(3,4,q) constructions", k34q_table},
        {"K(3,3,7) refutation", k337_refutation},
        {"K(3,4,12) CNF export", k3412_cnf},
        {"oracle equivalence up to 16 edges", oracle_equivalence},
        {"baselines", baselines},
        {"class lemma, exhaustive", class_lemma},
        {"antichains", sperner},
        {"case counts", case_counts},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(Clock::now() - start).count();
        std::printf("criterion %zu: %s  %s -- %s [%.3f s]\n", i + 1, o.pass ? "PASS" : "FAIL",
                    criteria[i].first, o.detail.c_str(), s);
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
