#pragma once

#include "odiam/io.hpp"
#include "odiam/search.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace odiam {

enum class ClaimFamily { K33q, K34q, Baselines };
enum class ClaimMethod { Construct, SearchWithBound, BruteForce, FormulaUnverified };

ClaimFamily parse_claim_family(std::string_view text); // "33q", "34q", "baselines"
std::string_view to_string(ClaimFamily f);
std::string_view to_string(ClaimMethod m);

struct ClaimRecord {
    std::string id;
    std::string family;
    int q = 0;
    std::string graph;
    int expected = 0;
    ClaimMethod method = ClaimMethod::Construct;
    std::optional<int> observed;
    bool unknown = false;
    bool pass = false;
    double wall_seconds = 0.0;
    std::string evidence;

    // pass iff observed == expected, never for an unverified formula.
    void settle();
};

struct ClaimOptions {
    std::optional<int> q_min;
    std::optional<int> q_max;
    SearchConfig search;
    // Where to write DIMACS files for instances the search could not close.
    std::optional<std::filesystem::path> cnf_dir;
};

struct ClaimReport {
    std::vector<ClaimRecord> rows;
    // 0 all pass, 1 some claim failed, 3 an Unknown verdict and nothing failed.
    int exit_code() const;
};

// Default q ranges: 33q 3..7, 34q 4..12. Baselines ignore the range.
ClaimReport verify_claims(ClaimFamily family, const ClaimOptions &options = {});

std::string format_claim_table(const ClaimReport &report, bool with_timing = true);
ordered_json claim_report_json(const ClaimReport &report);

// Known closed forms used as expected values for the baseline rows.
int complete_graph_oriented_diameter(int n);
int complete_bipartite_oriented_diameter(int p, int q);

} // namespace odiam
