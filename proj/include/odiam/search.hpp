#pragma once

#include "odiam/analysis.hpp"
#include "odiam/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace odiam {

struct SearchConfig {
    std::uint64_t node_budget = 1'000'000'000;
    double time_budget_seconds = 600.0;
    // Part-internal relabelings and global reversal.
    bool symmetry_breaking = true;
    // One independent subsearch per anchor degree class.
    bool use_case_split = true;
    int thread_count = 1;
};

enum class Verdict { Exists, None, Unknown };

std::string_view to_string(Verdict v);

struct SearchStats {
    std::uint64_t nodes = 0;
    int max_depth = 0;
    double wall_seconds = 0.0;
    // Degree classes whose subsearch ran to completion or found a witness.
    std::vector<DegreeTuple> cases_enumerated;
};

struct SearchOutcome {
    Verdict verdict = Verdict::Unknown;
    std::optional<Orientation> witness;
    SearchStats stats;
};

// Decides whether K(parts) admits an orientation of diameter at most 2.
// Exists carries a re-verified witness; None means the space was exhausted
// modulo the configured symmetries; Unknown means a budget ran out.
SearchOutcome decide_diameter2(std::span<const int> parts, const SearchConfig &cfg = {});

inline constexpr std::size_t kBruteForceEdgeCap = 20;
inline constexpr std::size_t kEnumerateEdgeCap = 16;

// Exact f(G) by full enumeration; infinite when no orientation is strong.
Distance brute_force_min_diameter(const Topology &topology);

// Orientations of diameter exactly 2 in lexicographic order of their edge
// direction bits (first edge varies slowest, low->high before high->low).
// limit == 0 means all, which requires at most kEnumerateEdgeCap edges.
std::vector<Orientation> enumerate_diameter2(const Topology &topology, std::size_t limit = 0);

// Orientation whose i-th edge (lexicographic) points high->low iff bit i of mask is set.
Orientation orientation_from_mask(const Topology &topology, std::span<const Edge> edges,
                                  std::uint64_t mask);

} // namespace odiam
