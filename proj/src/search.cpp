#include "odiam/search.hpp"

#include "odiam/error.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace odiam {

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Exists: return "Exists";
    case Verdict::None: return "None";
    case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

// Partial orientation: decided arcs in out/in, undecided edges in und (symmetric).
struct State {
    std::array<VertexSet, kMaxVertices> out{};
    std::array<VertexSet, kMaxVertices> in{};
    std::array<VertexSet, kMaxVertices> und{};
};

enum class Result { Found, Exhausted, Aborted };

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    Clock::time_point deadline;
    std::uint64_t node_budget = 0;
    // Lowest case index that produced a witness; subsearches above it stop.
    std::atomic<std::size_t> found_case{SIZE_MAX};
};

class Subsearch {
public:
    Subsearch(const Topology &t, const SearchConfig &cfg, Shared &shared, std::size_t case_index,
              std::optional<DegreeTuple> degrees)
        : t_(t), cfg_(cfg), shared_(shared), case_index_(case_index), degrees_(std::move(degrees)) {
        n_ = t.n_vertices();
        build_branch_order();
        build_symmetry_rows();
    }

    Result run() {
        State s;
        for (int v = 0; v < n_; ++v)
            s.und[v] = t_.neighbors(v);
        return search(s, 0);
    }

    const State &solution() const { return solution_; }
    std::uint64_t nodes() const { return local_nodes_; }
    int max_depth() const { return max_depth_; }

private:
    // Later-part vertex major, so each row is completed before the next starts;
    // within that, edges towards earlier parts in part order.
    void build_branch_order() {
        for (int b = 1; b < t_.n_parts(); ++b)
            for (int v = t_.part_begin(b); v < t_.part_begin(b) + t_.part_size(b); ++v)
                for (int u = 0; u < t_.part_begin(b); ++u)
                    order_.push_back({u, v});
    }

    // Consecutive same-part vertex pairs whose rows over earlier parts are compared.
    void build_symmetry_rows() {
        if (!cfg_.symmetry_breaking)
            return;
        for (int p = 1; p < t_.n_parts(); ++p)
            for (int k = 0; k + 1 < t_.part_size(p); ++k)
                lex_pairs_.push_back({t_.part_begin(p) + k, t_.part_begin(p) + k + 1});
    }

    static bool assign(State &s, int u, int v) {
        if (contains(s.out[u], v))
            return true;
        if (!contains(s.und[u], v))
            return false;
        s.out[u] |= vertex_bit(v);
        s.in[v] |= vertex_bit(u);
        s.und[u] &= ~vertex_bit(v);
        s.und[v] &= ~vertex_bit(u);
        return true;
    }

    // Pair-witness rule: every ordered pair needs a direct arc or a 2-path.
    bool propagate_pairs(State &s, bool &changed) const {
        for (int u = 0; u < n_; ++u) {
            for (int v = 0; v < n_; ++v) {
                if (u == v || contains(s.out[u], v) || (s.out[u] & s.in[v]) != 0)
                    continue;
                const bool direct = contains(s.und[u], v);
                const VertexSet mids = (s.out[u] | s.und[u]) & (s.in[v] | s.und[v]);
                const int ways = (direct ? 1 : 0) + set_size(mids);
                if (ways == 0)
                    return false;
                if (ways == 1) {
                    if (direct) {
                        assign(s, u, v);
                    } else {
                        int w = std::countr_zero(mids);
                        if (!assign(s, u, w) || !assign(s, w, v))
                            return false;
                    }
                    changed = true;
                }
            }
        }
        return true;
    }

    // Fixed out-degrees of part-0 vertices into part 1 (case split).
    bool propagate_degrees(State &s, bool &changed) const {
        if (!degrees_)
            return true;
        const VertexSet target = t_.part_mask(1);
        for (int a = 0; a < t_.part_size(0); ++a) {
            const int want = (*degrees_)[a];
            const int have = set_size(s.out[a] & target);
            const VertexSet open = s.und[a] & target;
            const int free = set_size(open);
            if (have > want || have + free < want)
                return false;
            if (free == 0)
                continue;
            if (have == want) {
                for (int y : members(open))
                    assign(s, y, a);
                changed = true;
            } else if (have + free == want) {
                for (int y : members(open))
                    assign(s, a, y);
                changed = true;
            }
        }
        return true;
    }

    // Rows of consecutive same-part vertices, restricted to earlier parts,
    // must be lexicographically non-decreasing (bit = "vertex -> column").
    bool propagate_lex(State &s, bool &changed) const {
        for (auto [a, b] : lex_pairs_) {
            const int columns = t_.part_begin(t_.part_of(a));
            for (int c = 0; c < columns; ++c) {
                const bool a_open = contains(s.und[a], c);
                const bool b_open = contains(s.und[b], c);
                const bool a_one = contains(s.out[a], c);
                const bool b_one = contains(s.out[b], c);
                if (!a_open && !b_open) {
                    if (a_one == b_one)
                        continue;
                    if (a_one && !b_one)
                        return false;
                    break; // strictly smaller
                }
                // Equal prefix so far: a's bit must not exceed b's.
                if (!a_open && a_one) {
                    assign(s, b, c);
                    changed = true;
                } else if (!b_open && !b_one) {
                    assign(s, c, a);
                    changed = true;
                }
                break;
            }
        }
        return true;
    }

    // Part-0 degrees non-decreasing and not larger than their reversal image.
    bool check_anchor_order(const State &s) const {
        if (!cfg_.symmetry_breaking || degrees_ || t_.n_parts() < 2)
            return true;
        const VertexSet target = t_.part_mask(1);
        const int m = t_.part_size(0);
        bool complete = true;
        DegreeTuple lo(m), hi(m);
        for (int a = 0; a < m; ++a) {
            lo[a] = set_size(s.out[a] & target);
            hi[a] = lo[a] + set_size(s.und[a] & target);
            complete = complete && lo[a] == hi[a];
        }
        for (int a = 0; a + 1 < m; ++a)
            if (lo[a] > hi[a + 1])
                return false;
        if (!complete)
            return true;
        return canonical_case(lo, t_.part_size(1)) == lo;
    }

    bool propagate(State &s) const {
        bool changed = true;
        while (changed) {
            changed = false;
            if (!propagate_degrees(s, changed) || !propagate_lex(s, changed) ||
                !propagate_pairs(s, changed))
                return false;
        }
        return check_anchor_order(s);
    }

    bool out_of_budget() {
        if (shared_.found_case.load(std::memory_order_relaxed) < case_index_)
            return true;
        // Reserve nodes in blocks of 1024, checking at the start of each block.
        if ((local_nodes_ & 1023U) != 1)
            return false;
        const auto total = shared_.nodes.fetch_add(1024, std::memory_order_relaxed) + 1024;
        return total > shared_.node_budget || Clock::now() > shared_.deadline;
    }

    Result search(State &s, int depth) {
        ++local_nodes_;
        max_depth_ = std::max(max_depth_, depth);
        if (out_of_budget())
            return Result::Aborted;
        if (!propagate(s))
            return Result::Exhausted;
        while (next_edge_ < order_.size() &&
               !contains(s.und[order_[next_edge_].u], order_[next_edge_].v))
            ++next_edge_;
        if (next_edge_ == order_.size()) {
            solution_ = s;
            return Result::Found;
        }
        const std::size_t saved = next_edge_;
        const Edge e = order_[next_edge_];
        for (int dir = 0; dir < 2; ++dir) {
            State child = s;
            if (dir == 0)
                assign(child, e.u, e.v);
            else
                assign(child, e.v, e.u);
            Result r = search(child, depth + 1);
            next_edge_ = saved;
            if (r != Result::Exhausted)
                return r;
        }
        return Result::Exhausted;
    }

    const Topology &t_;
    const SearchConfig &cfg_;
    Shared &shared_;
    std::size_t case_index_;
    std::optional<DegreeTuple> degrees_;
    int n_ = 0;
    std::vector<Edge> order_;
    std::vector<std::pair<int, int>> lex_pairs_;
    std::size_t next_edge_ = 0;
    std::uint64_t local_nodes_ = 0;
    int max_depth_ = 0;
    State solution_;
};

std::vector<DegreeTuple> all_tuples(int m, int p) {
    std::vector<DegreeTuple> out;
    DegreeTuple cur(m, 0);
    while (true) {
        out.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur[i] == p)
            cur[i--] = 0;
        if (i < 0)
            break;
        ++cur[i];
    }
    return out;
}

struct CaseResult {
    Result result = Result::Aborted;
    std::optional<State> solution;
    std::uint64_t nodes = 0;
    int max_depth = 0;
    bool ran = false;
};

} // namespace

SearchOutcome decide_diameter2(std::span<const int> parts, const SearchConfig &cfg) {
    const auto start = Clock::now();
    Topology t = make_complete_multipartite(parts);
    if (cfg.node_budget == 0 || cfg.time_budget_seconds <= 0 || cfg.thread_count < 1)
        throw std::invalid_argument("search budgets and thread count must be positive");

    Shared shared;
    shared.node_budget = cfg.node_budget;
    shared.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(cfg.time_budget_seconds));

    std::vector<std::optional<DegreeTuple>> cases;
    if (cfg.use_case_split && t.n_parts() >= 2) {
        auto tuples = cfg.symmetry_breaking ? canonical_case_classes(t.part_size(0), t.part_size(1))
                                            : all_tuples(t.part_size(0), t.part_size(1));
        for (auto &tuple : tuples)
            cases.emplace_back(std::move(tuple));
    } else {
        cases.emplace_back(std::nullopt);
    }

    std::vector<CaseResult> results(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < cases.size(); i = next.fetch_add(1)) {
            if (shared.found_case.load() < i)
                continue;
            Subsearch sub(t, cfg, shared, i, cases[i]);
            CaseResult &r = results[i];
            r.ran = true;
            r.result = sub.run();
            r.nodes = sub.nodes();
            r.max_depth = sub.max_depth();
            if (r.result == Result::Found) {
                r.solution = sub.solution();
                std::size_t cur = shared.found_case.load();
                while (i < cur && !shared.found_case.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    const int threads = std::min<int>(cfg.thread_count, static_cast<int>(cases.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int k = 0; k < threads; ++k)
            pool.emplace_back(worker);
    }

    SearchOutcome outcome;
    bool unknown = false;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const CaseResult &r = results[i];
        outcome.stats.nodes += r.nodes;
        outcome.stats.max_depth = std::max(outcome.stats.max_depth, r.max_depth);
        if (r.result == Result::Found && !outcome.witness) {
            std::vector<VertexSet> out(r.solution->out.begin(),
                                       r.solution->out.begin() + t.n_vertices());
            Orientation w = Orientation::from_out_sets(t, std::move(out));
            if (!has_diameter_at_most_two(w))
                throw std::logic_error("search produced a witness that fails verification");
            outcome.witness = std::move(w);
            if (cases[i])
                outcome.stats.cases_enumerated.push_back(*cases[i]);
        } else if (r.result == Result::Exhausted) {
            if (cases[i])
                outcome.stats.cases_enumerated.push_back(*cases[i]);
        } else if (!outcome.witness && r.result == Result::Aborted) {
            unknown = true;
        }
    }
    outcome.verdict = outcome.witness ? Verdict::Exists : unknown ? Verdict::Unknown : Verdict::None;
    outcome.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return outcome;
}

Orientation orientation_from_mask(const Topology &topology, std::span<const Edge> edges,
                                  std::uint64_t mask) {
    std::vector<VertexSet> out(topology.n_vertices(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge &e = edges[i];
        if (((mask >> i) & 1U) != 0)
            out[e.v] |= vertex_bit(e.u);
        else
            out[e.u] |= vertex_bit(e.v);
    }
    return Orientation::from_out_sets(topology, std::move(out));
}

Distance brute_force_min_diameter(const Topology &topology) {
    const auto edges = topology.edges();
    if (edges.size() > kBruteForceEdgeCap)
        throw Error(ErrorKind::TooManyEdges, std::to_string(edges.size()) + " edges exceeds " +
                                                 std::to_string(kBruteForceEdgeCap));
    Distance best = Distance::infinite();
    if (topology.n_vertices() == 1)
        return Distance(0);
    const std::uint64_t total = std::uint64_t{1} << edges.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Distance d = diameter(orientation_from_mask(topology, edges, mask));
        if (d < best)
            best = d;
    }
    return best;
}

std::vector<Orientation> enumerate_diameter2(const Topology &topology, std::size_t limit) {
    const auto edges = topology.edges();
    const std::size_t e = edges.size();
    if (e >= 64 || (limit == 0 && e > kEnumerateEdgeCap))
        throw Error(ErrorKind::TooManyEdges, std::to_string(e) + " edges exceeds " +
                                                 std::to_string(kEnumerateEdgeCap) +
                                                 " for exhaustive enumeration");
    std::vector<Orientation> found;
    const std::uint64_t total = std::uint64_t{1} << e;
    for (std::uint64_t counter = 0; counter < total; ++counter) {
        std::uint64_t mask = 0; // edge 0 is the most significant counter bit
        for (std::size_t i = 0; i < e; ++i)
            if (((counter >> (e - 1 - i)) & 1U) != 0)
                mask |= std::uint64_t{1} << i;
        Orientation d = orientation_from_mask(topology, edges, mask);
        if (has_diameter_at_most_two(d) && diameter(d) == Distance(2)) {
            found.push_back(std::move(d));
            if (limit != 0 && found.size() == limit)
                break;
        }
    }
    return found;
}

} // namespace odiam
