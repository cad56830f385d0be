#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace odiam {

// Vertex sets are 64-bit masks; every topology handled here has at most 64 vertices.
using VertexSet = std::uint64_t;
inline constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet s, int v) { return ((s >> v) & 1U) != 0; }
inline int set_size(VertexSet s) { return std::popcount(s); }

std::vector<int> members(VertexSet s);

struct Arc {
    int from = 0;
    int to = 0;
    auto operator<=>(const Arc &) const = default;
};

struct Edge {
    int u = 0; // u < v
    int v = 0;
    auto operator<=>(const Edge &) const = default;
};

// Complete multipartite graph K(p1,...,pn). Vertices are numbered part-major:
// part 0 holds [0, p1), part 1 the next p2 indices, and so on.
class Topology {
public:
    Topology() = default;

    const std::vector<int> &parts() const { return parts_; }
    int n_parts() const { return static_cast<int>(parts_.size()); }
    int n_vertices() const { return static_cast<int>(part_of_.size()); }
    int part_of(int v) const { return part_of_.at(v); }
    int part_begin(int p) const { return begin_.at(p); }
    int part_size(int p) const { return parts_.at(p); }
    VertexSet part_mask(int p) const;
    VertexSet all_vertices() const;
    // Every vertex outside v's part.
    VertexSet neighbors(int v) const { return all_vertices() & ~part_mask(part_of(v)); }
    bool adjacent(int u, int v) const { return u != v && part_of(u) != part_of(v); }
    bool valid_vertex(int v) const { return v >= 0 && v < n_vertices(); }

    std::size_t edge_count() const;
    // All inter-part edges, lexicographic by (u, v) with u < v.
    std::vector<Edge> edges() const;

    bool operator==(const Topology &) const = default;

private:
    friend Topology make_complete_multipartite(std::span<const int> parts);

    std::vector<int> parts_;
    std::vector<int> begin_;
    std::vector<int> part_of_;
};

Topology make_complete_multipartite(std::span<const int> parts);
inline Topology make_complete_multipartite(std::initializer_list<int> parts) {
    return make_complete_multipartite(std::span<const int>(parts.begin(), parts.size()));
}

// x1..x3, y1..yp, z1..zq for up to three parts; v<part>_<k> otherwise.
std::string vertex_name(const Topology &topology, int v);

// One direction per inter-part edge. Immutable once built; every constructor validates.
class Orientation {
public:
    // Validates totality, absence of intra-part arcs and loops.
    static Orientation from_out_sets(Topology topology, std::vector<VertexSet> out);

    const Topology &topology() const { return topology_; }
    int n_vertices() const { return topology_.n_vertices(); }
    VertexSet out(int v) const { return out_.at(v); }
    VertexSet in(int v) const { return in_.at(v); }
    const std::vector<VertexSet> &out_sets() const { return out_; }
    bool has_arc(int u, int v) const { return contains(out_.at(u), v); }
    std::size_t arc_count() const;
    // Sorted lexicographically.
    std::vector<Arc> arcs() const;

    bool operator==(const Orientation &) const = default;

private:
    Orientation(Topology topology, std::vector<VertexSet> out, std::vector<VertexSet> in)
        : topology_(std::move(topology)), out_(std::move(out)), in_(std::move(in)) {}

    Topology topology_;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
};

Orientation orient(const Topology &topology, std::span<const Arc> arcs);

// Directed distance; infinite is a separate state, never a large integer.
class Distance {
public:
    static constexpr Distance infinite() { return Distance(); }
    constexpr explicit Distance(int value) : value_(value) {}

    constexpr bool is_infinite() const { return value_ < 0; }
    constexpr bool is_finite() const { return value_ >= 0; }
    int value() const;

    constexpr bool operator==(const Distance &) const = default;
    constexpr std::strong_ordering operator<=>(const Distance &other) const {
        if (is_infinite() || other.is_infinite())
            return is_infinite() == other.is_infinite() ? std::strong_ordering::equal
                   : is_infinite()                      ? std::strong_ordering::greater
                                                        : std::strong_ordering::less;
        return value_ <=> other.value_;
    }

    std::string to_string() const;

private:
    constexpr Distance() = default;
    int value_ = -1;
};

// Single-source BFS over bitset adjacency.
std::vector<Distance> distances_from(const Orientation &d, int source);
Distance distance(const Orientation &d, int u, int v);
Distance diameter(const Orientation &d);
bool is_strong(const Orientation &d);

// v in out(u), or out(u) meets in(v); u == v is trivially within distance 0.
bool within_two(const Orientation &d, int u, int v);
bool has_diameter_at_most_two(const Orientation &d);

Orientation reverse(const Orientation &d);

struct InducedOrientation {
    Orientation orientation;
    std::vector<int> parent_vertex; // child index -> index in the parent orientation
};

// Parts that lose every vertex are dropped; survivors keep their order.
InducedOrientation induced_suborientation(const Orientation &d, VertexSet keep);

// Convenience for building arc lists: every a in from gets an arc to every b in to.
void add_arcs(std::vector<Arc> &arcs, std::span<const int> from, std::span<const int> to);

} // namespace odiam
