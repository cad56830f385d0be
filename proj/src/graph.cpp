#include "odiam/graph.hpp"

#include "odiam/error.hpp"

#include <algorithm>
#include <numeric>

namespace odiam {

std::vector<int> members(VertexSet s) {
    std::vector<int> out;
    out.reserve(set_size(s));
    while (s != 0) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

namespace {

VertexSet low_bits(int count) { return count >= 64 ? ~VertexSet{0} : vertex_bit(count) - 1; }

std::string pair_text(int u, int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

} // namespace

Topology make_complete_multipartite(std::span<const int> parts) {
    if (parts.empty())
        throw Error(ErrorKind::EmptyParts, "at least one part is required");
    long total = 0;
    for (int p : parts) {
        if (p < 1)
            throw Error(ErrorKind::ZeroPart, "part sizes must be positive, got " + std::to_string(p));
        total += p;
    }
    if (total > kMaxVertices)
        throw Error(ErrorKind::TooLarge, std::to_string(total) + " vertices exceeds the cap of " +
                                             std::to_string(kMaxVertices));
    Topology t;
    t.parts_.assign(parts.begin(), parts.end());
    int next = 0;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
        t.begin_.push_back(next);
        for (int k = 0; k < parts[i]; ++k)
            t.part_of_.push_back(i);
        next += parts[i];
    }
    return t;
}

VertexSet Topology::part_mask(int p) const { return low_bits(parts_.at(p)) << begin_.at(p); }

VertexSet Topology::all_vertices() const { return low_bits(n_vertices()); }

std::size_t Topology::edge_count() const {
    std::size_t n = n_vertices();
    std::size_t sq = 0;
    for (int p : parts_)
        sq += static_cast<std::size_t>(p) * p;
    return (n * n - sq) / 2;
}

std::vector<Edge> Topology::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_vertices(); ++u)
        for (int v = u + 1; v < n_vertices(); ++v)
            if (adjacent(u, v))
                out.push_back({u, v});
    return out;
}

std::string vertex_name(const Topology &topology, int v) {
    int part = topology.part_of(v);
    int k = v - topology.part_begin(part) + 1;
    if (topology.n_parts() <= 3) {
        static constexpr char letters[] = {'x', 'y', 'z'};
        return std::string(1, letters[part]) + std::to_string(k);
    }
    return "v" + std::to_string(part + 1) + "_" + std::to_string(k);
}

Orientation Orientation::from_out_sets(Topology topology, std::vector<VertexSet> out) {
    const int n = topology.n_vertices();
    if (static_cast<int>(out.size()) != n)
        throw Error(ErrorKind::VertexOutOfRange, "out-set table size does not match the topology");
    std::vector<VertexSet> in(n, 0);
    for (int u = 0; u < n; ++u) {
        if (contains(out[u], u))
            throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(u));
        if ((out[u] & ~topology.all_vertices()) != 0)
            throw Error(ErrorKind::VertexOutOfRange, "arc target outside the vertex range");
        VertexSet intra = out[u] & topology.part_mask(topology.part_of(u));
        if (intra != 0)
            throw Error(ErrorKind::IntraPartArc, pair_text(u, std::countr_zero(intra)));
        for (int v : members(out[u]))
            in[v] |= vertex_bit(u);
    }
    for (int u = 0; u < n; ++u) {
        VertexSet both = out[u] & in[u];
        if (both != 0)
            throw Error(ErrorKind::DoubleOrientation, pair_text(u, std::countr_zero(both)));
        VertexSet missing = topology.neighbors(u) & ~(out[u] | in[u]);
        if (missing != 0)
            throw Error(ErrorKind::MissingEdge, pair_text(u, std::countr_zero(missing)));
    }
    return Orientation(std::move(topology), std::move(out), std::move(in));
}

std::size_t Orientation::arc_count() const {
    std::size_t total = 0;
    for (VertexSet s : out_)
        total += set_size(s);
    return total;
}

std::vector<Arc> Orientation::arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count());
    for (int u = 0; u < n_vertices(); ++u)
        for (int v : members(out_[u]))
            out.push_back({u, v});
    return out;
}

Orientation orient(const Topology &topology, std::span<const Arc> arcs) {
    const int n = topology.n_vertices();
    std::vector<VertexSet> out(n, 0);
    for (const Arc &a : arcs) {
        if (!topology.valid_vertex(a.from) || !topology.valid_vertex(a.to))
            throw Error(ErrorKind::VertexOutOfRange, pair_text(a.from, a.to));
        if (a.from == a.to)
            throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(a.from));
        if (topology.part_of(a.from) == topology.part_of(a.to))
            throw Error(ErrorKind::IntraPartArc, pair_text(a.from, a.to));
        if (contains(out[a.from], a.to) || contains(out[a.to], a.from))
            throw Error(ErrorKind::DoubleOrientation,
                        pair_text(std::min(a.from, a.to), std::max(a.from, a.to)));
        out[a.from] |= vertex_bit(a.to);
    }
    return Orientation::from_out_sets(topology, std::move(out));
}

int Distance::value() const {
    if (is_infinite())
        throw std::logic_error("value() on an infinite distance");
    return value_;
}

std::string Distance::to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

std::vector<Distance> distances_from(const Orientation &d, int source) {
    const int n = d.n_vertices();
    if (!d.topology().valid_vertex(source))
        throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(source));
    std::vector<Distance> dist(n, Distance::infinite());
    VertexSet visited = vertex_bit(source);
    VertexSet frontier = visited;
    int level = 0;
    while (frontier != 0) {
        for (int v : members(frontier))
            dist[v] = Distance(level);
        VertexSet next = 0;
        for (VertexSet f = frontier; f != 0; f &= f - 1)
            next |= d.out(std::countr_zero(f));
        frontier = next & ~visited;
        visited |= frontier;
        ++level;
    }
    return dist;
}

Distance distance(const Orientation &d, int u, int v) {
    if (!d.topology().valid_vertex(v))
        throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
    return distances_from(d, u)[v];
}

Distance diameter(const Orientation &d) {
    const int n = d.n_vertices();
    const VertexSet all = d.topology().all_vertices();
    int worst = 0;
    for (int s = 0; s < n; ++s) {
        VertexSet visited = vertex_bit(s);
        VertexSet frontier = visited;
        int level = 0;
        while (true) {
            VertexSet next = 0;
            for (VertexSet f = frontier; f != 0; f &= f - 1)
                next |= d.out(std::countr_zero(f));
            frontier = next & ~visited;
            if (frontier == 0)
                break;
            visited |= frontier;
            ++level;
        }
        if (visited != all)
            return Distance::infinite();
        worst = std::max(worst, level);
    }
    return Distance(worst);
}

bool is_strong(const Orientation &d) { return diameter(d).is_finite(); }

bool within_two(const Orientation &d, int u, int v) {
    return u == v || d.has_arc(u, v) || (d.out(u) & d.in(v)) != 0;
}

bool has_diameter_at_most_two(const Orientation &d) {
    const int n = d.n_vertices();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (!within_two(d, u, v))
                return false;
    return true;
}

Orientation reverse(const Orientation &d) {
    std::vector<VertexSet> out(d.n_vertices());
    for (int v = 0; v < d.n_vertices(); ++v)
        out[v] = d.in(v);
    return Orientation::from_out_sets(d.topology(), std::move(out));
}

InducedOrientation induced_suborientation(const Orientation &d, VertexSet keep) {
    const Topology &t = d.topology();
    keep &= t.all_vertices();
    if (keep == 0)
        throw Error(ErrorKind::EmptyKeep, "no vertices kept");
    std::vector<int> parts;
    for (int p = 0; p < t.n_parts(); ++p) {
        int size = set_size(keep & t.part_mask(p));
        if (size > 0)
            parts.push_back(size);
    }
    std::vector<int> parent = members(keep); // part-major order is preserved by index order
    std::vector<int> child_of(t.n_vertices(), -1);
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
        child_of[parent[i]] = i;
    std::vector<VertexSet> out(parent.size(), 0);
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
        for (int w : members(d.out(parent[i]) & keep))
            out[i] |= vertex_bit(child_of[w]);
    return {Orientation::from_out_sets(make_complete_multipartite(parts), std::move(out)),
            std::move(parent)};
}

void add_arcs(std::vector<Arc> &arcs, std::span<const int> from, std::span<const int> to) {
    for (int a : from)
        for (int b : to)
            arcs.push_back({a, b});
}

} // namespace odiam
