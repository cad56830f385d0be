#include "odiam/constructions.hpp"

#include "odiam/analysis.hpp"
#include "odiam/error.hpp"
#include "odiam/search.hpp"

#include <algorithm>
#include <array>

namespace odiam {

std::string_view to_string(ConstructionFamily f) {
    switch (f) {
    case ConstructionFamily::K33q: return "K33q";
    case ConstructionFamily::K34q: return "K34q";
    case ConstructionFamily::MiddleLayerBipartite: return "MiddleLayerBipartite";
    case ConstructionFamily::CompleteGraph: return "CompleteGraph";
    }
    return "?";
}

namespace {

using Group = std::vector<int>;

Group range(int first, int count) {
    Group g(count);
    for (int i = 0; i < count; ++i)
        g[i] = first + i;
    return g;
}

Group join(std::initializer_list<Group> groups) {
    Group out;
    for (const auto &g : groups)
        out.insert(out.end(), g.begin(), g.end());
    return out;
}

// Arcs between the anchor triple and every vertex listed under a sign pattern.
void add_sign_class(std::vector<Arc> &arcs, const Group &anchors, const Group &vertices,
                    std::string_view pattern) {
    const SignVector s = SignVector::parse(pattern);
    for (int k = 0; k < 3; ++k)
        for (int v : vertices)
            arcs.push_back(s.from_anchor(k) ? Arc{anchors[k], v} : Arc{v, anchors[k]});
}

// a -> z1 -> b -> z2 -> a
void add_four_cycle(std::vector<Arc> &arcs, int a, int b, int z1, int z2) {
    arcs.push_back({a, z1});
    arcs.push_back({z1, b});
    arcs.push_back({b, z2});
    arcs.push_back({z2, a});
}

Orientation checked(Orientation d, int promised, std::string_view what) {
    Distance got = diameter(d);
    if (got != Distance(promised))
        throw Error(ErrorKind::ConstructionFailed,
                    std::string(what) + " has diameter " + got.to_string() + ", expected " +
                        std::to_string(promised));
    return d;
}

std::string arc_text(const Topology &t, const Arc &a) {
    return vertex_name(t, a.from) + "->" + vertex_name(t, a.to);
}

// K(3,3,3), found by decide_diameter2 with the default configuration.
constexpr std::array<Arc, 27> kK333Witness = {{
    {0, 6}, {0, 7}, {0, 8}, {1, 3}, {1, 6}, {1, 7}, {2, 4}, {2, 6}, {2, 8},
    {3, 0}, {3, 2}, {3, 8}, {4, 0}, {4, 1}, {4, 7}, {5, 0}, {5, 1}, {5, 2},
    {6, 3}, {6, 4}, {6, 5}, {7, 2}, {7, 3}, {7, 5}, {8, 1}, {8, 4}, {8, 5},
}};

Construction build_336() {
    const Topology t = make_complete_multipartite({3, 3, 6});
    const Group x = range(0, 3);
    const int y1 = 3, y2 = 4, y3 = 5;
    const Group zppp = {6}, zpmm = {7, 8}, zmpm = {9, 10}, zmmm = {11};
    const Group y23 = {y2, y3};

    std::vector<Arc> fixed;
    add_sign_class(fixed, x, zppp, "+++");
    add_sign_class(fixed, x, zpmm, "+--");
    add_sign_class(fixed, x, zmpm, "-+-");
    add_sign_class(fixed, x, zmmm, "---");
    // {y2,y3} -> {x1,x2} -> y1 -> x3 -> {y2,y3}
    add_arcs(fixed, y23, Group{x[0], x[1]});
    add_arcs(fixed, Group{x[0], x[1]}, Group{y1});
    fixed.push_back({y1, x[2]});
    add_arcs(fixed, Group{x[2]}, y23);
    // V3^{+++} -> y1 -> V3 \ V3^{+++};  V3^{+++} -> {y2,y3} -> V3^{---}
    add_arcs(fixed, zppp, Group{y1});
    add_arcs(fixed, Group{y1}, join({zpmm, zmpm, zmmm}));
    add_arcs(fixed, zppp, y23);
    add_arcs(fixed, y23, zmmm);

    std::vector<Arc> preferred;
    add_four_cycle(preferred, y2, y3, zpmm[0], zpmm[1]);
    add_four_cycle(preferred, y2, y3, zmpm[0], zmpm[1]);

    std::vector<std::string> log;
    Orientation d = complete_ambiguous(t, fixed, preferred, 2, log, "K(3,3,6) {y2,y3} four-cycles");
    return {ConstructionFamily::K33q, 6, std::move(d), 2, std::move(log)};
}

Construction build_334() {
    const Topology t = make_complete_multipartite({3, 3, 4});
    const Group x = range(0, 3);
    const int y1 = 3, y2 = 4, y3 = 5;
    const int zppp = 6, zppm = 7, zpmp = 8, zpmm = 9;

    std::vector<Arc> arcs;
    add_sign_class(arcs, x, {zppp}, "+++");
    add_sign_class(arcs, x, {zppm}, "++-");
    add_sign_class(arcs, x, {zpmp}, "+-+");
    add_sign_class(arcs, x, {zpmm}, "+--");
    // V2 -> x1, {y2,y3} -> x2 -> y1, {y1,y3} -> x3 -> y2
    add_arcs(arcs, Group{y1, y2, y3}, Group{x[0]});
    add_arcs(arcs, Group{y2, y3}, Group{x[1]});
    arcs.push_back({x[1], y1});
    add_arcs(arcs, Group{y1, y3}, Group{x[2]});
    arcs.push_back({x[2], y2});
    // V3^{+++} u V3^{++-} -> y1 -> V3^{+-+} u V3^{+--}
    add_arcs(arcs, Group{zppp, zppm}, Group{y1});
    add_arcs(arcs, Group{y1}, Group{zpmp, zpmm});
    // V3^{+++} u V3^{+-+} -> y2 -> V3^{++-} u V3^{+--}
    add_arcs(arcs, Group{zppp, zpmp}, Group{y2});
    add_arcs(arcs, Group{y2}, Group{zppm, zpmm});
    // V3 -> y3
    add_arcs(arcs, Group{zppp, zppm, zpmp, zpmm}, Group{y3});
    return {ConstructionFamily::K33q, 4, checked(orient(t, arcs), 2, "K(3,3,4)"), 2, {}};
}

Construction build_3410() {
    const Topology t = make_complete_multipartite({3, 4, 10});
    const Group x = range(0, 3);
    const int y1 = 3, y2 = 4, y3 = 5, y4 = 6;
    const int z0 = 7;
    auto z = [&](int k) { return z0 + K34Base::z(k); };
    const int zp = z0 + K34Base::z_plus, zm = z0 + K34Base::z_minus;
    const Group v2 = {y1, y2, y3, y4};

    std::vector<Arc> arcs;
    add_sign_class(arcs, x, {zp}, "+++");
    add_sign_class(arcs, x, {zm}, "---");
    add_sign_class(arcs, x, {z(1), z(2)}, "+-+");
    add_sign_class(arcs, x, {z(3), z(4)}, "-++");
    add_sign_class(arcs, x, {z(5), z(6)}, "+--");
    add_sign_class(arcs, x, {z(7), z(8)}, "-+-");
    // {y3,y4} -> {x1,x2} -> {y1,y2} -> x3 -> {y3,y4}
    add_arcs(arcs, Group{y3, y4}, Group{x[0], x[1]});
    add_arcs(arcs, Group{x[0], x[1]}, Group{y1, y2});
    add_arcs(arcs, Group{y1, y2}, Group{x[2]});
    add_arcs(arcs, Group{x[2]}, Group{y3, y4});
    // V3^{+++} -> V2 -> V3^{---}
    add_arcs(arcs, Group{zp}, v2);
    add_arcs(arcs, v2, Group{zm});
    // {y1,y2} -> V3^{+--} u V3^{-+-};  V3^{+-+} u V3^{-++} -> {y3,y4}
    add_arcs(arcs, Group{y1, y2}, Group{z(5), z(6), z(7), z(8)});
    add_arcs(arcs, Group{z(1), z(2), z(3), z(4)}, Group{y3, y4});
    add_four_cycle(arcs, y1, y2, z(1), z(2));
    add_four_cycle(arcs, y1, y2, z(3), z(4));
    add_four_cycle(arcs, y3, y4, z(5), z(6));
    add_four_cycle(arcs, y3, y4, z(7), z(8));
    return {ConstructionFamily::K34q, 10, checked(orient(t, arcs), 2, "K(3,4,10)"), 2, {}};
}

std::vector<VertexSet> middle_layer_subsets(int p, int count) {
    std::vector<VertexSet> subsets;
    const int k = p / 2;
    for (VertexSet s = 0; s < (VertexSet{1} << p); ++s)
        if (set_size(s) == k)
            subsets.push_back(s);
    // Lexicographic order of the sorted index tuples.
    std::ranges::sort(subsets, [](VertexSet a, VertexSet b) { return members(a) < members(b); });
    subsets.resize(count);
    return subsets;
}

Construction build_3411() {
    const Topology t = make_complete_multipartite({3, 4, 11});
    const Group x = range(0, 3);
    const int y1 = 3, y2 = 4, y3 = 5, y4 = 6;
    const Group v2 = {y1, y2, y3, y4};
    const Group zppp = {7}, zppm = {8, 9}, zpmp = {10, 11}, zpmm = range(12, 6);

    std::vector<Arc> fixed;
    add_sign_class(fixed, x, zppp, "+++");
    add_sign_class(fixed, x, zppm, "++-");
    add_sign_class(fixed, x, zpmp, "+-+");
    add_sign_class(fixed, x, zpmm, "+--");
    // V2 -> x1, y4 -> x2 -> V2 \ {y4}, y1 -> x3 -> V2 \ {y1}
    add_arcs(fixed, v2, Group{x[0]});
    fixed.push_back({y4, x[1]});
    add_arcs(fixed, Group{x[1]}, Group{y1, y2, y3});
    fixed.push_back({y1, x[2]});
    add_arcs(fixed, Group{x[2]}, Group{y2, y3, y4});
    // V3^{+++} -> V2, V3^{++-} -> {y1,y4}, V3^{+-+} -> {y1,y4}
    add_arcs(fixed, zppp, v2);
    add_arcs(fixed, zppm, Group{y1, y4});
    add_arcs(fixed, zpmp, Group{y1, y4});
    // V2 <-> V3^{+--} as the middle-layer orientation of K(4,6).
    const auto subsets = middle_layer_subsets(4, 6);
    for (int k = 0; k < 6; ++k)
        for (int i = 0; i < 4; ++i)
            fixed.push_back(contains(subsets[k], i) ? Arc{zpmm[k], v2[i]} : Arc{v2[i], zpmm[k]});

    std::vector<Arc> preferred;
    add_four_cycle(preferred, y2, y3, zppm[0], zppm[1]);
    add_four_cycle(preferred, y2, y3, zpmp[0], zpmp[1]);

    std::vector<std::string> log;
    Orientation d = complete_ambiguous(t, fixed, preferred, 2, log, "K(3,4,11) {y2,y3} four-cycles");
    return {ConstructionFamily::K34q, 11, std::move(d), 2, std::move(log)};
}

} // namespace

Orientation complete_ambiguous(const Topology &topology, const std::vector<Arc> &fixed,
                               const std::vector<Arc> &preferred, int target_diameter,
                               std::vector<std::string> &log, std::string_view what) {
    if (preferred.size() > 16)
        throw std::invalid_argument("too many ambiguous arcs for completion search");
    const std::uint32_t patterns = 1U << preferred.size();
    for (std::uint32_t flip = 0; flip < patterns; ++flip) {
        std::vector<Arc> arcs = fixed;
        for (std::size_t i = 0; i < preferred.size(); ++i) {
            Arc a = preferred[i];
            arcs.push_back(((flip >> i) & 1U) != 0 ? Arc{a.to, a.from} : a);
        }
        Orientation d = orient(topology, arcs);
        if (diameter(d) != Distance(target_diameter))
            continue;
        if (flip != 0) {
            std::string flipped;
            for (std::size_t i = 0; i < preferred.size(); ++i)
                if (((flip >> i) & 1U) != 0)
                    flipped += (flipped.empty() ? "" : ", ") + arc_text(topology, preferred[i]);
            log.push_back(std::string(what) + ": preferred directions fail; reversed " + flipped);
        }
        return d;
    }
    throw Error(ErrorKind::ConstructionFailed,
                std::string(what) + ": no completion reaches diameter " +
                    std::to_string(target_diameter));
}

Construction construct_33q(int q) {
    if (q < 3 || q > 6)
        throw Error(ErrorKind::QOutOfRange, "K(3,3,q) constructions cover 3 <= q <= 6, got " +
                                                std::to_string(q));
    if (q == 3) {
        const Topology t = make_complete_multipartite({3, 3, 3});
        Construction c{ConstructionFamily::K33q, 3,
                       checked(orient(t, kK333Witness), 2, "K(3,3,3)"), 2, {}};
        c.completion_log.push_back(
            "K(3,3,3): fixed arc table from decide_diameter2 (default configuration)");
        return c;
    }
    if (q == 4)
        return build_334();
    Construction six = build_336();
    if (q == 6)
        return six;
    // Drop the V3^{---} vertex, the last one.
    const VertexSet keep = six.orientation.topology().all_vertices() & ~vertex_bit(11);
    Construction c{ConstructionFamily::K33q, 5,
                   checked(induced_suborientation(six.orientation, keep).orientation, 2,
                           "K(3,3,5)"),
                   2, six.completion_log};
    c.completion_log.push_back("K(3,3,5): K(3,3,6) without its --- vertex");
    return c;
}

VertexSet k34_deletion_keep(int q) {
    using B = K34Base;
    VertexSet removed = 0;
    auto drop = [&](int z) { removed |= vertex_bit(7 + z); };
    switch (q) {
    case 10: break;
    case 9: drop(B::z_minus); break;
    case 8: drop(B::z_minus); drop(B::z_plus); break;
    case 7: drop(B::z(7)); drop(B::z(8)); drop(B::z_minus); break;
    case 6: drop(B::z(7)); drop(B::z(8)); drop(B::z_plus); drop(B::z_minus); break;
    case 5:
        drop(B::z(1)); drop(B::z(2)); drop(B::z(7)); drop(B::z(8)); drop(B::z_minus);
        break;
    case 4:
        drop(B::z(1)); drop(B::z(2)); drop(B::z(7)); drop(B::z(8));
        drop(B::z_plus); drop(B::z_minus);
        break;
    default:
        throw Error(ErrorKind::QOutOfRange, "no deletion recipe for q = " + std::to_string(q));
    }
    const VertexSet all = (VertexSet{1} << 17) - 1;
    return all & ~removed;
}

Construction construct_34q(int q) {
    if (q < 4 || q > 11)
        throw Error(ErrorKind::QOutOfRange, "K(3,4,q) constructions cover 4 <= q <= 11, got " +
                                                std::to_string(q));
    if (q == 11)
        return build_3411();
    Construction ten = build_3410();
    if (q == 10)
        return ten;
    const std::string name = "K(3,4," + std::to_string(q) + ")";
    auto induced = induced_suborientation(ten.orientation, k34_deletion_keep(q));
    return {ConstructionFamily::K34q, q, checked(std::move(induced.orientation), 2, name), 2, {}};
}

Construction middle_layer_bipartite(int p, int q) {
    if (p < 1 || q < 1)
        throw std::invalid_argument("both sides need at least one vertex");
    const auto limit = binomial(p, p / 2);
    if (static_cast<std::uint64_t>(q) > limit)
        throw Error(ErrorKind::ThresholdExceeded,
                    "q = " + std::to_string(q) + " exceeds binom(" + std::to_string(p) + "," +
                        std::to_string(p / 2) + ") = " + std::to_string(limit));
    const Topology t = make_complete_multipartite({p, q});
    const auto subsets = middle_layer_subsets(p, q);
    std::vector<Arc> arcs;
    for (int k = 0; k < q; ++k)
        for (int i = 0; i < p; ++i)
            arcs.push_back(contains(subsets[k], i) ? Arc{p + k, i} : Arc{i, p + k});
    Orientation d = orient(t, arcs);
    for (int a = p; a < p + q; ++a)
        for (int b = p; b < p + q; ++b)
            if (!within_two(d, a, b))
                throw Error(ErrorKind::ConstructionFailed, "big-side pair beyond distance 2");
    Distance diam = diameter(d);
    return {ConstructionFamily::MiddleLayerBipartite, q, std::move(d),
            diam.is_finite() ? diam.value() : -1, {}};
}

namespace {

Orientation rotational_tournament(int n) {
    const Topology t = make_complete_multipartite(std::vector<int>(n, 1));
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int s = 1; s <= (n - 1) / 2; ++s)
            arcs.push_back({i, (i + s) % n});
    return orient(t, arcs);
}

} // namespace

Construction complete_graph_orientation(int n) {
    if (n < 3)
        throw Error(ErrorKind::NTooSmall, "n must be at least 3, got " + std::to_string(n));
    const int promised = n == 4 ? 3 : 2;
    Construction c{ConstructionFamily::CompleteGraph, n, rotational_tournament(3), promised, {}};
    if (n % 2 == 1) {
        c.orientation = checked(rotational_tournament(n), promised, "rotational tournament");
        return c;
    }
    const Topology t = make_complete_multipartite(std::vector<int>(n, 1));
    if (n == 4) {
        // First tournament, in enumeration order, attaining the minimum diameter.
        const auto edges = t.edges();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
            Orientation d = orientation_from_mask(t, edges, mask);
            if (diameter(d) == Distance(3)) {
                c.orientation = d;
                c.completion_log.push_back("K_4: first diameter-3 tournament by brute force");
                return c;
            }
        }
        throw Error(ErrorKind::ConstructionFailed, "no diameter-3 tournament on 4 vertices");
    }
    if (n <= 8) {
        SearchOutcome found = decide_diameter2(std::vector<int>(n, 1));
        if (found.verdict != Verdict::Exists)
            throw Error(ErrorKind::ConstructionFailed, "search found no diameter-2 tournament");
        c.orientation = checked(*found.witness, promised, "searched tournament");
        c.completion_log.push_back("K_" + std::to_string(n) + ": exhaustive diameter-2 search");
        return c;
    }
    // Rotational tournament on n - 1 vertices plus a vertex beating the even ones.
    Orientation base = rotational_tournament(n - 1);
    std::vector<Arc> arcs = base.arcs();
    arcs.reserve(arcs.size() + n - 1);
    for (int i = 0; i < n - 1; ++i)
        arcs.push_back(i % 2 == 0 ? Arc{n - 1, i} : Arc{i, n - 1});
    c.orientation = checked(orient(t, arcs), promised, "extended rotational tournament");
    c.completion_log.push_back("K_" + std::to_string(n) +
                               ": rotational tournament on n-1 vertices plus one vertex");
    return c;
}

} // namespace odiam
