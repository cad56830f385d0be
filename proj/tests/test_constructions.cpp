#include "odiam/analysis.hpp"
#include "odiam/constructions.hpp"
#include "odiam/search.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace odiam;

namespace {

int class_size(const Orientation &d, int part, const char *pattern) {
    for (const auto &sp : sign_partition(d, 0))
        if (sp.part_index == part)
            return sp.size(SignVector::parse(pattern));
    return -1;
}

// Diameter straight from the Floyd-Warshall oracle.
Distance oracle_diameter(const Orientation &d) {
    auto dist = test_support::floyd_warshall(d);
    Distance worst(0);
    for (const auto &row : dist)
        for (Distance x : row)
            worst = std::max(worst, x);
    return worst;
}

} // namespace

TEST_CASE("K(3,3,6) construction") {
    Construction c = construct_33q(6);
    CHECK(c.orientation.topology().parts() == std::vector<int>{3, 3, 6});
    CHECK(diameter(c.orientation) == Distance(2));
    CHECK(oracle_diameter(c.orientation) == Distance(2));
    CHECK(class_size(c.orientation, 2, "+++") == 1);
    CHECK(class_size(c.orientation, 2, "+--") == 2);
    CHECK(class_size(c.orientation, 2, "-+-") == 2);
    CHECK(class_size(c.orientation, 2, "---") == 1);
    CHECK(class_size(c.orientation, 2, "++-") == 0);
    // The preferred four-cycle directions already give diameter 2.
    CHECK(c.completion_log.empty());
}

TEST_CASE("K(3,3,6) reversed keeps diameter 2 (flipped arc list, oracle diameter)") {
    Construction c = construct_33q(6);
    std::vector<Arc> flipped;
    for (const Arc &a : c.orientation.arcs())
        flipped.push_back({a.to, a.from});
    Orientation manual = orient(c.orientation.topology(), flipped);
    CHECK(manual == reverse(c.orientation));
    CHECK(oracle_diameter(manual) == Distance(2));
    CHECK(diameter(reverse(c.orientation)) == Distance(2));
}

TEST_CASE("K(3,3,6) slices") {
    const Orientation d6 = construct_33q(6).orientation;
    const Topology &t = d6.topology();
    auto v23 = induced_suborientation(d6, t.part_mask(1) | t.part_mask(2));
    CHECK(v23.orientation.topology().parts() == std::vector<int>{3, 6});

    // {y2, y3} with the two +-- vertices: a directed 4-cycle.
    const VertexSet keep = vertex_bit(4) | vertex_bit(5) | vertex_bit(7) | vertex_bit(8);
    auto cyc = induced_suborientation(d6, keep);
    CHECK(cyc.orientation.topology().parts() == std::vector<int>{2, 2});
    for (int v = 0; v < 4; ++v) {
        CHECK(set_size(cyc.orientation.out(v)) == 1);
        CHECK(set_size(cyc.orientation.in(v)) == 1);
    }
    CHECK(is_strong(cyc.orientation));
}

TEST_CASE("K(3,3,q) for q = 3, 4, 5") {
    for (int q = 3; q <= 5; ++q) {
        CAPTURE(q);
        Construction c = construct_33q(q);
        CHECK(c.orientation.topology().parts() == std::vector<int>{3, 3, q});
        CHECK(diameter(c.orientation) == Distance(2));
        CHECK(oracle_diameter(c.orientation) == Distance(2));
    }
    Orientation d4 = construct_33q(4).orientation;
    for (const char *s : {"+++", "++-", "+-+", "+--"})
        CHECK(class_size(d4, 2, s) == 1);
}

TEST_CASE("K(3,3,5) is K(3,3,6) without the --- vertex, arc for arc") {
    Orientation d6 = construct_33q(6).orientation;
    Orientation d5 = construct_33q(5).orientation;
    for (int u = 0; u < 11; ++u)
        for (int v = 0; v < 11; ++v)
            CHECK(d5.has_arc(u, v) == d6.has_arc(u, v));
}

TEST_CASE("K(3,3,3) table matches the search witness it was taken from") {
    Construction c = construct_33q(3);
    SearchOutcome found = decide_diameter2(std::vector<int>{3, 3, 3});
    REQUIRE(found.verdict == Verdict::Exists);
    CHECK(*found.witness == c.orientation);
    CHECK(c.completion_log.size() == 1);
}

TEST_CASE("construct_33q rejects q outside [3,6]") {
    CHECK(error_kind([] { construct_33q(7); }) == ErrorKind::QOutOfRange);
    CHECK(error_kind([] { construct_33q(2); }) == ErrorKind::QOutOfRange);
}

TEST_CASE("K(3,4,q) constructions, q = 4..11") {
    for (int q = 4; q <= 11; ++q) {
        CAPTURE(q);
        Construction c = construct_34q(q);
        CHECK(c.orientation.topology().parts() == std::vector<int>{3, 4, q});
        CHECK(diameter(c.orientation) == Distance(2));
        CHECK(oracle_diameter(c.orientation) == Distance(2));
    }
    CHECK(error_kind([] { construct_34q(12); }) == ErrorKind::QOutOfRange);
    CHECK(error_kind([] { construct_34q(3); }) == ErrorKind::QOutOfRange);
}

TEST_CASE("K(3,4,11) class sizes and middle-layer block") {
    Orientation d11 = construct_34q(11).orientation;
    CHECK(class_size(d11, 2, "+++") == 1);
    CHECK(class_size(d11, 2, "++-") == 2);
    CHECK(class_size(d11, 2, "+-+") == 2);
    CHECK(class_size(d11, 2, "+--") == 6);
    const Topology &t = d11.topology();
    auto block = induced_suborientation(d11, t.part_mask(1) | (t.part_mask(2) & ~(VertexSet{0x1F} << 7)));
    CHECK(block.orientation.topology().parts() == std::vector<int>{4, 6});
    AntichainReport r = out_neighborhood_family(block.orientation, 1);
    CHECK(r.is_antichain);
    for (VertexSet s : r.family)
        CHECK(set_size(s) == 2);
}

TEST_CASE("K(3,4,10) class sizes") {
    Orientation d10 = construct_34q(10).orientation;
    CHECK(class_size(d10, 2, "+++") == 1);
    CHECK(class_size(d10, 2, "---") == 1);
    for (const char *s : {"+-+", "-++", "+--", "-+-"})
        CHECK(class_size(d10, 2, s) == 2);
}

TEST_CASE("K(3,4,q), q <= 9, are restrictions of the q = 10 base") {
    Orientation d10 = construct_34q(10).orientation;
    for (int q = 4; q <= 9; ++q) {
        CAPTURE(q);
        const VertexSet keep = k34_deletion_keep(q);
        CHECK(set_size(keep) == 7 + q);
        auto expected = induced_suborientation(d10, keep);
        Orientation got = construct_34q(q).orientation;
        CHECK(got == expected.orientation);
        for (int a = 0; a < got.n_vertices(); ++a)
            for (int b = 0; b < got.n_vertices(); ++b)
                CHECK(got.has_arc(a, b) ==
                      d10.has_arc(expected.parent_vertex[a], expected.parent_vertex[b]));
    }
}

TEST_CASE("middle-layer bipartite orientations") {
    Construction k46 = middle_layer_bipartite(4, 6);
    const Orientation &d = k46.orientation;
    for (int a = 4; a < 10; ++a)
        for (int b = 4; b < 10; ++b)
            CHECK(distance(d, a, b) <= Distance(2));
    std::vector<VertexSet> family;
    for (int z = 4; z < 10; ++z)
        family.push_back(d.out(z));
    CHECK(is_antichain(family));

    // Three singletons of the 3-side; all six ordered pairs within two.
    Construction k33 = middle_layer_bipartite(3, 3);
    int pairs = 0;
    for (int a = 3; a < 6; ++a) {
        CHECK(set_size(k33.orientation.out(a)) == 1);
        for (int b = 3; b < 6; ++b)
            if (a != b) {
                CHECK(distance(k33.orientation, a, b) == Distance(2));
                ++pairs;
            }
    }
    CHECK(pairs == 6);
    CHECK(k33.orientation.out(3) != k33.orientation.out(4));

    CHECK(error_kind([] { middle_layer_bipartite(2, 3); }) == ErrorKind::ThresholdExceeded);
    CHECK(error_kind([] { middle_layer_bipartite(4, 7); }) == ErrorKind::ThresholdExceeded);
}

TEST_CASE("tournaments attain the complete-graph oriented diameter") {
    CHECK(diameter(complete_graph_orientation(3).orientation) == Distance(2));
    CHECK(diameter(complete_graph_orientation(4).orientation) == Distance(3));
    CHECK(diameter(complete_graph_orientation(5).orientation) == Distance(2));
    for (int n = 6; n <= 40; ++n) {
        CAPTURE(n);
        Construction c = complete_graph_orientation(n);
        CHECK(c.orientation.topology().parts() == std::vector<int>(n, 1));
        CHECK(oracle_diameter(c.orientation) == Distance(2));
    }
    CHECK(error_kind([] { complete_graph_orientation(2); }) == ErrorKind::NTooSmall);
}

TEST_CASE("ambiguous arcs are completed and the choice is logged") {
    auto k3 = make_complete_multipartite({1, 1, 1});
    std::vector<std::string> log;
    // 0 -> 1 fixed; preferring 0 -> 2 makes vertex 0 a source.
    Orientation d = complete_ambiguous(k3, {{0, 1}}, {{1, 2}, {0, 2}}, 2, log, "test");
    CHECK(d.has_arc(2, 0));
    CHECK(d.has_arc(1, 2));
    REQUIRE(log.size() == 1);
    CHECK(log[0].find("x1->z1") != std::string::npos);

    std::vector<std::string> none;
    CHECK(error_kind([&] { complete_ambiguous(k3, {{0, 1}, {0, 2}}, {{1, 2}}, 2, none, "t"); }) ==
          ErrorKind::ConstructionFailed);
}
