#include "odiam/claims.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <filesystem>

using namespace odiam;

TEST_CASE("K(3,3,q) claims, q = 3..7") {
    ClaimReport r = verify_claims(ClaimFamily::K33q);
    REQUIRE(r.rows.size() == 5);
    for (const auto &row : r.rows) {
        CAPTURE(row.id);
        CHECK(row.pass);
        CHECK_FALSE(row.unknown);
    }
    CHECK(r.rows[3].q == 6);
    CHECK(r.rows[3].method == ClaimMethod::Construct);
    CHECK(r.rows[3].observed == 2);
    CHECK(r.rows[4].q == 7);
    CHECK(r.rows[4].graph == "K(3,3,7)");
    CHECK(r.rows[4].method == ClaimMethod::SearchWithBound);
    CHECK(r.rows[4].expected == 3);
    CHECK(r.rows[4].observed == 3);
    CHECK(r.exit_code() == 0);
}

TEST_CASE("K(3,4,q) claims, q = 4..12") {
    ClaimReport r = verify_claims(ClaimFamily::K34q);
    REQUIRE(r.rows.size() == 9);
    for (const auto &row : r.rows) {
        CAPTURE(row.id);
        CHECK(row.pass);
        CHECK(row.expected == (row.q <= 11 ? 2 : 3));
    }
    CHECK(r.rows.back().method == ClaimMethod::SearchWithBound);
    CHECK(r.exit_code() == 0);

    ClaimOptions only;
    only.q_min = 10;
    only.q_max = 11;
    CHECK(verify_claims(ClaimFamily::K34q, only).rows.size() == 2);
    only.q_min = 2;
    CHECK(error_kind([&] { verify_claims(ClaimFamily::K34q, only); }) == ErrorKind::QOutOfRange);
}

TEST_CASE("baselines are brute-forced against the closed forms") {
    ClaimReport r = verify_claims(ClaimFamily::Baselines);
    REQUIRE(r.rows.size() == 7);
    for (const auto &row : r.rows) {
        CAPTURE(row.id);
        CHECK(row.method == ClaimMethod::BruteForce);
        CHECK(row.pass);
    }
    CHECK(complete_graph_oriented_diameter(4) == 3);
    CHECK(complete_graph_oriented_diameter(9) == 2);
    CHECK(complete_bipartite_oriented_diameter(2, 3) == 4);
    CHECK(complete_bipartite_oriented_diameter(4, 6) == 3);
    CHECK(complete_bipartite_oriented_diameter(7, 4) == 4);
}

TEST_CASE("an exhausted budget is Unknown, exit code 3, and leaves a CNF behind") {
    const auto dir = std::filesystem::temp_directory_path() / "odiam_test_claims";
    std::filesystem::remove_all(dir);
    ClaimOptions opts;
    opts.q_min = 7;
    opts.q_max = 7;
    opts.search.node_budget = 5;
    opts.cnf_dir = dir;
    ClaimReport r = verify_claims(ClaimFamily::K33q, opts);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].unknown);
    CHECK_FALSE(r.rows[0].pass);
    CHECK_FALSE(r.rows[0].observed);
    CHECK(r.exit_code() == 3);
    CHECK(std::filesystem::exists(dir / "k33_7.cnf"));
    CHECK(format_claim_table(r).find("UNKNOWN") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("exit codes and the settle invariant") {
    ClaimRecord ok;
    ok.expected = 2;
    ok.observed = 2;
    ok.settle();
    CHECK(ok.pass);

    ClaimRecord formula = ok;
    formula.method = ClaimMethod::FormulaUnverified;
    formula.settle();
    CHECK_FALSE(formula.pass);

    ClaimRecord wrong = ok;
    wrong.observed = 3;
    wrong.settle();
    CHECK_FALSE(wrong.pass);

    ClaimRecord unknown = ok;
    unknown.unknown = true;
    unknown.settle();
    CHECK_FALSE(unknown.pass);

    CHECK(ClaimReport{{ok}}.exit_code() == 0);
    CHECK(ClaimReport{{ok, unknown}}.exit_code() == 3);
    CHECK(ClaimReport{{wrong, unknown}}.exit_code() == 1);
    CHECK(ClaimReport{{ok, formula}}.exit_code() == 1);
}

TEST_CASE("report formatting") {
    ClaimReport r = verify_claims(ClaimFamily::Baselines);
    const std::string table = format_claim_table(r, false);
    CHECK(table.rfind("claim", 0) == 0);
    CHECK(table.find("seconds") == std::string::npos);
    CHECK(table.find("K(2,3)") != std::string::npos);
    CHECK(format_claim_table(r, true).find("seconds") != std::string::npos);

    ordered_json j = claim_report_json(r);
    CHECK(j["claims"].size() == 7);
    CHECK(j["exit_code"] == 0);
    CHECK(j["claims"][0]["method"] == "brute-force");
}

TEST_CASE("family names") {
    CHECK(parse_claim_family("33q") == ClaimFamily::K33q);
    CHECK(parse_claim_family("34q") == ClaimFamily::K34q);
    CHECK(parse_claim_family("baselines") == ClaimFamily::Baselines);
    CHECK(error_kind([] { parse_claim_family("35q"); }) == ErrorKind::BadFamily);
}
