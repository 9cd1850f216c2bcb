#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "resolv/closed_form.hpp"

using namespace resolv;

TEST_CASE("theorem witnesses by parity") {
    auto a6 = theorem_witness(Family::double_antiprism, 6);
    CHECK(a6.parity == Parity::even);
    CHECK(a6.ring_positions == std::array<int, 4>{1, 2, 4, 5});
    CHECK(a6.ids == LandmarkSet{0, 1, 3, 4});
    CHECK(a6.names[0] == "j^1_1");
    CHECK(a6.names[3] == "j^5_1");

    auto a7 = theorem_witness(Family::double_antiprism, 7);
    CHECK(a7.parity == Parity::odd);
    CHECK(a7.ring_positions == std::array<int, 4>{1, 2, 4, 6});

    auto s7 = theorem_witness(Family::s_poly, 7);
    CHECK(s7.ring_positions == std::array<int, 4>{1, 2, 4, 5});

    auto t9 = theorem_witness(Family::t_poly, 9);
    CHECK(t9.ring_positions == std::array<int, 4>{1, 2, 5, 7});

    CHECK_THROWS_AS(theorem_witness(Family::double_antiprism, 5), Error);
}

TEST_CASE("alternate witness exists only for odd tpoly") {
    CHECK(!theorem_witness_alternate(Family::double_antiprism, 7).has_value());
    CHECK(!theorem_witness_alternate(Family::t_poly, 8).has_value());
    CHECK(!theorem_witness_alternate(Family::s_poly, 9).has_value());
    auto alt = theorem_witness_alternate(Family::t_poly, 7);
    REQUIRE(alt.has_value());
    CHECK(alt->ring_positions == std::array<int, 4>{1, 2, 4, 5});
}

TEST_CASE("verify_witness runs the deletion check") {
    CHECK(verify_witness(Family::double_antiprism, 6).primary_passes);
    CHECK(verify_witness(Family::s_poly, 8).primary_passes);

    auto t9 = verify_witness(Family::t_poly, 9);
    CHECK(t9.primary_passes);
    REQUIRE(t9.alternate_passes.has_value());
    // the deletion-subset variant of the odd tpoly witness is not an FTRS
    CHECK(!*t9.alternate_passes);
    CHECK(t9.any_passes());
    CHECK(t9.summary().find("PASS") != std::string::npos);
    CHECK(t9.summary().find("FAIL") != std::string::npos);
}

TEST_CASE("table_codes evaluates the printed rows") {
    auto r = table_codes(Family::double_antiprism, 6, 0);  // j^1_1
    REQUIRE(r.size() == 1);
    CHECK(r[0].code == std::array<int, 4>{0, 1, 3, 2});

    r = table_codes(Family::double_antiprism, 6, 6);  // j^1_2
    REQUIRE(r.size() == 1);
    CHECK(r[0].code == std::array<int, 4>{1, 1, 3, 3});

    r = table_codes(Family::s_poly, 6, 13);  // j^2_3
    REQUIRE(r.size() == 1);
    CHECK(r[0].code == std::array<int, 4>{3, 2, 3, 4});

    // spoly layer 2 is the printed layer-1 row shifted by one
    auto base = table_codes(Family::s_poly, 6, 0);
    auto shifted = table_codes(Family::s_poly, 6, 6);
    REQUIRE(base.size() == 1);
    REQUIRE(shifted.size() == 1);
    CHECK(shifted[0].shifted);
    for (int c = 0; c < 4; ++c) CHECK(shifted[0].code[c] == base[0].code[c] + 1);

    // odd antiprism2 outer layer: position g+1 is printed twice
    const int n = 7, g = 3;
    int dup_vertex = polytope_vertex(n, g + 1, 3);
    auto both = table_codes(Family::double_antiprism, n, dup_vertex);
    CHECK(both.size() == 2);

    CHECK_THROWS_AS(table_codes(Family::double_antiprism, 5, 0), Error);
    CHECK_THROWS_AS(table_codes(Family::double_antiprism, 6, 99), Error);
}

TEST_CASE("verify_tables discrepancy reports") {
    auto a6 = verify_tables(Family::double_antiprism, 6);
    CHECK(a6.cells.size() == 72);  // 3n vertices x 4 landmarks
    CHECK(a6.mismatch_count == 1);
    CHECK(a6.overlap_count == 0);
    CHECK(a6.gap_count == 0);
    // the one bad cell: outer layer, ring g+1, second landmark column
    bool found = false;
    for (const auto& c : a6.cells)
        if (!c.match) {
            CHECK(c.layer == 3);
            CHECK(c.ring == 4);
            CHECK(c.landmark == 1);
            CHECK(c.printed == 6);
            CHECK(c.bfs == 4);
            found = true;
        }
    CHECK(found);

    auto a7 = verify_tables(Family::double_antiprism, 7);
    CHECK(a7.cells.size() == 88);  // one duplicated row adds 4 cells
    CHECK(a7.mismatch_count == 2);
    CHECK(a7.overlap_count == 1);
    CHECK(a7.duplicated_positions ==
          std::vector<std::pair<int, int>>{{3, 4}});  // layer 3, ring g+1

    for (int n = 6; n <= 12; ++n) {
        auto s = verify_tables(Family::s_poly, n);
        CHECK(s.cells.size() == static_cast<std::size_t>(16 * n));
        CHECK(s.mismatch_count == 0);
        CHECK(s.overlap_count == 0);
        CHECK(s.gap_count == 0);
    }

    CHECK(verify_tables(Family::t_poly, 8).mismatch_count == 0);
    auto t7 = verify_tables(Family::t_poly, 7);
    CHECK(t7.mismatch_count == 14);
    CHECK(t7.gap_count == 0);

    // printed ranges cover every vertex for all tested n
    for (Family f : {Family::double_antiprism, Family::s_poly, Family::t_poly})
        for (int n = 6; n <= 30; ++n) CHECK(verify_tables(f, n).gap_count == 0);
}

TEST_CASE("discrepancy CSV carries cell rows and anomaly rows") {
    auto a7 = verify_tables(Family::double_antiprism, 7);
    std::string csv = a7.to_csv(true);
    CHECK(csv.find("family,n,parity,") == 0);
    CHECK(csv.find("DUPLICATE_ROW") != std::string::npos);
    CHECK(csv.find("MISMATCH") != std::string::npos);
    std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == 1 + a7.cells.size() + 1);  // header + cells + duplicate marker
}

TEST_CASE("shifted layer relations") {
    auto s = shifted_code_layers(Family::s_poly);
    REQUIRE(s.size() == 2);
    CHECK(s[0].base_layer == 1);
    CHECK(s[0].derived_layer == 2);
    auto t = shifted_code_layers(Family::t_poly);
    REQUIRE(t.size() == 1);
    CHECK(t[0].base_layer == 3);
    CHECK(t[0].derived_layer == 4);
    CHECK(shifted_code_layers(Family::double_antiprism).empty());

    for (int n = 6; n <= 20; ++n) {
        CHECK(verify_shift_relations(Family::s_poly, n));
        CHECK(verify_shift_relations(Family::t_poly, n));
        CHECK(verify_shift_relations(Family::double_antiprism, n));
    }
}

TEST_CASE("witness fault tolerance across a wide range") {
    for (Family f : {Family::double_antiprism, Family::s_poly, Family::t_poly})
        for (int n = 6; n <= 24; ++n) CHECK(verify_witness(f, n).primary_passes);
}
