#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "afc/solver.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace afc;

namespace {

// exhaustive feasibility reference: does any c-colouring avoid k-anagrams?
bool exists_free_colouring(const Graph& g, Mode mode, int k, int c) {
    int n = mode == Mode::vertex ? g.n() : g.m();
    if (n == 0) return true;
    if (c == 0) return false;
    std::vector<int> ids(n, 0);
    while (true) {
        Colouring col = mode == Mode::vertex ? vertex_colouring(g, ids)
                                             : edge_colouring(g, ids);
        if (!oracles::naive_contains_k_anagram(g, col, k)) return true;
        int i = 0;
        while (i < n && ++ids[i] == c) {
            ids[i] = 0;
            ++i;
        }
        if (i == n) return false;
    }
}

}  // namespace

TEST_CASE("paths need one more colour at eight vertices") {
    const int want[] = {1, 2, 2, 3, 3, 3, 3, 4};
    for (int n = 1; n <= 8; ++n) {
        auto v = exact_chromatic(make_path(n), Mode::vertex, 2, 6);
        REQUIRE(v.has_value());
        CHECK(*v == want[n - 1]);
    }
    auto p12 = exact_chromatic(make_path(12), Mode::vertex, 2, 6);
    REQUIRE(p12.has_value());
    CHECK(*p12 == 4);
}

TEST_CASE("star edges need their degree") {
    for (int d = 1; d <= 4; ++d) {
        std::vector<std::pair<int, int>> es;
        for (int i = 1; i <= d; ++i) es.push_back({0, i});
        Graph star = Graph::from_edges(d + 1, std::move(es));
        auto v = exact_chromatic(star, Mode::edge, 2, d + 1);
        REQUIRE(v.has_value());
        CHECK(*v == d);
    }
}

TEST_CASE("cycles stay within five colours") {
    for (int n = 3; n <= 8; ++n) {
        auto v = exact_chromatic(make_cycle(n), Mode::vertex, 2, 5);
        REQUIRE(v.has_value());
        CHECK(*v <= 5);
        CHECK(*v >= 2);
    }
}

TEST_CASE("degenerate inputs") {
    auto one = exact_chromatic(make_path(1), Mode::vertex, 2, 3);
    REQUIRE(one.has_value());
    CHECK(*one == 1);
    auto no_edges = exact_chromatic(make_path(1), Mode::edge, 2, 3);
    REQUIRE(no_edges.has_value());
    CHECK(*no_edges == 1);
    CHECK_THROWS_AS(exact_chromatic(make_path(2), Mode::vertex, 1, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(exact_chromatic(make_path(2), Mode::vertex, 2, 0),
                    std::invalid_argument);
}

TEST_CASE("max_c is an honest ceiling") {
    CHECK_FALSE(exact_chromatic(make_path(8), Mode::vertex, 2, 3));
    CHECK(exact_chromatic(make_path(8), Mode::vertex, 2, 4).has_value());
}

TEST_CASE("budget exhaustion is loud") {
    CHECK_THROWS_AS(exact_chromatic(make_path(12), Mode::vertex, 2, 6, 50),
                    BudgetExceeded);
}

TEST_CASE("solver agrees with exhaustive feasibility on small trees") {
    for (int seed = 1; seed <= 15; ++seed) {
        Graph t = testutil::random_tree(2 + seed % 5, seed * 3);
        auto v = exact_chromatic(t, Mode::vertex, 2, 6);
        REQUIRE(v.has_value());
        CHECK(exists_free_colouring(t, Mode::vertex, 2, *v));
        if (*v > 1)
            CHECK_FALSE(exists_free_colouring(t, Mode::vertex, 2, *v - 1));
    }
    for (int seed = 1; seed <= 6; ++seed) {
        Graph t = testutil::random_tree(3 + seed % 4, seed * 11);
        auto v = exact_chromatic(t, Mode::edge, 2, 6);
        REQUIRE(v.has_value());
        CHECK(exists_free_colouring(t, Mode::edge, 2, *v));
        if (*v > 1)
            CHECK_FALSE(exists_free_colouring(t, Mode::edge, 2, *v - 1));
    }
}

TEST_CASE("higher k never needs more colours") {
    auto chain = verify_monotone_chain(make_path(8), Mode::vertex, 4);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] == 4);
    CHECK(chain[0] >= chain[1]);
    CHECK(chain[1] >= chain[2]);

    auto cyc = verify_monotone_chain(make_cycle(6), Mode::vertex, 4);
    CHECK(cyc.size() == 3);

    auto tiny = verify_monotone_chain(make_path(1), Mode::vertex, 4);
    CHECK(tiny == std::vector<int>{1, 1, 1});
    auto tiny_e = verify_monotone_chain(make_path(1), Mode::edge, 3);
    CHECK(tiny_e == std::vector<int>{1, 1});

    for (int seed = 1; seed <= 5; ++seed) {
        Graph t = testutil::random_tree(4 + seed, seed * 19);
        auto vals = verify_monotone_chain(t, Mode::vertex, 4);
        CHECK(vals.size() == 3);
    }
}

TEST_CASE("edge value never exceeds the line graph value") {
    for (int seed = 1; seed <= 12; ++seed) {
        Graph t = testutil::random_tree(2 + seed % 8, seed * 23);
        auto a = exact_chromatic(t, Mode::edge, 2, 8);
        auto b = exact_chromatic(line_graph(t), Mode::vertex, 2, 8);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(*a <= *b);
    }
    // for paths the line graph is again a path, and the values coincide
    auto a = exact_chromatic(make_path(9), Mode::edge, 2, 6);
    auto b = exact_chromatic(make_path(8), Mode::vertex, 2, 6);
    REQUIRE(a.has_value());
    CHECK(*a == *b);
}
