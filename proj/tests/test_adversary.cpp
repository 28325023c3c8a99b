#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "afc/adversary.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace afc;

namespace {

GadgetSpec spec_of(Family f, int h = 0, int d = 0, int k = 0, int t = 0) {
    GadgetSpec s;
    s.family = f;
    s.h = h;
    s.d = d;
    s.k = k;
    s.t = t;
    return s;
}

}  // namespace

TEST_CASE("family names round trip") {
    for (Family f : {Family::edge_binary_tree, Family::sibling_graph,
                     Family::complete_dary, Family::kpower_gadget})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS_AS(family_from_name("mystery"), std::invalid_argument);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(spec_of(Family::edge_binary_tree, 0).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(spec_of(Family::sibling_graph, 4).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(spec_of(Family::complete_dary, 2, 1).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(spec_of(Family::kpower_gadget, 0, 0, 1, 1).validate(),
                    std::invalid_argument);
    CHECK_NOTHROW(spec_of(Family::sibling_graph, 5).validate());
}

TEST_CASE("edge tree gadget is the complete binary tree") {
    Gadget gd = build(spec_of(Family::edge_binary_tree, 3));
    CHECK(gd.g.n() == 15);
    CHECK(gd.g.is_tree());
    CHECK(gd.leaves().size() == 8);
    CHECK(gd.depth[7] == 3);
    CHECK(gd.parent[1] == 0);
    CHECK(gd.parent[0] == -1);
}

TEST_CASE("sibling graph structure") {
    Gadget gd = build(spec_of(Family::sibling_graph, 3));
    CHECK(gd.g.n() == 9);
    CHECK(gd.g.m() == 11);
    CHECK(gd.g.max_degree() <= 3);
    CHECK(gd.leaves().size() == 4);

    Gadget g5 = build(spec_of(Family::sibling_graph, 5));
    CHECK(g5.g.n() == 21);
    CHECK(g5.leaves().size() == 8);
    CHECK(g5.g.max_degree() <= 3);

    Gadget g17 = build(spec_of(Family::sibling_graph, 17));
    CHECK(g17.g.n() == 1533);
    CHECK(g17.leaves().size() == 512);
    CHECK(g17.g.max_degree() <= 3);
}

TEST_CASE("complete d-ary gadget") {
    Gadget gd = build(spec_of(Family::complete_dary, 2, 3));
    CHECK(gd.g.n() == 13);
    CHECK(gd.leaves().size() == 9);
    CHECK(gd.depth == std::vector<int>{0, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2});
}

TEST_CASE("kpower gadget shape and path counts") {
    Gadget g1 = build(spec_of(Family::kpower_gadget, 0, 0, 3, 1));
    CHECK(g1.g.n() == 7);
    // 2 on the inner path, 3 each to a and b, 2 pendants
    CHECK(g1.g.m() == 10);
    CHECK(g1.g.max_degree() == 4);
    CHECK(g1.g.degree(g1.kp.u) == 1);
    CHECK(g1.g.degree(g1.kp.v) == 1);
    CHECK(oracles::count_uv_paths(g1.g, g1.kp.u, g1.kp.v, 4) == 3);
    CHECK_THROWS_AS(g1.leaves(), std::logic_error);

    Gadget g2 = build(spec_of(Family::kpower_gadget, 0, 0, 3, 2));
    CHECK(g2.g.n() == 25);
    CHECK(g2.g.max_degree() == 4);
    CHECK(oracles::count_uv_paths(g2.g, g2.kp.u, g2.kp.v, 8) == 9);

    Gadget g3 = build(spec_of(Family::kpower_gadget, 0, 0, 3, 3));
    CHECK(g3.g.n() == 79);
    CHECK(oracles::count_uv_paths(g3.g, g3.kp.u, g3.kp.v, 12) == 27);

    Gadget k2 = build(spec_of(Family::kpower_gadget, 0, 0, 2, 2));
    CHECK(k2.g.n() == 16);
    CHECK(k2.g.max_degree() == 3);
    CHECK(oracles::count_uv_paths(k2.g, k2.kp.u, k2.kp.v, 8) == 4);
}

TEST_CASE("premise arithmetic") {
    CHECK_FALSE(premise_ok(spec_of(Family::edge_binary_tree, 5), 2));
    CHECK(premise_ok(spec_of(Family::edge_binary_tree, 6), 2));
    CHECK(premise_ok(spec_of(Family::edge_binary_tree, 2), 1));
    CHECK(premise_ok(spec_of(Family::complete_dary, 4, 4), 2));
    CHECK_FALSE(premise_ok(spec_of(Family::complete_dary, 4, 4), 3));
    CHECK(premise_ok(spec_of(Family::complete_dary, 3, 8), 2));
    CHECK(premise_ok(spec_of(Family::sibling_graph, 17), 2));
    CHECK_FALSE(premise_ok(spec_of(Family::sibling_graph, 15), 2));
    CHECK(premise_ok(spec_of(Family::sibling_graph, 5), 1));
    CHECK(premise_ok(spec_of(Family::kpower_gadget, 0, 0, 3, 10), 1));
    CHECK_FALSE(premise_ok(spec_of(Family::kpower_gadget, 0, 0, 3, 8), 1));
    CHECK_FALSE(premise_ok(spec_of(Family::kpower_gadget, 0, 0, 3, 4), 2));
    // saturated left side still compares cleanly against a small right side
    CHECK(premise_ok(spec_of(Family::edge_binary_tree, 200), 2));
    CHECK_THROWS_AS(premise_ok(spec_of(Family::edge_binary_tree, 2), 0),
                    std::invalid_argument);
}

TEST_CASE("edge tree attack always lands with two colours at height six") {
    Gadget gd = build(spec_of(Family::edge_binary_tree, 6));
    for (int seed = 1; seed <= 50; ++seed) {
        Colouring col = testutil::random_colouring(gd.g, Mode::edge, 2, seed);
        AnagramWitness w = find_anagram_edge_tree(gd, col);
        CHECK(w.verify(gd.g, col));
        CHECK(w.mode == Mode::edge);
        CHECK(w.k == 2);
        CHECK(w.path.order() % 2 == 1);  // even edge count
    }
    Colouring constant = edge_colouring(gd.g, std::vector<int>(gd.g.m(), 0));
    CHECK(find_anagram_edge_tree(gd, constant).verify(gd.g, constant));
}

TEST_CASE("edge tree attack refuses a failing premise") {
    Gadget gd = build(spec_of(Family::edge_binary_tree, 5));
    Colouring col = testutil::random_colouring(gd.g, Mode::edge, 2, 1);
    CHECK_THROWS_AS(find_anagram_edge_tree(gd, col), PremiseViolated);
    Gadget wrong = build(spec_of(Family::sibling_graph, 5));
    Colouring vcol = testutil::random_colouring(wrong.g, Mode::vertex, 1, 1);
    CHECK_THROWS_AS(find_anagram_edge_tree(wrong, vcol),
                    std::invalid_argument);
}

TEST_CASE("sibling graph attack") {
    Gadget small = build(spec_of(Family::sibling_graph, 5));
    Colouring mono = vertex_colouring(small.g, std::vector<int>(21, 0));
    AnagramWitness w = find_anagram_vertex_graph(small, mono);
    CHECK(w.verify(small.g, mono));

    Gadget gd = build(spec_of(Family::sibling_graph, 17));
    for (int seed = 1; seed <= 20; ++seed) {
        Colouring col = testutil::random_colouring(gd.g, Mode::vertex, 2, seed);
        AnagramWitness got = find_anagram_vertex_graph(gd, col);
        CHECK(got.verify(gd.g, col));
        CHECK(got.path.order() % 2 == 0);
    }
    Colouring bad = testutil::random_colouring(gd.g, Mode::vertex, 3, 1);
    CHECK_THROWS_AS(find_anagram_vertex_graph(gd, bad), PremiseViolated);
}

TEST_CASE("d-ary attack") {
    Gadget gd = build(spec_of(Family::complete_dary, 4, 4));
    for (int seed = 1; seed <= 30; ++seed) {
        Colouring col = testutil::random_colouring(gd.g, Mode::vertex, 2, seed);
        AnagramWitness w = find_anagram_dary(gd, col);
        CHECK(w.verify(gd.g, col));
        CHECK(w.path.order() % 2 == 0);
    }
    Colouring three = testutil::random_colouring(gd.g, Mode::vertex, 3, 7);
    CHECK_THROWS_AS(find_anagram_dary(gd, three), PremiseViolated);

    Gadget wide = build(spec_of(Family::complete_dary, 3, 8));
    for (int seed = 1; seed <= 20; ++seed) {
        Colouring col =
            testutil::random_colouring(wide.g, Mode::vertex, 2, seed * 3);
        CHECK(find_anagram_dary(wide, col).verify(wide.g, col));
    }
}

TEST_CASE("kpower attack yields anagrams or big families") {
    Gadget gd = build(spec_of(Family::kpower_gadget, 0, 0, 3, 2));
    int witnesses = 0, families = 0;
    for (int seed = 1; seed <= 40; ++seed) {
        Colouring col = testutil::random_colouring(gd.g, Mode::vertex, 2, seed);
        auto res = find_kanagram_gadget(gd, col);
        if (auto* w = std::get_if<AnagramWitness>(&res)) {
            CHECK(w->verify(gd.g, col));
            CHECK(w->k == 3);
            ++witnesses;
        } else {
            const auto& fam = std::get<MultisetFamily>(res);
            CHECK(fam.meets_bound());
            CHECK(fam.size() * 4 >= 9);  // size (k-1)^t >= k^t
            ++families;
        }
    }
    CHECK(witnesses + families == 40);

    // with one colour and t = 9 the premise holds, so a witness is forced
    GadgetSpec s9 = spec_of(Family::kpower_gadget, 0, 0, 3, 9);
    CHECK(premise_ok(s9, 1));
    Gadget g9 = build(s9);
    CHECK(g9.g.n() == 59047);
    Colouring mono = vertex_colouring(g9.g, std::vector<int>(g9.g.n(), 0));
    auto res = find_kanagram_gadget(g9, mono);
    REQUIRE(std::holds_alternative<AnagramWitness>(res));
    CHECK(std::get<AnagramWitness>(res).verify(g9.g, mono));
}

TEST_CASE("all-distinct colours force the family outcome") {
    // no path in an all-distinct colouring is an anagram, so the attack has
    // to fall back to one representative per multiset class
    Gadget gd = build(spec_of(Family::kpower_gadget, 0, 0, 3, 2));
    std::vector<int> ids(gd.g.n());
    for (int v = 0; v < gd.g.n(); ++v) ids[v] = v;
    Colouring col = vertex_colouring(gd.g, ids);

    auto res = find_kanagram_gadget(gd, col);
    REQUIRE(std::holds_alternative<MultisetFamily>(res));
    const auto& fam = std::get<MultisetFamily>(res);
    CHECK(fam.k == 3);
    CHECK(fam.t == 2);
    // distinct colours keep every one of the 3^2 path multisets distinct
    CHECK(fam.size() == 9);
    CHECK(fam.meets_bound());
    for (const auto& [key, rep] : fam.reps) {
        CHECK(static_cast<int>(rep.size()) == 4 * 2 + 1);
        CHECK(rep.front() == gd.kp.u);
        CHECK(rep.back() == gd.kp.v);
        for (std::size_t i = 0; i + 1 < rep.size(); ++i)
            CHECK(gd.g.edge_id(rep[i], rep[i + 1]) >= 0);
        std::vector<int> want(col.c, 0);
        for (int x : rep) want[col.ids[x]] += 1;
        CHECK(want == key);
    }
}

TEST_CASE("attacks demand the matching mode") {
    Gadget gd = build(spec_of(Family::kpower_gadget, 0, 0, 3, 1));
    Colouring edge = edge_colouring(gd.g, std::vector<int>(gd.g.m(), 0));
    CHECK_THROWS_AS(find_kanagram_gadget(gd, edge), std::invalid_argument);
}
