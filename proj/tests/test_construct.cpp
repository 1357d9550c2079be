#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdslab/coding.hpp"
#include "fdslab/construct.hpp"
#include "oracles.hpp"

using namespace fdslab;

TEST_CASE("clique guessing") {
    CHECK(fixed_points(clique_guessing(3, 2)).size() == 4);
    CHECK(fixed_points(clique_guessing(2, 3)).size() == 3);
    CHECK(fixed_points(clique_guessing(4, 2)).size() == 8);
    CHECK(respects(clique_guessing(3, 2), Digraph::family("K:3")));
}

TEST_CASE("winkler clique") {
    for (int q : {2, 3, 4}) {
        Fds f = winkler_clique(q);
        auto m = metrics(f);
        CHECK(m.s == 1);
        CHECK(m.i == q - 1);
        CHECK(respects(f, Digraph::family("K:" + std::to_string(q))));
        // every state is guessed correctly by exactly one coordinate
        const auto& sp = f.space();
        for (State x = 0; x < sp.size(); ++x) CHECK(sp.hamming(x, f.apply(x)) == q - 1);
    }
}

TEST_CASE("clique packing stability") {
    CHECK(metrics(clique_packing_stability(4, 2)).s == 2);
    CHECK(metrics(clique_packing_stability(5, 2)).s == 2);
    CHECK(metrics(clique_packing_stability(3, 3)).s == 1);
    CHECK_THROWS_AS(clique_packing_stability(2, 3), QTooLarge);
}

TEST_CASE("clique instability blocks") {
    CHECK(metrics(clique_instability(3, 2)).i == 1);
    CHECK(metrics(clique_instability(4, 2)).i == 2);
    CHECK(metrics(clique_instability(5, 2)).i == 2);
    CHECK(metrics(clique_instability(3, 3)).i == 2);
    CHECK(metrics(clique_instability(2, 4)).i == 1);
}

TEST_CASE("negation cycle") {
    for (auto [n, q] : {std::pair{3, 2}, {5, 2}, {3, 3}}) {
        Fds f = negation_cycle(n, q);
        auto m = metrics(f);
        CHECK(m.i == 1);
        CHECK(m.g.count == 0);
        CHECK(respects(f, Digraph::family("Cdir:" + std::to_string(n))));
    }
}

TEST_CASE("chordless cover instability") {
    auto c5 = chordless_cover_instability(Digraph::family("Cdir:5"));
    CHECK(c5.q == 2);
    CHECK(c5.instability == 1);

    Digraph digons(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
    auto dd = chordless_cover_instability(digons);
    CHECK(dd.q == 2);
    CHECK(dd.instability == 2);

    auto und5 = chordless_cover_instability(Digraph::family("Cund:5"));
    CHECK(und5.q == 8);  // three cycle colours
    CHECK(und5.instability == 3);
    CHECK(respects(und5.f, Digraph::family("Cund:5")));
}

TEST_CASE("chordless cover: the agreement set is acyclic for every state") {
    Digraph d = Digraph::family("Cund:5");
    auto c = chordless_cover_instability(d);
    const auto& sp = c.f.space();
    for (State x = 0; x < sp.size(); ++x) {
        std::vector<int> agree;
        State y = c.f.apply(x);
        for (int v = 0; v < d.n(); ++v)
            if (sp.digit(x, v) == sp.digit(y, v)) agree.push_back(v);
        std::vector<int> removed;
        for (int v = 0; v < d.n(); ++v)
            if (std::find(agree.begin(), agree.end(), v) == agree.end()) removed.push_back(v);
        CHECK_NOTHROW(topological_order(d, removed));
    }
}

TEST_CASE("chordless cover on two triangles sharing a vertex") {
    // both triangles go through vertex 0, so they need two colours
    Digraph d(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    auto c = chordless_cover_instability(d);
    CHECK(c.q == 4);
    CHECK(c.instability == 1);  // removing the shared vertex kills all cycles
    CHECK(respects(c.f, d));
}

TEST_CASE("degree construction handles unequal degrees") {
    // star with three leaves: centre degree 3, leaves degree 1
    Digraph star(4, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {3, 0}});
    auto c = undirected_degree_instability(star);
    CHECK(c.q == 8);
    CHECK(c.instability == 1);
    CHECK(respects(c.f, star));

    auto k4 = undirected_degree_instability(Digraph::family("K:4"));
    CHECK(k4.q == 8);
    CHECK(k4.instability == 3);
}

TEST_CASE("degree construction") {
    auto c4 = undirected_degree_instability(Digraph::family("Cund:4"));
    CHECK(c4.q == 4);
    CHECK(c4.instability == 2);

    Digraph edge(2, {{0, 1}, {1, 0}});
    auto e = undirected_degree_instability(edge);
    CHECK(e.q == 2);
    CHECK(e.instability == 1);

    auto c5 = undirected_degree_instability(Digraph::family("Cund:5"));
    CHECK(c5.q == 4);
    CHECK(c5.instability == 3);
    CHECK(respects(c5.f, Digraph::family("Cund:5")));

    CHECK_THROWS_AS(undirected_degree_instability(Digraph::family("Cdir:3")), NotSymmetric);
    CHECK_THROWS_AS(undirected_degree_instability(Digraph::family("K:6")), CapExceeded);
}

TEST_CASE("simplex affine construction") {
    for (int r : {2, 3, 4}) {
        AffineFds aff = simplex_affine(r);
        int n = (1 << r) - 1;
        REQUIRE(aff.n() == n);

        // linear part: stability 2^(r-1) - 1
        AffineFds lin(aff.field(), aff.matrix(), std::vector<int>(n, 0), aff.support());
        CHECK(structural_metrics(lin).s == (1 << (r - 1)) - 1);

        // offset puts the map in a deepest coset
        auto survey = covering_radius_linear(aff.field(), aff.difference_matrix());
        CHECK(structural_metrics(aff).i == survey.covering_radius);
    }
    CHECK_THROWS_AS(simplex_affine(5), BadR);
    CHECK_THROWS_AS(simplex_affine(1), BadR);
}

TEST_CASE("simplex r=3 attains instability 3 on seven vertices") {
    AffineFds aff = simplex_affine(3);
    Fds table = aff.tabulate();
    auto m = metrics(table);
    CHECK(m.i == 3);
    CHECK(respects(table, Digraph::family("simplex:3")));
}
