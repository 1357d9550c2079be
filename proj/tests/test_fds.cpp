#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fdslab/construct.hpp"
#include "fdslab/fds.hpp"
#include "oracles.hpp"

using namespace fdslab;

namespace {

Fds identity_fds(int q, int n) {
    StateSpace sp(q, n);
    std::vector<State> table(sp.size());
    for (State x = 0; x < sp.size(); ++x) table[x] = x;
    return Fds(q, n, std::move(table));
}

Fds constant_fds(int q, int n, State c) {
    StateSpace sp(q, n);
    return Fds(q, n, std::vector<State>(sp.size(), c));
}

AffineFds random_affine(std::mt19937_64& rng, int q, int n) {
    const Field& f = Field::get(q);
    Mat m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = static_cast<int>(rng() % q);
    std::vector<int> y(n);
    for (int& e : y) e = static_cast<int>(rng() % q);
    return AffineFds(f, std::move(m), std::move(y));
}

}  // namespace

TEST_CASE("interaction graph basics") {
    CHECK(interaction_graph(constant_fds(2, 3, 5)).arc_count() == 0);
    // identity depends only on the own coordinate: loopless graph is empty
    CHECK(interaction_graph(identity_fds(2, 2)).arc_count() == 0);
    CHECK(depends_on(identity_fds(2, 2), 0, 0));
    CHECK_FALSE(depends_on(identity_fds(2, 2), 0, 1));

    CHECK(interaction_graph(clique_guessing(3, 2)) == Digraph::family("K:3"));
}

TEST_CASE("respects() sees self-dependence that the loopless graph hides") {
    Digraph empty(2, {});
    CHECK(respects(constant_fds(2, 2, 0), empty));
    CHECK_FALSE(respects(identity_fds(2, 2), empty));
}

TEST_CASE("fixed points") {
    CHECK(fixed_points(identity_fds(2, 2)).size() == 4);
    // negation on one binary coordinate
    Fds neg(2, 1, {1, 0});
    CHECK(fixed_points(neg).empty());
    CHECK(fixed_points(clique_guessing(3, 2)).size() == 4);
}

TEST_CASE("metrics") {
    auto m = metrics(identity_fds(3, 2));
    CHECK(m.g.count == 9);
    CHECK(m.s == 2);
    CHECK(m.i == 0);

    auto neg = metrics(negation_cycle(3, 2));
    CHECK(neg.i == 1);
    CHECK(neg.g.count == 0);

    auto wink = metrics(winkler_clique(3));
    CHECK(wink.s == 1);
    CHECK(wink.i == 2);
}

TEST_CASE("metrics: i + s <= n with equality iff the displacement is constant") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        int q = 2 + static_cast<int>(rng() % 3);
        int n = 1 + static_cast<int>(rng() % 3);
        StateSpace sp(q, n);
        std::vector<State> table(sp.size());
        for (auto& t : table) t = static_cast<State>(rng() % sp.size());
        Fds f(q, n, std::move(table));
        auto m = metrics(f);
        CHECK(m.i + m.s <= n);
        bool constant_dh = true;
        int first = sp.hamming(0, f.apply(0));
        for (State x = 0; x < sp.size(); ++x)
            if (sp.hamming(x, f.apply(x)) != first) constant_dh = false;
        CHECK((m.i + m.s == n) == constant_dh);
        CHECK(m.g.count == fixed_points(f).size());
    }
}

TEST_CASE("guessing code") {
    auto id_code = guessing_code(identity_fds(2, 2));
    CHECK(id_code.words == std::vector<State>{0});
    CHECK(guessing_dimension(identity_fds(2, 2)).count == 1);

    // constant map: differences c - x sweep the whole space
    CHECK(guessing_code(constant_fds(3, 2, 4)).words.size() == 9);
}

TEST_CASE("linear maps: code size is q^rank(M - I)") {
    std::mt19937_64 rng(9);
    for (int q : {2, 3}) {
        const Field& f = Field::get(q);
        for (int trial = 0; trial < 25; ++trial) {
            Mat m(3, 3);
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) m.at(r, c) = static_cast<int>(rng() % q);
            AffineFds aff(f, m, {0, 0, 0});
            Mat diff = aff.difference_matrix();
            int rank = matrix_rank(f, diff);
            std::uint64_t expect = 1;
            for (int i = 0; i < rank; ++i) expect *= q;
            CHECK(guessing_code(aff.tabulate()).words.size() == expect);
        }
    }
}

TEST_CASE("coset dimension") {
    CHECK(coset_dimension(identity_fds(2, 2)).count == 1);

    // single fixed point: only singleton translates
    Fds shift2(2, 1, {1, 0});
    CHECK_THROWS_AS(coset_dimension(shift2), Infeasible);

    StateSpace sp(2, 2);
    std::vector<State> table(4);
    for (State x = 0; x < 4; ++x) table[x] = 0;  // fix = {0}
    CHECK(coset_dimension(Fds(2, 2, std::move(table))).count == 4);

    CHECK(coset_dimension(clique_guessing(3, 2)).count == 2);
}

TEST_CASE("coset dimension counting bound") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        int q = 2 + static_cast<int>(rng() % 2);
        int n = 2 + static_cast<int>(rng() % 2);
        StateSpace sp(q, n);
        std::vector<State> table(sp.size());
        for (auto& t : table) t = static_cast<State>(rng() % sp.size());
        Fds f(q, n, std::move(table));
        auto fix = fixed_points(f);
        if (fix.empty()) continue;
        auto c = coset_dimension(f);
        CHECK(c.count >= (sp.size() + fix.size() - 1) / fix.size());
        CHECK(c.count <= sp.size());
    }
}

TEST_CASE("affine validation") {
    const Field& f = Field::get(2);
    Digraph digon(2, {{0, 1}, {1, 0}});
    Mat ok(2, 2);
    ok.at(0, 1) = 1;
    CHECK_NOTHROW(AffineFds(f, ok, {0, 0}, digon));

    Mat diag(2, 2);
    diag.at(0, 0) = 1;
    CHECK_THROWS_AS(AffineFds(f, diag, {0, 0}, digon), InputError);
    // without a declared support the diagonal is unconstrained
    CHECK_NOTHROW(AffineFds(f, diag, {0, 0}));

    Digraph arc_only(2, {{0, 1}});
    Mat wrong(2, 2);
    wrong.at(1, 0) = 1;
    CHECK_THROWS_AS(AffineFds(f, wrong, {0, 0}, arc_only), InputError);
}

TEST_CASE("affine structural metrics: identity and constant") {
    const Field& f = Field::get(2);
    // M = I, y = 0: identity metrics
    AffineFds id(f, Mat::identity(f, 3), {0, 0, 0});
    auto m = structural_metrics(id);
    CHECK(m.g.count == 8);
    CHECK(m.s == 3);
    CHECK(m.i == 0);
    CHECK(m.l.count == 1);

    // M = 0, y != 0: f constant, differences sweep everything
    Mat zero(3, 3);
    AffineFds constant(f, zero, {1, 0, 1});
    auto mc = structural_metrics(constant);
    CHECK(mc.i == 0);
    CHECK(mc.l.count == 8);
    CHECK(mc.g.count == 1);
}

TEST_CASE("affine: structural metrics equal tabulated metrics on 200 random instances") {
    std::mt19937_64 rng(21);
    int done = 0;
    while (done < 200) {
        int q = std::vector<int>{2, 3, 4}[rng() % 3];
        int n = 1 + static_cast<int>(rng() % 6);
        AffineFds aff = random_affine(rng, q, n);
        auto structural = structural_metrics(aff);
        Fds tab = aff.tabulate();
        auto scanned = metrics(tab);
        CHECK(structural.g.count == scanned.g.count);
        CHECK(structural.s == scanned.s);
        CHECK(structural.i == scanned.i);
        CHECK(structural.l.count == guessing_dimension(tab).count);
        ++done;
    }
}

TEST_CASE("affine: interaction graph equals the off-diagonal support") {
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 30; ++trial) {
        int q = std::vector<int>{2, 3, 4}[rng() % 3];
        int n = 2 + static_cast<int>(rng() % 3);
        AffineFds aff = random_affine(rng, q, n);
        Digraph g = interaction_graph(aff.tabulate());
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                CHECK(g.has_arc(u, v) == (aff.matrix().at(u, v) != 0));
            }
    }
}

TEST_CASE("state caps") {
    CHECK_THROWS_AS(StateSpace(2, 30), CapExceeded);
    CHECK_THROWS_AS(coset_dimension(identity_fds(2, 13)), CapExceeded);
}
