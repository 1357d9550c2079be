#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fdslab/coding.hpp"
#include "fdslab/construct.hpp"
#include "oracles.hpp"

using namespace fdslab;

namespace {

Code full_space(int q, int n) {
    StateSpace sp(q, n);
    Code c{q, n, {}};
    for (State x = 0; x < sp.size(); ++x) c.words.push_back(x);
    return c;
}

Code translate(const Code& c, State a) {
    StateSpace sp(c.q, c.n);
    Code out{c.q, c.n, {}};
    for (State w : c.words) out.words.push_back(sp.add(w, a));
    std::sort(out.words.begin(), out.words.end());
    return out;
}

}  // namespace

TEST_CASE("ball volume") {
    CHECK(ball_volume(2, 7, 1).to_string() == "8");
    CHECK(ball_volume(3, 2, 1).to_string() == "5");
    CHECK(ball_volume(5, 4, 4) == BigUint::pow(5, 4));
    CHECK(ball_volume(2, 7, -1).is_zero());
    for (int q : {2, 3, 4})
        for (int n = 1; n <= 5; ++n)
            for (int t = 0; t <= n; ++t)
                CHECK(ball_volume(q, n, t).to_u64() == oracles::ball_volume_bruteforce(q, n, t));
    // a value that overflows 64 bits
    CHECK(ball_volume(256, 40, 40) == BigUint::pow(256, 40));
}

TEST_CASE("covering radius and remoteness, exhaustive") {
    Code zero{2, 4, {0}};
    CHECK(covering_radius(zero) == 4);
    // min over y of the distance to the farthest codeword: y = 0 itself
    CHECK(remoteness(zero) == 0);

    Code whole = full_space(2, 3);
    CHECK(covering_radius(whole) == 0);
    CHECK(remoteness(whole) == 3);

    CHECK_THROWS_AS(covering_radius(Code{2, 3, {}}), InputError);
}

TEST_CASE("simplex [7,3]: coset leaders agree with the exhaustive scan") {
    AffineFds aff = simplex_affine(3);
    Mat diff = aff.difference_matrix();
    auto survey = covering_radius_linear(aff.field(), diff);
    CHECK(survey.rank == 3);
    CHECK(survey.covering_radius == 3);

    Mat echelon = diff;
    int rank = row_echelon(aff.field(), echelon);
    auto words = coset_words(aff.field(), echelon, rank, std::vector<int>(7, 0));
    Code code{2, 7, words};
    CHECK(covering_radius(code) == 3);
    CHECK(remoteness(code) == remoteness_linear(aff.field(), diff).remoteness);
}

TEST_CASE("covering radius: linear route equals exhaustive route on random codes") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 45; ++trial) {
        int q = std::vector<int>{2, 3, 4}[trial % 3];
        const Field& f = Field::get(q);
        int n = 3 + static_cast<int>(rng() % 3);
        int k = 1 + static_cast<int>(rng() % n);
        Mat gen(k, n);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < n; ++c) gen.at(r, c) = static_cast<int>(rng() % q);
        Mat echelon = gen;
        int rank = row_echelon(f, echelon);
        auto words = coset_words(f, echelon, rank, std::vector<int>(n, 0));
        Code code{q, n, words};
        CHECK(covering_radius_linear(f, gen).covering_radius == covering_radius(code));
        CHECK(remoteness_linear(f, gen).remoteness == remoteness(code));
    }
}

TEST_CASE("cr and rem are translation invariant") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        int q = 2 + static_cast<int>(rng() % 2);
        int n = 2 + static_cast<int>(rng() % 3);
        StateSpace sp(q, n);
        Code c{q, n, {}};
        Bitset used(static_cast<int>(sp.size()));
        int size = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < size; ++i) used.set(static_cast<int>(rng() % sp.size()));
        used.for_each([&](int w) { c.words.push_back(static_cast<State>(w)); });
        State a = static_cast<State>(rng() % sp.size());
        Code shifted = translate(c, a);
        CHECK(covering_radius(c) == covering_radius(shifted));
        CHECK(remoteness(c) == remoteness(shifted));
    }
}

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.25) == doctest::Approx(0.8112781244591329).epsilon(1e-12));
    CHECK_THROWS_AS(binary_entropy(1.5), InputError);
}

TEST_CASE("sphere-covering and remoteness bounds hold on every random code") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        int q = 2 + static_cast<int>(rng() % 2);
        int n = 2 + static_cast<int>(rng() % 3);
        StateSpace sp(q, n);
        Bitset used(static_cast<int>(sp.size()));
        int size = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < size; ++i) used.set(static_cast<int>(rng() % sp.size()));
        Code c{q, n, {}};
        used.for_each([&](int w) { c.words.push_back(static_cast<State>(w)); });
        auto reports = check_code_bounds(q, n, c.words.size(), covering_radius(c), remoteness(c),
                                         "random");
        for (const auto& r : reports) CHECK(r.holds);
    }
}

TEST_CASE("bound battery on a hand-checked instance") {
    Quantities qs;
    qs.instance = "K:3 q=2";
    qs.n = 3;
    qs.q = 2;
    qs.nu = 1;
    qs.tau = 2;
    qs.alpha = 4;
    qs.chi = 2;
    qs.i = 1;
    qs.s = 1;
    qs.l_count = 2;
    qs.c_count = 2;
    auto reports = check_bounds(qs);
    CHECK(reports.size() >= 10);
    for (const auto& r : reports) CHECK(r.holds);
}

TEST_CASE("bound battery flags a fabricated violation") {
    Quantities qs;
    qs.instance = "fabricated";
    qs.n = 3;
    qs.q = 2;
    qs.nu = 2;
    qs.i = 1;  // nu <= i fails
    auto reports = check_bounds(qs);
    bool any_violation = false;
    for (const auto& r : reports)
        if (!r.holds) any_violation = true;
    CHECK(any_violation);
}

TEST_CASE("Q-sequence staircase values are pinned") {
    // s <= tau - m rows exist exactly at q = 3, 7, 34
    for (int q : {3, 7, 34}) {
        Quantities qs;
        qs.instance = "probe";
        qs.n = 5;
        qs.q = q;
        qs.tau = 4;
        qs.s = 0;
        bool found = false;
        for (const auto& r : check_bounds(qs))
            if (r.name == "s <= tau - m at q=Q(m)") found = true;
        CHECK(found);
    }
    Quantities qs;
    qs.instance = "probe";
    qs.n = 5;
    qs.q = 5;
    qs.tau = 4;
    qs.s = 0;
    for (const auto& r : check_bounds(qs)) CHECK(r.name != "s <= tau - m at q=Q(m)");
}
