#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fdslab/ffield.hpp"
#include "oracles.hpp"

using namespace fdslab;

TEST_CASE("field construction accepts prime powers and rejects the rest") {
    CHECK(Field::make(2).q() == 2);
    CHECK(Field::make(4).degree() == 2);
    CHECK(Field::make(9).characteristic() == 3);
    CHECK(Field::make(256).degree() == 8);
    CHECK_THROWS_AS(Field::make(6), NotPrimePower);
    CHECK_THROWS_AS(Field::make(12), NotPrimePower);
    CHECK_THROWS_AS(Field::make(512), TooLarge);
    CHECK_THROWS_AS(Field::make(1), NotPrimePower);
}

TEST_CASE("GF(2) addition is xor") {
    const Field& f = Field::get(2);
    CHECK(f.add(1, 1) == 0);
    CHECK(f.add(0, 1) == 1);
}

TEST_CASE("GF(4) uses x^2 + x + 1") {
    const Field& f = Field::get(4);
    REQUIRE(f.reduction() == std::vector<int>{1, 1, 1});
    // x * x = x + 1 with the base-2 digit encoding (x = 2, x+1 = 3)
    CHECK(f.mul(2, 2) == oracles::gf4_mul_bruteforce(2, 2));
    CHECK(f.mul(2, 2) == 3);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(f.mul(a, b) == oracles::gf4_mul_bruteforce(a, b));
}

TEST_CASE("GF(5) arithmetic") {
    const Field& f = Field::get(5);
    CHECK(f.mul(3, 4) == 2);
    CHECK(f.sub(1, 3) == 3);
    CHECK(f.div(1, 2) == 3);
    CHECK_THROWS_AS(f.inv(0), DivisionByZero);
    CHECK_THROWS_AS(f.div(3, 0), DivisionByZero);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        const Field& f = Field::get(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                    CHECK(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
                    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                }
            }
        }
    }
}

TEST_CASE("larger fields at least invert and distribute on a sample") {
    for (int q : {25, 27, 32, 49, 64, 81, 121, 125, 128, 169, 243, 256}) {
        const Field& f = Field::get(q);
        for (int a = 1; a < q; a += 7) CHECK(f.mul(a, f.inv(a)) == 1);
        for (int a = 0; a < q; a += 11)
            for (int b = 0; b < q; b += 13)
                for (int c = 0; c < q; c += 17)
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    }
}

TEST_CASE("matrix rank over small fields") {
    const Field& f2 = Field::get(2);
    Mat id3 = Mat::identity(f2, 3);
    CHECK(matrix_rank(f2, id3) == 3);

    const Field& f3 = Field::get(3);
    Mat zero(2, 5);
    CHECK(matrix_rank(f3, zero) == 0);

    // rows {1100, 0110, 1010}: the third is the sum of the first two
    Mat m(3, 4);
    m.at(0, 0) = m.at(0, 1) = 1;
    m.at(1, 1) = m.at(1, 2) = 1;
    m.at(2, 0) = m.at(2, 2) = 1;
    CHECK(oracles::rank_by_rowspace(f2, m) == 2);
    CHECK(matrix_rank(f2, m) == 2);
}

TEST_CASE("rank equals rank of the transpose on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int q = (trial % 2) ? 3 : 4;
        const Field& f = Field::get(q);
        int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 5);
        Mat m(rows, cols), t(cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                m.at(r, c) = static_cast<int>(rng() % q);
                t.at(c, r) = m.at(r, c);
            }
        CHECK(matrix_rank(f, m) == matrix_rank(f, t));
        CHECK(matrix_rank(f, m) == oracles::rank_by_rowspace(f, m));
    }
}

TEST_CASE("solve_row_system finds solutions iff consistent") {
    const Field& f = Field::get(3);
    Mat m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 1;
    std::vector<int> x{1, 2}, rhs(2, 0);
    // rhs = x * m
    for (int c = 0; c < 2; ++c)
        for (int r = 0; r < 2; ++r) rhs[c] = f.add(rhs[c], f.mul(x[r], m.at(r, c)));
    std::vector<int> sol;
    REQUIRE(solve_row_system(f, m, rhs, sol));
    std::vector<int> back(2, 0);
    for (int c = 0; c < 2; ++c)
        for (int r = 0; r < 2; ++r) back[c] = f.add(back[c], f.mul(sol[r], m.at(r, c)));
    CHECK(back == rhs);

    Mat singular(2, 2);
    singular.at(0, 0) = 1;
    singular.at(1, 0) = 1;  // column 1 is zero
    std::vector<int> bad{0, 1};
    CHECK_FALSE(solve_row_system(f, singular, bad, sol));
}
