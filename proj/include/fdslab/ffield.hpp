#pragma once

#include <cstdint>
#include <vector>

#include "fdslab/errors.hpp"

namespace fdslab {

// GF(q) for prime powers q in [2, 256]. Extension fields use a fixed
// published irreducible polynomial per (p, m), so element encodings are
// portable between runs and machines. Elements are canonical integers in
// [0, q): the base-p digit expansion of the polynomial representation.
// All operations are table lookups after construction; instances are
// immutable and safe to share across threads.
class Field {
public:
    static Field make(int q);
    // Cached shared instance (never freed).
    static const Field& get(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return m_; }
    // Coefficients of the reduction polynomial, constant term first,
    // including the leading 1. Size degree()+1; {} for prime fields.
    const std::vector<int>& reduction() const { return reduction_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const {
        if (a == 0) throw DivisionByZero("inverse of zero");
        return inv_[a];
    }
    int div(int a, int b) const {
        if (b == 0) throw DivisionByZero("division by zero");
        return mul_[a * q_ + inv_[b]];
    }
    int pow(int a, std::uint64_t e) const;

private:
    Field() = default;

    int q_ = 0, p_ = 0, m_ = 0;
    std::vector<int> reduction_;
    std::vector<std::uint8_t> add_, mul_;
    std::vector<std::uint8_t> neg_, inv_;
};

// Dense row-major matrix over one field; entries are canonical values.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<int> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static Mat identity(const Field& f, int n);
    bool operator==(const Mat&) const = default;
};

// Row rank by Gaussian elimination.
int matrix_rank(const Field& f, Mat m);

// Reduces to row echelon form in place; returns the rank (nonzero rows are
// packed at the top).
int row_echelon(const Field& f, Mat& m);

// Solves x * m = rhs for a row vector x, if possible.
bool solve_row_system(const Field& f, const Mat& m, const std::vector<int>& rhs,
                      std::vector<int>& solution);

}  // namespace fdslab
