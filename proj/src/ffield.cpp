#include "fdslab/ffield.hpp"

#include <map>
#include <mutex>

namespace fdslab {

namespace {

// Published (Conway) reduction polynomials, constant term first, for every
// (p, m) with p^m <= 256 and m >= 2. Irreducibility is re-verified at
// construction time.
struct PolyEntry {
    int p, m;
    std::vector<int> coeffs;
};

const std::vector<PolyEntry>& poly_table() {
    static const std::vector<PolyEntry> table = {
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 1, 1, 0, 1}},
        {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
        {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {3, 2, {2, 2, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 0, 0, 2, 1}},
        {3, 5, {1, 2, 0, 0, 0, 1}},
        {5, 2, {2, 4, 1}},
        {5, 3, {3, 3, 0, 1}},
        {7, 2, {3, 6, 1}},
        {11, 2, {2, 7, 1}},
        {13, 2, {2, 12, 1}},
    };
    return table;
}

// value <-> base-p digit vector (poly coefficients, constant term first)
std::vector<int> to_poly(int v, int p, int m) {
    std::vector<int> c(m, 0);
    for (int i = 0; i < m; ++i) {
        c[i] = v % p;
        v /= p;
    }
    return c;
}

int from_poly(const std::vector<int>& c, int p) {
    int v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

// product of two polys mod the reduction poly, all over GF(p)
std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& red, int p) {
    int m = static_cast<int>(red.size()) - 1;
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce: x^m = -(red[0] + red[1] x + ... + red[m-1] x^{m-1})
    for (int d = static_cast<int>(prod.size()) - 1; d >= m; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < m; ++i) {
            int sub = (c * red[i]) % p;
            prod[d - m + i] = ((prod[d - m + i] - sub) % p + p) % p;
        }
    }
    prod.resize(m);
    return prod;
}

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& mod, int p) {
    int dm = static_cast<int>(mod.size()) - 1;
    for (int d = static_cast<int>(a.size()) - 1; d >= dm; --d) {
        if (a[d] == 0) continue;
        // monic divisor assumed (lead coefficient normalized by caller)
        int c = a[d];
        for (int i = 0; i <= dm; ++i) {
            int idx = d - dm + i;
            a[idx] = ((a[idx] - c * mod[i]) % p + p) % p;
        }
    }
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

bool poly_is_zero(const std::vector<int>& a) {
    for (int c : a)
        if (c) return false;
    return true;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const std::vector<int>& poly, int p) {
    int deg = static_cast<int>(poly.size()) - 1;
    if (poly[deg] != 1) return false;
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int v = 0; v < count; ++v) {
            std::vector<int> div = to_poly(v, p, d);
            div.push_back(1);  // monic of degree d
            if (poly_is_zero(poly_mod(poly, div, p))) return false;
        }
    }
    return true;
}

}  // namespace

Field Field::make(int q) {
    if (q < 2) throw NotPrimePower("field order must be at least 2");
    if (q > 256) throw TooLarge("field order " + std::to_string(q) + " exceeds 256");
    int p = 0;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // prime
    int m = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1)
        throw NotPrimePower(std::to_string(q) + " is not a prime power");

    Field f;
    f.q_ = q;
    f.p_ = p;
    f.m_ = m;

    if (m > 1) {
        for (const auto& e : poly_table()) {
            if (e.p == p && e.m == m) {
                f.reduction_ = e.coeffs;
                break;
            }
        }
        if (f.reduction_.empty())
            throw Error("no reduction polynomial for GF(" + std::to_string(q) + ")");
        if (!is_irreducible(f.reduction_, p))
            throw VerificationError("reduction polynomial for GF(" + std::to_string(q) +
                                    ") is reducible");
    }

    f.add_.resize(static_cast<std::size_t>(q) * q);
    f.mul_.resize(static_cast<std::size_t>(q) * q);
    f.neg_.resize(q);
    f.inv_.resize(q, 0);

    for (int a = 0; a < q; ++a) {
        auto pa = to_poly(a, p, m);
        for (int b = 0; b < q; ++b) {
            auto pb = to_poly(b, p, m);
            std::vector<int> sum(m);
            for (int i = 0; i < m; ++i) sum[i] = (pa[i] + pb[i]) % p;
            f.add_[a * q + b] = static_cast<std::uint8_t>(from_poly(sum, p));
            int prod = m == 1 ? (a * b) % p : from_poly(poly_mul_mod(pa, pb, f.reduction_, p), p);
            f.mul_[a * q + b] = static_cast<std::uint8_t>(prod);
        }
        std::vector<int> negp(m);
        for (int i = 0; i < m; ++i) negp[i] = (p - pa[i]) % p;
        f.neg_[a] = static_cast<std::uint8_t>(from_poly(negp, p));
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (f.mul_[a * q + b] == 1) f.inv_[a] = static_cast<std::uint8_t>(b);
    for (int a = 1; a < q; ++a)
        if (f.inv_[a] == 0) throw VerificationError("non-invertible nonzero element");

    return f;
}

const Field& Field::get(int q) {
    static std::mutex mu;
    static std::map<int, Field> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, make(q)).first;
    return it->second;
}

int Field::pow(int a, std::uint64_t e) const {
    int r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Mat Mat::identity(const Field&, int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

int row_echelon(const Field& f, Mat& m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
        int scale = f.inv(m.at(rank, col));
        for (int c = 0; c < m.cols; ++c) m.at(rank, c) = f.mul(m.at(rank, c), scale);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            int factor = m.at(r, col);
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

int matrix_rank(const Field& f, Mat m) { return row_echelon(f, m); }

bool solve_row_system(const Field& f, const Mat& m, const std::vector<int>& rhs,
                      std::vector<int>& solution) {
    // x * m = rhs  <=>  m^T * x^T = rhs^T; eliminate on the transpose
    // augmented with rhs.
    Mat aug(m.cols, m.rows + 1);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) aug.at(c, r) = m.at(r, c);
    for (int c = 0; c < m.cols; ++c) aug.at(c, m.rows) = rhs[c];

    std::vector<int> pivot_col(m.cols, -1);
    int rank = 0;
    for (int col = 0; col < m.rows && rank < aug.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < aug.rows; ++r)
            if (aug.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int c = 0; c <= m.rows; ++c) std::swap(aug.at(rank, c), aug.at(pivot, c));
        int scale = f.inv(aug.at(rank, col));
        for (int c = 0; c <= m.rows; ++c) aug.at(rank, c) = f.mul(aug.at(rank, c), scale);
        for (int r = 0; r < aug.rows; ++r) {
            if (r == rank || aug.at(r, col) == 0) continue;
            int factor = aug.at(r, col);
            for (int c = 0; c <= m.rows; ++c)
                aug.at(r, c) = f.sub(aug.at(r, c), f.mul(factor, aug.at(rank, c)));
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int r = rank; r < aug.rows; ++r)
        if (aug.at(r, m.rows) != 0) return false;  // inconsistent

    solution.assign(m.rows, 0);
    for (int r = 0; r < rank; ++r) solution[pivot_col[r]] = aug.at(r, m.rows);
    return true;
}

}  // namespace fdslab
