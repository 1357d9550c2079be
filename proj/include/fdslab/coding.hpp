#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fdslab/biguint.hpp"
#include "fdslab/fds.hpp"

namespace fdslab {

// Exact volume of a Hamming ball of radius t in [q]^n.
BigUint ball_volume(int q, int n, int t);

// cr(C) = max_y min_c d(c, y); rem(C) = min_y max_c d(c, y).
// Exhaustive scan over [q]^n; the code must be nonempty.
int covering_radius(const Code& c, std::uint64_t cap = state_cap());
int remoteness(const Code& c, std::uint64_t cap = state_cap());

// Linear-code routes. `gen` has rows spanning the code; exact for
// q^(n-rank) <= cap (covering radius, via coset leaders by increasing
// weight) resp. q^n <= cap (remoteness, decreasing weight).
struct CosetSurvey {
    int rank = 0;
    int covering_radius = 0;
    std::vector<int> deep_coset_rep;  // word whose coset has min weight = cr
};
CosetSurvey covering_radius_linear(const Field& f, const Mat& gen,
                                   std::uint64_t cap = state_cap());

struct RemotenessSurvey {
    int rank = 0;
    int remoteness = 0;
    std::vector<int> best_coset_rep;  // word whose coset has max weight = rem
};
RemotenessSurvey remoteness_linear(const Field& f, const Mat& gen,
                                   std::uint64_t cap = state_cap());

double binary_entropy(double p);

// One checked inequality, sides rendered exactly (integers) or as decimals
// with the declared tolerance.
struct BoundReport {
    std::string name;
    std::string lhs, rhs;
    bool holds = false;
    std::string instance;
};

// Exactly computed quantities for one (D, q) instance. Only inequalities
// whose inputs are all present are checked; every value must be certified
// exact by its producer.
struct Quantities {
    std::string instance;
    int n = 0, q = 0;
    std::optional<int> nu, tau;
    std::optional<std::uint64_t> alpha, chi;     // counts: q^g, q^b
    std::optional<int> i, s;
    std::optional<std::uint64_t> l_count, c_count;
    std::optional<int> i_aff, s_aff;
    std::optional<std::uint64_t> l_aff_count;
};

std::vector<BoundReport> check_bounds(const Quantities& qs);

// Sphere-covering and remoteness-covering for one code.
std::vector<BoundReport> check_code_bounds(int q, int n, std::uint64_t size, int cr, int rem,
                                           const std::string& instance);

}  // namespace fdslab
