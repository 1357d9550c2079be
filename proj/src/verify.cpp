#include "fdslab/verify.hpp"

#include <sstream>

#include "fdslab/construct.hpp"
#include "fdslab/formats.hpp"
#include "fdslab/guessgraph.hpp"
#include "fdslab/optimize.hpp"

namespace fdslab {

namespace {

struct Checker {
    SuiteResult& out;

    void check(bool ok, const std::string& what) {
        std::string line = (ok ? "ok        " : "VIOLATION ") + what;
        out.lines.push_back(line);
        if (!ok) {
            out.ok = false;
            if (out.first_violation.empty()) out.first_violation = what;
        }
    }

    void absorb(const std::vector<BoundReport>& reports) {
        for (const auto& r : reports) {
            check(r.holds, r.instance + ": " + r.name + "  [" + r.lhs + " vs " + r.rhs + "]");
            out.reports.push_back(r);
        }
    }
};

SearchBudget exhaustive_budget() {
    SearchBudget b;
    b.mode = SearchMode::Exhaustive;
    b.analytic_pruning = false;
    return b;
}

SearchBudget construction_budget() {
    SearchBudget b;
    b.mode = SearchMode::ConstructionOnly;
    return b;
}

std::string describe(const Digraph& d, int q) {
    std::ostringstream ss;
    if (!d.name().empty())
        ss << d.name();
    else
        ss << "D(n=" << d.n() << ",m=" << d.arc_count() << ")";
    ss << " q=" << q;
    return ss.str();
}

// How to obtain each searched quantity for a battery instance: full
// enumeration, constructions (kept only when certified by a bound match),
// or not at all. Structural quantities and alpha/chi are always exact.
enum class Via { Off, Construction, Exhaustive };

struct InstancePlan {
    Via is = Via::Off;  // instability and stability
    Via l = Via::Off;
    Via c = Via::Off;
};

Quantities exact_quantities(const Digraph& d, int q, const InstancePlan& plan) {
    Quantities qs;
    qs.instance = describe(d, q);
    qs.n = d.n();
    qs.q = q;
    qs.tau = feedback_vertex_number(d).value;
    qs.nu = cycle_packing(d).value;

    auto g = GuessingGraph::build(d, q);
    qs.alpha = static_cast<std::uint64_t>(independence_number(g).alpha);
    qs.chi = static_cast<std::uint64_t>(chromatic_number(g).chi);

    if (plan.is == Via::Exhaustive) {
        qs.i = static_cast<int>(instability(d, q, exhaustive_budget()).value);
        qs.s = static_cast<int>(stability(d, q, exhaustive_budget()).value);
    } else if (plan.is == Via::Construction) {
        auto ri = instability(d, q, construction_budget());
        if (ri.certified == Certified::BoundMatched) qs.i = static_cast<int>(ri.value);
        auto rs = stability(d, q, construction_budget());
        if (rs.certified == Certified::BoundMatched) qs.s = static_cast<int>(rs.value);
    }
    if (plan.l == Via::Exhaustive) {
        qs.l_count = guessing_dimension_of_graph(d, q, exhaustive_budget()).count.count;
    } else if (plan.l == Via::Construction) {
        auto rl = guessing_dimension_of_graph(d, q, construction_budget());
        if (rl.certified == Certified::BoundMatched) qs.l_count = rl.count.count;
    }
    if (plan.c == Via::Exhaustive) {
        qs.c_count = coset_dimension_of_graph(d, q, exhaustive_budget()).count.count;
    } else if (plan.c == Via::Construction) {
        auto rc = coset_dimension_of_graph(d, q, construction_budget());
        if (rc.certified == Certified::BoundMatched) qs.c_count = rc.count.count;
    }
    return qs;
}

std::uint64_t upow(int q, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
}

void suite_small_exhaustive(Checker& ck) {
    auto digraphs = all_three_vertex_digraphs();
    for (std::size_t idx = 0; idx < digraphs.size(); ++idx) {
        const Digraph& d = digraphs[idx];
        const int q = 2;
        InstancePlan plan{Via::Exhaustive, Via::Exhaustive, Via::Exhaustive};
        Quantities qs = exact_quantities(d, q, plan);
        std::string id = "D#" + std::to_string(idx) + "(arcs=" +
                         std::to_string(d.arc_count()) + ") q=2";
        qs.instance = id;
        ck.check(*qs.i == *qs.s, id + ": i = s at q=2  [" + std::to_string(*qs.i) + " vs " +
                                     std::to_string(*qs.s) + "]");
        ck.absorb(check_bounds(qs));
    }
}

void suite_constructions(Checker& ck) {
    for (auto [n, q] : {std::pair{3, 2}, {2, 3}, {4, 2}}) {
        Fds f = clique_guessing(n, q);
        ck.check(fixed_points(f).size() == upow(q, n - 1),
                 "clique_guessing(" + std::to_string(n) + "," + std::to_string(q) +
                     ") fixes q^(n-1) states");
        ck.check(respects(f, Digraph::family("K:" + std::to_string(n))),
                 "clique_guessing(" + std::to_string(n) + "," + std::to_string(q) +
                     ") lives on K:n");
    }
    for (int q : {2, 3, 4}) {
        Fds f = winkler_clique(q);
        auto m = metrics(f);
        ck.check(m.s == 1, "winkler_clique(" + std::to_string(q) + ") stability 1");
        ck.check(m.i == q - 1, "winkler_clique(" + std::to_string(q) + ") instability q-1");
        ck.check(respects(f, Digraph::family("K:" + std::to_string(q))),
                 "winkler_clique(" + std::to_string(q) + ") lives on K:q");
    }
    for (auto [n, q] : {std::pair{4, 2}, {5, 2}, {3, 3}}) {
        Fds f = clique_packing_stability(n, q);
        ck.check(metrics(f).s == n / q, "clique_packing_stability(" + std::to_string(n) + "," +
                                            std::to_string(q) + ") = floor(n/q)");
    }
    for (auto [n, q] : {std::pair{3, 2}, {5, 2}, {3, 3}}) {
        Fds f = negation_cycle(n, q);
        auto m = metrics(f);
        ck.check(m.i == 1 && m.g.count == 0, "negation_cycle(" + std::to_string(n) + "," +
                                                 std::to_string(q) + ") i=1, no fixed point");
        ck.check(respects(f, Digraph::family("Cdir:" + std::to_string(n))),
                 "negation_cycle(" + std::to_string(n) + "," + std::to_string(q) +
                     ") lives on Cdir:n");
    }

    // two vertex-disjoint digons
    Digraph digons(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
    for (const Digraph& d : {Digraph::family("Cdir:5"), digons, Digraph::family("Cund:5")}) {
        auto c = chordless_cover_instability(d);
        int tau = feedback_vertex_number(d).value;
        ck.check(c.instability == tau && metrics(c.f).i == tau,
                 describe(d, c.q) + ": chordless cover instability = tau = " +
                     std::to_string(tau));
        ck.check(respects(c.f, d), describe(d, c.q) + ": chordless cover respects D");
    }

    Digraph edge(2, {{0, 1}, {1, 0}});
    for (const Digraph& d : {Digraph::family("Cund:4"), edge, Digraph::family("Cund:5")}) {
        auto c = undirected_degree_instability(d);
        int tau = feedback_vertex_number(d).value;
        ck.check(c.instability == tau && metrics(c.f).i == tau,
                 describe(d, c.q) + ": degree construction instability = tau = " +
                     std::to_string(tau));
        ck.check(respects(c.f, d), describe(d, c.q) + ": degree construction respects D");
    }

    for (int r : {2, 3, 4}) {
        AffineFds aff = simplex_affine(r);
        AffineFds lin(aff.field(), aff.matrix(), std::vector<int>(aff.n(), 0), aff.support());
        auto linear_metrics = structural_metrics(lin);
        int expected_s = (1 << (r - 1)) - 1;
        ck.check(linear_metrics.s == expected_s,
                 "simplex_affine(" + std::to_string(r) + ") linear stability = 2^(r-1)-1");
        auto affine = structural_metrics(aff);
        auto survey = covering_radius_linear(aff.field(), aff.difference_matrix());
        ck.check(affine.i == survey.covering_radius,
                 "simplex_affine(" + std::to_string(r) + ") offset attains the covering radius");
    }
}

void suite_bounds(Checker& ck) {
    struct Item {
        const char* graph;
        int q;
        InstancePlan plan;
    };
    constexpr Via kEx = Via::Exhaustive, kCon = Via::Construction;
    const Item items[] = {
        {"K:2", 2, {kEx, kEx, kEx}},
        {"K:2", 3, {kEx, kEx, kEx}},
        {"K:3", 2, {kEx, kEx, kEx}},
        {"K:3", 3, {kCon, kCon, kCon}},
        {"K:4", 2, {kCon, kCon, kCon}},
        {"Cdir:3", 2, {kEx, kEx, kEx}},
        {"Cdir:3", 3, {kEx, kCon, kCon}},
        {"Cdir:4", 2, {kEx, kCon, kCon}},
        {"Cdir:4", 3, {kEx, kCon, kCon}},
        {"Cdir:5", 2, {kEx, kCon, kCon}},
        {"Cdir:5", 3, {kEx, kCon, kCon}},
        {"Cund:4", 2, {kEx, kEx, kEx}},
        {"Cund:5", 2, {kEx, kEx, kCon}},  // exhaustive c is minutes; the
                                          // construction matches chi anyway
    };
    for (const auto& item : items) {
        Digraph d = Digraph::family(item.graph);
        Quantities qs = exact_quantities(d, item.q, item.plan);
        ck.absorb(check_bounds(qs));
    }

    // Paley tournament: affine quantities via exhaustive matrix search plus
    // the bound-matched instability construction.
    {
        Digraph d = Digraph::family("paley:7");
        Quantities qs;
        qs.instance = describe(d, 2);
        qs.n = d.n();
        qs.q = 2;
        qs.tau = feedback_vertex_number(d).value;
        qs.nu = cycle_packing(d).value;
        auto g = GuessingGraph::build(d, 2);
        qs.alpha = static_cast<std::uint64_t>(independence_number(g).alpha);
        qs.chi = static_cast<std::uint64_t>(chromatic_number(g).chi);
        auto iaff = affine_instability(d, 2, construction_budget());
        if (iaff.certified == Certified::BoundMatched) qs.i_aff = static_cast<int>(iaff.value);
        auto lin = linear_guessing(d, 2, exhaustive_budget());
        qs.l_aff_count = upow(2, d.n() - static_cast<int>(lin.value));
        ck.absorb(check_bounds(qs));
    }

    // simplex [7,3] code: sphere-covering and remoteness-covering rows
    {
        AffineFds aff = simplex_affine(3);
        Mat diff = aff.difference_matrix();
        auto cr = covering_radius_linear(aff.field(), diff);
        auto rem = remoteness_linear(aff.field(), diff);
        ck.absorb(check_code_bounds(2, 7, upow(2, cr.rank), cr.covering_radius, rem.remoteness,
                                    "simplex[7,3]"));
    }
}

void suite_equivalences(Checker& ck) {
    struct Item {
        const char* graph;
        int q;
        bool exhaustive_lc;
    };
    const Item items[] = {
        {"K:2", 2, true},     {"K:2", 3, true},   {"K:3", 2, true},   {"K:3", 3, false},
        {"Cdir:3", 2, true},  {"Cdir:3", 3, false}, {"Cdir:4", 2, false}, {"Cdir:4", 3, false},
    };
    for (const auto& item : items) {
        Digraph d = Digraph::family(item.graph);
        int q = item.q;
        int n = d.n();
        int tau = feedback_vertex_number(d).value;
        auto g = GuessingGraph::build(d, q);
        std::uint64_t alpha = independence_number(g).alpha;
        std::uint64_t chi = chromatic_number(g).chi;

        SearchBudget lc = item.exhaustive_lc ? exhaustive_budget() : construction_budget();
        auto rc = coset_dimension_of_graph(d, q, lc);
        bool c_exact =
            rc.certified == Certified::Exact || rc.certified == Certified::BoundMatched;

        std::string id = describe(d, q);
        bool solvable = alpha == upow(q, tau);
        bool entropy_matches = chi == upow(q, n - tau);
        ck.check(solvable == entropy_matches,
                 id + ": g = tau  <=>  chi-count = q^(n-tau)");
        if (c_exact) {
            bool coset_matches = rc.count.count == upow(q, n - tau);
            ck.check(solvable == coset_matches, id + ": g = tau  <=>  c-count = q^(n-tau)");
        } else {
            ck.check(false, id + ": coset dimension could not be certified exact");
        }
    }

    // a non-solvable instance: all three conditions must be false together
    {
        Digraph d = Digraph::family("Cund:5");
        int q = 2;
        int tau = feedback_vertex_number(d).value;
        auto g = GuessingGraph::build(d, q);
        std::uint64_t alpha = independence_number(g).alpha;
        std::uint64_t chi = chromatic_number(g).chi;
        ck.check(alpha < upow(q, tau) && chi > upow(q, d.n() - tau),
                 "Cund:5 q=2: not solvable, and chi-count > q^(n-tau) accordingly");
        auto rc = coset_dimension_of_graph(d, q, construction_budget());
        ck.check(rc.certified == Certified::BoundMatched &&
                     rc.count.count > upow(q, d.n() - tau),
                 "Cund:5 q=2: c-count certified and > q^(n-tau) accordingly");
    }
}

void suite_selftest_fail(Checker& ck) {
    // deliberately wrong expectation; exercises the exit-code contract
    auto g = GuessingGraph::build(Digraph::family("K:3"), 2);
    int alpha = independence_number(g).alpha;
    ck.check(alpha == 5, "K:3 q=2: alpha = 5 (deliberately wrong fixture)");
}

}  // namespace

std::vector<Digraph> all_three_vertex_digraphs() {
    const std::pair<int, int> pairs[] = {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}};
    std::vector<Digraph> out;
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<std::pair<int, int>> arcs;
        for (int b = 0; b < 6; ++b)
            if (mask >> b & 1) arcs.push_back(pairs[b]);
        out.emplace_back(3, std::move(arcs));
    }
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"small-exhaustive", "constructions", "bounds",
                                                   "equivalences"};
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t) {
    SuiteResult res;
    res.name = name;
    Checker ck{res};
    if (name == "small-exhaustive")
        suite_small_exhaustive(ck);
    else if (name == "constructions")
        suite_constructions(ck);
    else if (name == "bounds")
        suite_bounds(ck);
    else if (name == "equivalences")
        suite_equivalences(ck);
    else if (name == "selftest-fail")
        suite_selftest_fail(ck);
    else
        throw InputError("unknown verify suite '" + name + "'");
    return res;
}

nlohmann::json suite_to_json(const SuiteResult& r) {
    nlohmann::json j;
    j["suite"] = r.name;
    j["ok"] = r.ok;
    j["checks"] = r.lines;
    j["first_violation"] = r.first_violation;
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& b : r.reports) bounds.push_back(bound_report_to_json(b));
    j["bounds"] = bounds;
    return j;
}

}  // namespace fdslab
