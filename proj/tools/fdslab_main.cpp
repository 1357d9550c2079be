// fdslab: compute and verify guessing-game quantities of finite dynamical
// systems and digraphs — guessing number, public entropy, stability,
// instability, guessing/coset dimensions, and their linear/affine variants.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "fdslab/construct.hpp"
#include "fdslab/formats.hpp"
#include "fdslab/guessgraph.hpp"
#include "fdslab/optimize.hpp"
#include "fdslab/parallel.hpp"
#include "fdslab/verify.hpp"

namespace {

using namespace fdslab;

Digraph load_graph(const std::string& spec) {
    if (std::filesystem::exists(spec)) return Digraph::parse(read_file(spec));
    return Digraph::family(spec);
}

struct BudgetFlags {
    bool exhaustive = false, random = false, construct_only = false;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;

    SearchBudget budget() const {
        SearchBudget b;
        if (exhaustive)
            b.mode = SearchMode::Exhaustive;
        else if (random)
            b.mode = SearchMode::Randomized;
        else
            b.mode = SearchMode::ConstructionOnly;
        b.trials = trials;
        b.seed = seed;
        return b;
    }
};

void emit(const ReportBuilder& report, const std::string& out_path) {
    std::string text = report.str();
    if (!out_path.empty()) write_file(out_path, text);
    std::cout << text;
}

int cmd_params(const std::string& graph_spec, const std::string& out_path) {
    Digraph d = load_graph(graph_spec);
    ReportBuilder report(graph_spec, 0, 0);
    nlohmann::json params;
    params["n"] = d.n();
    params["arcs"] = d.arc_count();
    auto g = girth(d);
    params["girth"] = g ? nlohmann::json(*g) : nlohmann::json("infinite");
    auto packing = cycle_packing(d);
    params["nu"] = packing.value;
    auto fvs = feedback_vertex_number(d);
    params["tau"] = fvs.value;
    params["fvs_witness"] = fvs.vertices;
    params["cycle_chromatic_index"] = cycle_chromatic_index(d);
    params["max_in_degree"] = d.max_in_degree();
    params["max_out_degree"] = d.max_out_degree();
    report.add_extra("params", params);
    emit(report, out_path);
    return 0;
}

int cmd_compute(const std::string& quantity, const std::string& graph_spec, int q,
                const BudgetFlags& flags, const std::string& out_path,
                const std::string& witness_path) {
    Digraph d = load_graph(graph_spec);
    SearchBudget budget = flags.budget();
    ReportBuilder report(graph_spec, q, flags.seed);

    auto write_witness_fds = [&](const Fds& f) {
        if (witness_path.empty()) return;
        write_file(witness_path, fds_to_json(f).dump(2) + "\n");
        report.add_witness(quantity, witness_path);
    };
    auto write_witness_affine = [&](const AffineFds& f) {
        if (witness_path.empty()) return;
        write_file(witness_path, affine_to_json(f).dump(2) + "\n");
        report.add_witness(quantity, witness_path);
    };

    if (quantity == "g" || quantity == "b") {
        auto graph = GuessingGraph::build(d, q);
        if (quantity == "g") {
            auto alpha = independence_number(graph);
            report.add_quantity("g", LogCount{static_cast<std::uint64_t>(alpha.alpha), q},
                                "exact");
            write_witness_fds(fds_from_independent_set(d, q, alpha.witness));
        } else {
            auto chi = chromatic_number(graph);
            report.add_quantity("b", LogCount{static_cast<std::uint64_t>(chi.chi), q}, "exact");
            if (!witness_path.empty()) {
                write_file(witness_path,
                           nlohmann::json{{"colouring", chi.colouring}}.dump(2) + "\n");
                report.add_witness("b", witness_path);
            }
        }
        emit(report, out_path);
        return 0;
    }

    ExtremalResult res;
    bool minimizing = false;
    if (quantity == "i")
        res = instability(d, q, budget);
    else if (quantity == "s")
        res = stability(d, q, budget);
    else if (quantity == "l") {
        res = guessing_dimension_of_graph(d, q, budget);
        minimizing = true;
    } else if (quantity == "c") {
        res = coset_dimension_of_graph(d, q, budget);
        minimizing = true;
    } else if (quantity == "glin")
        res = linear_guessing(d, q, budget);
    else if (quantity == "iaff")
        res = affine_instability(d, q, budget);
    else if (quantity == "saff")
        res = affine_stability(d, q, budget);
    else
        throw InputError("unknown quantity '" + quantity + "'");

    std::string certified = certified_label(res.certified, minimizing);
    if (res.is_count)
        report.add_quantity(quantity, res.count, certified);
    else
        report.add_quantity(quantity, res.value, certified);
    report.add_telemetry(quantity, res.candidates, res.prunes);
    if (res.witness) write_witness_fds(*res.witness);
    if (res.affine_witness) write_witness_affine(*res.affine_witness);
    emit(report, out_path);
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out_path) {
    SuiteResult res = run_suite(suite, seed);
    for (const auto& line : res.lines) std::cout << line << '\n';
    std::cout << (res.ok ? "PASS" : "FAIL") << " suite " << res.name << " (" << res.lines.size()
              << " checks)\n";
    if (!res.ok) std::cout << "first violation: " << res.first_violation << '\n';
    if (!out_path.empty()) write_file(out_path, suite_to_json(res).dump(2) + "\n");
    return res.ok ? 0 : 1;
}

int cmd_export(const std::string& graph_spec, int q, const std::string& out_path) {
    Digraph d = load_graph(graph_spec);
    auto g = GuessingGraph::build(d, q);
    if (out_path.empty()) {
        write_dimacs(g, std::cout);
    } else {
        std::ostringstream ss;
        write_dimacs(g, ss);
        write_file(out_path, ss.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"guessing numbers, entropy, and (in)stability of finite dynamical systems"};
    app.require_subcommand(1);

    std::string graph_spec, out_path, witness_path, quantity, suite;
    int q = 2;
    BudgetFlags flags;
    std::uint64_t cap_states = 0;
    int threads = 0;

    app.add_option("--cap-states", cap_states, "override the q^n state caps");
    app.add_option("--threads", threads, "worker threads (results are thread-count independent)");

    auto* params = app.add_subcommand("params", "structural digraph parameters");
    params->add_option("graph", graph_spec, "family spec or graph file")->required();
    params->add_option("--out", out_path, "write the JSON report here");

    auto* compute = app.add_subcommand("compute", "compute one quantity");
    compute->add_option("quantity", quantity, "g|b|i|s|l|c|glin|iaff|saff")->required();
    compute->add_option("graph", graph_spec, "family spec or graph file")->required();
    compute->add_option("-q", q, "alphabet size")->required();
    compute->add_flag("--exhaustive", flags.exhaustive, "enumerate the whole candidate space");
    compute->add_flag("--random", flags.random, "randomized search");
    compute->add_flag("--construct-only", flags.construct_only,
                      "constructions and analytic bounds only (default)");
    compute->add_option("--trials", flags.trials, "randomized trials");
    compute->add_option("--seed", flags.seed, "randomized seed");
    compute->add_option("--out", out_path, "write the JSON report here");
    compute->add_option("--witness", witness_path, "write the witness here");

    auto* verify = app.add_subcommand("verify", "run a verification battery");
    verify->add_option("suite", suite, "small-exhaustive|constructions|bounds|equivalences")
        ->required();
    verify->add_option("--seed", flags.seed, "suite seed");
    verify->add_option("--out", out_path, "write the JSON report here");

    auto* export_cmd = app.add_subcommand("export", "DIMACS export of the guessing graph");
    export_cmd->add_option("graph", graph_spec, "family spec or graph file")->required();
    export_cmd->add_option("-q", q, "alphabet size")->required();
    export_cmd->add_option("--out", out_path, "write the DIMACS file here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags are input errors
    }

    try {
        if (const char* env = std::getenv("FDSLAB_CAP_STATES"); env && cap_states == 0)
            cap_states = std::strtoull(env, nullptr, 10);
        if (cap_states > 0) fdslab::set_all_state_caps(cap_states);
        if (threads > 0) fdslab::set_thread_count(threads);

        if (params->parsed()) return cmd_params(graph_spec, out_path);
        if (compute->parsed())
            return cmd_compute(quantity, graph_spec, q, flags, out_path, witness_path);
        if (verify->parsed()) return cmd_verify(suite, flags.seed, out_path);
        if (export_cmd->parsed()) return cmd_export(graph_spec, q, out_path);
    } catch (const fdslab::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const fdslab::VerificationError& e) {
        std::cerr << "verification violation: " << e.what() << '\n';
        return 1;
    } catch (const fdslab::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
