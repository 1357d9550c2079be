#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fdslab/coding.hpp"

namespace fdslab {

// Named verification batteries runnable from the CLI. Every line is one
// check; a suite passes when every check holds. "selftest-fail" is a
// test-only suite containing one deliberately wrong expectation, used to
// exercise the exit-code contract.
struct SuiteResult {
    std::string name;
    bool ok = true;
    std::vector<std::string> lines;
    std::vector<BoundReport> reports;
    std::string first_violation;
};

SuiteResult run_suite(const std::string& name, std::uint64_t seed);

const std::vector<std::string>& suite_names();

// All 64 labelled loopless digraphs on three vertices.
std::vector<Digraph> all_three_vertex_digraphs();

nlohmann::json suite_to_json(const SuiteResult& r);

}  // namespace fdslab
