#pragma once

#include <string>

#include <json.hpp>

#include "fdslab/coding.hpp"
#include "fdslab/fds.hpp"
#include "fdslab/optimize.hpp"

namespace fdslab {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "0.1.0";

// FDS file: {"q", "n", "table": [...]} for explicit tables or
// {"q", "n", "matrix": row-major, "offset": [...], "field": q} for affine
// maps. Unknown keys are rejected.
nlohmann::json fds_to_json(const Fds& f);
nlohmann::json affine_to_json(const AffineFds& f);
Fds fds_from_json(const nlohmann::json& j);
AffineFds affine_from_json(const nlohmann::json& j);

nlohmann::json bound_report_to_json(const BoundReport& r);

// Top-level report envelope: instance descriptor, quantities with their
// certification tags, bound reports, witness file references, telemetry,
// seed and artifact version. Serialization is key-sorted, so reports are
// byte-identical across runs given the same inputs.
class ReportBuilder {
public:
    ReportBuilder(std::string instance, int q, std::uint64_t seed);

    void add_quantity(const std::string& name, const LogCount& value,
                      const std::string& certified);
    void add_quantity(const std::string& name, long long value, const std::string& certified);
    void add_bounds(const std::vector<BoundReport>& reports);
    void add_witness(const std::string& quantity, const std::string& file);
    void add_telemetry(const std::string& quantity, std::uint64_t candidates,
                       std::uint64_t prunes);
    void add_extra(const std::string& key, const nlohmann::json& value);

    const nlohmann::json& doc() const { return j_; }
    std::string str() const;

private:
    nlohmann::json j_;
};

// Parses and validates a report produced by ReportBuilder; throws
// InputError on schema-version mismatch or unknown top-level fields.
nlohmann::json load_report(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace fdslab
