#include "fdslab/formats.hpp"

#include <fstream>
#include <sstream>

namespace fdslab {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const std::string& what) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known) throw InputError(what + ": unknown field '" + it.key() + "'");
    }
}

}  // namespace

json fds_to_json(const Fds& f) {
    json j;
    j["q"] = f.q();
    j["n"] = f.n();
    j["table"] = f.table();
    if (f.field()) j["field"] = f.field()->q();
    return j;
}

json affine_to_json(const AffineFds& f) {
    json j;
    j["q"] = f.field().q();
    j["n"] = f.n();
    j["matrix"] = f.matrix().a;
    j["offset"] = f.offset();
    j["field"] = f.field().q();
    return j;
}

Fds fds_from_json(const json& j) {
    reject_unknown(j, {"q", "n", "table", "field"}, "FDS file");
    int q = j.at("q").get<int>();
    int n = j.at("n").get<int>();
    auto table = j.at("table").get<std::vector<State>>();
    const Field* field = nullptr;
    if (j.contains("field")) {
        if (j["field"].get<int>() != q) throw InputError("FDS file: field order differs from q");
        field = &Field::get(q);
    }
    return Fds(q, n, std::move(table), field);
}

AffineFds affine_from_json(const json& j) {
    reject_unknown(j, {"q", "n", "matrix", "offset", "field"}, "affine FDS file");
    int q = j.at("q").get<int>();
    int n = j.at("n").get<int>();
    if (j.contains("field") && j["field"].get<int>() != q)
        throw InputError("affine FDS file: field order differs from q");
    const Field& field = Field::get(q);
    Mat m(n, n);
    m.a = j.at("matrix").get<std::vector<int>>();
    if (static_cast<int>(m.a.size()) != n * n)
        throw InputError("affine FDS file: matrix size is not n*n");
    auto offset = j.at("offset").get<std::vector<int>>();
    return AffineFds(field, std::move(m), std::move(offset));
}

json bound_report_to_json(const BoundReport& r) {
    return json{{"name", r.name}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds},
                {"instance", r.instance}};
}

ReportBuilder::ReportBuilder(std::string instance, int q, std::uint64_t seed) {
    j_["schema_version"] = kReportSchemaVersion;
    j_["version"] = kArtifactVersion;
    j_["instance"] = json{{"graph", std::move(instance)}, {"q", q}};
    j_["seed"] = seed;
    j_["quantities"] = json::object();
    j_["bounds"] = json::array();
    j_["witnesses"] = json::object();
    j_["telemetry"] = json::object();
}

void ReportBuilder::add_quantity(const std::string& name, const LogCount& value,
                                 const std::string& certified) {
    json q{{"count", value.count}, {"certified", certified}};
    if (value.count > 0)
        q["log"] = value.log();
    else
        q["log"] = nullptr;
    j_["quantities"][name] = q;
}

void ReportBuilder::add_quantity(const std::string& name, long long value,
                                 const std::string& certified) {
    j_["quantities"][name] = json{{"value", value}, {"certified", certified}};
}

void ReportBuilder::add_bounds(const std::vector<BoundReport>& reports) {
    for (const auto& r : reports) j_["bounds"].push_back(bound_report_to_json(r));
}

void ReportBuilder::add_witness(const std::string& quantity, const std::string& file) {
    j_["witnesses"][quantity] = file;
}

void ReportBuilder::add_telemetry(const std::string& quantity, std::uint64_t candidates,
                                  std::uint64_t prunes) {
    j_["telemetry"][quantity] = json{{"candidates", candidates}, {"prunes", prunes}};
}

void ReportBuilder::add_extra(const std::string& key, const json& value) { j_[key] = value; }

std::string ReportBuilder::str() const { return j_.dump(2) + "\n"; }

json load_report(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("schema_version") || j["schema_version"].get<int>() != kReportSchemaVersion)
        throw InputError("report: missing or unsupported schema_version");
    reject_unknown(j,
                   {"schema_version", "version", "instance", "seed", "quantities", "bounds",
                    "witnesses", "telemetry", "params", "suite"},
                   "report");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << content;
}

}  // namespace fdslab
