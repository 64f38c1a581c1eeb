#include "schurlc/report.hpp"

#include <sstream>

namespace schurlc {

namespace {

using nlohmann::json;

const char* status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::holds: return "holds";
        case VerdictStatus::fails: return "fails";
        case VerdictStatus::vacuous: return "vacuous";
    }
    return "unknown";
}

json verdict_to_json(const Verdict& v) {
    json j;
    j["k"] = v.k;
    j["status"] = status_name(v.status);
    if (v.schur_witness) {
        json w;
        w["partition"] = v.schur_witness->first.parts();
        w["coefficient"] = v.schur_witness->second.get_str();
        j["witness"] = std::move(w);
    } else if (v.numeric_witness) {
        json w;
        w["square"] = v.numeric_witness->first.get_str();
        w["product"] = v.numeric_witness->second.get_str();
        j["witness"] = std::move(w);
    }
    return j;
}

}  // namespace

nlohmann::json report_to_json(const VerdictReport& report) {
    json j;
    j["statement"] = statement_name(report.statement);
    json params = json::object();
    if (report.params.m) params["m"] = *report.params.m;
    if (report.params.n) params["n"] = *report.params.n;
    if (report.params.kind) params["kind"] = *report.params.kind;
    if (report.params.shape_class) params["class"] = *report.params.shape_class;
    j["params"] = std::move(params);
    json verdicts = json::array();
    for (const auto& v : report.verdicts) verdicts.push_back(verdict_to_json(v));
    j["verdicts"] = std::move(verdicts);
    j["elapsed_ms"] = report.elapsed_ms;
    j["tool_version"] = kToolVersion;
    return j;
}

std::string report_to_csv(const VerdictReport& report) {
    std::ostringstream out;
    out << "statement,k,status\n";
    for (const auto& v : report.verdicts)
        out << statement_name(report.statement) << ',' << v.k << ','
            << status_name(v.status) << '\n';
    return out.str();
}

std::string report_to_text(const VerdictReport& report) {
    std::ostringstream out;
    out << statement_name(report.statement);
    if (report.params.m) out << " m=" << *report.params.m;
    if (report.params.n) out << " n=" << *report.params.n;
    if (report.params.kind) out << " kind=" << *report.params.kind;
    if (report.params.shape_class) out << " class=" << *report.params.shape_class;
    out << '\n';
    if (report.verdicts.empty()) out << "  (empty k-range, vacuously holds)\n";
    for (const auto& v : report.verdicts) {
        out << "  k=" << v.k << ": " << status_name(v.status);
        if (v.schur_witness)
            out << "  witness s_(" << v.schur_witness->first.to_string()
                << ") coefficient " << v.schur_witness->second.get_str();
        if (v.numeric_witness)
            out << "  square " << v.numeric_witness->first.get_str() << " < product "
                << v.numeric_witness->second.get_str();
        out << '\n';
    }
    out << "  elapsed " << report.elapsed_ms << " ms\n";
    return out.str();
}

nlohmann::json table_to_json(const CountTable& table) {
    json j;
    j["n"] = table.n;
    j["kind"] = table.kind == CountKind::involutions ? "involutions" : "permutations";
    j["class"] = table.shape_class == ShapeClass::theta ? "theta" : "all";
    json counts = json::array();
    for (const auto& c : table.counts) counts.push_back(c.get_str());
    j["counts"] = std::move(counts);
    j["tool_version"] = kToolVersion;
    return j;
}

std::string table_to_csv(const CountTable& table) {
    std::ostringstream out;
    out << "n,k,count\n";
    for (std::size_t i = 0; i < table.counts.size(); ++i)
        out << table.n << ',' << i + 1 << ',' << table.counts[i].get_str() << '\n';
    return out.str();
}

std::string table_to_text(const CountTable& table) {
    std::ostringstream out;
    for (std::size_t i = 0; i < table.counts.size(); ++i) {
        if (i) out << ' ';
        out << table.counts[i].get_str();
    }
    out << '\n';
    return out.str();
}

}  // namespace schurlc
