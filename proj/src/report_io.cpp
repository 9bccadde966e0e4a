#include "partq/report_io.hpp"

#include <sstream>

#include <json.hpp>

namespace partq {

std::string report_to_json(const CheckReport& report, int indent) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["id"] = report.spec.id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.spec.params) params[k] = v;
    j["params"] = params;
    j["order"] = report.spec.order;
    j["range_rule"] = report.spec.range_rule;
    j["checked"] = report.checked;
    nlohmann::ordered_json ds = nlohmann::ordered_json::array();
    for (const auto& d : report.discrepancies) {
        nlohmann::ordered_json e;
        e["n"] = d.n;
        e["lhs"] = d.lhs.get_str();
        e["rhs"] = d.rhs.get_str();
        ds.push_back(e);
    }
    j["discrepancies"] = ds;
    j["status"] = report.pass() ? "pass" : "fail";
    j["elapsed_ms"] = report.elapsed_ms;
    j["notes"] = report.notes;
    return j.dump(indent) + "\n";
}

std::string report_to_tsv(const CheckReport& report) {
    std::ostringstream os;
    os << "n\tlhs\trhs\n";
    for (const auto& d : report.discrepancies)
        os << d.n << "\t" << d.lhs.get_str() << "\t" << d.rhs.get_str() << "\n";
    os << "# id\t" << report.spec.id << "\n";
    os << "# checked\t" << report.checked.size() << "\n";
    os << "# status\t" << (report.pass() ? "pass" : "fail") << "\n";
    return os.str();
}

} // namespace partq
