#include "theta/io.hpp"

#include <sstream>

namespace theta {

using nlohmann::json;

json to_json(const TruncatedSeries& s) {
    json coeffs = json::array();
    for (int i = 0; i <= s.order(); ++i) coeffs.push_back(to_dec(s[i]));
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}

TruncatedSeries series_from_json(const json& j) {
    const int order = j.at("order").get<int>();
    TruncatedSeries s(order);
    const auto& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != order + 1)
        throw ParameterDomain("series_from_json: coeffs length must be order+1");
    for (int i = 0; i <= order; ++i) s[i] = parse_dec(coeffs[i].get<std::string>());
    return s;
}

json to_json(const Partition& p) {
    json a = json::array();
    for (int v : p.parts()) a.push_back(v);
    return a;
}

Partition partition_from_json(const json& j) {
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

json to_json(const Constraint& c) {
    json j = json::object();
    if (c.modulus) {
        j["modulus"] = *c.modulus;
        j["allowed_residues"] = c.allowed_residues;
    }
    if (c.distinct) j["distinct"] = true;
    if (!c.max_multiplicity.empty()) {
        json m = json::object();
        for (auto [v, cap] : c.max_multiplicity) m[std::to_string(v)] = cap;
        j["max_multiplicity"] = m;
    }
    if (c.min_part) j["min_part"] = *c.min_part;
    if (c.max_part) j["max_part"] = *c.max_part;
    if (!c.required_parts.empty()) j["required_parts"] = c.required_parts;
    if (c.forbidden_divisor) j["forbidden_divisor"] = *c.forbidden_divisor;
    return j;
}

Constraint constraint_from_json(const json& j) {
    Constraint c;
    if (j.contains("modulus")) {
        c.modulus = j["modulus"].get<int>();
        for (const auto& r : j.at("allowed_residues")) c.allowed_residues.insert(r.get<int>());
    }
    if (j.contains("distinct")) c.distinct = j["distinct"].get<bool>();
    if (j.contains("max_multiplicity"))
        for (auto& [k, v] : j["max_multiplicity"].items())
            c.max_multiplicity[std::stoi(k)] = v.get<int>();
    if (j.contains("min_part")) c.min_part = j["min_part"].get<int>();
    if (j.contains("max_part")) c.max_part = j["max_part"].get<int>();
    if (j.contains("required_parts"))
        for (const auto& v : j["required_parts"]) c.required_parts.push_back(v.get<int>());
    if (j.contains("forbidden_divisor")) c.forbidden_divisor = j["forbidden_divisor"].get<int>();
    return c;
}

json to_json(const PartitionPair& p) {
    return json{{"first", to_json(p.first)}, {"second", to_json(p.second)}};
}

json to_json(const MapTrace& t) {
    return json{{"input", to_json(t.input)}, {"output", to_json(t.output)}, {"case_tag", t.case_tag}};
}

json to_json(const CheckReport& r) {
    json j{{"name", r.name},
           {"params", r.params},
           {"range", r.range},
           {"tag", r.tag},
           {"runtime_ms", r.runtime_ms}};
    switch (r.status) {
        case CheckStatus::Pass: j["status"] = "pass"; break;
        case CheckStatus::Fail: j["status"] = "fail"; break;
        case CheckStatus::Threshold:
            j["status"] = "threshold";
            j["threshold_n0"] = r.threshold_n0;
            break;
    }
    if (r.witness)
        j["witness"] = json{{"index", r.witness->index},
                            {"expected", r.witness->expected},
                            {"actual", r.witness->actual}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

std::string report_csv_header() { return "name,params,range,status,witness_index"; }

std::string report_csv_line(const CheckReport& r) {
    std::ostringstream os;
    os << r.name << ",\"";
    bool first = true;
    for (const auto& [k, v] : r.params) {
        os << (first ? "" : " ") << k << "=" << v;
        first = false;
    }
    os << "\",\"" << r.range << "\",";
    switch (r.status) {
        case CheckStatus::Pass: os << "pass"; break;
        case CheckStatus::Fail: os << "fail"; break;
        case CheckStatus::Threshold: os << "threshold(" << r.threshold_n0 << ")"; break;
    }
    os << "," << (r.witness ? std::to_string(r.witness->index) : "");
    return os.str();
}

}  // namespace theta
