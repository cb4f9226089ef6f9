#include "netctrl/report_io.hpp"

#include <sstream>

namespace netctrl {

namespace {

nlohmann::ordered_json node_set_json(const NodeSet& s) {
    auto arr = nlohmann::ordered_json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

std::string node_set_text(const NodeSet& s) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int v : s) {
        if (!first) out << ", ";
        out << v;
        first = false;
    }
    out << "}";
    return out.str();
}

}  // namespace

nlohmann::ordered_json report_to_json(const DriverReport& r) {
    nlohmann::ordered_json doc;
    doc["n_min"] = r.n_min;
    doc["drivers"] = node_set_json(r.drivers);

    auto types = nlohmann::ordered_json::object();
    for (int d : r.drivers) {
        auto tags = nlohmann::ordered_json::array();
        auto it = r.types.find(d);
        if (it != r.types.end()) {
            if (it->second.type_i) tags.push_back("I");
            if (it->second.type_ii) tags.push_back("II");
        }
        types[std::to_string(d)] = std::move(tags);
    }
    doc["types"] = std::move(types);

    auto dilations = nlohmann::ordered_json::array();
    for (const auto& d : r.dilations) {
        nlohmann::ordered_json entry;
        entry["anchor"] = d.anchor;
        entry["members"] = node_set_json(d.members);
        dilations.push_back(std::move(entry));
    }
    doc["dilations"] = std::move(dilations);

    auto childs = nlohmann::ordered_json::array();
    for (const auto& c : r.child_sccs) childs.push_back(node_set_json(c));
    doc["child_sccs"] = std::move(childs);

    auto pairings = nlohmann::ordered_json::array();
    for (const auto& p : r.pairings)
        pairings.push_back({p.dilation_index, p.child_index, p.node});
    doc["pairings"] = std::move(pairings);

    auto pattern = nlohmann::ordered_json::array();
    for (auto [row, col] : r.input_pattern.nonzeros) pattern.push_back({row, col});
    doc["input_pattern"] = std::move(pattern);

    doc["verified"] = r.verified();
    return doc;
}

std::string report_to_text(const DriverReport& r) {
    std::ostringstream out;
    out << "minimum drivers: " << r.n_min << "\n";
    out << "drivers:";
    for (int d : r.drivers) {
        out << " " << d << "(";
        auto it = r.types.find(d);
        bool wrote = false;
        if (it != r.types.end() && it->second.type_i) {
            out << "I";
            wrote = true;
        }
        if (it != r.types.end() && it->second.type_ii) {
            if (wrote) out << "+";
            out << "II";
        }
        out << ")";
    }
    out << "\n";
    out << "dilation sets:\n";
    for (const auto& d : r.dilations)
        out << "  anchor " << d.anchor << ": " << node_set_text(d.members) << "\n";
    out << "child sccs:\n";
    for (const auto& c : r.child_sccs) out << "  " << node_set_text(c) << "\n";
    out << "pairings:\n";
    for (const auto& p : r.pairings)
        out << "  dilation " << p.dilation_index << " <-> child " << p.child_index
            << " via node " << p.node << "\n";
    out << "input pattern (" << r.input_pattern.rows << "x" << r.input_pattern.cols << "):";
    for (auto [row, col] : r.input_pattern.nonzeros) out << " (" << row << "," << col << ")";
    out << "\n";
    out << "verified: " << (r.verified() ? "yes" : "no") << "\n";
    return out.str();
}

nlohmann::ordered_json verification_to_json(const VerificationResult& v) {
    nlohmann::ordered_json doc;
    switch (v.status) {
        case VerifyStatus::Controllable:
            doc["status"] = "controllable";
            break;
        case VerifyStatus::FailsConnectivity:
            doc["status"] = "fails-connectivity";
            doc["unreachable"] = node_set_json(v.unreachable);
            break;
        case VerifyStatus::FailsRank:
            doc["status"] = "fails-rank";
            doc["rank_deficit"] = v.rank_deficit;
            break;
    }
    return doc;
}

std::string verification_to_text(const VerificationResult& v) {
    switch (v.status) {
        case VerifyStatus::Controllable:
            return "controllable\n";
        case VerifyStatus::FailsConnectivity:
            return "fails-connectivity: unreachable " + node_set_text(v.unreachable) + "\n";
        case VerifyStatus::FailsRank:
            return "fails-rank: deficit " + std::to_string(v.rank_deficit) + "\n";
    }
    return "";
}

}  // namespace netctrl
