#include "nadslab/report.hpp"

#include "nadslab/errors.hpp"

#include <sstream>

namespace nadslab {

namespace {

Json body(const Report& r)
{
    Json j;
    j["claim"] = r.claim;
    j["parameters"] = Json::object();
    for (const auto& [key, value] : r.parameters) {
        j["parameters"][key] = value;
    }
    j["verdict"] = r.pass ? "pass" : "fail";
    j["witnesses"] = r.witnesses;
    j["checked_items"] = r.checked_items;
    if (!r.notes.empty()) {
        j["notes"] = r.notes;
    }
    if (!r.sections.empty()) {
        Json sections = Json::array();
        for (const Report& s : r.sections) {
            sections.push_back(body(s));
        }
        j["sections"] = sections;
    }
    return j;
}

void indent_to(std::ostringstream& out, int depth)
{
    for (int i = 0; i < depth; ++i) {
        out << "  ";
    }
}

void render(const Report& r, std::ostringstream& out, int depth)
{
    indent_to(out, depth);
    out << (r.pass ? "[pass] " : "[FAIL] ") << r.claim << "\n";
    for (const auto& [key, value] : r.parameters) {
        indent_to(out, depth + 1);
        out << key << " = " << value << "\n";
    }
    for (const std::string& note : r.notes) {
        indent_to(out, depth + 1);
        out << "note: " << note << "\n";
    }
    indent_to(out, depth + 1);
    out << r.checked_items.size() << " checked item(s), " << r.witnesses.size()
        << " witness(es)\n";
    for (const Json& w : r.witnesses) {
        indent_to(out, depth + 1);
        out << "witness " << w.dump() << "\n";
    }
    for (const Report& s : r.sections) {
        render(s, out, depth + 1);
    }
}

void validate_body(const Json& j, bool top)
{
    if (!j.is_object()) {
        throw Error("report must be a JSON object");
    }
    if (top) {
        if (!j.contains("report_version") || !j["report_version"].is_number_integer()) {
            throw Error("report missing integer report_version");
        }
    }
    if (!j.contains("claim") || !j["claim"].is_string()) {
        throw Error("report missing string field 'claim'");
    }
    if (!j.contains("parameters") || !j["parameters"].is_object()) {
        throw Error("report missing object field 'parameters'");
    }
    for (const auto& [key, value] : j["parameters"].items()) {
        if (!value.is_string()) {
            throw Error("report parameter '" + key + "' must be a string");
        }
    }
    if (!j.contains("verdict") || !j["verdict"].is_string() ||
        (j["verdict"] != "pass" && j["verdict"] != "fail")) {
        throw Error("report verdict must be \"pass\" or \"fail\"");
    }
    for (const char* field : {"witnesses", "checked_items"}) {
        if (!j.contains(field) || !j[field].is_array()) {
            throw Error(std::string("report missing array field '") + field + "'");
        }
    }
    if (j.contains("notes")) {
        if (!j["notes"].is_array()) {
            throw Error("report notes must be an array");
        }
        for (const Json& n : j["notes"]) {
            if (!n.is_string()) {
                throw Error("report notes must contain strings");
            }
        }
    }
    if (j.contains("sections")) {
        if (!j["sections"].is_array()) {
            throw Error("report sections must be an array");
        }
        for (const Json& s : j["sections"]) {
            validate_body(s, false);
        }
    }
}

} // namespace

Json to_json(const Report& r)
{
    Json j = body(r);
    j["report_version"] = report_version;
    return j;
}

std::string to_text(const Report& r)
{
    std::ostringstream out;
    render(r, out, 0);
    return out.str();
}

void validate_report_json(const Json& j)
{
    validate_body(j, true);
}

int exit_code_for(const Report& r)
{
    return r.pass ? 0 : 1;
}

} // namespace nadslab
