#include "eigengap/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace eigengap {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void Report::param(const std::string& key, double value) {
    params.emplace_back(key, format_number(value));
}

void Report::param(const std::string& key, int value) {
    params.emplace_back(key, std::to_string(value));
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
    out.push_back('"');
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(ch);
        }
    }
    out.push_back('"');
}

}  // namespace

std::string to_json(const Report& r) {
    std::string out;
    out += "{\n  \"suite\": ";
    append_escaped(out, r.suite);
    out += ",\n  \"params\": {";
    for (std::size_t i = 0; i < r.params.size(); ++i) {
        out += (i == 0) ? "\n    " : ",\n    ";
        append_escaped(out, r.params[i].first);
        out += ": ";
        append_escaped(out, r.params[i].second);
    }
    out += r.params.empty() ? "},\n" : "\n  },\n";
    out += "  \"checks\": [";
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        const auto& c = r.checks[i];
        out += (i == 0) ? "\n    {" : ",\n    {";
        out += "\"id\": ";
        append_escaped(out, c.id);
        out += ", \"anchor\": ";
        append_escaped(out, c.anchor);
        out += ", \"max_violation\": " + format_number(c.max_violation);
        out += ", \"tolerance\": " + format_number(c.tolerance);
        out += ", \"worst_t\": " + format_number(c.worst_t);
        out += std::string(", \"pass\": ") + (c.pass ? "true" : "false");
        out += "}";
    }
    out += r.checks.empty() ? "],\n" : "\n  ],\n";
    out += std::string("  \"pass\": ") + (r.pass() ? "true" : "false") + "\n}\n";
    return out;
}

Report report_from_json(const std::string& text) {
    const auto j = nlohmann::ordered_json::parse(text);
    Report r;
    r.suite = j.at("suite").get<std::string>();
    for (const auto& [key, value] : j.at("params").items())
        r.params.emplace_back(key, value.get<std::string>());
    for (const auto& jc : j.at("checks")) {
        CheckResult c;
        c.id = jc.at("id").get<std::string>();
        c.anchor = jc.at("anchor").get<std::string>();
        c.max_violation = jc.at("max_violation").get<double>();
        c.tolerance = jc.at("tolerance").get<double>();
        c.worst_t = jc.at("worst_t").get<double>();
        c.pass = jc.at("pass").get<bool>();
        r.checks.push_back(std::move(c));
    }
    return r;
}

std::string to_csv(
    const std::vector<std::pair<std::string, std::vector<double>>>& columns) {
    if (columns.empty()) return "";
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out += ",";
        out += columns[c].first;
    }
    out += "\n";
    const std::size_t rows = columns.front().second.size();
    for (const auto& col : columns)
        if (col.second.size() != rows)
            throw std::invalid_argument("csv columns must have equal length");
    for (std::size_t rix = 0; rix < rows; ++rix) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) out += ",";
            out += format_number(columns[c].second[rix]);
        }
        out += "\n";
    }
    return out;
}

}  // namespace eigengap
