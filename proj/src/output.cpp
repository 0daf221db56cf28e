#include "grat/output.hpp"

#include <cstdio>

#include <json.hpp>

namespace grat::output {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string csv_cell(const Cell& c) {
    if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
    if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
    return std::to_string(std::get<long long>(c));
}

nlohmann::json json_record(const OutputRecord& r) {
    nlohmann::json jr;
    jr["schema"] = r.schema;
    jr["columns"] = r.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const Row& row : r.rows) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const Cell& c : row) {
            if (std::holds_alternative<std::string>(c))
                jrow.push_back(std::get<std::string>(c));
            else if (std::holds_alternative<double>(c))
                jrow.push_back(std::get<double>(c));
            else
                jrow.push_back(std::get<long long>(c));
        }
        rows.push_back(std::move(jrow));
    }
    jr["rows"] = std::move(rows);
    return jr;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<OutputRecord>& records) {
    bool first = true;
    for (const OutputRecord& r : records) {
        if (!first) os << "\n";
        first = false;
        for (std::size_t i = 0; i < r.columns.size(); ++i) {
            if (i) os << ",";
            os << r.columns[i];
        }
        os << "\n";
        for (const Row& row : r.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) os << ",";
                os << csv_cell(row[i]);
            }
            os << "\n";
        }
    }
}

void write_json(std::ostream& os, const std::vector<OutputRecord>& records) {
    if (records.size() == 1) {
        os << json_record(records[0]).dump(2) << "\n";
        return;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const OutputRecord& r : records) arr.push_back(json_record(r));
    os << arr.dump(2) << "\n";
}

}  // namespace grat::output
