#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace grat::output {

// One table destined for CSV or JSON emission.  Cells are either numeric or
// label strings (exact fractions travel as labels).
using Cell = std::variant<std::string, double, long long>;
using Row = std::vector<Cell>;

struct OutputRecord {
    std::string schema;  // eval_table | coeff_table | error_table | check_report
    std::vector<std::string> columns;
    std::vector<Row> rows;
};

// 17 significant digits: round-trips every double.
std::string format_double(double v);

void write_csv(std::ostream& os, const std::vector<OutputRecord>& records);
void write_json(std::ostream& os, const std::vector<OutputRecord>& records);

}  // namespace grat::output
