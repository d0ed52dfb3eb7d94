#include "kerrneg/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "kerrneg/errors.hpp"

namespace kerrneg {

std::string format_double(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_double_shortest(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ValidationError("cannot parse number: '" + text + "'");
    return value;
}

void write_csv(std::ostream& out, const SweepResult& result) {
    out << kCsvHeader << '\n';
    for (const SweepRow& row : result.rows) {
        out << format_double(row.t) << ',' << format_double(row.eta) << ','
            << format_double(row.zeta) << ',' << format_double(row.theta) << ','
            << row.n1 << ',' << row.n2 << ',' << format_double(row.negativity)
            << ',' << format_double(row.negativity_closed_form) << ','
            << format_double(row.engine_gap) << '\n';
    }
}

std::vector<SweepRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("csv: empty input");
    if (line != kCsvHeader)
        throw ValidationError("csv: unexpected header '" + line + "'");

    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 9)
            throw ValidationError("csv: expected 9 fields, got " +
                                  std::to_string(fields.size()));
        SweepRow row;
        row.t = parse_double(fields[0]);
        row.eta = parse_double(fields[1]);
        row.zeta = parse_double(fields[2]);
        row.theta = parse_double(fields[3]);
        row.n1 = static_cast<int>(parse_double(fields[4]));
        row.n2 = static_cast<int>(parse_double(fields[5]));
        row.negativity = parse_double(fields[6]);
        row.negativity_closed_form = parse_double(fields[7]);
        row.engine_gap = parse_double(fields[8]);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace kerrneg
