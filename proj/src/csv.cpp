#include "meritsim/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "meritsim/errors.hpp"

namespace meritsim::csv {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        // trim surrounding whitespace
        const auto first = cell.find_first_not_of(" \t\r");
        const auto last = cell.find_last_not_of(" \t\r");
        cells.push_back(first == std::string::npos ? "" : cell.substr(first, last - first + 1));
    }
    if (!line.empty() && line.back() == ',') {
        cells.push_back("");
    }
    return cells;
}

} // namespace

int Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

int Table::require_column(const std::string& name, const std::string& file) const {
    const int idx = column(name);
    if (idx < 0) {
        throw SimError(ErrorCode::ParseError, file + ": missing column '" + name + "'");
    }
    return idx;
}

Table read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw SimError(ErrorCode::ParseError, "cannot open " + path);
    }
    Table table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        auto cells = split_line(line);
        if (first) {
            table.header = std::move(cells);
            first = false;
        } else {
            if (cells.size() != table.header.size()) {
                throw SimError(ErrorCode::ParseError,
                               path + ": row has " + std::to_string(cells.size()) +
                                   " cells, header has " + std::to_string(table.header.size()));
            }
            table.rows.push_back(std::move(cells));
        }
    }
    if (first) {
        throw SimError(ErrorCode::ParseError, path + ": empty file");
    }
    return table;
}

double to_double(const std::string& cell, const std::string& context) {
    try {
        std::size_t pos = 0;
        const double value = std::stod(cell, &pos);
        if (pos != cell.size()) {
            throw std::invalid_argument(cell);
        }
        return value;
    } catch (const std::exception&) {
        throw SimError(ErrorCode::ParseError, context + ": '" + cell + "' is not a number");
    }
}

int to_int(const std::string& cell, const std::string& context) {
    try {
        std::size_t pos = 0;
        const int value = std::stoi(cell, &pos);
        if (pos != cell.size()) {
            throw std::invalid_argument(cell);
        }
        return value;
    } catch (const std::exception&) {
        throw SimError(ErrorCode::ParseError, context + ": '" + cell + "' is not an integer");
    }
}

std::string format_double(double value) {
    // %.17g always round-trips; prefer the shortest form that does.
    for (int precision = 1; precision <= 17; ++precision) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
        double parsed = 0.0;
        std::sscanf(buf, "%lf", &parsed);
        if (parsed == value) {
            return buf;
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

} // namespace meritsim::csv
