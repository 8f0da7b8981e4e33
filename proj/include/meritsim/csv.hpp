#ifndef MERITSIM_CSV_HPP
#define MERITSIM_CSV_HPP

#include <string>
#include <vector>

namespace meritsim::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const; // -1 when absent
    int require_column(const std::string& name, const std::string& file) const;
};

/// Reads a comma-separated file with a header line. No quoting support;
/// none of the shipped formats need it.
Table read_file(const std::string& path);

double to_double(const std::string& cell, const std::string& context);
int to_int(const std::string& cell, const std::string& context);

/// Shortest round-trippable representation of a double.
std::string format_double(double value);

} // namespace meritsim::csv

#endif // MERITSIM_CSV_HPP
