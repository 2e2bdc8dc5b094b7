#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "sweep_config.hpp"

namespace mirrorfield::cli {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Fixed 12-significant-digit decimal formatting, C locale. Identical inputs
// give identical bytes, which the golden-file tests rely on.
std::string format_value(double value);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

// Writes to the path, or to stdout when the path is empty.
// Throws IoFailure when the sink cannot be opened or written.
void write_table(const Table& table, const std::string& path, OutputFormat format);

} // namespace mirrorfield::cli
