#include "table_writer.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "json.hpp"
#include "mirrorfield/errors.hpp"

namespace mirrorfield::cli {

std::string format_value(double value) {
    char buffer[48];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c == 0 ? "" : ",") << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c == 0 ? "" : ",") << format_value(row[c]);
        }
        out << '\n';
    }
    if (!out) {
        throw IoFailure("failed while writing CSV output");
    }
}

void write_json(const Table& table, std::ostream& out) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json entry;
        for (std::size_t c = 0; c < row.size(); ++c) {
            entry[table.columns[c]] = row[c];
        }
        rows.push_back(std::move(entry));
    }
    out << rows.dump(2) << '\n';
    if (!out) {
        throw IoFailure("failed while writing JSON output");
    }
}

void write_table(const Table& table, const std::string& path, OutputFormat format) {
    const auto emit = [&](std::ostream& out) {
        if (format == OutputFormat::Csv) {
            write_csv(table, out);
        } else {
            write_json(table, out);
        }
    };
    if (path.empty()) {
        emit(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw IoFailure("cannot open output file: " + path);
    }
    emit(out);
    out.flush();
    if (!out) {
        throw IoFailure("failed while flushing output file: " + path);
    }
}

} // namespace mirrorfield::cli
