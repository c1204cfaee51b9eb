// Copyright 2026 The superrad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "superrad/cli/cli.hpp"

namespace superrad::cli {

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_csv(std::ostream& out, const CsvTable& table) {
    for (const auto& [key, value] : table.metadata) out << "# " << key << " = " << value << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
        out << '\n';
    }
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            const auto eq = line.find(" = ");
            if (eq != std::string::npos && eq > 2) {
                table.metadata.emplace_back(line.substr(2, eq - 2), line.substr(eq + 3));
            }
            continue;
        }
        std::stringstream fields(line);
        std::string field;
        if (!have_header) {
            while (std::getline(fields, field, ',')) table.columns.push_back(field);
            have_header = true;
            continue;
        }
        std::vector<double> row;
        while (std::getline(fields, field, ',')) {
            char* end = nullptr;
            row.push_back(std::strtod(field.c_str(), &end));
            if (end == field.c_str() || *end != '\0') {
                throw std::runtime_error("read_csv: malformed number '" + field + "'");
            }
        }
        if (row.size() != table.columns.size()) {
            throw std::runtime_error("read_csv: row width differs from header");
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_csv_file(const std::filesystem::path& path, const CsvTable& table) {
    std::filesystem::path tmp = path;
    tmp += ".partial";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw IoError("cannot open " + path.string() + " for writing");
        write_csv(out, table);
        out.flush();
        if (!out) {
            out.close();
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw IoError("error while writing " + path.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw IoError("cannot move output into place at " + path.string() + ": " + ec.message());
    }
}

}  // namespace superrad::cli
