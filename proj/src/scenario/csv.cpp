// Copyright 2026 The muxsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "mux/scenario/csv.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "mux/scenario/scenario.hpp"

namespace mux::scenario {

namespace {

std::string quoted(const std::string &text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (const char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_record(std::string_view line) {
    std::vector<std::string> fields(1);
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                in_quotes = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    return fields;
}

}  // namespace

std::size_t Table::column(std::string_view name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw std::out_of_range("no column " + std::string(name));
    return static_cast<std::size_t>(it - columns.begin());
}

std::string format_cell(const Cell &cell) {
    if (const auto *d = std::get_if<double>(&cell)) return format_number(*d);
    if (const auto *i = std::get_if<std::uint64_t>(&cell)) return std::to_string(*i);
    if (const auto *s = std::get_if<std::string>(&cell)) return quoted(*s);
    return "";
}

std::string to_csv(const Table &table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += quoted(table.columns[i]);
    }
    out += '\n';
    for (const auto &line : table.metadata) out += "# " + line + "\n";
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

Table read_csv(std::string_view text) {
    Table table;
    bool header = true;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto line = text.substr(start, end - start);
        start = end + 1;
        if (header) {
            table.columns = split_record(line);
            header = false;
        } else if (line.rfind("# ", 0) == 0) {
            table.metadata.emplace_back(line.substr(2));
        } else if (!line.empty()) {
            std::vector<Cell> row;
            for (auto &field : split_record(line)) {
                if (field.empty()) {
                    row.emplace_back();
                } else {
                    row.emplace_back(std::move(field));
                }
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

void write_text_file(const std::filesystem::path &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ScenarioError("cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) throw ScenarioError("failed writing " + path.string());
}

}  // namespace mux::scenario
