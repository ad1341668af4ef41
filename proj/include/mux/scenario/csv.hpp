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


#ifndef MUX_SCENARIO_CSV_HPP
#define MUX_SCENARIO_CSV_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mux::scenario {

/// Empty, real (12 significant digits), unsigned integer or text.
using Cell = std::variant<std::monostate, double, std::uint64_t, std::string>;

struct Table {
    std::vector<std::string> columns;
    /// Written as `# ` lines between the header and the data.
    std::vector<std::string> metadata;
    std::vector<std::vector<Cell>> rows;

    /// Index of `column`; throws std::out_of_range when absent.
    std::size_t column(std::string_view name) const;
};

std::string format_cell(const Cell &cell);
std::string to_csv(const Table &table);

/// Parses text produced by to_csv back into a table of strings. Metadata is kept.
Table read_csv(std::string_view text);

void write_text_file(const std::filesystem::path &path, std::string_view contents);

}  // namespace mux::scenario

#endif
