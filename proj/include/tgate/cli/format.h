// Copyright 2026 The tgate Authors
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


#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace tgate::cli {

using Json = nlohmann::ordered_json;

/// Fixed-digit rendering: `precision` significant digits in
/// general notation, identical on every platform. Non-finite values print as
/// nan, inf or -inf.
std::string format_number(double value, int precision);

/// Shortest text that reads back to the same double.
std::string format_shortest(double value);

/// Rounds to `precision` significant digits; 17 leaves the value unchanged.
double round_to_precision(double value, int precision);

/// JSON number rounded to `precision` digits, or null when not finite.
Json json_number(double value, int precision);

/// One CSV or JSON table cell: empty, floating point, integer or text.
using Cell = std::variant<std::monostate, double, long long, std::string>;

/// JSON value of a cell; empty cells and non-finite numbers become null.
Json cell_to_json(const Cell &cell, int precision);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
    /// Header line plus one line per row, each terminated by a newline.
    std::string to_csv(int precision) const;
    /// Array of objects keyed by column name; empty cells become null.
    Json to_json(int precision) const;
};

/// Quotes a CSV field if it contains a comma, quote or line break.
std::string csv_escape(const std::string &field);

}  // namespace tgate::cli
