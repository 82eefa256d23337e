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


#include "tgate/cli/format.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace tgate::cli {

std::string format_number(double value, int precision) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    if (value == 0) {
        // Drops the sign of negative zero so equal values print identically.
        return "0";
    }
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, precision);
    if (ec != std::errc()) {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buffer, end);
}

std::string format_shortest(double value) {
    if (!std::isfinite(value) || value == 0) {
        return format_number(value, 17);
    }
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc()) {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buffer, end);
}

double round_to_precision(double value, int precision) {
    if (precision >= 17 || !std::isfinite(value)) {
        return value;
    }
    std::string text = format_number(value, precision);
    return std::strtod(text.c_str(), nullptr);
}

Json json_number(double value, int precision) {
    if (!std::isfinite(value)) {
        return nullptr;
    }
    return round_to_precision(value, precision);
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("table row width does not match the header");
    }
    rows.push_back(std::move(row));
}

std::string csv_escape(const std::string &field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

namespace {

std::string cell_text(const Cell &cell, int precision) {
    if (const double *d = std::get_if<double>(&cell)) {
        return format_number(*d, precision);
    }
    if (const long long *i = std::get_if<long long>(&cell)) {
        return std::to_string(*i);
    }
    if (const std::string *s = std::get_if<std::string>(&cell)) {
        return csv_escape(*s);
    }
    return "";
}

}  // namespace

Json cell_to_json(const Cell &cell, int precision) {
    if (const double *d = std::get_if<double>(&cell)) {
        return json_number(*d, precision);
    }
    if (const long long *i = std::get_if<long long>(&cell)) {
        return *i;
    }
    if (const std::string *s = std::get_if<std::string>(&cell)) {
        return *s;
    }
    return nullptr;
}

std::string Table::to_csv(int precision) const {
    std::string out;
    for (size_t i = 0; i < columns.size(); i++) {
        out += (i ? "," : "") + csv_escape(columns[i]);
    }
    out += '\n';
    for (const auto &row : rows) {
        for (size_t i = 0; i < row.size(); i++) {
            if (i) {
                out += ',';
            }
            out += cell_text(row[i], precision);
        }
        out += '\n';
    }
    return out;
}

Json Table::to_json(int precision) const {
    Json array = Json::array();
    for (const auto &row : rows) {
        Json object = Json::object();
        for (size_t i = 0; i < row.size(); i++) {
            object[columns[i]] = cell_to_json(row[i], precision);
        }
        array.push_back(std::move(object));
    }
    return array;
}

}  // namespace tgate::cli
