// Copyright 2026 The groverlab Authors
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

#include "groverlab/calib/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "groverlab/errors.hpp"

namespace groverlab::calib {

const char* const kCalibrationColumns[13] = {
    "qubit",        "T1_us",    "T2_us",     "f_GHz",    "anharmonicity_GHz",
    "readout_error", "P_m0p1",  "P_m1p0",    "t_readout_ns",
    "ID_error",     "SX_error", "X_error",   "ECR_error",
};

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

double parse_cell(const std::string& cell, std::size_t row, const std::string& column) {
    try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError("row " + std::to_string(row) + ", column " + column +
                         ": cannot parse \"" + cell + "\" as a number");
    }
}

void check_probability(double v, std::size_t row, const std::string& column) {
    if (v < 0.0 || v > 1.0) {
        throw ParseError("row " + std::to_string(row) + ": " + column + " = " +
                         std::to_string(v) + " outside [0, 1]");
    }
}

void check_nonnegative(double v, std::size_t row, const std::string& column) {
    if (v < 0.0) {
        throw ParseError("row " + std::to_string(row) + ": " + column + " = " +
                         std::to_string(v) + " must be nonnegative");
    }
}

}  // namespace

std::vector<CalibrationRecord> parse_calibration_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw SchemaError("calibration CSV is empty");
    const std::vector<std::string> header = split_csv_line(line);

    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;

    for (std::size_t i = 0; i + 1 < 13; ++i) {  // ECR_error optional
        if (col.find(kCalibrationColumns[i]) == col.end()) {
            throw SchemaError(std::string("calibration CSV missing column \"") +
                              kCalibrationColumns[i] + "\"");
        }
    }
    const bool has_ecr = col.find("ECR_error") != col.end();

    std::vector<CalibrationRecord> records;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() < header.size() - (has_ecr ? 0 : 0)) {
            throw ParseError("row " + std::to_string(row) + ": expected " +
                             std::to_string(header.size()) + " cells, got " +
                             std::to_string(cells.size()));
        }
        auto cell = [&](const char* name) -> const std::string& {
            return cells[col.at(name)];
        };

        CalibrationRecord r;
        r.qubit = static_cast<int>(parse_cell(cell("qubit"), row, "qubit"));
        r.t1_us = parse_cell(cell("T1_us"), row, "T1_us");
        r.t2_us = parse_cell(cell("T2_us"), row, "T2_us");
        r.f_ghz = parse_cell(cell("f_GHz"), row, "f_GHz");
        r.anharmonicity_ghz = parse_cell(cell("anharmonicity_GHz"), row, "anharmonicity_GHz");
        r.readout_error = parse_cell(cell("readout_error"), row, "readout_error");
        r.p_m0p1 = parse_cell(cell("P_m0p1"), row, "P_m0p1");
        r.p_m1p0 = parse_cell(cell("P_m1p0"), row, "P_m1p0");
        r.t_readout_ns = parse_cell(cell("t_readout_ns"), row, "t_readout_ns");
        r.id_error = parse_cell(cell("ID_error"), row, "ID_error");
        r.sx_error = parse_cell(cell("SX_error"), row, "SX_error");
        r.x_error = parse_cell(cell("X_error"), row, "X_error");
        if (has_ecr && !cell("ECR_error").empty()) {
            r.ecr_error = parse_cell(cell("ECR_error"), row, "ECR_error");
        }

        check_nonnegative(r.t1_us, row, "T1_us");
        check_nonnegative(r.t2_us, row, "T2_us");
        check_nonnegative(r.t_readout_ns, row, "t_readout_ns");
        check_probability(r.readout_error, row, "readout_error");
        check_probability(r.p_m0p1, row, "P_m0p1");
        check_probability(r.p_m1p0, row, "P_m1p0");
        check_probability(r.id_error, row, "ID_error");
        check_probability(r.sx_error, row, "SX_error");
        check_probability(r.x_error, row, "X_error");
        if (r.ecr_error) check_probability(*r.ecr_error, row, "ECR_error");

        records.push_back(r);
    }
    return records;
}

std::vector<CalibrationRecord> load_calibration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open calibration file: " + path);
    return parse_calibration_csv(in);
}

std::string to_csv(const std::vector<CalibrationRecord>& records) {
    std::ostringstream out;
    for (std::size_t i = 0; i < 13; ++i) {
        if (i > 0) out << ',';
        out << kCalibrationColumns[i];
    }
    out << "\r\n";
    out.precision(10);
    for (const CalibrationRecord& r : records) {
        out << r.qubit << ',' << r.t1_us << ',' << r.t2_us << ',' << r.f_ghz << ','
            << r.anharmonicity_ghz << ',' << r.readout_error << ',' << r.p_m0p1 << ','
            << r.p_m1p0 << ',' << r.t_readout_ns << ',' << r.id_error << ',' << r.sx_error
            << ',' << r.x_error << ',';
        if (r.ecr_error) out << *r.ecr_error;
        out << "\r\n";
    }
    return out.str();
}

double quantile_inclusive(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) throw InsufficientDataError("quantile of an empty sample");
    if (sorted.size() == 1) return sorted[0];
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

namespace {

FieldSummary summarize_field(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);

    FieldSummary f;
    f.mean = mean;
    f.stdev = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    f.min = values.front();
    f.q25 = quantile_inclusive(values, 0.25);
    f.median = quantile_inclusive(values, 0.50);
    f.q75 = quantile_inclusive(values, 0.75);
    f.max = values.back();
    return f;
}

}  // namespace

CalibrationSummary summarize_calibration(const std::vector<CalibrationRecord>& records) {
    if (records.empty()) {
        throw InsufficientDataError("calibration summary needs at least one record");
    }
    CalibrationSummary summary;
    summary.qubit_count = records.size();

    const std::vector<std::pair<const char*, std::function<double(const CalibrationRecord&)>>>
        getters = {
            {"T1_us", [](const auto& r) { return r.t1_us; }},
            {"T2_us", [](const auto& r) { return r.t2_us; }},
            {"f_GHz", [](const auto& r) { return r.f_ghz; }},
            {"anharmonicity_GHz", [](const auto& r) { return r.anharmonicity_ghz; }},
            {"readout_error", [](const auto& r) { return r.readout_error; }},
            {"P_m0p1", [](const auto& r) { return r.p_m0p1; }},
            {"P_m1p0", [](const auto& r) { return r.p_m1p0; }},
            {"t_readout_ns", [](const auto& r) { return r.t_readout_ns; }},
            {"ID_error", [](const auto& r) { return r.id_error; }},
            {"SX_error", [](const auto& r) { return r.sx_error; }},
            {"X_error", [](const auto& r) { return r.x_error; }},
        };
    for (const auto& [name, get] : getters) {
        std::vector<double> values;
        values.reserve(records.size());
        for (const CalibrationRecord& r : records) values.push_back(get(r));
        summary.fields[name] = summarize_field(std::move(values));
    }

    std::vector<double> ecr;
    for (const CalibrationRecord& r : records) {
        if (r.ecr_error) ecr.push_back(*r.ecr_error);
    }
    if (!ecr.empty()) summary.fields["ECR_error"] = summarize_field(std::move(ecr));
    return summary;
}

const FieldSummary& CalibrationSummary::field(const std::string& name) const {
    const auto it = fields.find(name);
    if (it == fields.end()) {
        throw SchemaError("calibration summary missing field \"" + name + "\"");
    }
    return it->second;
}

CalibrationSummary summary_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("calibration summary JSON: ") + e.what());
    }
    CalibrationSummary summary;
    summary.qubit_count = j.value("qubit_count", 0);
    if (!j.contains("fields") || !j["fields"].is_object()) {
        throw SchemaError("calibration summary missing object \"fields\"");
    }
    for (const auto& [name, obj] : j["fields"].items()) {
        FieldSummary f;
        f.mean = obj.value("mean", 0.0);
        f.stdev = obj.value("stdev", 0.0);
        f.min = obj.value("min", 0.0);
        f.q25 = obj.value("q25", 0.0);
        if (!obj.contains("median")) {
            throw SchemaError("calibration summary field \"" + name + "\" missing median");
        }
        f.median = obj["median"].get<double>();
        f.q75 = obj.value("q75", 0.0);
        f.max = obj.value("max", 0.0);
        summary.fields[name] = f;
    }
    return summary;
}

std::string to_json(const CalibrationSummary& summary) {
    nlohmann::json j;
    j["qubit_count"] = summary.qubit_count;
    nlohmann::json fields = nlohmann::json::object();
    for (const auto& [name, f] : summary.fields) {
        fields[name] = {{"mean", f.mean}, {"stdev", f.stdev}, {"min", f.min},
                        {"q25", f.q25},   {"median", f.median}, {"q75", f.q75},
                        {"max", f.max}};
    }
    j["fields"] = fields;
    return j.dump(2);
}

}  // namespace groverlab::calib
