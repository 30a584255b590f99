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

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace groverlab::calib {

// One row of an IBM-style per-qubit calibration export.
struct CalibrationRecord {
    int qubit = 0;
    double t1_us = 0.0;
    double t2_us = 0.0;
    double f_ghz = 0.0;
    double anharmonicity_ghz = 0.0;
    double readout_error = 0.0;
    double p_m0p1 = 0.0;  // P(measure 0 | prepared 1)
    double p_m1p0 = 0.0;  // P(measure 1 | prepared 0)
    double t_readout_ns = 0.0;
    double id_error = 0.0;
    double sx_error = 0.0;
    double x_error = 0.0;
    std::optional<double> ecr_error;  // two-qubit gate error, column optional
};

// CSV columns, in canonical order. ECR_error may be absent.
extern const char* const kCalibrationColumns[13];

// UTF-8, comma separated, header row. Throws SchemaError when a required
// column is missing and ParseError (with row/column location) for malformed
// or out-of-range cells.
std::vector<CalibrationRecord> load_calibration(const std::string& path);
std::vector<CalibrationRecord> parse_calibration_csv(std::istream& in);

std::string to_csv(const std::vector<CalibrationRecord>& records);

struct FieldSummary {
    double mean = 0.0;
    double stdev = 0.0;
    double min = 0.0;
    double q25 = 0.0;
    double median = 0.0;
    double q75 = 0.0;
    double max = 0.0;
};

// Field key -> summary. Keys match the CSV column names (minus "qubit").
struct CalibrationSummary {
    std::size_t qubit_count = 0;
    std::map<std::string, FieldSummary> fields;

    // Throws SchemaError naming the field when absent.
    const FieldSummary& field(const std::string& name) const;
};

// Quantiles use inclusive linear interpolation between order statistics.
CalibrationSummary summarize_calibration(const std::vector<CalibrationRecord>& records);

// q in [0, 1] over an ascending-sorted sample.
double quantile_inclusive(const std::vector<double>& sorted, double q);

CalibrationSummary summary_from_json(const std::string& text);
std::string to_json(const CalibrationSummary& summary);

}  // namespace groverlab::calib
