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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

#include "groverlab/errors.hpp"
#include "groverlab/noise/noise.hpp"

namespace groverlab::noise {

bool NoiseModel::thermal_enabled() const {
    if (durations.one_qubit_ns == 0.0 && durations.two_qubit_ns == 0.0) return false;
    for (double t : t1_us) {
        if (t > 0.0) return true;
    }
    return false;
}

NoiseModel make_noise_model(NoiseModel model) {
    auto check_prob = [](double p, const char* what) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
        }
    };
    check_prob(model.depol_1q, "1q depolarizing probability");
    check_prob(model.depol_2q, "2q depolarizing probability");
    for (const ReadoutConfusion& rc : model.readout) {
        check_prob(rc.p_m1p0, "P(m1|p0)");
        check_prob(rc.p_m0p1, "P(m0|p1)");
    }
    if (model.durations.one_qubit_ns < 0.0 || model.durations.two_qubit_ns < 0.0 ||
        model.durations.readout_ns < 0.0) {
        throw std::invalid_argument("gate durations must be nonnegative");
    }
    if (model.t1_us.empty() || model.t2_us.empty() || model.readout.empty()) {
        throw std::invalid_argument("noise model needs at least one T1/T2/readout entry");
    }
    if (model.t1_us.size() != model.t2_us.size()) {
        throw std::invalid_argument("T1 and T2 lists must have equal length");
    }
    for (std::size_t q = 0; q < model.t1_us.size(); ++q) {
        if (model.t1_us[q] < 0.0 || model.t2_us[q] < 0.0) {
            throw std::invalid_argument("T1/T2 must be nonnegative");
        }
        const double cap = 2.0 * model.t1_us[q];
        if (model.t2_us[q] > cap) {
            model.warnings.push_back("T2[" + std::to_string(q) + "] = " +
                                     std::to_string(model.t2_us[q]) + " us clamped to 2*T1 = " +
                                     std::to_string(cap) + " us");
            model.t2_us[q] = cap;
        }
    }
    return model;
}

NoiseModel zero_noise_model() {
    NoiseModel m;
    m.t1_us = {0.0};
    m.t2_us = {0.0};
    m.durations = GateDurations{0.0, 0.0, 0.0};
    return m;
}

NoiseModel default_noise_model() {
    // ibm_sherbrook medians: SX error as the 1q depolarizing rate, ECR error
    // as the 2q rate, and the median readout flip probabilities.
    NoiseModel m;
    m.depol_1q = 2.093e-4;
    m.depol_2q = 7.565e-3;
    m.t1_us = {264.82};
    m.t2_us = {185.58};
    m.durations = GateDurations{60.0, 660.0, 1244.44};
    m.readout = {{0.0090, 0.0128}};
    return make_noise_model(std::move(m));
}

namespace {

std::vector<double> number_or_list(const nlohmann::json& j, const std::string& key) {
    const auto& v = j.at(key);
    if (v.is_number()) return {v.get<double>()};
    return v.get<std::vector<double>>();
}

}  // namespace

NoiseModel noise_model_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("noise model JSON: ") + e.what());
    }
    for (const char* key : {"depolarizing_1q", "depolarizing_2q", "t1_us", "t2_us", "readout"}) {
        if (!j.contains(key)) {
            throw SchemaError(std::string("noise model missing field \"") + key + "\"");
        }
    }

    NoiseModel m;
    m.depol_1q = j.at("depolarizing_1q").get<double>();
    m.depol_2q = j.at("depolarizing_2q").get<double>();
    m.t1_us = number_or_list(j, "t1_us");
    m.t2_us = number_or_list(j, "t2_us");
    if (j.contains("gate_duration_ns")) {
        const auto& d = j.at("gate_duration_ns");
        m.durations.one_qubit_ns = d.value("1q", m.durations.one_qubit_ns);
        m.durations.two_qubit_ns = d.value("2q", m.durations.two_qubit_ns);
        m.durations.readout_ns = d.value("readout", m.durations.readout_ns);
    }
    const auto& r = j.at("readout");
    auto parse_rc = [](const nlohmann::json& o) {
        if (!o.contains("p_m1p0") || !o.contains("p_m0p1")) {
            throw SchemaError("readout entry needs p_m1p0 and p_m0p1");
        }
        return ReadoutConfusion{o.at("p_m1p0").get<double>(), o.at("p_m0p1").get<double>()};
    };
    m.readout.clear();
    if (r.is_array()) {
        for (const auto& o : r) m.readout.push_back(parse_rc(o));
    } else {
        m.readout.push_back(parse_rc(r));
    }
    m.idle_decoherence = j.value("idle_decoherence", false);
    return make_noise_model(std::move(m));
}

std::string to_json(const NoiseModel& model) {
    nlohmann::json j;
    j["depolarizing_1q"] = model.depol_1q;
    j["depolarizing_2q"] = model.depol_2q;
    if (model.t1_us.size() == 1) {
        j["t1_us"] = model.t1_us[0];
        j["t2_us"] = model.t2_us[0];
    } else {
        j["t1_us"] = model.t1_us;
        j["t2_us"] = model.t2_us;
    }
    j["gate_duration_ns"] = {{"1q", model.durations.one_qubit_ns},
                             {"2q", model.durations.two_qubit_ns},
                             {"readout", model.durations.readout_ns}};
    auto rc_json = [](const ReadoutConfusion& rc) {
        return nlohmann::json{{"p_m1p0", rc.p_m1p0}, {"p_m0p1", rc.p_m0p1}};
    };
    if (model.readout.size() == 1) {
        j["readout"] = rc_json(model.readout[0]);
    } else {
        nlohmann::json list = nlohmann::json::array();
        for (const ReadoutConfusion& rc : model.readout) list.push_back(rc_json(rc));
        j["readout"] = list;
    }
    j["idle_decoherence"] = model.idle_decoherence;
    return j.dump(2);
}

NoiseModel from_calibration(const calib::CalibrationSummary& summary,
                            const GateDurations& durations) {
    NoiseModel m;
    m.t1_us = {summary.field("T1_us").median};
    m.t2_us = {summary.field("T2_us").median};
    m.depol_1q = summary.field("SX_error").median;
    m.depol_2q = summary.field("ECR_error").median;
    m.readout = {{summary.field("P_m1p0").median, summary.field("P_m0p1").median}};
    m.durations = durations;
    return make_noise_model(std::move(m));
}

NoiseModel from_calibration_with_readout_length(const calib::CalibrationSummary& summary) {
    GateDurations durations;
    durations.readout_ns = summary.field("t_readout_ns").median;
    return from_calibration(summary, durations);
}

NoiseModel scale_depolarizing(NoiseModel model, double factor) {
    if (factor < 0.0) throw std::invalid_argument("scale factor must be nonnegative");
    model.depol_1q = std::min(1.0, model.depol_1q * factor);
    model.depol_2q = std::min(1.0, model.depol_2q * factor);
    return model;
}

}  // namespace groverlab::noise
