/*
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ccsched/io.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <ostream>
#include <set>

namespace ccsched {

using nlohmann::json;

namespace {

const json &require(const json &obj, const char *key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

long long as_integer(const json &value, const std::string &what) {
    if (!value.is_number_integer()) throw ParseError(what + " must be an integer");
    return value.get<long long>();
}

int as_int(const json &value, const std::string &what) {
    const long long v = as_integer(value, what);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        throw ParseError(what + " is out of range");
    }
    return static_cast<int>(v);
}

int key_as_id(const std::string &key, const std::string &what) {
    std::size_t used = 0;
    int id = 0;
    try {
        id = std::stoi(key, &used);
    } catch (const std::exception &) {
        throw ParseError(what + " key \"" + key + "\" is not an integer");
    }
    if (used != key.size() || id < 1) throw ParseError(what + " key \"" + key + "\" is not a positive integer");
    return id;
}

std::vector<int> int_array(const json &value, const std::string &what) {
    if (!value.is_array()) throw ParseError(what + " must be an array");
    std::vector<int> out;
    for (const auto &item : value) out.push_back(as_int(item, what + " entry"));
    return out;
}

json id_map(const std::map<int, int> &values) {
    json out = json::object();
    for (const auto &[k, v] : values) out[std::to_string(k)] = v;
    return out;
}

std::map<int, int> parse_id_map(const json &value, const std::string &what) {
    if (!value.is_object()) throw ParseError(what + " must be an object");
    std::map<int, int> out;
    for (const auto &[key, v] : value.items()) out[key_as_id(key, what)] = as_int(v, what + " value");
    return out;
}

DeliveryParams parse_delivery(const json &value) {
    static const std::set<std::string> known{"eta_hat", "Q", "beta", "strategy"};
    for (const auto &[key, v] : value.items()) {
        if (!known.count(key)) throw ParseError("unknown delivery field \"" + key + "\"");
    }
    DeliveryParams params;
    params.eta_hat = as_int(require(value, "eta_hat"), "delivery.eta_hat");
    params.Q = as_int(require(value, "Q"), "delivery.Q");
    params.beta = as_int(require(value, "beta"), "delivery.beta");
    const auto &strategy = require(value, "strategy");
    if (!strategy.is_string()) throw ParseError("delivery.strategy must be \"A\" or \"B\"");
    try {
        params.strategy = parse_strategy(strategy.get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
    return params;
}

}  // namespace

Scenario parse_scenario(const json &doc) {
    if (!doc.is_object()) throw ParseError("scenario must be a JSON object");
    static const std::set<std::string> known{"P",   "tbar",     "alpha",   "L",    "N",      "eta",
                                             "association", "delivery", "demands", "seed", "samples"};
    for (const auto &[key, v] : doc.items()) {
        if (!known.count(key)) throw ParseError("unknown scenario field \"" + key + "\"");
    }

    Scenario s;
    auto &cfg = s.config;
    cfg.P = as_int(require(doc, "P"), "P");
    cfg.tbar = as_int(require(doc, "tbar"), "tbar");
    cfg.alpha = as_int(require(doc, "alpha"), "alpha");
    cfg.L = as_int(require(doc, "L"), "L");
    cfg.N = as_int(require(doc, "N"), "N");

    const bool has_eta = doc.contains("eta");
    const bool has_assoc = doc.contains("association");
    if (has_eta == has_assoc) throw ParseError("exactly one of \"eta\" and \"association\" must be given");
    if (has_eta) {
        const auto eta = int_array(doc.at("eta"), "eta");
        if (std::any_of(eta.begin(), eta.end(), [](int e) { return e < 0; })) {
            throw ParseError("eta entries must be nonnegative");
        }
        if (static_cast<int>(eta.size()) != cfg.P) throw ParseError("eta must have P entries");
        cfg.association = NetworkConfig::association_from_eta(eta);
    } else {
        s.explicit_association = true;
        for (const auto &[user, profile] : parse_id_map(doc.at("association"), "association")) {
            cfg.association[user] = profile;
        }
    }

    if (doc.contains("delivery")) {
        const auto &d = doc.at("delivery");
        if (d.is_string()) {
            if (d.get<std::string>() != "sweep") throw ParseError("delivery must be an object or \"sweep\"");
        } else if (d.is_object()) {
            s.delivery = parse_delivery(d);
        } else {
            throw ParseError("delivery must be an object or \"sweep\"");
        }
    }
    if (doc.contains("demands")) {
        Demands demands;
        for (const auto &[user, file] : parse_id_map(doc.at("demands"), "demands")) demands[user] = file;
        s.demands = std::move(demands);
    }
    if (doc.contains("seed")) {
        const long long seed = as_integer(doc.at("seed"), "seed");
        if (seed < 0) throw ParseError("seed must be nonnegative");
        s.seed = static_cast<std::uint64_t>(seed);
    }
    if (doc.contains("samples")) {
        s.samples = as_int(doc.at("samples"), "samples");
        if (*s.samples < 1) throw ParseError("samples must be positive");
    }
    return s;
}

Scenario parse_scenario_text(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_scenario(doc);
}

json to_json(const Scenario &s) {
    const auto &cfg = s.config;
    json out = json::object();
    out["P"] = cfg.P;
    out["tbar"] = cfg.tbar;
    out["alpha"] = cfg.alpha;
    out["L"] = cfg.L;
    out["N"] = cfg.N;
    if (s.explicit_association) {
        out["association"] = id_map({cfg.association.begin(), cfg.association.end()});
    } else {
        out["eta"] = cfg.eta();
    }
    if (s.delivery) {
        out["delivery"] = {{"eta_hat", s.delivery->eta_hat},
                           {"Q", s.delivery->Q},
                           {"beta", s.delivery->beta},
                           {"strategy", to_string(s.delivery->strategy)}};
    } else {
        out["delivery"] = "sweep";
    }
    if (s.demands) out["demands"] = id_map({s.demands->begin(), s.demands->end()});
    if (s.seed) out["seed"] = *s.seed;
    if (s.samples) out["samples"] = *s.samples;
    return out;
}

namespace {

json transmission_to_json(const Transmission &t, const char *step) {
    json codewords = json::array();
    for (const auto &cw : t.codewords) {
        codewords.push_back({{"recipient", cw.recipient},
                             {"file", cw.subpacket.mini.file},
                             {"profiles", cw.subpacket.mini.profiles},
                             {"q", cw.subpacket.q},
                             {"nullset", cw.nullset}});
    }
    return {{"step", step}, {"id", t.id}, {"codewords", std::move(codewords)}};
}

}  // namespace

json schedule_to_json(const Schedule &schedule) {
    json out = json::array();
    for (const auto &t : schedule.cc) out.push_back(transmission_to_json(t, "cc"));
    for (const auto &t : schedule.uc) out.push_back(transmission_to_json(t, "uc"));
    return out;
}

Schedule schedule_from_json(const json &doc, const NetworkConfig &cfg, const DeliveryParams &params) {
    if (!doc.is_array()) throw ParseError("schedule must be a JSON array");
    Schedule out;
    out.strategy = params.strategy;
    out.params = params;
    out.subpackets_per_minifile = subpackets_per_minifile(cfg, params);
    for (const auto &item : doc) {
        if (!item.is_object()) throw ParseError("transmission must be an object");
        const auto &step = require(item, "step");
        if (!step.is_string()) throw ParseError("step must be \"cc\" or \"uc\"");
        const auto step_name = step.get<std::string>();
        if (step_name != "cc" && step_name != "uc") throw ParseError("step must be \"cc\" or \"uc\"");
        Transmission t;
        t.id = int_array(require(item, "id"), "id");
        const auto &codewords = require(item, "codewords");
        if (!codewords.is_array()) throw ParseError("codewords must be an array");
        for (const auto &cw : codewords) {
            if (!cw.is_object()) throw ParseError("codeword must be an object");
            Codeword c;
            c.recipient = as_int(require(cw, "recipient"), "recipient");
            c.subpacket.mini.file = as_int(require(cw, "file"), "file");
            c.subpacket.mini.profiles = int_array(require(cw, "profiles"), "profiles");
            std::sort(c.subpacket.mini.profiles.begin(), c.subpacket.mini.profiles.end());
            c.subpacket.q = as_int(require(cw, "q"), "q");
            c.nullset = int_array(require(cw, "nullset"), "nullset");
            t.codewords.push_back(std::move(c));
        }
        (step_name == "cc" ? out.cc : out.uc).push_back(std::move(t));
    }
    return out;
}

json dof_report_to_json(const DofReport &r, bool verified) {
    json out = {{"eta_hat", r.params.eta_hat},
                {"Q", r.params.Q},
                {"beta", r.params.beta},
                {"strategy", to_string(r.params.strategy)},
                {"J_M", r.J_M},
                {"J_U", r.J_U},
                {"T_M", r.T_M},
                {"T_U", r.T_U},
                {"dof", r.empirical.to_string()},
                {"dof_num", r.empirical.numerator()},
                {"dof_den", r.empirical.denominator()},
                {"dof_decimal", r.empirical.to_double()},
                {"verified", verified}};
    if (r.closed_form) out["closed_form"] = r.closed_form->to_string();
    return out;
}

void write_sweep_csv(std::ostream &out, const SweepResult &result) {
    out << "eta_hat,Q,strategy,beta,K_M,K_U,T_M,T_U,dof_num,dof_den,dof_decimal,feasible\n";
    for (const auto &row : result.rows) {
        out << row.params.eta_hat << ',' << row.params.Q << ',' << to_string(row.params.strategy) << ','
            << row.params.beta << ',' << row.K_M << ',' << row.K_U << ',';
        if (row.feasible && row.dof) {
            out << row.T_M << ',' << row.T_U << ',' << row.dof->numerator() << ',' << row.dof->denominator() << ','
                << row.dof->to_decimal(6) << ",true\n";
        } else {
            out << ",,,,,false\n";
        }
    }
}

namespace {

std::string fixed(double value, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, value);
    return buf;
}

}  // namespace

void write_sigma_csv(std::ostream &out, const SigmaExperimentResult &result) {
    out << "sigma_bin,n_samples,dof_m_decimal,unicast_baseline,uniform_optimum\n";
    for (const auto &bin : result.bins) {
        out << fixed(bin.center(), 1) << ',' << bin.n_samples << ',' << fixed(bin.dof_m, 6) << ',' << result.unicast_baseline << ','
            << (result.uniform_optimum ? result.uniform_optimum->to_decimal(6) : std::string()) << '\n';
    }
}

json sigma_metadata(const SigmaExperimentOptions &options, const SigmaExperimentResult &result) {
    json out = {{"protocol", result.protocol},
                {"K", options.K},
                {"P", options.P},
                {"tbar", options.tbar},
                {"alpha", options.alpha},
                {"exhaustive", options.exhaustive},
                {"seed", options.seed},
                {"distinct_profile_vectors", result.distinct_profiles},
                {"bins", result.bins.size()},
                {"bin_width", 0.5},
                {"unicast_baseline", result.unicast_baseline}};
    if (!options.exhaustive) out["samples"] = options.samples;
    if (result.uniform_optimum) out["uniform_optimum"] = result.uniform_optimum->to_string();
    return out;
}

}  // namespace ccsched
