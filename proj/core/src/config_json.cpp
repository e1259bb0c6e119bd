#include "optsat/config_json.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace optsat {

namespace {

using nlohmann::json;

std::string join(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

const json& require(const json& obj, const std::string& prefix, const std::string& key) {
    if (!obj.is_object()) throw ConfigError(prefix.empty() ? "<root>" : prefix, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ConfigError(join(prefix, key), "missing required key");
    return *it;
}

double require_number(const json& obj, const std::string& prefix, const std::string& key) {
    const json& v = require(obj, prefix, key);
    if (!v.is_number()) throw ConfigError(join(prefix, key), "expected a number");
    return v.get<double>();
}

int require_int(const json& obj, const std::string& prefix, const std::string& key) {
    const json& v = require(obj, prefix, key);
    if (!v.is_number_integer()) throw ConfigError(join(prefix, key), "expected an integer");
    return v.get<int>();
}

std::string require_string(const json& obj, const std::string& prefix, const std::string& key) {
    const json& v = require(obj, prefix, key);
    if (!v.is_string()) throw ConfigError(join(prefix, key), "expected a string");
    return v.get<std::string>();
}

double optional_number(const json& obj, const std::string& prefix, const std::string& key,
                       double fallback) {
    if (!obj.is_object() || !obj.contains(key)) return fallback;
    return require_number(obj, prefix, key);
}

int optional_int(const json& obj, const std::string& prefix, const std::string& key,
                 int fallback) {
    if (!obj.is_object() || !obj.contains(key)) return fallback;
    return require_int(obj, prefix, key);
}

}  // namespace

ScenarioConfig scenario_from_json(const json& j) {
    ScenarioConfig s;

    const json& con = require(j, "", "constellation");
    s.constellation.num_rings = require_int(con, "constellation", "num_rings");
    s.constellation.sats_per_ring = require_int(con, "constellation", "sats_per_ring");
    s.constellation.altitude_m = require_number(con, "constellation", "altitude_m");
    s.constellation.ring_phase_offset_rad =
        deg_to_rad(optional_number(con, "constellation", "ring_phase_offset_deg", 0.0));
    s.constellation.node_span_rad =
        deg_to_rad(optional_number(con, "constellation", "node_span_deg", 180.0));

    const json& stations = require(j, "", "stations");
    if (!stations.is_array() || stations.empty())
        throw ConfigError("stations", "expected a non-empty array");
    for (size_t k = 0; k < stations.size(); ++k) {
        const std::string prefix = "stations[" + std::to_string(k) + "]";
        const json& st = stations[k];
        GroundStation g;
        g.id = require_string(st, prefix, "id");
        g.latitude_deg = require_number(st, prefix, "lat_deg");
        g.longitude_deg = require_number(st, prefix, "lon_deg");
        s.stations.push_back(std::move(g));
    }

    auto station_index = [&](const std::string& id, const std::string& path) {
        for (size_t g = 0; g < s.stations.size(); ++g)
            if (s.stations[g].id == id) return static_cast<int>(g);
        throw ConfigError(path, "unknown station id '" + id + "'");
    };

    const json& pairs = require(j, "", "pairs");
    if (!pairs.is_array() || pairs.empty())
        throw ConfigError("pairs", "expected a non-empty array");
    for (size_t k = 0; k < pairs.size(); ++k) {
        const std::string prefix = "pairs[" + std::to_string(k) + "]";
        const json& p = pairs[k];
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
            throw ConfigError(prefix, "expected a two-element array of station ids");
        StationPair pair;
        pair.id = static_cast<int>(k);
        pair.first = station_index(p[0].get<std::string>(), prefix);
        pair.second = station_index(p[1].get<std::string>(), prefix);
        s.pairs.push_back(pair);
    }

    const json& time = require(j, "", "time");
    s.time.slot_s = require_number(time, "time", "slot_s");
    s.time.num_slots = require_int(time, "time", "num_slots");
    s.time.epoch_offset = optional_number(time, "time", "epoch_offset", 0.0);

    const json& optics = require(j, "", "optics");
    s.optics.transmitter_diameter_m = require_number(optics, "optics", "d_t_m");
    s.optics.receiver_diameter_m = require_number(optics, "optics", "d_r_m");
    s.optics.wavelength_m = require_number(optics, "optics", "wavelength_m");
    s.optics.extinction_per_m = require_number(optics, "optics", "alpha_per_km") * 1e-3;
    s.atmosphere_thickness_m = optional_number(optics, "optics", "atmosphere_km",
                                               kDefaultAtmosphereThicknessM * 1e-3) * 1e3;

    const json& source = require(j, "", "source");
    s.source.mean_photon_number = require_number(source, "source", "n_s");
    s.source.repetition_rate_hz = require_number(source, "source", "rep_rate_hz");
    s.source.dark_click_probability = require_number(source, "source", "dark_click_prob");
    s.source.bell_sign = optional_int(source, "source", "bell_sign", +1);

    const json& limits = require(j, "", "limits");
    s.fidelity_threshold = require_number(limits, "limits", "f_th");
    s.elevation_limit_rad = deg_to_rad(require_number(limits, "limits", "theta_e_deg"));
    s.caps.receiver = require_int(limits, "limits", "r_g");
    s.caps.transmitter = require_int(limits, "limits", "t_i");
    s.caps.pair = require_int(limits, "limits", "l_j");

    s.policy = policy_from_name(require_string(j, "", "policy"));

    const std::string mode = require_string(j, "", "weight_mode");
    if (mode == "rate") {
        s.weight_mode = WeightMode::kRate;
    } else if (mode == "request_rate") {
        s.weight_mode = WeightMode::kRequestRate;
        const json& rates = require(j, "", "request_rates");
        if (!rates.is_array() || rates.size() != s.pairs.size())
            throw ConfigError("request_rates", "expected one rate per pair");
        for (const auto& r : rates) s.request_rates.push_back(r.get<double>());
    } else {
        throw ConfigError("weight_mode", "expected 'rate' or 'request_rate'");
    }

    if (j.contains("greedy_pair_order")) {
        const json& order = j.at("greedy_pair_order");
        if (!order.is_array() || order.size() != s.pairs.size())
            throw ConfigError("greedy_pair_order", "expected a permutation of the pair indices");
        for (const auto& v : order) s.greedy_pair_order.push_back(v.get<int>());
    }

    if (j.contains("count_mode")) {
        const std::string cm = require_string(j, "", "count_mode");
        if (cm == "expected") s.count_mode = CountMode::kExpected;
        else if (cm == "sampled") s.count_mode = CountMode::kSampled;
        else throw ConfigError("count_mode", "expected 'expected' or 'sampled'");
    }
    s.seed = static_cast<uint64_t>(optional_number(j, "", "seed", 0.0));
    s.num_threads = optional_int(j, "", "threads", 0);

    try {
        s.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("<scenario>", e.what());
    }
    return s;
}

ScenarioConfig load_scenario(const std::string& config_path) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("<file>", "cannot open '" + config_path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("<file>", std::string("JSON parse failure: ") + e.what());
    }
    return scenario_from_json(j);
}

std::string config_hash(const json& j) {
    // nlohmann::json orders object keys, so dump() is canonical.
    const std::string canonical = j.dump();
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

AssignmentProblem instance_from_json(const json& j) {
    AssignmentProblem p;

    const json& weights = require(j, "", "weights");
    if (!weights.is_array()) throw ConfigError("weights", "expected an array of rows");
    p.num_sats = static_cast<int>(weights.size());
    int m = -1;
    for (size_t i = 0; i < weights.size(); ++i) {
        const json& row = weights[i];
        if (!row.is_array())
            throw ConfigError("weights[" + std::to_string(i) + "]", "expected an array");
        if (m < 0) m = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != m)
            throw ConfigError("weights[" + std::to_string(i) + "]", "ragged weight matrix");
        for (const auto& w : row) p.weights.push_back(w.get<double>());
    }
    if (m <= 0) throw ConfigError("weights", "expected at least one column");

    if (j.contains("indicators")) {
        const json& ind = require(j, "", "indicators");
        if (!ind.is_array() || static_cast<int>(ind.size()) != p.num_sats)
            throw ConfigError("indicators", "expected the same shape as weights");
        for (size_t i = 0; i < ind.size(); ++i) {
            if (static_cast<int>(ind[i].size()) != m)
                throw ConfigError("indicators[" + std::to_string(i) + "]", "ragged matrix");
            for (const auto& c : ind[i]) p.indicators.push_back(c.get<int>() != 0 ? 1 : 0);
        }
    } else {
        p.indicators.assign(p.weights.size(), 1);
    }

    if (j.contains("pairs")) {
        const json& pairs = require(j, "", "pairs");
        if (!pairs.is_array() || static_cast<int>(pairs.size()) != m)
            throw ConfigError("pairs", "expected one [station, station] entry per column");
        int max_station = -1;
        for (size_t k = 0; k < pairs.size(); ++k) {
            const json& pr = pairs[k];
            if (!pr.is_array() || pr.size() != 2)
                throw ConfigError("pairs[" + std::to_string(k) + "]",
                                  "expected a two-element array of station indices");
            p.pairs.push_back({pr[0].get<int>(), pr[1].get<int>()});
            max_station = std::max({max_station, p.pairs.back()[0], p.pairs.back()[1]});
        }
        p.num_stations = optional_int(j, "", "num_stations", max_station + 1);
    } else {
        // Disjoint synthetic stations; receiver constraints are then vacuous.
        p.num_stations = 2 * m;
        for (int k = 0; k < m; ++k) p.pairs.push_back({2 * k, 2 * k + 1});
    }

    auto cap_vector = [&](const char* key, int count, int fallback) {
        std::vector<int> caps(count, fallback);
        if (!j.contains(key)) return caps;
        const json& v = j.at(key);
        if (v.is_number_integer()) {
            caps.assign(count, v.get<int>());
        } else if (v.is_array() && static_cast<int>(v.size()) == count) {
            for (int k = 0; k < count; ++k) caps[k] = v[k].get<int>();
        } else {
            throw ConfigError(key, "expected an integer or an array of matching length");
        }
        return caps;
    };
    p.transmitter_caps = cap_vector("t_i", p.num_sats, 1);
    p.pair_caps = cap_vector("l_j", m, 1);
    p.receiver_caps = cap_vector("r_g", p.num_stations, std::max(1, p.num_sats));

    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("<instance>", e.what());
    }
    return p;
}

AssignmentProblem load_instance(const std::string& instance_path) {
    std::ifstream in(instance_path);
    if (!in) throw ConfigError("<file>", "cannot open '" + instance_path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("<file>", std::string("JSON parse failure: ") + e.what());
    }
    return instance_from_json(j);
}

json instance_to_json(const AssignmentProblem& p) {
    json j;
    json weights = json::array();
    json indicators = json::array();
    for (int i = 0; i < p.num_sats; ++i) {
        json wrow = json::array();
        json irow = json::array();
        for (int jj = 0; jj < p.num_pairs(); ++jj) {
            wrow.push_back(p.weight(i, jj));
            irow.push_back(p.indicator(i, jj) ? 1 : 0);
        }
        weights.push_back(std::move(wrow));
        indicators.push_back(std::move(irow));
    }
    j["weights"] = std::move(weights);
    j["indicators"] = std::move(indicators);
    json pairs = json::array();
    for (const auto& pr : p.pairs) pairs.push_back({pr[0], pr[1]});
    j["pairs"] = std::move(pairs);
    j["num_stations"] = p.num_stations;
    j["r_g"] = p.receiver_caps;
    j["t_i"] = p.transmitter_caps;
    j["l_j"] = p.pair_caps;
    return j;
}

}  // namespace optsat
