#include "optsat/report_io.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace optsat {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

nlohmann::ordered_json report_to_json(const SimulationReport& report) {
    ordered_json j;
    j["policy"] = report.policy;
    j["slot_s"] = report.slot_s;
    j["num_slots"] = report.num_slots;
    j["grand_total"] = report.grand_total;
    j["pair_totals"] = report.pair_totals;
    ordered_json slots = ordered_json::array();
    for (const SlotRecord& record : report.slots) {
        ordered_json slot;
        slot["t"] = record.slot;
        slot["objective"] = record.objective;
        slot["count"] = record.count;
        ordered_json links = ordered_json::array();
        for (const AssignedLink& link : record.links) {
            ordered_json l;
            l["sat"] = link.sat;
            l["pair"] = link.pair;
            l["psi_hz"] = link.psi_hz;
            l["chi"] = link.chi;
            l["count"] = link.count;
            links.push_back(std::move(l));
        }
        slot["links"] = std::move(links);
        slots.push_back(std::move(slot));
    }
    j["slots"] = std::move(slots);
    return j;
}

SimulationReport report_from_json(const nlohmann::ordered_json& j) {
    SimulationReport report;
    report.policy = j.at("policy").get<std::string>();
    report.slot_s = j.at("slot_s").get<double>();
    report.num_slots = j.at("num_slots").get<int>();
    report.grand_total = j.at("grand_total").get<double>();
    report.pair_totals = j.at("pair_totals").get<std::vector<double>>();
    for (const auto& slot : j.at("slots")) {
        SlotRecord record;
        record.slot = slot.at("t").get<int>();
        record.objective = slot.at("objective").get<double>();
        record.count = slot.at("count").get<double>();
        for (const auto& l : slot.at("links")) {
            AssignedLink link;
            link.sat = l.at("sat").get<int>();
            link.pair = l.at("pair").get<int>();
            link.psi_hz = l.at("psi_hz").get<double>();
            link.chi = l.at("chi").get<double>();
            link.count = l.at("count").get<double>();
            record.links.push_back(link);
        }
        report.slots.push_back(std::move(record));
    }
    return report;
}

std::string slots_csv(const SimulationReport& report) {
    std::string out = "t,policy,sat_id,pair_id,psi_hz,chi,count\n";
    for (const SlotRecord& record : report.slots) {
        for (const AssignedLink& link : record.links) {
            out += std::to_string(record.slot);
            out += ',';
            out += report.policy;
            out += ',';
            out += std::to_string(link.sat);
            out += ',';
            out += std::to_string(link.pair);
            out += ',';
            out += format_double(link.psi_hz);
            out += ',';
            out += format_double(link.chi);
            out += ',';
            out += format_double(link.count);
            out += '\n';
        }
    }
    return out;
}

std::string pairs_csv(const SimulationReport& report, const ScenarioConfig& scenario) {
    std::string out = "pair_id,station_a,station_b,total\n";
    for (size_t j = 0; j < report.pair_totals.size(); ++j) {
        const StationPair& pair = scenario.pairs[j];
        out += std::to_string(pair.id);
        out += ',';
        out += scenario.stations[pair.first].id;
        out += ',';
        out += scenario.stations[pair.second].id;
        out += ',';
        out += format_double(report.pair_totals[j]);
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "altitude_m,policy,grand_total,gap_vs_exact\n";
    for (const SweepRow& row : rows) {
        out += format_double(row.altitude_m);
        out += ',';
        out += row.policy;
        out += ',';
        out += format_double(row.grand_total);
        out += ',';
        out += format_double(row.gap_vs_exact);
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json manifest_to_json(const RunManifest& manifest) {
    ordered_json j;
    j["config_hash"] = manifest.config_hash;
    j["tool_version"] = manifest.tool_version;
    j["started_at"] = manifest.started_at;
    j["finished_at"] = manifest.finished_at;
    j["outputs"] = manifest.outputs;
    return j;
}

std::string iso8601_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << contents;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace optsat
