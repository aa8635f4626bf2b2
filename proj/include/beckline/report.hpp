#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "analysis.hpp"
#include "config.hpp"
#include "point_file.hpp"
#include "search.hpp"

namespace beckline {

using Json = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

inline Json to_json(const RichnessSpectrum& s) {
    Json j = Json::object();
    for (const auto& [k, count] : s.counts) j[std::to_string(k)] = count;
    return j;
}

inline Json to_json(const DyadicClassRow& row) {
    return Json{{"j", row.j},
                {"line_count", row.line_count},
                {"pair_count", row.pair_count},
                {"st_line_bound", to_string(row.st_line_bound)},
                {"st_pair_bound", to_string(row.st_pair_bound)}};
}

inline Json to_json(const PairClassCounts& pc) {
    return Json{{"low", pc.low}, {"mid", pc.mid}, {"high", pc.high}, {"k1", to_string(pc.k1)}};
}

inline Json to_json(const CaseVerdict& v) {
    auto line = [](const std::optional<CanonicalLine>& l) -> Json {
        if (!l) return nullptr;
        return Json::array({l->a.str(), l->b.str(), l->c.str()});
    };
    return Json{{"case", case_name(v.verdict)},
                {"witness", line(v.witness)},
                {"second_witness", line(v.second_witness)},
                {"witness_pool", pool_name(v.pool)},
                {"k1", to_string(v.k1)},
                {"k2", to_string(v.k2)}};
}

/// Analysis report. Key order is fixed and rationals are "p/q" strings, so equal
/// inputs give byte-identical output.
inline Json report_json(const ColoredConfig& config, const BeckReport& rep, const AnalysisParams& params,
                        std::optional<std::uint64_t> seed) {
    Json dyadic = Json::array();
    for (const auto& row : rep.dyadic) dyadic.push_back(to_json(row));
    Json j;
    j["version"] = kReportVersion;
    j["config_digest"] = config_digest(config);
    j["n"] = rep.n;
    j["r"] = rep.r;
    j["num_induced"] = rep.num_induced;
    j["num_bichromatic"] = rep.num_bichromatic;
    j["beck_ratio"] = rep.beck_ratio.str();
    j["spectrum"] = to_json(rep.spectrum);
    j["dyadic"] = std::move(dyadic);
    j["pair_classes"] = to_json(rep.pair_classes);
    j["verdict"] = to_json(rep.verdict);
    j["parameters"] = Json{{"k1", to_string(params.k1)},
                           {"k2", to_string(params.k2)},
                           {"seed", seed ? Json(std::to_string(*seed)) : Json(nullptr)}};
    return j;
}

inline Json search_json(const SearchSpec& spec, const SearchResult& res) {
    Json traj = Json::array();
    for (const auto& s : res.trajectory) traj.push_back(Json::array({s.iteration, s.ratio.str()}));
    Json moves = Json::array();
    if (spec.moves.color_swap) moves.push_back("color-swap");
    if (spec.moves.point_nudge) moves.push_back("point-nudge");
    Json schedule = Json::array();
    for (const auto& t : spec.temperature_schedule) schedule.push_back(to_string(t));

    Json j;
    j["version"] = kReportVersion;
    j["base_digest"] = config_digest(spec.base);
    j["config_digest"] = config_digest(res.best_config);
    j["n"] = res.best_config.red.size();
    j["initial_ratio"] = res.initial_ratio.str();
    j["best_ratio"] = res.best_ratio.str();
    j["restart_index"] = res.restart_index;
    j["trajectory"] = std::move(traj);
    j["parameters"] = Json{{"seed", std::to_string(spec.seed)},
                           {"iterations", spec.iterations},
                           {"restarts", spec.restarts},
                           {"moves", std::move(moves)},
                           {"nudge_radius", spec.nudge_radius},
                           {"temperature_schedule", std::move(schedule)}};
    return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace beckline
