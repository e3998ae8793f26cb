#pragma once

// File formats.
//
// Scenario:  {"nodes":[{"id","x","y","r"}...], "start":[x,y], "end":[x,y],
//             "v_max", "T", "H", "estimation":{"sigma2","W","S"}}
// Plan/trajectory: {"order":[ids], "waypoints":[[x,y]...],
//             "vertices":[[t,x,y]...], "total_length"}
//
// Lengths are meters, times seconds. Doubles round-trip exactly.

#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "coverplan/model.hpp"

namespace coverplan {

inline nlohmann::json scenario_to_json(const Scenario& sc) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const SensorNode& n : sc.nodes) {
        j["nodes"].push_back({{"id", n.id}, {"x", n.position.x}, {"y", n.position.y}, {"r", n.radius}});
    }
    j["start"] = {sc.start.x, sc.start.y};
    j["end"] = {sc.end.x, sc.end.y};
    j["v_max"] = sc.v_max;
    j["T"] = sc.horizon;
    j["H"] = sc.altitude;
    j["estimation"] = {{"sigma2", sc.estimation.sigma2}, {"W", sc.estimation.W}, {"S", sc.estimation.S}};
    return j;
}

inline Scenario scenario_from_json(const nlohmann::json& j) {
    Scenario sc;
    for (const auto& jn : j.at("nodes")) {
        sc.nodes.push_back({jn.at("id").get<int>(),
                            {jn.at("x").get<double>(), jn.at("y").get<double>()},
                            jn.at("r").get<double>()});
    }
    std::sort(sc.nodes.begin(), sc.nodes.end(),
              [](const SensorNode& a, const SensorNode& b) { return a.id < b.id; });
    sc.start = {j.at("start").at(0).get<double>(), j.at("start").at(1).get<double>()};
    sc.end = {j.at("end").at(0).get<double>(), j.at("end").at(1).get<double>()};
    sc.v_max = j.at("v_max").get<double>();
    sc.horizon = j.at("T").get<double>();
    sc.altitude = j.at("H").get<double>();
    const auto& je = j.at("estimation");
    sc.estimation = {je.at("sigma2").get<double>(), je.at("W").get<double>(), je.at("S").get<int>()};
    validate_scenario(sc);
    return sc;
}

inline nlohmann::json plan_to_json(const Plan& plan, const Trajectory& tr) {
    nlohmann::json j;
    j["order"] = plan.order;
    j["waypoints"] = nlohmann::json::array();
    for (const Point2D& q : plan.waypoints) j["waypoints"].push_back({q.x, q.y});
    j["vertices"] = nlohmann::json::array();
    for (const TrajectoryVertex& v : tr.vertices) j["vertices"].push_back({v.t, v.position.x, v.position.y});
    j["total_length"] = tr.path_length();
    return j;
}

inline std::pair<Plan, Trajectory> plan_from_json(const nlohmann::json& j) {
    Plan plan;
    plan.order = j.at("order").get<std::vector<int>>();
    for (const auto& q : j.at("waypoints")) {
        plan.waypoints.push_back({q.at(0).get<double>(), q.at(1).get<double>()});
    }
    plan.total_length = j.at("total_length").get<double>();
    Trajectory tr;
    for (const auto& v : j.at("vertices")) {
        tr.vertices.push_back({v.at(0).get<double>(), {v.at(1).get<double>(), v.at(2).get<double>()}});
    }
    return {plan, tr};
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed to write " + path);
}

inline Scenario load_scenario(const std::string& path) {
    return scenario_from_json(nlohmann::json::parse(read_text_file(path)));
}

inline void save_scenario(const std::string& path, const Scenario& sc) {
    write_text_file(path, scenario_to_json(sc).dump(2) + "\n");
}

}  // namespace coverplan
