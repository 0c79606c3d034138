#pragma once

#include <json.hpp>

#include "graphcode/bounds.hpp"
#include "graphcode/repair_sim.hpp"
#include "graphcode/storage_code.hpp"

namespace graphcode {

// All exports use ordered_json so serialized field order is stable and
// byte-identical across runs, which golden files and the determinism checks
// rely on.

/// {n, r, rank, dimension, rate_num, rate_den}; r is the graph's max degree.
inline nlohmann::ordered_json code_summary_json(const StorageCode& code) {
    nlohmann::ordered_json j;
    j["n"] = code.n();
    j["r"] = code.graph.max_degree();
    j["rank"] = code.rank;
    j["dimension"] = code.dimension;
    j["rate_num"] = code.rate.num();
    j["rate_den"] = code.rate.den();
    return j;
}

/// {n, picks: [[i, j], ...], size}.
inline nlohmann::ordered_json certificate_json(const RankCertificate& cert, int n) {
    nlohmann::ordered_json j;
    j["n"] = n;
    nlohmann::ordered_json picks = nlohmann::ordered_json::array();
    for (const auto& [row, col] : cert.picks)
        picks.push_back(nlohmann::ordered_json::array({row, col}));
    j["picks"] = picks;
    j["size"] = cert.size();
    return j;
}

inline nlohmann::ordered_json sim_report_json(const SimReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["failure_count"] = report.failure_count;
    j["seed"] = report.seed;
    j["rng"] = report.rng_algorithm;
    nlohmann::ordered_json events = nlohmann::ordered_json::array();
    for (const SimEvent& e : report.events) {
        nlohmann::ordered_json je;
        je["failed_vertex"] = e.failed_vertex;
        je["queried_vertices"] = e.queried_vertices;
        je["repaired_bit"] = e.repaired_bit ? 1 : 0;
        je["correct"] = e.correct;
        events.push_back(je);
    }
    j["events"] = events;
    j["total_queries"] = report.total_queries;
    j["max_queries_single_repair"] = report.max_queries_single_repair;
    j["all_correct"] = report.all_correct;
    return j;
}

} // namespace graphcode
