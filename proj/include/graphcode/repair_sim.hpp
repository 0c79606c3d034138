#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "graphcode/bitvec.hpp"
#include "graphcode/errors.hpp"
#include "graphcode/storage_code.hpp"

namespace graphcode {

/// Parameters for one simulation run. Failures are injected sequentially and
/// each one is fully repaired before the next. corrupt_vertex (test mode)
/// flips one stored bit before any failure, so the state is no longer a
/// codeword and repairs are expected to miss.
struct SimConfig {
    std::uint64_t failure_count = 0;
    std::uint64_t seed = 0;
    std::optional<BitVector> message; // random if absent
    int corrupt_vertex = 0;           // 0 = none
};

struct SimEvent {
    int failed_vertex;
    std::vector<int> queried_vertices;
    bool repaired_bit;
    bool correct;
};

struct SimReport {
    int n = 0;
    std::uint64_t failure_count = 0;
    std::uint64_t seed = 0;
    std::string rng_algorithm; // "mt19937_64"
    std::vector<SimEvent> events;
    std::uint64_t total_queries = 0;
    std::size_t max_queries_single_repair = 0;
    bool all_correct = true;
};

/// Runs the failure/repair loop. Deterministic for a fixed config: the seeded
/// generator first draws the message bits (when no message is given), then
/// one draw per failure for the vertex choice. Each repair queries exactly
/// the neighbours of the failed vertex and writes the repaired bit back.
inline SimReport run_sim(const StorageCode& code, const SimConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    const int n = code.n();

    BitVector message(code.dimension);
    if (cfg.message) {
        if (cfg.message->size() != code.dimension)
            throw parameter_error("run_sim: message length " +
                                  std::to_string(cfg.message->size()) +
                                  " does not match dimension " + std::to_string(code.dimension));
        message = *cfg.message;
    } else {
        for (std::size_t j = 0; j < code.dimension; ++j)
            if (rng() & 1u) message.set(j, true);
    }
    BitVector stored = encode(code, message);

    if (cfg.corrupt_vertex != 0) {
        if (cfg.corrupt_vertex < 1 || cfg.corrupt_vertex > n)
            throw parameter_error("run_sim: corrupt vertex out of range");
        stored.flip(static_cast<std::size_t>(cfg.corrupt_vertex - 1));
    }

    SimReport report;
    report.n = n;
    report.failure_count = cfg.failure_count;
    report.seed = cfg.seed;
    report.rng_algorithm = "mt19937_64";
    report.events.reserve(static_cast<std::size_t>(cfg.failure_count));

    for (std::uint64_t k = 0; k < cfg.failure_count; ++k) {
        const int failed = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const bool lost = stored.get(static_cast<std::size_t>(failed - 1));

        SimEvent event;
        event.failed_vertex = failed;
        event.queried_vertices = code.graph.neighbors(failed);
        event.repaired_bit = repair_via(code, failed, [&stored](int u) {
            return stored.get(static_cast<std::size_t>(u - 1));
        });
        event.correct = (event.repaired_bit == lost);

        stored.set(static_cast<std::size_t>(failed - 1), event.repaired_bit);

        report.total_queries += event.queried_vertices.size();
        report.max_queries_single_repair =
            std::max(report.max_queries_single_repair, event.queried_vertices.size());
        report.all_correct = report.all_correct && event.correct;
        report.events.push_back(std::move(event));
    }
    return report;
}

/// One-line run summary: "failures=<k> queries=<q> max_local=<m> correct=<bool>".
inline std::string summary_line(const SimReport& report) {
    return "failures=" + std::to_string(report.failure_count) +
           " queries=" + std::to_string(report.total_queries) +
           " max_local=" + std::to_string(report.max_queries_single_repair) +
           " correct=" + (report.all_correct ? std::string("true") : std::string("false"));
}

} // namespace graphcode
