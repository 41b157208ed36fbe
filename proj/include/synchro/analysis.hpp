#pragma once

/**
 * @file analysis.hpp
 * @brief Per-automaton reports and sweeps over automaton families.
 *
 * Sweeps evaluate automata independently (optionally on several threads)
 * and store each row at its own index, so parallel and serial runs emit
 * identical output. Aggregates are maxima, minima and counts, reduced in
 * row order.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "synchro/automaton.hpp"
#include "synchro/lattice.hpp"

namespace synchro {

inline constexpr const char* kToolVersion = "0.1.0";

struct AnalyzeOptions {
    std::vector<std::size_t> ks;           ///< empty: 2..min(n, 5), or {1} when n = 1
    std::optional<std::size_t> profile_length;  ///< default (n^3 - n)/6
    Limits limits;
};

struct RendezvousEntry {
    std::size_t k = 0;
    RendezvousValue m;
    std::optional<RendezvousValue> M;
    std::optional<Word> m_word;  ///< shortest word collapsing the m witness
};

struct AnalysisReport {
    explicit AnalysisReport(Automaton aut) : automaton(std::move(aut)) {}

    Automaton automaton;
    bool synchronizing = false;
    std::optional<Word> shortest_reset;  ///< set when synchronizing and within budget
    std::optional<Word> greedy_reset;
    std::string reset_note;              ///< why shortest_reset is missing, if it is
    std::string table_scope;             ///< "full", "bounded" or "none"
    std::string table_note;
    std::vector<RendezvousEntry> rendezvous;
    Weight max_pair_weight = 0;          ///< largest finite pair weight
    RankProfile profile;
    std::string profile_note;
    ClosedSetReport closed;
    Limits limits;
};

AnalysisReport analyze(const Automaton& aut, const AnalyzeOptions& options = {});

nlohmann::ordered_json to_json(const AnalysisReport& report);
/// One row per k: name,n,k,m,m_witness,M,M_witness.
std::string to_csv(const AnalysisReport& report);

/// Calls fn(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by fn stops the remaining work and is rethrown.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn);

struct SweepRow {
    std::string id;  ///< enumeration index or seed
    std::size_t n = 0;
    std::size_t alphabet = 0;
    bool synchronizing = false;
    Weight reset_length = kInfinity;
    /// m(3), m(4), m(5); nullopt when k > n.
    std::optional<Weight> m[3];
    /// Largest finite pair weight; nullopt when no pair is synchronizable.
    std::optional<Weight> max_pair_weight;
    /// Subsets S of a synchronizing automaton whose shortest shrinking word
    /// is longer than C(n-|S|+2, 2). Zero unless `merge_check` ran.
    std::size_t frankl_pin_violations = 0;
};

struct SweepOptions {
    std::size_t threads = 1;
    bool merge_check = true;
    Limits limits;
};

/// Requires n <= limits.lattice_states.
SweepRow sweep_row(const Automaton& aut, std::string id, const SweepOptions& options = {});

/// All n^(n * alphabet) automata, in enumeration order.
std::vector<SweepRow> exhaustive_sweep(std::size_t n, std::size_t alphabet, const SweepOptions& options = {});
/// Row i is random_automaton(n, alphabet, seed + i).
std::vector<SweepRow> random_sweep(std::size_t n, std::size_t alphabet, std::size_t count, std::uint64_t seed,
                                   const SweepOptions& options = {});

struct SweepAggregate {
    std::string metric;
    std::string value;
    std::string witness;  ///< id of the first row attaining the value
};

std::vector<SweepAggregate> aggregate(const std::vector<SweepRow>& rows);

std::string rows_csv(const std::vector<SweepRow>& rows);
std::string aggregates_csv(const std::vector<SweepAggregate>& aggregates);

}  // namespace synchro
