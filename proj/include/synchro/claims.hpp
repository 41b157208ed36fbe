#pragma once

/**
 * @file claims.hpp
 * @brief Verification suites: each claim compares a computed quantity
 * against an exact value or bound and records a verdict.
 *
 * Suites: cerny, reset-word, pairs, min-sets, triple, general, constructions
 * (triple + general), sweep-n4, random, bounds, all. Claims are emitted in
 * a fixed order.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "synchro/lattice.hpp"

namespace synchro {

enum class Verdict { Pass, Fail, Recorded };

std::string to_string(Verdict v);

struct ClaimResult {
    std::string id;      ///< e.g. "cerny.reset-length"
    std::string anchor;  ///< the statement the claim checks
    std::vector<std::pair<std::string, std::string>> params;
    std::string expected;
    std::string computed;
    Verdict verdict = Verdict::Recorded;
    double runtime_ms = 0.0;
    std::string note;
};

struct SuiteOptions {
    std::size_t n_max = 11;          ///< cerny suite: n = 2..n_max
    std::size_t random_count = 1000;
    std::size_t random_n = 10;
    std::uint64_t random_seed = 1;   ///< automaton i uses seed random_seed + i
    std::size_t threads = 1;
    Limits limits;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
std::vector<ClaimResult> run_suite(const std::string& suite, const SuiteOptions& options = {});

/// True iff no claim failed.
bool all_pass(const std::vector<ClaimResult>& claims);

nlohmann::ordered_json claims_json(const std::string& suite, const SuiteOptions& options,
                                   const std::vector<ClaimResult>& claims);
/// Columns: id,verdict,expected,computed,runtime_ms,params,anchor,note.
std::string claims_csv(const std::vector<ClaimResult>& claims);
/// Aligned human-readable table plus a pass/fail/recorded count line.
std::string claims_table(const std::vector<ClaimResult>& claims);

}  // namespace synchro
