#pragma once

/**
 * @file lattice.hpp
 * @brief Breadth-first searches over the subset lattice of an automaton.
 *
 * The transition graph has the nonempty state subsets as vertices and an
 * edge S -> a(S) for every letter a. The weight t(S) is the length of a
 * shortest path from S to a singleton, or kInfinity when no such path
 * exists. Weight tables are computed by multi-source backward BFS from the
 * singletons; single-set queries and reset words use forward BFS over the
 * images of the start set.
 *
 * All searches are single-threaded and deterministic: letters are tried in
 * index order, queues are FIFO, and sources are seeded in ascending code
 * order. Completed tables are immutable.
 */

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "synchro/automaton.hpp"

namespace synchro {

using Weight = std::uint32_t;
/// Weight of a set that can never be collapsed to one state.
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

std::string weight_to_string(Weight w);

/// Resource caps. Every search checks its cap before allocating.
struct Limits {
    std::size_t lattice_states = 22;           ///< full_weight_table: n <= this
    std::uint64_t bounded_nodes = 5'000'000;   ///< bounded_weight_table: C(n, <=k) <= this
    std::uint64_t search_nodes = 10'000'000;   ///< forward image searches
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact weights for every nonempty subset (full lattice) or every subset of
/// size <= k (size bounded), with one predecessor letter per set so that a
/// shortest collapsing word can be read back.
class WeightTable {
public:
    enum class Scope { FullLattice, SizeBounded };

    struct Step {
        Letter letter;
        StateSet next;
    };

    Scope scope() const { return scope_; }
    std::size_t states() const { return n_; }
    /// Largest set size covered (n for the full lattice).
    std::size_t max_size() const { return k_; }
    std::size_t entries() const { return weights_.size(); }
    const Automaton& automaton() const { return aut_; }

    bool covers(StateSet s) const { return !s.empty() && s.span_end() <= n_ && s.size() <= k_; }
    /// Throws std::out_of_range for sets outside the table.
    Weight weight(StateSet s) const { return weights_[index_of(s)]; }
    /// First letter of a shortest collapsing word and the set it leads to;
    /// nullopt for singletons and infinite-weight sets.
    std::optional<Step> step(StateSet s) const;
    /// Shortest word collapsing `s`, or nullopt when s is not synchronizable.
    std::optional<Word> witness(StateSet s) const;

    /// All covered sets of the given size, ascending by code.
    std::vector<StateSet> layer(std::size_t size) const;

private:
    friend WeightTable full_weight_table(const Automaton&, const Limits&);
    friend WeightTable bounded_weight_table(const Automaton&, std::size_t, const Limits&);

    WeightTable(const Automaton& aut, Scope scope, std::size_t k);
    std::size_t index_of(StateSet s) const;

    Automaton aut_;
    MaskImager imager_;
    Scope scope_;
    std::size_t n_;
    std::size_t k_;
    std::vector<Weight> weights_;
    std::vector<std::uint16_t> letter_;
    // Size-bounded scope: binomials and per-size offsets of the
    // combinatorial-number-system ranking.
    std::vector<std::vector<std::uint64_t>> binom_;
    std::vector<std::uint64_t> layer_offset_;
};

/// Every nonempty subset. Requires n <= limits.lattice_states and an alphabet
/// of at most 65535 letters; throws BudgetExceeded otherwise.
WeightTable full_weight_table(const Automaton& aut, const Limits& limits = {});

/// Every subset of size <= k (k is clamped to n). Builds the explicit
/// digraph S -> a(S), reverses it and runs BFS from the singletons.
/// Throws BudgetExceeded when C(n, <=k) exceeds limits.bounded_nodes.
WeightTable bounded_weight_table(const Automaton& aut, std::size_t k, const Limits& limits = {});

/// Number of subsets of size 1..k of an n-set, saturating at UINT64_MAX.
std::uint64_t subsets_up_to(std::size_t n, std::size_t k);

/// Single-set queries by forward BFS over the images of S.
Weight weight(const Automaton& aut, StateSet s, const Limits& limits = {});
std::optional<Word> witness_word(const Automaton& aut, StateSet s, const Limits& limits = {});

struct RendezvousValue {
    Weight value = kInfinity;
    std::optional<StateSet> witness;  ///< first extremal set in ascending code order
    std::size_t ties = 0;             ///< number of k-sets attaining `value`
};

/// m(k): minimum weight over all k-sets; value kInfinity (and no witness)
/// when no k-set is synchronizable.
RendezvousValue m_value(const WeightTable& table, std::size_t k);
/// M(k): maximum weight over synchronizable k-sets; nullopt when there are none.
std::optional<RendezvousValue> M_value(const WeightTable& table, std::size_t k);

/// Minimum-length reset word, lexicographically least by letter index among
/// those; nullopt when the automaton is not synchronizing.
std::optional<Word> shortest_reset_word(const Automaton& aut, const Limits& limits = {});

/// Shortest merging words for every pair of states, by backward BFS on the
/// pair graph. Works for any n.
class PairTable {
public:
    explicit PairTable(const Automaton& aut);

    std::size_t states() const { return n_; }
    Weight distance(State u, State v) const;
    /// Shortest word w with w(u) = w(v); nullopt when the pair never merges.
    std::optional<Word> merging_word(State u, State v) const;
    bool all_pairs_mergeable() const;
    /// Largest finite pair distance (0 when n = 1).
    Weight max_finite_distance() const;

private:
    static std::size_t index(State u, State v) {
        if (u > v) std::swap(u, v);
        return static_cast<std::size_t>(v) * (v - 1) / 2 + u;
    }

    Automaton aut_;
    std::size_t n_;
    std::vector<Weight> dist_;
    std::vector<Letter> next_;
};

/// True iff every pair of states can be merged.
bool is_synchronizing(const Automaton& aut);

/// Repeatedly applies a shortest merging word for the closest pair of the
/// current image until one state remains. Length <= (n-1) C(n,2).
/// Throws std::invalid_argument for a non-synchronizing automaton.
Word greedy_reset_word(const Automaton& aut);

struct RankProfile {
    /// Entry l is the minimum rank over all words of length <= l.
    std::vector<std::size_t> min_rank;
};

/// l = 0..max_length. Throws BudgetExceeded past limits.search_nodes.
RankProfile min_rank_profile(const Automaton& aut, std::size_t max_length, const Limits& limits = {});

struct ClosedSet {
    std::vector<State> states;  ///< ascending
    bool strongly_connected = true;
};

struct ClosedSetReport {
    /// Sink strongly connected components of the state graph, ordered by
    /// smallest member. Exactly one for a synchronizing automaton.
    std::vector<ClosedSet> minimal_closed;
};

ClosedSetReport minimal_closed_sets(const Automaton& aut);

/// Length of a shortest word w with |w(S)| < |S|, or kInfinity.
/// Throws std::invalid_argument when |S| < 2.
Weight min_merge_length(const Automaton& aut, StateSet s, const Limits& limits = {});

}  // namespace synchro
