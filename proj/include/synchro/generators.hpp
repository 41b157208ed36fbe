#pragma once

/**
 * @file generators.hpp
 * @brief Automaton families: Cerny, the gadget constructions, and random
 * automata.
 *
 * The gadget constructions label states A_0, A_1, ..., A_{k-3} first and X
 * last, each block in subscript order, so a^{(i)}_j and x_t map to fixed
 * 0-indexed states. Both letters are named f and g.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "synchro/automaton.hpp"

namespace synchro {

/// State assignment for a gadget construction.
struct GadgetLayout {
    std::size_t n = 0;
    std::vector<std::size_t> gadget_sizes;  ///< |A_0|, ..., |A_{k-3}|
    std::size_t x_size = 0;                 ///< |X|
    std::size_t spacing = 0;                ///< q; 0 for the single-gadget triple construction

    /// State holding a^{(i)}_j, 1 <= j <= |A_i|.
    State gadget_state(std::size_t i, std::size_t j) const;
    /// State holding x_t, 1 <= t <= |X|.
    State x_state(std::size_t t) const;
    StateSet gadget_set(std::size_t i) const;
    StateSet x_set() const;
    /// Index of the gadget containing `s`, or gadget count when s is in X.
    std::size_t block_of(State s) const;
};

/// f the n-cycle i -> i+1, g sending 1 to 2 and fixing the rest. n >= 2.
Automaton cerny(std::size_t n);

/// Smallest n accepted by construction_triple.
inline constexpr std::size_t kTripleMinStates = 12;

/// Single gadget A with |A| = floor(n/4) plus the cycle X. Requires n >= 12.
GadgetLayout triple_layout(std::size_t n);
Automaton construction_triple(std::size_t n);

/// k-2 gadget sizes from [ceil(n/4k), floor(n/3k)]: the first multiset in
/// lexicographic order with gcd 1 (vacuous for one gadget) and sum at most
/// n - (k-2) q, q = floor(2n/3k). Throws std::invalid_argument ("n too small
/// for k") when no multiset qualifies.
std::vector<std::size_t> coprime_partition(std::size_t n, std::size_t k);

GadgetLayout general_layout(std::size_t n, std::size_t k);
/// k-2 coprime gadgets A_0..A_{k-3} with f routing A_i into x_{iq+1}...
Automaton construction_general(std::size_t n, std::size_t k);

/// Every entry drawn uniformly from [0, n) by mt19937_64 seeded with `seed`,
/// using rejection sampling so the stream is identical on every platform.
/// Rows are filled letter by letter, state by state. Letters are unnamed.
Automaton random_automaton(std::size_t n, std::size_t alphabet, std::uint64_t seed);

/// Automaton number `index` among all n^(n * alphabet) automata: entry
/// (letter a, state s) is base-n digit a*n + s of the index, least
/// significant first. Letters are named a, b, c, ...
Automaton enumerated_automaton(std::size_t n, std::size_t alphabet, std::uint64_t index);

}  // namespace synchro
