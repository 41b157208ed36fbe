#pragma once

// Slow reference implementations. Nothing here touches the library's
// searches: images are computed state by state from the raw rows.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "synchro/automaton.hpp"

namespace oracle {

using synchro::Automaton;
using synchro::Letter;
using synchro::State;

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

inline std::uint64_t image(const Automaton& aut, Letter a, std::uint64_t set) {
    std::uint64_t out = 0;
    for (State s = 0; s < aut.states(); ++s) {
        if ((set >> s) & 1u) out |= std::uint64_t{1} << aut.row(a)[s];
    }
    return out;
}

inline std::uint64_t image(const Automaton& aut, const std::vector<Letter>& word, std::uint64_t set) {
    for (Letter a : word) set = image(aut, a, set);
    return set;
}

inline int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

/// t(S) for every code in [1, 2^n) by value iteration until nothing changes.
inline std::vector<std::uint32_t> weights(const Automaton& aut) {
    const std::size_t n = aut.states();
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::vector<std::uint32_t> t(limit, kInf);
    for (std::uint64_t s = 1; s < limit; ++s) {
        if (popcount(s) == 1) t[s] = 0;
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::uint64_t s = 1; s < limit; ++s) {
            for (Letter a = 0; a < aut.alphabet_size(); ++a) {
                const std::uint32_t next = t[image(aut, a, s)];
                if (next != kInf && next + 1 < t[s]) {
                    t[s] = next + 1;
                    changed = true;
                }
            }
        }
    }
    return t;
}

/// All words of the given length in lexicographic order of letter indices.
inline std::vector<std::vector<Letter>> words_of_length(std::size_t alphabet, std::size_t length) {
    std::vector<std::vector<Letter>> out;
    std::vector<Letter> w(length, 0);
    while (true) {
        out.push_back(w);
        std::size_t i = length;
        while (i > 0 && w[i - 1] + 1 == alphabet) w[--i] = 0;
        if (i == 0) break;
        ++w[i - 1];
    }
    return out;
}

/// First (shortest, then lexicographically least) word reaching a state set
/// of size <= target from `set`, trying lengths up to max_length.
inline std::optional<std::vector<Letter>> first_word(const Automaton& aut, std::uint64_t set, int target,
                                                     std::size_t max_length) {
    const std::size_t alphabet = aut.alphabet_size();
    for (std::size_t len = 0; len <= max_length; ++len) {
        std::vector<Letter> w(len, 0);
        while (true) {
            if (popcount(image(aut, w, set)) <= target) return w;
            std::size_t i = len;
            while (i > 0 && w[i - 1] + 1 == alphabet) w[--i] = 0;
            if (i == 0) break;
            ++w[i - 1];
        }
    }
    return std::nullopt;
}

/// Minimum rank over words of length <= l, for l = 0..max_length.
inline std::vector<std::size_t> rank_profile(const Automaton& aut, std::size_t max_length) {
    const std::uint64_t all = (std::uint64_t{1} << aut.states()) - 1;
    std::vector<std::size_t> out;
    std::size_t best = aut.states();
    for (std::size_t len = 0; len <= max_length; ++len) {
        for (const auto& w : words_of_length(aut.alphabet_size(), len)) {
            best = std::min<std::size_t>(best, static_cast<std::size_t>(popcount(image(aut, w, all))));
        }
        out.push_back(best);
    }
    return out;
}

/// Inclusion-minimal nonempty sets C with a(C) subset of C for every letter.
inline std::vector<std::uint64_t> minimal_closed(const Automaton& aut) {
    const std::uint64_t limit = std::uint64_t{1} << aut.states();
    std::vector<std::uint64_t> closed;
    for (std::uint64_t s = 1; s < limit; ++s) {
        bool ok = true;
        for (Letter a = 0; a < aut.alphabet_size() && ok; ++a) ok = (image(aut, a, s) & ~s) == 0;
        if (ok) closed.push_back(s);
    }
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t c : closed) {
        const bool has_smaller =
            std::any_of(closed.begin(), closed.end(), [c](std::uint64_t d) { return d != c && (d & ~c) == 0; });
        if (!has_smaller) minimal.push_back(c);
    }
    return minimal;
}

}  // namespace oracle
