#pragma once

/**
 * @file automaton.hpp
 * @brief Deterministic complete automata, state sets and words.
 *
 * States are 0-indexed internally and 1-indexed when displayed. A word is
 * applied left to right: the word "gf" applies g first, then f. Everything
 * here is immutable after construction and safe to share between threads.
 */

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace synchro {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// Hard cap for anything that encodes a state set as a 64-bit mask.
inline constexpr std::size_t kMaxMaskStates = 64;

/// A subset of [0, n) encoded with state i at bit i.
class StateSet {
public:
    constexpr StateSet() = default;
    constexpr explicit StateSet(std::uint64_t code) : code_(code) {}

    /// Throws std::out_of_range for a member >= 64.
    static StateSet of(std::initializer_list<State> members);
    static StateSet of(std::span<const State> members);
    /// {0, ..., n-1}; n <= 64.
    static StateSet full(std::size_t n);
    static StateSet singleton(State s);

    constexpr std::uint64_t code() const { return code_; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(code_)); }
    constexpr bool empty() const { return code_ == 0; }
    constexpr bool contains(State s) const { return s < 64 && ((code_ >> s) & 1U) != 0; }
    constexpr bool is_subset_of(StateSet other) const { return (code_ & ~other.code_) == 0; }
    /// Highest member + 1, or 0 for the empty set.
    constexpr std::size_t span_end() const { return 64 - static_cast<std::size_t>(std::countl_zero(code_)); }

    std::vector<State> members() const;

    constexpr StateSet operator|(StateSet o) const { return StateSet{code_ | o.code_}; }
    constexpr StateSet operator&(StateSet o) const { return StateSet{code_ & o.code_}; }
    constexpr auto operator<=>(const StateSet&) const = default;

private:
    std::uint64_t code_ = 0;
};

/// 1-indexed display, e.g. "{1,2,4}".
std::string to_string(StateSet s);

/// Every subset of [0, n) with `size` members, ascending by code. n <= 64.
std::vector<StateSet> sets_of_size(std::size_t n, std::size_t size);
/// Next code with the same popcount within n bits; false after the last.
bool next_same_size(std::uint64_t& code, std::size_t n);

/// A finite sequence of letter indices, applied left to right.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }
    const std::vector<Letter>& letters() const { return letters_; }

    void push_back(Letter a) { letters_.push_back(a); }
    void append(const Word& tail) { letters_.insert(letters_.end(), tail.begin(), tail.end()); }
    Word then(const Word& tail) const {
        Word out = *this;
        out.append(tail);
        return out;
    }
    /// `a` repeated `times` times.
    static Word power(Letter a, std::size_t times) { return Word{std::vector<Letter>(times, a)}; }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

/// n states and an ordered list of total transition maps.
class Automaton {
public:
    /// Throws std::invalid_argument unless n >= 1, there is at least one letter,
    /// every row has n entries in [0, n), and letter names (if any) are
    /// distinct, nonempty and one per letter.
    Automaton(std::size_t n, std::vector<std::vector<State>> rows,
              std::vector<std::string> letter_names = {}, std::string name = {});

    std::size_t states() const { return n_; }
    std::size_t alphabet_size() const { return rows_.size(); }
    const std::vector<State>& row(Letter a) const { return rows_.at(a); }
    const std::vector<std::vector<State>>& rows() const { return rows_; }
    State next(Letter a, State s) const { return rows_[a][s]; }

    const std::string& name() const { return name_; }
    bool has_letter_names() const { return !letter_names_.empty(); }
    const std::vector<std::string>& letter_names() const { return letter_names_; }
    /// Name of letter `a`, or its decimal index when letters are unnamed.
    std::string letter_label(Letter a) const;

    Automaton renamed(std::string name) const;

    bool operator==(const Automaton& o) const {
        return n_ == o.n_ && rows_ == o.rows_ && letter_names_ == o.letter_names_ && name_ == o.name_;
    }

private:
    std::size_t n_;
    std::vector<std::vector<State>> rows_;
    std::vector<std::string> letter_names_;
    std::string name_;
};

/// Per-letter lookup tables mapping a state mask to its image mask, eight
/// bits at a time. Requires n <= 64.
class MaskImager {
public:
    explicit MaskImager(const Automaton& aut);

    std::size_t states() const { return n_; }
    std::size_t alphabet_size() const { return tables_.size(); }

    std::uint64_t image(Letter a, std::uint64_t mask) const {
        const auto& t = tables_[a];
        std::uint64_t out = 0;
        for (std::size_t chunk = 0; mask != 0; ++chunk, mask >>= 8) {
            out |= t[chunk * 256 + (mask & 0xFFU)];
        }
        return out;
    }
    StateSet image(Letter a, StateSet s) const { return StateSet{image(a, s.code())}; }

    /// Mask of states mapped onto `target` by letter `a`.
    std::uint64_t fiber(Letter a, State target) const { return fibers_[a][target]; }

private:
    std::size_t n_;
    std::vector<std::vector<std::uint64_t>> tables_;
    std::vector<std::vector<std::uint64_t>> fibers_;
};

/// { row_a[s] : s in S }. Throws std::invalid_argument for an empty S and
/// std::out_of_range for a bad letter or a member >= n.
StateSet apply_letter(const Automaton& aut, Letter a, StateSet s);
/// Left fold of apply_letter; the empty word returns S.
StateSet apply_word(const Automaton& aut, const Word& w, StateSet s);

/// The map x -> w(x) on all n states. Works for any n.
std::vector<State> transformation(const Automaton& aut, const Word& w);
/// |w([n])|.
std::size_t rank(const Automaton& aut, const Word& w);
/// Entry x is |w^{-1}(x)|; entries sum to n.
std::vector<std::size_t> preimage_counts(const Automaton& aut, const Word& w);

/// Throws std::out_of_range if a letter index is not < alphabet_size().
void check_word(const Automaton& aut, const Word& w);

/// One character per letter when every letter has a single-character name
/// (alphabet <= 26), otherwise comma-separated letter indices.
std::string format_word(const Automaton& aut, const Word& w);
/// Inverse of format_word. Throws std::invalid_argument on unknown letters.
Word parse_word(const Automaton& aut, std::string_view text);

}  // namespace synchro
