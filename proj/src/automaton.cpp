#include "synchro/automaton.hpp"

#include <charconv>
#include <set>
#include <stdexcept>

namespace synchro {

StateSet StateSet::of(std::initializer_list<State> members) {
    return of(std::span<const State>(members.begin(), members.size()));
}

StateSet StateSet::of(std::span<const State> members) {
    std::uint64_t code = 0;
    for (State s : members) {
        if (s >= kMaxMaskStates) {
            throw std::out_of_range("state " + std::to_string(s) + " does not fit a 64-bit state set");
        }
        code |= std::uint64_t{1} << s;
    }
    return StateSet{code};
}

StateSet StateSet::full(std::size_t n) {
    if (n > kMaxMaskStates) {
        throw std::out_of_range("state sets hold at most 64 states");
    }
    return StateSet{n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
}

StateSet StateSet::singleton(State s) { return of({s}); }

std::vector<State> StateSet::members() const {
    std::vector<State> out;
    out.reserve(size());
    for (std::uint64_t m = code_; m != 0; m &= m - 1) {
        out.push_back(static_cast<State>(std::countr_zero(m)));
    }
    return out;
}

std::string to_string(StateSet s) {
    std::string out = "{";
    bool first = true;
    for (State x : s.members()) {
        if (!first) out += ',';
        out += std::to_string(x + 1);
        first = false;
    }
    return out + "}";
}

bool next_same_size(std::uint64_t& v, std::size_t n) {
    // Gosper's hack.
    const std::uint64_t t = v | (v - 1);
    if (v == 0 || t == ~std::uint64_t{0}) return false;
    const std::uint64_t w = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    if (n < 64 && (w >> n) != 0) return false;
    v = w;
    return true;
}

std::vector<StateSet> sets_of_size(std::size_t n, std::size_t size) {
    if (n > kMaxMaskStates) throw std::out_of_range("state sets hold at most 64 states");
    std::vector<StateSet> out;
    if (size == 0 || size > n) return out;
    std::uint64_t v = StateSet::full(size).code();
    do {
        out.emplace_back(v);
    } while (next_same_size(v, n));
    return out;
}

Automaton::Automaton(std::size_t n, std::vector<std::vector<State>> rows,
                     std::vector<std::string> letter_names, std::string name)
    : n_(n), rows_(std::move(rows)), letter_names_(std::move(letter_names)), name_(std::move(name)) {
    if (n_ == 0) throw std::invalid_argument("automaton needs at least one state");
    if (rows_.empty()) throw std::invalid_argument("automaton needs at least one letter");
    for (std::size_t a = 0; a < rows_.size(); ++a) {
        if (rows_[a].size() != n_) {
            throw std::invalid_argument("letter " + std::to_string(a) + " has " + std::to_string(rows_[a].size()) +
                                        " entries, expected " + std::to_string(n_));
        }
        for (State t : rows_[a]) {
            if (t >= n_) {
                throw std::invalid_argument("letter " + std::to_string(a) + " maps to state " + std::to_string(t) +
                                            " outside [0, " + std::to_string(n_) + ")");
            }
        }
    }
    if (!letter_names_.empty()) {
        if (letter_names_.size() != rows_.size()) {
            throw std::invalid_argument("letter name count does not match alphabet size");
        }
        std::set<std::string> seen;
        for (const auto& nm : letter_names_) {
            if (nm.empty()) throw std::invalid_argument("empty letter name");
            if (!seen.insert(nm).second) throw std::invalid_argument("duplicate letter name '" + nm + "'");
        }
    }
}

std::string Automaton::letter_label(Letter a) const {
    return has_letter_names() ? letter_names_.at(a) : std::to_string(a);
}

Automaton Automaton::renamed(std::string name) const {
    Automaton out = *this;
    out.name_ = std::move(name);
    return out;
}

MaskImager::MaskImager(const Automaton& aut) : n_(aut.states()) {
    if (n_ > kMaxMaskStates) {
        throw std::out_of_range("mask images need n <= 64, got n = " + std::to_string(n_));
    }
    const std::size_t chunks = (n_ + 7) / 8;
    tables_.resize(aut.alphabet_size());
    fibers_.resize(aut.alphabet_size());
    for (Letter a = 0; a < aut.alphabet_size(); ++a) {
        const auto& row = aut.row(a);
        auto& table = tables_[a];
        table.assign(chunks * 256, 0);
        for (std::size_t c = 0; c < chunks; ++c) {
            for (std::size_t byte = 1; byte < 256; ++byte) {
                // Extend from the table entry with the lowest bit cleared.
                const std::size_t low = static_cast<std::size_t>(std::countr_zero(byte));
                const std::size_t s = c * 8 + low;
                std::uint64_t img = table[c * 256 + (byte & (byte - 1))];
                if (s < n_) img |= std::uint64_t{1} << row[s];
                table[c * 256 + byte] = img;
            }
        }
        fibers_[a].assign(n_, 0);
        for (std::size_t s = 0; s < n_; ++s) fibers_[a][row[s]] |= std::uint64_t{1} << s;
    }
}

StateSet apply_letter(const Automaton& aut, Letter a, StateSet s) {
    if (s.empty()) throw std::invalid_argument("apply_letter on an empty state set");
    if (a >= aut.alphabet_size()) throw std::out_of_range("letter index " + std::to_string(a) + " out of range");
    if (s.span_end() > aut.states()) {
        throw std::out_of_range("state set " + to_string(s) + " has a member outside the automaton");
    }
    std::uint64_t out = 0;
    const auto& row = aut.row(a);
    for (std::uint64_t m = s.code(); m != 0; m &= m - 1) {
        out |= std::uint64_t{1} << row[static_cast<std::size_t>(std::countr_zero(m))];
    }
    return StateSet{out};
}

StateSet apply_word(const Automaton& aut, const Word& w, StateSet s) {
    if (s.empty()) throw std::invalid_argument("apply_word on an empty state set");
    if (s.span_end() > aut.states()) {
        throw std::out_of_range("state set " + to_string(s) + " has a member outside the automaton");
    }
    for (Letter a : w) s = apply_letter(aut, a, s);
    return s;
}

void check_word(const Automaton& aut, const Word& w) {
    for (Letter a : w) {
        if (a >= aut.alphabet_size()) {
            throw std::out_of_range("letter index " + std::to_string(a) + " out of range");
        }
    }
}

std::vector<State> transformation(const Automaton& aut, const Word& w) {
    check_word(aut, w);
    std::vector<State> map(aut.states());
    for (State s = 0; s < aut.states(); ++s) {
        State x = s;
        for (Letter a : w) x = aut.next(a, x);
        map[s] = x;
    }
    return map;
}

std::vector<std::size_t> preimage_counts(const Automaton& aut, const Word& w) {
    std::vector<std::size_t> counts(aut.states(), 0);
    for (State x : transformation(aut, w)) ++counts[x];
    return counts;
}

std::size_t rank(const Automaton& aut, const Word& w) {
    std::size_t r = 0;
    for (std::size_t c : preimage_counts(aut, w)) r += c > 0 ? 1 : 0;
    return r;
}

namespace {

bool single_char_letters(const Automaton& aut) {
    if (!aut.has_letter_names() || aut.alphabet_size() > 26) return false;
    for (const auto& nm : aut.letter_names()) {
        if (nm.size() != 1 || nm[0] == ',') return false;
    }
    return true;
}

}  // namespace

std::string format_word(const Automaton& aut, const Word& w) {
    check_word(aut, w);
    std::string out;
    if (single_char_letters(aut)) {
        for (Letter a : w) out += aut.letter_names()[a];
        return out;
    }
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

Word parse_word(const Automaton& aut, std::string_view text) {
    Word w;
    if (text.empty()) return w;
    if (single_char_letters(aut)) {
        for (char c : text) {
            Letter found = static_cast<Letter>(aut.alphabet_size());
            for (Letter a = 0; a < aut.alphabet_size(); ++a) {
                if (aut.letter_names()[a][0] == c) found = a;
            }
            if (found == aut.alphabet_size()) {
                throw std::invalid_argument(std::string("unknown letter '") + c + "'");
            }
            w.push_back(found);
        }
        return w;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view tok = text.substr(pos, comma - pos);
        Letter a = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), a);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("bad letter index '" + std::string(tok) + "'");
        }
        if (a >= aut.alphabet_size()) throw std::invalid_argument("letter index " + std::string(tok) + " out of range");
        w.push_back(a);
        pos = comma + 1;
    }
    return w;
}

}  // namespace synchro
