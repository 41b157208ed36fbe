#include "synchro/claims.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "synchro/analysis.hpp"
#include "synchro/bounds.hpp"
#include "synchro/generators.hpp"
#include "synchro/io.hpp"

namespace synchro {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Recorded: return "recorded";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;
using Params = std::vector<std::pair<std::string, std::string>>;

class Stopwatch {
public:
    double ms() const { return std::chrono::duration<double, std::milli>(Clock::now() - start_).count(); }
    void reset() { start_ = Clock::now(); }

private:
    Clock::time_point start_ = Clock::now();
};

template <class T>
std::string str(const T& v) {
    if constexpr (std::is_same_v<T, Weight>) {
        return weight_to_string(v);
    } else {
        std::ostringstream out;
        out << v;
        return out.str();
    }
}

ClaimResult checked(std::string id, std::string anchor, Params params, std::string expected, std::string computed,
                    bool ok, double ms, std::string note = {}) {
    return {std::move(id),       std::move(anchor),   std::move(params), std::move(expected),
            std::move(computed), ok ? Verdict::Pass : Verdict::Fail,     ms, std::move(note)};
}

ClaimResult recorded(std::string id, std::string anchor, Params params, std::string computed, double ms,
                     std::string note = {}) {
    return {std::move(id), std::move(anchor), std::move(params), "", std::move(computed), Verdict::Recorded, ms,
            std::move(note)};
}

bool collapses(const Automaton& aut, const Word& w, StateSet s) { return apply_word(aut, w, s).size() == 1; }

// Reset lengths of the Cerny family.
void suite_cerny(const SuiteOptions& o, std::vector<ClaimResult>& out) {
    const std::string anchor = "Cerny automaton: shortest reset word has length (n-1)^2";
    for (std::size_t n = 2; n <= o.n_max; ++n) {
        Stopwatch clock;
        const Automaton aut = cerny(n);
        const auto w = shortest_reset_word(aut, o.limits);
        const std::size_t expected = (n - 1) * (n - 1);
        const bool valid = w && collapses(aut, *w, StateSet::full(n));
        out.push_back(checked("cerny.reset-length", anchor, {{"n", str(n)}}, str(expected),
                              w ? str(w->length()) : "none", valid && w->length() == expected, clock.ms(),
                              w && n <= 6 ? "word " + format_word(aut, *w) : ""));
    }
}

// The 4-state example word and its optimality.
void suite_reset_word(const SuiteOptions& o, std::vector<ClaimResult>& out) {
    const std::string anchor = "Cerny automaton on 4 states: gfffgfffg is a reset word";
    const Automaton aut = cerny(4);
    const StateSet all = StateSet::full(4);
    const Params params{{"n", "4"}};

    Stopwatch clock;
    const StateSet image = apply_word(aut, parse_word(aut, "gfffgfffg"), all);
    out.push_back(checked("reset-word.word-resets", anchor, params, "singleton", to_string(image), image.size() == 1,
                          clock.ms()));

    // Every word of length <= 9 by direct enumeration, independent of any search.
    clock.reset();
    std::array<std::size_t, 10> resetting{};
    std::string first_nine;
    for (std::size_t len = 0; len <= 9; ++len) {
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
            Word w;
            for (std::size_t i = 0; i < len; ++i) w.push_back((bits >> (len - 1 - i)) & 1u);
            if (collapses(aut, w, all)) {
                if (resetting[len]++ == 0 && len == 9) first_nine = format_word(aut, w);
            }
        }
    }
    std::size_t shorter = 0;
    for (std::size_t len = 0; len <= 8; ++len) shorter += resetting[len];
    out.push_back(checked("reset-word.no-shorter-word", "Cerny automaton on 4 states: no reset word of length <= 8",
                          params, "0 reset words", str(shorter) + " reset words", shorter == 0, clock.ms(),
                          "all 511 words of length <= 8 enumerated"));
    out.push_back(recorded("reset-word.length-9-words", anchor, params, str(resetting[9]), clock.ms(),
                           "first in lexicographic order: " + first_nine));

    clock.reset();
    const WeightTable table = full_weight_table(aut, o.limits);
    const auto bfs = table.witness(all);
    out.push_back(checked("reset-word.lattice-weight", "t([4]) = 9 in the Cerny transition graph", params, "9",
                          str(table.weight(all)), table.weight(all) == 9 && bfs && collapses(aut, *bfs, all),
                          clock.ms(), bfs ? "witness " + format_word(aut, *bfs) : ""));
}

// Largest pair weight of the Cerny automata.
void suite_pairs(const SuiteOptions& o, std::vector<ClaimResult>& out) {
    const std::string anchor = "Cerny automaton: largest pair weight is C(n,2)";
    for (std::size_t n = 4; n <= 16; ++n) {
        Stopwatch clock;
        const Automaton aut = cerny(n);
        const WeightTable table = bounded_weight_table(aut, 2, o.limits);
        const auto M = M_value(table, 2);
        const auto expected = static_cast<Weight>(bounds::binom(static_cast<std::int64_t>(n), 2));
        const double ms = clock.ms();
        const Params params{{"n", str(n)}, {"k", "2"}};
        out.push_back(checked("pairs.max-weight", anchor, params, str(expected), M ? str(M->value) : "none",
                              M && M->value == expected, ms));
        const StateSet pair = StateSet::of({1, static_cast<State>(n / 2 + 1)});
        const Weight w = table.weight(pair);
        out.push_back(checked("pairs.argmax", "Cerny automaton: {2, floor(n/2)+2} attains the largest pair weight",
                              params, to_string(pair) + " weight " + str(expected),
                              to_string(pair) + " weight " + str(w), M && w == M->value && w == expected, ms,
                              M ? "ties " + str(M->ties) + ", first maximiser " + to_string(*M->witness) : ""));
    }
}

// Smallest k-set weights of the Cerny automata.
void suite_min_sets(const SuiteOptions& o, std::vector<ClaimResult>& out) {
    const std::string anchor = "Cerny automaton: {1..k} has weight (k-2)n+1, the least over k-sets";
    for (std::size_t k = 3; k <= 5; ++k) {
        for (std::size_t n = k; n <= 12; ++n) {
            Stopwatch clock;
            const WeightTable table = full_weight_table(cerny(n), o.limits);
            const RendezvousValue m = m_value(table, k);
            const Weight first = table.weight(StateSet::full(k));
            const auto expected =
                static_cast<Weight>(bounds::cerny_m_lower(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
            const std::string computed = "m=" + str(m.value) + ", t({1..k})=" + str(first);
            const Params params{{"n", str(n)}, {"k", str(k)}};
            const std::string note = m.witness ? "first minimiser " + to_string(*m.witness) + ", ties " + str(m.ties)
                                               : "no synchronizable k-set";
            if (n >= 2 * k) {
                out.push_back(checked("min-sets.weight", anchor, params, str(expected), computed,
                                      m.value == expected && first == expected, clock.ms(), note));
            } else {
                const bool match = m.value == expected && first == expected;
                out.push_back(recorded("min-sets.small-n", anchor, params, computed, clock.ms(),
                                       (match ? "matches " : "differs from ") + str(expected) + "; " + note));
            }
        }
    }
}

// Single-gadget construction with quadratic triple weights.
void suite_triple(const SuiteOptions& o, std::vector<ClaimResult>& out) {
    const std::string anchor = "single-gadget construction: m(3) = (n-2 floor(n/4)) floor(n/4) + 2 > n^2/8";
    std::optional<std::size_t> first_strict;
    for (std::size_t n : {12, 16, 20, 21, 24}) {
        Stopwatch clock;
        const Automaton aut = construction_triple(n);
        const GadgetLayout layout = triple_layout(n);
        const Params params{{"n", str(n)}, {"k", "3"}};
        const bool sync = is_synchronizing(aut);
        out.push_back(checked("triple.not-synchronizing", anchor, params, "false", sync ? "true" : "false", !sync,
                              clock.ms()));

        clock.reset();
        const WeightTable table = bounded_weight_table(aut, 3, o.limits);
        std::size_t finite = 0, bad_shape = 0;
        for (StateSet s : table.layer(3)) {
            if (table.weight(s) == kInfinity) continue;
            ++finite;
            std::size_t in_a = 0;
            for (State x : s.members()) in_a += layout.block_of(x) == 0 ? 1 : 0;
            if (in_a != 2) ++bad_shape;
        }
        const double table_ms = clock.ms();
        out.push_back(checked("triple.shape", "synchronizable triples have two states in A and one in X", params,
                              "0 violations", str(bad_shape) + " violations", bad_shape == 0 && finite > 0, table_ms,
                              str(finite) + " synchronizable triples"));

        const RendezvousValue m = m_value(table, 3);
        const std::size_t a = n / 4;
        const auto formula = static_cast<Weight>((n - 2 * a) * a + 2);
        const auto word = m.witness ? table.witness(*m.witness) : std::nullopt;
        const bool witness_ok = word && word->length() == m.value && collapses(aut, *word, *m.witness);
        const auto M = M_value(table, 3);
        out.push_back(checked("triple.min-weight", anchor, params, str(formula), str(m.value),
                              m.value == formula && witness_ok, table_ms,
                              m.witness ? "first minimiser " + to_string(*m.witness) + ", ties " + str(m.ties) +
                                              (M ? ", M(3) = " + str(M->value) : "")
                                        : ""));

        const bounds::Rational eighth = bounds::nonsync_triple_lower(static_cast<std::int64_t>(n));
        const auto exceeds = [&](Weight w) {
            return w != kInfinity && eighth < bounds::Rational::make(w, 1);
        };
        if (exceeds(formula)) {
            if (!first_strict && exceeds(m.value)) first_strict = n;
            out.push_back(checked("triple.exceeds-n2/8", anchor, params, "> " + eighth.to_string(), str(m.value),
                                  exceeds(m.value), table_ms));
        } else {
            out.push_back(recorded("triple.exceeds-n2/8", anchor, params, str(m.value), table_ms,
                                   "formula does not exceed " + eighth.to_string()));
        }
    }
    out.push_back(recorded("triple.first-strict", anchor, {{"n", "12,16,20,21,24"}},
                           first_strict ? str(*first_strict) : "none", 0.0,
                           "smallest tested n with m(3) > n^2/8"));
}

// Multi-gadget construction at k = 4, n = 48.
void suite_general(const SuiteOptions& o, std::vector<ClaimResult>& out) {
    const std::string anchor = "coprime gadget construction: m(k) >= (4/3)(n/4k)^(k-1)";
    constexpr std::size_t n = 48, k = 4;
    const Params params{{"n", str(n)}, {"k", str(k)}};
    Stopwatch clock;
    const Automaton aut = construction_general(n, k);
    const GadgetLayout layout = general_layout(n, k);
    const bool sync = is_synchronizing(aut);
    std::string sizes;
    for (std::size_t s : layout.gadget_sizes) sizes += (sizes.empty() ? "" : ",") + str(s);
    out.push_back(checked("general.not-synchronizing", anchor, params, "false", sync ? "true" : "false", !sync,
                          clock.ms(), "gadget sizes " + sizes + ", |X| = " + str(layout.x_size)));

    clock.reset();
    const WeightTable table = bounded_weight_table(aut, k, o.limits);
    const std::size_t gadgets = layout.gadget_sizes.size();
    std::size_t finite = 0, bad_shape = 0;
    for (StateSet s : table.layer(k)) {
        if (table.weight(s) == kInfinity) continue;
        ++finite;
        std::vector<std::size_t> count(gadgets + 1, 0);
        for (State x : s.members()) ++count[layout.block_of(x)];
        const std::size_t doubles = static_cast<std::size_t>(std::count(count.begin(), count.end() - 1, 2));
        const std::size_t singles = static_cast<std::size_t>(std::count(count.begin(), count.end() - 1, 1));
        if (!(count[gadgets] == 1 && doubles == 1 && singles == gadgets - 1)) ++bad_shape;
    }
    const double table_ms = clock.ms();
    out.push_back(checked("general.shape",
                          "synchronizable k-sets have two states in one gadget, one in each other gadget, one in X",
                          params, "0 violations", str(bad_shape) + " violations", bad_shape == 0 && finite > 0,
                          table_ms, str(finite) + " synchronizable 4-sets among " + str(table.layer(k).size())));

    const RendezvousValue m = m_value(table, k);
    const bounds::Rational lower = bounds::nonsync_lower(n, k);
    const auto word = m.witness ? table.witness(*m.witness) : std::nullopt;
    const bool witness_ok = word && word->length() == m.value && collapses(aut, *word, *m.witness);
    out.push_back(checked("general.lower-bound", anchor, params, ">= " + lower.to_string(), str(m.value),
                          m.value != kInfinity && lower <= bounds::Rational::make(m.value, 1) && witness_ok,
                          table_ms));
    out.push_back(recorded("general.exact-m4", anchor, params, str(m.value), table_ms,
                           m.witness ? "first minimiser " + to_string(*m.witness) + ", ties " + str(m.ties) : ""));
}

// All 65,536 two-letter automata on 4 states.
void suite_sweep_n4(const SuiteOptions& o, std::vector<ClaimResult>& out) {
    Stopwatch clock;
    SweepOptions so;
    so.threads = o.threads;
    so.limits = o.limits;
    const auto rows = exhaustive_sweep(4, 2, so);
    const double ms = clock.ms();
    const Params params{{"n", "4"}, {"alphabet", "2"}};

    std::size_t sync = 0, long_reset = 0, big_m3 = 0, fp = 0, disagree = 0;
    Weight max_reset = 0, max_m3 = 0;
    std::string reset_id, m3_id;
    const auto m3_bound = static_cast<Weight>(bounds::ceil_bound(bounds::rdvs3_upper(4)));
    for (const auto& r : rows) {
        fp += r.frankl_pin_violations;
        if (r.synchronizing != (r.reset_length != kInfinity)) ++disagree;
        if (!r.synchronizing) continue;
        ++sync;
        if (r.reset_length > 9) ++long_reset;
        if (reset_id.empty() || r.reset_length > max_reset) {
            max_reset = r.reset_length;
            reset_id = r.id;
        }
        const Weight m3 = *r.m[0];
        if (m3 > m3_bound) ++big_m3;
        if (m3_id.empty() || m3 > max_m3) {
            max_m3 = m3;
            m3_id = r.id;
        }
    }
    out.push_back(checked("sweep-n4.count", "all two-letter automata on 4 states", params, "65536",
                          str(rows.size()), rows.size() == 65536, ms, str(sync) + " synchronizing"));
    out.push_back(checked("sweep-n4.sync-agreement", "synchronizing iff t([n]) is finite", params, "0 violations",
                          str(disagree) + " violations", disagree == 0, ms));
    out.push_back(checked("sweep-n4.reset-length", "reset length <= (n-1)^2 at n = 4", params, "<= 9",
                          "max " + str(max_reset), long_reset == 0, ms,
                          "first maximiser enum-4-" + reset_id));
    out.push_back(checked("sweep-n4.m3-bound", "m(3) <= (3 - sqrt 5)/4 n^2 + 3/2 n", params, "<= " + str(m3_bound),
                          "max " + str(max_m3), big_m3 == 0, ms));
    out.push_back(recorded("sweep-n4.m3-observed", "m(3) <= (3 - sqrt 5)/4 n^2 + 3/2 n", params, str(max_m3), ms,
                           "first maximiser enum-4-" + m3_id));
    out.push_back(checked("sweep-n4.frankl-pin", "every k-set shrinks within C(n-k+2, 2) steps", params,
                          "0 violations", str(fp) + " violations", fp == 0, ms));
}

// Property checks on random automata; every counter must stay at zero.
struct PropertyCounts {
    enum : std::size_t {
        Recurrence,
        Monotone,
        Agreement,
        Witness,
        Greedy,
        Profile,
        RankFour,
        Sync,
        Closed,
        Weak,
        Rdvs3,
        LowRank,
        kCount
    };
    std::array<std::size_t, kCount> bad{};
    std::size_t synchronizing = 0;
};

PropertyCounts check_random(const Automaton& aut, const Limits& limits) {
    PropertyCounts c;
    const std::size_t n = aut.states();
    const auto nn = static_cast<std::int64_t>(n);
    const StateSet all = StateSet::full(n);
    const WeightTable table = full_weight_table(aut, limits);
    const Weight reset = table.weight(all);
    const bool sync = is_synchronizing(aut);
    if (sync) ++c.synchronizing;

    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t code = 1; code < limit; ++code) {
        const StateSet s{code};
        const Weight t = table.weight(s);
        Weight expect = 0;
        if (s.size() > 1) {
            Weight best = kInfinity;
            for (Letter a = 0; a < aut.alphabet_size(); ++a) best = std::min(best, table.weight(apply_letter(aut, a, s)));
            expect = best == kInfinity ? kInfinity : best + 1;
        }
        if (t != expect) ++c.bad[PropertyCounts::Recurrence];
        for (State x = 0; x < n; ++x) {
            if (!s.contains(x) && t > table.weight(s | StateSet::singleton(x))) ++c.bad[PropertyCounts::Monotone];
        }
        const auto w = table.witness(s);
        if (t == kInfinity ? w.has_value() : !(w && w->length() == t && collapses(aut, *w, s))) {
            ++c.bad[PropertyCounts::Witness];
        }
    }

    const WeightTable bounded = bounded_weight_table(aut, 4, limits);
    for (std::size_t size = 1; size <= 4; ++size) {
        for (StateSet s : bounded.layer(size)) {
            const Weight t = bounded.weight(s);
            if (t != table.weight(s)) ++c.bad[PropertyCounts::Agreement];
            const auto w = bounded.witness(s);
            if (t != kInfinity && !(w && w->length() == t && collapses(aut, *w, s))) ++c.bad[PropertyCounts::Witness];
        }
    }

    const auto shortest = shortest_reset_word(aut, limits);
    if (sync != (reset != kInfinity) || sync != shortest.has_value() || (shortest && shortest->length() != reset)) {
        ++c.bad[PropertyCounts::Sync];
    }

    const auto profile = min_rank_profile(aut, static_cast<std::size_t>(bounds::frankl_pin_reset(nn)), limits);
    const auto& r = profile.min_rank;
    bool profile_ok = !r.empty() && r[0] == n && std::is_sorted(r.rbegin(), r.rend());
    if (profile_ok && sync) profile_ok = reset < r.size() && r[reset] == 1 && (reset == 0 || r[reset - 1] > 1);
    if (profile_ok && !sync) profile_ok = r.back() > 1;
    if (!profile_ok) ++c.bad[PropertyCounts::Profile];

    const auto closed = minimal_closed_sets(aut).minimal_closed;
    for (const auto& set : closed) {
        const StateSet cs = StateSet::of(set.states);
        for (Letter a = 0; a < aut.alphabet_size(); ++a) {
            if (!apply_letter(aut, a, cs).is_subset_of(cs)) ++c.bad[PropertyCounts::Closed];
        }
    }
    if (closed.empty() || (sync && closed.size() != 1)) ++c.bad[PropertyCounts::Closed];

    // A word of rank below n/2 sends some triple to one state.
    if (n >= 3 && r.size() > n && 2 * r[n] < n && m_value(table, 3).value > n) ++c.bad[PropertyCounts::LowRank];

    if (!sync) return c;
    const Word greedy = greedy_reset_word(aut);
    if (!collapses(aut, greedy, all) || greedy.length() < reset ||
        greedy.length() > static_cast<std::size_t>(bounds::naive_reset(nn))) {
        ++c.bad[PropertyCounts::Greedy];
    }
    if (n >= 4 && r[4] > n - 2) ++c.bad[PropertyCounts::RankFour];
    for (std::size_t k = 2; k <= n; ++k) {
        const auto kk = static_cast<std::int64_t>(k);
        const Weight m = m_value(table, k).value;
        if (m > bounds::weak_rdvs_upper(nn, kk) || m > bounds::frankl_pin_rendezvous(nn, kk)) {
            ++c.bad[PropertyCounts::Weak];
        }
    }
    if (n >= 3 && !bounds::admits_upper(bounds::rdvs3_upper(nn), m_value(table, 3).value)) {
        ++c.bad[PropertyCounts::Rdvs3];
    }
    return c;
}

void suite_random(const SuiteOptions& o, std::vector<ClaimResult>& out) {
    Stopwatch clock;
    std::vector<PropertyCounts> per(o.random_count);
    parallel_for(o.random_count, o.threads, [&](std::size_t i) {
        per[i] = check_random(random_automaton(o.random_n, 2, o.random_seed + i), o.limits);
    });
    const double ms = clock.ms();
    PropertyCounts total;
    for (const auto& p : per) {
        total.synchronizing += p.synchronizing;
        for (std::size_t j = 0; j < PropertyCounts::kCount; ++j) total.bad[j] += p.bad[j];
    }
    const Params params{{"n", str(o.random_n)},
                        {"count", str(o.random_count)},
                        {"seed", str(o.random_seed) + ".." + str(o.random_seed + o.random_count - 1)}};
    const std::array<std::pair<const char*, const char*>, PropertyCounts::kCount> names{{
        {"random.recurrence", "t(S) = 1 + min_a t(a(S)) for |S| >= 2, t = 0 on singletons"},
        {"random.monotone", "S subset of S' implies t(S) <= t(S')"},
        {"random.bounded-agreement", "full and size-bounded tables agree on sets of size <= 4"},
        {"random.witness", "witness words have length t(S) and collapse S"},
        {"random.greedy", "greedy reset word is valid with length in [t([n]), (n-1) C(n,2)]"},
        {"random.rank-profile", "minimal rank is non-increasing and reaches 1 exactly at t([n])"},
        {"random.rank-at-4", "some word of length <= 4 has rank <= n-2"},
        {"random.sync-agreement", "pair criterion, t([n]) and the shortest reset word agree"},
        {"random.closed-set", "minimal closed sets are closed, and unique when synchronizing"},
        {"random.weak-bound", "m(k) is within the Frankl-Pin and weak rendezvous bounds"},
        {"random.rdvs3-bound", "m(3) <= (3 - sqrt 5)/4 n^2 + 3/2 n"},
        {"random.low-rank-triple", "a word of length <= n with rank < n/2 gives m(3) <= n"},
    }};
    for (std::size_t j = 0; j < PropertyCounts::kCount; ++j) {
        out.push_back(checked(names[j].first, names[j].second, params, "0 violations",
                              str(total.bad[j]) + " violations", total.bad[j] == 0, ms,
                              j == 0 ? str(total.synchronizing) + " synchronizing" : ""));
    }
}

// Catalog values against hand evaluation.
void suite_bounds(const SuiteOptions&, std::vector<ClaimResult>& out) {
    Stopwatch clock;
    const auto fp = bounds::frankl_pin_reset(4);
    out.push_back(checked("bounds.frankl-pin-reset", "reset length <= (n^3 - n)/6", {{"n", "4"}}, "10", str(fp),
                          fp == 10, clock.ms(), "C(4,2) + C(3,2) + C(2,2) = 6 + 3 + 1"));
    clock.reset();
    const auto weak = bounds::weak_rdvs_upper(10, 4);
    out.push_back(checked("bounds.weak-rendezvous", "weak rendezvous bound", {{"n", "10"}, {"k", "4"}}, "49",
                          str(weak), weak == 49, clock.ms(), "C(2,2) + C(3,2) + C(10,2) = 1 + 3 + 45"));
    clock.reset();
    const auto ns = bounds::nonsync_lower(48, 4);
    out.push_back(checked("bounds.nonsync-lower", "coprime gadget construction: m(k) >= (4/3)(n/4k)^(k-1)",
                          {{"n", "48"}, {"k", "4"}}, "36", ns.to_string(), ns == bounds::Rational{36, 1}, clock.ms(),
                          "(4/3) * 3^3"));
    clock.reset();
    const auto tr = bounds::nonsync_triple_lower(21);
    out.push_back(checked("bounds.nonsync-triple", "single-gadget construction: m(3) > n^2/8", {{"n", "21"}},
                          "441/8 = 55.125", tr.to_string() + " = " + str(tr.to_double()),
                          tr == bounds::Rational{441, 8} && tr.to_double() == 55.125, clock.ms()));
}

using SuiteFn = void (*)(const SuiteOptions&, std::vector<ClaimResult>&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> all{
        {"cerny", suite_cerny},         {"reset-word", suite_reset_word}, {"pairs", suite_pairs},
        {"min-sets", suite_min_sets},   {"triple", suite_triple},         {"general", suite_general},
        {"sweep-n4", suite_sweep_n4},   {"random", suite_random},         {"bounds", suite_bounds},
    };
    return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : suites()) v.push_back(name);
        v.push_back("constructions");
        v.push_back("all");
        return v;
    }();
    return names;
}

std::vector<ClaimResult> run_suite(const std::string& suite, const SuiteOptions& options) {
    std::vector<ClaimResult> out;
    bool found = false;
    for (const auto& [name, fn] : suites()) {
        const bool wanted = suite == "all" || suite == name ||
                            (suite == "constructions" && (name == "triple" || name == "general"));
        if (!wanted) continue;
        found = true;
        fn(options, out);
    }
    if (!found) throw std::invalid_argument("unknown suite '" + suite + "'");
    return out;
}

bool all_pass(const std::vector<ClaimResult>& claims) {
    return std::none_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.verdict == Verdict::Fail; });
}

ordered_json claims_json(const std::string& suite, const SuiteOptions& options, const std::vector<ClaimResult>& claims) {
    ordered_json j;
    j["tool"] = "synchro";
    j["version"] = kToolVersion;
    j["suite"] = suite;
    j["options"] = {{"n_max", options.n_max},
                    {"random_count", options.random_count},
                    {"random_n", options.random_n},
                    {"seed", options.random_seed},
                    {"threads", options.threads}};
    j["caps"] = {{"lattice_states", options.limits.lattice_states},
                 {"bounded_nodes", options.limits.bounded_nodes},
                 {"search_nodes", options.limits.search_nodes}};
    std::size_t counts[3] = {0, 0, 0};
    ordered_json list = ordered_json::array();
    for (const auto& c : claims) {
        ++counts[static_cast<int>(c.verdict)];
        ordered_json x;
        x["id"] = c.id;
        x["anchor"] = c.anchor;
        x["params"] = ordered_json::object();
        for (const auto& [k, v] : c.params) x["params"][k] = v;
        x["expected"] = c.expected;
        x["computed"] = c.computed;
        x["verdict"] = to_string(c.verdict);
        x["runtime_ms"] = std::round(c.runtime_ms * 1000.0) / 1000.0;
        if (!c.note.empty()) x["note"] = c.note;
        list.push_back(std::move(x));
    }
    j["claims"] = std::move(list);
    j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"recorded", counts[2]}};
    return j;
}

namespace {

std::string params_text(const ClaimResult& c) {
    std::string out;
    for (const auto& [k, v] : c.params) out += (out.empty() ? "" : " ") + k + "=" + v;
    return out;
}

}  // namespace

std::string claims_csv(const std::vector<ClaimResult>& claims) {
    std::ostringstream out;
    out << "id,verdict,expected,computed,runtime_ms,params,anchor,note\n";
    for (const auto& c : claims) {
        out << io::csv_field(c.id) << ',' << to_string(c.verdict) << ',' << io::csv_field(c.expected) << ','
            << io::csv_field(c.computed) << ',' << std::fixed << std::setprecision(3) << c.runtime_ms << ','
            << io::csv_field(params_text(c)) << ',' << io::csv_field(c.anchor) << ',' << io::csv_field(c.note)
            << '\n';
    }
    return out.str();
}

std::string claims_table(const std::vector<ClaimResult>& claims) {
    std::size_t w_id = 2, w_params = 6, w_expected = 8, w_computed = 8;
    for (const auto& c : claims) {
        w_id = std::max(w_id, c.id.size());
        w_params = std::max(w_params, params_text(c).size());
        w_expected = std::max(w_expected, c.expected.size());
        w_computed = std::max(w_computed, c.computed.size());
    }
    std::ostringstream out;
    out << std::left << std::setw(9) << "verdict" << std::setw(w_id + 2) << "id" << std::setw(w_params + 2) << "params"
        << std::setw(w_expected + 2) << "expected" << std::setw(w_computed + 2) << "computed" << "ms\n";
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& c : claims) {
        ++counts[static_cast<int>(c.verdict)];
        out << std::left << std::setw(9) << to_string(c.verdict) << std::setw(w_id + 2) << c.id
            << std::setw(w_params + 2) << params_text(c) << std::setw(w_expected + 2) << c.expected
            << std::setw(w_computed + 2) << c.computed << std::fixed << std::setprecision(1) << c.runtime_ms << '\n';
    }
    out << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " recorded\n";
    return out.str();
}

}  // namespace synchro
