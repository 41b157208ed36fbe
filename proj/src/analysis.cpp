#include "synchro/analysis.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "synchro/bounds.hpp"
#include "synchro/generators.hpp"
#include "synchro/io.hpp"

namespace synchro {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json weight_json(Weight w) { return w == kInfinity ? ordered_json(nullptr) : ordered_json(w); }

ordered_json word_json(const Automaton& aut, const std::optional<Word>& w) {
    if (!w) return nullptr;
    ordered_json j;
    j["length"] = w->length();
    j["word"] = format_word(aut, *w);
    return j;
}

ordered_json states_json(const std::vector<State>& states) {
    ordered_json j = ordered_json::array();
    for (State s : states) j.push_back(s + 1);
    return j;
}

}  // namespace

AnalysisReport analyze(const Automaton& aut, const AnalyzeOptions& options) {
    AnalysisReport r(aut);
    r.limits = options.limits;
    const std::size_t n = aut.states();
    const PairTable pairs(aut);
    r.synchronizing = pairs.all_pairs_mergeable();
    r.max_pair_weight = pairs.max_finite_distance();
    r.closed = minimal_closed_sets(aut);

    if (n > kMaxMaskStates) {
        r.reset_note = r.profile_note = r.table_note = "state-set searches need n <= 64";
        r.table_scope = "none";
        if (r.synchronizing) r.greedy_reset = greedy_reset_word(aut);
        return r;
    }

    if (r.synchronizing) {
        r.greedy_reset = greedy_reset_word(aut);
        try {
            r.shortest_reset = shortest_reset_word(aut, options.limits);
        } catch (const BudgetExceeded& e) {
            r.reset_note = e.what();
        }
    } else {
        r.reset_note = "not synchronizing";
    }

    std::vector<std::size_t> ks = options.ks;
    if (ks.empty()) {
        if (n == 1) ks.push_back(1);
        for (std::size_t k = 2; k <= std::min<std::size_t>(n, 5); ++k) ks.push_back(k);
    }
    std::size_t kmax = 0;
    for (std::size_t k : ks) {
        if (k == 0 || k > n) throw std::invalid_argument("k = " + std::to_string(k) + " outside [1, n]");
        kmax = std::max(kmax, k);
    }
    std::optional<WeightTable> table;
    try {
        if (n <= options.limits.lattice_states) {
            table.emplace(full_weight_table(aut, options.limits));
            r.table_scope = "full";
        } else {
            table.emplace(bounded_weight_table(aut, kmax, options.limits));
            r.table_scope = "bounded";
        }
    } catch (const BudgetExceeded& e) {
        r.table_scope = "none";
        r.table_note = e.what();
    }
    if (table) {
        for (std::size_t k : ks) {
            RendezvousEntry e;
            e.k = k;
            e.m = m_value(*table, k);
            e.M = M_value(*table, k);
            if (e.m.witness) e.m_word = table->witness(*e.m.witness);
            r.rendezvous.push_back(std::move(e));
        }
    }

    const std::size_t length = options.profile_length.value_or(static_cast<std::size_t>(bounds::frankl_pin_reset(
        static_cast<std::int64_t>(n))));
    try {
        r.profile = min_rank_profile(aut, length, options.limits);
    } catch (const BudgetExceeded& e) {
        r.profile_note = e.what();
    }
    return r;
}

ordered_json to_json(const AnalysisReport& r) {
    const Automaton& aut = r.automaton;
    ordered_json j;
    j["tool"] = "synchro";
    j["version"] = kToolVersion;
    j["caps"] = {{"lattice_states", r.limits.lattice_states},
                 {"bounded_nodes", r.limits.bounded_nodes},
                 {"search_nodes", r.limits.search_nodes}};
    j["automaton"] = {{"name", aut.name()}, {"n", aut.states()}, {"alphabet", aut.alphabet_size()}};
    j["synchronizing"] = r.synchronizing;
    j["shortest_reset"] = word_json(aut, r.shortest_reset);
    if (!r.reset_note.empty()) j["reset_note"] = r.reset_note;
    j["greedy_reset"] = word_json(aut, r.greedy_reset);
    j["max_pair_weight"] = r.max_pair_weight;
    j["table"] = {{"scope", r.table_scope}};
    if (!r.table_note.empty()) j["table"]["note"] = r.table_note;
    ordered_json rdv = ordered_json::array();
    for (const auto& e : r.rendezvous) {
        ordered_json x;
        x["k"] = e.k;
        x["m"] = weight_json(e.m.value);
        x["m_witness"] = e.m.witness ? ordered_json(to_string(*e.m.witness)) : ordered_json(nullptr);
        x["m_ties"] = e.m.ties;
        x["m_word"] = word_json(aut, e.m_word);
        x["M"] = e.M ? ordered_json(e.M->value) : ordered_json(nullptr);
        x["M_witness"] = e.M ? ordered_json(to_string(*e.M->witness)) : ordered_json(nullptr);
        x["M_ties"] = e.M ? e.M->ties : 0;
        rdv.push_back(std::move(x));
    }
    j["rendezvous"] = std::move(rdv);
    j["rank_profile"] = r.profile.min_rank;
    if (!r.profile_note.empty()) j["profile_note"] = r.profile_note;
    ordered_json closed = ordered_json::array();
    for (const auto& c : r.closed.minimal_closed) closed.push_back(states_json(c.states));
    j["minimal_closed_sets"] = std::move(closed);
    return j;
}

std::string to_csv(const AnalysisReport& r) {
    std::ostringstream out;
    out << "name,n,k,m,m_witness,M,M_witness\n";
    for (const auto& e : r.rendezvous) {
        out << io::csv_field(r.automaton.name()) << ',' << r.automaton.states() << ',' << e.k << ','
            << weight_to_string(e.m.value) << ',' << io::csv_field(e.m.witness ? to_string(*e.m.witness) : "") << ','
            << (e.M ? std::to_string(e.M->value) : "") << ',' << io::csv_field(e.M ? to_string(*e.M->witness) : "")
            << '\n';
    }
    return out.str();
}

SweepRow sweep_row(const Automaton& aut, std::string id, const SweepOptions& options) {
    SweepRow row;
    row.id = std::move(id);
    row.n = aut.states();
    row.alphabet = aut.alphabet_size();
    const WeightTable table = full_weight_table(aut, options.limits);
    row.synchronizing = is_synchronizing(aut);
    row.reset_length = table.weight(StateSet::full(row.n));
    for (std::size_t k = 3; k <= 5; ++k) {
        if (k <= row.n) row.m[k - 3] = m_value(table, k).value;
    }
    if (row.n >= 2) {
        if (auto M = M_value(table, 2)) row.max_pair_weight = M->value;
    }
    if (options.merge_check && row.synchronizing) {
        const auto n = static_cast<std::int64_t>(row.n);
        for (std::size_t size = 2; size <= row.n; ++size) {
            const Weight bound = static_cast<Weight>(bounds::frankl_pin_set(n, static_cast<std::int64_t>(size)));
            for (StateSet s : sets_of_size(row.n, size)) {
                if (min_merge_length(aut, s, options.limits) > bound) ++row.frankl_pin_violations;
            }
        }
    }
    return row;
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn) {
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr failure;
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count && !failed; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        if (!failed.exchange(true)) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

namespace {

template <class Make>
std::vector<SweepRow> run_rows(std::size_t count, const SweepOptions& options, Make make) {
    std::vector<SweepRow> rows(count);
    parallel_for(count, options.threads, [&](std::size_t i) { rows[i] = make(i); });
    return rows;
}

}  // namespace

std::vector<SweepRow> exhaustive_sweep(std::size_t n, std::size_t alphabet, const SweepOptions& options) {
    if (n == 0 || alphabet == 0) throw std::invalid_argument("exhaustive sweep needs n >= 1 and alphabet >= 1");
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n * alphabet; ++i) {
        if (count > 100'000'000 / n) throw std::invalid_argument("exhaustive sweep is limited to 10^8 automata");
        count *= n;
    }
    return run_rows(static_cast<std::size_t>(count), options, [&](std::size_t i) {
        return sweep_row(enumerated_automaton(n, alphabet, i), std::to_string(i), options);
    });
}

std::vector<SweepRow> random_sweep(std::size_t n, std::size_t alphabet, std::size_t count, std::uint64_t seed,
                                   const SweepOptions& options) {
    return run_rows(count, options, [&](std::size_t i) {
        return sweep_row(random_automaton(n, alphabet, seed + i), std::to_string(seed + i), options);
    });
}

std::vector<SweepAggregate> aggregate(const std::vector<SweepRow>& rows) {
    struct Max {
        explicit Max(std::string m) : metric(std::move(m)) {}
        std::string metric;
        std::optional<Weight> value;
        std::string witness;
        void offer(std::optional<Weight> v, const std::string& id) {
            if (v && *v != kInfinity && (!value || *v > *value)) {
                value = v;
                witness = id;
            }
        }
    };
    std::size_t sync = 0, violations = 0;
    Max reset("max_reset_length"), pair("max_pair_weight");
    Max m_sync[3] = {Max("max_m3_synchronizing"), Max("max_m4_synchronizing"), Max("max_m5_synchronizing")};
    Max m_any[3] = {Max("max_m3_any"), Max("max_m4_any"), Max("max_m5_any")};
    for (const auto& r : rows) {
        violations += r.frankl_pin_violations;
        for (int i = 0; i < 3; ++i) m_any[i].offer(r.m[i], r.id);
        if (!r.synchronizing) continue;
        ++sync;
        reset.offer(r.reset_length, r.id);
        pair.offer(r.max_pair_weight, r.id);
        for (int i = 0; i < 3; ++i) m_sync[i].offer(r.m[i], r.id);
    }
    std::vector<SweepAggregate> out;
    out.push_back({"automata", std::to_string(rows.size()), ""});
    out.push_back({"synchronizing", std::to_string(sync), ""});
    out.push_back({"frankl_pin_violations", std::to_string(violations), ""});
    auto emit = [&](const Max& m) {
        out.push_back({m.metric, m.value ? std::to_string(*m.value) : "", m.witness});
    };
    emit(reset);
    emit(pair);
    for (const auto& m : m_sync) emit(m);
    for (const auto& m : m_any) emit(m);
    return out;
}

std::string rows_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "id,n,alphabet,synchronizing,reset_length,m3,m4,m5,max_pair_weight,frankl_pin_violations\n";
    const auto opt = [](const std::optional<Weight>& w) { return w ? weight_to_string(*w) : std::string(); };
    for (const auto& r : rows) {
        out << r.id << ',' << r.n << ',' << r.alphabet << ',' << (r.synchronizing ? 1 : 0) << ','
            << weight_to_string(r.reset_length) << ',' << opt(r.m[0]) << ',' << opt(r.m[1]) << ',' << opt(r.m[2]) << ','
            << opt(r.max_pair_weight) << ',' << r.frankl_pin_violations << '\n';
    }
    return out.str();
}

std::string aggregates_csv(const std::vector<SweepAggregate>& aggregates) {
    std::ostringstream out;
    out << "metric,value,witness\n";
    for (const auto& a : aggregates) out << a.metric << ',' << a.value << ',' << a.witness << '\n';
    return out.str();
}

}  // namespace synchro
