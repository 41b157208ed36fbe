#include <doctest.h>

#include "synchro/analysis.hpp"
#include "synchro/generators.hpp"

using namespace synchro;

TEST_CASE("analyze the 4-state Cerny automaton") {
    const AnalysisReport r = analyze(cerny(4));
    CHECK(r.synchronizing);
    REQUIRE(r.shortest_reset);
    CHECK(format_word(r.automaton, *r.shortest_reset) == "gfffgfffg");
    REQUIRE(r.greedy_reset);
    CHECK(r.greedy_reset->length() >= 9);
    CHECK(r.table_scope == "full");
    REQUIRE(r.rendezvous.size() == 3);
    CHECK(r.rendezvous[0].k == 2);
    CHECK(r.rendezvous[0].M->value == 6);
    CHECK(r.rendezvous[1].m.value == 5);
    CHECK(r.rendezvous[2].m.value == 9);
    CHECK(r.max_pair_weight == 6);
    CHECK(r.profile.min_rank.size() == 11);
    CHECK(r.profile.min_rank.back() == 1);
    CHECK(r.closed.minimal_closed.size() == 1);

    const auto j = to_json(r);
    CHECK(j["tool"] == "synchro");
    CHECK(j["version"] == kToolVersion);
    CHECK(j["caps"]["lattice_states"] == 22);
    CHECK(j["shortest_reset"]["length"] == 9);
    CHECK(j["rendezvous"][1]["m_witness"] == "{1,2,3}");
    CHECK(j["minimal_closed_sets"][0] == nlohmann::ordered_json::array({1, 2, 3, 4}));
    CHECK(to_csv(r).rfind("name,n,k,m,m_witness,M,M_witness\ncerny-4,4,2,1,", 0) == 0);
}

TEST_CASE("analyze the 21-state triple construction") {
    AnalyzeOptions o;
    o.ks = {3};
    o.profile_length = 30;
    const AnalysisReport r = analyze(construction_triple(21), o);
    CHECK_FALSE(r.synchronizing);
    CHECK_FALSE(r.shortest_reset);
    CHECK_FALSE(r.greedy_reset);
    CHECK(r.reset_note == "not synchronizing");
    REQUIRE(r.rendezvous.size() == 1);
    CHECK(r.rendezvous[0].m.value == 57);
    REQUIRE(r.rendezvous[0].M);
    CHECK(r.rendezvous[0].M->value >= 57);
    REQUIRE(r.rendezvous[0].m_word);
    CHECK(r.rendezvous[0].m_word->length() == 57);
    CHECK(r.profile.min_rank.size() == 31);
    CHECK(r.profile.min_rank.back() > 1);
    const auto j = to_json(r);
    CHECK(j["shortest_reset"].is_null());
    CHECK(j["rendezvous"][0]["m"] == 57);
}

TEST_CASE("analyze a one-state automaton") {
    const AnalysisReport r = analyze(Automaton(1, {{0}, {0}}));
    CHECK(r.synchronizing);
    CHECK(r.shortest_reset->empty());
    CHECK(r.greedy_reset->empty());
    REQUIRE(r.rendezvous.size() == 1);
    CHECK(r.rendezvous[0].k == 1);
    CHECK(r.rendezvous[0].m.value == 0);
    CHECK(r.rendezvous[0].M->value == 0);
    CHECK(r.max_pair_weight == 0);
    CHECK(r.profile.min_rank == std::vector<std::size_t>{1});
}

TEST_CASE("analyze falls back to a bounded table and reports missing data") {
    AnalyzeOptions o;
    o.ks = {2, 3};
    o.limits.lattice_states = 10;
    const AnalysisReport r = analyze(cerny(12), o);
    CHECK(r.table_scope == "bounded");
    CHECK(r.rendezvous[1].m.value == 13);

    o.limits.bounded_nodes = 10;
    o.limits.search_nodes = 10;
    const AnalysisReport starved = analyze(cerny(12), o);
    CHECK(starved.table_scope == "none");
    CHECK(starved.rendezvous.empty());
    CHECK_FALSE(starved.shortest_reset);
    CHECK_FALSE(starved.reset_note.empty());
    CHECK_FALSE(starved.profile_note.empty());
    CHECK(starved.greedy_reset);

    o.ks = {13};
    CHECK_THROWS_AS(analyze(cerny(12), o), std::invalid_argument);
}

TEST_CASE("sweeps are deterministic and independent of thread count") {
    SweepOptions serial;
    SweepOptions parallel;
    parallel.threads = 4;
    const auto a = random_sweep(7, 2, 60, 3, serial);
    const auto b = random_sweep(7, 2, 60, 3, parallel);
    CHECK(rows_csv(a) == rows_csv(b));
    CHECK(aggregates_csv(aggregate(a)) == aggregates_csv(aggregate(b)));
    CHECK(a.front().id == "3");
    CHECK(a.back().id == "62");

    const auto all2 = exhaustive_sweep(2, 2, parallel);
    REQUIRE(all2.size() == 16);
    std::size_t sync = 0;
    for (const auto& r : all2) sync += r.synchronizing;
    // Two-state automata fail to synchronize only when both letters are permutations.
    CHECK(sync == 12);
    CHECK(rows_csv(all2).rfind("id,n,alphabet,synchronizing,reset_length,m3,m4,m5,max_pair_weight,frankl_pin_violations\n", 0) == 0);
}

TEST_CASE("sweep rows") {
    const SweepRow r = sweep_row(cerny(5), "c5");
    CHECK(r.synchronizing);
    CHECK(r.reset_length == 16);
    CHECK(*r.m[0] == 6);
    CHECK(*r.m[1] == 11);
    CHECK(*r.m[2] == 16);
    CHECK(*r.max_pair_weight == 10);
    CHECK(r.frankl_pin_violations == 0);

    const SweepRow p = sweep_row(Automaton(3, {{1, 2, 0}}), "perm");
    CHECK_FALSE(p.synchronizing);
    CHECK(p.reset_length == kInfinity);
    CHECK(*p.m[0] == kInfinity);
    CHECK_FALSE(p.m[1].has_value());
    CHECK_FALSE(p.max_pair_weight.has_value());

    const auto agg = aggregate({r, p});
    CHECK(agg[0].metric == "automata");
    CHECK(agg[0].value == "2");
    CHECK(agg[1].value == "1");
    bool saw_reset = false;
    for (const auto& a : agg) {
        if (a.metric == "max_reset_length") {
            saw_reset = true;
            CHECK(a.value == "16");
            CHECK(a.witness == "c5");
        }
    }
    CHECK(saw_reset);
}
