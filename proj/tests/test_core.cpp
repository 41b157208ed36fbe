#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "synchro/automaton.hpp"
#include "synchro/generators.hpp"

using namespace synchro;

TEST_CASE("state set encoding") {
    const StateSet s = StateSet::of({0, 1, 3});
    CHECK(s.code() == 0b1011);
    CHECK(s.size() == 3);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));
    CHECK(s.span_end() == 4);
    CHECK(to_string(s) == "{1,2,4}");
    CHECK(to_string(StateSet{}) == "{}");
    CHECK(StateSet::singleton(5).code() == 32);
    CHECK(StateSet::full(64).code() == ~std::uint64_t{0});
    CHECK(StateSet::full(0).empty());
    CHECK(StateSet::of({1}).is_subset_of(s));
    CHECK_FALSE(StateSet::of({2}).is_subset_of(s));
    CHECK((s | StateSet::of({2})) == StateSet::full(4));
    CHECK((s & StateSet::of({1, 2})) == StateSet::of({1}));
    CHECK(s.members() == std::vector<State>{0, 1, 3});
    CHECK_THROWS_AS(StateSet::of({64}), std::out_of_range);
    CHECK_THROWS_AS(StateSet::full(65), std::out_of_range);
}

TEST_CASE("same-size enumeration is complete and ascending") {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::size_t k = 0; k <= n + 1; ++k) {
            const auto sets = sets_of_size(n, k);
            std::size_t expected = 0;
            for (std::uint64_t c = 1; c < (std::uint64_t{1} << n); ++c) expected += oracle::popcount(c) == int(k);
            CHECK(sets.size() == expected);
            for (std::size_t i = 1; i < sets.size(); ++i) CHECK(sets[i - 1] < sets[i]);
            for (StateSet s : sets) CHECK(s.size() == k);
        }
    }
    CHECK(sets_of_size(64, 63).size() == 64);
    CHECK(sets_of_size(64, 64).size() == 1);
}

TEST_CASE("automaton validation") {
    CHECK_THROWS_AS(Automaton(0, {{}}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(2, {{0}}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(2, {{0, 1}, {1, 0}}, {"a"}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(2, {{0, 1}, {1, 0}}, {"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(2, {{0, 1}}, {""}), std::invalid_argument);
    const Automaton aut(2, {{0, 1}, {1, 0}}, {"a", "b"}, "x");
    CHECK(aut.letter_label(1) == "b");
    CHECK(aut.renamed("y").name() == "y");
    CHECK(Automaton(2, {{0, 1}}).letter_label(0) == "0");
}

TEST_CASE("words apply left to right") {
    const Automaton aut(3, {{1, 2, 0}, {0, 0, 2}}, {"f", "g"});
    // fg: f first, then g.
    CHECK(transformation(aut, Word{0, 1}) == std::vector<State>{0, 2, 0});
    CHECK(transformation(aut, Word{1, 0}) == std::vector<State>{1, 1, 0});
    CHECK(apply_word(aut, Word{0, 1}, StateSet::full(3)) == StateSet::of({0, 2}));
    CHECK(apply_word(aut, Word{}, StateSet::of({1})) == StateSet::of({1}));
    CHECK(rank(aut, Word{0, 1}) == 2);
    CHECK(rank(aut, Word{}) == 3);
    CHECK(preimage_counts(aut, Word{0, 1}) == std::vector<std::size_t>{2, 0, 1});
    CHECK_THROWS_AS(apply_letter(aut, 0, StateSet{}), std::invalid_argument);
    CHECK_THROWS_AS(apply_letter(aut, 2, StateSet::of({0})), std::out_of_range);
    CHECK_THROWS_AS(apply_letter(aut, 0, StateSet::of({3})), std::out_of_range);
    CHECK_THROWS_AS(transformation(aut, Word{5}), std::out_of_range);
}

TEST_CASE("word text round trip") {
    const Automaton named(2, {{0, 1}, {1, 0}}, {"f", "g"});
    CHECK(format_word(named, Word{1, 0, 0}) == "gff");
    CHECK(parse_word(named, "gff") == Word{1, 0, 0});
    CHECK(parse_word(named, "").empty());
    CHECK_THROWS_AS(parse_word(named, "gx"), std::invalid_argument);

    const Automaton unnamed(2, {{0, 1}, {1, 0}, {0, 0}});
    CHECK(format_word(unnamed, Word{2, 0, 1}) == "2,0,1");
    CHECK(parse_word(unnamed, "2,0,1") == Word{2, 0, 1});
    CHECK_THROWS_AS(parse_word(unnamed, "3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(unnamed, "1,,0"), std::invalid_argument);

    const Automaton long_names(2, {{0, 1}, {1, 0}}, {"up", "down"});
    CHECK(format_word(long_names, Word{1, 0}) == "1,0");

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Word w;
        for (std::size_t i = rng() % 12; i > 0; --i) w.push_back(static_cast<Letter>(rng() % 3));
        CHECK(parse_word(unnamed, format_word(unnamed, w)) == w);
    }
}

TEST_CASE("mask images match state-by-state images") {
    std::mt19937_64 rng(11);
    for (std::size_t n : {1, 3, 8, 9, 17, 33, 64}) {
        const Automaton aut = random_automaton(n, 3, n);
        const MaskImager imager(aut);
        for (int trial = 0; trial < 300; ++trial) {
            std::uint64_t mask = rng();
            if (n < 64) mask &= (std::uint64_t{1} << n) - 1;
            if (mask == 0) continue;
            for (Letter a = 0; a < 3; ++a) {
                CHECK(imager.image(a, mask) == oracle::image(aut, a, mask));
                CHECK(imager.image(a, StateSet{mask}) == apply_letter(aut, a, StateSet{mask}));
            }
        }
        for (Letter a = 0; a < 3; ++a) {
            std::uint64_t all = 0;
            for (State t = 0; t < n; ++t) {
                const std::uint64_t fib = imager.fiber(a, t);
                CHECK((fib & all) == 0);
                all |= fib;
                for (State s = 0; s < n; ++s) CHECK((((fib >> s) & 1u) != 0) == (aut.next(a, s) == t));
            }
        }
    }
    CHECK_THROWS_AS(MaskImager(random_automaton(65, 1, 1)), std::out_of_range);
}

TEST_CASE("transformations work beyond 64 states") {
    const Automaton aut = cerny(100);
    const auto map = transformation(aut, Word::power(0, 100));
    for (State s = 0; s < 100; ++s) CHECK(map[s] == s);
    CHECK(rank(aut, Word{1}) == 99);
}
