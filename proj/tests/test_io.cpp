#include <doctest.h>

#include <filesystem>
#include <regex>

#include "synchro/generators.hpp"
#include "synchro/io.hpp"

using namespace synchro;

namespace {

std::size_t count_matches(const std::string& text, const std::string& pattern) {
    const std::regex re(pattern);
    return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                                                  std::sregex_iterator()));
}

}  // namespace

TEST_CASE("canonical JSON for the 4-state Cerny automaton") {
    const std::string expected =
        "{\n  \"name\": \"cerny-4\",\n  \"n\": 4,\n  \"letters\": {\n    \"f\": [1,2,3,0],\n    \"g\": [1,1,2,3]\n  }\n}\n";
    CHECK(io::to_json(cerny(4)) == expected);
    CHECK(io::from_json(expected) == cerny(4));
}

TEST_CASE("serialization round trip") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Automaton a = random_automaton(1 + seed % 13, 1 + seed % 4, seed);
        CHECK(io::from_json(io::to_json(a)) == a);
    }
    for (const Automaton& a : {construction_triple(21), construction_general(48, 4), enumerated_automaton(3, 3, 77),
                               Automaton(2, {{1, 0}, {0, 0}}, {"zeta", "alpha"}, "odd \"name\"")}) {
        const Automaton back = io::from_json(io::to_json(a));
        CHECK(back == a);
        CHECK(back.letter_names() == a.letter_names());
    }
    const auto path = std::filesystem::temp_directory_path() / "synchro_io_roundtrip.json";
    io::write_automaton(path, cerny(7));
    CHECK(io::read_automaton(path) == cerny(7));
    std::filesystem::remove(path);
}

TEST_CASE("JSON parsing tolerates an absent name and rejects malformed input") {
    CHECK(io::from_json(R"({"n": 2, "letters": [[1, 0]]})").name().empty());
    CHECK(io::from_json(R"({"n": 2, "letters": {"b": [1, 0], "a": [0, 0]}})").letter_names() ==
          std::vector<std::string>{"b", "a"});
    CHECK_THROWS_AS(io::from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(io::from_json("[]"), std::invalid_argument);
    CHECK_THROWS_AS(io::from_json(R"({"letters": [[0]]})"), std::invalid_argument);
    CHECK_THROWS_AS(io::from_json(R"({"n": 0, "letters": [[]]})"), std::invalid_argument);
    CHECK_THROWS_AS(io::from_json(R"({"n": 2, "letters": [[0, 2]]})"), std::invalid_argument);
    CHECK_THROWS_AS(io::from_json(R"({"n": 2, "letters": [[0, -1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(io::from_json(R"({"n": 2, "letters": [[0]]})"), std::invalid_argument);
    CHECK_THROWS_AS(io::from_json(R"({"n": 2, "letters": 3})"), std::invalid_argument);
    CHECK_THROWS_AS(io::from_json(R"({"n": 2, "name": 4, "letters": [[0, 0]]})"), std::invalid_argument);
    CHECK_THROWS_AS(io::read_automaton("/nonexistent/automaton.json"), std::invalid_argument);
}

TEST_CASE("state graph DOT") {
    const std::string triple = io::state_dot(construction_triple(21));
    CHECK(count_matches(triple, R"(\n  \d+( \[shape=doublecircle\])?;)") == 21);
    CHECK(count_matches(triple, R"( -> )") == 42);
    CHECK(count_matches(triple, R"(label="f")") == 21);

    const std::string one = io::state_dot(Automaton(1, {{0}}));
    CHECK(count_matches(one, R"(\n  \d+( \[shape=doublecircle\])?;)") == 1);
    CHECK(count_matches(one, "doublecircle") == 1);

    // Cerny: the whole state set is the unique minimal closed set.
    CHECK(count_matches(io::state_dot(cerny(5)), "doublecircle") == 5);
    // Two fixed points: two singleton closed sets.
    CHECK(count_matches(io::state_dot(Automaton(3, {{0, 0, 2}})), "doublecircle") == 2);
}

TEST_CASE("lattice DOT") {
    const std::string dot = io::lattice_dot(cerny(4), 4);
    CHECK(count_matches(dot, R"(\n  s\d+ \[label=)") == 15);
    CHECK(count_matches(dot, R"( -> )") == 30);
    CHECK(count_matches(dot, R"(rank=same)") == 4);
    CHECK(dot.find("s15 [label=\"{1,2,3,4}\"]") != std::string::npos);
    // g sends {1,2,3,4} to {2,3,4}.
    CHECK(dot.find("s15 -> s14 [label=\"g\"]") != std::string::npos);

    CHECK(count_matches(io::lattice_dot(cerny(6), 2), R"(\n  s\d+ \[label=)") == 6 + 15);
    CHECK(count_matches(io::lattice_dot(Automaton(1, {{0}}), 3), R"(\n  s\d+ \[label=)") == 1);
    CHECK_THROWS_AS(io::lattice_dot(cerny(30), 30, 1000), std::invalid_argument);
    CHECK_THROWS_AS(io::lattice_dot(cerny(4), 0), std::invalid_argument);
}

TEST_CASE("CSV quoting") {
    CHECK(io::csv_field("plain") == "plain");
    CHECK(io::csv_field("{1,2}") == "\"{1,2}\"");
    CHECK(io::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}
