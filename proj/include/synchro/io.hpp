#pragma once

// Automaton JSON files and Graphviz renderings.
//
// File format (entries are 0-indexed images):
//   {"name": "cerny-4", "n": 4, "letters": {"f": [1,2,3,0], "g": [1,1,2,3]}}
// "letters" may also be a list of rows for unnamed letters. Object key order
// is the letter order.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "synchro/automaton.hpp"

namespace synchro::io {

/// Canonical text: same automaton, same bytes.
std::string to_json(const Automaton& aut);
/// Throws std::invalid_argument on malformed input or a violated invariant.
Automaton from_json(std::string_view text);

Automaton read_automaton(const std::filesystem::path& path);
void write_automaton(const std::filesystem::path& path, const Automaton& aut);

/// State graph: one node per state (1-indexed), one edge per letter and
/// state, states of minimal closed sets double-circled.
std::string state_dot(const Automaton& aut);
/// Transition graph restricted to sets of size <= max_layer, ranked by set
/// size. Throws std::invalid_argument past `max_nodes` subsets.
std::string lattice_dot(const Automaton& aut, std::size_t max_layer, std::size_t max_nodes = 100000);

/// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(std::string_view s);

}  // namespace synchro::io
