#include "synchro/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "synchro/lattice.hpp"

namespace synchro::io {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string row_json(const std::vector<State>& row) { return ordered_json(row).dump(); }

std::string dot_id(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::vector<State> parse_row(const ordered_json& j, const std::string& letter) {
    if (!j.is_array()) throw std::invalid_argument("letter " + letter + ": row must be an array");
    std::vector<State> row;
    row.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
            throw std::invalid_argument("letter " + letter + ": entries must be nonnegative integers");
        }
        row.push_back(static_cast<State>(v.get<std::int64_t>()));
    }
    return row;
}

}  // namespace

std::string to_json(const Automaton& aut) {
    std::ostringstream out;
    out << "{\n  \"name\": " << ordered_json(aut.name()).dump() << ",\n  \"n\": " << aut.states() << ",\n  \"letters\": ";
    const bool named = aut.has_letter_names();
    out << (named ? "{\n" : "[\n");
    for (Letter a = 0; a < aut.alphabet_size(); ++a) {
        out << "    ";
        if (named) out << ordered_json(aut.letter_names()[a]).dump() << ": ";
        out << row_json(aut.row(a)) << (a + 1 < aut.alphabet_size() ? ",\n" : "\n");
    }
    out << (named ? "  }\n}\n" : "  ]\n}\n");
    return out.str();
}

Automaton from_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("automaton JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("automaton JSON must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 1) {
        throw std::invalid_argument("automaton JSON needs a positive integer \"n\"");
    }
    if (!j.contains("letters")) throw std::invalid_argument("automaton JSON needs \"letters\"");
    const auto n = static_cast<std::size_t>(j["n"].get<std::int64_t>());
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw std::invalid_argument("\"name\" must be a string");
        name = j["name"].get<std::string>();
    }
    std::vector<std::vector<State>> rows;
    std::vector<std::string> names;
    const auto& letters = j["letters"];
    if (letters.is_object()) {
        for (const auto& [key, value] : letters.items()) {
            names.push_back(key);
            rows.push_back(parse_row(value, key));
        }
    } else if (letters.is_array()) {
        for (std::size_t a = 0; a < letters.size(); ++a) rows.push_back(parse_row(letters[a], std::to_string(a)));
    } else {
        throw std::invalid_argument("\"letters\" must be an object or a list of rows");
    }
    return Automaton(n, std::move(rows), std::move(names), std::move(name));
}

Automaton read_automaton(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

void write_automaton(const std::filesystem::path& path, const Automaton& aut) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path.string());
    out << to_json(aut);
}

std::string state_dot(const Automaton& aut) {
    std::vector<char> closed(aut.states(), 0);
    for (const auto& c : minimal_closed_sets(aut).minimal_closed) {
        for (State s : c.states) closed[s] = 1;
    }
    std::ostringstream out;
    out << "digraph " << dot_id(aut.name().empty() ? "automaton" : aut.name()) << " {\n";
    out << "  rankdir=LR;\n  node [shape=circle];\n";
    for (State s = 0; s < aut.states(); ++s) {
        out << "  " << s + 1;
        if (closed[s]) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (State s = 0; s < aut.states(); ++s) {
        for (Letter a = 0; a < aut.alphabet_size(); ++a) {
            out << "  " << s + 1 << " -> " << aut.next(a, s) + 1 << " [label=" << dot_id(aut.letter_label(a)) << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string lattice_dot(const Automaton& aut, std::size_t max_layer, std::size_t max_nodes) {
    if (aut.states() > kMaxMaskStates) throw std::invalid_argument("lattice rendering needs n <= 64");
    if (max_layer == 0) throw std::invalid_argument("lattice rendering needs at least layer 1");
    max_layer = std::min(max_layer, aut.states());
    if (subsets_up_to(aut.states(), max_layer) > max_nodes) {
        throw std::invalid_argument("lattice has more than " + std::to_string(max_nodes) + " sets up to layer " +
                                    std::to_string(max_layer));
    }
    const MaskImager imager(aut);

    std::ostringstream out;
    out << "digraph " << dot_id((aut.name().empty() ? std::string("automaton") : aut.name()) + "-lattice") << " {\n";
    out << "  rankdir=TB;\n  node [shape=box];\n";
    for (std::size_t layer = max_layer; layer >= 1; --layer) {
        out << "  { rank=same;";
        for (StateSet s : sets_of_size(aut.states(), layer)) out << " s" << s.code();
        out << " }\n";
    }
    for (std::size_t layer = max_layer; layer >= 1; --layer) {
        for (StateSet s : sets_of_size(aut.states(), layer)) {
            out << "  s" << s.code() << " [label=" << dot_id(to_string(s)) << "];\n";
        }
    }
    for (std::size_t layer = max_layer; layer >= 1; --layer) {
        for (StateSet s : sets_of_size(aut.states(), layer)) {
            for (Letter a = 0; a < aut.alphabet_size(); ++a) {
                out << "  s" << s.code() << " -> s" << imager.image(a, s).code() << " [label=" << dot_id(aut.letter_label(a))
                    << "];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace synchro::io
