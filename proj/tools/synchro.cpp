// synchro: generate, analyze, verify, export and sweep automata.
//
// Exit codes: 0 success, 1 a verify claim failed, 2 usage or precondition error.

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "synchro/analysis.hpp"
#include "synchro/claims.hpp"
#include "synchro/generators.hpp"
#include "synchro/io.hpp"

namespace {

constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

void add_caps(CLI::App* cmd, synchro::Limits& limits) {
    cmd->add_option("--cap-lattice", limits.lattice_states, "largest n for the full subset lattice")
        ->capture_default_str();
    cmd->add_option("--cap-nodes", limits.bounded_nodes, "node cap for size-bounded tables")->capture_default_str();
    cmd->add_option("--cap-search", limits.search_nodes, "node cap for forward image searches")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synchronization quantities of deterministic finite automata"};
    app.require_subcommand(1);
    app.set_version_flag("--version", synchro::kToolVersion);

    // gen
    std::string family, gen_out;
    std::size_t gen_n = 0, gen_k = 4, gen_alphabet = 2;
    std::uint64_t gen_seed = 1;
    auto* gen = app.add_subcommand("gen", "write a generated automaton as JSON");
    gen->add_option("family", family, "cerny | triple | general | random")
        ->required()
        ->check(CLI::IsMember({"cerny", "triple", "general", "random"}));
    gen->add_option("n", gen_n, "number of states")->required();
    gen->add_option("--k", gen_k, "set size targeted by the general construction")->capture_default_str();
    gen->add_option("--seed", gen_seed, "random family seed")->capture_default_str();
    gen->add_option("--alphabet", gen_alphabet, "random family alphabet size")->capture_default_str();
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // analyze
    std::string analyze_file, analyze_format = "json", analyze_out;
    std::vector<std::size_t> analyze_ks;
    std::size_t profile_length = 0;
    synchro::AnalyzeOptions analyze_opts;
    auto* analyze = app.add_subcommand("analyze", "report reset words, rendezvous values, rank profile, closed sets");
    analyze->add_option("file", analyze_file, "automaton JSON")->required()->check(CLI::ExistingFile);
    analyze->add_option("--k", analyze_ks, "set sizes for m(k) and M(k), e.g. --k 2,3")->delimiter(',');
    analyze->add_option("--format", analyze_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    analyze->add_option("--profile-length", profile_length, "rank profile length (default (n^3-n)/6)");
    analyze->add_option("-o,--output", analyze_out, "output file (default stdout)");
    add_caps(analyze, analyze_opts.limits);

    // verify
    std::string suite, verify_format = "table", verify_out;
    synchro::SuiteOptions suite_opts;
    auto* verify = app.add_subcommand("verify", "run a claim suite; exit 1 if any claim fails");
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(synchro::suite_names()));
    verify->add_option("--n-max", suite_opts.n_max, "cerny suite: largest n")->capture_default_str();
    verify->add_option("--count", suite_opts.random_count, "random suite: number of automata")->capture_default_str();
    verify->add_option("--random-n", suite_opts.random_n, "random suite: states per automaton")
        ->capture_default_str();
    verify->add_option("--seed", suite_opts.random_seed, "random suite: first seed")->capture_default_str();
    verify->add_option("--threads", suite_opts.threads, "worker threads for sweeps")->capture_default_str();
    verify->add_option("--format", verify_format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    verify->add_option("-o,--output", verify_out, "output file (default stdout)");
    add_caps(verify, suite_opts.limits);

    // export-dot
    std::string dot_file, dot_out;
    std::size_t dot_layer = 0, dot_max_nodes = 100000;
    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of the state graph or the subset lattice");
    dot->add_option("file", dot_file, "automaton JSON")->required()->check(CLI::ExistingFile);
    dot->add_option("--lattice", dot_layer, "render the transition graph on sets of size <= k");
    dot->add_option("--max-nodes", dot_max_nodes, "refuse lattices with more sets")->capture_default_str();
    dot->add_option("-o,--output", dot_out, "output file (default stdout)");

    // sweep
    std::string mode, sweep_out, summary_out;
    std::size_t sweep_n = 4, sweep_alphabet = 2, sweep_count = 1000;
    std::uint64_t sweep_seed = 1;
    bool no_merge_check = false;
    synchro::SweepOptions sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "per-automaton rows and aggregates over a family");
    sweep->add_option("mode", mode, "exhaustive | random")
        ->required()
        ->check(CLI::IsMember({"exhaustive", "random"}));
    sweep->add_option("--n", sweep_n, "states")->capture_default_str();
    sweep->add_option("--alphabet", sweep_alphabet, "letters")->capture_default_str();
    sweep->add_option("--count", sweep_count, "random mode: number of automata")->capture_default_str();
    sweep->add_option("--seed", sweep_seed, "random mode: first seed")->capture_default_str();
    sweep->add_option("--threads", sweep_opts.threads, "worker threads")->capture_default_str();
    sweep->add_flag("--no-merge-check", no_merge_check, "skip the per-subset shrinking-length check");
    sweep->add_option("-o,--output", sweep_out, "row CSV (default stdout)");
    sweep->add_option("--summary", summary_out, "aggregate CSV file");
    add_caps(sweep, sweep_opts.limits);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            synchro::Automaton aut = [&] {
                if (family == "cerny") return synchro::cerny(gen_n);
                if (family == "triple") return synchro::construction_triple(gen_n);
                if (family == "general") return synchro::construction_general(gen_n, gen_k);
                return synchro::random_automaton(gen_n, gen_alphabet, gen_seed);
            }();
            emit(synchro::io::to_json(aut), gen_out);
            return 0;
        }
        if (analyze->parsed()) {
            const auto aut = synchro::io::read_automaton(analyze_file);
            analyze_opts.ks = analyze_ks;
            if (analyze->count("--profile-length") > 0) analyze_opts.profile_length = profile_length;
            const auto report = synchro::analyze(aut, analyze_opts);
            emit(analyze_format == "json" ? synchro::to_json(report).dump(2) + "\n" : synchro::to_csv(report),
                 analyze_out);
            return 0;
        }
        if (verify->parsed()) {
            const auto claims = synchro::run_suite(suite, suite_opts);
            if (verify_format == "json") {
                emit(synchro::claims_json(suite, suite_opts, claims).dump(2) + "\n", verify_out);
            } else if (verify_format == "csv") {
                emit(synchro::claims_csv(claims), verify_out);
            } else {
                emit(synchro::claims_table(claims), verify_out);
            }
            return synchro::all_pass(claims) ? 0 : kExitClaimFailure;
        }
        if (dot->parsed()) {
            const auto aut = synchro::io::read_automaton(dot_file);
            emit(dot_layer == 0 ? synchro::io::state_dot(aut) : synchro::io::lattice_dot(aut, dot_layer, dot_max_nodes),
                 dot_out);
            return 0;
        }
        if (sweep->parsed()) {
            sweep_opts.merge_check = !no_merge_check;
            std::vector<synchro::SweepRow> rows;
            if (mode == "exhaustive") {
                if (sweep_n > 4) throw UsageError("exhaustive sweeps are limited to n <= 4");
                rows = synchro::exhaustive_sweep(sweep_n, sweep_alphabet, sweep_opts);
            } else {
                rows = synchro::random_sweep(sweep_n, sweep_alphabet, sweep_count, sweep_seed, sweep_opts);
            }
            emit(synchro::rows_csv(rows), sweep_out);
            if (!summary_out.empty()) emit(synchro::aggregates_csv(synchro::aggregate(rows)), summary_out);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "synchro: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
