#include "synchro/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace synchro {

std::string weight_to_string(Weight w) { return w == kInfinity ? "inf" : std::to_string(w); }

namespace {

constexpr std::uint16_t kNoLetter = 0xFFFF;

std::vector<std::vector<std::uint64_t>> binomials(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(k + 2, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (std::size_t j = 1; j <= std::min(i, k + 1); ++j) {
            const std::uint64_t a = c[i - 1][j - 1];
            const std::uint64_t b = j <= i - 1 ? c[i - 1][j] : 0;
            c[i][j] = (a > UINT64_MAX - b) ? UINT64_MAX : a + b;
        }
    }
    return c;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }

struct SearchNode {
    std::uint64_t mask;
    std::uint32_t parent;
    Letter letter;
    std::uint32_t depth;
};

constexpr std::uint32_t kRoot = 0xFFFFFFFF;

// Forward BFS over images of `start`. Returns the index of the first node
// (in discovery order) satisfying `target`, or nullopt once every reachable
// image with depth <= max_depth has been discovered.
template <class Target>
std::optional<std::uint32_t> image_bfs(const MaskImager& imager, std::uint64_t start, std::uint64_t budget,
                                       std::size_t max_depth, std::vector<SearchNode>& nodes, Target target) {
    nodes.clear();
    std::unordered_map<std::uint64_t, std::uint32_t> seen;
    nodes.push_back({start, kRoot, 0, 0});
    seen.emplace(start, 0);
    if (target(start)) return 0;
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        const SearchNode cur = nodes[head];
        if (cur.depth >= max_depth) continue;
        for (Letter a = 0; a < imager.alphabet_size(); ++a) {
            const std::uint64_t img = imager.image(a, cur.mask);
            if (!seen.emplace(img, static_cast<std::uint32_t>(nodes.size())).second) continue;
            if (nodes.size() >= budget) {
                throw BudgetExceeded("image search exceeded " + std::to_string(budget) + " nodes");
            }
            nodes.push_back({img, static_cast<std::uint32_t>(head), a, cur.depth + 1});
            if (target(img)) return static_cast<std::uint32_t>(nodes.size() - 1);
        }
    }
    return std::nullopt;
}

Word path_to(const std::vector<SearchNode>& nodes, std::uint32_t idx) {
    std::vector<Letter> letters;
    for (; nodes[idx].parent != kRoot; idx = nodes[idx].parent) letters.push_back(nodes[idx].letter);
    std::reverse(letters.begin(), letters.end());
    return Word{std::move(letters)};
}

void check_mask_automaton(const Automaton& aut, StateSet s) {
    if (aut.states() > kMaxMaskStates) throw std::out_of_range("state-set searches need n <= 64");
    if (s.empty()) throw std::invalid_argument("empty state set");
    if (s.span_end() > aut.states()) throw std::out_of_range("state set " + to_string(s) + " outside the automaton");
}

}  // namespace

WeightTable::WeightTable(const Automaton& aut, Scope scope, std::size_t k)
    : aut_(aut), imager_(aut), scope_(scope), n_(aut.states()), k_(k) {}

std::size_t WeightTable::index_of(StateSet s) const {
    if (!covers(s)) throw std::out_of_range("state set " + to_string(s) + " is not covered by this weight table");
    if (scope_ == Scope::FullLattice) return static_cast<std::size_t>(s.code());
    std::uint64_t r = layer_offset_[s.size()];
    std::size_t i = 1;
    for (std::uint64_t m = s.code(); m != 0; m &= m - 1, ++i) {
        r += binom_[static_cast<std::size_t>(std::countr_zero(m))][i];
    }
    return static_cast<std::size_t>(r);
}

std::optional<WeightTable::Step> WeightTable::step(StateSet s) const {
    const std::size_t idx = index_of(s);
    if (weights_[idx] == 0 || weights_[idx] == kInfinity) return std::nullopt;
    const Letter a = letter_[idx];
    return Step{a, imager_.image(a, s)};
}

std::optional<Word> WeightTable::witness(StateSet s) const {
    if (weight(s) == kInfinity) return std::nullopt;
    Word w;
    while (auto st = step(s)) {
        w.push_back(st->letter);
        s = st->next;
    }
    return w;
}

std::vector<StateSet> WeightTable::layer(std::size_t size) const {
    if (size > k_) return {};
    return sets_of_size(n_, size);
}

std::uint64_t subsets_up_to(std::size_t n, std::size_t k) {
    k = std::min(k, n);
    const auto c = binomials(n, k);
    std::uint64_t total = 0;
    for (std::size_t p = 1; p <= k; ++p) total = checked_add(total, c[n][p]);
    return total;
}

WeightTable full_weight_table(const Automaton& aut, const Limits& limits) {
    const std::size_t n = aut.states();
    if (n > limits.lattice_states || n > 32) {
        throw BudgetExceeded("full weight table needs n <= " + std::to_string(std::min<std::size_t>(limits.lattice_states, 32)) +
                             ", got n = " + std::to_string(n));
    }
    if (aut.alphabet_size() >= kNoLetter) throw BudgetExceeded("weight tables support at most 65534 letters");

    WeightTable t(aut, WeightTable::Scope::FullLattice, n);
    const std::size_t size = std::size_t{1} << n;
    t.weights_.assign(size, kInfinity);
    t.letter_.assign(size, kNoLetter);

    std::vector<std::uint32_t> queue;
    queue.reserve(size);
    for (State s = 0; s < n; ++s) {
        t.weights_[std::size_t{1} << s] = 0;
        queue.push_back(std::uint32_t{1} << s);
    }

    // Predecessors of T under a are the sets S with a(S) = T: choose a
    // nonempty part of the fiber a^{-1}(t) for every t in T.
    std::vector<std::uint64_t> fibers(n), cur(n);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t target = queue[head];
        const Weight w = t.weights_[target] + 1;
        for (Letter a = 0; a < aut.alphabet_size(); ++a) {
            std::size_t parts = 0;
            bool reachable = true;
            for (std::uint64_t m = target; m != 0; m &= m - 1) {
                const std::uint64_t fib = t.imager_.fiber(a, static_cast<State>(std::countr_zero(m)));
                if (fib == 0) {
                    reachable = false;
                    break;
                }
                fibers[parts] = fib;
                cur[parts] = fib;
                ++parts;
            }
            if (!reachable) continue;
            for (;;) {
                std::uint64_t pred = 0;
                for (std::size_t i = 0; i < parts; ++i) pred |= cur[i];
                if (t.weights_[pred] == kInfinity) {
                    t.weights_[pred] = w;
                    t.letter_[pred] = static_cast<std::uint16_t>(a);
                    queue.push_back(static_cast<std::uint32_t>(pred));
                }
                std::size_t i = 0;
                for (; i < parts; ++i) {
                    cur[i] = (cur[i] - 1) & fibers[i];
                    if (cur[i] != 0) break;
                    cur[i] = fibers[i];
                }
                if (i == parts) break;
            }
        }
    }
    return t;
}

WeightTable bounded_weight_table(const Automaton& aut, std::size_t k, const Limits& limits) {
    const std::size_t n = aut.states();
    if (n > kMaxMaskStates) throw std::out_of_range("bounded weight table needs n <= 64");
    if (k == 0) throw std::invalid_argument("bounded weight table needs k >= 1");
    k = std::min(k, n);
    const std::uint64_t count = subsets_up_to(n, k);
    if (count > limits.bounded_nodes || count >= UINT32_MAX) {
        throw BudgetExceeded("bounded weight table needs " + std::to_string(count) + " nodes, budget is " +
                             std::to_string(limits.bounded_nodes));
    }
    if (aut.alphabet_size() >= kNoLetter) throw BudgetExceeded("weight tables support at most 65534 letters");

    WeightTable t(aut, WeightTable::Scope::SizeBounded, k);
    t.binom_ = binomials(n, k);
    t.layer_offset_.assign(k + 2, 0);
    for (std::size_t p = 1; p <= k; ++p) t.layer_offset_[p + 1] = t.layer_offset_[p] + t.binom_[n][p];

    const std::size_t nodes = static_cast<std::size_t>(count);
    std::vector<std::uint64_t> masks;
    masks.reserve(nodes);
    for (std::size_t p = 1; p <= k; ++p) {
        for (StateSet s : t.layer(p)) masks.push_back(s.code());
    }

    // Reverse adjacency in CSR form, grouped by letter then predecessor index.
    const std::size_t alphabet = aut.alphabet_size();
    std::vector<std::uint32_t> succ(nodes * alphabet);
    std::vector<std::uint32_t> start(nodes + 1, 0);
    for (Letter a = 0; a < alphabet; ++a) {
        for (std::size_t u = 0; u < nodes; ++u) {
            const auto v = static_cast<std::uint32_t>(t.index_of(StateSet{t.imager_.image(a, masks[u])}));
            succ[a * nodes + u] = v;
            ++start[v + 1];
        }
    }
    for (std::size_t v = 0; v < nodes; ++v) start[v + 1] += start[v];
    std::vector<std::uint32_t> pred(nodes * alphabet);
    std::vector<std::uint16_t> pred_letter(nodes * alphabet);
    {
        std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
        for (Letter a = 0; a < alphabet; ++a) {
            for (std::size_t u = 0; u < nodes; ++u) {
                const std::uint32_t v = succ[a * nodes + u];
                pred[fill[v]] = static_cast<std::uint32_t>(u);
                pred_letter[fill[v]] = static_cast<std::uint16_t>(a);
                ++fill[v];
            }
        }
    }
    succ.clear();
    succ.shrink_to_fit();

    t.weights_.assign(nodes, kInfinity);
    t.letter_.assign(nodes, kNoLetter);
    std::vector<std::uint32_t> queue;
    queue.reserve(nodes);
    for (std::uint32_t s = 0; s < n; ++s) {  // layer 1 occupies indices 0..n-1
        t.weights_[s] = 0;
        queue.push_back(s);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t v = queue[head];
        const Weight w = t.weights_[v] + 1;
        for (std::uint32_t e = start[v]; e < start[v + 1]; ++e) {
            const std::uint32_t u = pred[e];
            if (t.weights_[u] != kInfinity) continue;
            t.weights_[u] = w;
            t.letter_[u] = pred_letter[e];
            queue.push_back(u);
        }
    }
    return t;
}

Weight weight(const Automaton& aut, StateSet s, const Limits& limits) {
    check_mask_automaton(aut, s);
    const MaskImager imager(aut);
    std::vector<SearchNode> nodes;
    const auto hit = image_bfs(imager, s.code(), limits.search_nodes, SIZE_MAX, nodes,
                               [](std::uint64_t m) { return std::popcount(m) == 1; });
    return hit ? nodes[*hit].depth : kInfinity;
}

std::optional<Word> witness_word(const Automaton& aut, StateSet s, const Limits& limits) {
    check_mask_automaton(aut, s);
    const MaskImager imager(aut);
    std::vector<SearchNode> nodes;
    const auto hit = image_bfs(imager, s.code(), limits.search_nodes, SIZE_MAX, nodes,
                               [](std::uint64_t m) { return std::popcount(m) == 1; });
    if (!hit) return std::nullopt;
    return path_to(nodes, *hit);
}

RendezvousValue m_value(const WeightTable& table, std::size_t k) {
    if (k == 0 || k > table.max_size()) throw std::out_of_range("m_value: k outside the table");
    RendezvousValue out;
    for (StateSet s : table.layer(k)) {
        const Weight w = table.weight(s);
        if (w == kInfinity) continue;
        if (w < out.value) {
            out.value = w;
            out.witness = s;
            out.ties = 1;
        } else if (w == out.value) {
            ++out.ties;
        }
    }
    return out;
}

std::optional<RendezvousValue> M_value(const WeightTable& table, std::size_t k) {
    if (k == 0 || k > table.max_size()) throw std::out_of_range("M_value: k outside the table");
    std::optional<RendezvousValue> out;
    for (StateSet s : table.layer(k)) {
        const Weight w = table.weight(s);
        if (w == kInfinity) continue;
        if (!out || w > out->value) {
            out = RendezvousValue{w, s, 1};
        } else if (w == out->value) {
            ++out->ties;
        }
    }
    return out;
}

std::optional<Word> shortest_reset_word(const Automaton& aut, const Limits& limits) {
    if (aut.states() > kMaxMaskStates) throw std::out_of_range("shortest_reset_word needs n <= 64");
    return witness_word(aut, StateSet::full(aut.states()), limits);
}

PairTable::PairTable(const Automaton& aut) : aut_(aut), n_(aut.states()) {
    const std::size_t pairs = n_ * (n_ - 1) / 2;
    dist_.assign(pairs, kInfinity);
    next_.assign(pairs, 0);

    std::vector<std::uint32_t> queue;
    queue.reserve(pairs);
    for (State v = 1; v < n_; ++v) {
        for (State u = 0; u < v; ++u) {
            for (Letter a = 0; a < aut.alphabet_size(); ++a) {
                if (aut.next(a, u) == aut.next(a, v)) {
                    dist_[index(u, v)] = 1;
                    next_[index(u, v)] = a;
                    queue.push_back(static_cast<std::uint32_t>(index(u, v)));
                    break;
                }
            }
        }
    }

    // Reverse pair graph, grouped by letter.
    std::vector<std::uint32_t> start(pairs + 1, 0);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (target, source) per letter
    for (Letter a = 0; a < aut.alphabet_size(); ++a) {
        for (State v = 1; v < n_; ++v) {
            for (State u = 0; u < v; ++u) {
                const State x = aut.next(a, u), y = aut.next(a, v);
                if (x == y) continue;
                edges.emplace_back(static_cast<std::uint32_t>(index(x, y)), static_cast<std::uint32_t>(index(u, v)));
                ++start[index(x, y) + 1];
            }
        }
    }
    for (std::size_t p = 0; p < pairs; ++p) start[p + 1] += start[p];
    std::vector<std::uint32_t> rev(edges.size());
    std::vector<Letter> rev_letter(edges.size());
    {
        std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
        std::size_t e = 0;
        for (Letter a = 0; a < aut.alphabet_size(); ++a) {
            for (State v = 1; v < n_; ++v) {
                for (State u = 0; u < v; ++u) {
                    if (aut.next(a, u) == aut.next(a, v)) continue;
                    const auto [target, source] = edges[e++];
                    rev[fill[target]] = source;
                    rev_letter[fill[target]] = a;
                    ++fill[target];
                }
            }
        }
    }

    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t p = queue[head];
        for (std::uint32_t e = start[p]; e < start[p + 1]; ++e) {
            const std::uint32_t q = rev[e];
            if (dist_[q] != kInfinity) continue;
            dist_[q] = dist_[p] + 1;
            next_[q] = rev_letter[e];
            queue.push_back(q);
        }
    }
}

Weight PairTable::distance(State u, State v) const {
    if (u >= n_ || v >= n_) throw std::out_of_range("pair state outside the automaton");
    return u == v ? 0 : dist_[index(u, v)];
}

std::optional<Word> PairTable::merging_word(State u, State v) const {
    if (distance(u, v) == kInfinity) return std::nullopt;
    Word w;
    while (u != v) {
        const Letter a = next_[index(u, v)];
        w.push_back(a);
        u = aut_.next(a, u);
        v = aut_.next(a, v);
    }
    return w;
}

bool PairTable::all_pairs_mergeable() const {
    return std::none_of(dist_.begin(), dist_.end(), [](Weight w) { return w == kInfinity; });
}

Weight PairTable::max_finite_distance() const {
    Weight best = 0;
    for (Weight w : dist_) {
        if (w != kInfinity) best = std::max(best, w);
    }
    return best;
}

bool is_synchronizing(const Automaton& aut) { return PairTable(aut).all_pairs_mergeable(); }

Word greedy_reset_word(const Automaton& aut) {
    const PairTable pairs(aut);
    if (!pairs.all_pairs_mergeable()) throw std::invalid_argument("greedy_reset_word: automaton is not synchronizing");
    std::vector<State> current(aut.states());
    for (State s = 0; s < aut.states(); ++s) current[s] = s;
    Word out;
    std::vector<char> mark(aut.states());
    while (current.size() > 1) {
        State bu = current[0], bv = current[1];
        for (std::size_t i = 0; i < current.size(); ++i) {
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                if (pairs.distance(current[i], current[j]) < pairs.distance(bu, bv)) {
                    bu = current[i];
                    bv = current[j];
                }
            }
        }
        const Word w = *pairs.merging_word(bu, bv);
        std::fill(mark.begin(), mark.end(), 0);
        for (State s : current) {
            for (Letter a : w) s = aut.next(a, s);
            mark[s] = 1;
        }
        current.clear();
        for (State s = 0; s < aut.states(); ++s) {
            if (mark[s]) current.push_back(s);
        }
        out.append(w);
    }
    return out;
}

RankProfile min_rank_profile(const Automaton& aut, std::size_t max_length, const Limits& limits) {
    if (aut.states() > kMaxMaskStates) throw std::out_of_range("min_rank_profile needs n <= 64");
    const MaskImager imager(aut);
    std::vector<SearchNode> nodes;
    image_bfs(imager, StateSet::full(aut.states()).code(), limits.search_nodes, max_length, nodes,
              [](std::uint64_t) { return false; });
    RankProfile p;
    p.min_rank.assign(max_length + 1, aut.states());
    for (const auto& node : nodes) {
        auto& slot = p.min_rank[node.depth];
        slot = std::min<std::size_t>(slot, static_cast<std::size_t>(std::popcount(node.mask)));
    }
    for (std::size_t l = 1; l <= max_length; ++l) p.min_rank[l] = std::min(p.min_rank[l], p.min_rank[l - 1]);
    return p;
}

ClosedSetReport minimal_closed_sets(const Automaton& aut) {
    // Iterative Tarjan over s -> a(s).
    const std::size_t n = aut.states();
    const std::size_t alphabet = aut.alphabet_size();
    constexpr std::uint32_t kUnset = 0xFFFFFFFF;
    std::vector<std::uint32_t> order(n, kUnset), low(n, 0), comp(n, kUnset);
    std::vector<char> on_stack(n, 0);
    std::vector<State> stack;
    std::vector<std::pair<State, Letter>> call;
    std::uint32_t counter = 0, components = 0;

    for (State root = 0; root < n; ++root) {
        if (order[root] != kUnset) continue;
        call.emplace_back(root, 0);
        order[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [s, a] = call.back();
            if (a < alphabet) {
                const State t = aut.next(a++, s);
                if (order[t] == kUnset) {
                    order[t] = low[t] = counter++;
                    stack.push_back(t);
                    on_stack[t] = 1;
                    call.emplace_back(t, 0);
                } else if (on_stack[t]) {
                    low[s] = std::min(low[s], order[t]);
                }
                continue;
            }
            const State done = s;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == order[done]) {
                State x;
                do {
                    x = stack.back();
                    stack.pop_back();
                    on_stack[x] = 0;
                    comp[x] = components;
                } while (x != done);
                ++components;
            }
        }
    }

    std::vector<char> is_sink(components, 1);
    for (State s = 0; s < n; ++s) {
        for (Letter a = 0; a < alphabet; ++a) {
            if (comp[aut.next(a, s)] != comp[s]) is_sink[comp[s]] = 0;
        }
    }
    ClosedSetReport report;
    std::vector<std::int64_t> slot(components, -1);
    for (State s = 0; s < n; ++s) {
        const std::uint32_t c = comp[s];
        if (!is_sink[c]) continue;
        if (slot[c] < 0) {
            slot[c] = static_cast<std::int64_t>(report.minimal_closed.size());
            report.minimal_closed.push_back({});
        }
        report.minimal_closed[static_cast<std::size_t>(slot[c])].states.push_back(s);
    }
    return report;
}

Weight min_merge_length(const Automaton& aut, StateSet s, const Limits& limits) {
    check_mask_automaton(aut, s);
    if (s.size() < 2) throw std::invalid_argument("min_merge_length needs |S| >= 2");
    const MaskImager imager(aut);
    const int size = static_cast<int>(s.size());
    std::vector<SearchNode> nodes;
    const auto hit = image_bfs(imager, s.code(), limits.search_nodes, SIZE_MAX, nodes,
                               [size](std::uint64_t m) { return std::popcount(m) < size; });
    return hit ? nodes[*hit].depth : kInfinity;
}

}  // namespace synchro
