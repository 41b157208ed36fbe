#include "synchro/generators.hpp"

#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace synchro {

State GadgetLayout::gadget_state(std::size_t i, std::size_t j) const {
    if (i >= gadget_sizes.size() || j == 0 || j > gadget_sizes[i]) {
        throw std::out_of_range("no gadget state a^(" + std::to_string(i) + ")_" + std::to_string(j));
    }
    std::size_t offset = 0;
    for (std::size_t b = 0; b < i; ++b) offset += gadget_sizes[b];
    return static_cast<State>(offset + j - 1);
}

State GadgetLayout::x_state(std::size_t t) const {
    if (t == 0 || t > x_size) throw std::out_of_range("no state x_" + std::to_string(t));
    return static_cast<State>(n - x_size + t - 1);
}

StateSet GadgetLayout::gadget_set(std::size_t i) const {
    std::uint64_t code = 0;
    for (std::size_t j = 1; j <= gadget_sizes.at(i); ++j) code |= std::uint64_t{1} << gadget_state(i, j);
    return StateSet{code};
}

StateSet GadgetLayout::x_set() const {
    if (n > kMaxMaskStates) throw std::out_of_range("x_set needs n <= 64");
    return StateSet{StateSet::full(n).code() & ~StateSet::full(n - x_size).code()};
}

std::size_t GadgetLayout::block_of(State s) const {
    std::size_t offset = 0;
    for (std::size_t i = 0; i < gadget_sizes.size(); ++i) {
        offset += gadget_sizes[i];
        if (s < offset) return i;
    }
    return gadget_sizes.size();
}

Automaton cerny(std::size_t n) {
    if (n < 2) throw std::invalid_argument("cerny(n) requires n >= 2");
    std::vector<State> f(n), g(n);
    for (State i = 0; i < n; ++i) {
        f[i] = static_cast<State>((i + 1) % n);
        g[i] = i;
    }
    g[0] = 1;
    return Automaton(n, {std::move(f), std::move(g)}, {"f", "g"}, "cerny-" + std::to_string(n));
}

namespace {

// f cycles X and sends a^{(i)}_j to x_{iq+j}, except a^{(i)}_{|A_i|} -> a^{(i)}_1;
// g cycles each A_i and rotates each window x_{iq+1..iq+|A_i|}.
Automaton build_gadget_automaton(const GadgetLayout& L, std::string name) {
    std::vector<State> f(L.n), g(L.n);
    for (std::size_t t = 1; t <= L.x_size; ++t) {
        f[L.x_state(t)] = L.x_state(t == L.x_size ? 1 : t + 1);
        g[L.x_state(t)] = L.x_state(t);
    }
    for (std::size_t i = 0; i < L.gadget_sizes.size(); ++i) {
        const std::size_t size = L.gadget_sizes[i];
        const std::size_t base = i * L.spacing;
        for (std::size_t j = 1; j <= size; ++j) {
            const State a = L.gadget_state(i, j);
            f[a] = j == size ? L.gadget_state(i, 1) : L.x_state(base + j);
            g[a] = L.gadget_state(i, j == size ? 1 : j + 1);
            const State x = L.x_state(base + j);
            g[x] = L.x_state(j == size ? base + 1 : base + j + 1);
        }
    }
    return Automaton(L.n, {std::move(f), std::move(g)}, {"f", "g"}, std::move(name));
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

GadgetLayout triple_layout(std::size_t n) {
    if (n < kTripleMinStates) {
        throw std::invalid_argument("construction_triple requires n >= 12 (|A| = floor(n/4) >= 3 and |X| >= |A| + 2), got n = " +
                                    std::to_string(n));
    }
    GadgetLayout L;
    L.n = n;
    L.gadget_sizes = {n / 4};
    L.x_size = n - n / 4;
    L.spacing = 0;
    return L;
}

Automaton construction_triple(std::size_t n) {
    return build_gadget_automaton(triple_layout(n), "triple-" + std::to_string(n));
}

std::vector<std::size_t> coprime_partition(std::size_t n, std::size_t k) {
    if (k < 3) throw std::invalid_argument("coprime_partition requires k >= 3");
    const std::size_t lo = ceil_div(n, 4 * k);
    const std::size_t hi = n / (3 * k);
    const std::size_t q = 2 * n / (3 * k);
    const std::size_t count = k - 2;
    const auto too_small = [&] {
        return std::invalid_argument("n too small for k: no " + std::to_string(count) + " gadget sizes in [n/4k, n/3k] = [" +
                                     std::to_string(lo) + ", " + std::to_string(hi) +
                                     "] with gcd 1 leave room for X (n = " + std::to_string(n) +
                                     ", k = " + std::to_string(k) + ")");
    };
    if (lo == 0 || lo > hi || count * q > n) throw too_small();
    const std::size_t budget = n - count * q;

    // Nondecreasing multisets in lexicographic order, odometer style.
    std::vector<std::size_t> sizes(count, lo);
    for (;;) {
        std::size_t g = 0;
        std::size_t sum = 0;
        for (std::size_t s : sizes) {
            g = std::gcd(g, s);
            sum += s;
        }
        if ((count == 1 || g == 1) && sum <= budget) return sizes;
        std::size_t pos = count;
        while (pos > 0 && sizes[pos - 1] == hi) --pos;
        if (pos == 0) throw too_small();
        ++sizes[pos - 1];
        for (std::size_t p = pos; p < count; ++p) sizes[p] = sizes[pos - 1];
    }
}

GadgetLayout general_layout(std::size_t n, std::size_t k) {
    GadgetLayout L;
    L.n = n;
    L.gadget_sizes = coprime_partition(n, k);
    L.spacing = 2 * n / (3 * k);
    L.x_size = n - std::accumulate(L.gadget_sizes.begin(), L.gadget_sizes.end(), std::size_t{0});
    return L;
}

Automaton construction_general(std::size_t n, std::size_t k) {
    return build_gadget_automaton(general_layout(n, k), "general-" + std::to_string(n) + "-" + std::to_string(k));
}

namespace {

// Uniform on [0, bound) with rejection; independent of the standard library's
// distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v = rng();
    while (v >= limit) v = rng();
    return v % bound;
}

}  // namespace

Automaton random_automaton(std::size_t n, std::size_t alphabet, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_automaton requires n >= 1");
    if (alphabet == 0) throw std::invalid_argument("random_automaton requires an alphabet of at least one letter");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<State>> rows(alphabet, std::vector<State>(n));
    for (auto& row : rows) {
        for (auto& t : row) t = static_cast<State>(uniform_below(rng, n));
    }
    return Automaton(n, std::move(rows), {}, "random-" + std::to_string(n) + "-" + std::to_string(seed));
}

Automaton enumerated_automaton(std::size_t n, std::size_t alphabet, std::uint64_t index) {
    if (n == 0 || alphabet == 0 || alphabet > 26) throw std::invalid_argument("enumerated_automaton: bad n or alphabet");
    const std::string name = "enum-" + std::to_string(n) + "-" + std::to_string(index);
    std::vector<std::vector<State>> rows(alphabet, std::vector<State>(n));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < alphabet; ++a) {
        names.emplace_back(1, static_cast<char>('a' + a));
        for (std::size_t s = 0; s < n; ++s) {
            rows[a][s] = static_cast<State>(index % n);
            index /= n;
        }
    }
    if (index != 0) throw std::invalid_argument("enumerated_automaton: index out of range");
    return Automaton(n, std::move(rows), std::move(names), name);
}

}  // namespace synchro
