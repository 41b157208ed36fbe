#include "synchro/bounds.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace synchro::bounds {

namespace {

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

std::int64_t narrow(__int128 v) {
    if (v > kMax || v < -kMax) throw std::overflow_error("bound value exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
}

__int128 mul(__int128 a, __int128 b) {
    if (a != 0 && (b > kMax / (a < 0 ? -a : a) || b < -kMax / (a < 0 ? -a : a))) {
        throw std::overflow_error("bound evaluation overflow");
    }
    return a * b;
}

__int128 power(__int128 base, std::int64_t exp) {
    __int128 r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r = mul(r, base);
    return r;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

std::string i128_to_string(__int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    if (neg) v = -v;
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return neg ? "-" + s : s;
}

}  // namespace

Rational Rational::make(__int128 num, __int128 den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num, b = den;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    const __int128 g = a == 0 ? 1 : a;
    return Rational{narrow(num / g), narrow(den / g)};
}

std::string Rational::to_string() const {
    return den == 1 ? i128_to_string(num) : i128_to_string(num) + "/" + i128_to_string(den);
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
    require(n >= 0 && k >= 0, "binom requires n, k >= 0");
    if (k > n) return 0;
    k = std::min(k, n - k);
    // r stays C(n, i) <= C(n, k), so r * (n - i) fits in 128 bits.
    __int128 r = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
        if (r > kMax) throw std::overflow_error("bound value exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(r);
}

std::int64_t frankl_pin_set(std::int64_t n, std::int64_t k) {
    require(2 <= k && k <= n, "frankl_pin_set requires 2 <= k <= n");
    return binom(n - k + 2, 2);
}

std::int64_t frankl_pin_reset(std::int64_t n) {
    require(n >= 1, "frankl_pin_reset requires n >= 1");
    return narrow((mul(mul(n, n), n) - n) / 6);
}

std::int64_t frankl_pin_rendezvous(std::int64_t n, std::int64_t k) {
    require(2 <= k && k <= n, "frankl_pin_rendezvous requires 2 <= k <= n");
    __int128 total = 1;
    for (std::int64_t i = 2; i <= k - 1; ++i) total += frankl_pin_set(n, i);
    return narrow(total);
}

std::int64_t naive_reset(std::int64_t n) {
    require(n >= 1, "naive_reset requires n >= 1");
    return narrow(mul(n - 1, binom(n, 2)));
}

std::int64_t naive_pair(std::int64_t n) {
    require(n >= 1, "naive_pair requires n >= 1");
    return binom(n, 2);
}

std::int64_t weak_rdvs_upper(std::int64_t n, std::int64_t k) {
    require(2 <= k && k <= n, "weak_rdvs_upper requires 2 <= k <= n");
    __int128 total = 0;
    for (std::int64_t i = 1; i <= k / 2; ++i) total += binom(i + 1, 2);
    for (std::int64_t i = 1; i <= (k + 1) / 2 - 1; ++i) total += binom(n - i + 1, 2);
    return narrow(total);
}

Rational weak_rdvs_simplified(std::int64_t n, std::int64_t k) {
    require(2 <= k && k <= n, "weak_rdvs_simplified requires 2 <= k <= n");
    return Rational::make(mul((k - 1) / 2, mul(n, n)), 2);
}

double rdvs3_upper(std::int64_t n) {
    require(n >= 3, "rdvs3_upper requires n >= 3");
    const double x = static_cast<double>(n);
    return (3.0 - std::sqrt(5.0)) / 4.0 * x * x + 1.5 * x;
}

double rdvs4_upper(std::int64_t n) {
    require(n >= 4, "rdvs4_upper requires n >= 4");
    const double x = static_cast<double>(n);
    return rdvs3_upper(n) + (2.0 - std::sqrt(3.0)) * x * x + 2.0 * x - 1.0;
}

double rdvs5_upper(std::int64_t n) {
    require(n >= 5, "rdvs5_upper requires n >= 5");
    const double x = static_cast<double>(n);
    return rdvs4_upper(n) + (4.0 - std::sqrt(7.0)) / 4.0 * x * x + 1.5 * x - 1.0;
}

double rdvs4_upper_closed(std::int64_t n) {
    require(n >= 4, "rdvs4_upper_closed requires n >= 4");
    const double x = static_cast<double>(n);
    return (11.0 - std::sqrt(5.0) - 4.0 * std::sqrt(3.0)) / 4.0 * x * x + 3.5 * x - 1.0;
}

double rdvs5_upper_closed(std::int64_t n) {
    require(n >= 5, "rdvs5_upper_closed requires n >= 5");
    const double x = static_cast<double>(n);
    return (15.0 - std::sqrt(5.0) - 4.0 * std::sqrt(3.0) - std::sqrt(7.0)) / 4.0 * x * x + 5.0 * x - 2.0;
}

std::int64_t cerny_m_lower(std::int64_t n, std::int64_t k) {
    require(2 <= k && k <= n, "cerny_m_lower requires 2 <= k <= n");
    return narrow(mul(k - 2, n) + 1);
}

Rational cerny_M_lower(std::int64_t n, std::int64_t k) {
    require(2 <= k && k <= n, "cerny_M_lower requires 2 <= k <= n");
    return Rational::make(mul(k - 1, mul(n, n)) - mul(2 * k, n), k);
}

Rational nonsync_lower(std::int64_t n, std::int64_t k) {
    require(k >= 3 && n >= 1, "nonsync_lower requires k >= 3 and n >= 1");
    return Rational::make(mul(4, power(n, k - 1)), mul(3, power(4 * k, k - 1)));
}

Rational nonsync_triple_lower(std::int64_t n) {
    require(n >= 1, "nonsync_triple_lower requires n >= 1");
    return Rational::make(mul(n, n), 8);
}

std::int64_t nonsync_upper(std::int64_t n, std::int64_t k) {
    require(3 <= k && k <= n, "nonsync_upper requires 3 <= k <= n");
    __int128 total = 1;
    for (std::int64_t i = 2; i <= k - 1; ++i) total += binom(n, i) - binom(n - 2, i - 2);
    return narrow(total);
}

std::int64_t ceil_bound(double bound) { return static_cast<std::int64_t>(std::ceil(bound)); }

bool admits_upper(double bound, std::int64_t computed) { return computed <= ceil_bound(bound); }

std::string to_string(Side s) { return s == Side::Upper ? "upper" : "lower"; }

std::string to_string(Quantity q) {
    switch (q) {
        case Quantity::MinRendezvous: return "m";
        case Quantity::MaxRendezvous: return "M";
        case Quantity::ResetLength: return "reset-length";
        case Quantity::MergeLength: return "merge-length";
        case Quantity::PairWeight: return "pair-weight";
    }
    return "?";
}

namespace {

BoundValue exact_bound(std::string name, std::int64_t n, std::int64_t k, Rational v, Side side, Quantity q,
                       std::string family) {
    BoundValue b;
    b.name = std::move(name);
    b.n = n;
    b.k = k;
    b.exact = true;
    b.value = v;
    b.approx = v.to_double();
    b.side = side;
    b.applies_to = q;
    b.family = std::move(family);
    return b;
}

BoundValue real_bound(std::string name, std::int64_t n, std::int64_t k, double v, Side side, Quantity q) {
    BoundValue b;
    b.name = std::move(name);
    b.n = n;
    b.k = k;
    b.exact = false;
    b.approx = v;
    b.side = side;
    b.applies_to = q;
    return b;
}

Rational whole(std::int64_t v) { return Rational{v, 1}; }

}  // namespace

std::vector<BoundValue> catalog(std::int64_t n, std::int64_t k) {
    std::vector<BoundValue> out;
    if (n < 1) return out;
    const auto U = Side::Upper;
    const auto L = Side::Lower;
    out.push_back(exact_bound("naive_pair", n, 0, whole(naive_pair(n)), U, Quantity::PairWeight, "synchronizing"));
    out.push_back(exact_bound("naive_reset", n, 0, whole(naive_reset(n)), U, Quantity::ResetLength, "synchronizing"));
    out.push_back(exact_bound("frankl_pin_reset", n, 0, whole(frankl_pin_reset(n)), U, Quantity::ResetLength, "synchronizing"));
    out.push_back(exact_bound("cerny_conjecture", n, 0, whole(narrow(mul(n - 1, n - 1))), U, Quantity::ResetLength,
                              "synchronizing"));
    if (k < 2 || k > n) return out;
    out.push_back(exact_bound("frankl_pin_set", n, k, whole(frankl_pin_set(n, k)), U, Quantity::MergeLength, "synchronizing"));
    out.push_back(exact_bound("frankl_pin_rendezvous", n, k, whole(frankl_pin_rendezvous(n, k)), U, Quantity::MinRendezvous,
                              "synchronizing"));
    out.push_back(exact_bound("weak_rdvs_upper", n, k, whole(weak_rdvs_upper(n, k)), U, Quantity::MinRendezvous, "synchronizing"));
    if (k == 3 && n >= 3) out.push_back(real_bound("rdvs3_upper", n, k, rdvs3_upper(n), U, Quantity::MinRendezvous));
    if (k == 4 && n >= 4) out.push_back(real_bound("rdvs4_upper", n, k, rdvs4_upper(n), U, Quantity::MinRendezvous));
    if (k == 5 && n >= 5) out.push_back(real_bound("rdvs5_upper", n, k, rdvs5_upper(n), U, Quantity::MinRendezvous));
    out.push_back(exact_bound("cerny_m_lower", n, k, whole(cerny_m_lower(n, k)), L, Quantity::MinRendezvous, "cerny"));
    out.push_back(exact_bound("cerny_M_lower", n, k, cerny_M_lower(n, k), L, Quantity::MaxRendezvous, "cerny"));
    if (k >= 3) {
        out.push_back(exact_bound("nonsync_upper", n, k, whole(nonsync_upper(n, k)), U, Quantity::MinRendezvous, "any"));
        out.push_back(exact_bound("nonsync_lower", n, k, nonsync_lower(n, k), L, Quantity::MinRendezvous, "gadget"));
        if (k == 3) {
            out.push_back(exact_bound("nonsync_triple_lower", n, k, nonsync_triple_lower(n), L, Quantity::MinRendezvous, "gadget"));
        }
    }
    return out;
}

}  // namespace synchro::bounds
