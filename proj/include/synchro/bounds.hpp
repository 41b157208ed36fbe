#pragma once

/**
 * @file bounds.hpp
 * @brief Closed-form rendezvous and reset-length bounds.
 *
 * Integer and rational formulas are evaluated exactly with 128-bit
 * intermediates and throw std::overflow_error rather than wrap. Bounds
 * with irrational coefficients are evaluated in double precision; compare
 * them to integer quantities with admits_upper(), which allows the ceiling.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace synchro::bounds {

/// Exact, always reduced, positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(__int128 num, __int128 den);
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_integer() const { return den == 1; }
    std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
};

/// Exact C(n, k); 0 when k > n. Throws std::overflow_error past int64.
std::int64_t binom(std::int64_t n, std::int64_t k);

/// C(n-k+2, 2): a k-set shrinks within this many steps. 2 <= k <= n.
std::int64_t frankl_pin_set(std::int64_t n, std::int64_t k);
/// (n^3 - n)/6 = sum_{i=2}^{n} C(n-i+2, 2). n >= 1.
std::int64_t frankl_pin_reset(std::int64_t n);
/// 1 + sum_{i=2}^{k-1} C(n-i+2, 2): rendezvous bound from repeated shrinking.
std::int64_t frankl_pin_rendezvous(std::int64_t n, std::int64_t k);
/// (n-1) C(n,2).
std::int64_t naive_reset(std::int64_t n);
/// C(n,2).
std::int64_t naive_pair(std::int64_t n);

/// sum_{i=1}^{floor(k/2)} C(i+1,2) + sum_{i=1}^{ceil(k/2)-1} C(n-i+1,2). 2 <= k <= n.
std::int64_t weak_rdvs_upper(std::int64_t n, std::int64_t k);
/// floor((k-1)/2) n^2 / 2, the large-n simplification of weak_rdvs_upper.
Rational weak_rdvs_simplified(std::int64_t n, std::int64_t k);

/// (3 - sqrt 5)/4 n^2 + 3/2 n. n >= 3.
double rdvs3_upper(std::int64_t n);
/// rdvs3_upper(n) + (2 - sqrt 3) n^2 + 2n - 1. n >= 4.
double rdvs4_upper(std::int64_t n);
/// rdvs4_upper(n) + (4 - sqrt 7)/4 n^2 + 3/2 n - 1. n >= 5.
double rdvs5_upper(std::int64_t n);
/// Expanded single-polynomial forms of the two chained bounds above.
double rdvs4_upper_closed(std::int64_t n);
double rdvs5_upper_closed(std::int64_t n);

/// (k-2) n + 1: weight of {1..k} in the Cerny automaton. 2 <= k <= n.
std::int64_t cerny_m_lower(std::int64_t n, std::int64_t k);
/// ((k-1)/k) n^2 - 2n. 2 <= k <= n.
Rational cerny_M_lower(std::int64_t n, std::int64_t k);

/// (4/3) (n/4k)^(k-1). k >= 3, n >= 1.
Rational nonsync_lower(std::int64_t n, std::int64_t k);
/// n^2 / 8.
Rational nonsync_triple_lower(std::int64_t n);
/// 1 + sum_{i=2}^{k-1} (C(n,i) - C(n-2,i-2)). 3 <= k <= n.
std::int64_t nonsync_upper(std::int64_t n, std::int64_t k);

/// computed <= ceil(bound): the comparison used for double-valued bounds.
bool admits_upper(double bound, std::int64_t computed);
std::int64_t ceil_bound(double bound);

enum class Side { Upper, Lower };
enum class Quantity { MinRendezvous, MaxRendezvous, ResetLength, MergeLength, PairWeight };

std::string to_string(Side s);
std::string to_string(Quantity q);

/// One evaluated formula. `value` is exact when `exact` is set, otherwise
/// `approx` carries the double evaluation.
struct BoundValue {
    std::string name;
    std::int64_t n = 0;
    std::int64_t k = 0;
    bool exact = true;
    Rational value;
    double approx = 0.0;
    Side side = Side::Upper;
    Quantity applies_to = Quantity::MinRendezvous;
    /// Automata the formula speaks about: "synchronizing", "cerny" or "any".
    std::string family = "synchronizing";

    double as_double() const { return exact ? value.to_double() : approx; }
};

/// Every formula defined at (n, k), in a fixed order. k = 0 evaluates only
/// the formulas that depend on n alone.
std::vector<BoundValue> catalog(std::int64_t n, std::int64_t k);

}  // namespace synchro::bounds
