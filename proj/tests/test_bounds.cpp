#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "synchro/bounds.hpp"

using namespace synchro::bounds;

namespace {

std::int64_t c2(std::int64_t m) { return m * (m - 1) / 2; }

}  // namespace

TEST_CASE("binomials") {
    CHECK(binom(10, 2) == 45);
    CHECK(binom(4, 0) == 1);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(62, 31) == 465428353255261088LL);
    CHECK_THROWS_AS(binom(200, 100), std::overflow_error);
    CHECK_THROWS_AS(binom(-1, 0), std::invalid_argument);
}

TEST_CASE("rationals reduce") {
    CHECK(Rational::make(6, 4) == Rational{3, 2});
    CHECK(Rational::make(-6, -4) == Rational{3, 2});
    CHECK(Rational::make(6, -4) == Rational{-3, 2});
    CHECK(Rational::make(0, 5) == Rational{0, 1});
    CHECK(Rational{1, 3} < Rational{1, 2});
    CHECK(Rational{441, 8}.to_string() == "441/8");
    CHECK(Rational{36, 1}.to_string() == "36");
    CHECK_THROWS_AS(Rational::make(1, 0), std::invalid_argument);
}

TEST_CASE("frankl-pin family against term-by-term sums") {
    CHECK(frankl_pin_reset(4) == 10);
    CHECK(frankl_pin_set(4, 2) == 6);
    CHECK(frankl_pin_set(4, 4) == 1);
    CHECK(naive_pair(4) == 6);
    CHECK(naive_reset(4) == 18);
    for (std::int64_t n = 2; n <= 60; ++n) {
        std::int64_t sum = 0;
        for (std::int64_t i = 2; i <= n; ++i) {
            CHECK(frankl_pin_set(n, i) == c2(n - i + 2));
            sum += c2(n - i + 2);
        }
        CHECK(frankl_pin_reset(n) == sum);
        CHECK(frankl_pin_reset(n) == (n * n * n - n) / 6);
        CHECK(frankl_pin_reset(n) <= naive_reset(n));
        for (std::int64_t k = 2; k <= n; ++k) {
            std::int64_t r = 1;
            for (std::int64_t i = 2; i <= k - 1; ++i) r += c2(n - i + 2);
            CHECK(frankl_pin_rendezvous(n, k) == r);
        }
    }
    CHECK(frankl_pin_reset(1) == 0);
    CHECK_THROWS_AS(frankl_pin_set(4, 5), std::invalid_argument);
}

TEST_CASE("weak rendezvous bound") {
    // 1 + 3 + C(10,2) and 1 + 3 + C(10,2) + C(9,2).
    CHECK(weak_rdvs_upper(10, 4) == 49);
    CHECK(weak_rdvs_upper(10, 5) == 85);
    CHECK(weak_rdvs_upper(10, 2) == 1);
    CHECK(weak_rdvs_upper(10, 3) == 1 + 45);
    for (std::int64_t n = 4; n <= 80; ++n) {
        for (std::int64_t k = 4; k <= n; ++k) CHECK(weak_rdvs_upper(n, k) <= frankl_pin_rendezvous(n, k));
    }
    CHECK(weak_rdvs_simplified(10, 5) == Rational{100, 1});
    CHECK(weak_rdvs_simplified(10, 4) == Rational{50, 1});
    CHECK(weak_rdvs_simplified(10, 2) == Rational{0, 1});
}

TEST_CASE("quadratic rendezvous bounds") {
    const double c3 = (3.0 - std::sqrt(5.0)) / 4.0;
    CHECK(rdvs3_upper(4) == doctest::Approx(c3 * 16 + 6).epsilon(1e-12));
    CHECK(rdvs3_upper(4) == doctest::Approx(9.0557).epsilon(1e-4));
    CHECK(ceil_bound(rdvs3_upper(4)) == 10);
    CHECK(admits_upper(rdvs3_upper(4), 10));
    CHECK_FALSE(admits_upper(rdvs3_upper(4), 11));
    CHECK(ceil_bound(3.0) == 3);
    for (std::int64_t n = 5; n <= 500; ++n) {
        CHECK(rdvs4_upper(n) == doctest::Approx(rdvs4_upper_closed(n)).epsilon(1e-12));
        CHECK(rdvs5_upper(n) == doctest::Approx(rdvs5_upper_closed(n)).epsilon(1e-12));
        CHECK(rdvs3_upper(n) < rdvs4_upper(n));
        CHECK(rdvs4_upper(n) < rdvs5_upper(n));
    }
    // Coefficients of n^2 in the closed forms.
    const double big = 1e6;
    CHECK(rdvs4_upper_closed(1000000) / (big * big) ==
          doctest::Approx((11 - std::sqrt(5.0) - 4 * std::sqrt(3.0)) / 4).epsilon(1e-5));
    CHECK(rdvs5_upper_closed(1000000) / (big * big) ==
          doctest::Approx((15 - std::sqrt(5.0) - 4 * std::sqrt(3.0) - std::sqrt(7.0)) / 4).epsilon(1e-5));
    CHECK_THROWS_AS(rdvs3_upper(2), std::invalid_argument);
    CHECK_THROWS_AS(rdvs4_upper(3), std::invalid_argument);
    CHECK_THROWS_AS(rdvs5_upper(4), std::invalid_argument);
}

TEST_CASE("triple bound beats the trivial pair bound from n = 6") {
    for (std::int64_t n = 6; n <= 1000; ++n) CHECK(rdvs3_upper(n) < 1.0 + static_cast<double>(c2(n)));
    // Small-n exceptions: the linear term dominates.
    CHECK(rdvs3_upper(4) > 1.0 + 6);
    CHECK(rdvs3_upper(5) > 1.0 + 10);
}

TEST_CASE("lower bounds") {
    CHECK(cerny_m_lower(10, 3) == 11);
    CHECK(cerny_m_lower(12, 5) == 37);
    CHECK(cerny_M_lower(10, 2) == Rational{30, 1});
    CHECK(cerny_M_lower(6, 3) == Rational{12, 1});
    CHECK(cerny_M_lower(7, 3) == Rational{56, 3});
    CHECK(nonsync_lower(48, 4) == Rational{36, 1});
    CHECK(nonsync_lower(24, 3) == Rational{16, 3});
    CHECK(nonsync_triple_lower(21) == Rational{441, 8});
    CHECK(nonsync_triple_lower(21).to_double() == 55.125);
    // 1 + (C(n,2) - C(n-2,0)) for k = 3.
    CHECK(nonsync_upper(10, 3) == 45);
    CHECK(nonsync_upper(10, 4) == 45 + 120 - 8);
    CHECK_THROWS_AS(nonsync_lower(48, 2), std::invalid_argument);
}

TEST_CASE("catalog") {
    const auto entries = catalog(10, 4);
    std::set<std::string> names;
    for (const auto& b : entries) {
        CHECK(names.insert(b.name).second);
        CHECK(b.n == 10);
        CHECK(std::isfinite(b.as_double()));
    }
    CHECK(names.count("weak_rdvs_upper") == 1);
    CHECK(names.count("rdvs4_upper") == 1);
    CHECK(names.count("rdvs3_upper") == 0);
    for (const auto& b : entries) {
        if (b.name == "weak_rdvs_upper") CHECK(b.value == Rational{49, 1});
        if (b.name == "frankl_pin_reset") CHECK(b.value == Rational{165, 1});
        if (b.name == "rdvs4_upper") CHECK_FALSE(b.exact);
    }
    CHECK(catalog(10, 0).size() == 4);
    CHECK(catalog(0, 0).empty());
    CHECK(to_string(Side::Lower) == "lower");
    CHECK(to_string(Quantity::ResetLength) == "reset-length");
}
