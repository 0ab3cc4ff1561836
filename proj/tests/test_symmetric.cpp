#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "syl/symmetric.hpp"

using syl::spectrum;

namespace {

// Brute-force subset-sum oracle, exact for small integer spectra.
double sigma_oracle(const std::vector<double>& v, int k) {
    const int n = static_cast<int>(v.size());
    double total = 0.0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        double prod = 1.0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) prod *= v[static_cast<std::size_t>(i)];
        total += prod;
    }
    return total;
}

std::vector<double> random_integer_values(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> d(-4, 4);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = d(rng);
    return v;
}

} // namespace

TEST_CASE("sigma_k matches pinned examples") {
    CHECK(syl::sigma_k(spectrum({1, 2, 3}), 2) == 11.0);
    CHECK(syl::sigma_k(spectrum({0.5, 0.5, 0.5, 0.5}), 2) == 1.5);
    CHECK(syl::sigma_k(spectrum({1, 1, 1}), 3) == 1.0);
    CHECK(syl::sigma_k(spectrum({1, 2, 3}), 1) == 6.0);
    CHECK(syl::sigma_k(spectrum({1, 2, 3}), 3) == 6.0);
}

TEST_CASE("sigma_k equals the subset-enumeration oracle exactly") {
    std::mt19937_64 rng(2024);
    for (int n = 3; n <= 8; ++n) {
        for (int rep = 0; rep < 200; ++rep) {
            const auto v = random_integer_values(rng, n);
            const spectrum s(v);
            for (int k = 1; k <= n; ++k)
                CHECK(syl::sigma_k(s, k) == sigma_oracle(v, k));
        }
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(spectrum({1, 2}), syl::domain_error);
    CHECK_THROWS_AS(spectrum({1, 2, std::nan("")}), syl::domain_error);
    const spectrum s({1, 2, 3});
    CHECK_THROWS_AS(syl::sigma_k(s, 0), syl::domain_error);
    CHECK_THROWS_AS(syl::sigma_k(s, 4), syl::domain_error);
    CHECK_THROWS_AS(syl::in_gamma_k_plus(s, -1), syl::domain_error);
    CHECK_THROWS_AS(syl::lambda_k(4, 5), syl::domain_error);
    CHECK_THROWS_AS(syl::sigma_k_sphere(0, 0), syl::domain_error);
    CHECK_THROWS_AS(syl::gamma_kn(3, 0), syl::domain_error);
    CHECK_THROWS_AS(syl::binomial(3, 5), syl::domain_error);
}

TEST_CASE("cone membership examples") {
    CHECK(syl::in_gamma_k_plus(spectrum({1, 1, 1}), 3));
    CHECK_FALSE(syl::in_gamma_k_plus(spectrum({-1, -1, -1}), 2)); // sigma_1 < 0
    CHECK(syl::in_gamma_k_plus(spectrum({3, 1, -0.5}), 2));       // 3.5 > 0, 1 > 0
    CHECK_FALSE(syl::in_gamma_k_plus(spectrum({3, 1, -0.5}), 3)); // sigma_3 < 0
    // Open cone: boundary reports false.
    CHECK_FALSE(syl::in_gamma_k_plus(spectrum({0, 0, 0}), 1));
    CHECK_FALSE(syl::in_gamma_k_plus(spectrum({1, 1, -2}), 1));
}

TEST_CASE("cone nesting on random spectra") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    std::uniform_int_distribution<int> nd(3, 8);
    for (int rep = 0; rep < 10000; ++rep) {
        const int n = nd(rng);
        std::vector<double> v(static_cast<std::size_t>(n));
        for (auto& x : v) x = d(rng);
        const spectrum s(v);
        const auto report = syl::classify_cone(s);
        for (int k = 1; k < n; ++k) {
            if (syl::in_gamma_k_plus(s, k + 1)) CHECK(syl::in_gamma_k_plus(s, k));
        }
        for (int k = 1; k <= report.max_k; ++k) CHECK(syl::in_gamma_k_plus(s, k));
        if (report.max_k < n) CHECK_FALSE(syl::in_gamma_k_plus(s, report.max_k + 1));
    }
}

TEST_CASE("positive cone lies in every Gamma_k^+") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> d(1e-3, 5.0);
    for (int rep = 0; rep < 2000; ++rep) {
        std::vector<double> v(6);
        for (auto& x : v) x = d(rng);
        const spectrum s(v);
        for (int k = 1; k <= 6; ++k) CHECK(syl::in_gamma_k_plus(s, k));
    }
}

TEST_CASE("normalized sigma values and cone errors") {
    const spectrum ones({1, 1, 1, 1, 1});
    for (int k = 1; k <= 5; ++k)
        CHECK_THAT(syl::normalized_sigma(ones, k),
                   Catch::Matchers::WithinAbs(1.0, 1e-14));
    const spectrum half({0.5, 0.5, 0.5, 0.5});
    CHECK_THAT(syl::normalized_sigma(half, 1), Catch::Matchers::WithinAbs(0.5, 1e-15));
    CHECK_THAT(syl::normalized_sigma(half, 2), Catch::Matchers::WithinAbs(0.5, 1e-15));
    const spectrum s123({1, 2, 3});
    CHECK(syl::normalized_sigma(s123, 1) == 2.0);
    CHECK_THAT(syl::normalized_sigma(s123, 2),
               Catch::Matchers::WithinRel(0x1.ea33e2c83c140p+0, 1e-15)); // sqrt(11/3)
    CHECK_THAT(syl::normalized_sigma(s123, 3),
               Catch::Matchers::WithinRel(0x1.d12ed0af1a27fp+0, 1e-15)); // 6^(1/3)
    CHECK_THROWS_AS(syl::normalized_sigma(spectrum({-1, -1, -1}), 2), syl::cone_error);
    CHECK_THROWS_AS(syl::normalized_sigma(spectrum({1, 1, -2}), 1), syl::cone_error);
}

TEST_CASE("Maclaurin chain is non-increasing on the admissible range") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> pos(1e-2, 4.0);
    std::uniform_real_distribution<double> mixed(-1.0, 3.0);
    std::uniform_int_distribution<int> nd(3, 8);
    for (int rep = 0; rep < 3000; ++rep) {
        const int n = nd(rng);
        std::vector<double> v(static_cast<std::size_t>(n));
        const bool positive = rep % 2 == 0;
        for (auto& x : v) x = positive ? pos(rng) : mixed(rng);
        const spectrum s(v);
        const int kmax = syl::classify_cone(s).max_k;
        double prev = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= kmax; ++k) {
            const double cur = syl::normalized_sigma(s, k);
            CHECK(cur <= prev * (1.0 + 1e-12));
            prev = cur;
        }
    }
}

TEST_CASE("normalization constants") {
    CHECK_THAT(syl::lambda_k(4, 2), Catch::Matchers::WithinRel(0x1.a20bd700c2c3ep-2, 1e-15));
    for (int n = 1; n <= 8; ++n) CHECK(syl::lambda_k(n, n) == 1.0);
    // sigma_k(lambda_k * ones) = 1 for all 1 <= k <= n <= 8.
    for (int n = 3; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            const double lk = syl::lambda_k(n, k);
            const spectrum s(std::vector<double>(static_cast<std::size_t>(n), lk));
            CHECK_THAT(syl::sigma_k(s, k), Catch::Matchers::WithinAbs(1.0, 1e-12));
        }
    }
    CHECK(syl::sigma_k_sphere(4, 2) == 1.5);
    CHECK(syl::sigma_k_sphere(3, 1) == 1.5);
    for (int n = 1; n <= 8; ++n) CHECK(syl::sigma_k_sphere(n, n) == std::ldexp(1.0, -n));
    CHECK_THAT(syl::gamma_kn(4, 2), Catch::Matchers::WithinRel(0x1.3988e1409212ep-1, 1e-15)); // sqrt(6)/4
    CHECK_THAT(syl::gamma_kn(3, 2), Catch::Matchers::WithinRel(0x1.279a74590331cp-1, 1e-15)); // 1/sqrt(3)
    for (int n = 1; n <= 8; ++n)
        CHECK_THAT(syl::gamma_kn(n, n), Catch::Matchers::WithinRel(1.0 / n, 1e-15));
}
