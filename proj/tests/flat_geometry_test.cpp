#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fbc/flat.hpp"
#include "fbc/word.hpp"
#include "test_util.hpp"

using namespace fbc;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
const char* kExampleWord = "ba^2BABabA^2b^2ABaBa^3";

Word W(const char* text) { return Word::parse(text); }

LevelProfile profile_of(const char* text) { return level_profile(W(text)); }

}  // namespace

TEST_CASE("vec_a") {
    CHECK(std::abs(vec_a({1, 1e-9})) < 1e-8);
    {
        const Complex v = vec_a({1, kPi / 2});
        CHECK(v.real() == Approx(-1.0).epsilon(1e-12));
        CHECK(v.imag() == Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(v) == Approx(std::sqrt(2.0)).epsilon(1e-12));
    }
    CHECK(std::abs(vec_a({2, kPi})) == Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(vec_a({1, 0.0}), std::domain_error);
    CHECK_THROWS_AS(vec_a({1, -0.3}), std::domain_error);
    CHECK_THROWS_AS(vec_a({1, 3.5}), std::domain_error);
}

TEST_CASE("delta: anchors") {
    const LevelProfile zero = profile_of("abABAbaB");
    for (double theta : {0.3, 1.0, 2.0, 3.0}) CHECK(delta(zero, 1, theta) == Approx(1.0).epsilon(1e-14));

    const LevelProfile comm = profile_of("abAB");
    CHECK(std::abs(delta(comm, 1, kPi / 2) - 1.0) < 1e-12);
    CHECK(delta(comm, 1, 1e-3) < 1.0);

    CHECK_THROWS_AS(delta(comm, 1, 0.0), std::domain_error);
    CHECK_THROWS_AS(delta(comm, 1, kPi), std::domain_error);
    CHECK_THROWS_AS(delta(comm, 0, 0.5), std::invalid_argument);
}

TEST_CASE("delta tends to 1 at the left endpoint") {
    for (const char* text : {"abAB", "abABAb^2aB^2", kExampleWord}) {
        for (long long k : {1, 2, 5}) {
            CHECK(std::abs(delta(profile_of(text), k, 1e-8) - 1.0) < 1e-6);
        }
    }
}

TEST_CASE("quadratic_coefficient") {
    CHECK(quadratic_coefficient(profile_of("abAB"), 1) == Rational(-2));
    CHECK(quadratic_coefficient(profile_of("abABAbaB"), 3) == Rational(0));

    // finite differences against the exact rational coefficient
    const double h = 1e-4;
    for (const char* text : {"abAB", "abABAb^2aB^2", kExampleWord}) {
        for (long long k : {1, 2, 3}) {
            const LevelProfile p = profile_of(text);
            const double fd = (delta(p, k, h) - 1.0) / (h * h);
            CHECK(std::abs(fd - quadratic_coefficient(p, k).value()) <= 10 * h);
        }
    }
}

TEST_CASE("pi_limit") {
    const LevelProfile p = profile_of("abABAb^2aB^2");  // j0=0, N=[0,-1,1]
    CHECK(pi_limit(p, 3) == Rational(1, 9));
    CHECK(pi_limit(profile_of("abABAbaB"), 2) == Rational(1));

    for (long long k : {1, 2, 3, 5}) {
        for (const char* text : {"abAB", "abABAb^2aB^2", kExampleWord}) {
            const LevelProfile q = profile_of(text);
            CHECK(delta(q, k, kPi - 1e-6) == Approx(pi_limit(q, k).value()).epsilon(1e-4));
        }
    }
}

TEST_CASE("tau_walk: basics and suffix-first order") {
    const PlaneParams params{1, 0.7};
    const Complex a_vec = vec_a(params);

    CHECK(std::abs(tau_walk(W("a"), params) - a_vec) < 1e-15);
    CHECK(std::abs(tau_walk(W("b^5"), params)) < 1e-15);
    CHECK(std::abs(tau_walk(W("B^3"), params)) < 1e-15);

    // suffix-first means the b of "ab" acts on the origin before a translates;
    // the reversed order would land on a rotated point instead
    CHECK(std::abs(tau_walk(W("ab"), params) - a_vec) < 1e-15);
    const Complex reversed = std::polar(1.0, -params.theta) * a_vec;
    CHECK(std::abs(a_vec - reversed) > 0.1);

    CHECK(std::abs(tau_walk(W("ba"), params) -
                   std::polar(1.0, -params.theta) * a_vec) < 1e-15);
}

TEST_CASE("tau_walk equals the closed form on the worked example") {
    const Word w = W(kExampleWord);
    const PlaneParams params{1, 0.7};
    const Complex walked = tau_walk(w, params);
    const Complex closed = closed_form_x1(level_profile(w), params);
    CHECK(std::abs(walked - closed) < 1e-9);
}

TEST_CASE("tau_walk oracle equivalence on random words") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> dtheta(1e-3, kPi - 1e-3);
    std::uniform_int_distribution<int> dk(1, 5);
    for (int i = 0; i < 500; ++i) {
        const Word w = testutil::random_balanced_cyclic_word(rng, 30);
        const PlaneParams params{dk(rng), dtheta(rng)};
        const Complex walked = tau_walk(w, params);
        const Complex closed = closed_form_x1(level_profile(w), params);
        CHECK(std::abs(walked - closed) < 1e-9);
    }
}

TEST_CASE("tau_walk is a homomorphism") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> dtheta(1e-3, kPi - 1e-3);
    for (int i = 0; i < 200; ++i) {
        const Word u = testutil::random_reduced_word(rng, i % 12);
        const Word v = testutil::random_reduced_word(rng, (i * 7) % 12);
        const PlaneParams params{1 + i % 3, dtheta(rng)};
        // tau(u) is affine: z -> tau_walk(u) + e^{-i n_b(u) theta} z
        const Complex expected =
            tau_walk(u, params) +
            std::polar(1.0, -static_cast<double>(exponent_sum(u, Gen::b)) * params.theta) *
                tau_walk(v, params);
        CHECK(std::abs(tau_walk(u * v, params) - expected) < 1e-9);
    }
}

TEST_CASE("tau_walk_k0") {
    const PlaneParamsK0 params{2.0, 0.8};
    const Complex a_vec = std::polar(params.a_len, params.phi);
    CHECK(std::abs(tau_walk_k0(W("b"), params)) < 1e-15);
    CHECK(std::abs(tau_walk_k0(W("a^2bA"), params) - a_vec) < 1e-15);

    std::mt19937 rng(47);
    std::uniform_real_distribution<double> dphi(1e-3, kPi - 1e-3);
    std::uniform_real_distribution<double> dlen(0.05, 2.0);
    for (int i = 0; i < 300; ++i) {
        const Word w = testutil::random_reduced_word(rng, i % 30);
        const PlaneParamsK0 q{dphi(rng), dlen(rng)};
        const Complex expected = static_cast<double>(exponent_sum(w, Gen::a)) *
                                 std::polar(q.a_len, q.phi);
        CHECK(std::abs(tau_walk_k0(w, q) - expected) < 1e-12);
    }
}

TEST_CASE("closed_form_x1: anchors and delta identity") {
    CHECK(std::abs(closed_form_x1(profile_of("abABAbaB"), {1, 1.1})) < 1e-15);
    {
        const Complex x1 = closed_form_x1(profile_of("abAB"), {1, kPi / 2});
        CHECK(x1.real() == Approx(-2.0).epsilon(1e-12));
        CHECK(std::abs(x1.imag()) < 1e-12);
    }

    std::mt19937 rng(53);
    std::uniform_real_distribution<double> dtheta(1e-3, kPi - 1e-3);
    for (int i = 0; i < 300; ++i) {
        const Word w = testutil::random_balanced_cyclic_word(rng, 20);
        const LevelProfile p = level_profile(w);
        const long long k = 1 + i % 5;
        const double theta = dtheta(rng);
        const double lhs = std::norm(1.0 + closed_form_x1(p, {k, theta}));
        CHECK(lhs == Approx(delta(p, k, theta)).epsilon(1e-12));
    }
}

TEST_CASE("find_theta_certificate") {
    {
        const auto cert = find_theta_certificate(profile_of("abAB"), 1, 4);
        REQUIRE(cert.has_value());
        CHECK(cert->delta_value < 1.0);
        CHECK(cert->theta > 0.0);
        CHECK(cert->theta < kPi);
        CHECK(delta(profile_of("abAB"), 1, cert->theta) ==
              Approx(cert->delta_value).epsilon(1e-12));
        CHECK(cert->d_width >= 2 * 4);
        CHECK(cert->displacement_bound ==
              Approx(std::sqrt(cert->delta_value) + 4 * cert->epsilon).epsilon(1e-12));
        CHECK(cert->displacement_bound < 1.0);
    }
    {
        // pi_limit = 1/9 pulls the minimum toward the far end
        const auto cert = find_theta_certificate(profile_of("abABAb^2aB^2"), 3, 10);
        REQUIRE(cert.has_value());
        CHECK(cert->delta_value < 1.0);
        CHECK(cert->delta_value <= 1.0 / 9.0 + 1e-9);
        CHECK(cert->theta > 2.5);
    }
    CHECK_FALSE(find_theta_certificate(profile_of("abABAbaB"), 1, 8).has_value());
}

TEST_CASE("bilipschitz_bound") {
    CHECK(bilipschitz_bound(0.5, 0.0) == Approx(1.0));
    CHECK(bilipschitz_bound(1.0, 1.0) == Approx(2.0));
    CHECK(bilipschitz_bound(1.0, -0.5) == Approx(2.0));
    // -> 1 as the perturbation vanishes, monotone in |eps'|
    double prev = bilipschitz_bound(1.0, 0.9);
    for (double ed : {0.7, 0.5, 0.3, 0.1, 0.01, 1e-6}) {
        const double cur = bilipschitz_bound(1.0, ed);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(bilipschitz_bound(1.0, 1e-12) == Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(bilipschitz_bound(0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(bilipschitz_bound(1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(bilipschitz_bound(1.0, -2.0), std::domain_error);
}

TEST_CASE("suggest_k0_params") {
    for (long long na : {1LL, 3LL, -2LL, -7LL}) {
        const K0Suggestion s = suggest_k0_params(na);
        CHECK(s.params.phi > 0.0);
        CHECK(s.params.phi < kPi);
        CHECK(s.params.a_len > 0.0);
        CHECK(s.image_distance == Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
        CHECK(s.image_distance < 1.0);
    }
    CHECK_THROWS_AS(suggest_k0_params(0), std::invalid_argument);
}
