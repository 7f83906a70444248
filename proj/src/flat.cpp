#include "fbc/flat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace fbc {

namespace {

constexpr double kPi = std::numbers::pi;

void check_k(long long k) {
    if (k <= 0) throw std::invalid_argument("k must be positive");
}

void check_theta_open(double theta) {
    if (!(theta > 0.0 && theta < kPi)) throw std::domain_error("theta must lie in (0, pi)");
}

/// Golden-section minimization on [lo, hi]; f is unimodal enough locally.
template <typename F>
std::pair<double, double> golden_min(F f, double lo, double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

}  // namespace

Complex vec_a(const PlaneParams& params) {
    check_k(params.k);
    if (!(params.theta > 0.0 && params.theta <= kPi))
        throw std::domain_error("vec_a: theta must lie in (0, pi]");
    const double len = 2.0 / static_cast<double>(params.k) * std::sin(params.theta / 2.0);
    return std::polar(len, (kPi + params.theta) / 2.0);
}

double delta(const LevelProfile& p, long long k, double theta) {
    check_k(k);
    check_theta_open(theta);
    const double amp = 2.0 / static_cast<double>(k) * std::sin(theta / 2.0);
    Complex sum = 0.0;
    for (std::size_t j = 0; j < p.weights.size(); ++j) {
        if (p.weights[j] == 0) continue;
        const double phase = (static_cast<double>(p.starting_level) - static_cast<double>(j) + 0.5) * theta;
        sum += static_cast<double>(p.weights[j]) * Complex(0.0, 1.0) * std::polar(amp, phase);
    }
    return std::norm(1.0 + sum);
}

Rational quadratic_coefficient(const LevelProfile& p, long long k) {
    check_k(k);
    long long total = 0;
    Rational linear = 0;
    for (std::size_t j = 0; j < p.weights.size(); ++j) {
        const long long diff = p.starting_level - static_cast<long long>(j);
        total += p.weights[j];
        linear = linear + Rational((2 * diff + 1) * p.weights[j], k);
    }
    return Rational(total * total, k * k) - linear;
}

Rational pi_limit(const LevelProfile& p, long long k) {
    check_k(k);
    long long s = 0;
    for (std::size_t j = 0; j < p.weights.size(); ++j) {
        const long long diff = p.starting_level - static_cast<long long>(j);
        s += (diff % 2 == 0 ? 1 : -1) * p.weights[j];
    }
    const Rational inner = Rational(1) - Rational(2 * s, k);
    return inner * inner;
}

Complex tau_walk(const Word& w, const PlaneParams& params) {
    const Complex a_vec = vec_a(params);
    Complex point = 0.0;
    const auto& sylls = w.syllables();
    // Suffix-first: apply the last syllable's action first. Grouped syllables
    // act exactly like their letter-by-letter expansion (translations add,
    // rotations compose).
    for (auto it = sylls.rbegin(); it != sylls.rend(); ++it) {
        if (it->gen == Gen::a) {
            point += static_cast<double>(it->exp) * a_vec;
        } else {
            point *= std::polar(1.0, -static_cast<double>(it->exp) * params.theta);
        }
    }
    return point;
}

Complex tau_walk_k0(const Word& w, const PlaneParamsK0& params) {
    const Complex a_vec = std::polar(params.a_len, params.phi);
    Complex point = 0.0;
    const auto& sylls = w.syllables();
    for (auto it = sylls.rbegin(); it != sylls.rend(); ++it) {
        if (it->gen == Gen::a) point += static_cast<double>(it->exp) * a_vec;
    }
    return point;
}

Complex closed_form_x1(const LevelProfile& p, const PlaneParams& params) {
    const Complex a_vec = vec_a(params);
    Complex sum = 0.0;
    for (std::size_t j = 0; j < p.weights.size(); ++j) {
        if (p.weights[j] == 0) continue;
        const double phase = (static_cast<double>(p.starting_level) - static_cast<double>(j)) * params.theta;
        sum += static_cast<double>(p.weights[j]) * std::polar(1.0, phase) * a_vec;
    }
    return sum;
}

std::optional<ThetaCertificate> find_theta_certificate(const LevelProfile& p, long long k,
                                                       long long letter_length, int grid_points) {
    check_k(k);
    if (letter_length < 1)
        throw std::invalid_argument("find_theta_certificate: letter_length must be >= 1");
    if (grid_points < 2) grid_points = 2;

    std::vector<double> thetas;
    thetas.reserve(static_cast<std::size_t>(grid_points) + 130);
    for (int i = 1; i <= grid_points; ++i)
        thetas.push_back(kPi * static_cast<double>(i) / static_cast<double>(grid_points + 1));
    // geometric tails: the dip below 1 can sit arbitrarily close to either end
    double tail = kPi / 2.0;
    for (int m = 0; m < 60; ++m) {
        tail *= 0.7;
        thetas.push_back(tail);
        thetas.push_back(kPi - tail);
    }
    std::sort(thetas.begin(), thetas.end());

    std::size_t best = 0;
    double best_delta = delta(p, k, thetas[0]);
    for (std::size_t i = 1; i < thetas.size(); ++i) {
        const double d = delta(p, k, thetas[i]);
        if (d < best_delta) {
            best_delta = d;
            best = i;
        }
    }

    // polish within the bracket around the best grid point
    const double lo = best > 0 ? thetas[best - 1] : thetas[best] / 2.0;
    const double hi = best + 1 < thetas.size() ? thetas[best + 1] : (thetas[best] + kPi) / 2.0;
    const auto [theta_min, delta_min] =
        golden_min([&](double t) { return delta(p, k, t); }, lo, hi);

    double theta_star = thetas[best];
    double delta_star = best_delta;
    if (delta_min < delta_star) {
        theta_star = theta_min;
        delta_star = delta_min;
    }
    if (!(delta_star < 1.0)) return std::nullopt;

    const double n = static_cast<double>(letter_length);
    ThetaCertificate cert;
    cert.theta = theta_star;
    cert.delta_value = delta_star;
    cert.epsilon = (1.0 - std::sqrt(delta_star)) / (2.0 * n);
    cert.d_width = 2.0 * n;
    cert.displacement_bound = std::sqrt(delta_star) + n * cert.epsilon;
    return cert;
}

double bilipschitz_bound(double epsilon, double epsilon_delta) {
    if (!(epsilon > 0.0) || !(epsilon + epsilon_delta > 0.0))
        throw std::domain_error("bilipschitz_bound: need epsilon > 0 and epsilon + delta > 0");
    const double ratio = 1.0 + epsilon_delta / epsilon;
    return std::max(ratio, 1.0 / ratio);
}

K0Suggestion suggest_k0_params(long long a_exponent_sum) {
    if (a_exponent_sum == 0)
        throw std::invalid_argument("suggest_k0_params: a-exponent sum must be nonzero");
    // place N_a * vec_a at (-1/2, +-1/2), distance sqrt(2)/2 from (-1, 0)
    const double mag = std::abs(static_cast<double>(a_exponent_sum));
    K0Suggestion s;
    s.params.a_len = 1.0 / (std::sqrt(2.0) * mag);
    s.params.phi = a_exponent_sum > 0 ? 3.0 * kPi / 4.0 : kPi / 4.0;
    const Complex image =
        static_cast<double>(a_exponent_sum) * std::polar(s.params.a_len, s.params.phi);
    s.image_distance = std::abs(image - Complex(-1.0, 0.0));
    return s;
}

}  // namespace fbc
