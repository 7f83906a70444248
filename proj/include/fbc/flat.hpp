#pragma once

#include <complex>
#include <optional>

#include "fbc/rational.hpp"
#include "fbc/word.hpp"

namespace fbc {

using Complex = std::complex<double>;

/// Flat-plane coordinates for k > 0: t translates by (1, 0), t a^k by
/// (cos theta, sin theta), so ||a|| = (2/k) sin(theta/2).
struct PlaneParams {
    long long k = 1;
    double theta = 0.0;  // angle between the axes of t and t a^k, in (0, pi)
};

/// Flat-plane coordinates for k = 0: free choice of ||a|| and of the angle
/// phi in (0, pi) between the axes of t and a.
struct PlaneParamsK0 {
    double phi = 0.0;
    double a_len = 0.0;
};

/// Translation vector of a: (2/k) sin(theta/2) e^{i(pi+theta)/2}.
/// Accepts theta in (0, pi]; throws std::domain_error outside.
Complex vec_a(const PlaneParams& params);

/// Displacement function
///   delta(theta) = |1 + sum_j N_j i e^{i(j0-j+1/2) theta} (2/k) sin(theta/2)|^2;
/// delta < 1 certifies that w t moves the base point closer than ||t|| = 1
/// (up to the N*epsilon gluing correction). theta in (0, pi), k > 0.
double delta(const LevelProfile& p, long long k, double theta);

/// Exact quadratic coefficient of delta at theta -> 0:
///   c2 = (sum N_j)^2 / k^2 - sum_j (2(j0-j)+1) N_j / k.
/// c2 < 0 iff condition1 holds.
Rational quadratic_coefficient(const LevelProfile& p, long long k);

/// Exact limit of delta at theta -> pi: (1 - 2S/k)^2 with
/// S = sum_j (-1)^{j0-j} N_j. Less than 1 iff condition2 holds.
Rational pi_limit(const LevelProfile& p, long long k);

/// Shadow walk: starting from the origin, process w suffix-first (from its
/// last letter to its first); a^v translates by v*vec_a, b^v rotates the
/// current point by -v*theta about the origin. The processing order matters:
/// reversing it computes a different (conjugate) point.
Complex tau_walk(const Word& w, const PlaneParams& params);

/// Same walk with b acting as the identity; the result is exactly
/// N_a * a_len * e^{i phi} with N_a the a-exponent sum of w.
Complex tau_walk_k0(const Word& w, const PlaneParamsK0& params);

/// Closed form of the walk endpoint: sum_j N_j e^{i(j0-j) theta} vec_a.
/// Satisfies delta(theta) = |1 + closed_form_x1|^2.
Complex closed_form_x1(const LevelProfile& p, const PlaneParams& params);

/// Numeric witness that ||w t|| < 1 is achievable: a theta with
/// delta(theta) < 1 together with strip parameters making the walk bound
/// sqrt(delta) + N*epsilon stay below 1.
struct ThetaCertificate {
    double theta = 0.0;
    double delta_value = 0.0;
    double epsilon = 0.0;             // (1 - sqrt(delta)) / (2N)
    double d_width = 0.0;             // D, kept >= 2N
    double displacement_bound = 0.0;  // sqrt(delta) + N*epsilon < 1
};

/// Scans theta over (0, pi) (a uniform grid plus geometric tails toward both
/// endpoints, then local golden-section polish around the best point) and
/// certifies the minimum if it dips below 1. Absence of a certificate is a
/// search outcome, not a mathematical negative. Requires k > 0 and
/// letter_length >= 1.
std::optional<ThetaCertificate> find_theta_certificate(const LevelProfile& p, long long k,
                                                       long long letter_length,
                                                       int grid_points = 10000);

/// Bilipschitz constant max(1 + e'/e, 1/(1 + e'/e)) controlling how
/// translation lengths respond to changing the strip thickness epsilon by
/// epsilon_delta: (1/L) f(e) <= f(e+e') <= L f(e).
/// Throws std::domain_error unless epsilon > 0 and epsilon + epsilon_delta > 0.
double bilipschitz_bound(double epsilon, double epsilon_delta);

/// For k = 0 and a nonzero a-exponent sum, plane parameters placing
/// N_a * vec_a at (-1/2, 1/2), safely inside the open unit disk about (-1,0).
struct K0Suggestion {
    PlaneParamsK0 params;
    double image_distance = 0.0;  // |N_a*vec_a - (-1,0)|, < 1
};
K0Suggestion suggest_k0_params(long long a_exponent_sum);

}  // namespace fbc
