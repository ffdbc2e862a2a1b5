#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "belllab/algebra.hpp"
#include "belllab/rng.hpp"

namespace bell {

struct McEstimate {
    double value{};
    double std_error{};
};

// Deterministic local strategy: binary responses driven by a hidden variable
// on the unit sphere. density is taken with respect to the area measure and
// must integrate to 1; sample_lambda must draw from it.
struct DeterministicStrategy {
    std::function<int(const Direction&, const Vec3&)> alice;
    std::function<int(const Direction&, const Vec3&)> bob;
    std::function<Vec3(SplitMix64&)> sample_lambda;
    std::function<double(const Vec3&)> density;
};

// Stochastic local model: per-side conditional probabilities for outcome +1.
struct FactorizedModel {
    std::function<double(const Direction&, const Vec3&)> p_alice_plus;
    std::function<double(const Direction&, const Vec3&)> p_bob_plus;
    std::function<Vec3(SplitMix64&)> sample_lambda;
    std::function<double(const Vec3&)> density;
};

// Monte Carlo estimate of the correlation integral: mean of A(l)B(l) over
// hidden-variable draws (or of the factorized conditional expectation),
// with standard error = sample stddev / sqrt(samples).
McEstimate lhv_correlation(const DeterministicStrategy& s, const Direction& a, const Direction& b,
                           long samples, std::uint64_t seed = 0x10adULL);
McEstimate lhv_correlation(const FactorizedModel& m, const Direction& a, const Direction& b,
                           long samples, std::uint64_t seed = 0x10adULL);

// Monte Carlo check that a sphere density integrates to 1: uniform points,
// 4*pi*mean(rho) with its standard error.
McEstimate sphere_density_integral(const std::function<double(const Vec3&)>& rho, long samples,
                                   std::uint64_t seed = 0xd05eULL);

// Hemisphere strategy: lambda uniform on the sphere, A = sign(a.lambda),
// B = -sign(b.lambda), sign(0) := +1. Closed-form correlation
// -1 + 2 theta_ab / pi.
DeterministicStrategy sign_model();
double sign_model_correlation(const Direction& a, const Direction& b);

// Local strategy over a finite hidden-variable domain: each atom fixes the
// four responses (A, A', B, B') for one lambda value of given weight.
struct FiniteStrategy {
    struct Atom {
        double weight{};
        std::array<int, 4> response{};  // A, A', B, B' in {-1, +1}
    };
    std::vector<Atom> atoms;
};

// Random finite strategy: 1..max_atoms atoms, responses uniform over
// {-1,+1}^4, weights uniform then normalized.
FiniteStrategy random_deterministic_strategy(std::uint64_t seed, int max_atoms = 16);

// Exact S = sum_l w_l [(A+A')B + (A-A')B'] by direct summation. Weights must
// sum to 1 within 1e-12.
double exact_chsh_finite(const FiniteStrategy& s);

}  // namespace bell
