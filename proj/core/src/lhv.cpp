#include "belllab/lhv.hpp"

#include <cmath>
#include <stdexcept>

#include "belllab/sampling.hpp"

namespace bell {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kFourPi = 4.0 * kPi;

McEstimate mean_with_error(double sum, double sum_sq, long n) {
    const double mean = sum / static_cast<double>(n);
    if (n < 2) return {mean, 0.0};
    const double var =
        std::max(0.0, (sum_sq - static_cast<double>(n) * mean * mean) / static_cast<double>(n - 1));
    return {mean, std::sqrt(var / static_cast<double>(n))};
}

void require_samples(long samples) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
}

}  // namespace

McEstimate lhv_correlation(const DeterministicStrategy& s, const Direction& a, const Direction& b,
                           long samples, std::uint64_t seed) {
    require_samples(samples);
    SplitMix64 g(seed);
    double sum = 0.0, sum_sq = 0.0;
    for (long i = 0; i < samples; ++i) {
        const Vec3 lambda = s.sample_lambda(g);
        const double prod = static_cast<double>(s.alice(a, lambda) * s.bob(b, lambda));
        sum += prod;
        sum_sq += prod * prod;
    }
    return mean_with_error(sum, sum_sq, samples);
}

McEstimate lhv_correlation(const FactorizedModel& m, const Direction& a, const Direction& b,
                           long samples, std::uint64_t seed) {
    require_samples(samples);
    SplitMix64 g(seed);
    double sum = 0.0, sum_sq = 0.0;
    for (long i = 0; i < samples; ++i) {
        const Vec3 lambda = m.sample_lambda(g);
        // sum_{alpha,beta} alpha beta p_A p_B = (2 p_A - 1)(2 p_B - 1)
        const double term =
            (2.0 * m.p_alice_plus(a, lambda) - 1.0) * (2.0 * m.p_bob_plus(b, lambda) - 1.0);
        sum += term;
        sum_sq += term * term;
    }
    return mean_with_error(sum, sum_sq, samples);
}

McEstimate sphere_density_integral(const std::function<double(const Vec3&)>& rho, long samples,
                                   std::uint64_t seed) {
    require_samples(samples);
    SplitMix64 g(seed);
    double sum = 0.0, sum_sq = 0.0;
    for (long i = 0; i < samples; ++i) {
        const double val = kFourPi * rho(uniform_unit3(g));
        sum += val;
        sum_sq += val * val;
    }
    return mean_with_error(sum, sum_sq, samples);
}

DeterministicStrategy sign_model() {
    DeterministicStrategy s;
    s.alice = [](const Direction& d, const Vec3& lambda) {
        return d.unit().dot(lambda) >= 0.0 ? +1 : -1;
    };
    s.bob = [](const Direction& d, const Vec3& lambda) {
        return d.unit().dot(lambda) >= 0.0 ? -1 : +1;
    };
    s.sample_lambda = [](SplitMix64& g) { return uniform_unit3(g); };
    s.density = [](const Vec3&) { return 1.0 / kFourPi; };
    return s;
}

double sign_model_correlation(const Direction& a, const Direction& b) {
    return -1.0 + 2.0 * angle_between(a.unit(), b.unit()) / kPi;
}

FiniteStrategy random_deterministic_strategy(std::uint64_t seed, int max_atoms) {
    if (max_atoms < 1) throw std::invalid_argument("max_atoms must be >= 1");
    SplitMix64 g(seed);
    const int n = 1 + static_cast<int>(g.below(static_cast<std::uint64_t>(max_atoms)));
    FiniteStrategy s;
    s.atoms.resize(static_cast<std::size_t>(n));
    double total = 0.0;
    for (auto& atom : s.atoms) {
        atom.weight = 1.0 - g.uniform();  // (0, 1]
        total += atom.weight;
        for (int k = 0; k < 4; ++k) atom.response[static_cast<std::size_t>(k)] = g.sign();
    }
    for (auto& atom : s.atoms) atom.weight /= total;
    return s;
}

double exact_chsh_finite(const FiniteStrategy& s) {
    if (s.atoms.empty()) throw std::invalid_argument("strategy has no atoms");
    double total = 0.0;
    for (const auto& atom : s.atoms) {
        if (atom.weight < 0.0) throw std::invalid_argument("weights must be non-negative");
        for (int r : atom.response)
            if (r != 1 && r != -1) throw std::invalid_argument("responses must be +1 or -1");
        total += atom.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("weights must sum to 1 within 1e-12");

    double s_value = 0.0;
    for (const auto& atom : s.atoms) {
        const int a = atom.response[0], ap = atom.response[1];
        const int b = atom.response[2], bp = atom.response[3];
        s_value += atom.weight * static_cast<double>((a + ap) * b + (a - ap) * bp);
    }
    return s_value;
}

}  // namespace bell
