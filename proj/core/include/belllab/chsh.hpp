#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "belllab/algebra.hpp"

namespace bell {

// Behavioral role shared by every correlation family: settings in, joint
// outcome probabilities and the two-party correlation out.
class CorrelationModel {
public:
    virtual ~CorrelationModel() = default;

    virtual std::string name() const = 0;
    virtual double correlation(const Direction& a, const Direction& b) const = 0;

    // Unbiased-marginal completion 1/4 [1 + alpha beta E]; models with their
    // own probability construction override this.
    virtual double joint_probability(const Direction& a, const Direction& b, int alpha,
                                     int beta) const;
};

struct SettingsQuad {
    Direction a, a_prime, b, b_prime;

    // Order: theta_a, phi_a, theta_a', phi_a', theta_b, phi_b, theta_b', phi_b'.
    static SettingsQuad from_angles(const std::array<double, 8>& rad);
    std::array<double, 8> angles() const;
};

// Outcome tallies per setting pair. Pair order: (a,b), (a,b'), (a',b),
// (a',b'); outcome order: (+,+), (+,-), (-,+), (-,-).
struct CoincidenceCounts {
    std::array<std::array<std::uint64_t, 4>, 4> n{};

    std::uint64_t total(int pair) const noexcept {
        const auto& p = n[static_cast<std::size_t>(pair)];
        return p[0] + p[1] + p[2] + p[3];
    }
};

struct ChshResult {
    std::array<double, 4> terms{};  // E(a,b), E(a,b'), E(a',b), E(a',b')
    double s{};
    double std_error{};  // 0 for exact evaluation
    std::optional<CoincidenceCounts> counts;
};

ChshResult chsh_exact(const CorrelationModel& model, const SettingsQuad& q);

struct MaximizeResult {
    SettingsQuad settings;
    double abs_s{};
    ChshResult chsh;        // evaluated at `settings` (sign-canonical, S >= 0)
    long evaluations{};     // model CHSH evaluations spent
    double final_spread{};  // simplex function spread at termination
};

// Locates max |S| over the 8 setting angles: deterministic 15-degree
// per-direction grid sweeps from fixed planar starts plus seeded random
// restarts, each refined by Nelder-Mead. Deterministic for a given seed and
// restart count.
MaximizeResult maximize_chsh(const CorrelationModel& model, int restarts = 4, double tol = 1e-8,
                             std::uint64_t seed = 0);

// Draws n_per_pair outcomes per setting pair by inverse CDF on the
// counter-based stream keyed by (seed, pair index, event index). Audits the
// model's probabilities (non-negative, normalized within 1e-9) first.
CoincidenceCounts simulate_events(const CorrelationModel& model, const SettingsQuad& q,
                                  std::uint64_t n_per_pair, std::uint64_t seed);

// Experimental correlations E = sum alpha beta N(alpha,beta) / N_tot and the
// CHSH measure assembled from them; standard error from per-pair multinomial
// variance (pairs are sampled independently).
ChshResult chsh_from_counts(const CoincidenceCounts& counts);

struct NoSignalingReport {
    double max_deviation{};
    int trials{};
    double threshold{};
    bool passed{};
};

// Checks that each side's outcome marginals are independent of the remote
// setting over random draws.
NoSignalingReport no_signaling_audit(const CorrelationModel& model, int trials,
                                     std::uint64_t seed = 1, double threshold = 1e-9);

}  // namespace bell
