#pragma once

#include <optional>

#include "belllab/algebra.hpp"

namespace bell {

// Normal realization of a sharply peaked hidden-variable density.
struct PeakedDensity {
    double mu{};
    double sigma{};

    PeakedDensity(double mu, double sigma);

    double pdf(double x) const noexcept;
    // Closed form of the self-overlap integral: 1 / (2 sigma sqrt(pi)).
    double sq_integral() const noexcept;
};

// Gaussian regularization of the delta distribution, width epsilon.
struct RegularizedDelta {
    double epsilon{};

    explicit RegularizedDelta(double epsilon);
    double pdf(double x) const noexcept;
};

// Mixture of a Bell state with the maximally random state e0 (x) e0;
// lambda_mix is the probability for the source to deliver the Bell state.
struct WernerState {
    BellStateKind base{};
    double lambda_mix{};

    WernerState(BellStateKind base, double lambda_mix);
    BipartiteVector vector() const;
};

// Value plus an absolute uncertainty bound (quadrature + regularization).
struct Estimate {
    double value{};
    double error{};
};

// Delta-correlated source: continuous-basis state smeared by rho_s, magnet
// variables distributed per rho_m, the residual delta(lambda_A - lambda_B)
// regularized to width eps. The remaining lambda_B integral is evaluated by
// adaptive quadrature; the result converges to
// kappa * (angular factor of the state) as eps -> 0.
// lambda_a defaults to the peak of rho_m.
Estimate model1_correlation(BellStateKind state, const Direction& a, const Direction& b,
                            const PeakedDensity& rho_s, const PeakedDensity& rho_m,
                            const RegularizedDelta& eps,
                            std::optional<double> lambda_a = std::nullopt);

// The global constant rho_s(mu_s) rho_m(mu_m) / sqrt(N), N = 4 int rho_s^2.
double model1_kappa(const PeakedDensity& rho_s, const PeakedDensity& rho_m);

// Werner-type source: exactly lambda_mix times the base-state correlation,
// computed through the mixture vector and the tensor inner product.
double model2_correlation(const WernerState& w, const Direction& a, const Direction& b);

// Bisection on lambda_mix for max_settings |S| = 2. Expected 1 / sqrt(2).
double model2_chsh_threshold(BellStateKind base);

// Independent-randomness source: each side's basis vectors smeared by its own
// density, no shared variable. Converges to
// rho_a(lambda_a) rho_b(lambda_b) / sqrt(N_A N_B) times the angular factor.
// lambda_a / lambda_b default to the density peaks.
Estimate model3_correlation(BellStateKind state, const Direction& a, const Direction& b,
                            const PeakedDensity& rho_a, const PeakedDensity& rho_b,
                            std::optional<double> lambda_a = std::nullopt,
                            std::optional<double> lambda_b = std::nullopt);

// Closed form of the model-3 global constant.
double model3_prefactor(const PeakedDensity& rho_a, const PeakedDensity& rho_b,
                        std::optional<double> lambda_a = std::nullopt,
                        std::optional<double> lambda_b = std::nullopt);

}  // namespace bell
