#pragma once

#include "belllab/chsh.hpp"
#include "belllab/extensions.hpp"

namespace bell {

// Exact quantum oracle for a Bell state; probabilities via projector algebra.
class QuantumModel final : public CorrelationModel {
public:
    explicit QuantumModel(BellStateKind state) : state_(state) {}
    std::string name() const override;
    double correlation(const Direction& a, const Direction& b) const override;
    double joint_probability(const Direction& a, const Direction& b, int alpha,
                             int beta) const override;
    BellStateKind state() const noexcept { return state_; }

private:
    BellStateKind state_;
};

// Vector-space measure model; probabilities via the tensor inner product.
class GudderModel final : public CorrelationModel {
public:
    explicit GudderModel(BellStateKind state) : state_(state) {}
    std::string name() const override;
    double correlation(const Direction& a, const Direction& b) const override;
    double joint_probability(const Direction& a, const Direction& b, int alpha,
                             int beta) const override;
    BellStateKind state() const noexcept { return state_; }

private:
    BellStateKind state_;
};

class WernerModel final : public CorrelationModel {
public:
    WernerModel(BellStateKind base, double lambda_mix) : state_(base, lambda_mix) {}
    std::string name() const override;
    double correlation(const Direction& a, const Direction& b) const override;
    const WernerState& state() const noexcept { return state_; }

private:
    WernerState state_;
};

// Delta-correlated continuous source. When normalized, correlations are
// divided by the closed-form global constant so they line up with the
// quantum values as eps -> 0.
class PeakedSourceModel final : public CorrelationModel {
public:
    PeakedSourceModel(BellStateKind state, PeakedDensity rho_s, PeakedDensity rho_m,
                      RegularizedDelta eps, bool normalized = true);
    std::string name() const override;
    double correlation(const Direction& a, const Direction& b) const override;

private:
    BellStateKind state_;
    PeakedDensity rho_s_;
    PeakedDensity rho_m_;
    RegularizedDelta eps_;
    double scale_;  // prefactor including quadrature, divided by kappa if normalized
};

// Independent-randomness source, analogous normalization story.
class IndependentSourceModel final : public CorrelationModel {
public:
    IndependentSourceModel(BellStateKind state, PeakedDensity rho_a, PeakedDensity rho_b,
                           bool normalized = true);
    std::string name() const override;
    double correlation(const Direction& a, const Direction& b) const override;

private:
    BellStateKind state_;
    double scale_;
};

// Hemisphere local strategy, closed-form correlation -1 + 2 theta / pi.
class SignLocalModel final : public CorrelationModel {
public:
    std::string name() const override;
    double correlation(const Direction& a, const Direction& b) const override;
};

}  // namespace bell
