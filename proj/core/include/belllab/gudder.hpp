#pragma once

#include <cstdint>
#include <functional>

#include "belllab/algebra.hpp"

namespace bell {

// Continuous orthogonally-additive functional on V4 in its general
// representation f(v) = c (v.v) + k.v.
struct GudderForm {
    double quad_coeff{};
    FourVector linear{};

    double operator()(const FourVector& v) const noexcept {
        return quad_coeff * inner4(v, v) + inner4(linear, v);
    }
};

// Probability measure relative to a reference direction: c = 0,
// k = 1/2 (1, n_phi). Evaluated on state vectors (1, n_psi) it returns
// 1/2 (1 + n_phi . n_psi).
class ReferenceMeasure {
public:
    explicit ReferenceMeasure(const Direction& phi)
        : phi_(phi), form_{0.0, FourVector{1.0, phi.unit()} * 0.5} {}

    const Direction& reference() const noexcept { return phi_; }
    const GudderForm& form() const noexcept { return form_; }

private:
    Direction phi_;
    GudderForm form_;
};

double measure(const ReferenceMeasure& m, const Direction& psi);

struct OrthoAdditivityReport {
    bool passed{};
    double max_violation{};
    FourVector worst_a{};
    FourVector worst_b{};
    int trials{};
};

// Draws random orthogonal pairs (v on the unit 3-sphere, w Gram-Schmidt
// orthogonalized against v) and checks f(v+w) = f(v) + f(w) within
// 1e-10 * (1 + |f(v)| + |f(w)|). Reports the worst pair found.
OrthoAdditivityReport check_orthogonal_additivity(const std::function<double(const FourVector&)>& f,
                                                  int trials, std::uint64_t seed = 0x5eedULL);

inline OrthoAdditivityReport check_orthogonal_additivity(const GudderForm& f, int trials,
                                                         std::uint64_t seed = 0x5eedULL) {
    return check_orthogonal_additivity([&f](const FourVector& v) { return f(v); }, trials, seed);
}

// 2 <A (x) B, state>, the inner-product correlation with the factor 1/2
// absorbed so values are directly comparable with qm_correlation.
double gudder_correlation(BellStateKind state, const Direction& a, const Direction& b);

// 1/2 <(1, alpha a) (x) (1, beta b), state> under the same absorbed
// normalization; equals 1/4 [1 + alpha beta E].
double gudder_joint_probability(BellStateKind state, const Direction& a, const Direction& b,
                                int alpha, int beta);

}  // namespace bell
