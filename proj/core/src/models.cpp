#include "belllab/models.hpp"

#include "belllab/gudder.hpp"
#include "belllab/lhv.hpp"
#include "belllab/quantum.hpp"

namespace bell {

namespace {
std::string with_state(const char* base, BellStateKind state) {
    return std::string(base) + "/" + std::string(to_string(state));
}
}  // namespace

std::string QuantumModel::name() const { return with_state("qm", state_); }

double QuantumModel::correlation(const Direction& a, const Direction& b) const {
    return qm_correlation(state_, a, b);
}

double QuantumModel::joint_probability(const Direction& a, const Direction& b, int alpha,
                                       int beta) const {
    return qm_joint_probability(state_, a, b, alpha, beta);
}

std::string GudderModel::name() const { return with_state("gudder", state_); }

double GudderModel::correlation(const Direction& a, const Direction& b) const {
    return gudder_correlation(state_, a, b);
}

double GudderModel::joint_probability(const Direction& a, const Direction& b, int alpha,
                                      int beta) const {
    return gudder_joint_probability(state_, a, b, alpha, beta);
}

std::string WernerModel::name() const { return with_state("werner", state_.base); }

double WernerModel::correlation(const Direction& a, const Direction& b) const {
    return model2_correlation(state_, a, b);
}

PeakedSourceModel::PeakedSourceModel(BellStateKind state, PeakedDensity rho_s, PeakedDensity rho_m,
                                     RegularizedDelta eps, bool normalized)
    : state_(state), rho_s_(rho_s), rho_m_(rho_m), eps_(eps) {
    // The state-independent prefactor: correlation at (z, z) for PhiPlus,
    // whose angular factor is exactly 1.
    const Direction z = Direction::z_axis();
    scale_ = model1_correlation(BellStateKind::PhiPlus, z, z, rho_s_, rho_m_, eps_).value;
    if (normalized) scale_ /= model1_kappa(rho_s_, rho_m_);
}

std::string PeakedSourceModel::name() const { return with_state("model1", state_); }

double PeakedSourceModel::correlation(const Direction& a, const Direction& b) const {
    return scale_ * gudder_correlation(state_, a, b);
}

IndependentSourceModel::IndependentSourceModel(BellStateKind state, PeakedDensity rho_a,
                                               PeakedDensity rho_b, bool normalized)
    : state_(state) {
    const Direction z = Direction::z_axis();
    scale_ = model3_correlation(BellStateKind::PhiPlus, z, z, rho_a, rho_b).value;
    if (normalized) scale_ /= model3_prefactor(rho_a, rho_b);
}

std::string IndependentSourceModel::name() const { return with_state("model3", state_); }

double IndependentSourceModel::correlation(const Direction& a, const Direction& b) const {
    return scale_ * gudder_correlation(state_, a, b);
}

std::string SignLocalModel::name() const { return "sign"; }

double SignLocalModel::correlation(const Direction& a, const Direction& b) const {
    return sign_model_correlation(a, b);
}

}  // namespace bell
