#include "belllab/extensions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "belllab/chsh.hpp"
#include "belllab/gudder.hpp"
#include "belllab/quadrature.hpp"

namespace bell {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599344;
constexpr double kSqrtPi = 1.7724538509055160272981674833411;

double normal_pdf(double x, double mu, double sigma) noexcept {
    const double t = (x - mu) / sigma;
    return kInvSqrt2Pi / sigma * std::exp(-0.5 * t * t);
}

QuadResult integrate_or_throw(const std::function<double(double)>& f, double lo, double hi) {
    const QuadResult q = integrate_adaptive(f, lo, hi, 1e-10);
    if (!q.converged)
        throw QuadratureError("quadrature did not converge; achieved error " +
                                  std::to_string(q.error),
                              q.error);
    return q;
}

// int g_eps(center - x) rho(x) dx by quadrature, plus the closed-form
// Gaussian-Gaussian overlap and the eps -> 0 regularization error bound.
struct SmearedValue {
    double value;
    double quad_error;
    double reg_error;
};

SmearedValue smeared_density(const PeakedDensity& rho, double eps, double center) {
    const double lo = std::min(rho.mu - 8.0 * rho.sigma, center - 8.0 * eps);
    const double hi = std::max(rho.mu + 8.0 * rho.sigma, center + 8.0 * eps);
    const QuadResult q = integrate_or_throw(
        [&](double x) { return normal_pdf(center - x, 0.0, eps) * rho.pdf(x); }, lo, hi);
    const double overlap = normal_pdf(center, rho.mu, std::hypot(rho.sigma, eps));
    const double reg = std::abs(overlap - rho.pdf(center));
    return {q.value, q.error + std::abs(q.value - overlap), reg};
}

// Local adapter so the threshold bisection can drive the optimizer without
// pulling the public model catalog into this translation unit.
class WernerCorrelation final : public CorrelationModel {
public:
    WernerCorrelation(BellStateKind base, double lambda_mix) : w_(base, lambda_mix) {}
    std::string name() const override { return "werner"; }
    double correlation(const Direction& a, const Direction& b) const override {
        return model2_correlation(w_, a, b);
    }

private:
    WernerState w_;
};

}  // namespace

PeakedDensity::PeakedDensity(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
}

double PeakedDensity::pdf(double x) const noexcept { return normal_pdf(x, mu, sigma); }

double PeakedDensity::sq_integral() const noexcept { return 1.0 / (2.0 * sigma * kSqrtPi); }

RegularizedDelta::RegularizedDelta(double epsilon_) : epsilon(epsilon_) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
}

double RegularizedDelta::pdf(double x) const noexcept { return normal_pdf(x, 0.0, epsilon); }

WernerState::WernerState(BellStateKind base_, double lambda_mix_)
    : base(base_), lambda_mix(lambda_mix_) {
    if (!(lambda_mix >= 0.0 && lambda_mix <= 1.0))
        throw std::invalid_argument("lambda_mix must lie in [0, 1]");
}

BipartiteVector WernerState::vector() const {
    BipartiteVector random_state;
    random_state(0, 0) = 1.0;
    return bell_vector(base) * lambda_mix + random_state * (1.0 - lambda_mix);
}

Estimate model1_correlation(BellStateKind state, const Direction& a, const Direction& b,
                            const PeakedDensity& rho_s, const PeakedDensity& rho_m,
                            const RegularizedDelta& eps, std::optional<double> lambda_a) {
    if (!(eps.epsilon < rho_m.sigma))
        throw std::invalid_argument("regularization width must be small against sigma");
    const double la = lambda_a.value_or(rho_m.mu);
    const double angular = gudder_correlation(state, a, b);
    const double prefactor = rho_s.pdf(la) / std::sqrt(4.0 * rho_s.sq_integral());
    const SmearedValue sm = smeared_density(rho_m, eps.epsilon, la);
    return {prefactor * sm.value * angular,
            prefactor * (sm.quad_error + sm.reg_error) * std::abs(angular)};
}

double model1_kappa(const PeakedDensity& rho_s, const PeakedDensity& rho_m) {
    return rho_s.pdf(rho_s.mu) * rho_m.pdf(rho_m.mu) / std::sqrt(4.0 * rho_s.sq_integral());
}

double model2_correlation(const WernerState& w, const Direction& a, const Direction& b) {
    const BipartiteVector ab =
        tensor(observable_vector(Party::Alice, a), observable_vector(Party::Bob, b));
    return 2.0 * inner16(ab, w.vector());
}

double model2_chsh_threshold(BellStateKind base) {
    const auto max_abs_s = [&](double lambda_mix) {
        return maximize_chsh(WernerCorrelation(base, lambda_mix), /*restarts=*/2).abs_s;
    };
    double lo = 0.0, hi = 1.0;
    if (max_abs_s(hi) <= 2.0) return 1.0;  // never violates; degenerate
    while (hi - lo > 2e-4) {
        const double mid = 0.5 * (lo + hi);
        (max_abs_s(mid) > 2.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

Estimate model3_correlation(BellStateKind state, const Direction& a, const Direction& b,
                            const PeakedDensity& rho_a, const PeakedDensity& rho_b,
                            std::optional<double> lambda_a, std::optional<double> lambda_b) {
    const double la = lambda_a.value_or(rho_a.mu);
    const double lb = lambda_b.value_or(rho_b.mu);
    const double angular = gudder_correlation(state, a, b);
    const double eps = std::min(rho_a.sigma, rho_b.sigma) / 2000.0;

    const SmearedValue sa = smeared_density(rho_a, eps, la);
    const SmearedValue sb = smeared_density(rho_b, eps, lb);
    const double na = rho_a.sq_integral();
    const double nb = rho_b.sq_integral();

    const double side_a = sa.value / std::sqrt(na);
    const double side_b = sb.value / std::sqrt(nb);
    const double err_a = (sa.quad_error + sa.reg_error) / std::sqrt(na);
    const double err_b = (sb.quad_error + sb.reg_error) / std::sqrt(nb);
    return {side_a * side_b * angular,
            (err_a * std::abs(side_b) + err_b * std::abs(side_a)) * std::abs(angular)};
}

double model3_prefactor(const PeakedDensity& rho_a, const PeakedDensity& rho_b,
                        std::optional<double> lambda_a, std::optional<double> lambda_b) {
    const double la = lambda_a.value_or(rho_a.mu);
    const double lb = lambda_b.value_or(rho_b.mu);
    return rho_a.pdf(la) * rho_b.pdf(lb) / std::sqrt(rho_a.sq_integral() * rho_b.sq_integral());
}

}  // namespace bell
