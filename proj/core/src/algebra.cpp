#include "belllab/algebra.hpp"

#include <algorithm>

namespace bell {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.141592653589793238462643383279;

double wrap_2pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}
}  // namespace

double angle_between(const Vec3& u, const Vec3& v) {
    // atan2 form avoids acos cancellation at the ends of the range
    const Vec3 cross{u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
    return std::atan2(cross.norm(), u.dot(v));
}

Direction::Direction(double theta, double phi) {
    double t = wrap_2pi(theta);
    double p = phi;
    if (t > kPi) {
        t = kTwoPi - t;
        p += kPi;
    }
    theta_ = t;
    phi_ = wrap_2pi(p);
    const double st = std::sin(theta_);
    n_ = {st * std::cos(phi_), st * std::sin(phi_), std::cos(theta_)};
}

BipartiteVector BipartiteVector::operator+(const BipartiteVector& o) const noexcept {
    BipartiteVector out;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) out(mu, nu) = (*this)(mu, nu) + o(mu, nu);
    return out;
}

BipartiteVector BipartiteVector::operator*(double s) const noexcept {
    BipartiteVector out;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) out(mu, nu) = (*this)(mu, nu) * s;
    return out;
}

BipartiteVector bell_vector(BellStateKind kind) {
    BipartiteVector out;
    const auto signs = bell_signs(kind);
    for (int mu = 0; mu < 4; ++mu) out(mu, mu) = 0.5 * signs[static_cast<std::size_t>(mu)];
    return out;
}

std::string_view to_string(BellStateKind kind) {
    switch (kind) {
        case BellStateKind::PhiPlus: return "phi_plus";
        case BellStateKind::PhiMinus: return "phi_minus";
        case BellStateKind::PsiPlus: return "psi_plus";
        default: return "psi_minus";
    }
}

std::optional<BellStateKind> bell_state_from_string(std::string_view name) {
    for (BellStateKind k : kAllBellStates)
        if (name == to_string(k)) return k;
    return std::nullopt;
}

}  // namespace bell
