#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string_view>

namespace bell {

struct Vec3 {
    double x{};
    double y{};
    double z{};

    constexpr double dot(const Vec3& o) const noexcept { return x * o.x + y * o.y + z * o.z; }
    double norm() const noexcept { return std::sqrt(dot(*this)); }

    constexpr Vec3 operator+(const Vec3& o) const noexcept { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const noexcept { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const noexcept { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const noexcept { return {x * s, y * s, z * s}; }
};

// Angle between two unit vectors, stable near 0 and pi.
double angle_between(const Vec3& u, const Vec3& v);

// Measurement setting on the unit sphere. Stores polar/azimuthal angles in
// radians; arbitrary input angles are wrapped into theta in [0, pi],
// phi in [0, 2*pi). The derived unit vector is exact for any input, so the
// optimizer can treat the angles as an unconstrained box.
class Direction {
public:
    Direction(double theta, double phi);

    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }
    const Vec3& unit() const noexcept { return n_; }

    static Direction x_axis() { return Direction(kHalfPi, 0.0); }
    static Direction y_axis() { return Direction(kHalfPi, kHalfPi); }
    static Direction z_axis() { return Direction(0.0, 0.0); }

private:
    static constexpr double kHalfPi = 1.5707963267948966;
    double theta_;
    double phi_;
    Vec3 n_;
};

// Element (v0, v) of the real inner-product space V4.
struct FourVector {
    double v0{};
    Vec3 v{};

    constexpr double component(int mu) const noexcept {
        switch (mu) {
            case 0: return v0;
            case 1: return v.x;
            case 2: return v.y;
            default: return v.z;
        }
    }

    constexpr FourVector operator+(const FourVector& o) const noexcept {
        return {v0 + o.v0, v + o.v};
    }
    constexpr FourVector operator-(const FourVector& o) const noexcept {
        return {v0 - o.v0, v - o.v};
    }
    constexpr FourVector operator*(double s) const noexcept { return {v0 * s, v * s}; }
};

constexpr double inner4(const FourVector& a, const FourVector& b) noexcept {
    return a.v0 * b.v0 + a.v.dot(b.v);
}

// State vector (1, n) attached to a pure direction.
inline FourVector state_vector(const Direction& d) { return {1.0, d.unit()}; }

// Element of V4 (x) V4 as a dense 4x4 coefficient array; c[mu][nu] multiplies
// e_mu^A (x) e_nu^B.
struct BipartiteVector {
    std::array<std::array<double, 4>, 4> c{};

    double& operator()(int mu, int nu) noexcept { return c[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)]; }
    double operator()(int mu, int nu) const noexcept { return c[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)]; }

    BipartiteVector operator+(const BipartiteVector& o) const noexcept;
    BipartiteVector operator*(double s) const noexcept;
};

inline BipartiteVector tensor(const FourVector& a, const FourVector& b) noexcept {
    BipartiteVector out;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) out(mu, nu) = a.component(mu) * b.component(nu);
    return out;
}

inline double inner16(const BipartiteVector& a, const BipartiteVector& b) noexcept {
    double s = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) s += a(mu, nu) * b(mu, nu);
    return s;
}

enum class BellStateKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellStateKind, 4> kAllBellStates = {
    BellStateKind::PhiPlus, BellStateKind::PhiMinus, BellStateKind::PsiPlus,
    BellStateKind::PsiMinus};

// Diagonal sign pattern (s0, s1, s2, s3) of the state's coefficient array.
constexpr std::array<double, 4> bell_signs(BellStateKind kind) noexcept {
    switch (kind) {
        case BellStateKind::PhiPlus: return {+1.0, +1.0, -1.0, +1.0};
        case BellStateKind::PhiMinus: return {+1.0, -1.0, +1.0, +1.0};
        case BellStateKind::PsiPlus: return {+1.0, +1.0, +1.0, -1.0};
        default: return {+1.0, -1.0, -1.0, -1.0};
    }
}

// Unit-norm entangled state vector: coefficients (+-1/2) on the diagonal.
BipartiteVector bell_vector(BellStateKind kind);

std::string_view to_string(BellStateKind kind);
std::optional<BellStateKind> bell_state_from_string(std::string_view name);

enum class Party { Alice, Bob };

// Observable vector (0, n) for a measurement along d on the given side.
inline FourVector observable_vector(Party /*side*/, const Direction& d) {
    return {0.0, d.unit()};
}

}  // namespace bell
