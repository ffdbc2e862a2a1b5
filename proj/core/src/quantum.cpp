#include "belllab/quantum.hpp"

#include <cmath>
#include <stdexcept>

namespace bell {

namespace {

constexpr Complex kI{0.0, 1.0};

double checked_real(Complex z) {
    if (std::abs(z.imag()) > 1e-12)
        throw std::logic_error("expectation has non-negligible imaginary residue");
    return z.real();
}

void require_outcome(int v) {
    if (v != 1 && v != -1) throw std::invalid_argument("outcome must be +1 or -1");
}

}  // namespace

Operator2 Operator2::operator*(const Operator2& o) const noexcept {
    Operator2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.at(i, j) = at(i, 0) * o.at(0, j) + at(i, 1) * o.at(1, j);
    return r;
}

Operator2 Operator2::operator+(const Operator2& o) const noexcept {
    Operator2 r;
    for (std::size_t k = 0; k < 4; ++k) r.m[k] = m[k] + o.m[k];
    return r;
}

Operator2 Operator2::operator*(Complex s) const noexcept {
    Operator2 r;
    for (std::size_t k = 0; k < 4; ++k) r.m[k] = m[k] * s;
    return r;
}

Operator2 pauli(int mu) {
    Operator2 s;
    switch (mu) {
        case 0:
            s.at(0, 0) = 1.0;
            s.at(1, 1) = 1.0;
            break;
        case 1:
            s.at(0, 1) = 1.0;
            s.at(1, 0) = 1.0;
            break;
        case 2:
            s.at(0, 1) = -kI;
            s.at(1, 0) = kI;
            break;
        case 3:
            s.at(0, 0) = 1.0;
            s.at(1, 1) = -1.0;
            break;
        default: throw std::invalid_argument("pauli index must be 0..3");
    }
    return s;
}

Operator2 pauli_dot(const Vec3& n) {
    Operator2 s;
    s.at(0, 0) = Complex{n.z, 0.0};
    s.at(0, 1) = Complex{n.x, -n.y};
    s.at(1, 0) = Complex{n.x, n.y};
    s.at(1, 1) = Complex{-n.z, 0.0};
    return s;
}

Operator2 projector(const Direction& d, int outcome) {
    require_outcome(outcome);
    const Operator2 nd = pauli_dot(d.unit());
    return (pauli(0) + nd * Complex{static_cast<double>(outcome), 0.0}) * Complex{0.5, 0.0};
}

Ket4 bell_ket(BellStateKind kind) {
    constexpr double kInvSqrt2 = 0.7071067811865475244008443621048;
    Ket4 k{};
    switch (kind) {
        case BellStateKind::PhiPlus:
            k[0] = kInvSqrt2;
            k[3] = kInvSqrt2;
            break;
        case BellStateKind::PhiMinus:
            k[0] = kInvSqrt2;
            k[3] = -kInvSqrt2;
            break;
        case BellStateKind::PsiPlus:
            k[1] = kInvSqrt2;
            k[2] = kInvSqrt2;
            break;
        default:
            k[1] = kInvSqrt2;
            k[2] = -kInvSqrt2;
            break;
    }
    return k;
}

Ket4 kron_apply(const Operator2& a, const Operator2& b, const Ket4& k) {
    Ket4 out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Complex acc{};
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q)
                    acc += a.at(i, p) * b.at(j, q) * k[static_cast<std::size_t>(2 * p + q)];
            out[static_cast<std::size_t>(2 * i + j)] = acc;
        }
    return out;
}

double real_expectation(const Ket4& k, const Operator2& a, const Operator2& b) {
    const Ket4 t = kron_apply(a, b, k);
    Complex acc{};
    for (std::size_t i = 0; i < 4; ++i) acc += std::conj(k[i]) * t[i];
    return checked_real(acc);
}

double born_probability(const Direction& phi, const Direction& psi) {
    const Operator2 prod = projector(phi, +1) * projector(psi, +1);
    return checked_real(prod.trace());
}

double qm_correlation(BellStateKind state, const Direction& a, const Direction& b) {
    return real_expectation(bell_ket(state), pauli_dot(a.unit()), pauli_dot(b.unit()));
}

double qm_joint_probability(BellStateKind state, const Direction& a, const Direction& b,
                            int alpha, int beta) {
    require_outcome(alpha);
    require_outcome(beta);
    return real_expectation(bell_ket(state), projector(a, alpha), projector(b, beta));
}

}  // namespace bell
