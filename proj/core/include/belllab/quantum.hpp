#pragma once

#include <array>
#include <complex>

#include "belllab/algebra.hpp"

namespace bell {

using Complex = std::complex<double>;

// Dense complex 2x2 operator, row-major.
struct Operator2 {
    std::array<Complex, 4> m{};

    Complex& at(int i, int j) noexcept { return m[static_cast<std::size_t>(2 * i + j)]; }
    Complex at(int i, int j) const noexcept { return m[static_cast<std::size_t>(2 * i + j)]; }

    Operator2 operator*(const Operator2& o) const noexcept;
    Operator2 operator+(const Operator2& o) const noexcept;
    Operator2 operator*(Complex s) const noexcept;
    Complex trace() const noexcept { return m[0] + m[3]; }
};

// sigma_0 is the identity, sigma_{1,2,3} the Pauli matrices.
Operator2 pauli(int mu);

// n . sigma for a real 3-vector n.
Operator2 pauli_dot(const Vec3& n);

// Projector 1/2 (sigma_0 + outcome * n.sigma); outcome must be +-1.
Operator2 projector(const Direction& d, int outcome);

using Ket2 = std::array<Complex, 2>;
using Ket4 = std::array<Complex, 4>;

// Amplitudes in the product basis |uu>, |ud>, |du>, |dd>.
Ket4 bell_ket(BellStateKind kind);

// (a (x) b) |k| by explicit 4x4 matrix-vector algebra.
Ket4 kron_apply(const Operator2& a, const Operator2& b, const Ket4& k);

// <k| (a (x) b) |k>. Throws std::logic_error if the imaginary residue
// exceeds 1e-12 (signals an algebra bug for the Hermitian inputs used here).
double real_expectation(const Ket4& k, const Operator2& a, const Operator2& b);

// Tr(Pi_phi Pi_psi), evaluated through the matrix product.
double born_probability(const Direction& phi, const Direction& psi);

// <K| (a.sigma (x) b.sigma) |K> for the chosen Bell ket.
double qm_correlation(BellStateKind state, const Direction& a, const Direction& b);

// <K| Pi^A(a, alpha) (x) Pi^B(b, beta) |K>.
double qm_joint_probability(BellStateKind state, const Direction& a, const Direction& b,
                            int alpha, int beta);

}  // namespace bell
