// linalg.hpp — dense complex matrices for 2x2 / 4x4 Hermitian problems:
// products, Kronecker products, Jacobi eigendecomposition, unitary
// propagators, partial traces. Row-major storage, basis order {|1>,|0>}
// for each qubit factor (system index is the major one in 4x4 objects).

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace landauer::linalg {

using complexd = std::complex<double>;

template <int N>
class Matrix {
    static_assert(N == 2 || N == 4, "only 2x2 and 4x4 matrices are supported");

public:
    Matrix() { e_.fill(complexd{0.0, 0.0}); }

    static Matrix identity() {
        Matrix m;
        for (int i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    static constexpr int dim() { return N; }

    complexd& operator()(int r, int c) { return e_[static_cast<std::size_t>(r * N + c)]; }
    const complexd& operator()(int r, int c) const { return e_[static_cast<std::size_t>(r * N + c)]; }

    Matrix adjoint() const {
        Matrix m;
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    complexd trace() const {
        complexd t{0.0, 0.0};
        for (int i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    // Largest entrywise magnitude; used for tolerance checks.
    double max_abs() const {
        double m = 0.0;
        for (const auto& z : e_) m = std::max(m, std::abs(z));
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix m;
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
        return m;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix m;
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix m;
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) {
                complexd acc{0.0, 0.0};
                for (int k = 0; k < N; ++k) acc += a(r, k) * b(k, c);
                m(r, c) = acc;
            }
        return m;
    }

    friend Matrix operator*(complexd s, const Matrix& a) {
        Matrix m;
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = s * a.e_[i];
        return m;
    }

    friend Matrix operator*(double s, const Matrix& a) { return complexd{s, 0.0} * a; }

private:
    std::array<complexd, static_cast<std::size_t>(N * N)> e_;
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

// Eigenvalues ascending; columns of `vectors` are the matching eigenvectors.
template <int N>
struct HermitianEig {
    std::array<double, N> values{};
    Matrix<N> vectors;
};

// Deviation from Hermiticity, max |m - m^dag| entrywise.
template <int N>
double hermiticity_defect(const Matrix<N>& m);

// Kronecker product in the ordered basis {|1>,|0>} (x) {|1>,|0>}:
// joint row index = 2*r_a + r_b.
Mat4 kron(const Mat2& a, const Mat2& b);

// Cyclic complex Jacobi sweeps; converges when the off-diagonal Frobenius
// norm drops below 1e-13, capped at 100 sweeps. Throws std::invalid_argument
// for non-Hermitian input (defect > 1e-12) and std::runtime_error when the
// sweep cap is hit. Exact zero off-diagonal entries are never rotated, so
// structural sparsity of the input is preserved in the eigenvector matrix.
template <int N>
HermitianEig<N> hermitian_eig(const Matrix<N>& m);

// U = exp(-i h t) through the eigendecomposition of h. t == 0 returns the
// exact identity.
template <int N>
Matrix<N> propagator(const Matrix<N>& h, double t);

template <int N>
Matrix<N> propagator(const HermitianEig<N>& eig, double t);

// Conjugation by exp(-i h t) applied in the eigenbasis: entries of
// V^dag rho V pick up phases exp(-i (l_j - l_k) t), so populations in the
// eigenbasis are preserved exactly. Equal to U rho U^dag up to rounding.
template <int N>
Matrix<N> evolve_density(const HermitianEig<N>& eig, const Matrix<N>& rho, double t);

enum class Subsystem { System, Environment };

// Trace out the complementary factor of a two-qubit density matrix.
// Requires unit trace within 1e-12.
Mat2 partial_trace(const Mat4& rho, Subsystem keep);

} // namespace landauer::linalg
