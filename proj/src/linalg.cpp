#include "landauer/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace landauer::linalg {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kOffDiagTol = 1e-13;
constexpr int kMaxSweeps = 100;

template <int N>
double off_diag_frobenius(const Matrix<N>& a) {
    double s = 0.0;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

} // namespace

template <int N>
double hermiticity_defect(const Matrix<N>& m) {
    double d = 0.0;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) d = std::max(d, std::abs(m(r, c) - std::conj(m(c, r))));
    return d;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 m;
    for (int ra = 0; ra < 2; ++ra)
        for (int ca = 0; ca < 2; ++ca)
            for (int rb = 0; rb < 2; ++rb)
                for (int cb = 0; cb < 2; ++cb)
                    m(2 * ra + rb, 2 * ca + cb) = a(ra, ca) * b(rb, cb);
    return m;
}

template <int N>
HermitianEig<N> hermitian_eig(const Matrix<N>& m) {
    if (hermiticity_defect(m) > kHermTol)
        throw std::invalid_argument("hermitian_eig: matrix is not Hermitian within 1e-12");

    // Work on the Hermitized copy so both triangles agree exactly.
    Matrix<N> a;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

    Matrix<N> v = Matrix<N>::identity();

    int sweep = 0;
    while (off_diag_frobenius(a) >= kOffDiagTol) {
        if (++sweep > kMaxSweeps)
            throw std::runtime_error("hermitian_eig: Jacobi sweeps failed to converge");

        for (int p = 0; p < N - 1; ++p) {
            for (int q = p + 1; q < N; ++q) {
                const complexd apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;

                // Unitary plane rotation [[c, s*u], [-s*conj(u), c]] with
                // u = apq/|apq|; the angle zeroes the (p,q) element.
                const complexd u = apq / r;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                a(p, p) = complexd{c * c * app + s * s * aqq - 2.0 * c * s * r, 0.0};
                a(q, q) = complexd{s * s * app + c * c * aqq + 2.0 * c * s * r, 0.0};
                a(p, q) = complexd{0.0, 0.0};
                a(q, p) = complexd{0.0, 0.0};

                for (int k = 0; k < N; ++k) {
                    if (k != p && k != q) {
                        const complexd akp = a(k, p);
                        const complexd akq = a(k, q);
                        a(k, p) = c * akp - s * std::conj(u) * akq;
                        a(k, q) = s * u * akp + c * akq;
                        a(p, k) = std::conj(a(k, p));
                        a(q, k) = std::conj(a(k, q));
                    }
                    const complexd vkp = v(k, p);
                    const complexd vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(u) * vkq;
                    v(k, q) = s * u * vkp + c * vkq;
                }
            }
        }
    }

    // Ascending eigenvalue order; stable so identical input gives identical
    // output, including inside degenerate clusters.
    std::array<int, N> idx{};
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEig<N> out;
    for (int c = 0; c < N; ++c) {
        out.values[static_cast<std::size_t>(c)] = a(idx[static_cast<std::size_t>(c)], idx[static_cast<std::size_t>(c)]).real();
        for (int r = 0; r < N; ++r) out.vectors(r, c) = v(r, idx[static_cast<std::size_t>(c)]);
    }
    return out;
}

template <int N>
Matrix<N> propagator(const HermitianEig<N>& eig, double t) {
    if (t == 0.0) return Matrix<N>::identity();

    Matrix<N> u;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
            complexd acc{0.0, 0.0};
            for (int k = 0; k < N; ++k) {
                const complexd phase = std::polar(1.0, -eig.values[static_cast<std::size_t>(k)] * t);
                acc += eig.vectors(r, k) * phase * std::conj(eig.vectors(c, k));
            }
            u(r, c) = acc;
        }
    return u;
}

template <int N>
Matrix<N> propagator(const Matrix<N>& h, double t) {
    return propagator(hermitian_eig(h), t);
}

template <int N>
Matrix<N> evolve_density(const HermitianEig<N>& eig, const Matrix<N>& rho, double t) {
    if (t == 0.0) return rho;

    const Matrix<N>& v = eig.vectors;
    const Matrix<N> m = v.adjoint() * rho * v;
    Matrix<N> w;
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) {
            const double dl = eig.values[static_cast<std::size_t>(j)] - eig.values[static_cast<std::size_t>(k)];
            w(j, k) = m(j, k) * std::polar(1.0, -dl * t);
        }
    return v * w * v.adjoint();
}

Mat2 partial_trace(const Mat4& rho, Subsystem keep) {
    if (std::abs(rho.trace() - complexd{1.0, 0.0}) > 1e-12)
        throw std::invalid_argument("partial_trace: input trace deviates from one beyond 1e-12");

    Mat2 out;
    if (keep == Subsystem::System) {
        for (int s = 0; s < 2; ++s)
            for (int sp = 0; sp < 2; ++sp)
                out(s, sp) = rho(2 * s + 0, 2 * sp + 0) + rho(2 * s + 1, 2 * sp + 1);
    } else {
        for (int e = 0; e < 2; ++e)
            for (int ep = 0; ep < 2; ++ep)
                out(e, ep) = rho(0 + e, 0 + ep) + rho(2 + e, 2 + ep);
    }
    return out;
}

template double hermiticity_defect<2>(const Mat2&);
template double hermiticity_defect<4>(const Mat4&);
template HermitianEig<2> hermitian_eig<2>(const Mat2&);
template HermitianEig<4> hermitian_eig<4>(const Mat4&);
template Mat2 propagator<2>(const Mat2&, double);
template Mat4 propagator<4>(const Mat4&, double);
template Mat2 propagator<2>(const HermitianEig<2>&, double);
template Mat4 propagator<4>(const HermitianEig<4>&, double);
template Mat2 evolve_density<2>(const HermitianEig<2>&, const Mat2&, double);
template Mat4 evolve_density<4>(const HermitianEig<4>&, const Mat4&, double);

} // namespace landauer::linalg
