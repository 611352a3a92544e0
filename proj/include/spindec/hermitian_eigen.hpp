#pragma once

// Fixed-size dense complex matrices and a cyclic Jacobi eigen-solver for the
// small Hermitian matrices that appear in the correlation measures (2x2, 4x4,
// 8x8). No heap allocation; the solver works on a local copy.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <string>

#include "spindec/errors.hpp"

namespace spindec {

using cplx = std::complex<double>;

template <std::size_t Dim>
struct CMatrix {
    std::array<cplx, Dim * Dim> a{};

    static constexpr std::size_t dim = Dim;

    cplx& operator()(std::size_t r, std::size_t c) { return a[r * Dim + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a[r * Dim + c]; }

    static CMatrix identity()
    {
        CMatrix m;
        for (std::size_t i = 0; i < Dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static CMatrix diagonal(const std::array<double, Dim>& d)
    {
        CMatrix m;
        for (std::size_t i = 0; i < Dim; ++i) m(i, i) = d[i];
        return m;
    }

    CMatrix adjoint() const
    {
        CMatrix r;
        for (std::size_t i = 0; i < Dim; ++i)
            for (std::size_t j = 0; j < Dim; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    cplx trace() const
    {
        cplx t = 0.0;
        for (std::size_t i = 0; i < Dim; ++i) t += (*this)(i, i);
        return t;
    }

    friend CMatrix operator*(const CMatrix& x, const CMatrix& y)
    {
        CMatrix r;
        for (std::size_t i = 0; i < Dim; ++i)
            for (std::size_t k = 0; k < Dim; ++k) {
                const cplx xik = x(i, k);
                if (xik == cplx(0.0)) continue;
                for (std::size_t j = 0; j < Dim; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }

    friend CMatrix operator+(CMatrix x, const CMatrix& y)
    {
        for (std::size_t i = 0; i < Dim * Dim; ++i) x.a[i] += y.a[i];
        return x;
    }

    friend CMatrix operator-(CMatrix x, const CMatrix& y)
    {
        for (std::size_t i = 0; i < Dim * Dim; ++i) x.a[i] -= y.a[i];
        return x;
    }

    friend CMatrix operator*(cplx s, CMatrix x)
    {
        for (auto& v : x.a) v *= s;
        return x;
    }
};

template <std::size_t Dim>
double frobenius_norm(const CMatrix<Dim>& m)
{
    double s = 0.0;
    for (const auto& v : m.a) s += std::norm(v);
    return std::sqrt(s);
}

template <std::size_t Dim>
double max_abs_difference(const CMatrix<Dim>& x, const CMatrix<Dim>& y)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < Dim * Dim; ++i) worst = std::max(worst, std::abs(x.a[i] - y.a[i]));
    return worst;
}

template <std::size_t Dim>
double hermiticity_error(const CMatrix<Dim>& m)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < Dim; ++i)
        for (std::size_t j = i; j < Dim; ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

template <std::size_t Dim>
struct Spectrum {
    std::array<double, Dim> eigenvalues{}; // ascending
    CMatrix<Dim> eigenvectors;             // column i pairs with eigenvalues[i]
};

using Matrix8 = CMatrix<8>;
using Spectrum8 = Spectrum<8>;

inline constexpr int jacobi_max_sweeps = 100;

// Cyclic complex Jacobi. Each rotation first removes the phase of the pivot
// A(p,q), then applies the real symmetric Jacobi rotation. Converged when every
// off-diagonal magnitude is below 1e-13 * ||A||_F.
template <std::size_t Dim>
Spectrum<Dim> hermitian_eigen(const CMatrix<Dim>& input, double hermitian_tol = 1e-10)
{
    const double norm = frobenius_norm(input);
    if (hermiticity_error(input) > hermitian_tol * std::max(1.0, norm))
        throw NotHermitian("matrix is not Hermitian (error " + std::to_string(hermiticity_error(input)) + ")");

    CMatrix<Dim> A = input;
    for (std::size_t i = 0; i < Dim; ++i) {
        A(i, i) = A(i, i).real();
        for (std::size_t j = i + 1; j < Dim; ++j) {
            const cplx avg = 0.5 * (A(i, j) + std::conj(A(j, i)));
            A(i, j) = avg;
            A(j, i) = std::conj(avg);
        }
    }
    CMatrix<Dim> V = CMatrix<Dim>::identity();
    const double threshold = 1e-13 * norm;

    const auto off_max = [&] {
        double worst = 0.0;
        for (std::size_t i = 0; i < Dim; ++i)
            for (std::size_t j = i + 1; j < Dim; ++j) worst = std::max(worst, std::abs(A(i, j)));
        return worst;
    };

    int sweep = 0;
    while (norm > 0.0 && off_max() >= threshold) {
        if (++sweep > jacobi_max_sweeps)
            throw NoConvergence("Jacobi did not converge in " + std::to_string(jacobi_max_sweeps) + " sweeps");
        for (std::size_t p = 0; p < Dim; ++p) {
            for (std::size_t q = p + 1; q < Dim; ++q) {
                const double mag = std::abs(A(p, q));
                if (mag == 0.0) continue;
                const cplx phase = A(p, q) / mag; // e^{i phi}
                const double app = A(p, p).real();
                const double aqq = A(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // G = diag(1, conj(phase)) * [[c, s], [-s, c]]
                const cplx g00 = c, g01 = s;
                const cplx g10 = -s * std::conj(phase), g11 = c * std::conj(phase);

                for (std::size_t k = 0; k < Dim; ++k) { // A <- A G
                    const cplx akp = A(k, p), akq = A(k, q);
                    A(k, p) = akp * g00 + akq * g10;
                    A(k, q) = akp * g01 + akq * g11;
                }
                for (std::size_t k = 0; k < Dim; ++k) { // A <- G^H A
                    const cplx apk = A(p, k), aqk = A(q, k);
                    A(p, k) = std::conj(g00) * apk + std::conj(g10) * aqk;
                    A(q, k) = std::conj(g01) * apk + std::conj(g11) * aqk;
                }
                A(p, q) = 0.0;
                A(q, p) = 0.0;
                A(p, p) = A(p, p).real();
                A(q, q) = A(q, q).real();
                for (std::size_t k = 0; k < Dim; ++k) { // V <- V G
                    const cplx vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = vkp * g00 + vkq * g10;
                    V(k, q) = vkp * g01 + vkq * g11;
                }
            }
        }
    }

    std::array<std::size_t, Dim> order;
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return A(x, x).real() < A(y, y).real(); });

    Spectrum<Dim> out;
    for (std::size_t i = 0; i < Dim; ++i) {
        out.eigenvalues[i] = A(order[i], order[i]).real();
        for (std::size_t k = 0; k < Dim; ++k) out.eigenvectors(k, i) = V(k, order[i]);
    }
    return out;
}

template <std::size_t Dim>
std::array<double, Dim> hermitian_eigenvalues(const CMatrix<Dim>& m)
{
    return hermitian_eigen(m).eigenvalues;
}

} // namespace spindec
