#pragma once

// Correlation measures of the three-qubit state: tripartite negativity (exact
// and closed form for the GHZ/W family) and the genuine tripartite discord
// closed form. All logarithms are base 2.

#include <algorithm>
#include <cmath>
#include <string>

#include "spindec/central_system.hpp"
#include "spindec/errors.hpp"
#include "spindec/hermitian_eigen.hpp"

namespace spindec {

struct QCSample {
    double t = 0.0;
    double negativity = 0.0;
    double gtqd = 0.0;
    double f07 = 1.0;
};

namespace qcorr_detail {

inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

inline void check_mixture_args(double a, double& f07)
{
    if (!(a >= 0.0 && a <= 1.0)) throw InvalidArgument("mixture weight a must lie in [0, 1]");
    if (!(f07 >= 0.0 && f07 <= 1.0 + 1e-12)) throw InvalidArgument("|F_07| must lie in [0, 1]");
    f07 = std::min(f07, 1.0);
}

} // namespace qcorr_detail

// Transpose on qubit C (least significant bit of the basis index).
inline Matrix8 partial_transpose_C(const Matrix8& rho)
{
    Matrix8 out;
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            const int r2 = (r & ~1) | (c & 1);
            const int c2 = (c & ~1) | (r & 1);
            out(r2, c2) = rho(r, c);
        }
    return out;
}

// Sum of |eigenvalues| of rho^{T_C} minus one. For the permutation-symmetric
// GHZ/W family every one-vs-two cut gives the same value.
inline double negativity_exact(const Matrix8& rho)
{
    const auto ev = hermitian_eigenvalues(partial_transpose_C(rho));
    double s = 0.0;
    for (double v : ev) s += std::abs(v);
    return std::max(0.0, s - 1.0);
}

inline double negativity_closed_form(double a, double f07)
{
    qcorr_detail::check_mixture_args(a, f07);
    const double a2 = a * a;
    const double w = (1.0 - a2) / 3.0;
    return -(a2 + 2.0) / 6.0 + std::sqrt(a2 * a2 / 4.0 + 8.0 * w * w) + std::sqrt(a2 * a2 * f07 * f07 + w * w);
}

// Prefactors taken as a^2/2, the GHZ population of each corner.
inline double gtqd_closed_form(double a, double f07)
{
    using qcorr_detail::xlog2x;
    qcorr_detail::check_mixture_args(a, f07);
    const double h = 0.5 * a * a;
    return h * (xlog2x(1.0 - f07) + xlog2x(1.0 + f07)) - h - xlog2x((2.0 + a * a) / 6.0) -
           (2.0 * (1.0 - a * a) / 3.0) * std::log2(2.0 / 3.0);
}

// -Tr(rho log rho). Eigenvalues in [-1e-10, 0) count as 0.
template <std::size_t Dim>
double von_neumann_entropy(const CMatrix<Dim>& rho, bool base2 = true)
{
    if (hermiticity_error(rho) > 1e-10) throw NotDensityMatrix("state is not Hermitian");
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-9 || std::abs(rho.trace().imag()) > 1e-9)
        throw NotDensityMatrix("state trace is " + std::to_string(tr));
    double s = 0.0;
    for (double v : hermitian_eigenvalues(rho)) {
        if (v < -1e-10) throw NotDensityMatrix("negative eigenvalue " + std::to_string(v));
        if (v > 0.0) s -= v * std::log(v);
    }
    return base2 ? s / std::log(2.0) : s;
}

inline CMatrix<2> reduced_C(const Matrix8& rho)
{
    CMatrix<2> out;
    for (int ab = 0; ab < 4; ++ab)
        for (int c = 0; c < 2; ++c)
            for (int cp = 0; cp < 2; ++cp) out(c, cp) += rho(2 * ab + c, 2 * ab + cp);
    return out;
}

inline CMatrix<4> reduced_AB(const Matrix8& rho)
{
    CMatrix<4> out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = rho(2 * r, 2 * c) + rho(2 * r + 1, 2 * c + 1);
    return out;
}

// S(rho_C) + S(rho_AB) - S(rho_ABC)
inline double genuine_total_correlation(const Matrix8& rho)
{
    return von_neumann_entropy(reduced_C(rho)) + von_neumann_entropy(reduced_AB(rho)) - von_neumann_entropy(rho);
}

} // namespace spindec
