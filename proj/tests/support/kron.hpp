#pragma once

// Explicit tensor-product construction of three-qubit operators, written
// independently of the library's bit-twiddling builder.

#include <array>
#include <complex>

#include "spindec/hermitian_eigen.hpp"

namespace testsupport {

using spindec::cplx;
using Mat2 = spindec::CMatrix<2>;
using Mat8 = spindec::Matrix8;

inline Mat2 mat2(cplx a, cplx b, cplx c, cplx d)
{
    Mat2 m;
    m(0, 0) = a, m(0, 1) = b, m(1, 0) = c, m(1, 1) = d;
    return m;
}

inline const Mat2 I2 = mat2(1, 0, 0, 1);
inline const Mat2 SX = mat2(0, 1, 1, 0);
inline const Mat2 SY = mat2(0, cplx(0, -1), cplx(0, 1), 0);
inline const Mat2 SZ = mat2(1, 0, 0, -1);

inline Mat8 kron3(const Mat2& a, const Mat2& b, const Mat2& c)
{
    Mat8 m;
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int i3 = 0; i3 < 2; ++i3)
                for (int j1 = 0; j1 < 2; ++j1)
                    for (int j2 = 0; j2 < 2; ++j2)
                        for (int j3 = 0; j3 < 2; ++j3)
                            m(4 * i1 + 2 * i2 + i3, 4 * j1 + 2 * j2 + j3) = a(i1, j1) * b(i2, j2) * c(i3, j3);
    return m;
}

// Pauli `p` on qubit `q` (0 = A, most significant).
inline Mat8 on(int q, const Mat2& p)
{
    return kron3(q == 0 ? p : I2, q == 1 ? p : I2, q == 2 ? p : I2);
}

// (J/2) sum_{i<j} [x x + y y + Delta z z + M (x_i y_j - y_i x_j)] + B sum z,
// DM pairs taken cyclically (1,2), (2,3), (3,1).
inline Mat8 central_hamiltonian_kron(double J, double Delta, double M, double B)
{
    Mat8 h;
    const int pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    for (const auto& pr : pairs) {
        const int i = pr[0], j = pr[1];
        h = h + cplx(J / 2) * (on(i, SX) * on(j, SX) + on(i, SY) * on(j, SY) + cplx(Delta) * (on(i, SZ) * on(j, SZ)));
        h = h + cplx(J * M / 2) * (on(i, SX) * on(j, SY) - on(i, SY) * on(j, SX));
    }
    return h + cplx(B) * (on(0, SZ) + on(1, SZ) + on(2, SZ));
}

} // namespace testsupport
