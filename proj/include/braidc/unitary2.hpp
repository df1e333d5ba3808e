// unitary2.hpp: dense 2x2 complex matrix, the working type for gates,
// generators and weave products. Kept header-only; the search hot loop
// multiplies millions of these per second.
#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace braidc {

using cplx = std::complex<double>;

struct Unitary2 {
    // Row-major entries; m[r * 2 + c].
    std::array<cplx, 4> m{};

    static Unitary2 identity() {
        return Unitary2{{cplx(1.0), cplx(0.0), cplx(0.0), cplx(1.0)}};
    }

    cplx& at(int r, int c) { return m[r * 2 + c]; }
    const cplx& at(int r, int c) const { return m[r * 2 + c]; }

    Unitary2 operator*(const Unitary2& o) const {
        return Unitary2{{m[0] * o.m[0] + m[1] * o.m[2],
                         m[0] * o.m[1] + m[1] * o.m[3],
                         m[2] * o.m[0] + m[3] * o.m[2],
                         m[2] * o.m[1] + m[3] * o.m[3]}};
    }

    Unitary2 adjoint() const {
        return Unitary2{{std::conj(m[0]), std::conj(m[2]),
                         std::conj(m[1]), std::conj(m[3])}};
    }

    Unitary2 scaled(cplx s) const {
        return Unitary2{{s * m[0], s * m[1], s * m[2], s * m[3]}};
    }

    cplx trace() const { return m[0] + m[3]; }
    cplx det() const { return m[0] * m[3] - m[1] * m[2]; }

    double max_abs_diff(const Unitary2& o) const {
        double w = 0.0;
        for (int k = 0; k < 4; ++k) w = std::max(w, std::abs(m[k] - o.m[k]));
        return w;
    }

    bool is_unitary(double tol) const {
        return ((*this) * adjoint()).max_abs_diff(identity()) <= tol;
    }

    bool operator==(const Unitary2&) const = default;
};

}  // namespace braidc
