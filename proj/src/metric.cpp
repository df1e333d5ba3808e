#include "braidc/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace braidc {

namespace {

constexpr double kUnitaryTol = 1e-8;
constexpr double kZeroSnap = 1e-12;

}  // namespace

double distance(const Unitary2& w, const Unitary2& u) {
    if (!w.is_unitary(kUnitaryTol) || !u.is_unitary(kUnitaryTol))
        throw std::invalid_argument("distance: input is not unitary");
    const double overlap = std::abs((w * u.adjoint()).trace());
    double radicand = 2.0 - overlap;
    // |tr| of a perfect match lands on either side of 2 in floating point;
    // snap so identical operators are at distance exactly zero.
    if (std::abs(radicand) < kZeroSnap) radicand = 0.0;
    if (radicand < 0.0) radicand = 0.0;
    return std::sqrt(radicand);
}

Unitary2 phase_canonicalize(const Unitary2& u) {
    const cplx root = std::sqrt(u.det());
    Unitary2 v = u.scaled(1.0 / root);
    for (const cplx& entry : v.m) {
        if (std::abs(entry) <= kZeroSnap) continue;
        const bool flip = entry.real() < -kZeroSnap ||
                          (std::abs(entry.real()) <= kZeroSnap &&
                           entry.imag() < 0.0);
        if (flip) v = v.scaled(-1.0);
        break;
    }
    return v;
}

}  // namespace braidc
