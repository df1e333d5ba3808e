#include "braidc/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "braidc/anyon_symbols.hpp"

namespace braidc {

namespace {

Unitary2 make_sigma1() {
    const double pi = std::acos(-1.0);
    Unitary2 s = Unitary2::identity();
    s.at(0, 0) = std::polar(1.0, -4.0 * pi / 5.0);
    s.at(1, 1) = std::polar(1.0, 3.0 * pi / 5.0);
    s.at(0, 1) = s.at(1, 0) = 0.0;
    return s;
}

// Basis change between the two fusion orders of the qubit: the all-tau
// F block, real and symmetric with F * F = I.
Unitary2 tau_f_matrix() {
    Unitary2 f;
    f.at(0, 0) = f_symbol(Charge::Tau, Charge::Tau, Charge::Tau, Charge::Tau,
                          Charge::Vacuum, Charge::Vacuum);
    f.at(0, 1) = f_symbol(Charge::Tau, Charge::Tau, Charge::Tau, Charge::Tau,
                          Charge::Vacuum, Charge::Tau);
    f.at(1, 0) = f_symbol(Charge::Tau, Charge::Tau, Charge::Tau, Charge::Tau,
                          Charge::Tau, Charge::Vacuum);
    f.at(1, 1) = f_symbol(Charge::Tau, Charge::Tau, Charge::Tau, Charge::Tau,
                          Charge::Tau, Charge::Tau);
    return f;
}

Unitary2 make_sigma2() {
    const Unitary2 f = tau_f_matrix();
    return f.adjoint() * make_sigma1() * f;
}

}  // namespace

const Unitary2& sigma(int generator) {
    static const Unitary2 s1 = make_sigma1();
    static const Unitary2 s2 = make_sigma2();
    if (generator == 1) return s1;
    if (generator == 2) return s2;
    throw std::invalid_argument("sigma: generator index must be 1 or 2");
}

Unitary2 sigma_power(int generator, int exponent) {
    const Unitary2& s = sigma(generator);
    const Unitary2 base = exponent >= 0 ? s : s.adjoint();
    Unitary2 m = Unitary2::identity();
    for (int k = std::abs(exponent); k > 0; --k) m = base * m;
    return m;
}

Unitary2 evaluate(const BraidWord& w) {
    Unitary2 u = Unitary2::identity();
    for (const BraidFactor& f : w.factors) u = sigma_power(f.generator, f.exponent) * u;
    return u;
}

}  // namespace braidc
