// generators.hpp: the 2x2 braid generator representation on the three-anyon
// qubit and braid-word evaluation.
#pragma once

#include "braidc/braid_word.hpp"
#include "braidc/unitary2.hpp"

namespace braidc {

// sigma(1) = diag(e^{-i 4 pi / 5}, e^{i 3 pi / 5}); sigma(2) is the same
// phase pair conjugated by the tau F-matrix. Throws on indices outside {1,2}.
const Unitary2& sigma(int generator);

// sigma(generator)^exponent by repeated multiplication (exponents stay
// small; the inverse uses the adjoint).
Unitary2 sigma_power(int generator, int exponent);

// Product in which the temporally-first factor acts first on states:
// for temporal factors M_1..M_k the result is M_k ... M_2 M_1.
Unitary2 evaluate(const BraidWord& w);

}  // namespace braidc
