// charge.hpp: topological charges and fusion rules of the Fibonacci model.
#pragma once

#include <cstdint>
#include <vector>

namespace braidc {

// The model has two charges: the vacuum and the Fibonacci anyon tau.
// Both are self-dual.
enum class Charge : std::uint8_t { Vacuum = 0, Tau = 1 };

inline constexpr Charge kAllCharges[2] = {Charge::Vacuum, Charge::Tau};

inline int charge_index(Charge c) { return static_cast<int>(c); }

Charge dual(Charge c);

// Fusion multiplicity N_ab^c. The only rule with two outcomes is
// tau x tau = vacuum + tau; everything involving the vacuum is trivial.
int fusion_multiplicity(Charge a, Charge b, Charge c);

bool admissible(Charge a, Charge b, Charge c);

// Admissible outcomes of a x b, vacuum first.
std::vector<Charge> fuse(Charge a, Charge b);

}  // namespace braidc
