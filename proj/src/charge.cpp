#include "braidc/charge.hpp"

namespace braidc {

Charge dual(Charge c) { return c; }

int fusion_multiplicity(Charge a, Charge b, Charge c) {
    if (a == Charge::Vacuum && b == Charge::Vacuum)
        return c == Charge::Vacuum ? 1 : 0;
    if (a == Charge::Vacuum || b == Charge::Vacuum)
        return c == Charge::Tau ? 1 : 0;
    return 1;  // tau x tau contains both charges once
}

bool admissible(Charge a, Charge b, Charge c) {
    return fusion_multiplicity(a, b, c) == 1;
}

std::vector<Charge> fuse(Charge a, Charge b) {
    std::vector<Charge> out;
    for (Charge c : kAllCharges)
        if (admissible(a, b, c)) out.push_back(c);
    return out;
}

}  // namespace braidc
