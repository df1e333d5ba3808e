#include "braidc/anyon_symbols.hpp"

#include <algorithm>

namespace braidc {

namespace {

constexpr Charge kV = Charge::Vacuum;
constexpr Charge kT = Charge::Tau;

// The F move relabels ((ab)c)d -> (a(bc))d, so an entry is meaningful only
// when both fusion chains are admissible.
bool f_admissible(Charge a, Charge b, Charge c, Charge d, Charge i, Charge j) {
    return admissible(a, b, i) && admissible(i, c, d) &&
           admissible(b, c, j) && admissible(a, j, d);
}

}  // namespace

FSymbolTable FSymbolTable::fibonacci() {
    FSymbolTable t;
    const double root_tau = std::sqrt(kTau);
    for (Charge a : kAllCharges)
        for (Charge b : kAllCharges)
            for (Charge c : kAllCharges)
                for (Charge d : kAllCharges)
                    for (Charge i : kAllCharges)
                        for (Charge j : kAllCharges) {
                            if (!f_admissible(a, b, c, d, i, j)) continue;
                            cplx v = 1.0;
                            if (a == kT && b == kT && c == kT && d == kT) {
                                if (i == kV && j == kV) v = kTau;
                                else if (i == kT && j == kT) v = -kTau;
                                else v = root_tau;
                            }
                            t.set(a, b, c, d, i, j, v);
                        }
    return t;
}

void FSymbolTable::set(Charge a, Charge b, Charge c, Charge d, Charge i,
                       Charge j, cplx v) {
    e_[charge_index(a)][charge_index(b)][charge_index(c)][charge_index(d)]
      [charge_index(i)][charge_index(j)] = v;
}

RSymbolTable RSymbolTable::fibonacci() {
    RSymbolTable t;
    const double pi = std::acos(-1.0);
    for (Charge a : kAllCharges)
        for (Charge b : kAllCharges)
            for (Charge c : kAllCharges) {
                if (!admissible(a, b, c)) continue;
                cplx v = 1.0;
                if (a == kT && b == kT)
                    v = c == kV ? std::polar(1.0, -4.0 * pi / 5.0)
                                : std::polar(1.0, 3.0 * pi / 5.0);
                t.set(a, b, c, v);
            }
    return t;
}

void RSymbolTable::set(Charge a, Charge b, Charge c, cplx v) {
    e_[charge_index(a)][charge_index(b)][charge_index(c)] = v;
}

cplx f_symbol(Charge a, Charge b, Charge c, Charge d, Charge i, Charge j) {
    static const FSymbolTable table = FSymbolTable::fibonacci();
    return table.at(a, b, c, d, i, j);
}

cplx r_symbol(Charge a, Charge b, Charge c) {
    static const RSymbolTable table = RSymbolTable::fibonacci();
    return table.at(a, b, c);
}

double verify_pentagon(const FSymbolTable& f) {
    double worst = 0.0;
    for (Charge a : kAllCharges)
        for (Charge b : kAllCharges)
            for (Charge c : kAllCharges)
                for (Charge d : kAllCharges)
                    for (Charge e : kAllCharges)
                        for (Charge i : kAllCharges)
                            for (Charge j : kAllCharges)
                                for (Charge k : kAllCharges)
                                    for (Charge m : kAllCharges) {
                                        const cplx lhs = f.at(j, c, d, e, i, k) *
                                                         f.at(a, b, k, e, j, m);
                                        cplx rhs = 0.0;
                                        for (Charge l : kAllCharges)
                                            rhs += f.at(a, b, c, i, j, l) *
                                                   f.at(a, l, d, e, i, m) *
                                                   f.at(b, c, d, m, l, k);
                                        worst = std::max(worst, std::abs(lhs - rhs));
                                    }
    return worst;
}

double verify_hexagon(const FSymbolTable& f, const RSymbolTable& r) {
    double worst = 0.0;
    for (Charge a : kAllCharges)
        for (Charge b : kAllCharges)
            for (Charge c : kAllCharges)
                for (Charge d : kAllCharges)
                    for (Charge i : kAllCharges)
                        for (Charge j : kAllCharges) {
                            cplx lhs = 0.0;
                            for (Charge k : kAllCharges)
                                lhs += f.at(c, a, b, d, i, k) * r.at(k, c, d) *
                                       f.at(a, b, c, d, k, j);
                            const cplx rhs = r.at(a, c, i) *
                                             f.at(a, c, b, d, i, j) *
                                             r.at(b, c, j);
                            worst = std::max(worst, std::abs(lhs - rhs));
                        }
    return worst;
}

}  // namespace braidc
