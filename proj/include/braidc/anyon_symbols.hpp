// anyon_symbols.hpp: F and R symbols of the Fibonacci model plus the
// pentagon/hexagon consistency checks.
#pragma once

#include <cmath>
#include <complex>

#include "braidc/charge.hpp"

namespace braidc {

using cplx = std::complex<double>;

// Inverse golden ratio (sqrt(5) - 1) / 2; satisfies tau^2 + tau = 1.
inline const double kTau = 0.5 * (std::sqrt(5.0) - 1.0);

// Recoupling coefficients (F^d_abc)^i_j between the two fusion orders of
// three charges: i labels the (ab) intermediate, j the (bc) intermediate.
// Entries for fusion-inadmissible index combinations are zero.
class FSymbolTable {
  public:
    static FSymbolTable fibonacci();

    cplx at(Charge a, Charge b, Charge c, Charge d, Charge i, Charge j) const {
        return e_[charge_index(a)][charge_index(b)][charge_index(c)]
                 [charge_index(d)][charge_index(i)][charge_index(j)];
    }
    void set(Charge a, Charge b, Charge c, Charge d, Charge i, Charge j, cplx v);

  private:
    cplx e_[2][2][2][2][2][2] = {};
};

// Exchange phases R_ab^c for a clockwise interchange of a and b fusing to c.
class RSymbolTable {
  public:
    static RSymbolTable fibonacci();

    cplx at(Charge a, Charge b, Charge c) const {
        return e_[charge_index(a)][charge_index(b)][charge_index(c)];
    }
    void set(Charge a, Charge b, Charge c, cplx v);

  private:
    cplx e_[2][2][2] = {};
};

// Lookups into the canonical Fibonacci tables.
cplx f_symbol(Charge a, Charge b, Charge c, Charge d, Charge i, Charge j);
cplx r_symbol(Charge a, Charge b, Charge c);

// Max absolute pentagon residual over all 2^9 charge assignments:
//   (F^e_jcd)^i_k (F^e_abk)^j_m - sum_l (F^i_abc)^j_l (F^e_ald)^i_m (F^m_bcd)^l_k
double verify_pentagon(const FSymbolTable& f = FSymbolTable::fibonacci());

// Max absolute hexagon residual over all 2^6 charge assignments:
//   sum_k (F^d_cab)^i_k R_kc^d (F^d_abc)^k_j - R_ac^i (F^d_acb)^i_j R_bc^j
double verify_hexagon(const FSymbolTable& f = FSymbolTable::fibonacci(),
                      const RSymbolTable& r = RSymbolTable::fibonacci());

}  // namespace braidc
