#pragma once

#include <string>

#include "nsg/numerator.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Power-sum assignment consumed by the T polynomials; only X_1, X_2, X_4
/// and X_6 ever appear.
struct PowerSumValues {
    Rat x1, x2, x4, x6;
};

/// T_r evaluated on power sums, r <= 7. T_0 = 1, T_1 = X_1/2, ...;
/// the family arising from the factorization of the alternating power sums
/// P_n = (-1)^{m+1} n!/(n-m)! chi_m T_{n-m}.
Rat t_eval(unsigned r, const PowerSumValues& x);

PowerSumValues sigma_power_sums(const Semigroup& s);
PowerSumValues delta_power_sums(const Semigroup& s);

/// K_p = (-1)^m C_{m+p} p! / ((m+p)! pi_m), with C from the numerator route.
Rat extract_k(const Numerator& num, unsigned p);
Rat extract_k(const Semigroup& s, unsigned p);

/// Closed-form K_p as a polynomial in sigma_k, delta_k and the genera, for
/// p <= 6. Two misprints in the published K_5 / K_6 coefficient lists (the
/// 35 X_2^3 - 42 X_2 X_4 pattern with the monomials swapped) are corrected
/// here; the corrected forms agree with the numerator extraction everywhere.
Rat k_closed_form(const Semigroup& s, unsigned p);

/// Right-hand side of the conjectured general formula
/// K_p = sum_r C(p,r) T_{p-r}(sigma) G_r + 2^{p+1}/(p+1) T_{p+1}(delta).
Rat conjecture_rhs(const Semigroup& s, unsigned p);

/// Outcome of one exact comparison; `note` distinguishes findings (e.g. a
/// conjecture counterexample) from ordinary mismatches.
struct Verdict {
    std::string id;
    bool holds = false;
    std::string lhs, rhs;
    std::string note;
};

Verdict conjecture_check(const Semigroup& s, unsigned p);

}  // namespace nsg
