#pragma once

#include <memory>
#include <vector>

#include "nsg/combinatorics.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Memoized evaluations at z = 1 of the derivative towers of the gap series
/// Phi, the staircase product Psi = prod_j (1 + z + ... + z^{d_j - 1}), and
/// Pi = Q / (1-z)^{m-1}. All values are exact (in fact integers, held as Rat
/// for uniformity). One tower per evaluation context; not shared between
/// threads.
class DerivativeTower {
public:
    explicit DerivativeTower(Semigroup s);

    const Semigroup& semigroup() const { return s_; }

    Rat phi(unsigned r);  // sum_k S^r_k G_k
    Rat psi(unsigned r);  // Taylor-coefficient product over the generators
    Rat pi(unsigned r);   // psi(r) + r sum_k C(r-1,k) psi(r-k-1) phi(k)

    /// C_n by the recursive solution of the Stirling triangular system,
    /// seeded at C_{m-1} = (-1)^m (m-1)! Pi^(0). Requires n >= m - 1.
    Int c_alternating(unsigned n);

private:
    Semigroup s_;
    GeneraVector genera_;
    std::vector<Rat> phi_, psi_, pi_;
    std::vector<Int> c_;  // c_[i] = C_{m-1+i}
    std::shared_ptr<const StirlingTable> stirling_;

    void ensure_stirling(unsigned rows);
};

// One-shot conveniences over a fresh tower.
Rat phi_derivative(const Semigroup& s, unsigned r);
Rat psi_derivative(const Semigroup& s, unsigned r);
Rat pi_derivative(const Semigroup& s, unsigned r);
Int c_from_pi(const Semigroup& s, unsigned n);

}  // namespace nsg
