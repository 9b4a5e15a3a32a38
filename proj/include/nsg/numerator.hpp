#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nsg/poly.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Numerator Q(S;z) of the Hilbert series H(S;z) = Q / prod(1 - z^{d_i}).
/// Carries the semigroup context needed by downstream consumers.
struct Numerator {
    SignedPolynomial q;
    std::int64_t qm = 0;      // top degree, equals F + sigma_1
    std::size_t edim = 0;     // m
    Int pi;                   // product of the generators

    /// (degree, net coefficient) for every nonzero coefficient of degree >= 1.
    std::vector<std::pair<std::int64_t, Int>> signed_degrees() const;
};

/// Computes Q exactly by convolving the truncated membership indicator
/// series with prod(1 - z^{d_i}); both invariants (constant term 1,
/// coefficient sum 0) are verified before returning. An invariant violation
/// is a defect and raises std::logic_error.
Numerator numerator(const Semigroup& s);

/// Alternating power sum C_n of the syzygy degrees, read off the net
/// coefficients of Q: C_0 = -sum_{j>=1} q_j = 1 and
/// C_n = -sum_{j>=1} q_j j^n for n >= 1.
Int alternating_power_sum(const Numerator& num, unsigned n);

/// Net syzygy degrees grouped by homological level 1..m-1. Level m-1 is
/// pinned exactly by the pseudo-Frobenius set (degrees f + sigma_1); the
/// remaining degrees are assigned by sign parity, ascending. Exact for
/// m <= 3; flagged `heuristic` for m >= 4 where net coefficients could in
/// principle hide cancellation between adjacent levels.
struct BettiProfile {
    std::vector<std::vector<std::int64_t>> levels;  // levels[k], k = 1..m-1; [0] unused
    std::vector<std::size_t> beta;                  // beta[k] = levels[k].size()
    std::size_t total = 0;                          // B_m = sum beta[k]
    bool heuristic = false;
};

BettiProfile betti_profile(const Numerator& num, const Semigroup& s);

/// Complete-intersection factorization Q = prod_{j=1}^{m-1} (1 - z^{e_j}).
struct CIFactorization {
    std::vector<std::int64_t> degrees;  // e_1 <= ... <= e_{m-1}, repeats allowed
};

/// Greedy exact division by (1 - z^e) factors, lowest degree first; returns
/// nullopt when Q is not a product of m-1 such binomials. On success the
/// degree product is checked against pi_m.
std::optional<CIFactorization> ci_factorize(const Numerator& num);

}  // namespace nsg
