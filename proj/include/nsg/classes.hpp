#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "nsg/kforms.hpp"
#include "nsg/numerator.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

enum class ClassTag { non_symmetric, symmetric_not_ci, symmetric_ci };

std::string_view to_string(ClassTag tag);

struct Classification {
    ClassTag tag = ClassTag::non_symmetric;
    std::optional<CIFactorization> ci;
    std::vector<std::int64_t> pf;  // pseudo-Frobenius set
};

Classification classify(const Semigroup& s, const Numerator& num);

/// Symmetric-semigroup genera relation: G_{2r} as a Bernoulli-weighted
/// polynomial in F and the odd genera. For r <= 4 the expanded printed form
/// is cross-checked as well. Throws std::invalid_argument when s is not
/// symmetric or r < 1.
std::vector<Verdict> symmetric_genera_relation(const Semigroup& s, unsigned r);

/// Structural consequences of symmetry: PF = {F}, gaps pair with non-gaps
/// under s -> F - s, and the numerator is (anti)palindromic.
std::vector<Verdict> symmetric_structure_checks(const Semigroup& s,
                                                const Numerator& num);

/// Symmetric m = 4 relations: 2 K_0 = Q_4 and the three even-K reductions
/// expressing K_2, K_4, K_6 through K_0, K_1, K_3, K_5.
std::vector<Verdict> symmetric_s4_k_relations(const Semigroup& s,
                                              const Numerator& num);

/// Complete-intersection relations: pi_m = prod e_j, K_p = T_{p+1}(E)/(p+1),
/// and the printed m = 2, 3, 4 specializations (K-forms and genus formulas).
std::vector<Verdict> ci_relations(const Semigroup& s, const Numerator& num,
                                  const CIFactorization& ci, unsigned p_max);

/// 3-generated semigroups: the two algebraic equations in the rescaled
/// kappa variables for non-symmetric s (plus the non-degeneracy guard), or
/// the degenerate triples for symmetric s. Evaluated verbatim in
/// Q(sqrt(pi_3)). Throws std::invalid_argument unless m = 3.
std::vector<Verdict> s3_equations(const Semigroup& s, const Numerator& num);

/// The quartic form appearing on the right-hand side of the kappa_4
/// equation; positive definite on the positive octant.
Rat kappa4_value(const Rat& k0, const Rat& k1, const Rat& k2);

/// Requires all arguments > 0; true iff kappa4_value(...) > 0.
bool k4_positivity(const Rat& k0, const Rat& k1, const Rat& k2);

struct GmCount {
    Int value;            // number of algebraically independent genera
    std::string formula;  // which class formula produced it
    bool heuristic = false;
};

/// Count of algebraically independent genera per class; requires m >= 2.
/// Non-symmetric counts for m >= 4 inherit the Betti profile's heuristic
/// flag (net numerator coefficients may hide cancellation).
GmCount gm_count(const Semigroup& s, const Classification& cls,
                 const BettiProfile& profile);

}  // namespace nsg
