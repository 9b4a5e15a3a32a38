#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nsg/classes.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

enum class CheckStatus { holds, fails, skipped };

std::string_view to_string(CheckStatus st);

struct CheckRecord {
    std::string check;  // e.g. "identity.top", "ci.t.p2", or a group marker when skipped
    CheckStatus status = CheckStatus::holds;
    std::string lhs, rhs, note;
};

struct CheckOptions {
    unsigned p_max = 6;    // highest K index exercised (<= 6)
    unsigned n_extra = 7;  // oracle equivalence runs n = m-1 .. m+n_extra
    std::optional<unsigned> n_max;  // absolute cap overriding n_extra when set
};

/// Check groups selectable from the CLI:
///   identities  C_0 = 1, C_r = 0 (r <= m-2), C_{m-1} = (-1)^m (m-1)! pi
///   oracle      Stirling-recursion C_n == numerator-coefficient C_n
///   kforms      extract_k == k_closed_form, p <= p_max
///   conjecture  extract_k == conjectured genera expansion, p <= p_max
///   symmetric   genera relations + structure (symmetric members only)
///   s4          symmetric 4-generated K reductions
///   ci          complete-intersection relations
///   s3          3-generated kappa equations
///   gm          independent-genera count and its class constraints
const std::vector<std::string>& check_groups();

bool is_check_group(const std::string& name);

struct SemigroupReport {
    std::vector<std::int64_t> generators;
    std::string class_tag;
    std::vector<CheckRecord> records;
    long long elapsed_us = 0;
    bool any_failure() const;
};

/// Runs the selected check groups on one semigroup. Inapplicable groups
/// produce a single `skipped` marker record, so every (semigroup, group)
/// pair appears in the report exactly once or expands into its sub-checks.
SemigroupReport run_checks(const Semigroup& s, const std::set<std::string>& groups,
                           const CheckOptions& opts);

}  // namespace nsg
