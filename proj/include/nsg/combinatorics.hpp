#pragma once

#include <memory>
#include <vector>

#include "nsg/arith.hpp"

namespace nsg {

/// Triangular table of unsigned Stirling numbers of the first kind [n k],
/// built once from the recurrence [n+1 k] = n[n k] + [n k-1] and then
/// shared read-only across threads.
class StirlingTable {
public:
    explicit StirlingTable(unsigned max_n);

    unsigned max_n() const { return static_cast<unsigned>(rows_.size()) - 1; }

    /// Unsigned [n k]; requires k <= n <= max_n().
    const Int& unsigned_first(unsigned n, unsigned k) const;

    /// Signed S^n_k = (-1)^{n-k} [n k].
    Int signed_first(unsigned n, unsigned k) const;

private:
    std::vector<std::vector<Int>> rows_;
};

/// Process-wide table with at least `min_rows` rows (default 24, enough for
/// every stock check); grows by atomically swapping in a larger table.
std::shared_ptr<const StirlingTable> stirling_table(unsigned min_rows = 24);

Int stirling_first(unsigned n, unsigned k);   // unsigned [n k]
Int stirling_signed(unsigned n, unsigned k);  // (-1)^{n-k} [n k]

/// Exact Bernoulli number B_k, memoized. Convention: B_1 = -1/2 (the value
/// produced by the defining recurrence sum_{j<=k} C(k+1,j) B_j = 0). Nothing
/// downstream observes the choice: the genera relations consume only B_0 and
/// even-index Bernoulli numbers.
Rat bernoulli(unsigned k);

}  // namespace nsg
