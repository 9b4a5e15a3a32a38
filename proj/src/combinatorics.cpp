#include "nsg/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace nsg {

StirlingTable::StirlingTable(unsigned max_n) {
    rows_.resize(max_n + 1);
    rows_[0] = {Int(1)};
    for (unsigned n = 1; n <= max_n; ++n) {
        rows_[n].assign(n + 1, Int(0));
        rows_[n][n] = 1;
        for (unsigned k = 1; k < n; ++k)
            rows_[n][k] = (n - 1) * rows_[n - 1][k] + rows_[n - 1][k - 1];
        // rows_[n][0] stays 0 for n >= 1
    }
}

const Int& StirlingTable::unsigned_first(unsigned n, unsigned k) const {
    if (n >= rows_.size())
        throw std::domain_error("StirlingTable: n exceeds table size");
    if (k > n) throw std::domain_error("stirling_first: k > n");
    return rows_[n][k];
}

Int StirlingTable::signed_first(unsigned n, unsigned k) const {
    const Int& u = unsigned_first(n, k);
    return ((n - k) % 2 == 0) ? u : Int(-u);
}

namespace {
std::mutex table_mutex;
std::shared_ptr<const StirlingTable> shared_table;
}  // namespace

std::shared_ptr<const StirlingTable> stirling_table(unsigned min_rows) {
    std::lock_guard<std::mutex> lock(table_mutex);
    if (!shared_table || shared_table->max_n() < min_rows)
        shared_table = std::make_shared<const StirlingTable>(std::max(min_rows, 24u));
    return shared_table;  // callers keep the snapshot; reads need no lock
}

Int stirling_first(unsigned n, unsigned k) {
    return stirling_table(n)->unsigned_first(n, k);
}

Int stirling_signed(unsigned n, unsigned k) {
    return stirling_table(n)->signed_first(n, k);
}

namespace {
std::mutex bernoulli_mutex;
std::vector<Rat> bernoulli_cache;  // guarded by bernoulli_mutex
}  // namespace

Rat bernoulli(unsigned k) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    if (bernoulli_cache.empty()) bernoulli_cache.push_back(Rat(1));
    while (bernoulli_cache.size() <= k) {
        const unsigned m = static_cast<unsigned>(bernoulli_cache.size());
        Rat sum(0);
        for (unsigned j = 0; j < m; ++j)
            sum += Rat(binomial(m + 1, j)) * bernoulli_cache[j];
        Rat b = -sum / Rat(static_cast<long>(m) + 1);
        b.canonicalize();
        bernoulli_cache.push_back(b);
    }
    return bernoulli_cache[k];
}

}  // namespace nsg
