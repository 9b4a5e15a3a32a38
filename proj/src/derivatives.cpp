#include "nsg/derivatives.hpp"

#include <stdexcept>

namespace nsg {

DerivativeTower::DerivativeTower(Semigroup s)
    : s_(std::move(s)), stirling_(stirling_table()) {}

void DerivativeTower::ensure_stirling(unsigned rows) {
    if (stirling_->max_n() < rows) stirling_ = stirling_table(rows);
}

Rat DerivativeTower::phi(unsigned r) {
    while (phi_.size() <= r) {
        const unsigned k = static_cast<unsigned>(phi_.size());
        if (genera_.size() <= k) genera_ = s_.genera(k + 8);
        ensure_stirling(k);
        Int acc = 0;
        for (unsigned j = 0; j <= k; ++j)
            acc += stirling_->signed_first(k, j) * genera_[j];
        phi_.emplace_back(acc);
    }
    return phi_[r];
}

Rat DerivativeTower::psi(unsigned r) {
    if (psi_.size() > r) return psi_[r];
    // Taylor coefficients of each staircase factor around z = 1:
    // t_{j,k} = d_j (d_j - 1)_k / ((k+1) k!), convolved over the factors;
    // the degree-r coefficient times r! is Psi^(r)(1).
    const unsigned order = r;
    std::vector<Rat> conv(order + 1, Rat(0));
    conv[0] = 1;
    for (std::int64_t d : s_.generators()) {
        std::vector<Rat> t(order + 1);
        for (unsigned k = 0; k <= order; ++k)
            t[k] = make_rat(Int(d) * falling_factorial(Int(d) - 1, k),
                            Int(k + 1) * factorial(k));
        std::vector<Rat> next(order + 1, Rat(0));
        for (unsigned i = 0; i <= order; ++i) {
            if (conv[i] == 0) continue;
            for (unsigned j = 0; i + j <= order; ++j)
                next[i + j] += conv[i] * t[j];
        }
        conv = std::move(next);
    }
    psi_.resize(r + 1);
    for (unsigned k = 0; k <= r; ++k) {
        Rat v = conv[k] * Rat(factorial(k));
        v.canonicalize();
        psi_[k] = v;
    }
    return psi_[r];
}

Rat DerivativeTower::pi(unsigned r) {
    while (pi_.size() <= r) {
        const unsigned k = static_cast<unsigned>(pi_.size());
        Rat acc = psi(k);
        for (unsigned j = 0; j < k; ++j)
            acc += Rat(k) * Rat(binomial(k - 1, j)) * psi(k - j - 1) * phi(j);
        acc.canonicalize();
        pi_.push_back(acc);
    }
    return pi_[r];
}

Int DerivativeTower::c_alternating(unsigned n) {
    const unsigned m = static_cast<unsigned>(s_.edim());
    if (n + 1 < m)
        throw std::invalid_argument("c_alternating: requires n >= m - 1");
    ensure_stirling(n);
    while (c_.size() <= n - (m - 1)) {
        const unsigned k = m - 1 + static_cast<unsigned>(c_.size());
        const unsigned p1 = k - m + 1;  // p + 1 with k = m + p
        Rat val = make_rat(factorial(k), factorial(p1)) * pi(p1);
        if (m % 2) val = -val;
        for (unsigned j = 1; j <= p1; ++j) {
            const Int term = stirling_->unsigned_first(k, k - j) * c_[c_.size() - j];
            if (j % 2)
                val += Rat(term);
            else
                val -= Rat(term);
        }
        val.canonicalize();
        if (!is_integer(val))
            throw std::logic_error("c_alternating: non-integral value for " + s_.str());
        c_.push_back(Int(val.get_num()));
    }
    return c_[n - (m - 1)];
}

Rat phi_derivative(const Semigroup& s, unsigned r) {
    return DerivativeTower(s).phi(r);
}

Rat psi_derivative(const Semigroup& s, unsigned r) {
    return DerivativeTower(s).psi(r);
}

Rat pi_derivative(const Semigroup& s, unsigned r) {
    return DerivativeTower(s).pi(r);
}

Int c_from_pi(const Semigroup& s, unsigned n) {
    return DerivativeTower(s).c_alternating(n);
}

}  // namespace nsg
