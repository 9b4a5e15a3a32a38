// Test-only brute-force oracle. Everything here is derived from a plain
// membership sieve (coin-problem DP over representable integers) and stays
// independent of the library's Apery-set code paths, so the two can check
// each other.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "nsg/arith.hpp"
#include "nsg/semigroup.hpp"

namespace oracle {

struct Sieve {
    std::vector<char> rep;  // rep[i] != 0 iff i is representable
    std::int64_t frobenius = -1;
    std::vector<std::int64_t> gaps;
};

inline Sieve sieve(const std::vector<std::int64_t>& gens) {
    std::int64_t g = 0, mx = 0, sum = 0, mn = gens.at(0);
    for (std::int64_t d : gens) {
        g = std::gcd(g, d);
        mx = std::max(mx, d);
        mn = std::min(mn, d);
        sum += d;
    }
    if (g != 1) throw std::invalid_argument("oracle: gcd != 1");
    const std::int64_t bound = mx * mn + sum + 2;  // safely past any gap
    Sieve s;
    s.rep.assign(static_cast<std::size_t>(bound) + 1, 0);
    s.rep[0] = 1;
    for (std::int64_t i = 1; i <= bound; ++i)
        for (std::int64_t d : gens)
            if (i >= d && s.rep[static_cast<std::size_t>(i - d)]) {
                s.rep[static_cast<std::size_t>(i)] = 1;
                break;
            }
    for (std::int64_t i = 1; i <= bound; ++i)
        if (!s.rep[static_cast<std::size_t>(i)]) s.gaps.push_back(i);
    if (!s.gaps.empty()) s.frobenius = s.gaps.back();
    return s;
}

inline std::vector<nsg::Int> genera(const Sieve& s, unsigned n) {
    std::vector<nsg::Int> g(n + 1, nsg::Int(0));
    for (std::int64_t gap : s.gaps) {
        nsg::Int p = 1;
        for (unsigned k = 0; k <= n; ++k) {
            g[k] += p;
            p *= gap;
        }
    }
    return g;
}

/// Numerator coefficients by naive truncated polynomial multiplication of
/// the sieve's indicator series with every (1 - z^d) factor expanded the
/// slow way (full shift-and-subtract on a copy).
inline std::vector<long> numerator_coeffs(const std::vector<std::int64_t>& gens) {
    const Sieve s = sieve(gens);
    std::int64_t sum = 0;
    for (std::int64_t d : gens) sum += d;
    const std::int64_t n = s.frobenius + sum;
    std::vector<long> acc(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t i = 0; i <= n; ++i)
        acc[static_cast<std::size_t>(i)] = s.rep[static_cast<std::size_t>(i)];
    for (std::int64_t d : gens) {
        std::vector<long> next(acc.size(), 0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i];
            if (i + static_cast<std::size_t>(d) < next.size())
                next[i + static_cast<std::size_t>(d)] -= acc[i];
        }
        acc = std::move(next);
    }
    return acc;
}

/// Printed closed forms of Psi^(r)(1)/pi for r <= 4 in the generator power
/// sums; the oracle side of the Appendix B reductions.
inline nsg::Rat printed_psi_over_pi(const nsg::Semigroup& s, unsigned r) {
    using nsg::Rat;
    const Rat m(static_cast<long>(s.edim()));
    const Rat s1(s.sigma(1)), s2(s.sigma(2)), s4(s.sigma(4));
    const Rat h = (s1 - m) / 2;
    switch (r) {
        case 0: return Rat(1);
        case 1: return h;
        case 2: return h * h + (s2 - 6 * s1 + 5 * m) / 12;
        case 3: return (h - 1) * (h * h + (s2 - 4 * s1 + 3 * m) / 4);
        case 4: {
            Rat q = (s2 - 6 * s1 + 5 * m) / 4;
            return q * q / 3 + h * h * (s2 - 6 * s1 + 5 * m) / 2 + h * h * h * h -
                   h * (s2 - 4 * s1 + 3 * m) -
                   (s4 - 110 * s2 + 360 * s1 - 251 * m) / 120;
        }
    }
    throw std::invalid_argument("printed_psi_over_pi: r <= 4 only");
}

/// Printed closed forms of Pi^(r)(1)/pi for r <= 4 in power sums and genera.
inline nsg::Rat printed_pi_over_pi(const nsg::Semigroup& s, unsigned r) {
    using nsg::Rat;
    const Rat m(static_cast<long>(s.edim()));
    const Rat s1(s.sigma(1)), s2(s.sigma(2));
    const auto gv = s.genera(3);
    const Rat g0(gv[0]), g1(gv[1]), g2(gv[2]), g3(gv[3]);
    const Rat h = (s1 - m) / 2;
    switch (r) {
        case 0: return Rat(1);
        case 1: return h + g0;
        case 2: return h * h + (s2 - 6 * s1 + 5 * m) / 12 + (s1 - m) * g0 + 2 * g1;
        case 3:
            return (h - 1) * (h * h + (s2 - 4 * s1 + 3 * m) / 4) +
                   (3 * h * h + (s2 - 6 * s1 + 5 * m) / 4) * g0 +
                   3 * (s1 - m) * g1 + 3 * (g2 - g1);
        case 4:
            return printed_psi_over_pi(s, 4) +
                   (h - 1) * ((s1 - m) * (s1 - m) + s2 - 4 * s1 + 3 * m) * g0 +
                   (3 * (s1 - m) * (s1 - m) + s2 - 6 * s1 + 5 * m) * g1 +
                   6 * (s1 - m) * (g2 - g1) + 4 * (g3 - 3 * g2 + 2 * g1);
    }
    throw std::invalid_argument("printed_pi_over_pi: r <= 4 only");
}

}  // namespace oracle
