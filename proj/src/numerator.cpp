#include "nsg/numerator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nsg {

namespace {
constexpr std::int64_t kMaxDegree = 10'000'000;  // desk-scale guard
}

std::vector<std::pair<std::int64_t, Int>> Numerator::signed_degrees() const {
    std::vector<std::pair<std::int64_t, Int>> out;
    const auto& c = q.coeffs();
    for (std::size_t j = 1; j < c.size(); ++j)
        if (c[j] != 0) out.emplace_back(static_cast<std::int64_t>(j), c[j]);
    return out;
}

Numerator numerator(const Semigroup& s) {
    const std::int64_t f = s.frobenius();
    std::int64_t sigma1 = 0;
    for (std::int64_t d : s.generators()) sigma1 += d;
    const std::int64_t n = f + sigma1;
    if (n > kMaxDegree)
        throw std::invalid_argument("numerator: degree " + std::to_string(n) +
                                    " exceeds the desk-scale bound");

    // Truncated indicator series of S, then one pass per generator applies
    // the factor (1 - z^d). Coefficients at degrees <= n depend only on the
    // retained prefix, so truncation loses nothing.
    std::vector<Int> q(static_cast<std::size_t>(n) + 1, Int(0));
    for (std::int64_t i = 0; i <= n; ++i)
        if (s.contains(i)) q[static_cast<std::size_t>(i)] = 1;
    for (std::int64_t d : s.generators())
        for (std::int64_t i = n; i >= d; --i)
            q[static_cast<std::size_t>(i)] -= q[static_cast<std::size_t>(i - d)];

    Numerator num;
    num.q = SignedPolynomial(std::move(q));
    num.qm = n;
    num.edim = s.edim();
    num.pi = s.pi();

    if (num.q.coeff(0) != 1)
        throw std::logic_error("numerator: constant term != 1 for " + s.str());
    if (s.edim() >= 2) {
        if (num.q.coefficient_sum() != 0)
            throw std::logic_error("numerator: coefficient sum != 0 for " + s.str());
        if (num.q.degree() != n)
            throw std::logic_error("numerator: degree != F + sigma_1 for " + s.str());
    }
    return num;
}

Int alternating_power_sum(const Numerator& num, unsigned n) {
    Int acc = 0;
    const auto& c = num.q.coeffs();
    for (std::size_t j = 1; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        if (n == 0)
            acc -= c[j];
        else
            acc -= c[j] * pow_int(Int(static_cast<long>(j)), n);
    }
    return acc;
}

BettiProfile betti_profile(const Numerator& num, const Semigroup& s) {
    const std::size_t m = s.edim();
    BettiProfile prof;
    prof.levels.assign(std::max<std::size_t>(m, 1), {});
    prof.beta.assign(std::max<std::size_t>(m, 1), 0);
    if (m < 2) return prof;

    // Net multiplicity per degree.
    std::map<std::int64_t, long> pool;
    for (const auto& [deg, coeff] : num.signed_degrees()) {
        if (!coeff.fits_slong_p())
            throw std::logic_error("betti_profile: implausible multiplicity");
        pool[deg] = coeff.get_si();
    }

    // Level m-1 is pinned: its degrees are the pseudo-Frobenius numbers
    // shifted by sigma_1, carrying sign (-1)^{m-1}.
    std::int64_t sigma1 = 0;
    for (std::int64_t d : s.generators()) sigma1 += d;
    const int top_sign = (m - 1) % 2 == 0 ? +1 : -1;
    for (std::int64_t pf : s.pseudo_frobenius()) {
        const std::int64_t deg = pf + sigma1;
        auto it = pool.find(deg);
        if (it != pool.end() && (top_sign > 0 ? it->second > 0 : it->second < 0)) {
            prof.levels[m - 1].push_back(deg);
            it->second -= top_sign;
            if (it->second == 0) pool.erase(it);
        } else {
            prof.heuristic = true;  // net cancellation hid a top-level degree
        }
    }

    if (m == 2) {
        if (!pool.empty())
            throw std::logic_error("betti_profile: unexpected degrees for m = 2");
    } else if (m == 3) {
        // Exact: every remaining negative degree is a first syzygy.
        for (const auto& [deg, c] : pool) {
            if (c > 0)
                throw std::logic_error("betti_profile: stray positive degree for m = 3");
            for (long i = 0; i < -c; ++i) prof.levels[1].push_back(deg);
        }
        if (prof.heuristic)
            throw std::logic_error("betti_profile: inconsistent top level for m = 3");
    } else if (m == 4) {
        // With level 3 pinned, remaining negatives can only sit at level 1
        // and positives at level 2. Net coefficients may still hide
        // cancellation between adjacent levels, hence the flag.
        for (const auto& [deg, c] : pool)
            for (long i = 0; i < std::labs(c); ++i)
                prof.levels[c < 0 ? 1 : 2].push_back(deg);
        prof.heuristic = true;
    } else {
        // m >= 5: several levels share a sign. Walk degrees ascending and
        // advance the level on sign flips; blunt, and flagged as such.
        std::size_t level = 1;
        for (const auto& [deg, c] : pool) {
            const int sign = c > 0 ? +1 : -1;
            while (level < m - 2 && sign != (level % 2 ? -1 : +1)) ++level;
            for (long i = 0; i < std::labs(c); ++i) prof.levels[level].push_back(deg);
        }
        prof.heuristic = true;
    }

    for (std::size_t k = 1; k < m; ++k) {
        std::sort(prof.levels[k].begin(), prof.levels[k].end());
        prof.beta[k] = prof.levels[k].size();
        prof.total += prof.beta[k];
    }
    return prof;
}

std::optional<CIFactorization> ci_factorize(const Numerator& num) {
    const std::size_t m = num.edim;
    if (m == 0) return std::nullopt;
    SignedPolynomial work = num.q;
    CIFactorization ci;
    for (std::size_t step = 0; step + 1 < m; ++step) {
        const auto& c = work.coeffs();
        std::size_t e = 0;
        for (std::size_t j = 1; j < c.size(); ++j)
            if (c[j] != 0) {
                e = j;
                break;
            }
        if (e == 0) return std::nullopt;  // ran out of factors early
        if (c[e] > 0) return std::nullopt;  // a product of (1-z^e) leads with -mult
        auto quot = poly_divexact(work, SignedPolynomial::one_minus_power(
                                            static_cast<std::int64_t>(e)));
        if (!quot) return std::nullopt;
        work = std::move(*quot);
        ci.degrees.push_back(static_cast<std::int64_t>(e));
    }
    if (work != SignedPolynomial::one()) return std::nullopt;

    Int prod = 1;
    for (std::int64_t e : ci.degrees) prod *= e;
    if (prod != num.pi)
        throw std::logic_error("ci_factorize: degree product != pi_m");
    std::sort(ci.degrees.begin(), ci.degrees.end());
    return ci;
}

}  // namespace nsg
