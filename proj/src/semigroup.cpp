#include "nsg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nsg {

namespace {

constexpr std::int64_t kMaxGenerator = 10'000'000;  // desk-scale bound

// Is n representable as a nonnegative combination of gens? Small DP sieve;
// gens need not be coprime here (used for minimality testing).
bool representable(std::int64_t n, const std::vector<std::int64_t>& gens) {
    if (n < 0) return false;
    std::vector<char> rep(static_cast<std::size_t>(n) + 1, 0);
    rep[0] = 1;
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t d : gens)
            if (i >= d && rep[static_cast<std::size_t>(i - d)]) {
                rep[static_cast<std::size_t>(i)] = 1;
                break;
            }
    return rep[static_cast<std::size_t>(n)] != 0;
}

std::vector<std::int64_t> compute_apery(const std::vector<std::int64_t>& gens) {
    const std::int64_t mu = gens[0];
    std::vector<std::int64_t> ap(static_cast<std::size_t>(mu), -1);
    ap[0] = 0;
    // Round-robin relaxation over residue classes mod mu; adding the
    // multiplicity itself never improves a class, so skip it.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::int64_t r = 0; r < mu; ++r) {
            const std::int64_t v = ap[static_cast<std::size_t>(r)];
            if (v < 0) continue;
            for (std::size_t j = 1; j < gens.size(); ++j) {
                const std::int64_t cand = v + gens[j];
                const std::int64_t nr = cand % mu;
                std::int64_t& slot = ap[static_cast<std::size_t>(nr)];
                if (slot < 0 || cand < slot) {
                    slot = cand;
                    changed = true;
                }
            }
        }
    }
    return ap;
}

}  // namespace

Semigroup Semigroup::build(std::vector<std::int64_t> generators) {
    if (generators.empty())
        throw std::invalid_argument("semigroup: empty generator list");
    for (std::int64_t d : generators) {
        if (d < 1) throw std::invalid_argument("semigroup: generator " +
                                               std::to_string(d) + " is not positive");
        if (d > kMaxGenerator)
            throw std::invalid_argument("semigroup: generator " + std::to_string(d) +
                                        " exceeds the supported desk-scale bound");
    }
    std::sort(generators.begin(), generators.end());
    for (std::size_t i = 1; i < generators.size(); ++i)
        if (generators[i] == generators[i - 1])
            throw std::invalid_argument("semigroup: non-minimal generator " +
                                        std::to_string(generators[i]) + " (duplicate)");

    std::int64_t g = 0;
    for (std::int64_t d : generators) g = std::gcd(g, d);
    if (g != 1)
        throw std::invalid_argument("semigroup: not a numerical semigroup, gcd = " +
                                    std::to_string(g));

    // Minimality: no generator may be representable by the others.
    for (std::size_t i = 0; i < generators.size() && generators.size() > 1; ++i) {
        std::vector<std::int64_t> others;
        others.reserve(generators.size() - 1);
        for (std::size_t j = 0; j < generators.size(); ++j)
            if (j != i) others.push_back(generators[j]);
        if (representable(generators[i], others))
            throw std::invalid_argument("semigroup: non-minimal generator " +
                                        std::to_string(generators[i]));
    }

    Semigroup s;
    s.gens_ = std::move(generators);
    s.apery_ = compute_apery(s.gens_);

    // Gaps per residue class: apery[r] - k*mu for k >= 1, down to 1.
    const std::int64_t mu = s.gens_[0];
    for (std::int64_t r = 0; r < mu; ++r)
        for (std::int64_t v = s.apery_[static_cast<std::size_t>(r)] - mu; v >= 1; v -= mu)
            s.gaps_.push_back(v);
    std::sort(s.gaps_.begin(), s.gaps_.end());
    return s;
}

bool Semigroup::contains(std::int64_t n) const {
    if (n < 0) return false;
    return n >= apery_[static_cast<std::size_t>(n % multiplicity())];
}

std::int64_t Semigroup::frobenius() const {
    return *std::max_element(apery_.begin(), apery_.end()) - multiplicity();
}

GapSet Semigroup::gap_set() const { return GapSet{gaps_, frobenius()}; }

GeneraVector Semigroup::genera(unsigned n) const {
    GeneraVector g(n + 1, Int(0));
    for (std::int64_t s : gaps_) {
        Int p = 1;
        for (unsigned k = 0; k <= n; ++k) {
            g[k] += p;
            p *= s;
        }
    }
    return g;
}

std::vector<std::int64_t> Semigroup::pseudo_frobenius() const {
    // f is pseudo-Frobenius iff f + d in S for every generator d; closure
    // under addition extends this to all nonzero elements of S.
    std::vector<std::int64_t> pf;
    for (std::int64_t f : gaps_) {
        bool ok = true;
        for (std::int64_t d : gens_)
            if (!contains(f + d)) {
                ok = false;
                break;
            }
        if (ok) pf.push_back(f);
    }
    return pf;
}

bool Semigroup::is_symmetric() const {
    const std::int64_t f = frobenius();
    bool bijects = true;
    for (std::int64_t s : gaps_)
        if (!contains(f - s)) {
            bijects = false;
            break;
        }
    const bool by_count = (f == 2 * static_cast<std::int64_t>(gaps_.size()) - 1);
    if (bijects != by_count)
        throw std::logic_error("semigroup: symmetry tests disagree on " + str());
    return bijects;
}

Int Semigroup::sigma(unsigned k) const {
    Int s = 0;
    for (std::int64_t d : gens_) s += pow_int(Int(d), k);
    return s;
}

Rat Semigroup::delta(unsigned p) const {
    return make_rat(sigma(p) - 1, pow_int(Int(2), p));
}

Int Semigroup::pi() const {
    Int p = 1;
    for (std::int64_t d : gens_) p *= d;
    return p;
}

std::string Semigroup::str() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < gens_.size(); ++i)
        os << (i ? "," : "") << gens_[i];
    os << ">";
    return os.str();
}

}  // namespace nsg
