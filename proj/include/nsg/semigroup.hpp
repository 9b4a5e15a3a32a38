#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nsg/arith.hpp"

namespace nsg {

/// Sorted gap set of a semigroup together with the Frobenius number
/// (frobenius = -1 for the degenerate gap-free semigroup <1>).
struct GapSet {
    std::vector<std::int64_t> gaps;
    std::int64_t frobenius = -1;
};

/// Exact power sums G_0..G_n of the gap set.
using GeneraVector = std::vector<Int>;

/// A numerical semigroup, validated on construction: positive generators,
/// gcd 1, minimal generating set. Immutable afterwards; all queries are
/// const and safe to run concurrently on the same instance.
class Semigroup {
public:
    /// Validates and canonicalizes the generator list. Throws
    /// std::invalid_argument with a diagnostic naming the offending
    /// generator for non-coprime or non-minimal input.
    static Semigroup build(std::vector<std::int64_t> generators);

    std::size_t edim() const { return gens_.size(); }       // m
    std::int64_t multiplicity() const { return gens_[0]; }  // mu
    std::span<const std::int64_t> generators() const { return gens_; }

    /// Apery set with respect to the multiplicity: apery()[r] is the least
    /// element of the semigroup congruent to r mod mu.
    std::span<const std::int64_t> apery() const { return apery_; }

    bool contains(std::int64_t n) const;

    std::int64_t frobenius() const;
    GapSet gap_set() const;
    const std::vector<std::int64_t>& gaps() const { return gaps_; }

    Int genus() const { return Int(static_cast<long>(gaps_.size())); }  // G_0
    GeneraVector genera(unsigned n) const;                              // G_0..G_n

    std::vector<std::int64_t> pseudo_frobenius() const;
    bool is_symmetric() const;

    Int sigma(unsigned k) const;  // sum of d_j^k
    Rat delta(unsigned p) const;  // (sigma_p - 1) / 2^p
    Int pi() const;               // product of generators

    std::string str() const;  // "<d1,d2,...>"

    friend bool operator==(const Semigroup&, const Semigroup&) = default;

private:
    Semigroup() = default;

    std::vector<std::int64_t> gens_;
    std::vector<std::int64_t> apery_;
    std::vector<std::int64_t> gaps_;
};

}  // namespace nsg
