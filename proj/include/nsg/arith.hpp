#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nsg {

// Exact arithmetic substrate. mpq_class values are kept canonical (lowest
// terms, positive denominator); construct rationals through make_rat rather
// than the raw two-argument mpq_class constructor, which does not reduce.
using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den);

inline Rat to_rat(const Int& n) { return Rat(n); }

bool is_integer(const Rat& q);

Int pow_int(const Int& base, unsigned long exp);
Rat pow_rat(const Rat& base, unsigned long exp);

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

/// Falling factorial (x)_r = x(x-1)...(x-r+1); empty product for r = 0.
Int falling_factorial(const Int& x, unsigned long r);

std::string to_string(const Int& n);
std::string to_string(const Rat& q);  // "p/q", or "p" when integral

}  // namespace nsg
