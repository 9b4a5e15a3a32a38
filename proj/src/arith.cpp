#include "nsg/arith.hpp"

#include <stdexcept>

namespace nsg {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat pow_rat(const Rat& base, unsigned long exp) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    return r;  // powers of a canonical rational stay canonical
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int falling_factorial(const Int& x, unsigned long r) {
    Int p = 1;
    for (unsigned long i = 0; i < r; ++i) p *= x - static_cast<long>(i);
    return p;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace nsg
