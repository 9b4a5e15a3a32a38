#include "nsg/poly.hpp"

#include <stdexcept>

namespace nsg {

namespace {
const Int kZero = 0;
}

SignedPolynomial::SignedPolynomial(std::vector<Int> coeffs)
    : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

SignedPolynomial SignedPolynomial::one() {
    return SignedPolynomial(std::vector<Int>{Int(1)});
}

SignedPolynomial SignedPolynomial::one_minus_power(std::int64_t e) {
    if (e < 1) throw std::invalid_argument("one_minus_power: exponent must be >= 1");
    std::vector<Int> c(static_cast<std::size_t>(e) + 1, Int(0));
    c.front() = 1;
    c.back() = -1;
    return SignedPolynomial(std::move(c));
}

std::int64_t SignedPolynomial::degree() const {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
}

const Int& SignedPolynomial::coeff(std::int64_t i) const {
    if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

Int SignedPolynomial::coefficient_sum() const {
    Int s = 0;
    for (const Int& c : coeffs_) s += c;
    return s;
}

Rat SignedPolynomial::evaluate(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + Rat(*it);
    return acc;
}

SignedPolynomial poly_mul(const SignedPolynomial& p, const SignedPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return SignedPolynomial();
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<Int> out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return SignedPolynomial(std::move(out));
}

std::optional<SignedPolynomial> poly_divexact(const SignedPolynomial& p,
                                              const SignedPolynomial& q) {
    if (q.is_zero()) throw std::invalid_argument("poly_divexact: division by zero");
    if (p.is_zero()) return SignedPolynomial();
    if (p.degree() < q.degree()) return std::nullopt;

    std::vector<Int> rem = p.coeffs();
    const auto& d = q.coeffs();
    const Int& lead = d.back();
    const std::size_t qd = d.size() - 1;
    std::vector<Int> quot(rem.size() - qd, Int(0));

    for (std::size_t i = rem.size(); i-- > qd;) {
        if (rem[i] == 0) continue;
        Int c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return std::nullopt;  // leading coefficient not divisible
        quot[i - qd] = c;
        for (std::size_t j = 0; j <= qd; ++j) rem[i - qd + j] -= c * d[j];
    }
    for (const Int& c : rem)
        if (c != 0) return std::nullopt;  // not a factor
    return SignedPolynomial(std::move(quot));
}

}  // namespace nsg
