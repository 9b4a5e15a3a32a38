#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nsg/arith.hpp"

namespace nsg {

/// Dense univariate polynomial with exact integer coefficients indexed by
/// degree. Normal form: the highest-degree coefficient is nonzero unless the
/// polynomial is identically zero (empty coefficient vector).
class SignedPolynomial {
public:
    SignedPolynomial() = default;  // zero polynomial
    explicit SignedPolynomial(std::vector<Int> coeffs);

    static SignedPolynomial one();
    static SignedPolynomial one_minus_power(std::int64_t e);  // 1 - z^e, e >= 1

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t degree() const;  // -1 for the zero polynomial
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& coeff(std::int64_t i) const;  // zero outside [0, degree]

    Int coefficient_sum() const;
    Rat evaluate(const Rat& x) const;

    friend bool operator==(const SignedPolynomial&, const SignedPolynomial&) = default;

private:
    std::vector<Int> coeffs_;
};

SignedPolynomial poly_mul(const SignedPolynomial& p, const SignedPolynomial& q);

/// Exact quotient p / q over the integers, or nullopt when q is not a factor
/// of p (nonzero remainder or a non-divisible leading coefficient).
std::optional<SignedPolynomial> poly_divexact(const SignedPolynomial& p,
                                              const SignedPolynomial& q);

}  // namespace nsg
