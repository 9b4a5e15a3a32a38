#pragma once

#include <string>

#include "nsg/arith.hpp"

namespace nsg {

/// Exact element a + b*sqrt(d) of the real quadratic extension Q(sqrt(d)),
/// d a positive integer. When d is a perfect square the radical part is
/// folded into the rational part on construction, so b != 0 implies d is not
/// a perfect square. Binary operations require both operands to carry the
/// same radicand.
class QuadExt {
public:
    QuadExt(Rat a, Rat b, Int radicand);

    static QuadExt rational(Rat a, Int radicand) {
        return QuadExt(std::move(a), Rat(0), std::move(radicand));
    }

    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    const Int& radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadExt conjugate() const { return QuadExt(a_, -b_, d_); }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const Rat& c, const QuadExt& x);
    friend QuadExt operator*(const QuadExt& x, const Rat& c) { return c * x; }
    friend bool operator==(const QuadExt& x, const QuadExt& y);

    QuadExt pow(unsigned e) const;

    std::string str() const;

private:
    Rat a_, b_;
    Int d_;
};

}  // namespace nsg
