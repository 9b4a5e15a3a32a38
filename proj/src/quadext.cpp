#include "nsg/quadext.hpp"

#include <stdexcept>

namespace nsg {

namespace {

void require_same_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.radicand() != y.radicand())
        throw std::domain_error("QuadExt: mismatched radicands " +
                                to_string(x.radicand()) + " vs " +
                                to_string(y.radicand()));
}

}  // namespace

QuadExt::QuadExt(Rat a, Rat b, Int radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
    if (d_ <= 0) throw std::domain_error("QuadExt: radicand must be positive");
    if (b_ != 0 && mpz_perfect_square_p(d_.get_mpz_t())) {
        Int root;
        mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
        a_ += b_ * Rat(root);
        b_ = 0;
    }
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    require_same_radicand(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, x.d_);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    require_same_radicand(x, y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, x.d_);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    require_same_radicand(x, y);
    Rat a = x.a_ * y.a_ + x.b_ * y.b_ * Rat(x.d_);
    Rat b = x.a_ * y.b_ + x.b_ * y.a_;
    return QuadExt(std::move(a), std::move(b), x.d_);
}

QuadExt operator*(const Rat& c, const QuadExt& x) {
    return QuadExt(c * x.a_, c * x.b_, x.d_);
}

bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
}

QuadExt QuadExt::pow(unsigned e) const {
    QuadExt acc = QuadExt::rational(Rat(1), d_);
    QuadExt base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

std::string QuadExt::str() const {
    if (b_ == 0) return to_string(a_);
    std::string s;
    if (a_ != 0) s = to_string(a_) + " + ";
    return s + to_string(b_) + "*sqrt(" + to_string(d_) + ")";
}

}  // namespace nsg
