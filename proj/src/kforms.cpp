#include "nsg/kforms.hpp"

#include <stdexcept>

#include "nsg/combinatorics.hpp"

namespace nsg {

Rat t_eval(unsigned r, const PowerSumValues& x) {
    const Rat &x1 = x.x1, &x2 = x.x2, &x4 = x.x4, &x6 = x.x6;
    Rat v;
    switch (r) {
        case 0:
            return Rat(1);
        case 1:
            v = x1 / 2;
            break;
        case 2:
            v = (3 * x1 * x1 + x2) / 12;
            break;
        case 3:
            v = (x1 * x1 + x2) * x1 / 8;
            break;
        case 4:
            v = (15 * pow_rat(x1, 4) + 30 * x1 * x1 * x2 + 5 * x2 * x2 - 2 * x4) / 240;
            break;
        case 5:
            v = (3 * pow_rat(x1, 4) + 10 * x1 * x1 * x2 + 5 * x2 * x2 - 2 * x4) * x1 / 96;
            break;
        case 6:
            v = (63 * pow_rat(x1, 6) + 315 * pow_rat(x1, 4) * x2 +
                 315 * x1 * x1 * x2 * x2 - 126 * x1 * x1 * x4 + 35 * pow_rat(x2, 3) -
                 42 * x2 * x4 + 16 * x6) /
                4032;
            break;
        case 7:
            v = (9 * pow_rat(x1, 6) + 63 * pow_rat(x1, 4) * x2 +
                 105 * x1 * x1 * x2 * x2 - 42 * x1 * x1 * x4 + 35 * pow_rat(x2, 3) -
                 42 * x2 * x4 + 16 * x6) *
                x1 / 1152;
            break;
        default:
            throw std::invalid_argument("t_eval: only T_0..T_7 are available");
    }
    v.canonicalize();
    return v;
}

PowerSumValues sigma_power_sums(const Semigroup& s) {
    return {Rat(s.sigma(1)), Rat(s.sigma(2)), Rat(s.sigma(4)), Rat(s.sigma(6))};
}

PowerSumValues delta_power_sums(const Semigroup& s) {
    return {s.delta(1), s.delta(2), s.delta(4), s.delta(6)};
}

Rat extract_k(const Numerator& num, unsigned p) {
    const unsigned m = static_cast<unsigned>(num.edim);
    const Int c = alternating_power_sum(num, m + p);
    Rat k = make_rat(c * factorial(p), factorial(m + p) * num.pi);
    if (m % 2) k = -k;
    return k;
}

Rat extract_k(const Semigroup& s, unsigned p) { return extract_k(numerator(s), p); }

Rat k_closed_form(const Semigroup& s, unsigned p) {
    if (p > 6)
        throw std::invalid_argument("k_closed_form: closed forms stop at p = 6");
    const GeneraVector gv = s.genera(p);
    auto G = [&](unsigned r) { return Rat(gv[r]); };
    const Rat s1(s.sigma(1)), s2(s.sigma(2)), s4(s.sigma(4)), s6(s.sigma(6));
    const Rat d1 = s.delta(1), d2 = s.delta(2), d4 = s.delta(4), d6 = s.delta(6);
    Rat v;
    switch (p) {
        case 0:
            v = G(0) + d1;
            break;
        case 1:
            v = G(1) + s1 / 2 * G(0) + (3 * d1 * d1 + d2) / 6;
            break;
        case 2:
            v = G(2) + s1 * G(1) + (3 * s1 * s1 + s2) / 12 * G(0) +
                d1 * (d1 * d1 + d2) / 3;
            break;
        case 3:
            v = G(3) + Rat(3, 2) * s1 * G(2) + (3 * s1 * s1 + s2) / 4 * G(1) +
                s1 * (s1 * s1 + s2) / 8 * G(0) +
                (15 * pow_rat(d1, 4) + 30 * d1 * d1 * d2 + 5 * d2 * d2 - 2 * d4) / 60;
            break;
        case 4:
            v = G(4) + 2 * s1 * G(3) + (3 * s1 * s1 + s2) / 2 * G(2) +
                s1 * (s1 * s1 + s2) / 2 * G(1) +
                (15 * pow_rat(s1, 4) + 30 * s1 * s1 * s2 + 5 * s2 * s2 - 2 * s4) / 240 *
                    G(0) +
                d1 * (3 * pow_rat(d1, 4) + 10 * d1 * d1 * d2 + 5 * d2 * d2 - 2 * d4) / 15;
            break;
        case 5:
            v = G(5) + Rat(5, 2) * s1 * G(4) + Rat(5, 6) * (3 * s1 * s1 + s2) * G(3) +
                Rat(5, 4) * s1 * (s1 * s1 + s2) * G(2) +
                (15 * pow_rat(s1, 4) + 30 * s1 * s1 * s2 + 5 * s2 * s2 - 2 * s4) / 48 *
                    G(1) +
                s1 * (3 * pow_rat(s1, 4) + 10 * s1 * s1 * s2 + 5 * s2 * s2 - 2 * s4) /
                    96 * G(0) +
                (63 * pow_rat(d1, 6) + 315 * pow_rat(d1, 4) * d2 +
                 315 * d1 * d1 * d2 * d2 - 126 * d1 * d1 * d4 + 35 * pow_rat(d2, 3) -
                 42 * d2 * d4 + 16 * d6) /
                    378;
            break;
        case 6:
            v = G(6) + 3 * s1 * G(5) + Rat(5, 4) * (3 * s1 * s1 + s2) * G(4) +
                Rat(5, 2) * s1 * (s1 * s1 + s2) * G(3) +
                (15 * pow_rat(s1, 4) + 30 * s1 * s1 * s2 + 5 * s2 * s2 - 2 * s4) / 16 *
                    G(2) +
                s1 * (3 * pow_rat(s1, 4) + 10 * s1 * s1 * s2 + 5 * s2 * s2 - 2 * s4) /
                    16 * G(1) +
                (63 * pow_rat(s1, 6) + 315 * pow_rat(s1, 4) * s2 +
                 315 * s1 * s1 * s2 * s2 - 126 * s1 * s1 * s4 + 35 * pow_rat(s2, 3) -
                 42 * s2 * s4 + 16 * s6) /
                    4032 * G(0) +
                d1 *
                    (9 * pow_rat(d1, 6) + 63 * pow_rat(d1, 4) * d2 +
                     105 * d1 * d1 * d2 * d2 - 42 * d1 * d1 * d4 + 35 * pow_rat(d2, 3) -
                     42 * d2 * d4 + 16 * d6) /
                    63;
            break;
    }
    v.canonicalize();
    return v;
}

Rat conjecture_rhs(const Semigroup& s, unsigned p) {
    if (p > 6)
        throw std::invalid_argument("conjecture_rhs: T polynomials stop at T_7");
    const PowerSumValues xs = sigma_power_sums(s);
    const PowerSumValues xd = delta_power_sums(s);
    const GeneraVector gv = s.genera(p);
    Rat acc(0);
    for (unsigned r = 0; r <= p; ++r)
        acc += Rat(binomial(p, r)) * t_eval(p - r, xs) * Rat(gv[r]);
    acc += make_rat(pow_int(Int(2), p + 1), Int(p + 1)) * t_eval(p + 1, xd);
    acc.canonicalize();
    return acc;
}

Verdict conjecture_check(const Semigroup& s, unsigned p) {
    const Rat lhs = extract_k(s, p);
    const Rat rhs = conjecture_rhs(s, p);
    Verdict v;
    v.id = "conjecture.p" + std::to_string(p);
    v.holds = (lhs == rhs);
    v.lhs = to_string(lhs);
    v.rhs = to_string(rhs);
    if (!v.holds) v.note = "counterexample";
    return v;
}

}  // namespace nsg
