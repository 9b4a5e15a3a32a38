#include "nsg/classes.hpp"

#include <stdexcept>

#include "nsg/combinatorics.hpp"
#include "nsg/quadext.hpp"

namespace nsg {

namespace {

Verdict make_verdict(std::string id, const Rat& lhs, const Rat& rhs) {
    Verdict v;
    v.id = std::move(id);
    v.holds = (lhs == rhs);
    v.lhs = to_string(lhs);
    v.rhs = to_string(rhs);
    return v;
}

Verdict make_verdict(std::string id, const QuadExt& lhs, const QuadExt& rhs) {
    Verdict v;
    v.id = std::move(id);
    v.holds = (lhs == rhs);
    v.lhs = lhs.str();
    v.rhs = rhs.str();
    return v;
}

Verdict make_bool_verdict(std::string id, bool holds, std::string lhs,
                          std::string rhs) {
    Verdict v;
    v.id = std::move(id);
    v.holds = holds;
    v.lhs = std::move(lhs);
    v.rhs = std::move(rhs);
    return v;
}

template <typename T>
T kappa4_poly(const T& k0, const T& k1, const T& k2, const T& one) {
    const T k0sq = k0 * k0;
    const T a = one + Rat(12) * k1;
    return Rat(2) * a * k0sq * k0sq + Rat(24) * k2 * k0sq * k0 -
           Rat(18) * k1 * (one + Rat(4) * k1) * k0sq +
           Rat(3) * k2 * (one - Rat(36) * k1) * k0 + Rat(36) * k2 * k2 +
           Rat(3, 4) * k1 * a * a;
}

}  // namespace

std::string_view to_string(ClassTag tag) {
    switch (tag) {
        case ClassTag::non_symmetric: return "non-symmetric";
        case ClassTag::symmetric_not_ci: return "symmetric-not-CI";
        case ClassTag::symmetric_ci: return "symmetric-CI";
    }
    return "?";
}

Classification classify(const Semigroup& s, const Numerator& num) {
    Classification c;
    c.pf = s.pseudo_frobenius();
    if (!s.is_symmetric()) {
        c.tag = ClassTag::non_symmetric;
        return c;
    }
    c.ci = ci_factorize(num);
    c.tag = c.ci ? ClassTag::symmetric_ci : ClassTag::symmetric_not_ci;
    return c;
}

std::vector<Verdict> symmetric_genera_relation(const Semigroup& s, unsigned r) {
    if (r < 1) throw std::invalid_argument("symmetric_genera_relation: r >= 1");
    if (!s.is_symmetric())
        throw std::invalid_argument("symmetric_genera_relation: " + s.str() +
                                    " is not symmetric");
    const GeneraVector gv = s.genera(2 * r);
    const Rat fm(Int(s.frobenius()));
    auto G = [&](unsigned k) { return Rat(gv[k]); };

    // G_{2r}/F = 1/2 sum_{p<=2r-2} [C(2r,p) B_{2r-p}/(p+1)
    //            + (-1)^p C(2r,p+1) G_{2r-p-1}] F^p - (2r-1)/(2r+1) F^{2r}/4
    Rat rhs(0);
    for (unsigned p = 0; p + 2 <= 2 * r; ++p) {
        Rat term = Rat(binomial(2 * r, p)) * bernoulli(2 * r - p) / Rat(p + 1);
        Rat gterm = Rat(binomial(2 * r, p + 1)) * G(2 * r - p - 1);
        term += (p % 2) ? -gterm : gterm;
        rhs += term * pow_rat(fm, p);
    }
    rhs = (rhs / 2 - Rat(2 * r - 1) / Rat(2 * r + 1) * pow_rat(fm, 2 * r) / 4) * fm;
    rhs.canonicalize();

    std::vector<Verdict> out;
    out.push_back(make_verdict("sym.genera.r" + std::to_string(r), G(2 * r), rhs));

    // Expanded cross-checks for the printed r = 1..4 forms.
    if (r <= 4) {
        const Rat f2 = fm * fm;
        Rat ex;
        switch (r) {
            case 1:
                ex = (G(1) - (f2 - 1) / 12) * fm;
                break;
            case 2:
                ex = (2 * G(3) - f2 * G(1) + (f2 - 1) / 12 * (6 * f2 + 1) / 5) * fm;
                break;
            case 3:
                ex = (3 * G(5) - 5 * f2 * G(3) + 3 * pow_rat(fm, 4) * G(1) -
                      (f2 - 1) / 12 * (51 * pow_rat(fm, 4) + 9 * f2 + 2) / 14) *
                     fm;
                break;
            case 4:
                ex = (4 * G(7) - 14 * f2 * G(5) + 28 * pow_rat(fm, 4) * G(3) -
                      17 * pow_rat(fm, 6) * G(1) +
                      (f2 - 1) / 12 *
                          (310 * pow_rat(fm, 6) + 55 * pow_rat(fm, 4) + 13 * f2 + 3) /
                          15) *
                     fm;
                break;
        }
        ex.canonicalize();
        out.push_back(make_verdict("sym.genera.exp.r" + std::to_string(r), G(2 * r), ex));
        if (r == 1) {
            Rat lhs = (f2 - 1) / 12;
            Rat rhs2 = G(0) * (G(0) - 1) / 3;
            lhs.canonicalize();
            rhs2.canonicalize();
            out.push_back(make_verdict("sym.fsquare", lhs, rhs2));
        }
    }
    return out;
}

std::vector<Verdict> symmetric_structure_checks(const Semigroup& s,
                                                const Numerator& num) {
    std::vector<Verdict> out;
    const std::int64_t f = s.frobenius();

    const auto pf = s.pseudo_frobenius();
    out.push_back(make_bool_verdict("sym.pf", pf.size() == 1 && pf[0] == f,
                                    "|PF| = " + std::to_string(pf.size()),
                                    "|PF| = 1"));

    bool pairs = true;
    for (std::int64_t g : s.gaps())
        if (!s.contains(f - g)) {
            pairs = false;
            break;
        }
    out.push_back(make_bool_verdict("sym.pairing", pairs, pairs ? "bijective" : "broken",
                                    "gaps <-> non-gaps under s -> F - s"));

    // (Anti)palindromic numerator: q_{Qm-j} = (-1)^{m-1} q_j.
    bool palin = true;
    const int sign = (num.edim % 2) ? +1 : -1;
    for (std::int64_t j = 0; j <= num.qm; ++j) {
        const Int mirrored = sign > 0 ? num.q.coeff(num.qm - j) : Int(-num.q.coeff(num.qm - j));
        if (num.q.coeff(j) != mirrored) {
            palin = false;
            break;
        }
    }
    out.push_back(make_bool_verdict("sym.palindrome", palin,
                                    palin ? "palindromic" : "not palindromic",
                                    "q_j = (-1)^{m-1} q_{Qm-j}"));
    return out;
}

std::vector<Verdict> symmetric_s4_k_relations(const Semigroup& s,
                                              const Numerator& num) {
    if (s.edim() != 4 || !s.is_symmetric())
        throw std::invalid_argument(
            "symmetric_s4_k_relations: requires a symmetric 4-generated semigroup");
    std::vector<Rat> k(7);
    for (unsigned p = 0; p <= 6; ++p) k[p] = extract_k(num, p);

    std::vector<Verdict> out;
    out.push_back(make_verdict("s4.qhalf", 2 * k[0], Rat(Int(num.qm))));
    Rat r2 = 2 * (k[1] - k[0] * k[0] / 3) * k[0];
    r2.canonicalize();
    out.push_back(make_verdict("s4.k2", k[2], r2));
    Rat r4 = 4 * (k[3] - 2 * k[0] * k[0] * k[1] + Rat(4, 5) * pow_rat(k[0], 4)) * k[0];
    r4.canonicalize();
    out.push_back(make_verdict("s4.k4", k[4], r4));
    Rat r6 = 6 *
             (k[5] - Rat(20, 3) * k[0] * k[0] * k[3] + 16 * pow_rat(k[0], 4) * k[1] -
              Rat(136, 21) * pow_rat(k[0], 6)) *
             k[0];
    r6.canonicalize();
    out.push_back(make_verdict("s4.k6", k[6], r6));
    return out;
}

std::vector<Verdict> ci_relations(const Semigroup& s, const Numerator& num,
                                  const CIFactorization& ci, unsigned p_max) {
    const std::size_t m = s.edim();
    std::vector<Verdict> out;

    Int eprod = 1;
    PowerSumValues e{Rat(0), Rat(0), Rat(0), Rat(0)};
    for (std::int64_t ej : ci.degrees) {
        eprod *= ej;
        const Int b(ej);
        e.x1 += Rat(b);
        e.x2 += Rat(pow_int(b, 2));
        e.x4 += Rat(pow_int(b, 4));
        e.x6 += Rat(pow_int(b, 6));
    }
    out.push_back(make_verdict("ci.product", Rat(s.pi()), Rat(eprod)));

    std::vector<Rat> k(p_max + 1);
    for (unsigned p = 0; p <= p_max; ++p) {
        k[p] = extract_k(num, p);
        Rat rhs = t_eval(p + 1, e) / Rat(p + 1);
        rhs.canonicalize();
        out.push_back(make_verdict("ci.t.p" + std::to_string(p), k[p], rhs));
    }

    if (m == 2) {
        const Rat pi2(s.pi());
        const Rat s1(s.sigma(1));
        for (unsigned r = 0; r <= p_max; ++r) {
            Rat rhs = pow_rat(pi2, r + 1) / Rat((r + 1) * (r + 2));
            rhs.canonicalize();
            out.push_back(make_verdict("ci.m2.k" + std::to_string(r), k[r], rhs));
        }
        const GeneraVector gv = s.genera(4);
        const Rat head = (pi2 - s1 + 1) / 2;
        Rat g0 = head;
        Rat g1 = head * (2 * pi2 - s1 - 1) / 6;
        Rat g2 = head * pi2 * (pi2 - s1) / 6;
        Rat g3 = head *
                 (6 * pow_rat(pi2, 3) + pi2 * pi2 * (4 - 9 * s1) +
                  pi2 * (s1 * s1 - 2 * s1 - 1) + (s1 + 1) * (s1 * s1 + 1)) /
                 60;
        Rat g4 = head * pi2 * (pi2 - s1) / 6 *
                 (2 * pi2 * pi2 - pi2 * (2 * s1 - 3) - s1 * s1) / 5;
        Rat forms[5] = {g0, g1, g2, g3, g4};
        for (unsigned i = 0; i < 5; ++i) {
            forms[i].canonicalize();
            out.push_back(
                make_verdict("ci.m2.g" + std::to_string(i), Rat(gv[i]), forms[i]));
        }
    } else if (m == 3) {
        const Rat pi3(s.pi());
        const Rat k0 = k[0];
        const Rat k0p2 = k0 * k0, k0p4 = pow_rat(k0, 4), k0p6 = pow_rat(k0, 6);
        std::vector<std::pair<unsigned, Rat>> forms;
        forms.emplace_back(1, (2 * k0p2 - pi3 / 4) / 3);
        forms.emplace_back(2, (2 * k0p2 - pi3 / 2) * k0 / 3);
        forms.emplace_back(3, (4 * k0p4 - Rat(3, 2) * pi3 * k0p2 + pi3 * pi3 / 12) / 5);
        forms.emplace_back(4, Rat(4, 15) * (4 * k0p4 - 2 * pi3 * k0p2 + pi3 * pi3 / 4) * k0);
        forms.emplace_back(
            5, (32 * k0p6 - 20 * pi3 * k0p4 + 4 * pi3 * pi3 * k0p2 - pow_rat(pi3, 3) / 8) / 21);
        forms.emplace_back(
            6, (16 * k0p6 - 12 * pi3 * k0p4 + Rat(10, 3) * pi3 * pi3 * k0p2 -
                pow_rat(pi3, 3) / 4) *
                   k0 / 7);
        for (auto& [idx, rhs] : forms) {
            if (idx > p_max) continue;
            rhs.canonicalize();
            out.push_back(make_verdict("ci.m3.k" + std::to_string(idx), k[idx], rhs));
        }
        const GeneraVector gv = s.genera(2);
        const Rat g0(gv[0]);
        const Rat d1 = s.delta(1), d2 = s.delta(2);
        const Rat gamma = d1 * d1 - d2 - pi3 / 2;
        Rat g1 = Rat(2, 3) * g0 * g0 + (d1 / 3 - Rat(1, 2)) * g0 + gamma / 6;
        g1.canonicalize();
        out.push_back(make_verdict("ci.m3.g1", Rat(gv[1]), g1));
        Rat g2 = Rat(2, 3) * pow_rat(g0, 3) + Rat(2, 3) * (d1 - 1) * g0 * g0 +
                 (gamma - d1 + Rat(1, 2)) * g0 / 3 - gamma / 6;
        g2.canonicalize();
        out.push_back(make_verdict("ci.m3.g2", Rat(gv[2]), g2));
    } else if (m == 4) {
        const Rat pi4(s.pi());
        const Rat k0 = k[0], k1 = k[1];
        const Rat k0p2 = k0 * k0, k0p4 = pow_rat(k0, 4), k0p6 = pow_rat(k0, 6);
        std::vector<std::pair<unsigned, Rat>> forms;
        forms.emplace_back(2, 2 * (k1 - k0p2 / 3) * k0);
        forms.emplace_back(
            3, (12 * k1 * k1 + 2 * k0p2 * k1 - Rat(8, 3) * k0p4 - pi4 / 12 * k0) / 5);
        forms.emplace_back(
            4, (48 * k1 * k1 - 32 * k0p2 * k1 + Rat(16, 3) * k0p4 - pi4 / 3 * k0) * k0 / 5);
        forms.emplace_back(
            5, (72 * pow_rat(k1, 3) + 48 * k1 * k1 * k0p2 - 80 * k1 * k0p4 +
                Rat(64, 3) * k0p6 - pi4 * k1 * k0 - Rat(2, 3) * pi4 * pow_rat(k0, 3) +
                pi4 * pi4 / 72) /
                   7);
        forms.emplace_back(
            6, (432 * pow_rat(k1, 3) - 384 * k1 * k1 * k0p2 + 80 * k1 * k0p4 +
                Rat(16, 3) * k0p6 - 6 * pi4 * k1 * k0 +
                Rat(2, 3) * pi4 * pow_rat(k0, 3) + pi4 * pi4 / 12) *
                   k0 / 7);
        for (auto& [idx, rhs] : forms) {
            if (idx > p_max) continue;
            rhs.canonicalize();
            out.push_back(make_verdict("ci.m4.k" + std::to_string(idx), k[idx], rhs));
        }
        const GeneraVector gv = s.genera(2);
        const Rat g0(gv[0]), g1(gv[1]);
        Rat g2 = (2 * g0 - 1) / 3 * (3 * g1 - g0 * g0 + g0);
        g2.canonicalize();
        out.push_back(make_verdict("ci.m4.g2", Rat(gv[2]), g2));
    }
    return out;
}

std::vector<Verdict> s3_equations(const Semigroup& s, const Numerator& num) {
    if (s.edim() != 3)
        throw std::invalid_argument("s3_equations: requires a 3-generated semigroup");
    const Int pi3 = s.pi();

    // kappa_p = K_p * pi^{-(p+1)/2}: a rational for odd p, a pure radical
    // part for even p.
    auto kappa = [&](unsigned p) {
        const Rat kp = extract_k(num, p);
        if ((p + 1) % 2 == 0)
            return QuadExt(kp / Rat(pow_int(pi3, (p + 1) / 2)), Rat(0), pi3);
        return QuadExt(Rat(0), kp / Rat(pow_int(pi3, p / 2 + 1)), pi3);
    };

    const QuadExt one = QuadExt::rational(Rat(1), pi3);
    const QuadExt zero = QuadExt::rational(Rat(0), pi3);
    const QuadExt k0 = kappa(0), k1 = kappa(1), k2 = kappa(2), k3 = kappa(3),
                  k4 = kappa(4);
    const QuadExt degen = Rat(3) * k1 - Rat(2) * k0 * k0 + Rat(1, 4) * one;

    std::vector<Verdict> out;
    if (s.is_symmetric()) {
        out.push_back(make_verdict(
            "s3.sym.k1", k1, Rat(2, 3) * k0 * k0 - Rat(1, 12) * one));
        out.push_back(make_verdict("s3.sym.k2", k2, k0 * (k1 - Rat(1, 12) * one)));
        out.push_back(make_verdict(
            "s3.sym.k3", k3,
            Rat(9, 5) * k1 * k1 - Rat(1, 10) * k0 * k0 + Rat(1, 240) * one));
        out.push_back(make_verdict("s3.sym.zero1", degen, zero));
        out.push_back(make_verdict(
            "s3.sym.zero2", Rat(6) * k2 - Rat(6) * k1 * k0 + Rat(1, 2) * k0, zero));
        const QuadExt t = Rat(6) * k1 - Rat(1, 2) * one;
        out.push_back(make_verdict("s3.sym.zero3", Rat(15) * k4 - k0 * (t * t), zero));
    } else {
        out.push_back(make_bool_verdict("s3.guard", !(degen == zero), degen.str(),
                                        "!= 0"));
        const QuadExt lhs42 =
            (Rat(10) * k3 - Rat(18) * k1 * k1 + k0 * k0 - Rat(1, 24) * one) * degen;
        const QuadExt r42 = Rat(6) * k2 - Rat(6) * k0 * k1 + Rat(1, 2) * k0;
        out.push_back(make_verdict("s3.relation3", lhs42, r42 * r42));
        const QuadExt t = Rat(6) * k1 - Rat(1, 2) * one;
        const QuadExt lhs45 = (Rat(15) * k4 - k0 * (t * t)) * (degen * degen);
        const QuadExt rhs45 = (Rat(6) * k2 - Rat(6) * k1 * k0 + Rat(1, 2) * k0) *
                              kappa4_poly(k0, k1, k2, one);
        out.push_back(make_verdict("s3.relation4", lhs45, rhs45));
    }
    return out;
}

Rat kappa4_value(const Rat& k0, const Rat& k1, const Rat& k2) {
    Rat v = kappa4_poly(k0, k1, k2, Rat(1));
    v.canonicalize();
    return v;
}

bool k4_positivity(const Rat& k0, const Rat& k1, const Rat& k2) {
    if (k0 <= 0 || k1 < 0 || k2 < 0)
        throw std::invalid_argument("k4_positivity: arguments must be positive");
    return kappa4_value(k0, k1, k2) > 0;
}

GmCount gm_count(const Semigroup& s, const Classification& cls,
                 const BettiProfile& profile) {
    const std::size_t m = s.edim();
    if (m < 2) throw std::invalid_argument("gm_count: requires m >= 2");
    GmCount out;
    out.heuristic = profile.heuristic;
    switch (cls.tag) {
        case ClassTag::symmetric_ci:
            out.value = Int(static_cast<long>(m) - 2);
            out.formula = "ci";
            out.heuristic = false;  // e-degree count is exact
            if (out.value >= s.genus())
                throw std::logic_error("gm_count: CI bound g_m < G_0 violated");
            break;
        case ClassTag::non_symmetric: {
            out.value = Int(static_cast<long>(profile.total) -
                            static_cast<long>(m) + 1);
            out.formula = "betti";
            break;
        }
        case ClassTag::symmetric_not_ci: {
            // beta indices below refer to true partial Betti numbers.
            long g = 0;
            if (m % 2 == 0) {
                const std::size_t q = m / 2;
                for (std::size_t j = 1; j <= q - 1; ++j)
                    g += static_cast<long>(profile.beta[j]);
                g -= static_cast<long>(q) - 1;
            } else if (m % 4 == 1) {
                const std::size_t q = (m - 1) / 4;
                for (std::size_t j = 1; j <= q; ++j)
                    g += static_cast<long>(profile.beta[2 * j - 1]);
                g = 2 * (g - static_cast<long>(q));
            } else {  // m = 4q + 3
                const std::size_t q = (m - 3) / 4;
                for (std::size_t j = 1; j <= q; ++j)
                    g += static_cast<long>(profile.beta[2 * j]);
                g = 2 * (g - static_cast<long>(q)) + 1;
            }
            out.value = Int(g);
            out.formula = "paired-betti";
            break;
        }
    }
    return out;
}

}  // namespace nsg
