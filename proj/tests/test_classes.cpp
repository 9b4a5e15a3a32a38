#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nsg/classes.hpp"
#include "nsg/corpus.hpp"

using namespace nsg;

namespace {

Classification classify_gens(std::initializer_list<std::int64_t> gens) {
    const Semigroup s = Semigroup::build(gens);
    return classify(s, numerator(s));
}

bool all_hold(const std::vector<Verdict>& vs) {
    for (const auto& v : vs)
        if (!v.holds) return false;
    return true;
}

std::vector<std::vector<std::int64_t>> small_corpus(std::int64_t dmax = 12) {
    CorpusSpec spec;
    spec.mode = CorpusSpec::Mode::exhaustive;
    spec.m_max = 4;
    spec.d_max = dmax;
    return enumerate_corpus(spec);
}

}  // namespace

TEST_CASE("classification") {
    CHECK(classify_gens({3, 4, 5}).tag == ClassTag::non_symmetric);
    CHECK(classify_gens({4, 5, 6}).tag == ClassTag::symmetric_ci);
    CHECK(classify_gens({5, 6, 7, 8}).tag == ClassTag::symmetric_not_ci);
    CHECK(classify_gens({6, 10, 15}).tag == ClassTag::symmetric_ci);
    CHECK(to_string(ClassTag::symmetric_ci) == "symmetric-CI");
}

TEST_CASE("m = 3: symmetric iff complete intersection (corpus)") {
    for (const auto& gens : small_corpus()) {
        if (gens.size() != 3) continue;
        const Classification cls = classify_gens({gens[0], gens[1], gens[2]});
        CHECK(cls.tag != ClassTag::symmetric_not_ci);
    }
}

TEST_CASE("symmetric genera relation examples") {
    const auto v456 = symmetric_genera_relation(Semigroup::build({4, 5, 6}), 1);
    CHECK(all_hold(v456));
    // G_2 = F (G_1 - (F^2-1)/12) -> 63 = 7 (13 - 4)
    CHECK(v456[0].lhs == "63");
    // (F^2-1)/12 = G_0(G_0-1)/3 -> 4 = 4
    bool saw_aux = false;
    for (const auto& v : v456)
        if (v.id == "sym.fsquare") {
            saw_aux = true;
            CHECK(v.lhs == "4");
            CHECK(v.rhs == "4");
            CHECK(v.holds);
        }
    CHECK(saw_aux);

    const auto v23 = symmetric_genera_relation(Semigroup::build({2, 3}), 1);
    CHECK(all_hold(v23));
    CHECK(v23[0].lhs == "1");

    CHECK_THROWS_AS(symmetric_genera_relation(Semigroup::build({3, 4, 5}), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(symmetric_genera_relation(Semigroup::build({4, 5, 6}), 0),
                    std::invalid_argument);
}

TEST_CASE("symmetric relations r <= 4 over all symmetric corpus members") {
    for (const auto& gens : small_corpus()) {
        const Semigroup s = Semigroup::build(gens);
        if (!s.is_symmetric()) continue;
        for (unsigned r = 1; r <= 4; ++r)
            CHECK(all_hold(symmetric_genera_relation(s, r)));
        CHECK(all_hold(symmetric_structure_checks(s, numerator(s))));
    }
}

TEST_CASE("symmetric S4 K relations") {
    const Semigroup s = Semigroup::build({5, 6, 7, 8});
    const auto vs = symmetric_s4_k_relations(s, numerator(s));
    CHECK(all_hold(vs));
    // 2 K_0 = Q_4 = 35, so K_0 = 35/2.
    CHECK(vs[0].id == "s4.qhalf");
    CHECK(vs[0].lhs == "35");
    CHECK(extract_k(s, 0) == make_rat(35, 2));

    CHECK_THROWS_AS(
        symmetric_s4_k_relations(Semigroup::build({3, 4, 5}),
                                 numerator(Semigroup::build({3, 4, 5}))),
        std::invalid_argument);
}

TEST_CASE("symmetric S4 K relations over the corpus") {
    for (const auto& gens : small_corpus(13)) {
        if (gens.size() != 4) continue;
        const Semigroup s = Semigroup::build(gens);
        if (!s.is_symmetric()) continue;
        CHECK(all_hold(symmetric_s4_k_relations(s, numerator(s))));
    }
}

TEST_CASE("ci relations examples") {
    {
        const Semigroup s = Semigroup::build({2, 3});
        const Numerator num = numerator(s);
        const auto ci = ci_factorize(num);
        REQUIRE(ci.has_value());
        const auto vs = ci_relations(s, num, *ci, 6);
        CHECK(all_hold(vs));
        CHECK(extract_k(num, 0) == Rat(3));  // pi^1/(1*2)
        CHECK(s.genus() == 1);               // (pi - sigma_1 + 1)/2
    }
    {
        const Semigroup s = Semigroup::build({4, 5, 6});
        const Numerator num = numerator(s);
        const auto ci = ci_factorize(num);
        REQUIRE(ci.has_value());
        CHECK(all_hold(ci_relations(s, num, *ci, 6)));
        // K_1 = (2 K_0^2 - pi/4)/3 = (242 - 30)/3
        CHECK(extract_k(num, 1) == make_rat(212, 3));
    }
}

TEST_CASE("ci relations over all CI corpus members") {
    for (const auto& gens : small_corpus()) {
        const Semigroup s = Semigroup::build(gens);
        const Numerator num = numerator(s);
        const auto ci = ci_factorize(num);
        if (!ci) continue;
        CHECK(all_hold(ci_relations(s, num, *ci, 6)));
        Int prod = 1;
        for (auto e : ci->degrees) prod *= e;
        CHECK(prod == s.pi());
    }
}

TEST_CASE("s3 equations") {
    {
        const Semigroup s = Semigroup::build({3, 4, 5});
        const auto vs = s3_equations(s, numerator(s));
        CHECK(all_hold(vs));
        bool saw42 = false, saw45 = false;
        for (const auto& v : vs) {
            if (v.id == "s3.relation3") saw42 = true;
            if (v.id == "s3.relation4") saw45 = true;
        }
        CHECK(saw42);
        CHECK(saw45);
    }
    {
        const Semigroup s = Semigroup::build({4, 5, 6});
        const auto vs = s3_equations(s, numerator(s));
        CHECK(all_hold(vs));
        // kappa_1 = K_1/pi = 53/90 = (2/3) kappa_0^2 - 1/12.
        CHECK(vs[0].id == "s3.sym.k1");
        CHECK(vs[0].lhs == "53/90");
        CHECK(vs[0].rhs == "53/90");
    }
    CHECK_THROWS_AS(s3_equations(Semigroup::build({2, 3}),
                                 numerator(Semigroup::build({2, 3}))),
                    std::invalid_argument);
}

TEST_CASE("s3 equations over all 3-generated corpus members") {
    for (const auto& gens : small_corpus()) {
        if (gens.size() != 3) continue;
        const Semigroup s = Semigroup::build(gens);
        CHECK(all_hold(s3_equations(s, numerator(s))));
    }
}

TEST_CASE("kappa4 values and positivity") {
    CHECK(kappa4_value(Rat(1), Rat(0), Rat(0)) == Rat(2));  // 2 kappa_0^4
    CHECK(kappa4_value(Rat(1), Rat(1), Rat(1)) == make_rat(71, 4));
    CHECK(kappa4_value(make_rat(1, 2), make_rat(1, 3), make_rat(1, 4)) ==
          make_rat(9, 4));
    CHECK(k4_positivity(Rat(1), Rat(1), Rat(1)));
    CHECK_THROWS_AS(k4_positivity(Rat(0), Rat(1), Rat(1)), std::invalid_argument);

    std::mt19937_64 rng(99);
    auto pos = [&] {
        return make_rat(1 + static_cast<long>(rng() % 2000),
                        1 + static_cast<long>(rng() % 2000));
    };
    for (int i = 0; i < 2000; ++i) CHECK(k4_positivity(pos(), pos(), pos()));
}

TEST_CASE("gm counts") {
    auto gm_of = [](std::initializer_list<std::int64_t> gens) {
        const Semigroup s = Semigroup::build(gens);
        const Numerator num = numerator(s);
        return gm_count(s, classify(s, num), betti_profile(num, s));
    };
    {
        const GmCount g = gm_of({3, 4, 5});  // B_3 = 5 -> g = 3
        CHECK(g.value == 3);
        CHECK(g.formula == "betti");
        CHECK_FALSE(g.heuristic);
    }
    {
        const GmCount g = gm_of({4, 5, 6});  // CI -> m - 2
        CHECK(g.value == 1);
        CHECK(g.formula == "ci");
    }
    {
        const GmCount g = gm_of({5, 6, 7, 8});  // beta_1 - 1 = 4
        CHECK(g.value == 4);
        CHECK(g.formula == "paired-betti");
        CHECK(g.heuristic);
    }
    CHECK_THROWS_AS(gm_of({1}), std::invalid_argument);
}

TEST_CASE("gm count bounds over the corpus") {
    for (const auto& gens : small_corpus()) {
        const Semigroup s = Semigroup::build(gens);
        const Numerator num = numerator(s);
        const Classification cls = classify(s, num);
        const GmCount g = gm_count(s, cls, betti_profile(num, s));
        CHECK(g.value >= 0);
        if (cls.tag == ClassTag::symmetric_ci) {
            CHECK(g.value == Int(static_cast<long>(s.edim()) - 2));
            CHECK(g.value < s.genus());
        }
        if (cls.tag == ClassTag::non_symmetric && s.edim() == 3)
            CHECK(g.value == 3);  // beta = (3,2) always in this class
    }
}
