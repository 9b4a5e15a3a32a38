#include "nsg/checks.hpp"

#include <chrono>
#include <stdexcept>

#include "nsg/combinatorics.hpp"
#include "nsg/derivatives.hpp"
#include "nsg/numerator.hpp"

namespace nsg {

std::string_view to_string(CheckStatus st) {
    switch (st) {
        case CheckStatus::holds: return "holds";
        case CheckStatus::fails: return "fails";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

const std::vector<std::string>& check_groups() {
    static const std::vector<std::string> groups = {
        "identities", "oracle", "kforms", "conjecture", "symmetric",
        "s4",         "ci",     "s3",     "gm"};
    return groups;
}

bool is_check_group(const std::string& name) {
    for (const auto& g : check_groups())
        if (g == name) return true;
    return false;
}

bool SemigroupReport::any_failure() const {
    for (const auto& r : records)
        if (r.status == CheckStatus::fails) return true;
    return false;
}

namespace {

CheckRecord from_verdict(const Verdict& v) {
    CheckRecord r;
    r.check = v.id;
    r.status = v.holds ? CheckStatus::holds : CheckStatus::fails;
    r.lhs = v.lhs;
    r.rhs = v.rhs;
    r.note = v.note;
    return r;
}

CheckRecord skipped(const std::string& group, std::string why) {
    CheckRecord r;
    r.check = group;
    r.status = CheckStatus::skipped;
    r.note = std::move(why);
    return r;
}

CheckRecord equality(std::string id, const Int& lhs, const Int& rhs) {
    CheckRecord r;
    r.check = std::move(id);
    r.status = (lhs == rhs) ? CheckStatus::holds : CheckStatus::fails;
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
    return r;
}

// Per-semigroup evaluation context; computed once, consumed by every group.
struct EvalContext {
    const Semigroup& s;
    Numerator num;
    Classification cls;
    BettiProfile profile;

    explicit EvalContext(const Semigroup& sg)
        : s(sg), num(numerator(sg)), cls(classify(sg, num)),
          profile(betti_profile(num, sg)) {}
};

void run_identities(const EvalContext& ctx, std::vector<CheckRecord>& out) {
    const unsigned m = static_cast<unsigned>(ctx.s.edim());
    out.push_back(equality("identity.c0", alternating_power_sum(ctx.num, 0), Int(1)));
    for (unsigned r = 1; r + 2 <= m; ++r)
        out.push_back(equality("identity.r" + std::to_string(r),
                               alternating_power_sum(ctx.num, r), Int(0)));
    Int top = factorial(m - 1) * ctx.s.pi();
    if (m % 2) top = -top;
    out.push_back(equality("identity.top", alternating_power_sum(ctx.num, m - 1), top));
}

void run_oracle(const EvalContext& ctx, const CheckOptions& opts,
                std::vector<CheckRecord>& out) {
    const unsigned m = static_cast<unsigned>(ctx.s.edim());
    const unsigned hi =
        opts.n_max ? std::max(*opts.n_max, m - 1) : m + opts.n_extra;
    DerivativeTower tower(ctx.s);
    for (unsigned n = m - 1; n <= hi; ++n)
        out.push_back(equality("oracle.n" + std::to_string(n),
                               tower.c_alternating(n),
                               alternating_power_sum(ctx.num, n)));
}

void run_kforms(const EvalContext& ctx, const CheckOptions& opts,
                std::vector<CheckRecord>& out) {
    bool all_positive = true;
    Rat witness;
    unsigned witness_p = 0;
    for (unsigned p = 0; p <= opts.p_max; ++p) {
        const Rat lhs = extract_k(ctx.num, p);
        const Rat rhs = k_closed_form(ctx.s, p);
        CheckRecord r;
        r.check = "kform.p" + std::to_string(p);
        r.status = (lhs == rhs) ? CheckStatus::holds : CheckStatus::fails;
        r.lhs = to_string(lhs);
        r.rhs = to_string(rhs);
        out.push_back(std::move(r));
        if (all_positive && lhs <= 0) {
            all_positive = false;
            witness = lhs;
            witness_p = p;
        }
    }
    // K_p > 0 is claimed only conditionally on the conjecture; a violation
    // is a reportable finding rather than a defect.
    CheckRecord pos;
    pos.check = "kform.positivity";
    pos.status = all_positive ? CheckStatus::holds : CheckStatus::fails;
    pos.lhs = all_positive ? "K_p > 0 for p <= " + std::to_string(opts.p_max)
                           : "K_" + std::to_string(witness_p) + " = " +
                                 to_string(witness);
    pos.rhs = "> 0";
    if (!all_positive) pos.note = "counterexample";
    out.push_back(std::move(pos));
}

void run_conjecture(const EvalContext& ctx, const CheckOptions& opts,
                    std::vector<CheckRecord>& out) {
    for (unsigned p = 0; p <= opts.p_max; ++p) {
        const Rat lhs = extract_k(ctx.num, p);
        const Rat rhs = conjecture_rhs(ctx.s, p);
        Verdict v;
        v.id = "conjecture.p" + std::to_string(p);
        v.holds = (lhs == rhs);
        v.lhs = to_string(lhs);
        v.rhs = to_string(rhs);
        if (!v.holds) v.note = "counterexample";  // a finding, not a defect
        out.push_back(from_verdict(v));
    }
}

void run_symmetric(const EvalContext& ctx, std::vector<CheckRecord>& out) {
    for (const auto& v : symmetric_structure_checks(ctx.s, ctx.num))
        out.push_back(from_verdict(v));
    for (unsigned r = 1; r <= 4; ++r)
        for (const auto& v : symmetric_genera_relation(ctx.s, r))
            out.push_back(from_verdict(v));
}

void run_gm(const EvalContext& ctx, std::vector<CheckRecord>& out) {
    const GmCount gm = gm_count(ctx.s, ctx.cls, ctx.profile);
    CheckRecord r;
    r.check = "gm.count";
    r.status = CheckStatus::holds;
    r.lhs = to_string(gm.value);
    r.rhs = gm.formula;
    if (gm.heuristic) r.note = "profile heuristic";
    out.push_back(std::move(r));
    if (ctx.cls.tag == ClassTag::symmetric_ci) {
        CheckRecord lt;
        lt.check = "gm.lt_genus";
        lt.status = (gm.value < ctx.s.genus()) ? CheckStatus::holds : CheckStatus::fails;
        lt.lhs = to_string(gm.value);
        lt.rhs = "< " + to_string(ctx.s.genus());
        out.push_back(std::move(lt));
    }
}

}  // namespace

SemigroupReport run_checks(const Semigroup& s, const std::set<std::string>& groups,
                           const CheckOptions& opts) {
    if (opts.p_max > 6)
        throw std::invalid_argument("run_checks: p_max is capped at 6 (T_7 is the "
                                    "last tabulated T polynomial)");
    for (const auto& g : groups)
        if (!is_check_group(g))
            throw std::invalid_argument("run_checks: unknown check group '" + g + "'");

    const auto t0 = std::chrono::steady_clock::now();
    SemigroupReport rep;
    rep.generators.assign(s.generators().begin(), s.generators().end());

    EvalContext ctx(s);
    rep.class_tag = std::string(to_string(ctx.cls.tag));
    const std::size_t m = s.edim();
    const bool sym = ctx.cls.tag != ClassTag::non_symmetric;

    auto selected = [&](const char* g) { return groups.count(g) != 0; };

    if (m < 2) {
        for (const auto& g : groups)
            rep.records.push_back(skipped(g, "degenerate semigroup <1>"));
    } else {
        if (selected("identities")) run_identities(ctx, rep.records);
        if (selected("oracle")) run_oracle(ctx, opts, rep.records);
        if (selected("kforms")) run_kforms(ctx, opts, rep.records);
        if (selected("conjecture")) run_conjecture(ctx, opts, rep.records);
        if (selected("symmetric")) {
            if (sym)
                run_symmetric(ctx, rep.records);
            else
                rep.records.push_back(skipped("symmetric", "class mismatch"));
        }
        if (selected("s4")) {
            if (sym && m == 4)
                for (const auto& v : symmetric_s4_k_relations(ctx.s, ctx.num))
                    rep.records.push_back(from_verdict(v));
            else
                rep.records.push_back(skipped("s4", "class mismatch"));
        }
        if (selected("ci")) {
            if (ctx.cls.ci)
                for (const auto& v :
                     ci_relations(ctx.s, ctx.num, *ctx.cls.ci, opts.p_max))
                    rep.records.push_back(from_verdict(v));
            else
                rep.records.push_back(skipped("ci", "class mismatch"));
        }
        if (selected("s3")) {
            if (m == 3)
                for (const auto& v : s3_equations(ctx.s, ctx.num))
                    rep.records.push_back(from_verdict(v));
            else
                rep.records.push_back(skipped("s3", "class mismatch"));
        }
        if (selected("gm")) run_gm(ctx, rep.records);
    }

    rep.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

}  // namespace nsg
