#include "nsg/corpus.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nsg/json.hpp"

namespace nsg {

namespace {

bool admits(const std::vector<std::int64_t>& gens, const CorpusSpec& spec,
            std::vector<std::int64_t>* canonical) {
    try {
        Semigroup s = Semigroup::build(gens);
        if (spec.max_genus && s.genus() > *spec.max_genus) return false;
        if (canonical)
            canonical->assign(s.generators().begin(), s.generators().end());
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

void enumerate_rec(std::vector<std::int64_t>& cur, std::int64_t next,
                   unsigned m_max, std::int64_t d_max, const CorpusSpec& spec,
                   std::vector<std::vector<std::int64_t>>& out) {
    if (cur.size() >= 2 && admits(cur, spec, nullptr)) out.push_back(cur);
    if (cur.size() == m_max) return;
    for (std::int64_t d = next; d <= d_max; ++d) {
        cur.push_back(d);
        enumerate_rec(cur, d + 1, m_max, d_max, spec, out);
        cur.pop_back();
    }
}

void sort_canonical(std::vector<std::vector<std::int64_t>>& corpus) {
    std::sort(corpus.begin(), corpus.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    corpus.erase(std::unique(corpus.begin(), corpus.end()), corpus.end());
}

}  // namespace

std::vector<std::vector<std::int64_t>> enumerate_corpus(const CorpusSpec& spec) {
    std::vector<std::vector<std::int64_t>> out;
    switch (spec.mode) {
        case CorpusSpec::Mode::explicit_list: {
            for (const auto& gens : spec.explicit_sets) {
                std::vector<std::int64_t> canonical;
                if (!admits(gens, spec, &canonical))
                    throw std::invalid_argument(
                        "corpus: explicit generator set rejected by validation");
                out.push_back(std::move(canonical));
            }
            break;
        }
        case CorpusSpec::Mode::exhaustive: {
            if (spec.m_max < 2 || spec.d_max < 2)
                throw std::invalid_argument("corpus: need m_max >= 2 and d_max >= 2");
            std::vector<std::int64_t> cur;
            enumerate_rec(cur, 2, spec.m_max, spec.d_max, spec, out);
            break;
        }
        case CorpusSpec::Mode::random: {
            if (spec.m_max < 2 || spec.d_max < 3)
                throw std::invalid_argument("corpus: need m_max >= 2 and d_max >= 3");
            // Hand-rolled modular draws keep the stream identical across
            // standard library implementations.
            std::mt19937_64 rng(spec.seed);
            std::set<std::vector<std::int64_t>> seen;
            std::size_t attempts = 0;
            const std::size_t attempt_cap = spec.sample_count * 10000 + 10000;
            while (seen.size() < spec.sample_count && attempts++ < attempt_cap) {
                const unsigned m = 2 + static_cast<unsigned>(rng() % (spec.m_max - 1));
                std::set<std::int64_t> draw;
                while (draw.size() < m)
                    draw.insert(2 + static_cast<std::int64_t>(
                                        rng() % static_cast<std::uint64_t>(spec.d_max - 1)));
                std::vector<std::int64_t> gens(draw.begin(), draw.end());
                std::vector<std::int64_t> canonical;
                if (admits(gens, spec, &canonical) && !seen.count(canonical))
                    seen.insert(canonical);
            }
            if (seen.size() < spec.sample_count)
                throw std::invalid_argument(
                    "corpus: could not draw the requested number of semigroups; "
                    "loosen the bounds");
            out.assign(seen.begin(), seen.end());
            break;
        }
    }
    sort_canonical(out);
    return out;
}

ScanResult scan_corpus(const std::vector<std::vector<std::int64_t>>& corpus,
                       const std::set<std::string>& groups,
                       const CheckOptions& opts, bool parallel) {
    ScanResult result;
    result.reports.resize(corpus.size());

    if (parallel) {
#ifdef _OPENMP
        // Distinct semigroups share no mutable state; dynamic scheduling
        // smooths out the wildly uneven per-semigroup cost. Exceptions may
        // not escape the parallel region, so the first one is parked and
        // rethrown afterwards.
        std::exception_ptr error;
        #pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            try {
                result.reports[i] =
                    run_checks(Semigroup::build(corpus[i]), groups, opts);
            } catch (...) {
                #pragma omp critical(nsg_scan_error)
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
#else
        parallel = false;
#endif
    }
    if (!parallel) {
        for (std::size_t i = 0; i < corpus.size(); ++i)
            result.reports[i] =
                run_checks(Semigroup::build(corpus[i]), groups, opts);
    }

    result.summary.semigroups = corpus.size();
    for (const auto& rep : result.reports)
        for (const auto& rec : rep.records) switch (rec.status) {
                case CheckStatus::holds: ++result.summary.holds; break;
                case CheckStatus::fails: ++result.summary.fails; break;
                case CheckStatus::skipped: ++result.summary.skipped; break;
            }
    return result;
}

void write_jsonl(std::ostream& os, const ScanResult& result, bool with_timings) {
    for (const auto& rep : result.reports)
        for (const auto& rec : rep.records)
            os << record_to_json(rep, rec, with_timings).dump() << '\n';
}

void write_csv(std::ostream& os, const ScanResult& result) {
    os << "semigroup,class,check,status,lhs,rhs,note\n";
    for (const auto& rep : result.reports) {
        std::string gens;
        for (std::size_t i = 0; i < rep.generators.size(); ++i)
            gens += (i ? " " : "") + std::to_string(rep.generators[i]);
        for (const auto& rec : rep.records) {
            auto quote = [](const std::string& s) {
                std::string q = "\"";
                for (char c : s) {
                    if (c == '"') q += '"';
                    q += c;
                }
                return q + "\"";
            };
            os << quote(gens) << ',' << rep.class_tag << ',' << rec.check << ','
               << to_string(rec.status) << ',' << quote(rec.lhs) << ','
               << quote(rec.rhs) << ',' << quote(rec.note) << '\n';
        }
    }
}

}  // namespace nsg
