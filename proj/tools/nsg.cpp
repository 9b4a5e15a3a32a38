// nsg — numerical semigroup invariants and identity verification.
//
// Subcommands: info, verify, scan, numerator, genera. Exit codes: 0 on
// success, 1 when a check failed, 2 on usage or input errors. OMP_NUM_THREADS
// controls the scan worker count.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "nsg/corpus.hpp"
#include "nsg/derivatives.hpp"
#include "nsg/json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::set<std::string> parse_checks(const std::vector<std::string>& raw) {
    std::set<std::string> groups;
    for (const auto& entry : raw) {
        std::stringstream ss(entry);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            if (tok == "all") {
                for (const auto& g : nsg::check_groups()) groups.insert(g);
            } else if (nsg::is_check_group(tok)) {
                groups.insert(tok);
            } else {
                throw CLI::ValidationError("--checks", "unknown check group '" + tok +
                                                           "'");
            }
        }
    }
    if (groups.empty())
        for (const auto& g : nsg::check_groups()) groups.insert(g);
    return groups;
}

void print_records_table(std::ostream& os, const nsg::SemigroupReport& rep) {
    for (const auto& rec : rep.records) {
        os << "  " << std::left << std::setw(14) << rec.check << " "
           << std::setw(8) << nsg::to_string(rec.status);
        if (rec.status != nsg::CheckStatus::skipped)
            os << " lhs=" << rec.lhs << " rhs=" << rec.rhs;
        if (!rec.note.empty()) os << "  (" << rec.note << ")";
        os << "\n";
    }
}

int cmd_info(const std::vector<std::int64_t>& gens, bool as_json) {
    const nsg::Semigroup s = nsg::Semigroup::build(gens);
    const nsg::Numerator num = nsg::numerator(s);
    const nsg::Classification cls = nsg::classify(s, num);
    const nsg::json obj = nsg::info_to_json(s, num, cls);
    if (as_json) {
        std::cout << obj.dump() << "\n";
        return kExitOk;
    }
    std::cout << "semigroup   " << s.str() << "\n"
              << "m           " << s.edim() << "\n"
              << "mu          " << s.multiplicity() << "\n"
              << "F           " << s.frobenius() << "\n"
              << "G0          " << nsg::to_string(s.genus()) << "\n"
              << "PF          ";
    for (std::size_t i = 0; i < cls.pf.size(); ++i)
        std::cout << (i ? "," : "") << cls.pf[i];
    std::cout << "\n"
              << "class       " << nsg::to_string(cls.tag) << "\n"
              << "pi          " << nsg::to_string(s.pi()) << "\n"
              << "sigma1      " << nsg::to_string(s.sigma(1)) << "\n"
              << "Qm          " << num.qm << "\n";
    if (cls.ci) {
        std::cout << "e           ";
        for (std::size_t i = 0; i < cls.ci->degrees.size(); ++i)
            std::cout << (i ? "," : "") << cls.ci->degrees[i];
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::vector<std::int64_t>& gens,
               const std::set<std::string>& groups, const nsg::CheckOptions& opts,
               bool as_json) {
    const nsg::Semigroup s = nsg::Semigroup::build(gens);
    const nsg::SemigroupReport rep = nsg::run_checks(s, groups, opts);
    if (as_json) {
        for (const auto& rec : rep.records)
            std::cout << nsg::record_to_json(rep, rec, true).dump() << "\n";
    } else {
        std::cout << s.str() << " [" << rep.class_tag << "]\n";
        print_records_table(std::cout, rep);
    }
    std::size_t fails = 0;
    for (const auto& rec : rep.records)
        if (rec.status == nsg::CheckStatus::fails) ++fails;
    if (!as_json)
        std::cout << (fails ? "FAIL (" + std::to_string(fails) + " checks)"
                            : "OK")
                  << "\n";
    return fails ? kExitCheckFailed : kExitOk;
}

int cmd_scan(const nsg::CorpusSpec& spec, const std::set<std::string>& groups,
             const nsg::CheckOptions& opts, const std::string& out_path,
             bool as_csv, bool with_timings, bool serial) {
    const auto corpus = nsg::enumerate_corpus(spec);
    const nsg::ScanResult result = nsg::scan_corpus(corpus, groups, opts, !serial);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot open output file: " + out_path);
        os = &file;
    }
    if (as_csv)
        nsg::write_csv(*os, result);
    else
        nsg::write_jsonl(*os, result, with_timings);
    if (!out_path.empty() && !file)
        throw std::runtime_error("error writing output file: " + out_path);

    std::ostream& log = out_path.empty() ? std::cerr : std::cout;
    log << "scanned " << result.summary.semigroups << " semigroups: "
        << result.summary.holds << " holds, " << result.summary.fails
        << " fails, " << result.summary.skipped << " skipped\n";
    return result.any_failure() ? kExitCheckFailed : kExitOk;
}

int cmd_numerator(const std::vector<std::int64_t>& gens) {
    const nsg::Semigroup s = nsg::Semigroup::build(gens);
    std::cout << nsg::numerator_to_json(nsg::numerator(s)).dump() << "\n";
    return kExitOk;
}

int cmd_genera(const std::vector<std::int64_t>& gens, unsigned n, bool as_json) {
    const nsg::Semigroup s = nsg::Semigroup::build(gens);
    const nsg::GeneraVector g = s.genera(n);
    if (as_json) {
        nsg::json arr = nsg::json::array();
        for (const auto& v : g)
            arr.push_back(v.fits_slong_p() ? nsg::json(v.get_si())
                                           : nsg::json(nsg::to_string(v)));
        nsg::json obj;
        obj["semigroup"] = gens;
        obj["genera"] = arr;
        std::cout << obj.dump() << "\n";
    } else {
        for (unsigned k = 0; k <= n; ++k)
            std::cout << "G_" << k << " = " << nsg::to_string(g[k]) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroup invariants and identity verification"};
    app.require_subcommand(1);
    app.set_config("--config");

    std::vector<std::int64_t> gens;
    std::vector<std::string> checks_raw;
    unsigned p_max = 6;
    std::optional<unsigned> n_max;
    bool as_json = false;

    auto add_check_opts = [&](CLI::App* cmd) {
        cmd->add_option("--checks", checks_raw,
                        "check groups (comma separated; 'all' for everything)");
        cmd->add_option("--p-max", p_max, "highest K index (<= 6)")
            ->check(CLI::Range(0u, 6u));
        cmd->add_option("--n-max", n_max,
                        "absolute cap for the oracle-equivalence degree");
    };

    auto* info = app.add_subcommand("info", "print invariants of one semigroup");
    info->add_option("generators", gens, "generator list")->required();
    info->add_flag("--json", as_json, "emit JSON");

    auto* verify =
        app.add_subcommand("verify", "run identity checks on one semigroup");
    verify->add_option("generators", gens, "generator list")->required();
    verify->add_flag("--json", as_json, "emit JSON-lines records");
    add_check_opts(verify);

    auto* scan = app.add_subcommand("scan", "run checks over a corpus");
    std::vector<std::string> explicit_sets;
    unsigned m_max = 3;
    std::int64_t d_max = 12;
    std::int64_t gmax = -1;
    std::size_t random_count = 0;
    std::uint64_t seed = 0;
    std::string out_path;
    bool as_csv = false, with_timings = false, serial = false;
    scan->add_option("--mmax", m_max, "max embedding dimension (exhaustive mode)");
    scan->add_option("--dmax", d_max, "max generator value (exhaustive/random)");
    scan->add_option("--gmax", gmax, "max genus filter (optional)");
    scan->add_option("--random", random_count, "draw N random semigroups");
    scan->add_option("--seed", seed, "random mode seed");
    scan->add_option("--set", explicit_sets,
                     "explicit generator set 'd1,d2,...' (repeatable)");
    scan->add_option("--out", out_path, "output path (default stdout)");
    scan->add_flag("--csv", as_csv, "emit CSV instead of JSON lines");
    scan->add_flag("--json", as_json, "emit JSON lines (default)");
    scan->add_flag("--timings", with_timings,
                   "attach per-record timings (breaks byte-for-byte determinism)");
    scan->add_flag("--serial", serial, "use the serial reference scanner");
    add_check_opts(scan);

    auto* numer = app.add_subcommand("numerator", "print Q(S;z) as JSON");
    numer->add_option("generators", gens, "generator list")->required();

    auto* genera = app.add_subcommand("genera", "print gap power sums G_0..G_n");
    genera->add_option("generators", gens, "generator list")->required();
    unsigned genera_n = 6;
    genera->add_option("--n", genera_n, "highest exponent");
    genera->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return (e.get_exit_code() == 0) ? kExitOk : (app.exit(e), kExitUsage);
    }

    try {
        nsg::CheckOptions opts;
        opts.p_max = p_max;
        opts.n_max = n_max;
        const std::set<std::string> groups = parse_checks(checks_raw);

        if (info->parsed()) return cmd_info(gens, as_json);
        if (verify->parsed()) return cmd_verify(gens, groups, opts, as_json);
        if (numer->parsed()) return cmd_numerator(gens);
        if (genera->parsed()) return cmd_genera(gens, genera_n, as_json);
        if (scan->parsed()) {
            nsg::CorpusSpec spec;
            if (!explicit_sets.empty()) {
                spec.mode = nsg::CorpusSpec::Mode::explicit_list;
                for (const auto& raw : explicit_sets) {
                    std::vector<std::int64_t> set;
                    std::stringstream ss(raw);
                    std::string tok;
                    while (std::getline(ss, tok, ','))
                        if (!tok.empty()) set.push_back(std::stoll(tok));
                    spec.explicit_sets.push_back(std::move(set));
                }
            } else if (random_count > 0) {
                spec.mode = nsg::CorpusSpec::Mode::random;
                spec.sample_count = random_count;
                spec.seed = seed;
            } else {
                spec.mode = nsg::CorpusSpec::Mode::exhaustive;
            }
            spec.m_max = m_max;
            spec.d_max = d_max;
            if (gmax >= 0) spec.max_genus = nsg::Int(static_cast<long>(gmax));
            return cmd_scan(spec, groups, opts, out_path, as_csv, with_timings,
                            serial);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
