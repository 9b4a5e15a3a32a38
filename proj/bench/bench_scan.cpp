// Compares the serial reference scanner against the OpenMP work pool on an
// exhaustive corpus and verifies that both produce identical reports.
//
//   nsg_bench [d_max] [m_max]      (defaults: 16 4)

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nsg/corpus.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

bool same_reports(const nsg::ScanResult& a, const nsg::ScanResult& b) {
    if (a.reports.size() != b.reports.size()) return false;
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
        const auto& ra = a.reports[i];
        const auto& rb = b.reports[i];
        if (ra.generators != rb.generators || ra.records.size() != rb.records.size())
            return false;
        for (std::size_t j = 0; j < ra.records.size(); ++j) {
            const auto& x = ra.records[j];
            const auto& y = rb.records[j];
            if (x.check != y.check || x.status != y.status || x.lhs != y.lhs ||
                x.rhs != y.rhs)
                return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    nsg::CorpusSpec spec;
    spec.mode = nsg::CorpusSpec::Mode::exhaustive;
    spec.d_max = argc > 1 ? std::atoll(argv[1]) : 16;
    spec.m_max = argc > 2 ? static_cast<unsigned>(std::atoi(argv[2])) : 4;

    const auto corpus = nsg::enumerate_corpus(spec);
    std::set<std::string> groups;
    for (const auto& g : nsg::check_groups()) groups.insert(g);
    nsg::CheckOptions opts;

    std::cout << "corpus: " << corpus.size() << " semigroups (d <= " << spec.d_max
              << ", m <= " << spec.m_max << "), all check groups\n";

    auto t0 = std::chrono::steady_clock::now();
    const nsg::ScanResult serial = nsg::scan_corpus(corpus, groups, opts, false);
    const double t_serial = seconds_since(t0);
    std::cout << "serial reference:  " << t_serial << " s  (" << serial.summary.holds
              << " holds, " << serial.summary.fails << " fails)\n";

#ifdef _OPENMP
    t0 = std::chrono::steady_clock::now();
    const nsg::ScanResult parallel = nsg::scan_corpus(corpus, groups, opts, true);
    const double t_parallel = seconds_since(t0);
    std::cout << "openmp (" << omp_get_max_threads() << " threads):  " << t_parallel
              << " s  (" << parallel.summary.holds << " holds, "
              << parallel.summary.fails << " fails)\n";
    std::cout << "speedup: " << (t_parallel > 0 ? t_serial / t_parallel : 0.0)
              << "x\n";
    if (!same_reports(serial, parallel)) {
        std::cout << "MISMATCH between serial and parallel reports\n";
        return 1;
    }
    std::cout << "serial and parallel reports identical\n";
#else
    std::cout << "built without OpenMP; parallel comparison skipped\n";
#endif
    return serial.summary.fails == 0 ? 0 : 1;
}
