#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "clutterkit/constructions.hpp"
#include "clutterkit/hardness.hpp"

namespace ck = clutterkit;

namespace {

double run_ms(ck::HardnessReport (*fn)(const ck::Clutter&), const ck::Clutter& c, int repeat,
              ck::HardnessReport& last) {
    double best = 1e300;
    for (int r = 0; r < repeat; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        last = fn(c);
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

bool same_report(const ck::HardnessReport& a, const ck::HardnessReport& b) {
    if (a.overall != b.overall || a.argmax_edge != b.argmax_edge ||
        a.per_edge.size() != b.per_edge.size())
        return false;
    for (std::size_t i = 0; i < a.per_edge.size(); ++i)
        if (a.per_edge[i].c != b.per_edge[i].c || !(a.per_edge[i].witness == b.per_edge[i].witness))
            return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    int n = 48, m = 500, repeat = 3;
    std::uint64_t seed = 1;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        long long v = std::stoll(argv[i + 1]);
        if (flag == "--n") n = int(v);
        else if (flag == "--m") m = int(v);
        else if (flag == "--repeat") repeat = int(v);
        else if (flag == "--seed") seed = std::uint64_t(v);
        else {
            std::cerr << "unknown flag " << flag << "\n";
            return 2;
        }
    }

    ck::Clutter c = ck::random_clutter(n, m, {n / 4 + 1, n / 2 + 1}, seed);
    std::cout << "instance: n=" << c.vertex_count() << " m=" << c.edge_count()
              << " (requested m=" << m << ", seed=" << seed << ")\n";

    ck::HardnessReport serial_rep, parallel_rep;
    double t_serial = run_ms(ck::clutter_hardness_serial, c, repeat, serial_rep);
    double t_parallel = run_ms(ck::clutter_hardness, c, repeat, parallel_rep);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::cout << "serial:   " << t_serial << " ms\n";
    std::cout << "parallel: " << t_parallel << " ms (" << threads << " thread"
              << (threads == 1 ? "" : "s") << ")\n";
    std::cout << "speedup:  " << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n";
    std::cout << "overall:  " << serial_rep.overall.str() << " at edge " << serial_rep.argmax_edge
              << "\n";

    if (!same_report(serial_rep, parallel_rep)) {
        std::cerr << "MISMATCH: parallel report differs from serial reference\n";
        return 1;
    }
    std::cout << "reports identical: yes\n";
    return 0;
}
