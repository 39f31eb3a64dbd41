// Times the oracle's serial reference kernels against the OpenMP versions
// and reports the speedup. The two paths must agree element-for-element;
// the unit tests enforce that, this tool only measures.
//
//   bench_oracle [--n N] [--group sn|an] [--iters K]

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>

#include "zclass/oracle.hpp"

using namespace zclass;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename Fn>
double time_best(int iters, Fn&& fn) {
    double best = 1e300;
    for (int i = 0; i < iters; ++i) {
        const auto start = Clock::now();
        fn();
        best = std::min(best, ms_since(start));
    }
    return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n", name.c_str(),
                serial_ms, parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    int n = 8;
    GroupKind kind = GroupKind::Alt;
    int iters = 3;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--n") && i + 1 < argc) n = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--group") && i + 1 < argc)
            kind = std::string(argv[++i]) == "sn" ? GroupKind::Sym : GroupKind::Alt;
        else if (!std::strcmp(argv[i], "--iters") && i + 1 < argc) iters = std::atoi(argv[++i]);
        else {
            std::cerr << "usage: bench_oracle [--n N] [--group sn|an] [--iters K]\n";
            return 2;
        }
    }

    std::cout << "building " << (kind == GroupKind::Sym ? "S_" : "A_") << n << " ... ";
    const auto g = oracle::build_group(n, kind);
    std::cout << g.size() << " elements, " << oracle::effective_threads() << " worker(s)\n";

    const auto cls = oracle::conjugacy_classes(g);

    report("centralizer sweep",
           time_best(iters,
                     [&] {
                         for (const auto& c : cls.classes)
                             oracle::centralizer(g, c.ids.front(), oracle::Exec::Serial);
                     }),
           time_best(iters, [&] {
               for (const auto& c : cls.classes)
                   oracle::centralizer(g, c.ids.front(), oracle::Exec::Parallel);
           }));

    report("conjugacy classes (orbits)",
           time_best(iters,
                     [&] {
                         oracle::conjugacy_classes(g, oracle::ClassAlgorithm::OrbitExpansion,
                                                   oracle::Exec::Serial);
                     }),
           time_best(iters, [&] {
               oracle::conjugacy_classes(g, oracle::ClassAlgorithm::OrbitExpansion,
                                         oracle::Exec::Parallel);
           }));

    const auto rational_pred = [&](std::int32_t x) {
        return oracle::is_rational_element(g, cls, x);
    };
    report("rationality sweep",
           time_best(iters,
                     [&] {
                         oracle::kernels::collect_ids(g.size(), oracle::Exec::Serial,
                                                      rational_pred);
                     }),
           time_best(iters, [&] {
               oracle::kernels::collect_ids(g.size(), oracle::Exec::Parallel, rational_pred);
           }));

    report("z-classes end to end",
           time_best(iters, [&] { oracle::zclasses(g, oracle::Exec::Serial); }),
           time_best(iters, [&] { oracle::zclasses(g, oracle::Exec::Parallel); }));

    return 0;
}
