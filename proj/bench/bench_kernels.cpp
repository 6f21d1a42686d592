// Wall-clock comparison of the OpenMP grid kernels against their serial
// reference implementations. Not a test; numbers vary with the machine.

#ifdef _OPENMP
#include <omp.h>
#endif

#include "partlog/analysis.hpp"

#include <chrono>
#include <cstdio>

using namespace partlog;

namespace {

template <typename F>
double time_seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-38s serial %8.3f s   parallel %8.3f s   speedup %5.2fx\n", name, serial,
                parallel, serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled: parallel kernels run serially\n");
#endif

    const ExactSequence p = generate(PartitionFamily::parse("p"), 1200);
    const ExactSequence p2 = generate(PartitionFamily::parse("power2"), 6001);

    std::size_t sink = 0;

    const double classify_serial = time_seconds([&] {
        sink += classify_pairs_serial(p, {1, 600}, {1, 600}, Direction::Concave).count(Verdict::Failure);
    });
    const double classify_parallel = time_seconds([&] {
        sink += classify_pairs(p, {1, 600}, {1, 600}, Direction::Concave).count(Verdict::Failure);
    });
    report("classify_pairs p(n), [1,600]^2", classify_serial, classify_parallel);

    const double scan_serial = time_seconds([&] {
        sink += scan_log_behavior_serial(p2, Direction::Concave, 6000).violations.size();
    });
    const double scan_parallel = time_seconds([&] {
        sink += scan_log_behavior(p2, Direction::Concave, 6000).violations.size();
    });
    report("scan_log_behavior p^2(n), 6000", scan_serial, scan_parallel);

    const double mary_parallel = time_seconds([&] {
        sink += verify_mary_table(3, 400).pass ? 1 : 0;
    });
    std::printf("%-38s parallel %8.3f s\n", "verify_mary_table m=3, beta<=400", mary_parallel);

    return sink == static_cast<std::size_t>(-1) ? 1 : 0;
}
