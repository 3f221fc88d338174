#include "ehrhart_lab/constructions.hpp"
#include "ehrhart_lab/ehrhart.hpp"
#include "ehrhart_lab/scan.hpp"
#include "ehrhart_lab/threads.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

using namespace ehrhart_lab;

namespace {

template <typename F>
double best_of_three_ms(F&& f) {
    double best = 0.0;
    for (int i = 0; i < 3; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (i == 0 || ms < best) best = ms;
    }
    return best;
}

} // namespace

int main() {
    std::printf("threads available: %d\n\n", thread_cap());

    std::vector<std::pair<std::string, RationalPolygon>> cases;
    cases.emplace_back("heptagon s=6 (D=6)", heptagon_H(6).H);
    cases.emplace_back("triangle r=12 (D=12)", triangle_Q(12, {rat(0), rat(0)}));
    cases.emplace_back("period (5,6) (D=30)", period_polygon(5, 6).polygon);
    cases.emplace_back("period (6,5) (D=30)", period_polygon(6, 5).polygon);

    std::printf("%-24s %12s %12s\n", "quasi-polynomial fit", "serial ms", "parallel ms");
    for (const auto& [name, poly] : cases) {
        QuasiPolynomial serial_qp, parallel_qp;
        const double serial = best_of_three_ms([&] { serial_qp = ehrhart_qp_serial(poly); });
        const double parallel = best_of_three_ms([&] { parallel_qp = ehrhart_qp(poly); });
        std::printf("%-24s %12.2f %12.2f%s\n", name.c_str(), serial, parallel,
                    serial_qp == parallel_qp ? "" : "  MISMATCH");
    }

    PipScanOptions opt;
    opt.max_denominator = 3;
    opt.coordinate_bound = 2;
    std::printf("\n%-24s %12s %12s\n", "pip scan d<=3, box 2", "serial ms", "parallel ms");
    std::size_t rows_serial = 0, rows_parallel = 0;
    setenv("EHRHART_LAB_THREADS", "1", 1);
    const double serial = best_of_three_ms([&] { rows_serial = pip_scan(opt).size(); });
    unsetenv("EHRHART_LAB_THREADS");
    const double parallel = best_of_three_ms([&] { rows_parallel = pip_scan(opt).size(); });
    std::printf("%-24s %12.2f %12.2f%s\n", "", serial, parallel,
                rows_serial == rows_parallel ? "" : "  MISMATCH");
    std::printf("rows found: %zu\n", rows_serial);
    return 0;
}
