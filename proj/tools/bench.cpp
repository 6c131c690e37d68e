// Benchmark: the OpenMP-sharded counter against the serial kernel and the
// unpruned oracle, verifying along the way that all three agree.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "cycav/enumerate.hpp"
#include "cycav/perm.hpp"

namespace {

double seconds_of(const std::function<std::uint64_t()>& body, std::uint64_t& result) {
    const auto start = std::chrono::steady_clock::now();
    result = body();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pruned-counter benchmark: parallel vs serial vs unpruned oracle"};
    int max_n = cycav::kEnumerationCap;
    int naive_max = cycav::kOracleCap;
    std::vector<std::string> spec_texts = {"3421,4321;213", "4312,4321;213", "3412,4321;213",
                                           "1324,1423;213", "4321;213",      ";213"};
    app.add_option("--max-n", max_n, "Largest size for the pruned kernels");
    app.add_option("--naive-max", naive_max, "Largest size for the unpruned oracle");
    app.add_option("--spec", spec_texts, "Specs to benchmark (repeatable)");
    CLI11_PARSE(app, argc, argv);

    max_n = std::min(max_n, cycav::kEnumerationCap);
    naive_max = std::min({naive_max, max_n, cycav::kOracleCap});

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << std::setw(16) << "spec" << std::setw(4) << "n" << std::setw(10) << "count"
              << std::setw(12) << "serial[s]" << std::setw(12) << "parallel[s]" << std::setw(9)
              << "speedup" << std::setw(12) << "naive[s]" << "\n";

    bool all_equal = true;
    for (const std::string& text : spec_texts) {
        const cycav::AvoidanceSpec spec = cycav::parse_avoidance_spec(text);
        for (int n = 8; n <= max_n; ++n) {
            std::uint64_t serial_count = 0;
            std::uint64_t parallel_count = 0;
            const double t_serial =
                seconds_of([&] { return cycav::count_class_serial(n, spec); }, serial_count);
            const double t_parallel =
                seconds_of([&] { return cycav::count_class(n, spec); }, parallel_count);

            std::cout << std::setw(16) << text << std::setw(4) << n << std::setw(10)
                      << parallel_count << std::setw(12) << std::fixed << std::setprecision(4)
                      << t_serial << std::setw(12) << t_parallel << std::setw(9)
                      << std::setprecision(2) << (t_parallel > 0 ? t_serial / t_parallel : 0.0);

            if (serial_count != parallel_count) all_equal = false;
            if (n <= naive_max) {
                std::uint64_t naive_count = 0;
                const double t_naive =
                    seconds_of([&] { return cycav::naive_count_oracle(n, spec); }, naive_count);
                std::cout << std::setw(12) << std::setprecision(4) << t_naive;
                if (naive_count != parallel_count) all_equal = false;
            } else {
                std::cout << std::setw(12) << "-";
            }
            std::cout << "\n";
        }
    }

    if (!all_equal) {
        std::cerr << "kernel disagreement detected\n";
        return 1;
    }
    return 0;
}
