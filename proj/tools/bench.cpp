// Micro-benchmark comparing the OpenMP kernels against their serial
// reference implementations on identical inputs. Results must match exactly;
// a mismatch makes the run fail.

#include <multizero/bounds.hpp>
#include <multizero/ffpoly.hpp>
#include <multizero/oracle.hpp>
#include <multizero/threads.hpp>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>

namespace {

using Int = long;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool g_all_ok = true;

void report(const char* name, double serial_ms, double parallel_ms, bool ok) {
    std::printf("%-24s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms, ok ? "ok" : "MISMATCH");
    if (!ok) g_all_ok = false;
}

void bench_grid_count(bool quick, std::mt19937_64& rng) {
    const Int p = quick ? 23 : 41;
    const Int side = quick ? 20 : 40;
    const Int exponent = quick ? 8 : 16;
    const multizero::ffpoly::PrimeField field(p);
    const std::vector<Int> sizes{side, side};
    const auto spec = multizero::ffpoly::random_factor_spec({exponent, exponent}, sizes, rng);
    const auto F = multizero::ffpoly::build_product(spec, field);
    const auto grid = multizero::ffpoly::prefix_grid(field, sizes);

    auto t0 = Clock::now();
    const Int serial = multizero::ffpoly::grid_count_mult_at_least_serial(F, grid, 2);
    const double serial_ms = ms_since(t0);

    t0 = Clock::now();
    const Int parallel = multizero::ffpoly::grid_count_mult_at_least(F, grid, 2);
    const double parallel_ms = ms_since(t0);

    report("grid-count-mult", serial_ms, parallel_ms, serial == parallel);
}

void bench_search(bool quick) {
    const Int i = quick ? 14 : 26;
    const Int s = quick ? 5 : 8;
    auto t0 = Clock::now();
    const auto serial = multizero::oracle::lower_bound_search_serial({i, i}, 3, {s, s});
    const double serial_ms = ms_since(t0);

    t0 = Clock::now();
    const auto parallel = multizero::oracle::lower_bound_search({i, i}, 3, {s, s});
    const double parallel_ms = ms_since(t0);

    report("lower-bound-search", serial_ms, parallel_ms,
           serial.count == parallel.count &&
               serial.witness.profiles == parallel.witness.profiles);
}

void bench_gap_table(bool quick) {
    const Int s = quick ? 5 : 6;
    const Int hi = 3 * s - 1;

    auto t0 = Clock::now();
    std::vector<std::vector<Int>> serial(static_cast<std::size_t>(hi + 1));
    for (Int i2 = 0; i2 <= hi; ++i2)
        for (Int i1 = 0; i1 <= hi; ++i1)
            serial[static_cast<std::size_t>(i2)].push_back(
                multizero::oracle::gap_value({i1, i2}, 3, {s, s}));
    const double serial_ms = ms_since(t0);

    t0 = Clock::now();
    const auto parallel = multizero::oracle::gap_table(3, {s, s}, 0, hi, 0, hi);
    const double parallel_ms = ms_since(t0);

    report("gap-table", serial_ms, parallel_ms, serial == parallel);
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

    std::printf("threads: %d%s\n", multizero::max_threads(), quick ? " (quick mode)" : "");
    std::mt19937_64 rng(multizero::ffpoly::kDefaultSeed);
    bench_grid_count(quick, rng);
    bench_search(quick);
    bench_gap_table(quick);
    return g_all_ok ? 0 : 1;
}
