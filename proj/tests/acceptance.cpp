// Acceptance suite: replicates the reference tables cell-for-cell and runs
// the cross-verification sweeps at their stated sizes. One PASS/FAIL line is
// printed per criterion; the process exits nonzero if any criterion fails.

#include <multizero/bounds.hpp>
#include <multizero/ffpoly.hpp>
#include <multizero/oracle.hpp>
#include <multizero/table.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace multizero;
using Int = long;
using Clock = std::chrono::steady_clock;

bounds::BoundParams bp(std::vector<Int> i, Int r, std::vector<Int> s) {
    return bounds::BoundParams(std::move(i), r, std::move(s));
}

// --- frozen reference tables (r = 3, s1 = s2 = 5; rows indexed by i2) ------
// rows 5..9 are printed through column i1 = 9, rows 10..14 through i1 = 4

const std::vector<std::vector<Int>> kTableD = {
    {0, 0, 0, 5, 5, 5, 10, 10, 10, 15, 15, 15, 20, 20, 20},
    {0, 0, 1, 5, 6, 6, 11, 11, 12, 16, 17, 17, 21, 21, 21},
    {0, 1, 2, 7, 8, 9, 13, 13, 14, 17, 19, 19, 22, 22, 22},
    {5, 5, 5, 9, 9, 10, 14, 14, 16, 18, 21, 21, 23, 23, 23},
    {5, 5, 6, 9, 11, 13, 16, 16, 18, 19, 23, 23, 24, 24, 24},
    {5, 6, 7, 11, 12, 14, 17, 17, 20, 20},
    {10, 10, 10, 13, 14, 17, 19, 19, 21, 21},
    {10, 10, 11, 13, 15, 18, 20, 20, 22, 22},
    {10, 11, 12, 15, 17, 21, 22, 22, 23, 23},
    {15, 15, 15, 17, 18, 22, 23, 23, 24, 24},
    {15, 15, 16, 17, 20},
    {15, 16, 17, 19, 21},
    {20, 20, 20, 21, 22},
    {20, 20, 21, 21, 23},
    {20, 21, 22, 23, 24},
};

const std::vector<Int> kTableSz = {0,  1,  3,  5,  6,  8,  10, 11, 13, 15,
                                   16, 18, 20, 21, 23, 25, 25, 25, 25};

const std::vector<std::vector<Int>> kTableGap = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 2, 1, 1, 1, 0},
    {0, 0, 0, 2, 2, 2, 3, 2, 2, 2, 3, 2, 2, 1, 0},
    {0, 0, 0, 0, 0, 1, 1, 1, 3, 1, 4, 3, 2, 2, 0},
    {0, 0, 0, 0, 2, 3, 3, 3, 2, 2, 3, 2, 2, 1, 0},
    {0, 0, 0, 2, 2, 3, 2, 2, 0, 0},
    {0, 0, 0, 0, 1, 2, 3, 2, 1, 0},
    {0, 0, 0, 0, 2, 3, 3, 3, 1, 0},
    {0, 0, 0, 2, 1, 1, 2, 1, 2, 0},
    {0, 0, 0, 0, 1, 2, 2, 1, 1, 0},
    {0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0},
};

const std::vector<std::vector<Int>> kTableClosed = {
    {0, 1, 3, 5, 6, 8, 10, 11, 13, 15, 16, 18, 20, 21, 23},
    {1, 3, 4, 6, 7, 9, 11, 12, 14, 15, 17, 18, 20, 21, 23},
    {3, 4, 6, 7, 9, 10, 12, 13, 14, 16, 17, 19, 20, 22, 23},
    {5, 6, 7, 9, 10, 11, 13, 14, 15, 17, 18, 19, 21, 22, 23},
    {6, 7, 9, 10, 11, 12, 14, 15, 16, 17, 18, 20, 21, 22, 23},
    {8, 9, 10, 11, 12, 13, 15, 16, 17, 18},
    {10, 11, 12, 13, 14, 15, 16, 17, 18, 19},
    {11, 12, 13, 14, 15, 16, 17, 17, 18, 19},
    {13, 14, 14, 15, 16, 17, 18, 18, 19, 20},
    {15, 15, 16, 17, 17, 18, 19, 19, 20, 21},
    {16, 17, 17, 18, 18},
    {18, 18, 19, 19, 20},
    {20, 20, 20, 21, 21},
    {21, 21, 22, 22, 22},
    {23, 23, 23, 23, 23},
};

// 0 = plain, 1 = single underline (below D), 2 = double underline (below the
// constructive lower bound)
const std::vector<std::vector<Int>> kTableClosedMarks = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1, 0},
    {0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2},
    {0, 0, 0, 0, 0, 1, 1, 1, 2, 2},
    {0, 0, 0, 0, 0, 1, 1, 1, 2, 2},
    {0, 0, 0, 0, 0, 1, 1, 1, 2, 2},
    {0, 0, 0, 0, 1, 2, 2, 2, 2, 2},
    {0, 0, 0, 0, 1, 2, 2, 2, 2, 2},
    {0, 0, 0, 0, 2},
    {0, 0, 0, 0, 2},
    {0, 0, 0, 0, 2},
    {0, 0, 0, 0, 2},
    {0, 0, 0, 0, 2},
};

struct Outcome {
    bool pass = true;
    long checked = 0;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

const std::vector<Int> kSizes55{5, 5};

Outcome criterion_table_d() {
    Outcome out;
    const auto t0 = Clock::now();
    for (std::size_t i2 = 0; i2 < kTableD.size(); ++i2) {
        for (std::size_t i1 = 0; i1 < kTableD[i2].size(); ++i1) {
            ++out.checked;
            const Integer d =
                bounds::d_recursive(bp({static_cast<Int>(i1), static_cast<Int>(i2)}, 3, kSizes55));
            if (d != kTableD[i2][i1])
                out.fail("D(" + std::to_string(i1) + "," + std::to_string(i2) + ") = " +
                         d.get_str() + ", table says " + std::to_string(kTableD[i2][i1]));
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs >= 10.0) out.fail("exceeded the 10 s budget");
    return out;
}

Outcome criterion_table_sz() {
    Outcome out;
    for (Int sum = 0; sum <= 18; ++sum) {
        for (Int i1 = 0; i1 <= sum; ++i1) {
            const Int i2 = sum - i1;
            ++out.checked;
            const Integer got = bounds::sz_mult_bound(bp({i1, i2}, 3, kSizes55)).floor();
            if (got != kTableSz[static_cast<std::size_t>(sum)])
                out.fail("sz(" + std::to_string(i1) + "," + std::to_string(i2) + ") floor = " +
                         got.get_str());
        }
    }
    return out;
}

Outcome criterion_table_closed() {
    Outcome out;
    for (std::size_t i2 = 0; i2 < kTableClosed.size(); ++i2) {
        for (std::size_t i1 = 0; i1 < kTableClosed[i2].size(); ++i1) {
            ++out.checked;
            const auto params = bp({static_cast<Int>(i1), static_cast<Int>(i2)}, 3, kSizes55);
            const Integer value = bounds::closed_form_bound_unchecked(params).floor();
            const std::string at = "(" + std::to_string(i1) + "," + std::to_string(i2) + ")";
            if (value != kTableClosed[i2][i1]) {
                out.fail("closed-floor" + at + " = " + value.get_str());
                continue;
            }
            const Integer d = bounds::d_recursive(params);
            const Int lower =
                oracle::lower_bound_search_serial({static_cast<Int>(i1), static_cast<Int>(i2)},
                                                  3, kSizes55)
                    .count;
            Int mark = 0;
            if (value < lower)
                mark = 2;
            else if (value < d)
                mark = 1;
            if (mark != kTableClosedMarks[i2][i1])
                out.fail("annotation" + at + " = " + std::to_string(mark) + ", table says " +
                         std::to_string(kTableClosedMarks[i2][i1]));
        }
    }
    return out;
}

Outcome criterion_table_gap() {
    Outcome out;
    const auto gaps = oracle::gap_table(3, kSizes55, 0, 14, 0, 14);
    for (std::size_t i2 = 0; i2 < kTableGap.size(); ++i2) {
        for (std::size_t i1 = 0; i1 < kTableGap[i2].size(); ++i1) {
            ++out.checked;
            if (gaps[i2][i1] != kTableGap[i2][i1])
                out.fail("gap(" + std::to_string(i1) + "," + std::to_string(i2) + ") = " +
                         std::to_string(gaps[i2][i1]) + ", table says " +
                         std::to_string(kTableGap[i2][i1]));
        }
    }
    return out;
}

Outcome criterion_spot_values() {
    Outcome out;
    const std::vector<std::tuple<Int, Int, Int>> spots = {{3, 11, 19}, {2, 12, 20}, {8, 5, 20}};
    for (const auto& [i1, i2, want] : spots) {
        ++out.checked;
        if (bounds::d_recursive(bp({i1, i2}, 3, kSizes55)) != want)
            out.fail("D(" + std::to_string(i1) + "," + std::to_string(i2) + ") != " +
                     std::to_string(want));
    }
    return out;
}

Outcome criterion_recursive_bound_sweep(std::mt19937_64& rng) {
    Outcome out;
    const auto t0 = Clock::now();
    for (Int r = 2; r <= 4; ++r) {
        for (Int i1 = 0; i1 <= r * 5; ++i1) {
            for (Int i2 = 0; i2 <= r * 5; ++i2) {
                ++out.checked;
                const auto params = bp({i1, i2}, r, kSizes55);
                const Integer d = bounds::d_recursive(params);
                if (d > bounds::sz_mult_bound(params).floor() || d > 25)
                    out.fail("bound violated at i=(" + std::to_string(i1) + "," +
                             std::to_string(i2) + ") r=" + std::to_string(r));
            }
        }
    }
    const ffpoly::PrimeField f7(7);
    const auto grid = ffpoly::prefix_grid(f7, kSizes55);
    for (int n = 0; n < 200; ++n) {
        const Int r = 2 + n % 3;
        std::vector<Int> exps(2);
        for (auto& e : exps) e = std::uniform_int_distribution<Int>(0, r * 5)(rng);
        const auto spec = ffpoly::random_factor_spec(exps, kSizes55, rng);
        const auto F = ffpoly::build_product(spec, f7);
        ++out.checked;
        const Int count = ffpoly::grid_count_mult_at_least(F, grid, r);
        if (Integer(count) > bounds::d_recursive(bp(F.leading_exponent(), r, kSizes55)))
            out.fail("count above D for random product, r=" + std::to_string(r));
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs >= 60.0) out.fail("exceeded the 60 s budget");
    return out;
}

Outcome criterion_sharpness(std::mt19937_64& rng) {
    Outcome out;
    const ffpoly::PrimeField f7(7);
    for (int n = 0; n < 100; ++n) {
        const int m = (n % 2 == 0) ? 2 : 3;
        const std::vector<Int> sizes(static_cast<std::size_t>(m), 5);
        std::vector<Int> exps(static_cast<std::size_t>(m));
        for (auto& e : exps) e = std::uniform_int_distribution<Int>(0, m == 2 ? 10 : 6)(rng);
        const auto spec = ffpoly::random_factor_spec(exps, sizes, rng);
        const auto F = ffpoly::build_product(spec, f7);
        ++out.checked;
        const Integer sum = ffpoly::grid_multiplicity_sum(F, ffpoly::prefix_grid(f7, sizes));
        if (sum != bounds::sz_sum_bound(bp(spec.leading_exponent(), 1, sizes)))
            out.fail("sum mismatch at spec " + std::to_string(n));
    }
    return out;
}

Outcome criterion_product_multiplicity(std::mt19937_64& rng) {
    Outcome out;
    const ffpoly::PrimeField f7(7);
    for (int n = 0; n < 50; ++n) {
        const int m = (n % 2 == 0) ? 2 : 3;
        const std::vector<Int> sizes(static_cast<std::size_t>(m), 5);
        std::vector<Int> exps(static_cast<std::size_t>(m));
        for (auto& e : exps) e = std::uniform_int_distribution<Int>(0, m == 2 ? 8 : 5)(rng);
        const auto spec = ffpoly::random_factor_spec(exps, sizes, rng);
        const auto F = ffpoly::build_product(spec, f7);
        ++out.checked;
        std::vector<Int> pt(static_cast<std::size_t>(m), 0);
        bool ok = true;
        for (;;) {
            if (ffpoly::multiplicity(F, pt) != ffpoly::product_multiplicity(spec, pt)) {
                ok = false;
                break;
            }
            std::size_t t = 0;
            while (t < pt.size() && pt[t] == 4) pt[t++] = 0;
            if (t == pt.size()) break;
            ++pt[t];
        }
        if (!ok) out.fail("mismatch at spec " + std::to_string(n));
    }
    return out;
}

Outcome criterion_condition_a_suite() {
    Outcome out;
    // (a) the two-variable region boundary
    ++out.checked;
    if (!bounds::condition_a(bp({3, 14}, 3, kSizes55)).satisfied)
        out.fail("condition A rejects (3,14)");
    for (Int i2 = 0; i2 <= 20; ++i2) {
        ++out.checked;
        if (bounds::condition_a(bp({4, i2}, 3, kSizes55)).satisfied)
            out.fail("condition A accepts (4," + std::to_string(i2) + ")");
    }

    // (b) sufficiency and necessity sweeps
    for (std::size_t m : {3u, 4u}) {
        std::vector<Int> combo(m, 4);
        for (;;) {
            for (Int r = 2; r <= 3; ++r) {
                std::vector<Int> i(m, 0);
                for (;;) {
                    ++out.checked;
                    const auto params = bp(i, r, combo);
                    const bool full = bounds::condition_a(params).satisfied;
                    if (bounds::condition_a_sufficient(params) && !full)
                        out.fail("sufficient without condition A");
                    if (full && !bounds::necessary_bound_check(params))
                        out.fail("condition A without necessary bound");
                    std::size_t t = 0;
                    while (t < m && i[t] == (t + 1 < m ? combo[t] : r * combo[t] + 1))
                        i[t++] = 0;
                    if (t == m) break;
                    ++i[t];
                }
            }
            std::size_t t = 0;
            while (t < m && combo[t] == 5) combo[t++] = 4;
            if (t == m) break;
            ++combo[t];
        }
    }

    // (c) the r = 2 equal-size reduction
    for (std::size_t m : {3u, 4u}) {
        const std::vector<Int> s(m, 5);
        std::vector<Int> i(m, 0);
        for (;;) {
            ++out.checked;
            if (bounds::condition_a_r2_equal_sizes(i, 5) !=
                bounds::condition_a(bp(i, 2, s)).satisfied)
                out.fail("r=2 reduction disagrees");
            std::size_t t = 0;
            while (t < m && i[t] == 10) i[t++] = 0;
            if (t == m) break;
            ++i[t];
        }
    }
    return out;
}

Outcome criterion_closed_form_theorem() {
    Outcome out;
    for (std::size_t m : {3u, 4u}) {
        std::vector<Int> combo(m, 4);
        for (;;) {
            for (Int r = 2; r <= 3; ++r) {
                std::vector<Int> i(m, 0);
                for (;;) {
                    const auto params = bp(i, r, combo);
                    if (bounds::condition_a(params).satisfied) {
                        ++out.checked;
                        const Rational cf = bounds::closed_form_bound(params);
                        if (Rational(bounds::d_recursive(params)) > cf ||
                            cf > bounds::sz_mult_bound(params) ||
                            cf > Rational(bounds::grid_size(params)))
                            out.fail("domination fails under condition A");
                    }
                    std::size_t t = 0;
                    while (t < m && i[t] == (t + 1 < m ? combo[t] : r * combo[t])) i[t++] = 0;
                    if (t == m) break;
                    ++i[t];
                }
            }
            std::size_t t = 0;
            while (t < m && combo[t] == 5) combo[t++] = 4;
            if (t == m) break;
            ++combo[t];
        }
    }

    // the documented failure outside the region: floor value below D at (9,1)
    ++out.checked;
    const auto outside = bp({9, 1}, 3, kSizes55);
    const Integer floored = bounds::closed_form_bound_unchecked(outside).floor();
    if (!(floored == 15 && bounds::d_recursive(outside) == 16 && floored < 16))
        out.fail("expected the (9,1) violation witness");
    return out;
}

Outcome criterion_two_var() {
    Outcome out;
    for (Int i1 = 0; i1 < 15; ++i1) {
        for (Int i2 = 0; i2 < 15; ++i2) {
            const auto params = bp({i1, i2}, 3, kSizes55);
            const Rational d(bounds::d_recursive(params));
            try {
                const auto tv = bounds::two_var_bound(i1, i2, 3, 5, 5);
                ++out.checked;
                if (tv.which == bounds::TwoVarCase::c4) {
                    if (tv.value != d) out.fail("C.4 not exact");
                } else if (tv.value < d) {
                    out.fail("closed formula below D");
                }
            } catch (const std::domain_error&) {
                // tuple in no closed-form region
            }
        }
    }
    return out;
}

Outcome criterion_multiplicity_engines(std::mt19937_64& rng) {
    Outcome out;
    std::uniform_int_distribution<int> mdist(1, 3);
    for (int n = 0; n < 500; ++n) {
        const ffpoly::PrimeField field(n % 2 == 0 ? 5 : 7);
        const int m = mdist(rng);
        const auto F = ffpoly::random_sparse_polynomial(field, m, 6, 20, rng);
        std::vector<Int> a(static_cast<std::size_t>(m));
        for (auto& v : a) v = std::uniform_int_distribution<Int>(0, field.modulus() - 1)(rng);
        ++out.checked;
        if (ffpoly::multiplicity(F, a) != ffpoly::multiplicity_by_derivatives(F, a))
            out.fail("route mismatch at instance " + std::to_string(n));
    }
    return out;
}

}  // namespace

int main() {
    std::mt19937_64 rng(ffpoly::kDefaultSeed);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"table-1-recursive-bound", [] { return criterion_table_d(); }},
        {"table-2-sum-bound", [] { return criterion_table_sz(); }},
        {"table-4-closed-floor-and-marks", [] { return criterion_table_closed(); }},
        {"table-3-gaps", [] { return criterion_table_gap(); }},
        {"spot-values", [] { return criterion_spot_values(); }},
        {"recursive-bound-sweep", [&] { return criterion_recursive_bound_sweep(rng); }},
        {"product-sum-sharpness", [&] { return criterion_sharpness(rng); }},
        {"product-multiplicity", [&] { return criterion_product_multiplicity(rng); }},
        {"condition-a-suite", [] { return criterion_condition_a_suite(); }},
        {"closed-form-domination", [] { return criterion_closed_form_theorem(); }},
        {"two-variable-formulas", [] { return criterion_two_var(); }},
        {"multiplicity-engines", [&] { return criterion_multiplicity_engines(rng); }},
    };

    bool all_ok = true;
    int id = 0;
    for (const auto& [name, fn] : criteria) {
        ++id;
        const auto t0 = Clock::now();
        Outcome out;
        try {
            out = fn();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("%s %2d %-34s checked=%-6ld (%.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", id,
                    name.c_str(), out.checked, secs, out.detail.empty() ? "" : " ",
                    out.detail.c_str());
        if (!out.pass) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
