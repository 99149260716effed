#include <multizero/oracle.hpp>
#include <multizero/threads.hpp>

#include <algorithm>
#include <functional>

namespace multizero::oracle {

namespace {

std::string join(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (t) out += ",";
        out += std::to_string(v[t]);
    }
    return out;
}

std::string fmt_irs(const std::vector<Int>& i, Int r, const std::vector<Int>& s) {
    return "i=" + join(i) + " r=" + std::to_string(r) + " s=" + join(s);
}

bounds::BoundParams bp(const std::vector<Int>& i, Int r, const std::vector<Int>& s) {
    return bounds::BoundParams(i, r, s);
}

// Odometer over exponent vectors 0 <= i_t <= hi_t; calls f on each.
void for_each_exponent(const std::vector<Int>& hi, const std::function<void(const std::vector<Int>&)>& f) {
    std::vector<Int> cur(hi.size(), 0);
    for (;;) {
        f(cur);
        std::size_t t = 0;
        while (t < cur.size() && cur[t] == hi[t]) cur[t++] = 0;
        if (t == cur.size()) return;
        ++cur[t];
    }
}

std::vector<long> convolve_capped(const std::vector<long>& dist,
                                       const std::vector<Int>& profile, Int r) {
    std::vector<long> next(static_cast<std::size_t>(r) + 1, 0);
    for (Int c = 0; c <= r; ++c) {
        const long ways = dist[static_cast<std::size_t>(c)];
        if (ways == 0) continue;
        for (Int v : profile) next[static_cast<std::size_t>(std::min(c + v, r))] += ways;
    }
    return next;
}

}  // namespace

std::vector<Int> ProfileAssignment::exponent_sums() const {
    std::vector<Int> sums;
    sums.reserve(profiles.size());
    for (const auto& prof : profiles) {
        Int s = 0;
        for (Int v : prof) s += v;
        sums.push_back(s);
    }
    return sums;
}

void ProfileAssignment::canonicalize() {
    for (auto& prof : profiles) std::sort(prof.begin(), prof.end(), std::greater<Int>());
}

std::string ProfileAssignment::str() const {
    std::string out;
    for (std::size_t u = 0; u < profiles.size(); ++u) {
        if (u) out += "x";
        out += "(" + join(profiles[u]) + ")";
    }
    return out;
}

Int count_heavy_points(const ProfileAssignment& assignment, Int r) {
    if (r < 0) throw std::invalid_argument("count_heavy_points: r must be >= 0");
    if (assignment.profiles.empty())
        throw std::invalid_argument("count_heavy_points: empty assignment");
    std::vector<long> dist(static_cast<std::size_t>(r) + 1, 0);
    dist[0] = 1;
    for (const auto& prof : assignment.profiles) dist = convolve_capped(dist, prof, r);
    return dist[static_cast<std::size_t>(r)];
}

std::vector<std::vector<Int>> partitions_into_at_most(Int n, Int k) {
    if (n < 0 || k < 1) throw std::invalid_argument("partitions_into_at_most: bad arguments");
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur;
    auto rec = [&](auto&& self, Int left, Int max_part, Int slots) -> void {
        if (left == 0) {
            std::vector<Int> padded = cur;
            padded.resize(static_cast<std::size_t>(k), 0);
            out.push_back(std::move(padded));
            return;
        }
        if (slots == 0) return;
        const Int lo = (left + slots - 1) / slots;
        for (Int p = std::min(left, max_part); p >= lo; --p) {
            cur.push_back(p);
            self(self, left - p, p, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, n, n, k);
    std::reverse(out.begin(), out.end());  // ascending lexicographic
    return out;
}

namespace {

struct SearchSpace {
    std::vector<std::vector<std::vector<Int>>> parts;  // per variable, ascending
};

SearchSpace make_space(const std::vector<Int>& exponents, const std::vector<Int>& sizes) {
    if (exponents.empty() || exponents.size() != sizes.size())
        throw std::invalid_argument("lower_bound_search: bad dimensions");
    SearchSpace sp;
    for (std::size_t u = 0; u < exponents.size(); ++u) {
        if (exponents[u] < 0 || sizes[u] < 1)
            throw std::invalid_argument("lower_bound_search: bad arguments");
        sp.parts.push_back(partitions_into_at_most(exponents[u], sizes[u]));
    }
    return sp;
}

struct Best {
    Int count = -1;
    std::vector<std::size_t> choice;
};

// Exhausts variables u..m-1 given the capped distribution of the prefix;
// first strict improvement in ascending order keeps the witness
// lexicographically smallest.
void search_rec(const SearchSpace& sp, Int r, std::size_t u, const std::vector<long>& dist,
                std::vector<std::size_t>& choice, Best& best) {
    if (u == sp.parts.size()) {
        const Int cnt = dist[static_cast<std::size_t>(r)];
        if (cnt > best.count) {
            best.count = cnt;
            best.choice = choice;
        }
        return;
    }
    for (std::size_t j = 0; j < sp.parts[u].size(); ++j) {
        choice[u] = j;
        search_rec(sp, r, u + 1, convolve_capped(dist, sp.parts[u][j], r), choice, best);
    }
}

SearchResult assemble(const SearchSpace& sp, const Best& best) {
    SearchResult res;
    res.count = best.count;
    for (std::size_t u = 0; u < sp.parts.size(); ++u)
        res.witness.profiles.push_back(sp.parts[u][best.choice[u]]);
    return res;
}

std::vector<long> unit_dist(Int r) {
    std::vector<long> dist(static_cast<std::size_t>(r) + 1, 0);
    dist[0] = 1;
    return dist;
}

}  // namespace

SearchResult lower_bound_search_serial(const std::vector<Int>& exponents, Int r,
                                       const std::vector<Int>& sizes) {
    if (r < 1) throw std::invalid_argument("lower_bound_search: r must be >= 1");
    const SearchSpace sp = make_space(exponents, sizes);
    Best best;
    std::vector<std::size_t> choice(sp.parts.size(), 0);
    search_rec(sp, r, 0, unit_dist(r), choice, best);
    return assemble(sp, best);
}

SearchResult lower_bound_search(const std::vector<Int>& exponents, Int r,
                                const std::vector<Int>& sizes) {
    if (r < 1) throw std::invalid_argument("lower_bound_search: r must be >= 1");
    const SearchSpace sp = make_space(exponents, sizes);
    const std::size_t first = sp.parts[0].size();
    std::vector<Best> per_first(first);

#pragma omp parallel for schedule(dynamic) num_threads(multizero::max_threads())
    for (long j = 0; j < static_cast<long>(first); ++j) {
        const auto ju = static_cast<std::size_t>(j);
        std::vector<std::size_t> choice(sp.parts.size(), 0);
        choice[0] = ju;
        search_rec(sp, r, 1, convolve_capped(unit_dist(r), sp.parts[0][ju], r), choice,
                   per_first[ju]);
    }

    // Sequential merge in first-index order keeps the tie-break deterministic.
    Best best;
    for (const Best& cand : per_first) {
        if (cand.count > best.count) best = cand;
    }
    return assemble(sp, best);
}

std::vector<std::vector<Int>> gap_table(Int r, const std::vector<Int>& sizes, Int i1_lo,
                                        Int i1_hi, Int i2_lo, Int i2_hi) {
    if (sizes.size() != 2) throw std::invalid_argument("gap_table: two variables expected");
    if (i1_lo > i1_hi || i2_lo > i2_hi) throw std::invalid_argument("gap_table: empty range");
    const std::size_t rows = static_cast<std::size_t>(i2_hi - i2_lo + 1);
    const std::size_t cols = static_cast<std::size_t>(i1_hi - i1_lo + 1);
    std::vector<std::vector<Int>> out(rows, std::vector<Int>(cols, 0));
    const long cells = static_cast<long>(rows * cols);

#pragma omp parallel for schedule(dynamic) num_threads(multizero::max_threads())
    for (long c = 0; c < cells; ++c) {
        const Int i2 = i2_lo + static_cast<Int>(c) / static_cast<Int>(cols);
        const Int i1 = i1_lo + static_cast<Int>(c) % static_cast<Int>(cols);
        out[static_cast<std::size_t>(i2 - i2_lo)][static_cast<std::size_t>(i1 - i1_lo)] =
            gap_value({i1, i2}, r, sizes);
    }
    return out;
}

Int gap_value(const std::vector<Int>& exponents, Int r, const std::vector<Int>& sizes) {
    const Integer d = bounds::d_recursive(bp(exponents, r, sizes));
    const SearchResult lower = lower_bound_search_serial(exponents, r, sizes);
    return static_cast<Int>(d.get_si()) - lower.count;
}

std::string to_line(const CheckRecord& record) {
    return "check=" + record.name + " params=\"" + record.params + "\" status=" +
           (record.pass ? "pass" : "fail") + " witness=\"" +
           (record.witness.empty() ? "-" : record.witness) + "\"";
}

bool Report::all_pass() const {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& r : records)
        if (!r.pass) ++n;
    return n;
}

// ---------------------------------------------------------------------------
// verify_all: the invariant harness
// ---------------------------------------------------------------------------

namespace {

struct Tally {
    long checked = 0;
    long bad = 0;
    std::string first;

    void fail(const std::string& witness) {
        ++bad;
        if (first.empty()) first = witness;
    }
    std::string witness() const {
        if (bad == 0) return "";
        return first + " (+" + std::to_string(bad - 1) + " more)";
    }
};

void record(Report& rep, const std::string& name, const std::string& params, const Tally& t) {
    rep.records.push_back(
        {name, params + " checked=" + std::to_string(t.checked), t.bad == 0, t.witness()});
}

void check_d_upper_bounds(Report& rep) {
    const std::vector<std::vector<Int>> size_combos = {{5}, {5, 5}, {4, 6}, {4, 5, 6}, {5, 5, 5}};
    Tally t;
    for (const auto& s : size_combos) {
        for (Int r = 1; r <= 4; ++r) {
            std::vector<Int> hi(s.size());
            for (std::size_t u = 0; u < s.size(); ++u) hi[u] = r * s[u];
            for_each_exponent(hi, [&](const std::vector<Int>& i) {
                ++t.checked;
                const auto params = bp(i, r, s);
                const Integer d = bounds::d_recursive(params);
                if (d > bounds::sz_mult_bound(params).floor() || d > bounds::grid_size(params))
                    t.fail(fmt_irs(i, r, s));
            });
        }
    }
    record(rep, "d-upper-bounds", "m<=3 r<=4 s<=6 i<=r*s", t);
}

void check_closed_form_footprint_r1(Report& rep) {
    const std::vector<std::vector<Int>> size_combos = {{5, 5}, {4, 5, 6}};
    Tally t;
    for (const auto& s : size_combos) {
        std::vector<Int> hi(s.size());
        for (std::size_t u = 0; u < s.size(); ++u) hi[u] = s[u] - 1;
        for_each_exponent(hi, [&](const std::vector<Int>& i) {
            ++t.checked;
            const auto params = bp(i, 1, s);
            if (bounds::closed_form_bound(params) != Rational(bounds::footprint_bound(params)))
                t.fail(fmt_irs(i, 1, s));
        });
    }
    record(rep, "closed-form-equals-footprint-r1", "r=1 i<s", t);
}

void check_closed_form_dominates_d(Report& rep) {
    Tally t;
    for (std::size_t m : {2u, 3u}) {
        for (Int r = 2; r <= 3; ++r) {
            const std::vector<Int> s(m, 5);
            std::vector<Int> hi(m, 5);
            hi[m - 1] = r * 5;
            for_each_exponent(hi, [&](const std::vector<Int>& i) {
                const auto params = bp(i, r, s);
                if (!bounds::condition_a(params).satisfied) return;
                ++t.checked;
                const Rational cf = bounds::closed_form_bound(params);
                const Rational d(bounds::d_recursive(params));
                const Rational cap = bounds::sz_mult_bound(params);
                if (d > cf || cf > cap || cf > Rational(bounds::grid_size(params)))
                    t.fail(fmt_irs(i, r, s));
            });
        }
    }
    record(rep, "closed-form-dominates-d", "m=2,3 r=2,3 s=5 under condition A", t);
}

void check_condition_a_family(Report& rep) {
    Tally suff, nec, weak;
    for (std::size_t m : {3u, 4u}) {
        std::vector<std::vector<Int>> size_combos;
        std::vector<Int> combo(m, 4);
        for (;;) {
            size_combos.push_back(combo);
            std::size_t t = 0;
            while (t < m && combo[t] == 5) combo[t++] = 4;
            if (t == m) break;
            ++combo[t];
        }
        for (const auto& s : size_combos) {
            for (Int r = 2; r <= 3; ++r) {
                std::vector<Int> hi(m);
                for (std::size_t u = 0; u + 1 < m; ++u) hi[u] = s[u];
                hi[m - 1] = r * s[m - 1] + 1;
                for_each_exponent(hi, [&](const std::vector<Int>& i) {
                    const auto params = bp(i, r, s);
                    const auto full = bounds::condition_a(params);

                    ++suff.checked;
                    if (bounds::condition_a_sufficient(params) && !full.satisfied)
                        suff.fail(fmt_irs(i, r, s));

                    ++nec.checked;
                    if (full.satisfied && !bounds::necessary_bound_check(params))
                        nec.fail(fmt_irs(i, r, s));

                    ++weak.checked;
                    if (full.satisfied !=
                        bounds::detail::condition_a_weakened_a2(params).satisfied)
                        weak.fail(fmt_irs(i, r, s));
                });
            }
        }
    }
    record(rep, "sufficient-implies-condition-a", "m=3,4 r=2,3 s in {4,5}", suff);
    record(rep, "condition-a-implies-necessary", "m=3,4 r=2,3 s in {4,5}", nec);
    record(rep, "a2-range-weakening-redundant", "m=3,4 r=2,3 s in {4,5}", weak);
}

void check_condition_a_monotone(Report& rep) {
    Tally t;
    const std::vector<std::pair<std::vector<Int>, Int>> combos = {{{5, 5}, 2}, {{5, 5}, 3},
                                                                  {{5, 5, 5}, 2}};
    for (const auto& [s, r] : combos) {
        std::vector<Int> hi(s.size());
        for (std::size_t u = 0; u + 1 < s.size(); ++u) hi[u] = s[u];
        hi[s.size() - 1] = r * s.back() - 1;
        for_each_exponent(hi, [&](const std::vector<Int>& i) {
            const auto params = bp(i, r, s);
            if (!bounds::condition_a(params).satisfied) return;
            ++t.checked;
            if (!bounds::condition_a_monotone_check(params)) t.fail(fmt_irs(i, r, s));
        });
    }
    record(rep, "condition-a-downward-closed", "all satisfying tuples, m=2,3", t);
}

void check_r2_equal_sizes(Report& rep) {
    Tally t;
    const Int q = 5;
    for (std::size_t m : {3u, 4u}) {
        const std::vector<Int> s(m, q);
        const std::vector<Int> hi(m, 2 * q);
        for_each_exponent(hi, [&](const std::vector<Int>& i) {
            ++t.checked;
            const bool simple = bounds::condition_a_r2_equal_sizes(i, q);
            const bool full = bounds::condition_a(bp(i, 2, s)).satisfied;
            if (simple != full) t.fail(fmt_irs(i, 2, s));
        });
    }
    record(rep, "r2-equal-sizes-agreement", "r=2 q=5 m=3,4 i<=2q", t);
}

void check_d_monotone(Report& rep) {
    Tally t;
    const Int r = 3;
    const std::vector<Int> s{5, 5};
    std::vector<std::vector<Integer>> d(17, std::vector<Integer>(17));
    for (Int i2 = 0; i2 <= 16; ++i2)
        for (Int i1 = 0; i1 <= 16; ++i1)
            d[static_cast<std::size_t>(i2)][static_cast<std::size_t>(i1)] =
                bounds::d_recursive(bp({i1, i2}, r, s));
    for (Int i2 = 0; i2 <= 15; ++i2) {
        for (Int i1 = 0; i1 <= 15; ++i1) {
            ++t.checked;
            const auto& here = d[static_cast<std::size_t>(i2)][static_cast<std::size_t>(i1)];
            if (d[static_cast<std::size_t>(i2)][static_cast<std::size_t>(i1 + 1)] < here ||
                d[static_cast<std::size_t>(i2 + 1)][static_cast<std::size_t>(i1)] < here)
                t.fail(fmt_irs({i1, i2}, r, s));
        }
    }
    for (Int i2 = 0; i2 <= 10; ++i2) {
        for (Int i1 = 0; i1 <= 10; ++i1) {
            ++t.checked;
            const Integer base = bounds::d_recursive(bp({i1, i2}, r, s));
            if (bounds::d_recursive(bp({i1, i2}, r, {6, 5})) < base ||
                bounds::d_recursive(bp({i1, i2}, r, {5, 6})) < base)
                t.fail(fmt_irs({i1, i2}, r, s) + " size step");
        }
    }
    record(rep, "d-monotone", "m=2 r=3 steps in i and s", t);
}

void check_memo_vs_reference(Report& rep, std::mt19937_64& rng) {
    Tally t;
    std::uniform_int_distribution<int> mdist(1, 3);
    std::uniform_int_distribution<Int> rdist(1, 3), sdist(2, 5);
    for (int n = 0; n < 100; ++n) {
        const int m = mdist(rng);
        const Int r = rdist(rng);
        std::vector<Int> s(static_cast<std::size_t>(m)), i(static_cast<std::size_t>(m));
        for (auto& v : s) v = sdist(rng);
        for (std::size_t u = 0; u < i.size(); ++u)
            i[u] = std::uniform_int_distribution<Int>(0, r * s[u])(rng);
        ++t.checked;
        const auto params = bp(i, r, s);
        if (bounds::d_recursive(params) != bounds::detail::d_recursive_reference(params))
            t.fail(fmt_irs(i, r, s));
    }
    record(rep, "memoized-vs-reference-d", "100 random tuples m<=3 r<=3 s<=5", t);
}

void check_two_var(Report& rep) {
    Tally cases, small;
    const std::vector<Int> s{5, 5};
    for (Int r = 2; r <= 3; ++r) {
        for (Int i1 = 0; i1 < r * 5; ++i1) {
            for (Int i2 = 0; i2 < r * 5; ++i2) {
                const auto params = bp({i1, i2}, r, s);
                const Rational d(bounds::d_recursive(params));
                try {
                    const auto tv = bounds::two_var_bound(i1, i2, r, 5, 5);
                    ++cases.checked;
                    const bool c4 = tv.which == bounds::TwoVarCase::c4;
                    if (c4 && tv.value != d) cases.fail(fmt_irs({i1, i2}, r, s) + " C.4");
                    if (!c4 && tv.value < d) cases.fail(fmt_irs({i1, i2}, r, s));
                    if (tv.value > bounds::sz_mult_bound(params))
                        cases.fail(fmt_irs({i1, i2}, r, s) + " above sz");
                } catch (const std::domain_error&) {
                    // no closed-form case covers this tuple
                }
                try {
                    const Rational sb = bounds::two_var_small_bound(i1, i2, r, 5, 5);
                    ++small.checked;
                    if (sb != bounds::closed_form_bound_unchecked(params) || sb < d)
                        small.fail(fmt_irs({i1, i2}, r, s));
                } catch (const std::domain_error&) {
                    // outside the validity region
                }
            }
        }
    }
    record(rep, "two-var-closed-forms", "r=2,3 s=5,5", cases);
    record(rep, "two-var-small-equals-closed-form", "r=2,3 s=5,5 in region", small);
}

void check_multiplicity_routes(Report& rep, std::mt19937_64& rng) {
    Tally t;
    std::uniform_int_distribution<int> mdist(1, 3);
    for (int n = 0; n < 500; ++n) {
        const ffpoly::PrimeField field(n % 2 == 0 ? 5 : 7);
        const int m = mdist(rng);
        const auto F = ffpoly::random_sparse_polynomial(field, m, 6, 20, rng);
        std::vector<Int> a(static_cast<std::size_t>(m));
        for (auto& v : a)
            v = std::uniform_int_distribution<Int>(0, field.modulus() - 1)(rng);
        ++t.checked;
        if (ffpoly::multiplicity(F, a) != ffpoly::multiplicity_by_derivatives(F, a))
            t.fail("p=" + std::to_string(field.modulus()) + " F=" + ffpoly::to_string(F) +
                   " a=(" + join(a) + ")");
    }
    record(rep, "multiplicity-translation-vs-derivatives", "500 random (F,a) over GF(5),GF(7)",
           t);
}

void check_hasse_identities(Report& rep, std::mt19937_64& rng) {
    Tally t;
    const ffpoly::PrimeField field(7);
    for (int n = 0; n < 100; ++n) {
        const int m = 2;
        const auto F = ffpoly::random_sparse_polynomial(field, m, 5, 12, rng);
        const auto G = ffpoly::random_sparse_polynomial(field, m, 5, 12, rng);
        const Int c = std::uniform_int_distribution<Int>(0, 6)(rng);
        ffpoly::ExponentVec k(static_cast<std::size_t>(m));
        for (auto& v : k) v = std::uniform_int_distribution<Int>(0, 3)(rng);
        ++t.checked;
        const ffpoly::ExponentVec zero(static_cast<std::size_t>(m), 0);
        const bool identity = ffpoly::hasse_derivative(F, zero) == F;
        const bool linear = ffpoly::hasse_derivative(F.scaled(c) + G, k) ==
                            ffpoly::hasse_derivative(F, k).scaled(c) + ffpoly::hasse_derivative(G, k);
        if (!identity || !linear) t.fail("F=" + ffpoly::to_string(F));
    }
    record(rep, "hasse-identity-and-linearity", "100 random pairs over GF(7)", t);
}

void check_product_multiplicity(Report& rep, std::mt19937_64& rng) {
    Tally t;
    const ffpoly::PrimeField field(7);

    // exhaustive small specs, m = 2
    for (Int i1 = 0; i1 <= 6; ++i1) {
        for (Int i2 = 0; i1 + i2 <= 6; ++i2) {
            for (const auto& p1 : partitions_into_at_most(i1, 5)) {
                for (const auto& p2 : partitions_into_at_most(i2, 5)) {
                    ffpoly::FactorSpec spec;
                    spec.factors.resize(2);
                    for (Int v = 0; v < 5; ++v) {
                        spec.factors[0].emplace_back(v, p1[static_cast<std::size_t>(v)]);
                        spec.factors[1].emplace_back(v, p2[static_cast<std::size_t>(v)]);
                    }
                    const auto F = ffpoly::build_product(spec, field);
                    ++t.checked;
                    for (Int a1 = 0; a1 < 5; ++a1) {
                        for (Int a2 = 0; a2 < 5; ++a2) {
                            const std::vector<Int> pt{a1, a2};
                            const Int direct = ffpoly::product_multiplicity(spec, pt);
                            if (ffpoly::multiplicity(F, pt) != direct) {
                                t.fail("spec=" + ProfileAssignment{{p1, p2}}.str() + " at (" +
                                       join(pt) + ")");
                                break;
                            }
                        }
                    }
                }
            }
        }
    }

    // random specs, m = 2 and 3
    for (int n = 0; n < 50; ++n) {
        const int m = (n % 2 == 0) ? 2 : 3;
        std::vector<Int> sz(static_cast<std::size_t>(m), 5), exps(static_cast<std::size_t>(m));
        for (auto& e : exps) e = std::uniform_int_distribution<Int>(0, m == 2 ? 8 : 5)(rng);
        const auto spec = ffpoly::random_factor_spec(exps, sz, rng);
        const auto F = ffpoly::build_product(spec, field);
        ++t.checked;
        bool ok = true;
        for_each_exponent(std::vector<Int>(static_cast<std::size_t>(m), 4),
                          [&](const std::vector<Int>& point) {
                              if (!ok) return;
                              if (ffpoly::multiplicity(F, point) !=
                                  ffpoly::product_multiplicity(spec, point))
                                  ok = false;
                          });
        if (!ok) t.fail("random spec with " + fmt_irs(exps, 1, sz));
    }
    record(rep, "product-multiplicity-agreement", "exhaustive m=2 sum<=6 plus 50 random specs",
           t);
}

void check_sharpness(Report& rep, std::mt19937_64& rng) {
    Tally t;
    const ffpoly::PrimeField field(7);
    for (int n = 0; n < 100; ++n) {
        const int m = (n % 2 == 0) ? 2 : 3;
        const std::vector<Int> sizes(static_cast<std::size_t>(m), 5);
        std::vector<Int> exps(static_cast<std::size_t>(m));
        for (auto& e : exps)
            e = std::uniform_int_distribution<Int>(0, m == 2 ? 10 : 6)(rng);
        const auto spec = ffpoly::random_factor_spec(exps, sizes, rng);
        const auto F = ffpoly::build_product(spec, field);
        ++t.checked;
        const auto grid = ffpoly::prefix_grid(field, sizes);
        const Integer sum = ffpoly::grid_multiplicity_sum(F, grid);
        const Integer want = bounds::sz_sum_bound(bp(spec.leading_exponent(), 1, sizes));
        if (sum != want) t.fail(fmt_irs(exps, 1, sizes));
    }
    record(rep, "product-polynomials-attain-sum-bound", "100 random specs m=2,3 over GF(7)", t);
}

void check_random_poly_bounds(Report& rep, std::mt19937_64& rng) {
    Tally t;
    const ffpoly::PrimeField field(7);
    const std::vector<Int> sizes{5, 5};
    const auto grid = ffpoly::prefix_grid(field, sizes);

    // product polynomials across the full two-variable sweep range
    for (int n = 0; n < 200; ++n) {
        const Int r = 2 + n % 3;
        std::vector<Int> exps(2);
        for (std::size_t u = 0; u < 2; ++u)
            exps[u] = std::uniform_int_distribution<Int>(0, r * sizes[u])(rng);
        const auto spec = ffpoly::random_factor_spec(exps, sizes, rng);
        const auto F = ffpoly::build_product(spec, field);
        ++t.checked;
        const auto lead = F.leading_exponent();
        const Int count = ffpoly::grid_count_mult_at_least(F, grid, r);
        const Integer d = bounds::d_recursive(bp(lead, r, sizes));
        const Integer sum_cap = bounds::sz_sum_bound(bp(lead, 1, sizes));
        if (Integer(count) > d || ffpoly::grid_multiplicity_sum(F, grid) > sum_cap)
            t.fail(fmt_irs(exps, r, sizes));
    }

    // generic sparse polynomials
    for (int n = 0; n < 50; ++n) {
        const auto F = ffpoly::random_sparse_polynomial(field, 2, 6, 15, rng);
        const auto lead = F.leading_exponent();
        for (Int r = 1; r <= 3; ++r) {
            ++t.checked;
            const Int count = ffpoly::grid_count_mult_at_least(F, grid, r);
            if (Integer(count) > bounds::d_recursive(bp(lead, r, sizes)))
                t.fail("F=" + ffpoly::to_string(F) + " r=" + std::to_string(r));
        }
    }
    record(rep, "counts-below-recursive-bound", "200 product + 50 sparse polynomials, GF(7)", t);
}

void check_lower_bound_vs_d(Report& rep) {
    Tally t;
    const std::vector<Int> sizes{5, 5};
    for (Int i1 = 0; i1 < 15; ++i1) {
        for (Int i2 = 0; i2 < 15; ++i2) {
            ++t.checked;
            const auto res = lower_bound_search_serial({i1, i2}, 3, sizes);
            const Integer d = bounds::d_recursive(bp({i1, i2}, 3, sizes));
            if (Integer(res.count) > d) t.fail(fmt_irs({i1, i2}, 3, sizes));
            if (res.count != lower_bound_search({i1, i2}, 3, sizes).count)
                t.fail(fmt_irs({i1, i2}, 3, sizes) + " parallel mismatch");
        }
    }
    record(rep, "search-lower-bound-below-d", "m=2 r=3 s=5,5 exhaustive", t);
}

void check_heavy_invariance(Report& rep, std::mt19937_64& rng) {
    Tally t;
    for (int n = 0; n < 50; ++n) {
        const int m = 1 + n % 3;
        ProfileAssignment pa;
        for (int u = 0; u < m; ++u) {
            std::vector<Int> prof(5);
            for (auto& v : prof) v = std::uniform_int_distribution<Int>(0, 4)(rng);
            pa.profiles.push_back(prof);
        }
        const Int r = std::uniform_int_distribution<Int>(0, 6)(rng);
        const Int base = count_heavy_points(pa, r);
        ++t.checked;
        ProfileAssignment shuffled = pa;
        for (auto& prof : shuffled.profiles) std::shuffle(prof.begin(), prof.end(), rng);
        ProfileAssignment canonical = pa;
        canonical.canonicalize();
        if (count_heavy_points(shuffled, r) != base || count_heavy_points(canonical, r) != base)
            t.fail(pa.str() + " r=" + std::to_string(r));
    }
    record(rep, "heavy-count-permutation-invariant", "50 random assignments", t);
}

void check_witness_realized(Report& rep) {
    Tally t;
    const ffpoly::PrimeField field(7);
    const std::vector<Int> sizes{5, 5};
    const auto grid = ffpoly::prefix_grid(field, sizes);
    std::vector<std::pair<Int, Int>> cells;
    for (Int i1 = 0; i1 <= 8; i1 += 2)
        for (Int i2 = 0; i2 <= 8; i2 += 2) cells.emplace_back(i1, i2);
    cells.emplace_back(8, 5);
    cells.emplace_back(10, 3);
    cells.emplace_back(14, 0);
    for (const auto& [i1, i2] : cells) {
        ++t.checked;
        const auto res = lower_bound_search_serial({i1, i2}, 3, sizes);
        ffpoly::FactorSpec spec;
        spec.factors.resize(2);
        for (std::size_t u = 0; u < 2; ++u)
            for (Int v = 0; v < 5; ++v)
                spec.factors[u].emplace_back(v, res.witness.profiles[u][static_cast<std::size_t>(v)]);
        const auto F = ffpoly::build_product(spec, field);
        if (ffpoly::grid_count_mult_at_least(F, grid, 3) != res.count)
            t.fail(fmt_irs({i1, i2}, 3, sizes) + " witness " + res.witness.str());
    }
    record(rep, "search-witness-realized-by-polynomial", "selected cells r=3 s=5,5", t);
}

void check_gap_nonnegative(Report& rep) {
    Tally t;
    const auto gaps = gap_table(3, {5, 5}, 0, 14, 0, 14);
    for (Int i2 = 0; i2 <= 14; ++i2)
        for (Int i1 = 0; i1 <= 14; ++i1) {
            ++t.checked;
            if (gaps[static_cast<std::size_t>(i2)][static_cast<std::size_t>(i1)] < 0)
                t.fail(fmt_irs({i1, i2}, 3, {5, 5}));
        }
    record(rep, "gap-table-nonnegative", "r=3 s=5,5 0..14", t);
}

void check_closed_form_outside_region(Report& rep) {
    // The small-exponent formula is NOT a bound outside its region: witnessed
    // by floored values strictly below D, e.g. at (9,1) for r=3, s=(5,5).
    Tally t;
    bool found_specific = false;
    long violations = 0;
    std::string first;
    const std::vector<Int> sizes{5, 5};
    for (Int i1 = 0; i1 < 15; ++i1) {
        for (Int i2 = 0; i2 < 15; ++i2) {
            const auto params = bp({i1, i2}, 3, sizes);
            ++t.checked;
            const Integer floored = bounds::closed_form_bound_unchecked(params).floor();
            if (floored < bounds::d_recursive(params)) {
                ++violations;
                if (first.empty()) first = fmt_irs({i1, i2}, 3, sizes);
                if (i1 == 9 && i2 == 1) found_specific = true;
            }
        }
    }
    if (violations == 0 || !found_specific) t.fail("no violation found where documented");
    rep.records.push_back({"closed-form-outside-region",
                           "r=3 s=5,5 checked=" + std::to_string(t.checked), t.bad == 0,
                           t.bad ? t.witness()
                                 : "first " + first + " total=" + std::to_string(violations)});
}

}  // namespace

Report verify_all(const VerifyOptions& options) {
    Report rep;
    if (options.empty_sweep) return rep;

    std::mt19937_64 rng(options.seed);

    check_d_upper_bounds(rep);
    check_closed_form_footprint_r1(rep);
    check_closed_form_dominates_d(rep);
    check_condition_a_family(rep);
    check_condition_a_monotone(rep);
    check_r2_equal_sizes(rep);
    check_d_monotone(rep);
    check_memo_vs_reference(rep, rng);
    check_two_var(rep);
    check_multiplicity_routes(rep, rng);
    check_hasse_identities(rep, rng);
    check_product_multiplicity(rep, rng);
    check_sharpness(rep, rng);
    check_random_poly_bounds(rep, rng);
    check_lower_bound_vs_d(rep);
    check_heavy_invariance(rep, rng);
    check_witness_realized(rep);
    check_gap_nonnegative(rep);
    check_closed_form_outside_region(rep);
    return rep;
}

}  // namespace multizero::oracle
