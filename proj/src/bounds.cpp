#include <multizero/bounds.hpp>

#include <algorithm>
#include <limits>
#include <utility>

namespace multizero::bounds {

namespace {

// Visits every (u_1,...,u_len) with sum <= cap_sum and
// u_1 + 2 u_2 + ... + len*u_len <= cap_weight, in ascending lexicographic
// order.
template <class F>
void for_each_composition(Int len, Int cap_sum, Int cap_weight, F&& visit) {
    std::vector<Int> u(static_cast<std::size_t>(len), 0);
    auto rec = [&](auto&& self, Int pos, Int sum_left, Int weight_left) -> void {
        if (pos == len) {
            visit(u);
            return;
        }
        const Int w = pos + 1;
        const Int max_u = std::min(sum_left, weight_left / w);
        for (Int v = 0; v <= max_u; ++v) {
            u[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, sum_left - v, weight_left - v * w);
        }
        u[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, cap_sum, cap_weight);
}

Integer pow_int(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// Decides i * (B^{1/n} - 1/d) <= s * (B^{1/n} - 1) exactly. Multiplying by d
// turns this into R*A <= C with R = B^{1/n}, A = d(i-s), C = i - d*s, decided
// by comparing n-th powers with the correct sign handling.
bool root_ratio_leq(Int i, Int s, Int base, unsigned long n, Int d) {
    const Integer a = Integer(d) * (Integer(i) - Integer(s));
    const Integer c = Integer(i) - Integer(d) * Integer(s);
    if (a == 0) return c >= 0;
    if (a > 0) {
        if (c < 0) return false;
        return Integer(base) * pow_int(a, n) <= pow_int(c, n);
    }
    if (c >= 0) return true;
    return Integer(base) * pow_int(-a, n) >= pow_int(-c, n);
}

ConditionAResult condition_a_impl(const std::vector<Rational>& i, Int r,
                                  const std::vector<Int>& s, bool weaken_a2) {
    const std::size_t m = i.size();
    if (m < 2) throw std::invalid_argument("Condition A requires m >= 2");
    if (m != s.size()) throw std::invalid_argument("Condition A: dimension mismatch");
    if (r < 1) throw std::invalid_argument("Condition A: multiplicity must be positive");

    // (A.1)
    for (std::size_t t = 0; t + 1 < m; ++t) {
        if (i[t] < Rational(0) || i[t] > Rational(s[t]))
            return {false, ConditionAClause::a1, static_cast<Int>(t + 1), 0};
    }
    const Integer last_cap = Integer(r) * Integer(s[m - 1]);
    if (i[m - 1] < Rational(0) || !(i[m - 1] < Rational(last_cap)))
        return {false, ConditionAClause::a1, static_cast<Int>(m), 0};

    // (A.2): products over t <= m-2 (vacuous for m = 2)
    const Int l_max = weaken_a2 ? r - 1 : r;
    for (Int l = 2; l <= l_max; ++l) {
        for (Int sv = 1; sv < l; ++sv) {
            Rational lhs(sv), rhs(l);
            for (std::size_t t = 0; t + 2 < m; ++t) {
                lhs *= Rational(s[t]) - i[t] / Rational(l);
                rhs *= Rational(s[t]) - i[t] / Rational(sv);
            }
            if (lhs > rhs) return {false, ConditionAClause::a2, l, sv};
        }
    }

    // (A.3): products over t <= m-1
    for (Int sv = 1; sv < r; ++sv) {
        Rational lhs(sv), rhs(r);
        for (std::size_t t = 0; t + 1 < m; ++t) {
            lhs *= Rational(s[t]) - i[t] / Rational(r);
            rhs *= Rational(s[t]) - i[t] / Rational(sv);
        }
        if (lhs > rhs) return {false, ConditionAClause::a3, r, sv};
    }
    return {true, ConditionAClause::none, 0, 0};
}

std::vector<Rational> to_rationals(const std::vector<Int>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (Int x : v) out.emplace_back(x);
    return out;
}

// Dynamic program over (prefix length t, multiplicity l). Num is either
// long (fast path, fits by a precomputed bound) or Integer.
template <class Num>
Num d_dynamic(const BoundParams& p, CompositionTuple* argmax_out) {
    const auto& i = p.exponents;
    const auto& s = p.set_sizes;
    const Int r = p.multiplicity_target;
    const std::size_t m = p.vars();

    std::vector<Num> prev(static_cast<std::size_t>(r) + 1, Num(0));
    for (Int l = 1; l <= r; ++l) prev[static_cast<std::size_t>(l)] = Num(d_base(i[0], l, s[0]));
    if (m == 1) {
        if (argmax_out) argmax_out->weights.clear();
        return prev[static_cast<std::size_t>(r)];
    }

    Num prefix_size = Num(s[0]);
    std::vector<Num> cur(static_cast<std::size_t>(r) + 1, Num(0));
    for (std::size_t t = 1; t < m; ++t) {
        const bool top = (t == m - 1);
        for (Int l = 1; l <= r; ++l) {
            Num best = Num(-1);
            std::vector<Int> best_u;
            const bool track = top && l == r && argmax_out != nullptr;
            for_each_composition(l, s[t], i[t], [&](const std::vector<Int>& u) {
                Int used = 0;
                for (Int v : u) used += v;
                Num val = Num(s[t] - used) * prev[static_cast<std::size_t>(l)];
                for (Int k = 1; k < l; ++k)
                    val += Num(u[static_cast<std::size_t>(k - 1)]) *
                           prev[static_cast<std::size_t>(l - k)];
                val += Num(u[static_cast<std::size_t>(l - 1)]) * prefix_size;
                if (val > best) {
                    best = val;
                    if (track) best_u = u;
                }
            });
            cur[static_cast<std::size_t>(l)] = best;
            if (track) argmax_out->weights = std::move(best_u);
        }
        prev.swap(cur);
        prefix_size *= Num(s[t]);
    }
    return prev[static_cast<std::size_t>(r)];
}

Integer d_ref_rec(const std::vector<Int>& i, Int l, const std::vector<Int>& s, std::size_t m) {
    if (m == 1) return Integer(d_base(i[0], l, s[0]));
    Integer prefix(1);
    for (std::size_t j = 0; j + 1 < m; ++j) prefix *= s[j];
    Integer best(-1);
    for_each_composition(l, s[m - 1], i[m - 1], [&](const std::vector<Int>& u) {
        Int used = 0;
        for (Int v : u) used += v;
        Integer val = Integer(s[m - 1] - used) * d_ref_rec(i, l, s, m - 1);
        for (Int k = 1; k < l; ++k)
            val += Integer(u[static_cast<std::size_t>(k - 1)]) * d_ref_rec(i, l - k, s, m - 1);
        val += Integer(u[static_cast<std::size_t>(l - 1)]) * prefix;
        if (val > best) best = val;
    });
    return best;
}

}  // namespace

BoundParams::BoundParams(std::vector<Int> exps, Int r, std::vector<Int> sizes)
    : exponents(std::move(exps)), multiplicity_target(r), set_sizes(std::move(sizes)) {
    if (exponents.empty()) throw std::invalid_argument("BoundParams: need at least one variable");
    if (exponents.size() != set_sizes.size())
        throw std::invalid_argument("BoundParams: exponent/set size count mismatch");
    if (multiplicity_target < 1)
        throw std::invalid_argument("BoundParams: multiplicity target must be >= 1");
    for (Int e : exponents)
        if (e < 0) throw std::invalid_argument("BoundParams: exponents must be >= 0");
    for (Int s : set_sizes)
        if (s < 1) throw std::invalid_argument("BoundParams: set sizes must be >= 1");
}

Integer grid_size(const BoundParams& params) {
    Integer p(1);
    for (Int s : params.set_sizes) p *= s;
    return p;
}

bool saturated(const BoundParams& params) {
    Int acc = 0;
    for (std::size_t t = 0; t < params.vars(); ++t)
        acc += params.exponents[t] / params.set_sizes[t];
    return acc >= params.multiplicity_target;
}

Int d_base(Int i1, Int r, Int s1) {
    if (i1 < 0 || r < 1 || s1 < 1) throw std::invalid_argument("d_base: bad arguments");
    return std::min(i1 / r, s1);
}

std::vector<CompositionTuple> enumerate_A(Int i_m, Int r, Int s_m) {
    if (i_m < 0 || r < 1 || s_m < 1) throw std::invalid_argument("enumerate_A: bad arguments");
    std::vector<CompositionTuple> out;
    for_each_composition(r, s_m, i_m, [&](const std::vector<Int>& u) { out.push_back({u}); });
    return out;
}

namespace {

// Every intermediate of the dynamic program is bounded by the grid size, so
// int64 is safe whenever that fits with headroom.
bool fits_fast_path(const BoundParams& params) {
    return grid_size(params) < Integer(std::numeric_limits<long>::max() / 4);
}

}  // namespace

Integer d_recursive(const BoundParams& params) {
    if (fits_fast_path(params)) return Integer(d_dynamic<long>(params, nullptr));
    return d_dynamic<Integer>(params, nullptr);
}

DRecursiveDiagnostics d_recursive_with_argmax(const BoundParams& params) {
    DRecursiveDiagnostics diag;
    if (fits_fast_path(params))
        diag.value = Integer(d_dynamic<long>(params, &diag.argmax));
    else
        diag.value = d_dynamic<Integer>(params, &diag.argmax);
    return diag;
}

Integer sz_sum_bound(const BoundParams& params) {
    Integer total(0);
    for (std::size_t t = 0; t < params.vars(); ++t) {
        Integer term(params.exponents[t]);
        for (std::size_t j = 0; j < params.vars(); ++j)
            if (j != t) term *= params.set_sizes[j];
        total += term;
    }
    return total;
}

Rational sz_mult_bound(const BoundParams& params) {
    const Rational per_mult =
        Rational(sz_sum_bound(params)) / Rational(params.multiplicity_target);
    const Rational grid(grid_size(params));
    return per_mult < grid ? per_mult : grid;
}

Integer footprint_bound(const BoundParams& params) {
    for (std::size_t t = 0; t < params.vars(); ++t)
        if (params.exponents[t] >= params.set_sizes[t])
            throw std::domain_error("exponent not below set size");
    Integer rem(1);
    for (std::size_t t = 0; t < params.vars(); ++t)
        rem *= Integer(params.set_sizes[t]) - Integer(params.exponents[t]);
    return grid_size(params) - rem;
}

std::string ConditionAResult::describe() const {
    switch (violated) {
        case ConditionAClause::none:
            return "ok";
        case ConditionAClause::a1:
            return "A.1, t=" + std::to_string(ell);
        case ConditionAClause::a2:
            return "A.2, l=" + std::to_string(ell) + ", s=" + std::to_string(s);
        case ConditionAClause::a3:
            return "A.3, s=" + std::to_string(s);
    }
    return "?";
}

ConditionAResult condition_a(const BoundParams& params) {
    return condition_a_impl(to_rationals(params.exponents), params.multiplicity_target,
                            params.set_sizes, false);
}

ConditionAResult condition_a_rational(const std::vector<Rational>& exponents, Int r,
                                      const std::vector<Int>& set_sizes) {
    return condition_a_impl(exponents, r, set_sizes, false);
}

ConditionAResult detail::condition_a_weakened_a2(const BoundParams& params) {
    return condition_a_impl(to_rationals(params.exponents), params.multiplicity_target,
                            params.set_sizes, true);
}

Rational closed_form_bound_unchecked(const BoundParams& params) {
    const Rational r(params.multiplicity_target);
    Rational prod(1);
    for (std::size_t t = 0; t < params.vars(); ++t)
        prod *= Rational(params.set_sizes[t]) - Rational(params.exponents[t]) / r;
    return Rational(grid_size(params)) - prod;
}

Rational closed_form_bound(const BoundParams& params) {
    const ConditionAResult res = condition_a(params);
    if (!res.satisfied) throw ConditionAError(res);
    return closed_form_bound_unchecked(params);
}

bool condition_a_sufficient(const BoundParams& params) {
    const std::size_t m = params.vars();
    if (m < 3)
        throw std::invalid_argument(
            "condition_a_sufficient requires m >= 3; for m = 2 Condition A itself "
            "reduces to i1 <= r/(r+1) s1 and i2 < r s2");
    const Int r = params.multiplicity_target;
    const auto& i = params.exponents;
    const auto& s = params.set_sizes;

    if (!(Integer(i[m - 1]) < Integer(r) * Integer(s[m - 1]))) return false;
    for (std::size_t t = 0; t + 1 < m; ++t) {
        if (r == 1) {
            // Both root families are vacuous; only the box constraint remains.
            if (i[t] > s[t]) return false;
            continue;
        }
        if (!root_ratio_leq(i[t], s[t], r, static_cast<unsigned long>(m - 1), r)) return false;
        if (!root_ratio_leq(i[t], s[t], 2, static_cast<unsigned long>(m - 2), 2)) return false;
    }
    return true;
}

bool condition_a_r2_equal_sizes(const std::vector<Int>& exponents, Int q) {
    const std::size_t m = exponents.size();
    if (m < 2) throw std::invalid_argument("condition_a_r2_equal_sizes requires m >= 2");
    if (q < 1) throw std::invalid_argument("condition_a_r2_equal_sizes: q must be >= 1");

    for (std::size_t t = 0; t + 1 < m; ++t)
        if (exponents[t] < 0 || exponents[t] > q) return false;
    if (exponents[m - 1] < 0 || !(exponents[m - 1] < 2 * q)) return false;

    // e_k of I_1..I_{m-1}, I_t = i_t / q
    std::vector<Rational> e(m, Rational(0));
    e[0] = Rational(1);
    std::size_t filled = 0;
    for (std::size_t t = 0; t + 1 < m; ++t) {
        const Rational it(Integer(exponents[t]), Integer(q));
        ++filled;
        for (std::size_t k = filled; k >= 1; --k) e[k] += e[k - 1] * it;
    }

    Rational lhs(0);
    for (std::size_t t = 1; t + 1 <= m; ++t) {
        const Rational coef(Integer((Integer(1) << t) * 2 - 1), Integer(Integer(1) << t));
        if (t % 2 == 1)
            lhs += coef * e[t];
        else
            lhs -= coef * e[t];
    }
    return lhs <= Rational(1);
}

bool condition_a_monotone_check(const BoundParams& params) {
    std::vector<Int> cur(params.vars(), 0);
    for (;;) {
        if (!condition_a(BoundParams(cur, params.multiplicity_target, params.set_sizes))
                 .satisfied)
            return false;
        std::size_t t = 0;
        while (t < cur.size() && cur[t] == params.exponents[t]) cur[t++] = 0;
        if (t == cur.size()) break;
        ++cur[t];
    }
    return true;
}

bool necessary_bound_check(const BoundParams& params) {
    if (params.vars() < 2) throw std::invalid_argument("necessary_bound_check requires m >= 2");
    const Int r = params.multiplicity_target;
    for (std::size_t t = 0; t + 1 < params.vars(); ++t) {
        if (Integer(params.exponents[t]) * Integer(r + 1) >
            Integer(r) * Integer(params.set_sizes[t]))
            return false;
    }
    return true;
}

std::string to_string(TwoVarCase c) {
    switch (c) {
        case TwoVarCase::c1: return "C.1";
        case TwoVarCase::c2: return "C.2";
        case TwoVarCase::c3: return "C.3";
        case TwoVarCase::c4: return "C.4";
    }
    return "?";
}

TwoVarBound two_var_bound(Int i1, Int i2, Int r, Int s1, Int s2) {
    if (i1 < 0 || i2 < 0 || r < 1 || s1 < 1 || s2 < 1)
        throw std::invalid_argument("two_var_bound: bad arguments");
    const Rational ri1(i1), ri2(i2), rr(r), rs1(s1), rs2(s2);

    for (Int k = 1; k < r; ++k) {
        // right band of k: (r-k) r/(r+1) s1 <= i1 < (r-k) s1
        const bool right = Integer(r - k) * Integer(r) * Integer(s1) <=
                               Integer(i1) * Integer(r + 1) &&
                           Integer(i1) < Integer(r - k) * Integer(s1);
        if (right) {
            if (i2 < k * s2) {
                Rational v = rs2 * ri1 / rr + (ri2 / rr) * (ri1 / Rational(r - k));
                return {v, TwoVarCase::c1, k};
            }
            if (i2 < (k + 1) * s2) {
                Rational v = rs2 * ri1 / rr +
                             (Rational(k + 1) * rs2 - ri2) *
                                 (ri1 / Rational(r - k) - ri1 / rr) +
                             (ri2 - Rational(k) * rs2) * (rs1 - ri1 / rr);
                return {v, TwoVarCase::c2, k};
            }
            break;  // i1 band identified but i2 outside every case
        }
        // left band of k: (r-k-1) s1 <= i1 < (r-k) r/(r+1) s1
        const bool left = Integer(r - k - 1) * Integer(s1) <= Integer(i1) &&
                          Integer(i1) * Integer(r + 1) <
                              Integer(r - k) * Integer(r) * Integer(s1);
        if (left) {
            if (i2 < (k + 1) * s2) {
                Rational v = rs2 * ri1 / rr + (ri2 / Rational(k + 1)) * (rs1 - ri1 / rr);
                return {v, TwoVarCase::c3, k};
            }
            break;
        }
    }

    if (s1 * (r - 1) <= i1 && i1 < s1 * r && i2 < s2) {
        const Int fl = i1 / r;
        const Integer value = Integer(s2) * Integer(fl) + Integer(i2) * (Integer(s1) - Integer(fl));
        return {Rational(value), TwoVarCase::c4, 0};
    }
    throw std::domain_error("no closed-form case applies");
}

Rational two_var_small_bound(Int i1, Int i2, Int r, Int s1, Int s2) {
    if (i1 < 0 || i2 < 0 || r < 1 || s1 < 1 || s2 < 1)
        throw std::invalid_argument("two_var_small_bound: bad arguments");
    const bool ok = Integer(i1) * Integer(r + 1) <= Integer(r) * Integer(s1) &&
                    Integer(i2) < Integer(r) * Integer(s2);
    if (!ok)
        throw std::domain_error(
            "outside validity region: need 0 <= i1 <= r/(r+1) s1 and 0 <= i2 < r s2");
    const Rational rr(r);
    return Rational(s1) * Rational(s2) -
           (Rational(s1) - Rational(i1) / rr) * (Rational(s2) - Rational(i2) / rr);
}

Integer detail::d_recursive_reference(const BoundParams& params) {
    return d_ref_rec(params.exponents, params.multiplicity_target, params.set_sizes,
                     params.vars());
}

}  // namespace multizero::bounds
