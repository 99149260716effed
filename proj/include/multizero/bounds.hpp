#ifndef MULTIZERO_BOUNDS_HPP
#define MULTIZERO_BOUNDS_HPP

#include <multizero/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace multizero::bounds {

using Int = long;

/// Parameter tuple (i_1,...,i_m, r, s_1,...,s_m) consumed by every bound:
/// exponents of the leading monomial, the multiplicity target, and the sizes
/// of the point sets S_1,...,S_m.
struct BoundParams {
    std::vector<Int> exponents;
    Int multiplicity_target = 1;
    std::vector<Int> set_sizes;

    BoundParams(std::vector<Int> exps, Int r, std::vector<Int> sizes);

    std::size_t vars() const { return exponents.size(); }
};

/// Weight tuple (u_1,...,u_r); member of A(i_m, r, s_m) when
/// u_1+...+u_r <= s_m and u_1 + 2 u_2 + ... + r u_r <= i_m.
struct CompositionTuple {
    std::vector<Int> weights;

    friend bool operator==(const CompositionTuple&, const CompositionTuple&) = default;
};

/// Product s_1 ... s_m of the set sizes.
Integer grid_size(const BoundParams& params);

/// True when sum_t floor(i_t / s_t) >= r: every grid point can be a zero of
/// multiplicity >= r, and all bounds collapse to the grid size.
bool saturated(const BoundParams& params);

/// One-variable bound min(floor(i1 / r), s1).
Int d_base(Int i1, Int r, Int s1);

/// All tuples of A(i_m, r, s_m) in ascending lexicographic order.
std::vector<CompositionTuple> enumerate_A(Int i_m, Int r, Int s_m);

/// Recursive upper bound D(i_1,...,i_m, r, s_1,...,s_m) on the number of grid
/// zeros of multiplicity at least r, for leading monomials ordered
/// lexicographically with X_m < ... < X_1. Accepts any non-negative
/// exponents; saturated inputs return the full grid size.
Integer d_recursive(const BoundParams& params);

struct DRecursiveDiagnostics {
    Integer value;
    CompositionTuple argmax;  // lexicographically smallest maximizing tuple
};

/// Same value as d_recursive plus the top-level maximizing weight tuple.
DRecursiveDiagnostics d_recursive_with_argmax(const BoundParams& params);

/// Sum-of-multiplicities bound i_1 s_2...s_m + s_1 i_2 s_3...s_m + ... .
Integer sz_sum_bound(const BoundParams& params);

/// min(sz_sum_bound / r, s_1...s_m) as an exact rational; floor at display.
Rational sz_mult_bound(const BoundParams& params);

/// s_1...s_m - (s_1-i_1)...(s_m-i_m); requires i_t < s_t for all t.
Integer footprint_bound(const BoundParams& params);

enum class ConditionAClause { none, a1, a2, a3 };

/// Outcome of the Condition A check. On failure `violated` names the first
/// clause that fails, with witnesses: for A.1 `ell` is the 1-based variable
/// index; for A.2 the pair (ell, s); for A.3 ell = r and the failing s.
struct ConditionAResult {
    bool satisfied = false;
    ConditionAClause violated = ConditionAClause::none;
    Int ell = 0;
    Int s = 0;

    explicit operator bool() const { return satisfied; }
    std::string describe() const;  // e.g. "A.3, s=1"
};

/// Condition A: (A.1) 0 <= i_t <= s_t for t < m and i_m < r s_m;
/// (A.2) s prod_{t<=m-2}(s_t - i_t/l) <= l prod_{t<=m-2}(s_t - i_t/s) for
/// l = 2..r, s = 1..l-1; (A.3) the same with products over t <= m-1 and
/// l = r. All comparisons exact. Requires m >= 2 (for m = 2 clause A.2 is
/// vacuous).
ConditionAResult condition_a(const BoundParams& params);

/// Condition A evaluated on rational exponents (the clauses only involve
/// ratios, so the definition extends verbatim). Used for surface sampling.
ConditionAResult condition_a_rational(const std::vector<Rational>& exponents, Int r,
                                      const std::vector<Int>& set_sizes);

class ConditionAError : public std::domain_error {
public:
    explicit ConditionAError(const ConditionAResult& res)
        : std::domain_error("condition A fails (" + res.describe() + ")"), result(res) {}
    ConditionAResult result;
};

/// s_1...s_m - (s_1 - i_1/r)...(s_m - i_m/r), valid under Condition A
/// (throws ConditionAError otherwise). Under Condition A the value dominates
/// d_recursive and stays below min(sz_mult_bound, grid size).
Rational closed_form_bound(const BoundParams& params);

/// The same expression with no Condition A check, for exploratory use; the
/// value is NOT an upper bound on d_recursive outside the Condition A region.
Rational closed_form_bound_unchecked(const BoundParams& params);

/// Sufficient criterion for Condition A: i_m < r s_m and, for t < m,
/// i_t <= s_t min{ (r^{1/(m-1)}-1)/(r^{1/(m-1)}-1/r),
///                 (2^{1/(m-2)}-1)/(2^{1/(m-2)}-1/2) }.
/// Root comparisons are decided exactly in integer arithmetic. Requires
/// m >= 3; for m = 2 use condition_a directly (it reduces to
/// i_1 <= r/(r+1) s_1, i_2 < r s_2).
bool condition_a_sufficient(const BoundParams& params);

/// Condition A for r = 2 and all set sizes equal to q, via the elementary
/// symmetric polynomials of I_t = i_t/q:
///   sum_{t=1}^{m-1} (-1)^{t+1} ((2^{t+1}-1)/2^t) e_t(I_1,...,I_{m-1}) <= 1,
/// I_m < 2, and I_t <= 1 for t < m. Agrees with condition_a on every input.
bool condition_a_r2_equal_sizes(const std::vector<Int>& exponents, Int q);

/// Exhaustively verifies Condition A on every componentwise-smaller exponent
/// vector (test helper, desk scale).
bool condition_a_monotone_check(const BoundParams& params);

/// i_t <= r/(r+1) s_t for t < m, exact comparison. For r >= 2 this is
/// necessary for Condition A.
bool necessary_bound_check(const BoundParams& params);

enum class TwoVarCase { c1, c2, c3, c4 };

std::string to_string(TwoVarCase c);  // "C.1" .. "C.4"

struct TwoVarBound {
    Rational value;
    TwoVarCase which = TwoVarCase::c4;
    Int k = 0;  // band parameter for C.1-C.3; 0 for C.4
};

/// Closed-formula two-variable bounds. For some k in 1..r-1:
///   C.1  s2 i1/r + (i2/r)(i1/(r-k))
///        when (r-k) r/(r+1) s1 <= i1 < (r-k) s1 and 0 <= i2 < k s2
///   C.2  s2 i1/r + ((k+1)s2 - i2)(i1/(r-k) - i1/r) + (i2 - k s2)(s1 - i1/r)
///        same i1 band, k s2 <= i2 < (k+1) s2
///   C.3  s2 i1/r + (i2/(k+1))(s1 - i1/r)
///        when (r-k-1) s1 <= i1 < (r-k) r/(r+1) s1 and 0 <= i2 < (k+1) s2
/// and, with exact equality to d_recursive:
///   C.4  s2 floor(i1/r) + i2 (s1 - floor(i1/r))
///        when s1 (r-1) <= i1 < s1 r and 0 <= i2 < s2.
/// The bands are disjoint; throws std::domain_error when no case applies.
TwoVarBound two_var_bound(Int i1, Int i2, Int r, Int s1, Int s2);

/// s1 s2 - (s1 - i1/r)(s2 - i2/r), valid for 0 <= i1 <= r/(r+1) s1 and
/// 0 <= i2 < r s2; equals closed_form_bound for m = 2.
Rational two_var_small_bound(Int i1, Int i2, Int r, Int s1, Int s2);

namespace detail {

/// Plain unmemoized transcription of the recursive definition of D; kept as
/// the reference implementation for testing the dynamic-programming version.
Integer d_recursive_reference(const BoundParams& params);

/// Condition A with the A.2 range weakened to l = 2..r-1 (the dropped l = r
/// rows are implied by A.3); used to verify that claim empirically.
ConditionAResult condition_a_weakened_a2(const BoundParams& params);

}  // namespace detail

}  // namespace multizero::bounds

#endif
