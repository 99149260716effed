#ifndef MULTIZERO_ORACLE_HPP
#define MULTIZERO_ORACLE_HPP

#include <multizero/bounds.hpp>
#include <multizero/ffpoly.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace multizero::oracle {

using Int = long;

/// Per-variable multiplicity profiles r_v^(u): exactly s_u entries each
/// (zeros allowed), canonically sorted non-increasing. The heavy-point count
/// below only depends on the multisets, which makes the canonical order a
/// valid search-space reduction.
struct ProfileAssignment {
    std::vector<std::vector<Int>> profiles;

    std::vector<Int> exponent_sums() const;
    void canonicalize();
    std::string str() const;  // "(2,2,2,2,0)x(1,1,1,1,1)"
};

/// #{(j_1,...,j_m) : profiles[1][j_1] + ... + profiles[m][j_m] >= r},
/// computed by convolving the per-variable value distributions with sums
/// capped at r. Pure combinatorics, no field arithmetic.
Int count_heavy_points(const ProfileAssignment& assignment, Int r);

/// Partitions of n into at most k parts, each returned as a non-increasing
/// tuple padded with zeros to exactly k entries, in ascending lexicographic
/// order.
std::vector<std::vector<Int>> partitions_into_at_most(Int n, Int k);

struct SearchResult {
    Int count = 0;
    ProfileAssignment witness;
};

/// Maximizes count_heavy_points over all canonical profile assignments with
/// per-variable sums equal to the given exponents. Ties resolve to the
/// lexicographically smallest concatenated witness, so results are
/// reproducible. The parallel version splits over the first variable's
/// partition list and merges deterministically.
SearchResult lower_bound_search(const std::vector<Int>& exponents, Int r,
                                const std::vector<Int>& sizes);
SearchResult lower_bound_search_serial(const std::vector<Int>& exponents, Int r,
                                       const std::vector<Int>& sizes);

/// gaps[i2 - i2_lo][i1 - i1_lo] = d_recursive(i1, i2, r, s) - lower bound;
/// never negative. Two-variable replication path.
std::vector<std::vector<Int>> gap_table(Int r, const std::vector<Int>& sizes, Int i1_lo,
                                        Int i1_hi, Int i2_lo, Int i2_hi);

/// d_recursive minus the search lower bound for a single tuple, any m.
Int gap_value(const std::vector<Int>& exponents, Int r, const std::vector<Int>& sizes);

struct CheckRecord {
    std::string name;
    std::string params;
    bool pass = false;
    std::string witness;  // first counterexample, or "-"
};

/// One line per check: `check=<name> params="..." status=pass|fail
/// witness="..."`.
std::string to_line(const CheckRecord& record);

struct Report {
    std::vector<CheckRecord> records;

    bool all_pass() const;
    std::size_t failures() const;
};

struct VerifyOptions {
    bool empty_sweep = false;  // run nothing, report nothing
    std::uint64_t seed = ffpoly::kDefaultSeed;
};

/// Runs every library invariant over desk-scale sweeps and randomized
/// corpora: the recursive bound against the counting oracle, closed forms
/// against the recursion, the Condition A family, the multiplicity engines
/// against each other, and the search lower bounds. Failures are data in the
/// report, not exceptions.
Report verify_all(const VerifyOptions& options);

}  // namespace multizero::oracle

#endif
