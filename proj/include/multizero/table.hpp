#ifndef MULTIZERO_TABLE_HPP
#define MULTIZERO_TABLE_HPP

#include <multizero/bounds.hpp>

#include <optional>
#include <string>
#include <vector>

namespace multizero::cli {

using Int = long;

enum class TableKind { d, sz, closed_floor, gap };
enum class TableFormat { csv, markdown, json };

/// Declarative description of a two-variable table sweep. The defaults
/// replicate the reference tables for r = 3, s = (5,5): cells over
/// 0 <= i1, i2 <= 14 with the saturated region left blank, and the sz table
/// indexed by i1 + i2 in 0..18.
struct TableSpec {
    TableKind kind = TableKind::d;
    Int r = 3;
    std::vector<Int> sizes{5, 5};
    Int i1_lo = 0, i1_hi = 14;
    Int i2_lo = 0, i2_hi = 14;
    Int sum_lo = 0, sum_hi = 18;  // used by the sum-indexed sz layout
    TableFormat format = TableFormat::csv;
    bool blank_saturated = true;
    bool annotate = false;  // closed_floor only: flag cells below D / below the search bound
};

/// Annotation classes for closed_floor cells.
inline constexpr int kAnnotationPlain = 0;
inline constexpr int kAnnotationBelowD = 1;           // value < d_recursive
inline constexpr int kAnnotationBelowLowerBound = 2;  // value < search lower bound

struct TableResult {
    TableSpec spec;
    bool one_dimensional = false;

    // 2-D kinds: cells[i2 - i2_lo][i1 - i1_lo]; nullopt = blank (saturated)
    std::vector<std::vector<std::optional<Int>>> cells;
    std::vector<std::vector<int>> annotations;  // present when spec.annotate

    // sum-indexed sz layout
    std::vector<Int> sums;
    std::vector<Int> sum_values;
};

/// Fills the table cells (in parallel; assembly is ordered and
/// deterministic). kind=sz with equal sizes produces the sum-indexed layout;
/// all other kinds produce the 2-D grid.
TableResult compute_table(const TableSpec& spec);

std::string render(const TableResult& table);
std::string render_csv(const TableResult& table);
std::string render_markdown(const TableResult& table);
std::string render_json(const TableResult& table);

std::string to_string(TableKind kind);

/// Condition A sampling over the unit box: emits one CSV row
/// I1,...,I_{m-1},satisfied per lattice point of the given step, where
/// `satisfied` reports the Condition A inequalities for exponents i_t = I_t q
/// (and i_m = 0) over equal set sizes q. For r = 2 the test is the
/// elementary-symmetric-polynomial boundary surface.
struct SurfaceSpec {
    Int r = 2;
    Int m = 3;
    Int q = 5;
    Rational step = Rational(1, 16);
};

std::string surface_csv(const SurfaceSpec& spec);

/// "25", or "70/3 (floor 23)" for non-integers.
std::string format_value(const Rational& value);

}  // namespace multizero::cli

#endif
