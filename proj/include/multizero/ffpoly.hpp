#ifndef MULTIZERO_FFPOLY_HPP
#define MULTIZERO_FFPOLY_HPP

#include <multizero/rational.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace multizero::ffpoly {

using Int = long;

/// Prime field GF(p); primality is checked at construction by trial
/// division (intended for desk-scale moduli).
class PrimeField {
public:
    explicit PrimeField(Int p);

    Int modulus() const { return p_; }
    Int normalize(Int v) const {
        Int r = v % p_;
        return r < 0 ? r + p_ : r;
    }
    Int add(Int a, Int b) const { return (a + b) % p_; }
    Int sub(Int a, Int b) const { return normalize(a - b); }
    Int mul(Int a, Int b) const { return (a * b) % p_; }
    Int neg(Int a) const { return a == 0 ? 0 : p_ - a; }
    Int pow(Int a, Int e) const;
    Int inv(Int a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    Int p_;
};

using ExponentVec = std::vector<Int>;

/// Multivariate polynomial over a prime field, stored as a map from exponent
/// vector to nonzero coefficient. The map's lexicographic key order makes the
/// largest key the leading monomial for the lex order with X_m < ... < X_1.
class SparsePolynomial {
public:
    SparsePolynomial(PrimeField field, int nvars);

    static SparsePolynomial constant(PrimeField field, int nvars, Int c);
    static SparsePolynomial variable(PrimeField field, int nvars, int index);

    const PrimeField& field() const { return field_; }
    int vars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExponentVec, Int>& terms() const { return terms_; }

    /// Adds c * X^exp, accumulating mod p and dropping zero coefficients.
    void add_term(const ExponentVec& exp, Int c);
    Int coefficient(const ExponentVec& exp) const;

    ExponentVec leading_exponent() const;  // throws on the zero polynomial
    Int total_degree() const;              // throws on the zero polynomial
    Int degree_in(int var) const;          // 0 for the zero polynomial

    Int evaluate(const std::vector<Int>& point) const;

    /// F(X_1 + a_1, ..., X_m + a_m).
    SparsePolynomial translate(const std::vector<Int>& a) const;

    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial scaled(Int c) const;

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    PrimeField field_;
    int nvars_;
    std::map<ExponentVec, Int> terms_;
};

/// k-th Hasse derivative: the coefficient of Z^k in F(X+Z), i.e. the sum over
/// terms c X^e of c * prod_t binom(e_t, k_t) X^{e-k} with binomials reduced
/// mod p.
SparsePolynomial hasse_derivative(const SparsePolynomial& F, const ExponentVec& k);

/// Multiplicity of F at a: the minimum total degree of F(X+a), equivalently
/// the smallest |k| with F^(k)(a) != 0. std::nullopt encodes the infinite
/// multiplicity of the zero polynomial.
std::optional<Int> multiplicity(const SparsePolynomial& F, const std::vector<Int>& a);

/// Multiplicity computed directly from the definition by scanning Hasse
/// derivatives in order of total degree; retained as the independent route
/// against which `multiplicity` is validated.
std::optional<Int> multiplicity_by_derivatives(const SparsePolynomial& F,
                                               const std::vector<Int>& a);

/// Product of univariate linear factors
/// prod_u prod_v (X_u - alpha_v^(u))^{r_v^(u)}: for each variable a list of
/// (point, multiplicity) pairs with pairwise distinct points.
struct FactorSpec {
    std::vector<std::vector<std::pair<Int, Int>>> factors;

    std::size_t vars() const { return factors.size(); }
    /// Per-variable multiplicity sums = the lex leading exponent of the
    /// expanded product.
    std::vector<Int> leading_exponent() const;
    void validate() const;
};

SparsePolynomial build_product(const FactorSpec& spec, const PrimeField& field);

/// Multiplicity of the product polynomial at a point, without expanding it:
/// the sum over variables of the multiplicity attached to the matching point
/// (0 when the coordinate is not among the spec's points).
Int product_multiplicity(const FactorSpec& spec, const std::vector<Int>& point);

using Grid = std::vector<std::vector<Int>>;

/// Grid {0..s_1-1} x ... x {0..s_m-1} inside the field.
Grid prefix_grid(const PrimeField& field, const std::vector<Int>& sizes);

/// Sum of multiplicities of F over all grid points (OpenMP kernel). Throws
/// on the zero polynomial, whose sum would be infinite.
Integer grid_multiplicity_sum(const SparsePolynomial& F, const Grid& grid);
Integer grid_multiplicity_sum_serial(const SparsePolynomial& F, const Grid& grid);

/// Number of grid points with multiplicity >= r (OpenMP kernel). Throws on
/// the zero polynomial.
Int grid_count_mult_at_least(const SparsePolynomial& F, const Grid& grid, Int r);
Int grid_count_mult_at_least_serial(const SparsePolynomial& F, const Grid& grid, Int r);

/// Canonical text form: terms in descending lex order, each
/// "c*X1^e1*X2^e2" with only the positive exponents listed; "0" for the zero
/// polynomial. Example: "3*X1^2*X2^1 + 5".
std::string to_string(const SparsePolynomial& F);

/// "GF(p) <poly>" with the same term syntax.
std::string to_string_with_field(const SparsePolynomial& F);

/// Parses the canonical text form. Accepts whitespace, omitted coefficient
/// (X1^2), omitted exponent (X1) and repeated mention of a variable within a
/// term (exponents add).
SparsePolynomial parse_polynomial(const std::string& text, const PrimeField& field, int nvars);

/// Parses "GF(p) <poly>"; the variable count is inferred from the largest
/// variable index mentioned (at least 1).
SparsePolynomial parse_polynomial_with_field(const std::string& text);

/// Fixed seed for the randomized corpora; override with --seed in the CLI.
inline constexpr std::uint64_t kDefaultSeed = 0x5eed0fab5ULL;

/// Uniform sparse polynomial: up to max_terms monomials with per-variable
/// degree <= max_degree and nonzero coefficients (coincident monomials may
/// cancel; the result is patched to stay nonzero).
SparsePolynomial random_sparse_polynomial(const PrimeField& field, int nvars, Int max_degree,
                                          int max_terms, std::mt19937_64& rng);

/// Random factor specification over the prefix grid with the given leading
/// exponent: for each variable, i_u is split uniformly into s_u non-negative
/// parts attached to the points 0..s_u-1.
FactorSpec random_factor_spec(const std::vector<Int>& exponents, const std::vector<Int>& sizes,
                              std::mt19937_64& rng);

}  // namespace multizero::ffpoly

#endif
