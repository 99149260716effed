#include <doctest.h>

#include <multizero/ffpoly.hpp>

#include <random>

using namespace multizero;
using namespace multizero::ffpoly;

namespace {

SparsePolynomial univariate(const PrimeField& f, std::vector<std::pair<Int, Int>> coeffs) {
    // coeffs as (exponent, coefficient)
    SparsePolynomial p(f, 1);
    for (const auto& [e, c] : coeffs) p.add_term({e}, c);
    return p;
}

}  // namespace

TEST_CASE("prime field construction and arithmetic") {
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
    const PrimeField f7(7);
    CHECK(f7.normalize(-1) == 6);
    CHECK(f7.mul(3, 5) == 1);
    CHECK(f7.pow(3, 6) == 1);
    CHECK(f7.inv(3) == 5);
    CHECK_THROWS_AS(f7.inv(0), std::domain_error);
    CHECK(PrimeField(65537).modulus() == 65537);
}

TEST_CASE("polynomial term bookkeeping") {
    const PrimeField f7(7);
    SparsePolynomial p(f7, 2);
    CHECK(p.is_zero());
    p.add_term({1, 0}, 3);
    p.add_term({1, 0}, 4);  // cancels mod 7
    CHECK(p.is_zero());
    p.add_term({2, 1}, 9);
    CHECK(p.coefficient({2, 1}) == 2);
    CHECK(p.leading_exponent() == ExponentVec{2, 1});
    CHECK_THROWS_AS(p.add_term({1}, 1), std::invalid_argument);
}

TEST_CASE("lex leading monomial has X1 most significant") {
    const PrimeField f7(7);
    SparsePolynomial p(f7, 2);
    p.add_term({1, 5}, 1);
    p.add_term({2, 0}, 1);
    CHECK(p.leading_exponent() == ExponentVec{2, 0});
}

TEST_CASE("hasse derivative") {
    const PrimeField f7(7);
    const auto x2 = univariate(f7, {{2, 1}});  // X^2
    CHECK(hasse_derivative(x2, {2}) == univariate(f7, {{0, 1}}));
    CHECK(hasse_derivative(x2, {1}) == univariate(f7, {{1, 2}}));

    // over GF(2), (X+Z)^2 = X^2 + Z^2: the first-order derivative vanishes
    const PrimeField f2(2);
    const auto x2_gf2 = univariate(f2, {{2, 1}});
    CHECK(hasse_derivative(x2_gf2, {1}).is_zero());
    CHECK(hasse_derivative(x2_gf2, {2}) == univariate(f2, {{0, 1}}));

    const SparsePolynomial zero(f7, 1);
    CHECK(hasse_derivative(zero, {3}).is_zero());

    CHECK_THROWS_AS(hasse_derivative(x2, {1, 1}), std::invalid_argument);
}

TEST_CASE("multiplicity by translation") {
    const PrimeField f7(7);
    CHECK(multiplicity(univariate(f7, {{2, 1}}), {0}) == 2);

    // (X1-1)(X2-1): expands to X1 X2 - X1 - X2 + 1
    SparsePolynomial p(f7, 2);
    p.add_term({1, 1}, 1);
    p.add_term({1, 0}, 6);
    p.add_term({0, 1}, 6);
    p.add_term({0, 0}, 1);
    CHECK(multiplicity(p, {1, 1}) == 2);
    CHECK(multiplicity(p, {1, 0}) == 1);
    CHECK(multiplicity(p, {0, 0}) == 0);

    SparsePolynomial linear(f7, 2);
    linear.add_term({1, 0}, 1);
    linear.add_term({0, 1}, 1);
    CHECK(multiplicity(linear, {0, 0}) == 1);
    CHECK(multiplicity(linear, {1, 1}) == 0);

    const SparsePolynomial zero(f7, 2);
    CHECK(multiplicity(zero, {0, 0}) == std::nullopt);
    CHECK(multiplicity_by_derivatives(zero, {0, 0}) == std::nullopt);
}

TEST_CASE("translate evaluates consistently") {
    const PrimeField f7(7);
    std::mt19937_64 rng(11);
    for (int n = 0; n < 20; ++n) {
        const auto F = random_sparse_polynomial(f7, 2, 5, 10, rng);
        const std::vector<Int> a{static_cast<Int>(n % 7), static_cast<Int>((3 * n) % 7)};
        const auto G = F.translate(a);
        // G(0) = F(a), G(x - a) = F(x)
        CHECK(G.evaluate({0, 0}) == F.evaluate(a));
        CHECK(G.translate({f7.neg(a[0]), f7.neg(a[1])}) == F);
    }
}

TEST_CASE("factor specification expansion") {
    const PrimeField f7(7);

    FactorSpec single;
    single.factors = {{{0, 1}}};
    const auto p_single = build_product(single, f7);
    CHECK(p_single == univariate(f7, {{1, 1}}));

    // (X-1)^2 (X-2)^2 = X^4 + X^3 + 6X^2 + 2X + 4 over GF(7)
    FactorSpec two;
    two.factors = {{{1, 2}, {2, 2}}};
    CHECK(build_product(two, f7) ==
          univariate(f7, {{4, 1}, {3, 1}, {2, 6}, {1, 2}, {0, 4}}));

    FactorSpec empty;
    empty.factors = {{}, {}};
    CHECK(build_product(empty, f7) == SparsePolynomial::constant(f7, 2, 1));

    FactorSpec dup;
    dup.factors = {{{1, 1}, {1, 2}}};
    CHECK_THROWS_AS(build_product(dup, f7), std::invalid_argument);
}

TEST_CASE("product multiplicity without expansion") {
    FactorSpec spec;
    spec.factors = {{{0, 2}, {1, 2}, {2, 2}, {3, 2}, {4, 0}},
                    {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}};
    CHECK(product_multiplicity(spec, {0, 0}) == 3);
    CHECK(product_multiplicity(spec, {4, 0}) == 1);
    // a coordinate outside the listed points contributes nothing
    CHECK(product_multiplicity(spec, {6, 0}) == 1);
    CHECK(product_multiplicity(spec, {6, 6}) == 0);

    FactorSpec zeros;
    zeros.factors = {{{0, 0}}, {{0, 0}}};
    CHECK(product_multiplicity(zeros, {0, 0}) == 0);
}

TEST_CASE("grid kernels") {
    const PrimeField f7(7);
    SparsePolynomial x1(f7, 1);
    x1.add_term({1}, 1);
    const Grid small{{0, 1, 2}};
    CHECK(grid_multiplicity_sum(x1, small) == 1);
    CHECK(grid_count_mult_at_least(x1, small, 1) == 1);

    const auto one = SparsePolynomial::constant(f7, 1, 1);
    CHECK(grid_multiplicity_sum(one, small) == 0);
    CHECK(grid_count_mult_at_least(one, small, 1) == 0);
    CHECK(grid_count_mult_at_least(one, small, 0) == 3);

    const SparsePolynomial zero(f7, 1);
    CHECK_THROWS_AS(grid_multiplicity_sum(zero, small), std::domain_error);
    CHECK_THROWS_AS(grid_count_mult_at_least(zero, small, 1), std::domain_error);

    // the 20-zero example: (X1-a)^2 over four points times all (X2-b)
    FactorSpec spec;
    spec.factors = {{{0, 2}, {1, 2}, {2, 2}, {3, 2}},
                    {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}};
    const auto F = build_product(spec, f7);
    const auto grid = prefix_grid(f7, {5, 5});
    CHECK(grid_count_mult_at_least(F, grid, 3) == 20);
    CHECK(grid_count_mult_at_least_serial(F, grid, 3) == 20);
    CHECK(grid_multiplicity_sum(F, grid) == grid_multiplicity_sum_serial(F, grid));
}

TEST_CASE("parallel kernels match serial references") {
    const PrimeField f11(11);
    std::mt19937_64 rng(3);
    const auto grid = prefix_grid(f11, {6, 6});
    for (int n = 0; n < 10; ++n) {
        const auto F = random_sparse_polynomial(f11, 2, 8, 15, rng);
        for (Int r = 0; r <= 3; ++r)
            CHECK(grid_count_mult_at_least(F, grid, r) ==
                  grid_count_mult_at_least_serial(F, grid, r));
        CHECK(grid_multiplicity_sum(F, grid) == grid_multiplicity_sum_serial(F, grid));
    }
}

TEST_CASE("text format round trip") {
    const PrimeField f7(7);
    std::mt19937_64 rng(5);
    for (int n = 0; n < 40; ++n) {
        const int m = 1 + n % 3;
        const auto F = random_sparse_polynomial(f7, m, 6, 12, rng);
        CHECK(parse_polynomial(to_string(F), f7, m) == F);
        const auto printed = to_string_with_field(F);
        const auto back = parse_polynomial_with_field(printed);
        // inferred variable count may be smaller; compare via re-printing
        CHECK(to_string_with_field(back) == printed);
    }
}

TEST_CASE("text format grammar") {
    const PrimeField f7(7);
    CHECK(to_string(SparsePolynomial(f7, 2)) == "0");
    SparsePolynomial p(f7, 2);
    p.add_term({2, 1}, 3);
    p.add_term({0, 0}, 5);
    CHECK(to_string(p) == "3*X1^2*X2^1 + 5");
    CHECK(to_string_with_field(p) == "GF(7) 3*X1^2*X2^1 + 5");

    CHECK(parse_polynomial("3*X1^2*X2 + 5", f7, 2) == p);
    CHECK(parse_polynomial("  3 * X1^2 * X2 ^ 1  +  5 ", f7, 2) == p);
    // coefficients lead a term; a trailing one is rejected
    CHECK_THROWS_AS(parse_polynomial("X1^2*X2*3 + 5", f7, 2), std::invalid_argument);

    SparsePolynomial q(f7, 1);
    q.add_term({2}, 1);
    CHECK(parse_polynomial("X1^2", f7, 1) == q);
    CHECK(parse_polynomial("X1*X1", f7, 1) == q);

    CHECK_THROWS_AS(parse_polynomial("", f7, 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("3*X9", f7, 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("3*", f7, 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("3 banana", f7, 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial_with_field("7 1*X1^1"), std::invalid_argument);
}
