#include <multizero/ffpoly.hpp>
#include <multizero/threads.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace multizero::ffpoly {

namespace {

Int binom_mod(Int n, Int k, Int p) {
    if (k < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    Integer r = b % p;
    return r.get_si();
}

void check_dim(std::size_t have, std::size_t want, const char* what) {
    if (have != want) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

PrimeField::PrimeField(Int p) : p_(p) {
    if (p < 2) throw std::invalid_argument("PrimeField: modulus must be >= 2");
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("PrimeField: modulus is not prime");
}

Int PrimeField::pow(Int a, Int e) const {
    if (e < 0) throw std::invalid_argument("PrimeField::pow: negative exponent");
    Int base = normalize(a), out = 1;
    while (e > 0) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

Int PrimeField::inv(Int a) const {
    const Int v = normalize(a);
    if (v == 0) throw std::domain_error("PrimeField::inv: division by zero");
    return pow(v, p_ - 2);
}

SparsePolynomial::SparsePolynomial(PrimeField field, int nvars)
    : field_(field), nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("SparsePolynomial: need at least one variable");
}

SparsePolynomial SparsePolynomial::constant(PrimeField field, int nvars, Int c) {
    SparsePolynomial f(field, nvars);
    f.add_term(ExponentVec(static_cast<std::size_t>(nvars), 0), c);
    return f;
}

SparsePolynomial SparsePolynomial::variable(PrimeField field, int nvars, int index) {
    if (index < 0 || index >= nvars)
        throw std::invalid_argument("SparsePolynomial::variable: index out of range");
    SparsePolynomial f(field, nvars);
    ExponentVec e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    f.add_term(e, 1);
    return f;
}

void SparsePolynomial::add_term(const ExponentVec& exp, Int c) {
    check_dim(exp.size(), static_cast<std::size_t>(nvars_), "add_term");
    for (Int e : exp)
        if (e < 0) throw std::invalid_argument("add_term: negative exponent");
    const Int v = field_.normalize(c);
    if (v == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, v);
    if (!inserted) {
        it->second = field_.add(it->second, v);
        if (it->second == 0) terms_.erase(it);
    }
}

Int SparsePolynomial::coefficient(const ExponentVec& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

ExponentVec SparsePolynomial::leading_exponent() const {
    if (terms_.empty()) throw std::domain_error("leading_exponent: zero polynomial");
    return terms_.rbegin()->first;
}

Int SparsePolynomial::total_degree() const {
    if (terms_.empty()) throw std::domain_error("total_degree: zero polynomial");
    Int deg = 0;
    for (const auto& [e, c] : terms_) {
        Int s = 0;
        for (Int x : e) s += x;
        deg = std::max(deg, s);
    }
    return deg;
}

Int SparsePolynomial::degree_in(int var) const {
    Int deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[static_cast<std::size_t>(var)]);
    return deg;
}

Int SparsePolynomial::evaluate(const std::vector<Int>& point) const {
    check_dim(point.size(), static_cast<std::size_t>(nvars_), "evaluate");
    Int acc = 0;
    for (const auto& [e, c] : terms_) {
        Int v = c;
        for (int t = 0; t < nvars_; ++t)
            v = field_.mul(v, field_.pow(point[static_cast<std::size_t>(t)],
                                         e[static_cast<std::size_t>(t)]));
        acc = field_.add(acc, v);
    }
    return acc;
}

SparsePolynomial SparsePolynomial::translate(const std::vector<Int>& a) const {
    check_dim(a.size(), static_cast<std::size_t>(nvars_), "translate");
    SparsePolynomial out(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        // expand c * prod_t (X_t + a_t)^{e_t}
        std::vector<std::pair<ExponentVec, Int>> acc;
        acc.emplace_back(ExponentVec{}, c);
        for (int t = 0; t < nvars_; ++t) {
            const Int et = e[static_cast<std::size_t>(t)];
            const Int at = field_.normalize(a[static_cast<std::size_t>(t)]);
            std::vector<Int> row(static_cast<std::size_t>(et) + 1);
            for (Int j = 0; j <= et; ++j)
                row[static_cast<std::size_t>(j)] =
                    field_.mul(binom_mod(et, j, field_.modulus()), field_.pow(at, et - j));
            std::vector<std::pair<ExponentVec, Int>> next;
            next.reserve(acc.size() * row.size());
            for (const auto& [vec, pc] : acc) {
                for (Int j = 0; j <= et; ++j) {
                    const Int w = field_.mul(pc, row[static_cast<std::size_t>(j)]);
                    if (w == 0) continue;
                    ExponentVec nv = vec;
                    nv.push_back(j);
                    next.emplace_back(std::move(nv), w);
                }
            }
            acc.swap(next);
        }
        for (auto& [vec, pc] : acc) out.add_term(vec, pc);
    }
    return out;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    if (!(field_ == o.field_) || nvars_ != o.nvars_)
        throw std::invalid_argument("polynomial +: incompatible operands");
    SparsePolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    if (!(field_ == o.field_) || nvars_ != o.nvars_)
        throw std::invalid_argument("polynomial -: incompatible operands");
    SparsePolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, field_.neg(c));
    return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    if (!(field_ == o.field_) || nvars_ != o.nvars_)
        throw std::invalid_argument("polynomial *: incompatible operands");
    SparsePolynomial out(field_, nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExponentVec e(static_cast<std::size_t>(nvars_));
            for (int t = 0; t < nvars_; ++t)
                e[static_cast<std::size_t>(t)] =
                    ea[static_cast<std::size_t>(t)] + eb[static_cast<std::size_t>(t)];
            out.add_term(e, field_.mul(ca, cb));
        }
    }
    return out;
}

SparsePolynomial SparsePolynomial::scaled(Int c) const {
    SparsePolynomial out(field_, nvars_);
    for (const auto& [e, v] : terms_) out.add_term(e, field_.mul(field_.normalize(c), v));
    return out;
}

SparsePolynomial hasse_derivative(const SparsePolynomial& F, const ExponentVec& k) {
    check_dim(k.size(), static_cast<std::size_t>(F.vars()), "hasse_derivative");
    for (Int v : k)
        if (v < 0) throw std::invalid_argument("hasse_derivative: negative order");
    SparsePolynomial out(F.field(), F.vars());
    const Int p = F.field().modulus();
    for (const auto& [e, c] : F.terms()) {
        Int coeff = c;
        ExponentVec shifted(e.size());
        bool alive = true;
        for (std::size_t t = 0; t < e.size() && alive; ++t) {
            if (e[t] < k[t]) {
                alive = false;
                break;
            }
            coeff = F.field().mul(coeff, binom_mod(e[t], k[t], p));
            shifted[t] = e[t] - k[t];
        }
        if (alive && coeff != 0) out.add_term(shifted, coeff);
    }
    return out;
}

std::optional<Int> multiplicity(const SparsePolynomial& F, const std::vector<Int>& a) {
    check_dim(a.size(), static_cast<std::size_t>(F.vars()), "multiplicity");
    if (F.is_zero()) return std::nullopt;
    const SparsePolynomial g = F.translate(a);
    Int best = -1;
    for (const auto& [e, c] : g.terms()) {
        Int s = 0;
        for (Int x : e) s += x;
        if (best < 0 || s < best) best = s;
    }
    return best;
}

namespace {

// All k >= 0 with |k| == order and k_t <= cap_t, ascending lex.
template <class F>
bool visit_orders(const std::vector<Int>& cap, Int order, F&& f) {
    ExponentVec k(cap.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos, Int left) -> bool {
        if (pos + 1 == k.size()) {
            if (left > cap[pos]) return false;
            k[pos] = left;
            const bool hit = f(k);
            k[pos] = 0;
            return hit;
        }
        const Int top = std::min(left, cap[pos]);
        for (Int v = 0; v <= top; ++v) {
            k[pos] = v;
            if (self(self, pos + 1, left - v)) {
                k[pos] = 0;
                return true;
            }
        }
        k[pos] = 0;
        return false;
    };
    return rec(rec, 0, order);
}

}  // namespace

std::optional<Int> multiplicity_by_derivatives(const SparsePolynomial& F,
                                               const std::vector<Int>& a) {
    check_dim(a.size(), static_cast<std::size_t>(F.vars()), "multiplicity_by_derivatives");
    if (F.is_zero()) return std::nullopt;
    std::vector<Int> cap(static_cast<std::size_t>(F.vars()));
    for (int t = 0; t < F.vars(); ++t) cap[static_cast<std::size_t>(t)] = F.degree_in(t);
    const Int deg = F.total_degree();
    for (Int order = 0; order <= deg; ++order) {
        const bool hit = visit_orders(cap, order, [&](const ExponentVec& k) {
            return hasse_derivative(F, k).evaluate(a) != 0;
        });
        if (hit) return order;
    }
    // unreachable: some derivative of total order deg is a nonzero constant
    throw std::logic_error("multiplicity_by_derivatives: no nonzero derivative found");
}

std::vector<Int> FactorSpec::leading_exponent() const {
    std::vector<Int> lead;
    lead.reserve(factors.size());
    for (const auto& var : factors) {
        Int sum = 0;
        for (const auto& [pt, mult] : var) sum += mult;
        lead.push_back(sum);
    }
    return lead;
}

void FactorSpec::validate() const {
    if (factors.empty()) throw std::invalid_argument("FactorSpec: need at least one variable");
    for (const auto& var : factors) {
        for (const auto& [pt, mult] : var) {
            if (mult < 0) throw std::invalid_argument("FactorSpec: negative multiplicity");
        }
        for (std::size_t a = 0; a < var.size(); ++a)
            for (std::size_t b = a + 1; b < var.size(); ++b)
                if (var[a].first == var[b].first)
                    throw std::invalid_argument("FactorSpec: duplicate point within a variable");
    }
}

SparsePolynomial build_product(const FactorSpec& spec, const PrimeField& field) {
    spec.validate();
    const int m = static_cast<int>(spec.vars());
    SparsePolynomial out = SparsePolynomial::constant(field, m, 1);
    for (int u = 0; u < m; ++u) {
        for (const auto& [pt, mult] : spec.factors[static_cast<std::size_t>(u)]) {
            SparsePolynomial lin(field, m);
            ExponentVec e(static_cast<std::size_t>(m), 0);
            e[static_cast<std::size_t>(u)] = 1;
            lin.add_term(e, 1);
            lin.add_term(ExponentVec(static_cast<std::size_t>(m), 0), field.neg(field.normalize(pt)));
            for (Int rep = 0; rep < mult; ++rep) out = out * lin;
        }
    }
    return out;
}

Int product_multiplicity(const FactorSpec& spec, const std::vector<Int>& point) {
    spec.validate();
    check_dim(point.size(), spec.vars(), "product_multiplicity");
    Int total = 0;
    for (std::size_t u = 0; u < spec.vars(); ++u) {
        for (const auto& [pt, mult] : spec.factors[u]) {
            if (pt == point[u]) {
                total += mult;
                break;
            }
        }
    }
    return total;
}

Grid prefix_grid(const PrimeField& field, const std::vector<Int>& sizes) {
    Grid g;
    g.reserve(sizes.size());
    for (Int s : sizes) {
        if (s < 1 || s > field.modulus())
            throw std::invalid_argument("prefix_grid: size must be in 1..p");
        std::vector<Int> col(static_cast<std::size_t>(s));
        for (Int v = 0; v < s; ++v) col[static_cast<std::size_t>(v)] = v;
        g.push_back(std::move(col));
    }
    return g;
}

namespace {

long grid_cells(const SparsePolynomial& F, const Grid& grid, const char* what) {
    if (F.is_zero()) throw std::domain_error(std::string(what) + ": zero polynomial (infinite)");
    check_dim(grid.size(), static_cast<std::size_t>(F.vars()), what);
    long total = 1;
    for (const auto& col : grid) {
        if (col.empty()) throw std::invalid_argument(std::string(what) + ": empty grid set");
        for (std::size_t a = 0; a < col.size(); ++a)
            for (std::size_t b = a + 1; b < col.size(); ++b)
                if (col[a] == col[b])
                    throw std::invalid_argument(std::string(what) + ": grid set has duplicates");
        total *= static_cast<long>(col.size());
    }
    return total;
}

std::vector<Int> grid_point(const Grid& grid, long idx) {
    std::vector<Int> pt(grid.size());
    for (std::size_t t = grid.size(); t-- > 0;) {
        const long s = static_cast<long>(grid[t].size());
        pt[t] = grid[t][static_cast<std::size_t>(idx % s)];
        idx /= s;
    }
    return pt;
}

}  // namespace

Integer grid_multiplicity_sum_serial(const SparsePolynomial& F, const Grid& grid) {
    const long total = grid_cells(F, grid, "grid_multiplicity_sum");
    long sum = 0;
    for (long idx = 0; idx < total; ++idx)
        sum += *multiplicity(F, grid_point(grid, idx));
    return Integer(sum);
}

Integer grid_multiplicity_sum(const SparsePolynomial& F, const Grid& grid) {
    const long total = grid_cells(F, grid, "grid_multiplicity_sum");
    long sum = 0;
#pragma omp parallel for schedule(dynamic, 8) num_threads(multizero::max_threads()) \
    reduction(+ : sum)
    for (long idx = 0; idx < total; ++idx)
        sum += *multiplicity(F, grid_point(grid, idx));
    return Integer(sum);
}

Int grid_count_mult_at_least_serial(const SparsePolynomial& F, const Grid& grid, Int r) {
    const long total = grid_cells(F, grid, "grid_count_mult_at_least");
    long count = 0;
    for (long idx = 0; idx < total; ++idx)
        if (*multiplicity(F, grid_point(grid, idx)) >= r) ++count;
    return count;
}

Int grid_count_mult_at_least(const SparsePolynomial& F, const Grid& grid, Int r) {
    const long total = grid_cells(F, grid, "grid_count_mult_at_least");
    long count = 0;
#pragma omp parallel for schedule(dynamic, 8) num_threads(multizero::max_threads()) \
    reduction(+ : count)
    for (long idx = 0; idx < total; ++idx)
        if (*multiplicity(F, grid_point(grid, idx)) >= r) ++count;
    return count;
}

std::string to_string(const SparsePolynomial& F) {
    if (F.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = F.terms().rbegin(); it != F.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second;
        for (std::size_t t = 0; t < it->first.size(); ++t)
            if (it->first[t] > 0) os << "*X" << (t + 1) << "^" << it->first[t];
    }
    return os.str();
}

std::string to_string_with_field(const SparsePolynomial& F) {
    return "GF(" + std::to_string(F.field().modulus()) + ") " + to_string(F);
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    Int number() {
        skip_ws();
        if (!peek_digit()) throw std::invalid_argument("polynomial parse: expected a number");
        Int v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return v;
    }
    bool done() {
        skip_ws();
        return pos == s.size();
    }
};

}  // namespace

SparsePolynomial parse_polynomial(const std::string& text, const PrimeField& field, int nvars) {
    SparsePolynomial out(field, nvars);
    Lexer lx{text};
    if (lx.done()) throw std::invalid_argument("polynomial parse: empty input");
    do {
        Int coeff = 1;
        ExponentVec e(static_cast<std::size_t>(nvars), 0);
        const bool have_coeff = lx.peek_digit();
        if (have_coeff) coeff = lx.number() % field.modulus();
        bool expect_factor = have_coeff ? lx.eat('*') : true;
        bool have_factor = false;
        while (lx.eat('X')) {
            have_factor = true;
            expect_factor = false;
            const Int idx = lx.number();
            if (idx < 1 || idx > nvars)
                throw std::invalid_argument("polynomial parse: variable index out of range");
            Int ex = 1;
            if (lx.eat('^')) ex = lx.number();
            e[static_cast<std::size_t>(idx - 1)] += ex;
            if (!lx.eat('*')) break;
            expect_factor = true;
        }
        if (expect_factor && have_coeff && !have_factor)
            throw std::invalid_argument("polynomial parse: dangling '*' after coefficient");
        if (expect_factor)
            throw std::invalid_argument("polynomial parse: expected a variable factor");
        out.add_term(e, coeff);
    } while (lx.eat('+'));
    if (!lx.done()) throw std::invalid_argument("polynomial parse: trailing input");
    return out;
}

SparsePolynomial parse_polynomial_with_field(const std::string& text) {
    Lexer lx{text};
    lx.skip_ws();
    if (!(lx.eat('G') && lx.eat('F') && lx.eat('(')))
        throw std::invalid_argument("polynomial parse: expected GF(p) prefix");
    const Int p = lx.number();
    if (!lx.eat(')')) throw std::invalid_argument("polynomial parse: expected ')'");
    const std::string rest = text.substr(lx.pos);
    // infer the variable count
    int nvars = 1;
    for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
        if ((rest[i] == 'X') && std::isdigit(static_cast<unsigned char>(rest[i + 1]))) {
            int idx = 0;
            std::size_t j = i + 1;
            while (j < rest.size() && std::isdigit(static_cast<unsigned char>(rest[j])))
                idx = idx * 10 + (rest[j++] - '0');
            nvars = std::max(nvars, idx);
        }
    }
    return parse_polynomial(rest, PrimeField(p), nvars);
}

SparsePolynomial random_sparse_polynomial(const PrimeField& field, int nvars, Int max_degree,
                                          int max_terms, std::mt19937_64& rng) {
    if (max_terms < 1) throw std::invalid_argument("random_sparse_polynomial: max_terms >= 1");
    std::uniform_int_distribution<int> term_count(1, max_terms);
    std::uniform_int_distribution<Int> deg(0, max_degree);
    std::uniform_int_distribution<Int> coeff(1, field.modulus() - 1);
    SparsePolynomial f(field, nvars);
    const int n = term_count(rng);
    for (int t = 0; t < n; ++t) {
        ExponentVec e(static_cast<std::size_t>(nvars));
        for (auto& x : e) x = deg(rng);
        f.add_term(e, coeff(rng));
    }
    if (f.is_zero()) f.add_term(ExponentVec(static_cast<std::size_t>(nvars), 0), 1);
    return f;
}

FactorSpec random_factor_spec(const std::vector<Int>& exponents, const std::vector<Int>& sizes,
                              std::mt19937_64& rng) {
    if (exponents.size() != sizes.size())
        throw std::invalid_argument("random_factor_spec: dimension mismatch");
    FactorSpec spec;
    for (std::size_t u = 0; u < exponents.size(); ++u) {
        std::vector<Int> parts(static_cast<std::size_t>(sizes[u]), 0);
        std::uniform_int_distribution<std::size_t> slot(0, parts.size() - 1);
        for (Int b = 0; b < exponents[u]; ++b) ++parts[slot(rng)];
        std::vector<std::pair<Int, Int>> var;
        for (std::size_t v = 0; v < parts.size(); ++v)
            var.emplace_back(static_cast<Int>(v), parts[v]);
        spec.factors.push_back(std::move(var));
    }
    return spec;
}

}  // namespace multizero::ffpoly
