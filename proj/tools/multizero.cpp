#include <multizero/bounds.hpp>
#include <multizero/ffpoly.hpp>
#include <multizero/oracle.hpp>
#include <multizero/table.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using multizero::Integer;
using multizero::Rational;
using Int = long;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

multizero::cli::TableFormat parse_format(const std::string& name) {
    if (name == "csv") return multizero::cli::TableFormat::csv;
    if (name == "markdown") return multizero::cli::TableFormat::markdown;
    if (name == "json") return multizero::cli::TableFormat::json;
    throw CLI::ValidationError("--format", "expected csv, markdown or json");
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--step", "expected an integer or p/q");
    }
}

void parse_range(const std::string& text, Int& lo, Int& hi) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("range", "expected lo:hi");
    try {
        lo = std::stoll(text.substr(0, colon));
        hi = std::stoll(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected lo:hi");
    }
}

Int next_prime_after(Int n) {
    auto is_prime = [](Int p) {
        if (p < 2) return false;
        for (Int d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    };
    Int p = n + 1;
    while (!is_prime(p)) ++p;
    return p;
}

int run_bound(const std::string& name, const std::vector<Int>& i, Int r,
              const std::vector<Int>& s) {
    const multizero::bounds::BoundParams params(i, r, s);
    using namespace multizero::bounds;
    if (name == "d") {
        std::cout << d_recursive(params).get_str() << "\n";
    } else if (name == "sz-sum") {
        std::cout << sz_sum_bound(params).get_str() << "\n";
    } else if (name == "sz-mult") {
        std::cout << multizero::cli::format_value(sz_mult_bound(params)) << "\n";
    } else if (name == "footprint") {
        std::cout << footprint_bound(params).get_str() << "\n";
    } else if (name == "closed-form") {
        std::cout << multizero::cli::format_value(closed_form_bound(params)) << "\n";
    } else if (name == "two-var") {
        if (params.vars() != 2)
            throw std::invalid_argument("two-var needs exactly two variables");
        const auto tv = two_var_bound(i[0], i[1], r, s[0], s[1]);
        std::cout << multizero::cli::format_value(tv.value) << " [" << to_string(tv.which);
        if (tv.which != TwoVarCase::c4) std::cout << ", k=" << tv.k;
        std::cout << "]\n";
    } else if (name == "condition-a") {
        const auto res = condition_a(params);
        if (res.satisfied)
            std::cout << "true\n";
        else
            std::cout << "false (" << res.describe() << ")\n";
    } else if (name == "condition-a-sufficient") {
        std::cout << (condition_a_sufficient(params) ? "true" : "false") << "\n";
    } else if (name == "necessary") {
        std::cout << (necessary_bound_check(params) ? "true" : "false") << "\n";
    } else {
        throw CLI::ValidationError("bound", "unknown bound name: " + name);
    }
    return kExitOk;
}

int run_verify(bool sweep_none, std::uint64_t seed, const std::string& expect_fail,
               const std::string& out_path) {
    multizero::oracle::VerifyOptions options;
    options.empty_sweep = sweep_none;
    options.seed = seed;
    const auto report = multizero::oracle::verify_all(options);

    std::ostringstream os;
    if (!expect_fail.empty()) {
        for (const auto& rec : report.records) {
            if (rec.name == expect_fail) {
                os << multizero::oracle::to_line(rec) << "\n";
                emit(os.str(), out_path);
                return rec.pass ? kExitOk : kExitCheckFailure;
            }
        }
        std::cerr << "error: unknown check name for --expect-fail: " << expect_fail << "\n";
        return kExitUsage;
    }
    for (const auto& rec : report.records) os << multizero::oracle::to_line(rec) << "\n";
    os << "verify: " << report.records.size() << " checks, " << report.failures()
       << " failures\n";
    emit(os.str(), out_path);
    return report.all_pass() ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact bounds on high-multiplicity zeros of multivariate polynomials over "
                 "Cartesian product grids"};
    app.require_subcommand(1);

    // ---- bound -----------------------------------------------------------
    auto* bound_cmd = app.add_subcommand("bound", "Compute one bound or condition check");
    std::string bound_name;
    std::vector<Int> opt_i, opt_s;
    Int opt_r = 1;
    bound_cmd->add_option("name", bound_name, "One of: d, sz-sum, sz-mult, footprint, "
                                              "closed-form, two-var, condition-a, "
                                              "condition-a-sufficient, necessary")
        ->required();
    bound_cmd->add_option("--i", opt_i, "Leading exponents i1,...,im")
        ->delimiter(',')
        ->required();
    bound_cmd->add_option("--r", opt_r, "Multiplicity target")->required();
    bound_cmd->add_option("--s", opt_s, "Set sizes s1,...,sm")->delimiter(',')->required();

    // ---- table -----------------------------------------------------------
    auto* table_cmd = app.add_subcommand("table", "Generate a bound table");
    std::string kind_name = "d", format_name = "csv", out_path, i1_range, i2_range, sum_range;
    Int table_r = 3;
    std::vector<Int> table_s{5, 5};
    bool full = false, annotate = false;
    table_cmd->add_option("--kind", kind_name, "d, sz, closed-floor or gap")
        ->check(CLI::IsMember({"d", "sz", "closed-floor", "gap"}));
    table_cmd->add_option("--r", table_r, "Multiplicity target (default 3)");
    table_cmd->add_option("--s", table_s, "Set sizes (default 5,5)")->delimiter(',');
    table_cmd->add_option("--i1-range", i1_range, "i1 range lo:hi (default 0:r*s1-1)");
    table_cmd->add_option("--i2-range", i2_range, "i2 range lo:hi (default 0:r*s2-1)");
    table_cmd->add_option("--sum-range", sum_range,
                          "i1+i2 range lo:hi for the sz table (default 0:r*s1+3)");
    table_cmd->add_option("--format", format_name, "csv, markdown or json")
        ->check(CLI::IsMember({"csv", "markdown", "json"}));
    table_cmd->add_option("--out", out_path, "Write to file instead of stdout");
    table_cmd->add_flag("--full", full, "Fill saturated cells instead of leaving them blank");
    table_cmd->add_flag("--annotate", annotate,
                        "closed-floor only: mark cells below D (1) / below the search lower "
                        "bound (2)");

    // ---- gap -------------------------------------------------------------
    auto* gap_cmd = app.add_subcommand(
        "gap", "Difference between the recursive bound and the search lower bound");
    std::vector<Int> gap_i, gap_s{5, 5};
    Int gap_r = 3;
    std::string gap_i1_range, gap_i2_range, gap_format = "csv", gap_out;
    bool gap_full = false, witness = false;
    gap_cmd->add_option("--i", gap_i, "Single exponent tuple (any m)")->delimiter(',');
    gap_cmd->add_option("--r", gap_r, "Multiplicity target (default 3)");
    gap_cmd->add_option("--s", gap_s, "Set sizes (default 5,5)")->delimiter(',');
    gap_cmd->add_option("--i1-range", gap_i1_range, "i1 range lo:hi (default 0:r*s1-1)");
    gap_cmd->add_option("--i2-range", gap_i2_range, "i2 range lo:hi (default 0:r*s2-1)");
    gap_cmd->add_option("--format", gap_format, "csv, markdown or json")
        ->check(CLI::IsMember({"csv", "markdown", "json"}));
    gap_cmd->add_option("--out", gap_out, "Write to file instead of stdout");
    gap_cmd->add_flag("--full", gap_full, "Fill saturated cells");
    gap_cmd->add_flag("--witness", witness,
                      "With --i: print the maximizing profiles and their product polynomial");

    // ---- surface ---------------------------------------------------------
    auto* surface_cmd =
        app.add_subcommand("surface", "Sample the Condition A region over the unit box");
    Int surf_r = 2, surf_m = 3, surf_q = 5;
    std::string step_text = "1/16", surf_out;
    surface_cmd->add_option("--r", surf_r, "Multiplicity target (default 2)");
    surface_cmd->add_option("--m", surf_m, "Number of variables (default 3)");
    surface_cmd->add_option("--q", surf_q, "Common set size (default 5)");
    surface_cmd->add_option("--step", step_text, "Grid step, integer or p/q (default 1/16)");
    surface_cmd->add_option("--out", surf_out, "Write to file instead of stdout");

    // ---- verify ----------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "Run the cross-verification suite");
    std::string sweep = "default", expect_fail, verify_out;
    std::uint64_t seed = multizero::ffpoly::kDefaultSeed;
    verify_cmd->add_option("--sweep", sweep, "default or none")
        ->check(CLI::IsMember({"default", "none"}));
    verify_cmd->add_option("--seed", seed, "Seed for the randomized corpora");
    verify_cmd->add_option("--expect-fail", expect_fail,
                           "Report only the named violation-witness check "
                           "(closed-form-outside-region) and succeed when the documented "
                           "violations exist");
    verify_cmd->add_option("--out", verify_out, "Write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (bound_cmd->parsed()) return run_bound(bound_name, opt_i, opt_r, opt_s);

        if (table_cmd->parsed()) {
            multizero::cli::TableSpec spec;
            if (kind_name == "d") spec.kind = multizero::cli::TableKind::d;
            if (kind_name == "sz") spec.kind = multizero::cli::TableKind::sz;
            if (kind_name == "closed-floor") spec.kind = multizero::cli::TableKind::closed_floor;
            if (kind_name == "gap") spec.kind = multizero::cli::TableKind::gap;
            spec.r = table_r;
            spec.sizes = table_s;
            if (spec.sizes.size() != 2)
                throw std::invalid_argument("table expects exactly two set sizes");
            spec.i1_hi = table_r * table_s[0] - 1;
            spec.i2_hi = table_r * table_s[1] - 1;
            spec.sum_hi = table_r * table_s[0] + 3;
            if (!i1_range.empty()) parse_range(i1_range, spec.i1_lo, spec.i1_hi);
            if (!i2_range.empty()) parse_range(i2_range, spec.i2_lo, spec.i2_hi);
            if (!sum_range.empty()) parse_range(sum_range, spec.sum_lo, spec.sum_hi);
            spec.format = parse_format(format_name);
            spec.blank_saturated = !full;
            spec.annotate = annotate;
            emit(multizero::cli::render(multizero::cli::compute_table(spec)), out_path);
            return kExitOk;
        }

        if (gap_cmd->parsed()) {
            if (!gap_i.empty()) {
                if (gap_i.size() != gap_s.size())
                    throw std::invalid_argument("--i and --s must have the same length");
                const Integer d = multizero::bounds::d_recursive(
                    multizero::bounds::BoundParams(gap_i, gap_r, gap_s));
                const auto res = multizero::oracle::lower_bound_search(gap_i, gap_r, gap_s);
                const Integer gap = d - res.count;
                std::ostringstream os;
                os << "d=" << d.get_str() << " lower=" << res.count << " gap=" << gap.get_str()
                   << "\n";
                if (witness) {
                    os << "witness=" << res.witness.str() << "\n";
                    Int max_size = 2;
                    for (Int s : gap_s) max_size = std::max(max_size, s);
                    const multizero::ffpoly::PrimeField field(next_prime_after(max_size));
                    multizero::ffpoly::FactorSpec fs;
                    fs.factors.resize(gap_s.size());
                    for (std::size_t u = 0; u < gap_s.size(); ++u)
                        for (Int v = 0; v < gap_s[u]; ++v)
                            fs.factors[u].emplace_back(
                                v, res.witness.profiles[u][static_cast<std::size_t>(v)]);
                    os << "polynomial="
                       << multizero::ffpoly::to_string_with_field(
                              multizero::ffpoly::build_product(fs, field))
                       << "\n";
                }
                emit(os.str(), gap_out);
                return kExitOk;
            }
            multizero::cli::TableSpec spec;
            spec.kind = multizero::cli::TableKind::gap;
            spec.r = gap_r;
            spec.sizes = gap_s;
            if (spec.sizes.size() != 2)
                throw std::invalid_argument("gap tables need exactly two set sizes (use --i "
                                            "for other dimensions)");
            spec.i1_hi = gap_r * gap_s[0] - 1;
            spec.i2_hi = gap_r * gap_s[1] - 1;
            if (!gap_i1_range.empty()) parse_range(gap_i1_range, spec.i1_lo, spec.i1_hi);
            if (!gap_i2_range.empty()) parse_range(gap_i2_range, spec.i2_lo, spec.i2_hi);
            spec.format = parse_format(gap_format);
            spec.blank_saturated = !gap_full;
            emit(multizero::cli::render(multizero::cli::compute_table(spec)), gap_out);
            return kExitOk;
        }

        if (surface_cmd->parsed()) {
            multizero::cli::SurfaceSpec spec;
            spec.r = surf_r;
            spec.m = surf_m;
            spec.q = surf_q;
            spec.step = parse_rational(step_text);
            emit(multizero::cli::surface_csv(spec), surf_out);
            return kExitOk;
        }

        if (verify_cmd->parsed())
            return run_verify(sweep == "none", seed, expect_fail, verify_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
