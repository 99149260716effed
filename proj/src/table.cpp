#include <multizero/table.hpp>

#include <multizero/oracle.hpp>
#include <multizero/threads.hpp>

#include <json.hpp>

#include <sstream>

namespace multizero::cli {

namespace {

Int to_cell(const Integer& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("table cell exceeds 64-bit range");
    return v.get_si();
}

void validate(const TableSpec& spec) {
    if (spec.sizes.size() != 2) throw std::invalid_argument("table: two set sizes expected");
    if (spec.r < 1) throw std::invalid_argument("table: r must be >= 1");
    if (spec.i1_lo < 0 || spec.i2_lo < 0 || spec.i1_lo > spec.i1_hi || spec.i2_lo > spec.i2_hi)
        throw std::invalid_argument("table: empty or negative exponent range");
    if (spec.sum_lo < 0 || spec.sum_lo > spec.sum_hi)
        throw std::invalid_argument("table: empty sum range");
}

Int cell_value(const TableSpec& spec, Int i1, Int i2) {
    const bounds::BoundParams params({i1, i2}, spec.r, spec.sizes);
    switch (spec.kind) {
        case TableKind::d:
            return to_cell(bounds::d_recursive(params));
        case TableKind::sz:
            return to_cell(bounds::sz_mult_bound(params).floor());
        case TableKind::closed_floor:
            return to_cell(bounds::closed_form_bound_unchecked(params).floor());
        case TableKind::gap:
            return oracle::gap_value({i1, i2}, spec.r, spec.sizes);
    }
    throw std::logic_error("unknown table kind");
}

}  // namespace

TableResult compute_table(const TableSpec& spec) {
    validate(spec);
    TableResult out;
    out.spec = spec;

    if (spec.kind == TableKind::sz && spec.sizes[0] == spec.sizes[1]) {
        out.one_dimensional = true;
        for (Int sum = spec.sum_lo; sum <= spec.sum_hi; ++sum) {
            out.sums.push_back(sum);
            out.sum_values.push_back(to_cell(
                bounds::sz_mult_bound(bounds::BoundParams({sum, 0}, spec.r, spec.sizes))
                    .floor()));
        }
        return out;
    }

    const std::size_t rows = static_cast<std::size_t>(spec.i2_hi - spec.i2_lo + 1);
    const std::size_t cols = static_cast<std::size_t>(spec.i1_hi - spec.i1_lo + 1);
    out.cells.assign(rows, std::vector<std::optional<Int>>(cols));
    const bool annotate = spec.annotate && spec.kind == TableKind::closed_floor;
    if (annotate) out.annotations.assign(rows, std::vector<int>(cols, kAnnotationPlain));

    const long total = static_cast<long>(rows * cols);
#pragma omp parallel for schedule(dynamic) num_threads(multizero::max_threads())
    for (long c = 0; c < total; ++c) {
        const std::size_t row = static_cast<std::size_t>(c) / cols;
        const std::size_t col = static_cast<std::size_t>(c) % cols;
        const Int i1 = spec.i1_lo + static_cast<Int>(col);
        const Int i2 = spec.i2_lo + static_cast<Int>(row);
        const bounds::BoundParams params({i1, i2}, spec.r, spec.sizes);
        if (spec.blank_saturated && bounds::saturated(params)) continue;
        const Int value = cell_value(spec, i1, i2);
        out.cells[row][col] = value;
        if (annotate) {
            const Int d = to_cell(bounds::d_recursive(params));
            const Int lower =
                oracle::lower_bound_search_serial({i1, i2}, spec.r, spec.sizes).count;
            if (value < lower)
                out.annotations[row][col] = kAnnotationBelowLowerBound;
            else if (value < d)
                out.annotations[row][col] = kAnnotationBelowD;
        }
    }
    return out;
}

std::string to_string(TableKind kind) {
    switch (kind) {
        case TableKind::d: return "d";
        case TableKind::sz: return "sz";
        case TableKind::closed_floor: return "closed-floor";
        case TableKind::gap: return "gap";
    }
    return "?";
}

namespace {

std::string cell_text(const std::optional<Int>& cell) {
    return cell ? std::to_string(*cell) : std::string();
}

}  // namespace

std::string render_csv(const TableResult& table) {
    std::ostringstream os;
    if (table.one_dimensional) {
        os << "i1+i2";
        for (Int s : table.sums) os << "," << s;
        os << "\nsz";
        for (Int v : table.sum_values) os << "," << v;
        os << "\n";
        return os.str();
    }
    const auto& spec = table.spec;
    os << "i2\\i1";
    for (Int i1 = spec.i1_lo; i1 <= spec.i1_hi; ++i1) os << "," << i1;
    os << "\n";
    for (std::size_t row = 0; row < table.cells.size(); ++row) {
        os << spec.i2_lo + static_cast<Int>(row);
        for (const auto& cell : table.cells[row]) os << "," << cell_text(cell);
        os << "\n";
    }
    if (!table.annotations.empty()) {
        os << "\n# annotations: 1 = below D, 2 = below search lower bound\n";
        os << "i2\\i1";
        for (Int i1 = spec.i1_lo; i1 <= spec.i1_hi; ++i1) os << "," << i1;
        os << "\n";
        for (std::size_t row = 0; row < table.annotations.size(); ++row) {
            os << spec.i2_lo + static_cast<Int>(row);
            for (std::size_t col = 0; col < table.annotations[row].size(); ++col) {
                os << ",";
                if (table.cells[row][col]) os << table.annotations[row][col];
            }
            os << "\n";
        }
    }
    return os.str();
}

std::string render_markdown(const TableResult& table) {
    std::ostringstream os;
    if (table.one_dimensional) {
        os << "| i1+i2 |";
        for (Int s : table.sums) os << " " << s << " |";
        os << "\n|---|";
        for (std::size_t c = 0; c < table.sums.size(); ++c) os << "---|";
        os << "\n| sz |";
        for (Int v : table.sum_values) os << " " << v << " |";
        os << "\n";
        return os.str();
    }
    const auto& spec = table.spec;
    os << "| i2\\i1 |";
    for (Int i1 = spec.i1_lo; i1 <= spec.i1_hi; ++i1) os << " " << i1 << " |";
    os << "\n|---|";
    for (Int i1 = spec.i1_lo; i1 <= spec.i1_hi; ++i1) os << "---|";
    os << "\n";
    for (std::size_t row = 0; row < table.cells.size(); ++row) {
        os << "| " << spec.i2_lo + static_cast<Int>(row) << " |";
        for (std::size_t col = 0; col < table.cells[row].size(); ++col) {
            const auto& cell = table.cells[row][col];
            os << " " << cell_text(cell);
            if (cell && !table.annotations.empty()) {
                if (table.annotations[row][col] == kAnnotationBelowD) os << "*";
                if (table.annotations[row][col] == kAnnotationBelowLowerBound) os << "**";
            }
            os << " |";
        }
        os << "\n";
    }
    return os.str();
}

std::string render_json(const TableResult& table) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(table.spec.kind);
    j["r"] = table.spec.r;
    j["s"] = table.spec.sizes;
    if (table.one_dimensional) {
        j["sums"] = table.sums;
        j["values"] = table.sum_values;
    } else {
        j["i1"] = {table.spec.i1_lo, table.spec.i1_hi};
        j["i2"] = {table.spec.i2_lo, table.spec.i2_hi};
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        for (const auto& row : table.cells) {
            nlohmann::ordered_json jr = nlohmann::ordered_json::array();
            for (const auto& cell : row) {
                if (cell)
                    jr.push_back(*cell);
                else
                    jr.push_back(nullptr);
            }
            cells.push_back(std::move(jr));
        }
        j["cells"] = std::move(cells);
        if (!table.annotations.empty()) j["annotations"] = table.annotations;
    }
    return j.dump(2) + "\n";
}

std::string render(const TableResult& table) {
    switch (table.spec.format) {
        case TableFormat::csv: return render_csv(table);
        case TableFormat::markdown: return render_markdown(table);
        case TableFormat::json: return render_json(table);
    }
    throw std::logic_error("unknown table format");
}

std::string surface_csv(const SurfaceSpec& spec) {
    if (spec.m < 2) throw std::invalid_argument("surface: m must be >= 2");
    if (spec.q < 1) throw std::invalid_argument("surface: q must be >= 1");
    if (spec.r < 1) throw std::invalid_argument("surface: r must be >= 1");
    if (!(spec.step > Rational(0))) throw std::invalid_argument("surface: step must be > 0");

    // lattice 0, step, 2*step, ... <= 1
    std::vector<Rational> ticks;
    for (Rational v(0); v <= Rational(1); v += spec.step) ticks.push_back(v);

    const std::size_t dims = static_cast<std::size_t>(spec.m - 1);
    const std::vector<Int> sizes(static_cast<std::size_t>(spec.m), spec.q);

    std::ostringstream os;
    for (std::size_t t = 1; t <= dims; ++t) os << "I" << t << ",";
    os << "satisfied\n";

    std::vector<std::size_t> idx(dims, 0);
    for (;;) {
        std::vector<Rational> exps;
        exps.reserve(dims + 1);
        for (std::size_t t = 0; t < dims; ++t) exps.push_back(ticks[idx[t]] * Rational(spec.q));
        exps.emplace_back(0);  // the last exponent is not part of the surface
        const bool ok = bounds::condition_a_rational(exps, spec.r, sizes).satisfied;
        for (std::size_t t = 0; t < dims; ++t) os << ticks[idx[t]].str() << ",";
        os << (ok ? "true" : "false") << "\n";

        std::size_t t = dims;
        bool done = true;
        while (t-- > 0) {
            if (++idx[t] < ticks.size()) {
                done = false;
                break;
            }
            idx[t] = 0;
        }
        if (done) break;
    }
    return os.str();
}

std::string format_value(const Rational& value) {
    if (value.is_integer()) return value.str();
    return value.str() + " (floor " + value.floor().get_str() + ")";
}

}  // namespace multizero::cli
