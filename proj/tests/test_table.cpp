#include <doctest.h>

#include <multizero/table.hpp>

#include <sstream>

using namespace multizero;
using namespace multizero::cli;

TEST_CASE("default d table replicates the blank layout") {
    TableSpec spec;  // kind=d, r=3, s=(5,5), 0..14, blanks on
    const auto table = compute_table(spec);
    REQUIRE(table.cells.size() == 15);
    REQUIRE(table.cells[0].size() == 15);

    CHECK(table.cells[0][0] == 0);
    CHECK(table.cells[11][3] == 19);   // D(3,11)
    CHECK(table.cells[3][12] == 23);   // D(12,3)
    CHECK(table.cells[4][14] == 24);   // last printed cell of row 4

    // saturated cells are blank: rows 5..9 after column 9, rows 10..14 after 4
    CHECK_FALSE(table.cells[5][10].has_value());
    CHECK(table.cells[5][9].has_value());
    CHECK_FALSE(table.cells[10][5].has_value());
    CHECK(table.cells[10][4].has_value());
    CHECK_FALSE(table.cells[14][14].has_value());
}

TEST_CASE("full flag fills saturated cells") {
    TableSpec spec;
    spec.blank_saturated = false;
    const auto table = compute_table(spec);
    CHECK(table.cells[14][14] == 25);
    CHECK(table.cells[5][10] == 25);
}

TEST_CASE("sz table is sum indexed for equal sizes") {
    TableSpec spec;
    spec.kind = TableKind::sz;
    const auto table = compute_table(spec);
    REQUIRE(table.one_dimensional);
    REQUIRE(table.sum_values.size() == 19);
    const std::vector<Int> expect{0,  1,  3,  5,  6,  8,  10, 11, 13, 15,
                                  16, 18, 20, 21, 23, 25, 25, 25, 25};
    CHECK(table.sum_values == expect);

    spec.sizes = {4, 6};
    const auto uneven = compute_table(spec);
    CHECK_FALSE(uneven.one_dimensional);
}

TEST_CASE("closed-floor annotations") {
    TableSpec spec;
    spec.kind = TableKind::closed_floor;
    spec.annotate = true;
    const auto table = compute_table(spec);
    CHECK(table.cells[1][9] == 15);
    CHECK(table.annotations[1][9] == kAnnotationBelowD);
    CHECK(table.cells[4][10] == 18);
    CHECK(table.annotations[4][10] == kAnnotationBelowLowerBound);
    CHECK(table.cells[10][4] == 18);
    CHECK(table.annotations[10][4] == kAnnotationBelowLowerBound);
    CHECK(table.annotations[0][0] == kAnnotationPlain);
}

TEST_CASE("renderings carry identical cell values and are byte stable") {
    TableSpec spec;
    spec.i1_hi = 6;
    spec.i2_hi = 6;
    const auto table = compute_table(spec);
    CHECK(render_csv(table) == render_csv(compute_table(spec)));
    CHECK(render_json(table) == render_json(compute_table(spec)));
    CHECK(render_markdown(table) == render_markdown(compute_table(spec)));

    // cell (3,3) = 9 appears in every rendering
    CHECK(render_csv(table).find("9") != std::string::npos);
    const auto json = render_json(table);
    for (Int i2 = 0; i2 <= 6; ++i2)
        for (Int i1 = 0; i1 <= 6; ++i1) {
            const auto cell = table.cells[static_cast<std::size_t>(i2)][static_cast<std::size_t>(i1)];
            if (cell) {
                std::ostringstream needle;
                needle << *cell;
                CHECK(json.find(needle.str()) != std::string::npos);
            }
        }
}

TEST_CASE("csv layout") {
    TableSpec spec;
    spec.i1_hi = 2;
    spec.i2_hi = 1;
    const auto text = render_csv(compute_table(spec));
    CHECK(text == "i2\\i1,0,1,2\n0,0,0,0\n1,0,0,1\n");
}

TEST_CASE("surface sampling") {
    SurfaceSpec spec;
    spec.m = 3;
    spec.r = 2;
    spec.q = 5;
    spec.step = Rational(1, 3);
    const auto csv = surface_csv(spec);
    CHECK(csv.find("I1,I2,satisfied") == 0);
    CHECK(csv.find("2/3,0,true") != std::string::npos);
    CHECK(csv.find("1,0,false") != std::string::npos);
    CHECK(csv.find("0,0,true") != std::string::npos);

    SurfaceSpec m4 = spec;
    m4.m = 4;
    const auto csv4 = surface_csv(m4);
    CHECK(csv4.find("I1,I2,I3,satisfied") == 0);
    CHECK(csv4.find("2/3,0,0,true") != std::string::npos);

    spec.step = Rational(0);
    CHECK_THROWS_AS(surface_csv(spec), std::invalid_argument);
}

TEST_CASE("value formatting") {
    CHECK(format_value(Rational(25)) == "25");
    CHECK(format_value(Rational(70, 3)) == "70/3 (floor 23)");
    CHECK(format_value(Rational(0)) == "0");
}
