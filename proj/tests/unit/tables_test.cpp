#include "curvlab/error.hpp"
#include "curvlab/tables.hpp"

#include <doctest.h>

using namespace curvlab;

TEST_CASE("every table reproduces") {
    for (int id = 1; id <= 3; ++id) {
        auto t = reproduce_table(id, fixtures_dir(), 2);
        INFO("table " << id);
        for (const auto& m : t.mismatches()) INFO(m);
        CHECK(t.all_match());
        CHECK_FALSE(t.rows.empty());
        for (const auto& r : t.rows) CHECK(r.cells.size() == t.columns.size());
    }
}

TEST_CASE("row counts") {
    CHECK(reproduce_table(1, fixtures_dir()).rows.size() == 12);
    CHECK(reproduce_table(2, fixtures_dir()).rows.size() == 17);
    CHECK(reproduce_table(3, fixtures_dir()).rows.size() == 9);
}

TEST_CASE("rendering and json") {
    auto t = reproduce_table(3, fixtures_dir());
    auto text = render(t);
    CHECK(text.find("Kneser") != std::string::npos);
    CHECK(text.find("erratum") != std::string::npos);
    auto j = to_json(t);
    CHECK(j["table"] == 3);
    CHECK(j["rows"].size() == t.rows.size());
    CHECK(j["all_match"] == true);
}

TEST_CASE("float cells use their tolerance") {
    auto t = reproduce_table(2, fixtures_dir());
    int floats = 0;
    for (const auto& r : t.rows)
        for (const auto& c : r.cells)
            if (c.kind == CellKind::Float) {
                ++floats;
                CHECK(c.tolerance == doctest::Approx(1e-9));
            }
    CHECK(floats == 2 * 17);  // theta1 and lambda1
}

TEST_CASE("bad arguments") {
    try {
        reproduce_table(4, fixtures_dir());
        FAIL("accepted table 4");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadParam);
    }
    try {
        reproduce_table(2, "/nonexistent/fixtures");
        FAIL("read missing fixtures");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
    }
}
