#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ush/config.hpp"

using namespace ush;

TEST_CASE("minimal valid config") {
    std::istringstream in(
        "# minimal field\n"
        "mode = table\n"
        "degree = 1\n"
        "disc_F = 1\n"
        "disc_rel_norm = 3\n"
        "bound = 5\n"
        "[place]\n"
        "p = 3\n"
        "Nv = 3\n"
        "splitting = ramified\n"
        "e = 0\n");
    FieldData f = load_field_config(in);
    CHECK(f.mode == FieldMode::Table);
    CHECK(f.table.size() == 1);
    CHECK(splitting_of(f, 3)[0].splitting == Splitting::Ramified);
}

TEST_CASE("ramified place with e = 1 violates the standing assumption") {
    std::istringstream in(
        "mode = table\ndegree = 1\ndisc_F = 3\ndisc_rel_norm = 3\nbound = 5\n"
        "[place]\np = 3\nNv = 3\nsplitting = ramified\ne = 1\n");
    CHECK_THROWS_AS(load_field_config(in), ConfigError);
}

TEST_CASE("duplicate place entries are rejected") {
    std::istringstream in(
        "mode = table\ndegree = 2\ndisc_F = 1\ndisc_rel_norm = 9\nbound = 5\n"
        "[place]\np = 3\nNv = 3\nsplitting = inert\ne = 0\n"
        "[place]\np = 3\nNv = 3\nsplitting = inert\ne = 0\n");
    CHECK_THROWS_AS(load_field_config(in), ConfigError);
    std::istringstream ok(
        "mode = table\ndegree = 2\ndisc_F = 1\ndisc_rel_norm = 9\nbound = 5\n"
        "[place]\np = 3\nNv = 3\nsplitting = inert\ne = 0\ncount = 2\n");
    FieldData f = load_field_config(ok);
    CHECK(f.table.size() == 2);
}

TEST_CASE("unknown keys and malformed lines carry line numbers") {
    std::istringstream in("mode = table\nwhatever = 3\n");
    try {
        load_field_config(in);
        CHECK(false);
    } catch (const ConfigError& e) {
        CHECK(e.line == 2);
    }
    std::istringstream in2("mode table\n");
    CHECK_THROWS_AS(load_field_config(in2), ConfigError);
}

TEST_CASE("builtin modes through the config surface") {
    std::istringstream in("mode = rational\nD = 1\n");
    FieldData f = load_field_config(in);
    CHECK(f.degree == 1);
    CHECK(f.rel_disc_norm == 4);

    std::istringstream in2("mode = real-quadratic\nm = 5\nd = 1\n");
    FieldData f2 = load_field_config(in2);
    CHECK(f2.degree == 2);
    CHECK(f2.abs_disc_f == 5);

    std::istringstream bad("mode = real-quadratic\nm = 8\nd = 1\n");
    CHECK_THROWS(load_field_config(bad));
}

TEST_CASE("disc consistency check") {
    std::istringstream in(
        "mode = table\ndegree = 2\ndisc_F = 5\ndisc_rel_norm = 1\nbound = 7\n"
        "[place]\np = 5\nNv = 5\nsplitting = split\ne = 1\n");
    FieldData f = load_field_config(in);
    CHECK(f.abs_disc_f == 5);

    std::istringstream bad(
        "mode = table\ndegree = 2\ndisc_F = 25\ndisc_rel_norm = 1\nbound = 7\n"
        "[place]\np = 5\nNv = 5\nsplitting = split\ne = 1\n");
    CHECK_THROWS_AS(load_field_config(bad), ConfigError);
}
