#include "squiral/errors.hpp"
#include "squiral/io.hpp"
#include "squiral/substitution.hpp"

#include <doctest.h>

#include <sstream>

using namespace squiral;

TEST_CASE("parsing a well-formed substitution file") {
    std::istringstream in(R"(# comment line
dim 2
size 3 3   # trailing comment
block
- + -
+ + +
- + -
)");
    const BlockMap map = parse_substitution(in);
    CHECK(map.size == Dims{3, 3});
    CHECK(map.entry({0, 0}) == -1);
    CHECK(map.entry({1, 1}) == 1);
    CHECK(map.entry({2, 2}) == -1);

    // The parsed file reproduces the builtin rule.
    const BlockMap builtin = builtin_squiral();
    CHECK(map.entries == builtin.entries);
}

TEST_CASE("distinct diagnostics for each malformation") {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return parse_substitution(in);
    };
    CHECK_THROWS_WITH_AS(parse(""), "substitution file ends before the 'dim' keyword",
                         input_error);
    CHECK_THROWS_WITH_AS(parse("size 2"), "substitution file must start with 'dim'",
                         input_error);
    CHECK_THROWS_WITH_AS(parse("dim x"), "expected an integer for the dimension, got 'x'",
                         input_error);
    CHECK_THROWS_WITH_AS(parse("dim 1 size 2 block + *"),
                         "block entries must be '+' or '-', got '*'", input_error);
    CHECK_THROWS_WITH_AS(parse("dim 1 size 2 block + - -"),
                         "trailing tokens after the block entries", input_error);
    CHECK_THROWS_AS(parse("dim 1 size 2 block +"), input_error);      // truncated
    CHECK_THROWS_AS(parse("dim 1 size 2 block + +"), input_error);    // all equal
    CHECK_THROWS_AS(parse("dim 0 size block"), input_error);          // bad dimension
}

TEST_CASE("loading the builtin name and rejecting unknown builtins") {
    CHECK(load_map("builtin:squiral").entries == builtin_squiral().entries);
    CHECK_THROWS_AS(load_map("builtin:penrose"), input_error);
    CHECK_THROWS_AS(load_map("/nonexistent/path.subst"), input_error);
}

TEST_CASE("patch CSV lists coordinates with the stamp header first") {
    LatticePatch p;
    p.origin = {-1, 0};
    p.shape = {2, 2};
    p.values = {1, -1, -1, 1};
    std::ostringstream out;
    write_patch_csv(out, p, "tool demo\nconfig line");
    const std::string text = out.str();
    CHECK(text.rfind("# tool demo\n# config line\nm1,m2,value\n", 0) == 0);
    CHECK(text.find("-1,0,1\n") != std::string::npos);
    CHECK(text.find("-1,1,-1\n") != std::string::npos);
    CHECK(text.find("0,0,-1\n") != std::string::npos);
    CHECK(text.find("0,1,1\n") != std::string::npos);
}

TEST_CASE("PGM orientation puts the highest first coordinate on the top row") {
    LatticePatch p;
    p.origin = {0, 0};
    p.shape = {2, 3};
    // Row m1 = 0: -1 -1 -1; row m1 = 1: +1 +1 +1.
    p.values = {-1, -1, -1, 1, 1, 1};
    std::ostringstream out;
    write_patch_pgm(out, p, "s");
    // Width 3, height 2; the +1 row (m1 = 1) must be printed first.
    CHECK(out.str() == "P2\n# s\n3 2\n255\n255 255 255\n0 0 0\n");
}

TEST_CASE("eta CSV carries exact numerators and denominators") {
    EtaTable t(recursion_coeffs(builtin_squiral()));
    std::ostringstream out;
    write_eta_csv(out, t, 1, "stamp");
    const std::string text = out.str();
    CHECK(text.rfind("# stamp\nm1,m2,numerator,denominator,value\n", 0) == 0);
    CHECK(text.find("0,0,1,1,1\n") != std::string::npos);
    CHECK(text.find("1,0,-1,3,") != std::string::npos);
    CHECK(text.find("1,1,1,6,") != std::string::npos);
    // 9 rows for the box plus 2 header lines.
    int lines = 0;
    for (char c : text) lines += c == '\n';
    CHECK(lines == 11);
}

TEST_CASE("grid CSV rows carry unit-box coordinates") {
    GridFunction g;
    g.dims = 1;
    g.resolution = 4;
    g.kind = GridKind::distribution;
    g.samples = {0.0, 0.25, 0.5, 0.75, 1.0};
    std::ostringstream out;
    write_grid_csv(out, g, "s");
    CHECK(out.str() == "# s\nx1,value\n0,0\n0.25,0.25\n0.5,0.5\n0.75,0.75\n1,1\n");
}

TEST_CASE("grid PGM emits a min-max scale sidecar line") {
    GridFunction g;
    g.dims = 2;
    g.resolution = 2;
    g.kind = GridKind::density;
    g.samples = {0.0, 1.0, 2.0, 4.0};
    std::ostringstream out;
    const std::string scale = write_grid_pgm(out, g, "s");
    CHECK(scale == "min 0 max 4");
    // Rows top-to-bottom: first axis descending -> (2,4) row first.
    CHECK(out.str() == "P2\n# s\n2 2\n255\n128 255\n0 64\n");
}

TEST_CASE("doubles round-trip through the shortest decimal form") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
    CHECK(format_double(-0.0) == "-0");
    CHECK(format_double(855.956643592675) == "855.956643592675");
}

TEST_CASE("wiener CSV records exact sigma fractions and the verdict") {
    EtaTable t(recursion_coeffs(builtin_squiral()));
    std::ostringstream out;
    write_wiener_csv(out, wiener_sums(t, 3), "s");
    const std::string text = out.str();
    CHECK(text.rfind("# s\nlevel,window,sigma_numerator,sigma_denominator,sigma,quotient\n", 0) ==
          0);
    CHECK(text.find("\n1,3x3,") != std::string::npos);
    CHECK(text.find("\n3,27x27,") != std::string::npos);
    CHECK(text.find("# verdict ") != std::string::npos);
}
