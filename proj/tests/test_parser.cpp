#include <catch2/catch_amalgamated.hpp>

#include <nilform/derham.hpp>
#include <nilform/parser.hpp>
#include <nilform/random_gen.hpp>

using namespace nilform;

namespace {
Poly X(int j) { return Poly::var(base_var(j)); }
Poly Y(int i, int j) { return Poly::var(inf_var(i, j)); }
Poly C(long long v) { return Poly::constant(Rational(v)); }
} // namespace

TEST_CASE("polynomial grammar") {
    CHECK(parse_poly("x1**2 - 1", 1, 0, Coords::Difference) == X(1) * X(1) - C(1));
    CHECK(parse_poly("y1_2*y2_1", 2, 2, Coords::Difference) == Y(1, 2) * Y(2, 1));
    CHECK(parse_poly("1/2*x1 + 3", 1, 0, Coords::Difference) ==
          Poly::constant(make_rational(1, 2)) * X(1) + C(3));
    CHECK(parse_poly("-x1 + 2", 1, 0, Coords::Difference) == C(2) - X(1));
    CHECK(parse_poly("(x1 + 1)*(x1 - 1)", 1, 0, Coords::Difference) == X(1) * X(1) - C(1));
    CHECK(parse_poly("  x1 ** 2  ", 1, 0, Coords::Difference) == X(1) * X(1));
    CHECK(parse_poly("v2_1 - v1_1", 1, 1, Coords::Vertex) ==
          Poly::var(vertex_var(2, 1)) - Poly::var(vertex_var(1, 1)));
}

TEST_CASE("parse errors carry offsets") {
    try {
        parse_poly("x1 + + 2", 1, 0, Coords::Difference);
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(parse_poly("x2", 1, 0, Coords::Difference), parse_error); // n too small
    CHECK_THROWS_AS(parse_poly("y1_1", 1, 0, Coords::Difference), parse_error); // m = 0
    CHECK_THROWS_AS(parse_poly("v1_1", 1, 1, Coords::Difference), parse_error); // wrong kind
    CHECK_THROWS_AS(parse_poly("x1", 1, 1, Coords::Vertex), parse_error);
    CHECK_THROWS_AS(parse_poly("1/0", 1, 0, Coords::Difference), parse_error);
    CHECK_THROWS_AS(parse_poly("x1 +", 1, 0, Coords::Difference), parse_error);
    CHECK_THROWS_AS(parse_poly("(x1", 1, 0, Coords::Difference), parse_error);
    CHECK_THROWS_AS(parse_poly("x1 x2", 2, 0, Coords::Difference), parse_error); // trailing
    CHECK_THROWS_AS(parse_poly("z1", 1, 0, Coords::Difference), parse_error);
    CHECK_THROWS_AS(parse_poly("x", 1, 0, Coords::Difference), parse_error);
}

TEST_CASE("form grammar") {
    const auto a = parse_form("(x2) dx1", 2);
    CHECK(a.form.coeff({1}) == X(2));
    CHECK(a.warnings.empty());

    const auto reordered = parse_form("(1) dx2^dx1", 2);
    CHECK(reordered.form.coeff({1, 2}) == C(-1));

    const auto repeated = parse_form("(1) dx1^dx1", 2);
    CHECK(repeated.form.is_zero());
    CHECK(repeated.form.degree() == 2);
    REQUIRE(repeated.warnings.size() == 1);

    const auto zero_form = parse_form("x1**2 - 1", 2);
    CHECK(zero_form.form.degree() == 0);
    CHECK(zero_form.form.coeff({}) == X(1) * X(1) - C(1));
    const auto zero_form2 = parse_form("(x1**2 - 1)", 2);
    CHECK(zero_form2.form == zero_form.form);

    const auto sum = parse_form("(x2) dx1 + (x1) dx2 - (1) dx1", 2);
    CHECK(sum.form.coeff({1}) == X(2) - C(1));
    CHECK(sum.form.coeff({2}) == X(1));

    CHECK_THROWS_AS(parse_form("(x1) dx1 + (x2) dx1^dx2", 2), parse_error); // mixed degrees
    CHECK_THROWS_AS(parse_form("(x1) dx3", 2), parse_error);                // index range
    CHECK_THROWS_AS(parse_form("(y1_1) dx1", 2), parse_error); // non-base coefficient
}

TEST_CASE("print-parse round trip on random values") {
    Rng rng(2121);
    for (int t = 0; t < 400; ++t) {
        const int n = rng.uniform(1, 3), m = rng.uniform(0, 3);
        const Poly p = rng.poly(rng.level_vars(n, m), 4, 6);
        CHECK(parse_poly(to_string(p), n, m, Coords::Difference) == p);
    }
    for (int t = 0; t < 200; ++t) {
        const int n = rng.uniform(1, 3), m = rng.uniform(0, 3);
        const InfElement e = rng.inf_element(n, m, 3, 6);
        const Poly back = parse_poly(to_string(e), n, m, Coords::Difference);
        CHECK(normal_form(back, n, m) == e);
    }
    for (int t = 0; t < 200; ++t) {
        const int n = rng.uniform(1, 3);
        const int m = rng.uniform(0, n);
        Rng inner(derive_seed(31, static_cast<std::uint64_t>(t)));
        const DForm w = random_dform(inner, n, m, 3);
        const auto back = parse_form(to_string(w), n);
        CHECK(back.form == w);
        CHECK(back.warnings.empty());
    }
}
