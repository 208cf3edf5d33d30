#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetask/resolver.hpp"
#include "zetask/zeta.hpp"

#include <map>
#include <numeric>

using namespace zetask;

namespace {

using PolyQ = Polynomial<Rational>;

ResolveOutput run(const std::string& poly) { return resolve_curve(parse_plane_poly(poly)); }

std::map<std::string, std::pair<std::int64_t, std::int64_t>> divisor_data(const StrataComplex& c) {
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> m;
    for (const Divisor& v : c.vertices) m[v.id] = {v.N, v.nu};
    return m;
}

// Order of vanishing along the local divisor axis of a pulled-back
// polynomial; the slow cross-check route for N and nu.
int order_along_axis(const PlanePoly& p, int axis) {
    return axis == 0 ? p.order_in_x() : p.order_in_y();
}

} // namespace

TEST_CASE("plane polynomial parser") {
    PlanePoly f = parse_plane_poly("x^2 + y^3");
    CHECK(f.coeff(2, 0) == 1);
    CHECK(f.coeff(0, 3) == 1);
    CHECK(parse_plane_poly("3/2*x*y - (x + y)^2").coeff(1, 1) == Rational(-1, 2));
    CHECK(parse_plane_poly("-x").coeff(1, 0) == -1);
    CHECK_THROWS_AS(parse_plane_poly("x^2 +"), DataError);
    CHECK_THROWS_AS(parse_plane_poly("z"), DataError);
    CHECK_THROWS_AS(parse_plane_poly("x^-2"), DataError);
}

TEST_CASE("multiplicity") {
    PlanePoly cusp = parse_plane_poly("x^2+y^3");
    CHECK(multiplicity_at(cusp, 0, 0) == 2);
    CHECK(multiplicity_at(parse_plane_poly("x"), 0, 0) == 1);
    // Generic point away from the curve.
    CHECK(multiplicity_at(parse_plane_poly("x^2+y^2+x^3"), 1, 0) == 0);
    // Smooth point of the cusp.
    CHECK(multiplicity_at(cusp, 1, -1) == 1);
}

TEST_CASE("blowup charts: cusp bookkeeping") {
    PlanePoly cusp = parse_plane_poly("x^2+y^3");
    BlowupCharts b1 = blowup_charts(cusp, {});
    CHECK(b1.N == 2);
    CHECK(b1.nu == 2);
    CHECK(b1.multiplicity == 2);
    // chart 2 carries the interesting point: strict transform s^2 + t.
    CHECK(b1.chart2_strict == parse_plane_poly("x^2+y"));
    // Second center: on E1 (2,2).
    BlowupCharts b2 = blowup_charts(b1.chart2_strict, {{2, 2}});
    CHECK(b2.N == 3);
    CHECK(b2.nu == 3);
    // Third center: crossing of E1 and E2.
    BlowupCharts b3 = blowup_charts(parse_plane_poly("x+y"), {{2, 2}, {3, 3}});
    CHECK(b3.N == 6);
    CHECK(b3.nu == 5);
}

TEST_CASE("resolve: smooth and normal-crossing inputs need no blowup") {
    ResolveOutput smooth = run("x");
    CHECK(smooth.tree.nodes.empty());
    CHECK(smooth.complex.vertices.size() == 1);
    CHECK(smooth.complex.vertices[0].N == 1);
    CHECK(smooth.complex.vertices[0].nu == 1);
    CHECK(topological_zeta(smooth.complex) ==
          RationalFunction<Rational>(PolyQ::constant(1), PolyQ({std::vector<Rational>{1, 1}})));

    ResolveOutput xy = run("x*y");
    CHECK(xy.tree.nodes.empty());
    CHECK(xy.complex.vertices.size() == 2);

    ResolveOutput mono = run("x^2*y^3");
    CHECK(mono.tree.nodes.empty());
    auto dd = divisor_data(mono.complex);
    CHECK(dd.at("C1") == std::pair<std::int64_t, std::int64_t>{2, 1});
    CHECK(dd.at("C2") == std::pair<std::int64_t, std::int64_t>{3, 1});
    // One edge over x with chi 1; branch 0-cells do not lie over x.
    int edges = 0;
    for (const Stratum& s : mono.complex.cells) {
        if (s.dim() == 1) {
            ++edges;
            CHECK(s.over_x);
            CHECK(*s.chi_over_x == 1);
        } else {
            CHECK(!s.over_x);
        }
    }
    CHECK(edges == 1);
    CHECK(topological_zeta(mono.complex) ==
          RationalFunction<Rational>(PolyQ::constant(1),
                                     PolyQ({std::vector<Rational>{1, 2}}) *
                                         PolyQ({std::vector<Rational>{1, 3}})));
}

TEST_CASE("resolve: cusp x^2+y^3") {
    ResolveOutput out = run("x^2+y^3");
    auto dd = divisor_data(out.complex);
    REQUIRE(dd.size() == 4);
    CHECK(dd.at("E1") == std::pair<std::int64_t, std::int64_t>{2, 2});
    CHECK(dd.at("E2") == std::pair<std::int64_t, std::int64_t>{3, 3});
    CHECK(dd.at("E3") == std::pair<std::int64_t, std::int64_t>{6, 5});
    CHECK(dd.at("C1") == std::pair<std::int64_t, std::int64_t>{1, 1});
    CHECK(lct(out.complex) == Rational(5, 6));

    // Exceptional subcomplex is the path E1 - E3 - E2.
    auto exc = exceptional_subcomplex(out.complex);
    CHECK(exc.cell_ids() ==
          std::set<std::string>{"v:E1", "v:E2", "v:E3", "e:E1-E3", "e:E2-E3"});

    WeightAssignment w = weights(out.complex);
    CHECK(w.at("E3") == Rational(5, 6));
    CHECK(w.at("E1") == 1);
    CHECK(w.at("C1") == 1);

    // Z^top = (4s+5)/((s+1)(6s+5)); exact canonical equality.
    auto z = topological_zeta(out.complex);
    CHECK(z == RationalFunction<Rational>(PolyQ({std::vector<Rational>{5, 4}}),
                                          PolyQ({std::vector<Rational>{1, 1}}) *
                                              PolyQ({std::vector<Rational>{5, 6}})));
    CHECK(render_factored(z) == "(4*s + 5)/((s + 1)*(6*s + 5))");
}

TEST_CASE("resolve: tangential and non-reduced inputs") {
    // (y^2 - x^3)(y^2 - 2x^3): two cusps sharing the tangent direction.
    ResolveOutput out = run("(y^2 - x^3)*(y^2 - 2*x^3)");
    CHECK(validate(out.complex).empty());
    Rational l = lct(out.complex);
    CHECK(l > 0);
    CHECK(l <= 1);
    // Non-reduced: multiplicities land in N.
    ResolveOutput sq = run("(x^2+y^3)^2");
    auto dd = divisor_data(sq.complex);
    CHECK(dd.at("E3") == std::pair<std::int64_t, std::int64_t>{12, 5});
    CHECK(dd.at("C1") == std::pair<std::int64_t, std::int64_t>{2, 1});
    CHECK(lct(sq.complex) == Rational(5, 12));
}

TEST_CASE("resolve: irrational transverse branch points are fine") {
    // Tangent cone x*(y^2 - 2x^2): triple point; after one blowup the two
    // conjugate directions are simple transverse crossings.
    ResolveOutput out = run("x*(y^2 - 2*x^2)");
    REQUIRE(out.tree.nodes.size() == 1);
    auto dd = divisor_data(out.complex);
    CHECK(dd.at("E1") == std::pair<std::int64_t, std::int64_t>{3, 2});
    int branches = 0;
    for (const Divisor& v : out.complex.vertices)
        if (!v.exceptional) {
            ++branches;
            CHECK(v.N == 1);
            CHECK(v.nu == 1);
        }
    CHECK(branches == 3);
    // x^2 + y^2: a node with conjugate branches, no blowup at all.
    ResolveOutput node = run("x^2+y^2");
    CHECK(node.tree.nodes.empty());
    CHECK(node.complex.vertices.size() == 2);
    CHECK(topological_zeta(node.complex) ==
          RationalFunction<Rational>(PolyQ::constant(1),
                                     PolyQ({std::vector<Rational>{1, 1}}) *
                                         PolyQ({std::vector<Rational>{1, 1}})));
}

TEST_CASE("resolve: error cases") {
    CHECK_THROWS_AS(run("x+1"), DataError);        // f(0,0) != 0
    CHECK_THROWS_AS(run("0"), DataError);          // zero polynomial
    // Two branch pairs tangent along irrational directions force an
    // irrational blowup center.
    CHECK_THROWS_WITH_AS(run("(y^2 - 2*x^2)*(y^2 - 2*x^2 + x^3)"),
                         "requires algebraic point support: t^2 - 2", DataError);
}

TEST_CASE("classical threshold of x^a + y^b, coprime exponents") {
    for (int a = 2; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b) {
            if (std::gcd(a, b) != 1) continue;
            ResolveOutput out =
                run("x^" + std::to_string(a) + " + y^" + std::to_string(b));
            CHECK(lct(out.complex) == Rational(1, a) + Rational(1, b));
        }
}

TEST_CASE("incremental N and nu agree with the composed-pullback oracle") {
    PlanePoly f = parse_plane_poly("x^2+y^3");
    for (const std::string& poly :
         {std::string("x^2+y^3"), std::string("(x^2+y^3)*(x^2-y^3)"), std::string("x^3+y^4"),
          std::string("y^2-x^5"), std::string("(y-x^2)*(y+x^2)*x")}) {
        ResolveOutput out = run(poly);
        PlanePoly input = parse_plane_poly(poly);
        for (const ResolvedDivisor& d : out.tree.divisors) {
            if (!d.exceptional) continue;
            // N: order of the pullback of f along the divisor.
            PlanePoly pullback = plane_compose(input, d.map_x, d.map_y);
            CHECK(order_along_axis(pullback, d.axis) == d.N);
            // nu - 1: order of the Jacobian of the composed chart map.
            PlanePoly jac = d.map_x.dx() * d.map_y.dy() - d.map_x.dy() * d.map_y.dx();
            CHECK(order_along_axis(jac, d.axis) == d.nu - 1);
        }
    }
}

TEST_CASE("fiber Euler characteristic sum rule") {
    for (const std::string& poly :
         {std::string("x"), std::string("x*y"), std::string("x^2+y^3"), std::string("x^2*y^3"),
          std::string("(y^2-x^3)*(y^2-2*x^3)"), std::string("x*(y^2 - 2*x^2)"),
          std::string("(y-x^2)*(y-2*x^2)*(y-3*x^2)")}) {
        ResolveOutput out = run(poly);
        std::int64_t total = 0;
        for (const Stratum& s : out.complex.cells)
            if (s.over_x) total += *s.chi_over_x;
        std::int64_t exceptional = 0;
        for (const Divisor& v : out.complex.vertices) exceptional += v.exceptional ? 1 : 0;
        // chi of a tree of projective lines (or of the origin itself).
        CHECK(total == exceptional + 1);
    }
}

TEST_CASE("resolution is deterministic") {
    ResolveOutput a = run("(y^2-x^3)*(x^2-y^5)");
    ResolveOutput b = run("(y^2-x^3)*(x^2-y^5)");
    CHECK(a.complex.cell_ids() == b.complex.cell_ids());
    CHECK(divisor_data(a.complex) == divisor_data(b.complex));
    REQUIRE(a.tree.nodes.size() == b.tree.nodes.size());
    for (std::size_t i = 0; i < a.tree.nodes.size(); ++i)
        CHECK(a.tree.nodes[i].chart_path == b.tree.nodes[i].chart_path);
}
