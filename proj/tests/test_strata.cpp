#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetask/strata_complex.hpp"

#include "fixtures.hpp"

using namespace zetask;
using zetask::testing::fixture;

namespace {

Divisor vertex(std::string id, std::int64_t N, std::int64_t nu, bool exc = false, bool mx = true) {
    Divisor v;
    v.id = std::move(id);
    v.N = N;
    v.nu = nu;
    v.exceptional = exc;
    v.meets_x = mx;
    return v;
}

Stratum cell(std::string id, std::vector<std::string> verts, std::vector<std::string> faces,
             bool over_x = true) {
    Stratum s;
    s.id = std::move(id);
    s.vertices = std::move(verts);
    std::sort(s.vertices.begin(), s.vertices.end());
    s.faces = std::move(faces);
    s.over_x = over_x;
    s.chi_over_x = 0;
    return s;
}

StrataComplex single_vertex() {
    StrataComplex c;
    c.ambient_dimension = 2;
    c.vertices = {vertex("A", 1, 1)};
    c.cells = {cell("v:A", {"A"}, {})};
    return c;
}

// Two vertices joined by two edges.
StrataComplex circle() {
    StrataComplex c;
    c.ambient_dimension = 2;
    c.vertices = {vertex("A", 1, 1), vertex("B", 1, 1)};
    c.cells = {cell("v:A", {"A"}, {}), cell("v:B", {"B"}, {}),
               cell("e:1", {"A", "B"}, {"v:A", "v:B"}), cell("e:2", {"A", "B"}, {"v:A", "v:B"})};
    return c;
}

} // namespace

TEST_CASE("validate accepts consistent complexes and names offenders") {
    CHECK(validate(single_vertex()).empty());

    StrataComplex bad = single_vertex();
    bad.cells.push_back(cell("c3", {"e9"}, {}));
    auto v = validate(bad);
    REQUIRE(v.size() == 1);
    CHECK(v[0].message == "cell c3: unknown vertex e9");

    // A 2-cell with a missing edge face is a closure violation.
    StrataComplex tri;
    tri.ambient_dimension = 3;
    tri.vertices = {vertex("A", 1, 1), vertex("B", 1, 1), vertex("C", 1, 1)};
    tri.cells = {cell("v:A", {"A"}, {}), cell("v:B", {"B"}, {}), cell("v:C", {"C"}, {}),
                 cell("e:AB", {"A", "B"}, {"v:A", "v:B"}), cell("e:AC", {"A", "C"}, {"v:A", "v:C"}),
                 cell("t", {"A", "B", "C"}, {"e:AB", "e:AC"})};
    auto tv = validate(tri);
    REQUIRE(tv.size() == 1);
    CHECK(tv[0].rule == "face-closure");
    CHECK(tv[0].subject == "t");
}

TEST_CASE("weights and lct on the hand-encoded family") {
    for (int N : {3, 4, 5}) {
        StrataComplex c = fixture("f" + std::to_string(N) + ".json");
        WeightAssignment w = weights(c);
        CHECK(w.at("D2") == 1);
        CHECK(w.at("E1p") == Rational(3, N));
        CHECK(w.at("E2") == Rational(5, N + 2));
        if (N == 3)
            CHECK(lct(c) == 1);
        else
            CHECK(lct(c) == Rational(3, N));
        CHECK(euler_characteristic(c) == 2);
        // Sphere shape: every edge lies in exactly two 2-cells.
        for (const Stratum& s : c.cells) {
            if (s.dim() != 1) continue;
            int count = 0;
            for (const Stratum& t : c.cells)
                if (t.dim() == 2)
                    for (const auto& f : t.faces) count += (f == s.id);
            CHECK(count == 2);
        }
    }
}

TEST_CASE("min_weight in degeneration mode") {
    StrataComplex c = fixture("degeneration_path.json");
    CHECK(min_weight(c) == 1);
    StrataComplex single = single_vertex();
    single.mode = ComplexMode::Degeneration;
    CHECK(min_weight(single) == 1);
    StrataComplex two;
    two.mode = ComplexMode::Degeneration;
    two.vertices = {vertex("A", 2, 1), vertex("B", 3, 1)};
    two.cells = {cell("v:A", {"A"}, {}), cell("v:B", {"B"}, {})};
    CHECK(min_weight(two) == Rational(1, 3));
    StrataComplex empty;
    empty.mode = ComplexMode::Degeneration;
    CHECK_THROWS_AS(min_weight(empty), DataError);
}

TEST_CASE("lct requires a component over x") {
    StrataComplex c = single_vertex();
    c.vertices[0].meets_x = false;
    CHECK_THROWS_WITH_AS(lct(c), "no component over x", DataError);
}

TEST_CASE("spanned and level subcomplexes") {
    StrataComplex c = fixture("f4.json");
    // keep everything: identity on cells
    CHECK(spanned_subcomplex(c, c.vertex_ids()).cell_ids() == c.cell_ids());
    // keep nothing: empty
    CHECK(spanned_subcomplex(c, {}).cell_ids().empty());
    CHECK(spanned_subcomplex(c, {}).vertices.empty());
    // single vertex span
    auto sub = spanned_subcomplex(c, {"E1p"});
    CHECK(sub.cell_ids() == std::set<std::string>{"v:E1p"});

    // level: above max weight -> whole complex; below min -> empty
    CHECK(level_subcomplex(c, Rational(2)).cell_ids() == c.cell_ids());
    CHECK(level_subcomplex(c, Rational(1, 10)).cell_ids().empty());
    // nested in w, monotone
    auto lo = level_subcomplex(c, Rational(3, 4));
    auto hi = level_subcomplex(c, Rational(5, 6));
    for (const auto& id : lo.cell_ids()) CHECK(hi.cell_ids().count(id) == 1);
    CHECK(lo.cell_ids() == std::set<std::string>{"v:E1p"});
    std::set<std::string> expect_hi{"v:E1p", "v:E2", "e:E1p-E2"};
    CHECK(hi.cell_ids() == expect_hi);
}

TEST_CASE("essential skeleton across the family") {
    StrataComplex f3 = fixture("f3.json");
    CHECK(essential_skeleton(f3).cell_ids() == f3.cell_ids()); // whole sphere
    for (int N : {4, 5}) {
        StrataComplex c = fixture("f" + std::to_string(N) + ".json");
        CHECK(essential_skeleton(c).cell_ids() == std::set<std::string>{"v:E1p"});
    }
    StrataComplex single = single_vertex();
    CHECK(essential_skeleton(single).cell_ids() == single.cell_ids());
    // degeneration mode: spanned by min-weight vertices
    StrataComplex d = fixture("degeneration_path.json");
    CHECK(essential_skeleton(d).cell_ids() == std::set<std::string>{"v:V2", "v:V3", "e:V2-V3"});
}

TEST_CASE("over-x subcomplex closes under faces") {
    StrataComplex c = fixture("nodal_cubic_line.json");
    // v:C and v:L are not over x themselves, but sit under over-x edges.
    StrataComplex sk = over_x_subcomplex(c);
    CHECK(sk.cell_ids() == c.cell_ids());
    CHECK(euler_characteristic(sk) == 0); // circle homotopy type
    CHECK(essential_skeleton(c).cell_ids() == std::set<std::string>{"v:E"});
    CHECK(lct(c) == Rational(2, 3));
}

TEST_CASE("exceptional subcomplex") {
    StrataComplex c = fixture("nodal_cubic_line.json");
    auto exc = exceptional_subcomplex(c);
    CHECK(exc.cell_ids() == std::set<std::string>{"v:E"});
    // all vertices exceptional -> identity
    StrataComplex s = single_vertex();
    s.vertices[0].exceptional = true;
    CHECK(exceptional_subcomplex(s).cell_ids() == s.cell_ids());
    s.vertices[0].exceptional = false;
    CHECK(exceptional_subcomplex(s).cell_ids().empty());
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(single_vertex()) == 1);
    CHECK(euler_characteristic(circle()) == 0);
    // disjoint union adds: two copies of the circle complex
    StrataComplex two = circle();
    StrataComplex other = circle();
    for (auto& v : other.vertices) v.id += "'";
    for (auto& s : other.cells) {
        s.id += "'";
        for (auto& vv : s.vertices) vv += "'";
        for (auto& f : s.faces) f += "'";
    }
    two.vertices.insert(two.vertices.end(), other.vertices.begin(), other.vertices.end());
    two.cells.insert(two.cells.end(), other.cells.begin(), other.cells.end());
    CHECK(validate(two).empty());
    CHECK(euler_characteristic(two) == 0);
}

TEST_CASE("spanned subcomplex is monotone (randomized)") {
    StrataComplex c = fixture("f5.json");
    std::set<std::string> id_set = c.vertex_ids();
    std::vector<std::string> ids(id_set.begin(), id_set.end());
    for (unsigned mask1 = 0; mask1 < 8; ++mask1)
        for (unsigned mask2 = mask1; mask2 < 8; ++mask2) {
            if ((mask1 & mask2) != mask1) continue; // mask1 subset of mask2
            std::set<std::string> k1, k2;
            for (std::size_t i = 0; i < ids.size(); ++i) {
                if (mask1 & (1u << i)) k1.insert(ids[i]);
                if (mask2 & (1u << i)) k2.insert(ids[i]);
            }
            auto s1 = spanned_subcomplex(c, k1).cell_ids();
            auto s2 = spanned_subcomplex(c, k2).cell_ids();
            for (const auto& id : s1) CHECK(s2.count(id) == 1);
        }
}
