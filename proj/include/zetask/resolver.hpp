#pragma once

#include "zetask/plane_poly.hpp"
#include "zetask/strata_complex.hpp"

#include <string>
#include <utility>
#include <vector>

namespace zetask {

// One point blowup in the resolution history.
struct BlowupRecord {
    int id = 0;
    int parent = -1; // index of the blowup whose divisor the center sits on; -1 for the origin
    std::string chart_path;        // e.g. "/2@(0,-1)" chart choices with translation offsets
    std::vector<std::string> exc_through; // exceptional divisors through the center
    std::string divisor;           // id of the divisor this blowup creates
    std::int64_t N = 0;
    std::int64_t nu = 0;
    int mult_red = 0;              // multiplicity of the reduced strict transform at the center
    int mult_full = 0;             // multiplicity of the full strict transform
    std::string strict_transform;  // rendered local equation at the center
};

// A prime component of the final total transform over the origin.
struct ResolvedDivisor {
    std::string id;
    std::int64_t N = 1;
    std::int64_t nu = 1;
    bool exceptional = false;
    // For exceptional divisors: composed chart map back to the input
    // coordinates, with the divisor at {first coordinate = 0} when axis == 0,
    // {second coordinate = 0} when axis == 1. Used by the slow pullback
    // cross-checks.
    PlanePoly map_x, map_y;
    int axis = 0;
};

struct ResolutionTree {
    std::vector<BlowupRecord> nodes;
    std::vector<ResolvedDivisor> divisors;
    std::vector<std::pair<std::string, std::string>> crossings; // final pairwise intersections
};

struct ResolveOutput {
    ResolutionTree tree;
    StrataComplex complex;
};

// Embedded resolution of the germ of f at the origin by iterated point
// blowups. f must vanish at the origin and be nonzero; f may be non-reduced
// (component multiplicities flow into N). Every blowup center must be
// rational; an irrational center raises DataError naming the obstructing
// polynomial. Deterministic: fixed processing order of chart points.
ResolveOutput resolve_curve(const PlanePoly& f, int max_blowups = 10000);

// f(X(u,v), Y(u,v)): polynomial composition, exact.
PlanePoly plane_compose(const PlanePoly& f, const PlanePoly& X, const PlanePoly& Y);

// Order of vanishing of f at the point (a, b).
int multiplicity_at(const PlanePoly& f, const Rational& a, const Rational& b);

// One point blowup at the origin: the two chart strict transforms and the
// multiplicity data of the new divisor. incoming lists the (N, nu) of the
// exceptional divisors through the center.
struct BlowupCharts {
    PlanePoly chart1_strict; // (x, y) = (u, u*v), new divisor {u = 0}
    PlanePoly chart2_strict; // (x, y) = (s*t, t), new divisor {t = 0}
    std::int64_t N = 0;
    std::int64_t nu = 0;
    int multiplicity = 0;
};
BlowupCharts blowup_charts(const PlanePoly& f,
                           const std::vector<std::pair<std::int64_t, std::int64_t>>& incoming);

} // namespace zetask
