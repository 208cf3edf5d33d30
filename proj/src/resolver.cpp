#include "zetask/resolver.hpp"

#include "zetask/zeta.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zetask {

PlanePoly plane_compose(const PlanePoly& f, const PlanePoly& X, const PlanePoly& Y) {
    PlanePoly out;
    for (const auto& [k, c] : f.terms()) {
        PlanePoly t = PlanePoly::constant(c) * X.pow(static_cast<unsigned>(k.first)) *
                      Y.pow(static_cast<unsigned>(k.second));
        out = out + t;
    }
    return out;
}

int multiplicity_at(const PlanePoly& f, const Rational& a, const Rational& b) {
    if (f.is_zero()) throw DataError("multiplicity of the zero polynomial");
    PlanePoly g = f.translated(a, b);
    if (g.eval(0, 0) != 0) return 0;
    return g.multiplicity_at_origin();
}

BlowupCharts blowup_charts(const PlanePoly& f,
                           const std::vector<std::pair<std::int64_t, std::int64_t>>& incoming) {
    if (f.is_zero() || f.eval(0, 0) != 0)
        throw DataError("blowup center must lie on the curve");
    BlowupCharts out;
    out.multiplicity = f.multiplicity_at_origin();
    out.N = out.multiplicity;
    out.nu = 2;
    for (const auto& [N, nu] : incoming) {
        out.N += N;
        out.nu += nu - 1;
    }
    out.chart1_strict = f.substitute_chart1().divide_x_power(out.multiplicity);
    out.chart2_strict = f.substitute_chart2().divide_y_power(out.multiplicity);
    return out;
}

namespace {

struct ThroughDiv {
    int divisor = -1; // index into Resolver::divisors_
    int axis = 0;     // 0: local {x=0}, 1: local {y=0}
};

struct PointCtx {
    PlanePoly g_red;  // reduced strict transform, point at the local origin
    PlanePoly g_full; // full-multiplicity strict transform
    std::vector<ThroughDiv> exc;
    PlanePoly map_x, map_y; // local coords -> input coords
    int depth = 0;
    int parent_node = -1; // blowup that created the divisor this point sits on
    std::string chart_path;
};

class Resolver {
public:
    explicit Resolver(const PlanePoly& f, int max_blowups) : max_blowups_(max_blowups) {
        if (f.is_zero()) throw DataError("cannot resolve the zero polynomial");
        if (f.eval(0, 0) != 0) throw DataError("f(0,0) must vanish");
        PointCtx root;
        root.g_full = f;
        root.g_red = squarefree_part(f);
        root.map_x = PlanePoly::monomial(1, 0, 1);
        root.map_y = PlanePoly::monomial(0, 1, 1);
        process_root(std::move(root));
        assemble_complex();
    }

    ResolveOutput take() { return ResolveOutput{std::move(tree_), std::move(complex_)}; }

private:
    // -- registries ---------------------------------------------------------

    int add_exceptional(std::int64_t N, std::int64_t nu, PlanePoly mx, PlanePoly my, int axis) {
        ResolvedDivisor d;
        d.id = "E" + std::to_string(++exc_count_);
        d.N = N;
        d.nu = nu;
        d.exceptional = true;
        d.map_x = std::move(mx);
        d.map_y = std::move(my);
        d.axis = axis;
        divisors_.push_back(std::move(d));
        return static_cast<int>(divisors_.size()) - 1;
    }

    int add_branch(std::int64_t N) {
        ResolvedDivisor d;
        d.id = "C" + std::to_string(++branch_count_);
        d.N = N;
        d.nu = 1;
        d.exceptional = false;
        divisors_.push_back(std::move(d));
        return static_cast<int>(divisors_.size()) - 1;
    }

    void add_crossing(int a, int b) { crossings_.emplace_back(a, b); }

    // -- SNC decisions ------------------------------------------------------

    void process_root(PointCtx p) {
        if (p.g_red.eval(0, 0) != 0) throw InternalError("root point is not on the curve");
        int m_red = p.g_red.multiplicity_at_origin();
        if (m_red == 1) {
            // One smooth branch, nothing else over the origin: its open
            // stratum is the whole germ and still meets the fiber.
            int b = add_branch(p.g_full.multiplicity_at_origin());
            lone_branch_ = b;
            return;
        }
        if (m_red == 2) {
            PlanePoly cone = p.g_red.initial_form();
            // a*x^2 + b*x*y + c*y^2 with two distinct directions is an
            // ordinary node: two smooth transverse branches, already snc.
            Rational a = cone.coeff(2, 0), bq = cone.coeff(1, 1), c = cone.coeff(0, 2);
            if (bq * bq - 4 * a * c != 0) {
                emit_node_branches(p);
                return;
            }
        }
        blow_up(std::move(p));
    }

    void process_point(PointCtx p) {
        if (p.g_red.eval(0, 0) != 0) throw InternalError("processed point is not on the curve");
        if (p.exc.size() == 2) {
            blow_up(std::move(p)); // curve through a crossing of two exceptionals
            return;
        }
        if (p.exc.size() != 1) throw InternalError("interior point reached the resolver");
        const ThroughDiv th = p.exc.front();
        // Intersection number of the reduced curve with the divisor axis;
        // one means a smooth transverse branch.
        Polynomial<Rational> restricted = th.axis == 0 ? p.g_red.restrict_x0() : p.g_red.restrict_y0();
        if (restricted.is_zero()) throw InternalError("strict transform contains the divisor");
        int contact = root_multiplicity(restricted, Rational(0));
        if (contact == 1) {
            Polynomial<Rational> full_restricted =
                th.axis == 0 ? p.g_full.restrict_x0() : p.g_full.restrict_y0();
            int N = root_multiplicity(full_restricted, Rational(0));
            int b = add_branch(N);
            add_crossing(th.divisor, b);
            return;
        }
        blow_up(std::move(p));
    }

    void emit_node_branches(const PointCtx& p) {
        // Initial form of the full transform is c * x^a0 * prod (y - t x)^e
        // (times an irrational part); exponents are the branch multiplicities.
        PlanePoly cone = p.g_full.initial_form();
        int m_full = p.g_full.multiplicity_at_origin();
        Polynomial<Rational> dehom;
        {
            // cone(1, v)
            std::vector<Rational> coeffs(static_cast<std::size_t>(m_full) + 1, Rational(0));
            for (const auto& [k, c] : cone.terms()) coeffs[static_cast<std::size_t>(k.second)] = c;
            dehom = Polynomial<Rational>(std::move(coeffs));
        }
        int a0 = m_full - dehom.degree(); // exponent of the {x=0} direction
        std::vector<std::int64_t> mults;
        if (a0 > 0) mults.push_back(a0);
        RationalRoots rr = rational_roots(dehom);
        for (const auto& [root, mult] : rr.roots) mults.push_back(mult);
        if (!rr.residual.is_constant()) {
            // Conjugate pair of directions: a power of one irreducible
            // quadratic, giving two branches of equal multiplicity.
            auto classes = squarefree_decomposition(rr.residual);
            int e = 0;
            for (std::size_t i = 1; i <= classes.size(); ++i) {
                if (classes[i - 1].degree() == 0) continue;
                if (e != 0 || classes[i - 1].degree() != 2)
                    throw InternalError("node with more than two directions");
                e = static_cast<int>(i);
            }
            mults.push_back(e);
            mults.push_back(e);
        }
        if (mults.size() != 2) throw InternalError("node must have exactly two branches");
        int b1 = add_branch(mults[0]);
        int b2 = add_branch(mults[1]);
        add_crossing(b1, b2);
    }

    // -- blowup -------------------------------------------------------------

    void blow_up(PointCtx p) {
        if (++blowups_ > max_blowups_) throw InternalError("blowup budget exhausted");
        int m_red = p.g_red.multiplicity_at_origin();
        int m_full = p.g_full.multiplicity_at_origin();
        std::int64_t N = m_full;
        std::int64_t nu = 2;
        std::vector<std::string> through_ids;
        for (const ThroughDiv& t : p.exc) {
            N += divisors_[static_cast<std::size_t>(t.divisor)].N;
            nu += divisors_[static_cast<std::size_t>(t.divisor)].nu - 1;
            through_ids.push_back(divisors_[static_cast<std::size_t>(t.divisor)].id);
        }

        // Chart 1: (x, y) = (u, u v), new divisor {u = 0}.
        PlanePoly mx1 = plane_compose(p.map_x, PlanePoly::monomial(1, 0, 1),
                                      PlanePoly::monomial(1, 1, 1));
        PlanePoly my1 = plane_compose(p.map_y, PlanePoly::monomial(1, 0, 1),
                                      PlanePoly::monomial(1, 1, 1));
        int e_new = add_exceptional(N, nu, mx1, my1, 0);

        BlowupRecord rec;
        rec.id = static_cast<int>(tree_.nodes.size());
        rec.parent = p.parent_node;
        rec.chart_path = p.chart_path.empty() ? "@origin" : p.chart_path;
        rec.exc_through = through_ids;
        rec.divisor = divisors_[static_cast<std::size_t>(e_new)].id;
        rec.N = N;
        rec.nu = nu;
        rec.mult_red = m_red;
        rec.mult_full = m_full;
        rec.strict_transform = p.g_red.str();
        int node_id = rec.id;
        tree_.nodes.push_back(std::move(rec));

        const ThroughDiv* axis0_old = nullptr;
        const ThroughDiv* axis1_old = nullptr;
        for (const ThroughDiv& t : p.exc) (t.axis == 0 ? axis0_old : axis1_old) = &t;

        PlanePoly g_red1 = p.g_red.substitute_chart1().divide_x_power(m_red);
        PlanePoly g_full1 = p.g_full.substitute_chart1().divide_x_power(m_full);
        Polynomial<Rational> r = g_red1.restrict_x0();
        if (r.is_zero()) throw InternalError("strict transform vanished on the new divisor");

        // Multiplicity cannot rise at an infinitely near point.
        auto guard_child = [&](const PlanePoly& child_red) {
            if (child_red.eval(0, 0) == 0 && child_red.multiplicity_at_origin() > m_red)
                throw InternalError("multiplicity increased under blowup");
        };

        // 1. chart-1 origin: crossing with the strict transform of an old
        //    {y=0} divisor, or a plain curve point.
        bool curve_at_chart1_origin = r.eval(0) == 0;
        if (axis1_old) {
            if (curve_at_chart1_origin) {
                PointCtx q;
                q.g_red = g_red1;
                q.g_full = g_full1;
                q.exc = {ThroughDiv{e_new, 0}, ThroughDiv{axis1_old->divisor, 1}};
                q.map_x = mx1;
                q.map_y = my1;
                q.depth = p.depth + 1;
                q.parent_node = node_id;
                q.chart_path = p.chart_path + "/1@(0,0)";
                guard_child(q.g_red);
                process_point(std::move(q));
            } else {
                add_crossing(e_new, axis1_old->divisor);
            }
        } else if (curve_at_chart1_origin) {
            PointCtx q;
            q.g_red = g_red1;
            q.g_full = g_full1;
            q.exc = {ThroughDiv{e_new, 0}};
            q.map_x = mx1;
            q.map_y = my1;
            q.depth = p.depth + 1;
            q.parent_node = node_id;
            q.chart_path = p.chart_path + "/1@(0,0)";
            guard_child(q.g_red);
            process_point(std::move(q));
        }

        // 2. other rational curve points on the new divisor in chart 1,
        //    ascending.
        RationalRoots roots = rational_roots(r);
        for (const auto& [v0, mult] : roots.roots) {
            if (v0 == 0) continue;
            PointCtx q;
            q.g_red = g_red1.translated(0, v0);
            q.g_full = g_full1.translated(0, v0);
            q.exc = {ThroughDiv{e_new, 0}};
            q.map_x = plane_compose(mx1, PlanePoly::monomial(1, 0, 1),
                                    PlanePoly::monomial(0, 1, 1) + PlanePoly::constant(v0));
            q.map_y = plane_compose(my1, PlanePoly::monomial(1, 0, 1),
                                    PlanePoly::monomial(0, 1, 1) + PlanePoly::constant(v0));
            q.depth = p.depth + 1;
            q.parent_node = node_id;
            q.chart_path = p.chart_path + "/1@(0," + rat_str(v0) + ")";
            guard_child(q.g_red);
            process_point(std::move(q));
        }

        // 3. irrational curve points: acceptable only as simple transverse
        //    crossings; anything needing a blowup is out of this tool's
        //    point-field support.
        if (!roots.residual.is_constant()) {
            Polynomial<Rational> rd = r.derivative();
            Polynomial<Rational> common = Polynomial<Rational>::gcd(roots.residual, rd);
            if (common.degree() > 0)
                throw DataError("requires algebraic point support: " + render_poly(common, "t"));
            Polynomial<Rational> rfull = g_full1.restrict_x0();
            auto classes = squarefree_decomposition(rfull);
            int accounted = 0;
            for (std::size_t e = 1; e <= classes.size(); ++e) {
                Polynomial<Rational> shared =
                    Polynomial<Rational>::gcd(roots.residual, classes[e - 1]);
                for (int i = 0; i < shared.degree(); ++i) {
                    int b = add_branch(static_cast<std::int64_t>(e));
                    add_crossing(e_new, b);
                }
                accounted += std::max(shared.degree(), 0);
            }
            if (accounted != roots.residual.degree())
                throw InternalError("irrational branch points not fully classified");
        }

        // 4. chart-2 origin: (x, y) = (s t, t), new divisor {t = 0}.
        PlanePoly mx2 = plane_compose(p.map_x, PlanePoly::monomial(1, 1, 1),
                                      PlanePoly::monomial(0, 1, 1));
        PlanePoly my2 = plane_compose(p.map_y, PlanePoly::monomial(1, 1, 1),
                                      PlanePoly::monomial(0, 1, 1));
        PlanePoly g_red2 = p.g_red.substitute_chart2().divide_y_power(m_red);
        PlanePoly g_full2 = p.g_full.substitute_chart2().divide_y_power(m_full);
        bool curve_at_chart2_origin = g_red2.eval(0, 0) == 0;
        if (curve_at_chart2_origin) {
            PointCtx q;
            q.g_red = g_red2;
            q.g_full = g_full2;
            q.exc = axis0_old ? std::vector<ThroughDiv>{ThroughDiv{axis0_old->divisor, 0},
                                                        ThroughDiv{e_new, 1}}
                              : std::vector<ThroughDiv>{ThroughDiv{e_new, 1}};
            q.map_x = mx2;
            q.map_y = my2;
            q.depth = p.depth + 1;
            q.parent_node = node_id;
            q.chart_path = p.chart_path + "/2@(0,0)";
            guard_child(q.g_red);
            process_point(std::move(q));
        } else if (axis0_old) {
            add_crossing(axis0_old->divisor, e_new);
        }
    }

    // -- complex assembly ----------------------------------------------------

    void assemble_complex() {
        complex_.mode = ComplexMode::Hypersurface;
        complex_.ambient_dimension = 2;
        std::map<int, int> crossing_count;
        for (const auto& [a, b] : crossings_) {
            ++crossing_count[a];
            ++crossing_count[b];
        }
        for (std::size_t i = 0; i < divisors_.size(); ++i) {
            const ResolvedDivisor& d = divisors_[i];
            Divisor v;
            v.id = d.id;
            v.label = d.exceptional ? "exceptional divisor " + d.id : "strict transform branch " + d.id;
            v.N = d.N;
            v.nu = d.nu;
            v.exceptional = d.exceptional;
            v.meets_x = true;
            complex_.vertices.push_back(std::move(v));
        }
        // 0-cells.
        for (std::size_t i = 0; i < divisors_.size(); ++i) {
            const ResolvedDivisor& d = divisors_[i];
            Stratum s;
            s.id = "v:" + d.id;
            s.vertices = {d.id};
            int c = crossing_count.count(static_cast<int>(i)) ? crossing_count[static_cast<int>(i)] : 0;
            if (d.exceptional) {
                // A projective line minus its crossing points, entirely over x.
                s.over_x = true;
                s.chi_over_x = 2 - c;
                s.class_over_x = LaurentPoly::monomial("L", 1, 1) + LaurentPoly::constant("L", 1 - c);
            } else if (static_cast<int>(i) == lone_branch_) {
                // The smooth-germ case: the branch is the whole fiber story.
                s.over_x = true;
                s.chi_over_x = 1;
                s.class_over_x = LaurentPoly::constant("L", 1);
            } else {
                // Its points over x sit on exceptional divisors or other
                // branches, so the open stratum misses the fiber.
                s.over_x = false;
                s.chi_over_x = 0;
                s.class_over_x = LaurentPoly("L");
            }
            complex_.cells.push_back(std::move(s));
        }
        // 1-cells: one per crossing point, all over the origin.
        std::map<std::pair<int, int>, int> seen;
        for (const auto& [a, b] : crossings_) {
            int lo = std::min(a, b), hi = std::max(a, b);
            int n = ++seen[{lo, hi}];
            const std::string& ida = divisors_[static_cast<std::size_t>(lo)].id;
            const std::string& idb = divisors_[static_cast<std::size_t>(hi)].id;
            Stratum s;
            s.id = "e:" + ida + "-" + idb + (n > 1 ? ":" + std::to_string(n) : "");
            s.vertices = {ida, idb};
            std::sort(s.vertices.begin(), s.vertices.end());
            s.over_x = true;
            s.chi_over_x = 1;
            s.class_over_x = LaurentPoly::constant("L", 1);
            s.faces = {"v:" + ida, "v:" + idb};
            complex_.cells.push_back(std::move(s));
            tree_.crossings.emplace_back(ida, idb);
        }
        tree_.divisors = divisors_;
        if (!validate(complex_).empty())
            throw InternalError("resolver emitted an invalid strata complex");
    }

    int max_blowups_;
    int blowups_ = 0;
    int exc_count_ = 0;
    int branch_count_ = 0;
    int lone_branch_ = -1;
    std::vector<ResolvedDivisor> divisors_;
    std::vector<std::pair<int, int>> crossings_;
    ResolutionTree tree_;
    StrataComplex complex_;
};

} // namespace

ResolveOutput resolve_curve(const PlanePoly& f, int max_blowups) {
    Resolver r(f, max_blowups);
    return r.take();
}

} // namespace zetask
