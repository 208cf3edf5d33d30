#include "zetask/checkers.hpp"

#include <algorithm>
#include <sstream>

namespace zetask {

namespace {

bool constant_weight(const StrataComplex& c, const Stratum& s, Rational& out) {
    bool first = true;
    for (const auto& vid : s.vertices) {
        const Divisor* v = c.find_vertex(vid);
        if (!v) throw DataError("cell " + s.id + ": unknown vertex " + vid);
        Rational w = vertex_weight(*v);
        if (first) {
            out = w;
            first = false;
        } else if (w != out) {
            return false;
        }
    }
    return !first;
}

} // namespace

int max_lct_cell_size(const StrataComplex& c) {
    Rational l = lct(c);
    StrataComplex sk = over_x_subcomplex(c);
    int m = 0;
    for (const Stratum& s : sk.cells) {
        bool all = true;
        for (const auto& vid : s.vertices) {
            const Divisor* v = c.find_vertex(vid);
            all = all && v && vertex_weight(*v) == l;
        }
        if (all) m = std::max(m, static_cast<int>(s.vertices.size()));
    }
    return m;
}

CheckReport check_max_face(const StrataComplex& c) {
    require_valid(c);
    if (c.mode != ComplexMode::Hypersurface)
        throw DataError("the maximal-face check requires hypersurface mode");
    CheckReport rep;
    rep.checker = "max-face";
    Rational l = lct(c);
    StrataComplex sk = over_x_subcomplex(c);
    for (const std::string& id : maximal_cells(sk)) {
        const Stratum* s = sk.find_cell(id);
        Rational w;
        if (!constant_weight(c, *s, w)) continue;
        CheckItem item;
        item.name = "max-face " + id;
        item.status = (w == l) ? CheckStatus::Pass : CheckStatus::Fail;
        item.detail = "constant weight " + rat_str(w) + " on a maximal face; lct = " + rat_str(l);
        rep.items.push_back(std::move(item));
    }
    if (rep.items.empty())
        rep.items.push_back(CheckItem{"max-face", CheckStatus::Vacuous,
                                      "no maximal face over x has constant weight"});
    return rep;
}

CheckReport check_veys(const StrataComplex& c) {
    require_valid(c);
    if (c.mode != ComplexMode::Hypersurface)
        throw DataError("the pole checker requires hypersurface mode");
    CheckReport rep;
    rep.checker = "veys";
    const int n = c.ambient_dimension;
    Rational l = lct(c);
    int m = max_lct_cell_size(c);
    auto candidates = candidate_poles(c);

    auto z_top = topological_zeta(c);
    auto top_poles = pole_spectrum(z_top, candidates, c);
    auto z_naive = naive_zeta_specialized(c);
    auto naive_poles = pole_spectrum(z_naive, candidates, c);

    auto bound_item = [&](const char* which, const std::vector<PoleReport>& poles) {
        CheckItem item;
        item.name = std::string("largest-pole-bound (") + which + ")";
        item.status = CheckStatus::Pass;
        item.detail = "no pole exceeds -lct = " + rat_str(-l);
        for (const PoleReport& p : poles)
            if (p.order >= 1 && p.candidate > -l) {
                item.status = CheckStatus::Fail;
                item.detail = "pole at " + rat_str(p.candidate) + " exceeds -lct = " + rat_str(-l);
            }
        rep.items.push_back(std::move(item));
    };
    bound_item("topological", top_poles);
    bound_item("specialized motivic", naive_poles);

    auto full_order_item = [&](const char* which, const std::vector<PoleReport>& poles) {
        for (const PoleReport& p : poles) {
            if (p.order != n) continue;
            CheckItem item;
            item.name = std::string("full-order-pole (") + which + ")";
            if (p.candidate == -l && m == n && rat_num(l) == 1) {
                item.status = CheckStatus::Pass;
                item.detail = "order-" + std::to_string(n) + " pole at " + rat_str(p.candidate) +
                              " = -lct; m = n and lct = 1/" + rat_den(l).str();
            } else {
                item.status = CheckStatus::Fail;
                item.detail = "order-" + std::to_string(n) + " pole at " + rat_str(p.candidate) +
                              " but -lct = " + rat_str(-l) + ", m = " + std::to_string(m);
            }
            rep.items.push_back(std::move(item));
        }
    };
    full_order_item("topological", top_poles);
    full_order_item("specialized motivic", naive_poles);

    {
        CheckItem item;
        item.name = "motivic-order-at-lct (specialized)";
        int order = 0;
        for (const PoleReport& p : naive_poles)
            if (p.candidate == -l) order = p.order;
        if (order == m) {
            item.status = CheckStatus::Pass;
            item.detail = "specialized order at -lct is exactly m = " + std::to_string(m);
        } else {
            item.status = CheckStatus::Fail;
            item.detail = "specialized order at -lct is " + std::to_string(order) + ", expected m = " +
                          std::to_string(m);
        }
        rep.items.push_back(std::move(item));
    }

    if (m == n) {
        CheckItem item;
        item.name = "topological-order-at-lct";
        int order = 0;
        bool largest = false;
        for (const PoleReport& p : top_poles)
            if (p.candidate == -l) {
                order = p.order;
                largest = p.is_largest;
            }
        if (order == n && largest) {
            item.status = CheckStatus::Pass;
            item.detail = "m = n: topological pole of order n at -lct, and it is the largest pole";
        } else {
            item.status = CheckStatus::Fail;
            item.detail = "m = n but topological order at -lct is " + std::to_string(order);
        }
        rep.items.push_back(std::move(item));
    }
    return rep;
}

CheckReport check_cy(const StrataComplex& c) {
    require_valid(c);
    if (c.mode != ComplexMode::Degeneration)
        throw DataError("the degeneration check requires degeneration mode");
    CheckReport rep;
    rep.checker = "cy";
    Rational mw = min_weight(c);
    StrataComplex essential = essential_skeleton(c);
    auto essential_cells = essential.cell_ids();
    for (const std::string& id : maximal_cells(c)) {
        const Stratum* s = c.find_cell(id);
        Rational w;
        if (!constant_weight(c, *s, w)) continue;
        CheckItem item;
        item.name = "constant-maximal-face " + id;
        bool ok = (w == mw) && essential_cells.count(id) > 0;
        item.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        item.detail = "constant weight " + rat_str(w) + "; minimal weight " + rat_str(mw) +
                      (essential_cells.count(id) ? "; contained in the essential skeleton"
                                                 : "; not contained in the essential skeleton");
        rep.items.push_back(std::move(item));
    }
    if (rep.items.empty())
        rep.items.push_back(
            CheckItem{"constant-maximal-face", CheckStatus::Vacuous, "no maximal face has constant weight"});
    return rep;
}

CheckReport check_level_collapse(const StrataComplex& c, std::uint64_t budget) {
    require_valid(c);
    CheckReport rep;
    rep.checker = "level-collapse";

    StrataComplex source;
    std::string mode_note;
    if (c.mode == ComplexMode::Hypersurface) {
        for (const Divisor& v : c.vertices) {
            if (!v.exceptional && v.meets_x && v.N > 1) {
                rep.refusal = "the divisor is not reduced at x (component " + v.id +
                              " has multiplicity " + std::to_string(v.N) +
                              "); the collapse statement assumes a reduced divisor";
                return rep;
            }
        }
        Rational l = lct(c);
        StrataComplex sk = over_x_subcomplex(c);
        if (l == 1) {
            source = sk;
            mode_note = "log canonical at x (lct = 1): source is the skeleton over x";
        } else {
            std::set<std::string> exc;
            for (const Divisor& v : c.vertices)
                if (v.exceptional) exc.insert(v.id);
            source = spanned_subcomplex(sk, exc);
            mode_note = "not log canonical at x (lct = " + rat_str(l) +
                        " < 1): source is the exceptional part of the skeleton over x";
        }
    } else {
        source = c;
        mode_note = "degeneration mode: source is the whole skeleton";
    }

    StrataComplex target = essential_skeleton(c);
    CollapseSearchResult res = find_simultaneous_collapse(source, target, budget);

    CheckItem item;
    item.name = "collapse-to-essential";
    if (res.status == SearchStatus::Found) {
        item.status = CheckStatus::Pass;
        item.detail = mode_note + "; collapse found (" + std::to_string(res.sequence.steps.size()) +
                      " steps), all weight levels pass";
    } else if (res.status == SearchStatus::None) {
        item.status = CheckStatus::Fail;
        item.detail = mode_note +
                      "; no collapse exists: the data does not satisfy the collapse conclusion "
                      "(not genuine resolution data?)";
    } else {
        item.status = CheckStatus::Unknown;
        item.detail = mode_note + "; search budget exhausted before a conclusion";
    }
    rep.items.push_back(std::move(item));

    if (res.status == SearchStatus::Found) {
        SimultaneousReport ver =
            verify_simultaneous(source, res.sequence, target, weights(source), weight_levels(source));
        for (const LevelCheck& lc : ver.levels) {
            CheckItem li;
            li.name = "level <= " + rat_str(lc.threshold);
            li.status = lc.pass ? CheckStatus::Pass : CheckStatus::Fail;
            li.detail = lc.pass ? "restricted sequence collapses the level subcomplex" : lc.failure;
            rep.items.push_back(std::move(li));
        }
    }
    return rep;
}

std::vector<CheckReport> check_all(const StrataComplex& c, std::uint64_t budget) {
    std::vector<CheckReport> out;
    if (c.mode == ComplexMode::Hypersurface) {
        out.push_back(check_max_face(c));
        out.push_back(check_veys(c));
    } else {
        out.push_back(check_cy(c));
    }
    out.push_back(check_level_collapse(c, budget));
    return out;
}

} // namespace zetask
