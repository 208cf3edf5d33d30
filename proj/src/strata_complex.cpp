#include "zetask/strata_complex.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace zetask {

namespace {

std::unordered_map<std::string, std::size_t> index_by_id(const std::vector<Stratum>& cells) {
    std::unordered_map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < cells.size(); ++i) m.emplace(cells[i].id, i);
    return m;
}

StrataComplex restrict_to_cells(const StrataComplex& c, const std::set<std::string>& keep_cells,
                                bool prune_vertices_to_used) {
    StrataComplex r;
    r.mode = c.mode;
    r.ambient_dimension = c.ambient_dimension;
    std::set<std::string> used;
    for (const Stratum& s : c.cells) {
        if (!keep_cells.count(s.id)) continue;
        Stratum t = s;
        t.faces.erase(std::remove_if(t.faces.begin(), t.faces.end(),
                                     [&](const std::string& f) { return !keep_cells.count(f); }),
                      t.faces.end());
        for (const auto& v : t.vertices) used.insert(v);
        r.cells.push_back(std::move(t));
    }
    for (const Divisor& v : c.vertices)
        if (!prune_vertices_to_used || used.count(v.id)) r.vertices.push_back(v);
    return r;
}

} // namespace

const Divisor* StrataComplex::find_vertex(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

const Stratum* StrataComplex::find_cell(const std::string& id) const {
    for (const auto& s : cells)
        if (s.id == id) return &s;
    return nullptr;
}

std::set<std::string> StrataComplex::vertex_ids() const {
    std::set<std::string> r;
    for (const auto& v : vertices) r.insert(v.id);
    return r;
}

std::set<std::string> StrataComplex::cell_ids() const {
    std::set<std::string> r;
    for (const auto& s : cells) r.insert(s.id);
    return r;
}

std::vector<Violation> validate(const StrataComplex& c) {
    std::vector<Violation> out;
    auto add = [&](const std::string& subject, const std::string& rule, const std::string& msg) {
        out.push_back(Violation{subject, rule, msg});
    };

    std::unordered_set<std::string> vids;
    for (const Divisor& v : c.vertices) {
        if (!vids.insert(v.id).second) add(v.id, "unique-id", "vertex " + v.id + ": duplicate id");
        if (v.N < 1) add(v.id, "positive-N", "vertex " + v.id + ": N must be >= 1");
        if (v.nu < 1) add(v.id, "positive-nu", "vertex " + v.id + ": nu must be >= 1");
    }

    std::unordered_set<std::string> cids;
    std::unordered_map<std::string, const Stratum*> cell_of;
    for (const Stratum& s : c.cells) {
        if (!cids.insert(s.id).second) add(s.id, "unique-id", "cell " + s.id + ": duplicate id");
        cell_of.emplace(s.id, &s);
    }

    for (const Stratum& s : c.cells) {
        if (s.vertices.empty()) {
            add(s.id, "nonempty-cell", "cell " + s.id + ": empty vertex set");
            continue;
        }
        std::set<std::string> vset(s.vertices.begin(), s.vertices.end());
        if (vset.size() != s.vertices.size())
            add(s.id, "vertex-set", "cell " + s.id + ": repeated vertex");
        for (const auto& v : s.vertices)
            if (!vids.count(v)) add(s.id, "known-vertex", "cell " + s.id + ": unknown vertex " + v);
        if (s.dim() > c.ambient_dimension - 1)
            add(s.id, "dimension-bound",
                "cell " + s.id + ": dimension exceeds ambient dimension minus one");

        // Listed faces: each must exist and drop exactly one vertex.
        std::set<std::set<std::string>> face_sets;
        for (const auto& f : s.faces) {
            auto it = cell_of.find(f);
            if (it == cell_of.end()) {
                add(s.id, "known-face", "cell " + s.id + ": unknown face " + f);
                continue;
            }
            const Stratum& fs = *it->second;
            std::set<std::string> fset(fs.vertices.begin(), fs.vertices.end());
            bool codim1 = fset.size() + 1 == vset.size() &&
                          std::includes(vset.begin(), vset.end(), fset.begin(), fset.end());
            if (!codim1)
                add(s.id, "face-vertex-set",
                    "cell " + s.id + ": face " + f + " is not its vertex set minus one element");
            else
                face_sets.insert(std::move(fset));
        }
        // Closure: every codimension-1 subset must be covered by some listed face.
        if (s.dim() >= 1) {
            for (const auto& drop : s.vertices) {
                std::set<std::string> sub(s.vertices.begin(), s.vertices.end());
                sub.erase(drop);
                if (!face_sets.count(sub))
                    add(s.id, "face-closure",
                        "cell " + s.id + ": no declared face omitting vertex " + drop);
            }
        } else if (!s.faces.empty()) {
            add(s.id, "face-closure", "cell " + s.id + ": 0-cell lists faces");
        }
    }

    if (c.mode == ComplexMode::Hypersurface) {
        bool any = false;
        for (const Divisor& v : c.vertices) any = any || v.meets_x;
        if (!c.vertices.empty() && !any)
            add("", "meets-x", "hypersurface mode: no vertex with meets_x");
    }
    return out;
}

void require_valid(const StrataComplex& c) {
    auto v = validate(c);
    if (v.empty()) return;
    std::ostringstream msg;
    msg << "invalid strata complex:";
    for (const auto& x : v) msg << "\n  " << x.message;
    throw DataError(msg.str());
}

Rational vertex_weight(const Divisor& v) { return Rational(v.nu, v.N); }

WeightAssignment weights(const StrataComplex& c) {
    WeightAssignment w;
    for (const Divisor& v : c.vertices) w.emplace(v.id, vertex_weight(v));
    return w;
}

Rational lct(const StrataComplex& c) {
    if (c.mode != ComplexMode::Hypersurface)
        throw DataError("lct is defined in hypersurface mode; use min-weight for degenerations");
    bool found = false;
    Rational best;
    for (const Divisor& v : c.vertices) {
        if (!v.meets_x) continue;
        Rational w = vertex_weight(v);
        if (!found || w < best) best = w;
        found = true;
    }
    if (!found) throw DataError("no component over x");
    return best;
}

Rational min_weight(const StrataComplex& c) {
    if (c.vertices.empty()) throw DataError("min-weight of an empty complex");
    Rational best = vertex_weight(c.vertices.front());
    for (const Divisor& v : c.vertices) best = std::min(best, vertex_weight(v));
    return best;
}

StrataComplex spanned_subcomplex(const StrataComplex& c, const std::set<std::string>& keep) {
    std::set<std::string> cells;
    for (const Stratum& s : c.cells) {
        bool inside = true;
        for (const auto& v : s.vertices) inside = inside && keep.count(v) > 0;
        if (inside) cells.insert(s.id);
    }
    StrataComplex r = restrict_to_cells(c, cells, /*prune_vertices_to_used=*/false);
    std::vector<Divisor> vs;
    for (const Divisor& v : r.vertices)
        if (keep.count(v.id)) vs.push_back(v);
    r.vertices = std::move(vs);
    return r;
}

StrataComplex level_subcomplex(const StrataComplex& c, const Rational& w) {
    std::set<std::string> keep;
    for (const Divisor& v : c.vertices)
        if (vertex_weight(v) <= w) keep.insert(v.id);
    return spanned_subcomplex(c, keep);
}

StrataComplex over_x_subcomplex(const StrataComplex& c) {
    if (c.mode == ComplexMode::Degeneration) return c;
    auto idx = index_by_id(c.cells);
    std::set<std::string> keep;
    std::function<void(const Stratum&)> close = [&](const Stratum& s) {
        if (!keep.insert(s.id).second) return;
        for (const auto& f : s.faces) {
            auto it = idx.find(f);
            if (it != idx.end()) close(c.cells[it->second]);
        }
    };
    for (const Stratum& s : c.cells)
        if (s.over_x) close(s);
    return restrict_to_cells(c, keep, /*prune_vertices_to_used=*/true);
}

StrataComplex essential_skeleton(const StrataComplex& c) {
    if (c.mode == ComplexMode::Degeneration) {
        Rational mw = min_weight(c);
        std::set<std::string> keep;
        for (const Divisor& v : c.vertices)
            if (vertex_weight(v) == mw) keep.insert(v.id);
        return spanned_subcomplex(c, keep);
    }
    Rational l = lct(c);
    std::set<std::string> keep;
    for (const Divisor& v : c.vertices)
        if (v.meets_x && vertex_weight(v) == l) keep.insert(v.id);
    return spanned_subcomplex(over_x_subcomplex(c), keep);
}

StrataComplex exceptional_subcomplex(const StrataComplex& c) {
    if (c.mode != ComplexMode::Hypersurface)
        throw DataError("exceptional subcomplex is defined in hypersurface mode");
    std::set<std::string> keep;
    for (const Divisor& v : c.vertices)
        if (v.exceptional) keep.insert(v.id);
    return spanned_subcomplex(c, keep);
}

std::int64_t euler_characteristic(const StrataComplex& c) {
    std::int64_t chi = 0;
    for (const Stratum& s : c.cells) chi += (s.dim() % 2 == 0) ? 1 : -1;
    return chi;
}

std::vector<std::string> maximal_cells(const StrataComplex& c) {
    std::unordered_set<std::string> is_face;
    for (const Stratum& s : c.cells)
        for (const auto& f : s.faces) is_face.insert(f);
    std::vector<std::string> out;
    for (const Stratum& s : c.cells)
        if (!is_face.count(s.id)) out.push_back(s.id);
    return out;
}

std::set<std::string> face_closure(const StrataComplex& c, const std::string& cell_id) {
    auto idx = index_by_id(c.cells);
    std::set<std::string> out;
    std::function<void(const std::string&)> walk = [&](const std::string& id) {
        auto it = idx.find(id);
        if (it == idx.end()) return;
        for (const auto& f : c.cells[it->second].faces)
            if (out.insert(f).second) walk(f);
    };
    walk(cell_id);
    return out;
}

std::vector<Rational> weight_levels(const StrataComplex& c) {
    std::set<Rational> s;
    for (const Divisor& v : c.vertices) s.insert(vertex_weight(v));
    return std::vector<Rational>(s.begin(), s.end());
}

} // namespace zetask
