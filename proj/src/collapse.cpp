#include "zetask/collapse.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace zetask {

namespace {

// Index-based view of a complex for the search: transitive proper faces and
// cofaces per cell, live-set as a bit vector.
struct Incidence {
    std::vector<std::string> ids;                 // cell index -> id
    std::unordered_map<std::string, int> index;   // id -> index
    std::vector<std::vector<int>> proper_faces;   // transitive
    std::vector<std::vector<int>> cofaces;        // inverse of proper_faces
    std::vector<Rational> max_weight;             // maximal vertex weight per cell

    explicit Incidence(const StrataComplex& c) {
        const int n = static_cast<int>(c.cells.size());
        ids.reserve(static_cast<std::size_t>(n));
        for (const Stratum& s : c.cells) {
            index.emplace(s.id, static_cast<int>(ids.size()));
            ids.push_back(s.id);
        }
        std::vector<std::vector<int>> direct(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (const auto& f : c.cells[static_cast<std::size_t>(i)].faces) {
                auto it = index.find(f);
                if (it != index.end()) direct[static_cast<std::size_t>(i)].push_back(it->second);
            }
        proper_faces.assign(static_cast<std::size_t>(n), {});
        std::vector<char> mark(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            std::fill(mark.begin(), mark.end(), 0);
            std::vector<int> stack = direct[static_cast<std::size_t>(i)];
            while (!stack.empty()) {
                int j = stack.back();
                stack.pop_back();
                if (mark[static_cast<std::size_t>(j)]) continue;
                mark[static_cast<std::size_t>(j)] = 1;
                proper_faces[static_cast<std::size_t>(i)].push_back(j);
                for (int k : direct[static_cast<std::size_t>(j)]) stack.push_back(k);
            }
            std::sort(proper_faces[static_cast<std::size_t>(i)].begin(), proper_faces[static_cast<std::size_t>(i)].end());
        }
        cofaces.assign(static_cast<std::size_t>(n), {});
        for (int i = 0; i < n; ++i)
            for (int j : proper_faces[static_cast<std::size_t>(i)]) cofaces[static_cast<std::size_t>(j)].push_back(i);

        WeightAssignment wa = weights(c);
        max_weight.assign(static_cast<std::size_t>(n), Rational(0));
        for (int i = 0; i < n; ++i) {
            Rational m = 0;
            bool any = false;
            for (const auto& vid : c.cells[static_cast<std::size_t>(i)].vertices) {
                auto it = wa.find(vid);
                if (it != wa.end()) {
                    m = any ? std::max(m, it->second) : it->second;
                    any = true;
                }
            }
            max_weight[static_cast<std::size_t>(i)] = m;
        }
    }
};

struct LiveSet {
    std::vector<std::uint64_t> bits;
    explicit LiveSet(std::size_t n) : bits((n + 63) / 64, 0) {}
    bool get(int i) const { return (bits[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        if (v)
            bits[static_cast<std::size_t>(i) >> 6] |= std::uint64_t(1) << (i & 63);
        else
            bits[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    bool operator==(const LiveSet& o) const { return bits == o.bits; }
};

struct LiveSetHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint64_t x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct Searcher {
    const Incidence& inc;
    const LiveSet target_live;
    const std::vector<char>& in_target;
    bool stratified;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    std::vector<std::pair<int, int>> found; // (tau, sigma) indices
    std::unordered_set<std::vector<std::uint64_t>, LiveSetHash> dead;

    Searcher(const Incidence& i, LiveSet tgt, const std::vector<char>& int_, bool strat,
             std::uint64_t b)
        : inc(i), target_live(std::move(tgt)), in_target(int_), stratified(strat), budget(b) {}

    std::vector<std::pair<int, int>> candidates(const LiveSet& live) const {
        std::vector<std::pair<int, int>> out;
        const int n = static_cast<int>(inc.ids.size());
        for (int sigma = 0; sigma < n; ++sigma) {
            if (!live.get(sigma) || in_target[static_cast<std::size_t>(sigma)]) continue;
            int tau = -1;
            int count = 0;
            for (int cf : inc.cofaces[static_cast<std::size_t>(sigma)]) {
                if (!live.get(cf)) continue;
                tau = cf;
                if (++count > 1) break;
            }
            if (count != 1 || in_target[static_cast<std::size_t>(tau)]) continue;
            if (stratified &&
                inc.max_weight[static_cast<std::size_t>(tau)] != inc.max_weight[static_cast<std::size_t>(sigma)])
                continue;
            out.emplace_back(tau, sigma);
        }
        std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
            if (stratified) {
                const Rational& wa = inc.max_weight[static_cast<std::size_t>(a.first)];
                const Rational& wb = inc.max_weight[static_cast<std::size_t>(b.first)];
                if (wa != wb) return wa > wb; // peel the heaviest cells first
            }
            if (inc.ids[static_cast<std::size_t>(a.first)] != inc.ids[static_cast<std::size_t>(b.first)])
                return inc.ids[static_cast<std::size_t>(a.first)] < inc.ids[static_cast<std::size_t>(b.first)];
            return inc.ids[static_cast<std::size_t>(a.second)] < inc.ids[static_cast<std::size_t>(b.second)];
        });
        return out;
    }

    bool dfs(LiveSet& live) {
        if (live == target_live) return true;
        if (dead.count(live.bits)) return false;
        if (nodes >= budget) {
            budget_hit = true;
            return false;
        }
        ++nodes;
        for (const auto& [tau, sigma] : candidates(live)) {
            live.set(tau, false);
            live.set(sigma, false);
            found.emplace_back(tau, sigma);
            if (dfs(live)) return true;
            found.pop_back();
            live.set(tau, true);
            live.set(sigma, true);
            if (budget_hit) return false; // budget exhausted below: stop expanding
        }
        dead.insert(live.bits);
        return false;
    }
};

void require_subcomplex(const StrataComplex& c, const StrataComplex& target) {
    auto cells = c.cell_ids();
    for (const Stratum& s : target.cells) {
        if (!cells.count(s.id)) throw DataError("target is not a subcomplex: unknown cell " + s.id);
        const Stratum* orig = c.find_cell(s.id);
        if (orig->vertices != s.vertices)
            throw DataError("target is not a subcomplex: cell " + s.id + " differs from the source");
    }
    auto target_cells = target.cell_ids();
    for (const Stratum& s : target.cells)
        for (const auto& f : c.find_cell(s.id)->faces)
            if (!target_cells.count(f))
                throw DataError("target is not a subcomplex: cell " + s.id + " is missing face " + f);
}

CollapseSearchResult run_search(const StrataComplex& c, const StrataComplex& target, bool stratified,
                                std::uint64_t budget) {
    require_subcomplex(c, target);
    Incidence inc(c);
    const int n = static_cast<int>(inc.ids.size());
    auto target_cells = target.cell_ids();
    LiveSet live(static_cast<std::size_t>(n)), tgt(static_cast<std::size_t>(n));
    std::vector<char> in_target(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        live.set(i, true);
        bool t = target_cells.count(inc.ids[static_cast<std::size_t>(i)]) > 0;
        tgt.set(i, t);
        in_target[static_cast<std::size_t>(i)] = t ? 1 : 0;
    }

    CollapseSearchResult res;
    // Each step removes exactly two cells, so an odd gap is already a proof.
    if ((c.cells.size() - target.cells.size()) % 2 != 0) {
        res.status = SearchStatus::None;
        return res;
    }

    Searcher s(inc, tgt, in_target, stratified, budget);
    bool ok = s.dfs(live);
    res.nodes_expanded = s.nodes;
    if (ok) {
        res.status = SearchStatus::Found;
        res.sequence.source = "source";
        res.sequence.target = "target";
        for (const auto& [tau, sigma] : s.found)
            res.sequence.steps.push_back(
                CollapseStep{inc.ids[static_cast<std::size_t>(tau)], inc.ids[static_cast<std::size_t>(sigma)]});
        if (!replay_collapse(c, res.sequence, target))
            throw InternalError("collapse search produced a sequence that fails replay");
    } else {
        res.status = s.budget_hit ? SearchStatus::Unknown : SearchStatus::None;
    }
    return res;
}

} // namespace

std::vector<CollapseStep> free_pairs(const StrataComplex& c) {
    Incidence inc(c);
    std::vector<CollapseStep> out;
    const int n = static_cast<int>(inc.ids.size());
    for (int sigma = 0; sigma < n; ++sigma) {
        const auto& cfs = inc.cofaces[static_cast<std::size_t>(sigma)];
        if (cfs.size() == 1)
            out.push_back(CollapseStep{inc.ids[static_cast<std::size_t>(cfs.front())],
                                       inc.ids[static_cast<std::size_t>(sigma)]});
    }
    std::sort(out.begin(), out.end(), [](const CollapseStep& a, const CollapseStep& b) {
        if (a.tau != b.tau) return a.tau < b.tau;
        return a.sigma < b.sigma;
    });
    return out;
}

StrataComplex apply_collapse(const StrataComplex& c, const CollapseStep& step) {
    Incidence inc(c);
    auto it_tau = inc.index.find(step.tau);
    auto it_sigma = inc.index.find(step.sigma);
    if (it_tau == inc.index.end()) throw DataError("collapse step: unknown cell " + step.tau);
    if (it_sigma == inc.index.end()) throw DataError("collapse step: unknown cell " + step.sigma);
    const auto& cfs = inc.cofaces[static_cast<std::size_t>(it_sigma->second)];
    bool tau_is_coface = std::find(cfs.begin(), cfs.end(), it_tau->second) != cfs.end();
    if (!tau_is_coface)
        throw DataError("collapse step: " + step.sigma + " is not a proper face of " + step.tau);
    if (cfs.size() != 1) {
        std::ostringstream msg;
        msg << "collapse step: (" << step.tau << ", " << step.sigma << ") is not free; " << step.sigma
            << " is also a face of";
        for (int cf : cfs)
            if (cf != it_tau->second) msg << " " << inc.ids[static_cast<std::size_t>(cf)];
        throw DataError(msg.str());
    }
    StrataComplex r = c;
    r.cells.erase(std::remove_if(r.cells.begin(), r.cells.end(),
                                 [&](const Stratum& s) { return s.id == step.tau || s.id == step.sigma; }),
                  r.cells.end());
    for (Stratum& s : r.cells)
        s.faces.erase(std::remove_if(s.faces.begin(), s.faces.end(),
                                     [&](const std::string& f) { return f == step.tau || f == step.sigma; }),
                      s.faces.end());
    return r;
}

CollapseSearchResult find_collapse(const StrataComplex& c, const StrataComplex& target,
                                   std::uint64_t budget) {
    return run_search(c, target, /*stratified=*/false, budget);
}

CollapseSearchResult find_simultaneous_collapse(const StrataComplex& c, const StrataComplex& target,
                                                std::uint64_t budget) {
    CollapseSearchResult res = run_search(c, target, /*stratified=*/true, budget);
    if (res.status == SearchStatus::Found) {
        SimultaneousReport rep =
            verify_simultaneous(c, res.sequence, target, weights(c), weight_levels(c));
        if (!rep.pass) throw InternalError("stratified search returned a level-breaking sequence");
    }
    return res;
}

bool replay_collapse(const StrataComplex& c, const CollapseSequence& seq, const StrataComplex& target) {
    StrataComplex cur = c;
    for (const CollapseStep& st : seq.steps) cur = apply_collapse(cur, st);
    return cur.cell_ids() == target.cell_ids();
}

SimultaneousReport verify_simultaneous(const StrataComplex& c, const CollapseSequence& seq,
                                       const StrataComplex& target, const WeightAssignment& w,
                                       const std::vector<Rational>& thresholds) {
    SimultaneousReport report;
    report.pass = true;
    auto cell_max_weight = [&](const Stratum& s) {
        Rational m = 0;
        bool any = false;
        for (const auto& vid : s.vertices) {
            auto it = w.find(vid);
            if (it != w.end()) {
                m = any ? std::max(m, it->second) : it->second;
                any = true;
            }
        }
        return m;
    };
    for (const Rational& level : thresholds) {
        LevelCheck check;
        check.threshold = level;
        std::set<std::string> level_cells;
        StrataComplex level_start;
        level_start.mode = c.mode;
        level_start.ambient_dimension = c.ambient_dimension;
        level_start.vertices = c.vertices;
        for (const Stratum& s : c.cells)
            if (cell_max_weight(s) <= level) {
                level_cells.insert(s.id);
                level_start.cells.push_back(s);
            }
        for (Stratum& s : level_start.cells)
            s.faces.erase(std::remove_if(s.faces.begin(), s.faces.end(),
                                         [&](const std::string& f) { return !level_cells.count(f); }),
                          s.faces.end());
        std::set<std::string> target_level;
        for (const Stratum& s : target.cells)
            if (level_cells.count(s.id)) target_level.insert(s.id);

        StrataComplex cur = std::move(level_start);
        check.pass = true;
        for (const CollapseStep& st : seq.steps) {
            bool in_tau = level_cells.count(st.tau) > 0;
            bool in_sigma = level_cells.count(st.sigma) > 0;
            if (in_tau != in_sigma) {
                check.pass = false;
                check.failure = "step (" + st.tau + ", " + st.sigma +
                                ") has exactly one cell inside the level";
                break;
            }
            if (!in_tau) continue;
            try {
                cur = apply_collapse(cur, st);
            } catch (const DataError& e) {
                check.pass = false;
                check.failure = e.what();
                break;
            }
        }
        if (check.pass && cur.cell_ids() != target_level) {
            check.pass = false;
            check.failure = "restricted sequence does not reach the restricted target";
        }
        report.pass = report.pass && check.pass;
        report.levels.push_back(std::move(check));
    }
    return report;
}

} // namespace zetask
