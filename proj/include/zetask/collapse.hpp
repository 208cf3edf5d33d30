#pragma once

#include "zetask/strata_complex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zetask {

// Removal of the interiors of a cell tau together with one of its proper
// faces sigma; legal exactly when sigma is a face of no cell other than tau.
struct CollapseStep {
    std::string tau;
    std::string sigma;
};

struct CollapseSequence {
    std::vector<CollapseStep> steps;
    std::string source; // informational labels
    std::string target;
};

// All free pairs (tau, sigma), ordered by (tau id, sigma id). sigma ranges
// over proper faces of any codimension, although in a closed complex only
// codimension-one faces can be free.
std::vector<CollapseStep> free_pairs(const StrataComplex& c);

// Applies one elementary collapse; throws DataError listing the blocking
// cofaces when the pair is not free.
StrataComplex apply_collapse(const StrataComplex& c, const CollapseStep& step);

enum class SearchStatus { Found, None, Unknown };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::None: return "none";
        default: return "unknown";
    }
}

struct CollapseSearchResult {
    SearchStatus status = SearchStatus::Unknown;
    CollapseSequence sequence;       // meaningful when status == Found
    std::uint64_t nodes_expanded = 0;
};

constexpr std::uint64_t kDefaultCollapseBudget = 1000000;

// Backtracking search for a collapse of c onto exactly the cell set of
// target. Deterministic: candidates are tried in (tau id, sigma id) order.
// "none" means the whole search space was exhausted; "unknown" means the
// node budget ran out first. Found sequences are re-verified by an
// independent step-by-step replay before being returned.
CollapseSearchResult find_collapse(const StrataComplex& c, const StrataComplex& target,
                                   std::uint64_t budget = kDefaultCollapseBudget);

// Weight-stratified variant: only steps whose two cells have the same
// maximal vertex weight are eligible (any other step breaks some weight
// level), and candidates with larger maximal weight are peeled first. A
// found sequence passes verify_simultaneous at every vertex-weight level.
CollapseSearchResult find_simultaneous_collapse(const StrataComplex& c, const StrataComplex& target,
                                                std::uint64_t budget = kDefaultCollapseBudget);

struct LevelCheck {
    Rational threshold;
    bool pass = false;
    std::string failure; // empty when pass; else the offending step / reason
};

struct SimultaneousReport {
    bool pass = false;
    std::vector<LevelCheck> levels;
};

// For each threshold w: the steps with both cells inside the weight-<=w
// subcomplex must form a valid collapse of it onto target's part, and no
// step may have exactly one cell inside. Replayed with apply_collapse,
// independent of the search internals.
SimultaneousReport verify_simultaneous(const StrataComplex& c, const CollapseSequence& seq,
                                       const StrataComplex& target, const WeightAssignment& w,
                                       const std::vector<Rational>& thresholds);

// Replays seq from c via apply_collapse and checks it ends exactly at
// target's cell set. Throws DataError on an illegal step.
bool replay_collapse(const StrataComplex& c, const CollapseSequence& seq,
                     const StrataComplex& target);

} // namespace zetask
