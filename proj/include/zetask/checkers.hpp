#pragma once

#include "zetask/collapse.hpp"
#include "zetask/strata_complex.hpp"
#include "zetask/zeta.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zetask {

enum class CheckStatus { Pass, Fail, Vacuous, Unknown };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Vacuous: return "VACUOUS";
        default: return "UNKNOWN";
    }
}

struct CheckItem {
    std::string name;
    CheckStatus status = CheckStatus::Vacuous;
    std::string detail;
};

// A failing assertion diagnoses out-of-contract input data (the statements
// hold for genuine resolution data); it is never a refutation of anything.
struct CheckReport {
    std::string checker;
    std::vector<CheckItem> items;
    std::optional<std::string> refusal; // hypothesis not met; items are then empty

    bool any_fail() const {
        for (const auto& i : items)
            if (i.status == CheckStatus::Fail) return true;
        return false;
    }
};

// Every maximal face of the skeleton over x with constant vertex weight must
// sit at weight exactly lct.
CheckReport check_max_face(const StrataComplex& c);

// Pole-side consistency: no pole beyond -lct, any full-order pole sits at
// -lct with m = n and -lct = -1/N, and the specialized motivic zeta has a
// pole of order exactly m there. Orders on the motivic side are the
// specialized ones.
CheckReport check_veys(const StrataComplex& c);

// Degeneration analogue of the maximal-face statement: constant weight on a
// maximal cell must be the minimal weight, and the cell must lie in the
// essential skeleton.
CheckReport check_cy(const StrataComplex& c);

// Weight-filtered collapse onto the essential skeleton. Source depends on
// the mode: the skeleton over x when lct = 1, its exceptional part when
// lct < 1, the whole complex in degeneration mode. Refuses hypersurface
// inputs that are non-reduced at x.
CheckReport check_level_collapse(const StrataComplex& c,
                                 std::uint64_t budget = kDefaultCollapseBudget);

// All checkers applicable to the complex's mode.
std::vector<CheckReport> check_all(const StrataComplex& c,
                                   std::uint64_t budget = kDefaultCollapseBudget);

// Largest cell size among over-x strata whose vertices all sit at weight
// lct (the structural order of the expected maximal pole).
int max_lct_cell_size(const StrataComplex& c);

} // namespace zetask
