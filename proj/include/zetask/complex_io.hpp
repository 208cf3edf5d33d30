#pragma once

#include "zetask/strata_complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zetask {

struct ParseIssue {
    std::string pointer; // JSON pointer, e.g. "/vertices/0/N"
    std::string message;
};

struct ParseResult {
    std::optional<StrataComplex> complex; // present iff issues is empty
    std::vector<ParseIssue> issues;
};

// Parses a strata-complex/1 JSON document. Unknown keys are rejected. On
// success the returned complex already passed validate().
ParseResult parse_complex(const std::string& text);

// Convenience wrapper: throws DataError listing all issues.
StrataComplex parse_complex_or_throw(const std::string& text);

// Canonical emission: fixed key order, two-space indent, sorted Laurent
// terms, trailing newline. Byte-deterministic; parse(emit(c)) == c.
std::string emit_complex(const StrataComplex& c);

StrataComplex load_complex_file(const std::string& path);

} // namespace zetask
