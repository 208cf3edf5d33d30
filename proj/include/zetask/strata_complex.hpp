#pragma once

#include "zetask/errors.hpp"
#include "zetask/laurent.hpp"
#include "zetask/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace zetask {

// One prime component of the resolved divisor: N is the multiplicity of the
// pulled-back divisor along it, nu is one plus the multiplicity of the
// relative canonical divisor. Its weight is nu/N.
struct Divisor {
    std::string id;
    std::string label;
    std::int64_t N = 1;
    std::int64_t nu = 1;
    bool exceptional = false;
    bool meets_x = false;
    // Grothendieck class surrogate of the component, as a Laurent polynomial
    // in L. Only consulted by the motivic zeta path.
    std::optional<LaurentPoly> class_poly;
};

// One cell of the dual complex = one connected stratum. Distinct cells may
// share a vertex set (a regular cell complex, not a simplicial one), so the
// face relation is explicit data rather than derived from vertex sets.
struct Stratum {
    std::string id;
    std::vector<std::string> vertices; // sorted, no repeats
    std::optional<std::int64_t> chi_over_x;
    bool over_x = false;
    std::optional<LaurentPoly> class_over_x;    // in L
    std::optional<LaurentPoly> poincare_over_x; // in u, for non-L-polynomial strata
    std::vector<std::string> faces; // ids of codimension-1 faces

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

enum class ComplexMode { Hypersurface, Degeneration };

struct StrataComplex {
    ComplexMode mode = ComplexMode::Hypersurface;
    int ambient_dimension = 2;
    std::vector<Divisor> vertices;
    std::vector<Stratum> cells;

    const Divisor* find_vertex(const std::string& id) const;
    const Stratum* find_cell(const std::string& id) const;
    std::set<std::string> vertex_ids() const;
    std::set<std::string> cell_ids() const;
};

struct Violation {
    std::string subject; // offending id
    std::string rule;
    std::string message; // e.g. "cell c3: unknown vertex e9"
};

// Empty result iff all data-model invariants hold. Violations are data, not
// exceptions.
std::vector<Violation> validate(const StrataComplex& c);

// Throws DataError with the joined violation messages if validate is nonempty.
void require_valid(const StrataComplex& c);

// vertex id -> nu/N, exact.
using WeightAssignment = std::map<std::string, Rational>;
WeightAssignment weights(const StrataComplex& c);
Rational vertex_weight(const Divisor& v);

// Minimum weight over vertices with meets_x (hypersurface mode).
Rational lct(const StrataComplex& c);
// Minimum weight over all vertices (degeneration mode).
Rational min_weight(const StrataComplex& c);

// Cells whose vertex set is contained in keep; vertices restricted to keep.
StrataComplex spanned_subcomplex(const StrataComplex& c, const std::set<std::string>& keep);

// Spanned subcomplex on the vertices of weight <= w.
StrataComplex level_subcomplex(const StrataComplex& c, const Rational& w);

// The subcomplex of cells lying over x: the face closure of the cells with
// over_x = true. (A cell's faces belong even when their own open strata miss
// the fiber.) In degeneration mode this is the whole complex.
StrataComplex over_x_subcomplex(const StrataComplex& c);

// Hypersurface mode: cells of over_x_subcomplex spanned by the meets_x
// vertices of weight exactly lct. Degeneration mode: spanned subcomplex on
// the vertices of minimal weight.
StrataComplex essential_skeleton(const StrataComplex& c);

// Spanned subcomplex on the exceptional vertices (hypersurface mode).
StrataComplex exceptional_subcomplex(const StrataComplex& c);

std::int64_t euler_characteristic(const StrataComplex& c);

// Ids of cells that are not a face of any other cell, in declaration order.
std::vector<std::string> maximal_cells(const StrataComplex& c);

// Transitive proper-face closure of a cell, via the declared face lists.
std::set<std::string> face_closure(const StrataComplex& c, const std::string& cell_id);

// Distinct vertex weights, ascending.
std::vector<Rational> weight_levels(const StrataComplex& c);

} // namespace zetask
