#pragma once

// Finite simplicial complexes of dimension <= 2 with exact rational vertex
// coordinates, and their piecewise-linear embedding checks.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "eqlift/exec.hpp"
#include "eqlift/group.hpp"
#include "eqlift/rational.hpp"
#include "eqlift/report.hpp"

namespace eqlift {

enum class ComplexMode { general, closed_surface };

using Edge = std::array<int, 2>;
using Triangle = std::array<int, 3>;

/// Vertices 0..V-1, sorted simplices, and (optionally) coordinates in R^dim.
/// `edges` is closed under taking faces: every triangle edge is present.
/// A complex with no coordinates is abstract (dim == 0, coords empty).
struct EmbeddedComplex {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<Triangle> triangles;
  int dim = 0;
  std::vector<RationalVector> coords;
  ComplexMode mode = ComplexMode::general;

  bool has_coordinates() const { return !coords.empty(); }
};

/// Normalizes the simplices (sorts each tuple, adds missing triangle edges,
/// dedups) and validates every invariant for `mode`. Throws
/// Error(invariant) naming the first failed invariant.
EmbeddedComplex make_complex(int vertex_count, std::vector<Edge> edges,
                             std::vector<Triangle> triangles, std::vector<RationalVector> coords,
                             ComplexMode mode);

/// All structural and coordinate invariants as a report.
ValidationReport check_complex(const EmbeddedComplex& c);

/// Edge-in-two-triangles, vertex links are single cycles, connected, non-degenerate.
ValidationReport closed_surface_checks(const EmbeddedComplex& c);

/// Homomorphism, simpliciality and faithfulness of `a` on `c`.
ValidationReport validate_action(const EmbeddedComplex& c, const VertexAction& a,
                                 Exec exec = Exec::parallel);

long euler_characteristic(const EmbeddedComplex& c);

/// Consistent triangle orientation by propagation over the dual graph.
/// Meaningful for closed surfaces; returns false if any edge is shared by a
/// number of triangles other than two.
bool is_orientable(const EmbeddedComplex& c);

/// Result of the exact PL embedding check.
struct EmbeddingReport {
  bool vertex_injective = true;
  bool simplices_nondegenerate = true;
  /// Pairs of maximal simplices (indices into `maximal`) whose images meet
  /// outside the image of their shared face, sorted.
  std::vector<std::pair<int, int>> bad_pairs;
  std::vector<std::vector<int>> maximal;
  std::size_t pairs_tested = 0;
  std::string detail;

  bool embedded() const { return vertex_injective && simplices_nondegenerate && bad_pairs.empty(); }
};

/// True iff coordinates are vertex-injective, every simplex is affinely
/// nondegenerate and any two simplex images meet exactly in the image of their
/// common face. All predicates are exact.
EmbeddingReport verify_pl_embedding(const EmbeddedComplex& c, Exec exec = Exec::parallel);

/// Same complex with vertex 0 at the origin and vertex i at the i-th standard
/// basis vector of R^(V-1): always a PL embedding.
EmbeddedComplex with_canonical_coordinates(const EmbeddedComplex& c);

/// Applies a vertex relabeling to every simplex.
EmbeddedComplex relabel(const EmbeddedComplex& c, const std::vector<int>& perm);

/// OFF text ("OFF" for dim 3, "nOFF" otherwise) with floating coordinates.
std::string to_off(const EmbeddedComplex& c);

}  // namespace eqlift
