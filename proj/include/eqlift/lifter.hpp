#pragma once

// Equivariant lift of an embedded complex: stack the embedding over the group
// elements, act on the stacked space by permuting blocks, and append one
// sign coordinate when some block permutation reverses orientation.

#include <utility>
#include <vector>

#include "eqlift/complex.hpp"
#include "eqlift/exact_linalg.hpp"
#include "eqlift/exec.hpp"
#include "eqlift/group.hpp"

namespace eqlift {

/// Orthogonal representation of a group on R^(block_size * n) (+1 when
/// extended). Element g maps block i of the output from block i*g of the
/// input; when extended the last coordinate is multiplied by detcol[g-1].
/// Stored structurally, never as dense matrices.
struct BlockOrthogonalRep {
  GroupTable group;
  int block_size = 1;
  std::vector<CayleyPermutation> blocks;  // blocks[g-1].element == g
  bool extended = false;
  std::vector<int> detcol;  // filled for every element; used only when extended

  int order() const { return group.order(); }
  int ambient_dim() const { return block_size * order() + (extended ? 1 : 0); }

  /// matrix(g) * y, structurally.
  RationalVector apply(Label g, const RationalVector& y) const;
  /// Exact dense matrix of element g.
  exact::Matrix dense(Label g) const;
};

struct LiftOptions {
  /// Guard on block_size * |G|.
  long max_dim = 20000;
};

/// Same simplices as the source, coordinates in R^m.
struct LiftedEmbedding {
  EmbeddedComplex complex;
  BlockOrthogonalRep rep;

  int ambient_dim() const { return rep.ambient_dim(); }
};

BlockOrthogonalRep build_block_rep(const GroupTable& g, int block_size);

/// parity(sigma_g)^block_size: the determinant of the unextended block matrix.
int block_det(const BlockOrthogonalRep& rep, Label g);

/// coords(x) = (e(perm[1](x)), ..., e(perm[n](x))). Throws capacity when
/// dim * |G| exceeds options.max_dim, invariant when the complex has no
/// coordinates or the action does not match it.
LiftedEmbedding stack_embedding(const EmbeddedComplex& c, const VertexAction& a,
                                const LiftOptions& options = {});

/// Appends a zero coordinate and the sign column if any block determinant is
/// -1 (or always, with `force`). Otherwise returns the input unchanged.
LiftedEmbedding determinant_extend(LiftedEmbedding le, bool force = false);

struct EquivarianceReport {
  std::size_t checked = 0;
  /// (g, x) with matrix(g) coords(x) != coords(perm[g](x)), sorted.
  std::vector<std::pair<Label, int>> failures;
  bool passed() const { return failures.empty(); }
};

/// Exact check of matrix(g) * coords(x) == coords(perm[g](x)) for all g, x.
EquivarianceReport verify_equivariance(const LiftedEmbedding& le, const VertexAction& a,
                                       Exec exec = Exec::parallel);

/// Structural and homomorphism checks on a representation: sigma_g is right
/// multiplication, detcol matches parity^block_size, matrix(g*h) =
/// matrix(g) matrix(h) for all pairs, and every determinant is +1 when extended.
ValidationReport validate_rep(const BlockOrthogonalRep& rep);

}  // namespace eqlift
