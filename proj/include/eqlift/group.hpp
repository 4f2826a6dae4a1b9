#pragma once

// Finite groups as multiplication tables over the labels {1, ..., n}, with 1
// the identity. Labels are 1-based at every interface; vertex indices are
// 0-based.
//
// Composition convention, used everywhere in the library:
//   an action assigns to each label g a map rho(g), and
//     rho(i * j)(x) = rho(i)(rho(j)(x)).
// For vertex permutations stored as arrays this reads
//     perm[i*j][x] == perm[i][perm[j][x]].
// Right multiplication sigma_g(i) = i * g then satisfies
//     sigma_{g*h} = sigma_h o sigma_g,
// which is what makes the block representation a homomorphism.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "eqlift/exec.hpp"
#include "eqlift/report.hpp"

namespace eqlift {

using Label = int;

class GroupTable {
 public:
  GroupTable() = default;
  /// `rows[i-1][j-1] = i * j`. Only the shape is checked here; see validate_table.
  explicit GroupTable(std::vector<std::vector<Label>> rows);

  int order() const { return order_; }
  Label mul(Label a, Label b) const {
    return entries_[static_cast<std::size_t>(a - 1) * order_ + (b - 1)];
  }
  bool contains(Label g) const { return g >= 1 && g <= order_; }
  std::vector<std::vector<Label>> rows() const;
  /// Inverse label; requires a validated table.
  Label inverse(Label g) const;

  friend bool operator==(const GroupTable&, const GroupTable&) = default;

 private:
  int order_ = 0;
  std::vector<Label> entries_;
};

struct CayleyPermutation {
  Label element = 1;
  std::vector<Label> sigma;  // sigma[i-1] = i * element
  int parity = 1;
};

/// Z_n with label k standing for f^(k-1). Throws invalid_order for n < 1.
GroupTable make_cyclic(int n);

/// Latin square, identity, associativity (all n^3 triples) and inverses.
ValidationReport validate_table(const GroupTable& t, Exec exec = Exec::parallel);

/// First failing triple (a, b, c) with (a*b)*c != a*(b*c), if any.
std::optional<std::array<Label, 3>> find_nonassociative(const GroupTable& t, Exec exec);

CayleyPermutation right_mult_permutation(const GroupTable& t, Label g);

/// Sign of a permutation of {0..n-1} (or of {1..n} when `one_based`).
int permutation_parity(std::span<const int> perm, bool one_based = false);

/// A group acting on vertex indices {0, ..., V-1}: perms[g-1][x] is the image
/// of x under g.
struct VertexAction {
  GroupTable group;
  std::vector<std::vector<int>> perms;

  const std::vector<int>& perm(Label g) const { return perms[static_cast<std::size_t>(g - 1)]; }
  int vertex_count() const { return perms.empty() ? 0 : static_cast<int>(perms.front().size()); }
};

/// Shape, bijectivity, identity and homomorphism checks (no simplicial data).
ValidationReport validate_vertex_action(const VertexAction& a, Exec exec = Exec::parallel);

/// Pairs (i, j) for which perm[i*j] != perm[i] o perm[j], sorted.
std::vector<std::array<Label, 2>> homomorphism_failures(const VertexAction& a, Exec exec);

struct OrbitPartition {
  std::vector<std::vector<int>> orbits;  // each sorted; ordered by smallest member
  std::vector<long> lengths;             // lengths[k] = orbits[k].size()
};

/// Orbits of the vertex action. Throws consistency when the action is not a
/// homomorphic action of its group.
OrbitPartition orbits(const VertexAction& a);

}  // namespace eqlift
