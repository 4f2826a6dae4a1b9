#pragma once

// Closed orientable surfaces with a cyclic symmetry of order P = p_1 ... p_l
// (first l primes) having orbits of every length p_j, built as explicit
// branched covers of a sphere with cone points.

#include <vector>

#include "eqlift/certifier.hpp"
#include "eqlift/complex.hpp"
#include "eqlift/group.hpp"
#include "eqlift/rational.hpp"
#include "eqlift/report.hpp"

namespace eqlift {

std::vector<long> first_primes(int l);

/// Sphere with two cone points of index delta_j = P / p_j for each j.
struct OrbifoldSignature {
  int l = 0;
  std::vector<long> primes;
  long P = 1;
  /// delta_1, delta_1, delta_2, delta_2, ... (unprimed before primed)
  std::vector<long> cone_indices;
};

/// Throws degenerate_signature for l < 2 (delta_1 = 1 is not a cone point).
OrbifoldSignature orbifold_signature(int l);

/// Exponents of the images of the cone generators in Z_P:
/// x_j -> f^a[j], x'_j -> f^a_prime[j].
struct MonodromyData {
  long modulus = 1;
  std::vector<long> a;
  std::vector<long> a_prime;
};

/// Relation, order and surjectivity audits on given exponents.
ValidationReport audit_monodromy(const OrbifoldSignature& sig, const MonodromyData& mono);

/// a_j = p_j, a'_j = -p_j mod P. Throws construction if the audit fails.
MonodromyData monodromy(const OrbifoldSignature& sig);

struct RiemannHurwitz {
  Rational chi_orb;
  long chi = 0;
  long genus = 0;
};

/// chi_orb = 2 - sum (1 - 1/delta); chi = P chi_orb; genus = 1 - chi/2.
/// Throws inconsistency if chi is not an even integer or the genus is negative.
RiemannHurwitz riemann_hurwitz_genus(const OrbifoldSignature& sig);

struct ConePoint {
  int base_vertex = 0;
  long index = 1;         // stabilizer order delta
  long fiber_length = 1;  // P / delta
};

struct BranchedCoverSurface {
  EmbeddedComplex surface;
  VertexAction deck;           // Z_P; label 2 is the generator f
  std::vector<int> projection; // surface vertex -> base vertex
  EmbeddedComplex base;
  std::vector<ConePoint> cones;
  int l = 0;
  long P = 1;
  long genus = 0;
  bool sphere_rotation = false;  // the l = 1 substitute
};

/// Slit construction over a bipyramid base. Audits orientability,
/// connectivity and the Euler count against Riemann-Hurwitz; throws
/// construction on any failure.
BranchedCoverSurface build_branched_cover(const OrbifoldSignature& sig, const MonodromyData& mono);

/// Octahedron with the order-2 rotation about the axis through two opposite
/// vertices (l = 1).
BranchedCoverSurface sphere_rotation_cover();

/// Dispatch: l = 1 gives the sphere rotation, l >= 2 the branched cover.
BranchedCoverSurface forge_surface(int l);

struct OrbitAuditReport {
  ValidationReport report;
  std::vector<long> orbit_lengths;  // generator orbits, ordered by smallest member
  std::vector<long> cone_fiber_lengths;
  bool passed() const { return report.passed(); }
};

/// Orbits of the generator f: each cone fiber is one orbit of length P/delta,
/// every other orbit has length P, and the first l primes all occur.
OrbitAuditReport orbit_audit(const BranchedCoverSurface& cover);

/// 252 (g - 1) + 1. Throws domain for g < 2.
long hurwitz_dimension(long genus);

struct CounterexampleResult {
  int m = 0;
  int l = 0;
  BranchedCoverSurface cover;
  OrbitAuditReport audit;
  ValidationReport monodromy_audit;  // empty for the l = 1 special case
  OrbitProfile profile;
  int bound = 0;
  bool holds() const { return bound > m && audit.passed() && monodromy_audit.passed(); }
};

/// l = floor(m/2) + 1; forge, audit and bound. Throws domain for m < 1.
CounterexampleResult counterexample_pipeline(int m);

}  // namespace eqlift
