#include <doctest.h>

#include <algorithm>

#include "eqlift/error.hpp"
#include "eqlift/forge.hpp"
#include "oracles.hpp"

using namespace eqlift;

namespace {

std::vector<long> sorted(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Orbit lengths of the generator on the cone fibres, computed directly from
// the projection map: every vertex over cone base vertex b lies in one orbit.
std::vector<long> cone_orbit_lengths(const BranchedCoverSurface& cover) {
  std::vector<long> out;
  std::vector<bool> seen(cover.surface.vertex_count, false);
  for (const auto& cone : cover.cones) {
    for (int v = 0; v < cover.surface.vertex_count; ++v) {
      if (cover.projection[v] != cone.base_vertex || seen[v]) continue;
      long len = 0;
      for (int x = v; !seen[x]; x = cover.deck.perm(2)[x]) {
        seen[x] = true;
        ++len;
      }
      out.push_back(len);
    }
  }
  return sorted(out);
}

}  // namespace

TEST_CASE("first primes") {
  CHECK(first_primes(1) == std::vector<long>{2});
  CHECK(first_primes(2) == std::vector<long>{2, 3});
  CHECK(first_primes(5) == std::vector<long>{2, 3, 5, 7, 11});
  const auto p = first_primes(30);
  for (long x : p) CHECK(oracle::is_prime(x));
  CHECK(std::is_sorted(p.begin(), p.end()));
  long product = 1;
  for (long x : first_primes(5)) product *= x;
  CHECK(product == 2310);
}

TEST_CASE("orbifold signatures") {
  auto s = orbifold_signature(2);
  CHECK(s.P == 6);
  CHECK(s.cone_indices == std::vector<long>{3, 3, 2, 2});
  s = orbifold_signature(3);
  CHECK(s.P == 30);
  CHECK(s.cone_indices == std::vector<long>{15, 15, 10, 10, 6, 6});
  try {
    orbifold_signature(1);
    FAIL("l = 1 has no cone points");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::degenerate_signature);
  }
}

TEST_CASE("monodromy") {
  const auto sig2 = orbifold_signature(2);
  const auto m2 = monodromy(sig2);
  CHECK(m2.a == std::vector<long>{2, 3});
  CHECK(m2.a_prime == std::vector<long>{4, 3});
  CHECK(audit_monodromy(sig2, m2).passed());

  const auto sig3 = orbifold_signature(3);
  const auto m3 = monodromy(sig3);
  CHECK(m3.a == std::vector<long>{2, 3, 5});
  CHECK(audit_monodromy(sig3, m3).passed());

  SUBCASE("every exponent equal to the last prime") {
    MonodromyData bad{6, {3, 3}, {3, 3}};
    const auto r = audit_monodromy(sig2, bad);
    CHECK_FALSE(r.passed("surjective"));
  }
  SUBCASE("every exponent equal to P over the last prime") {
    MonodromyData bad{6, {2, 2}, {4, 4}};
    const auto r = audit_monodromy(sig2, bad);
    CHECK(r.passed("product_relation"));
    CHECK_FALSE(r.passed("surjective"));
  }
  SUBCASE("broken product relation") {
    MonodromyData bad{6, {2, 3}, {2, 3}};
    CHECK_FALSE(audit_monodromy(sig2, bad).passed("product_relation"));
    CHECK_THROWS_AS(build_branched_cover(sig2, bad), Error);
  }
}

TEST_CASE("Riemann-Hurwitz") {
  auto rh = riemann_hurwitz_genus(orbifold_signature(2));
  CHECK(rh.chi_orb == Rational(-1, 3));
  CHECK(rh.chi == -2);
  CHECK(rh.genus == 2);
  rh = riemann_hurwitz_genus(orbifold_signature(3));
  CHECK(rh.chi_orb == Rational(-10, 3));
  CHECK(rh.chi == -100);
  CHECK(rh.genus == 51);
  for (int l = 2; l <= 5; ++l) {
    const auto sig = orbifold_signature(l);
    CHECK(riemann_hurwitz_genus(sig).chi == oracle::riemann_hurwitz_chi(sig.P, sig.cone_indices));
  }

  OrbifoldSignature unbranched{0, {}, 1, {1, 1, 1}};
  rh = riemann_hurwitz_genus(unbranched);
  CHECK(rh.chi_orb == 2);
  CHECK(rh.genus == 0);
  unbranched.P = 2;
  CHECK_THROWS_AS(riemann_hurwitz_genus(unbranched), Error);
}

TEST_CASE("forged surfaces") {
  for (int l : {2, 3}) {
    const auto cover = forge_surface(l);
    const auto sig = orbifold_signature(l);
    const long chi = oracle::riemann_hurwitz_chi(sig.P, sig.cone_indices);
    CHECK(cover.P == sig.P);
    CHECK(euler_characteristic(cover.surface) == chi);
    CHECK(oracle::euler_by_faces(cover.surface) == chi);
    CHECK(cover.genus == 1 - chi / 2);
    CHECK(is_orientable(cover.surface));
    CHECK(closed_surface_checks(cover.surface).passed());
    CHECK(validate_action(cover.surface, cover.deck).passed());
    CHECK(cover.deck.group == make_cyclic(static_cast<int>(sig.P)));

    std::vector<long> expected;
    for (long p : sig.primes) {
      expected.push_back(p);
      expected.push_back(p);
    }
    CHECK(cone_orbit_lengths(cover) == sorted(expected));

    const auto audit = orbit_audit(cover);
    CHECK(audit.passed());
    CHECK(sorted(audit.cone_fiber_lengths) == sorted(expected));
    // Every other orbit of the generator is free.
    long free_vertices = 0;
    for (long len : oracle::cycle_lengths(cover.deck.perm(2))) {
      CHECK((len == sig.P || std::find(sig.primes.begin(), sig.primes.end(), len) != sig.primes.end()));
      if (len == sig.P) free_vertices += len;
    }
    CHECK(free_vertices > 0);
  }
  const auto c2 = forge_surface(2);
  CHECK(c2.genus == 2);
  CHECK(c2.surface.vertex_count == 46);
  CHECK(c2.surface.edges.size() == 144);
  CHECK(c2.surface.triangles.size() == 96);
  const auto c3 = forge_surface(3);
  CHECK(c3.genus == 51);
  CHECK(c3.surface.vertex_count == 260);
}

TEST_CASE("the l = 1 sphere") {
  const auto cover = forge_surface(1);
  CHECK(cover.sphere_rotation);
  CHECK(cover.P == 2);
  CHECK(cover.genus == 0);
  CHECK(euler_characteristic(cover.surface) == 2);
  CHECK(validate_action(cover.surface, cover.deck).passed());
  const auto audit = orbit_audit(cover);
  CHECK(audit.passed());
  CHECK(std::count(audit.orbit_lengths.begin(), audit.orbit_lengths.end(), 2L) >= 1);
  CHECK_THROWS_AS(forge_surface(0), Error);
}

TEST_CASE("corrupted deck permutation is localized") {
  auto cover = forge_surface(2);
  // Swap two vertices of the first cone fibre inside the generator's action.
  const int base = cover.cones.front().base_vertex;
  std::vector<int> fibre;
  for (int v = 0; v < cover.surface.vertex_count; ++v)
    if (cover.projection[v] == base) fibre.push_back(v);
  REQUIRE(fibre.size() == 2);
  auto& f = cover.deck.perms[1];
  const int a = fibre[0];
  // Make the first fibre vertex fixed by the generator.
  const int image = f[a];
  const int pre = static_cast<int>(std::find(f.begin(), f.end(), a) - f.begin());
  f[a] = a;
  f[pre] = image;
  const auto audit = orbit_audit(cover);
  CHECK_FALSE(audit.passed());
  CHECK_FALSE(audit.report.passed("cone_fiber_1"));
}

TEST_CASE("Hurwitz dimension") {
  CHECK(hurwitz_dimension(2) == 253);
  CHECK(hurwitz_dimension(3) == 505);
  for (long g = 2; g < 50; ++g) CHECK(hurwitz_dimension(g) == 3 * 84 * (g - 1) + 1);
  try {
    hurwitz_dimension(1);
    FAIL("genus 1 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::domain);
  }
}

TEST_CASE("counterexample pipeline") {
  const int expected_l[] = {0, 1, 2, 2, 3};
  for (int m = 1; m <= 4; ++m) {
    const auto r = counterexample_pipeline(m);
    CHECK(r.l == expected_l[m]);
    CHECK(r.bound == 2 * r.l);
    CHECK(r.bound > m);
    CHECK(r.holds());
    CHECK(r.profile.l == r.l);
  }
  CHECK(counterexample_pipeline(4).cover.genus == 51);
  CHECK(counterexample_pipeline(2).cover.genus == 2);
  CHECK_THROWS_AS(counterexample_pipeline(0), Error);
}
