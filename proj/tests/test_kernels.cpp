#include <doctest.h>

#include <omp.h>

#include "eqlift/complex.hpp"
#include "eqlift/forge.hpp"
#include "eqlift/group.hpp"
#include "eqlift/lifter.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace eqlift;

// The parallel kernels must return exactly what the serial ones return,
// whatever the thread count.

TEST_CASE("associativity search") {
  std::vector<std::vector<Label>> rows(7, std::vector<Label>(7));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) rows[i][j] = ((i - j) % 7 + 7) % 7 + 1;
  const GroupTable bad(rows);
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    CHECK(find_nonassociative(bad, Exec::serial) == find_nonassociative(bad, Exec::parallel));
    CHECK(validate_table(make_cyclic(30), Exec::parallel).passed());
    CHECK_FALSE(find_nonassociative(make_cyclic(30), Exec::parallel).has_value());
  }
}

TEST_CASE("homomorphism failures") {
  auto a = fixtures::rotation(9);
  std::swap(a.perms[3][0], a.perms[3][1]);
  for (int threads : {1, 3}) {
    omp_set_num_threads(threads);
    const auto s = homomorphism_failures(a, Exec::serial);
    CHECK_FALSE(s.empty());
    CHECK(s == homomorphism_failures(a, Exec::parallel));
  }
}

TEST_CASE("embedding check and equivariance on a forged surface") {
  const auto cover = forge_surface(2);
  const auto c = with_canonical_coordinates(cover.surface);
  for (int threads : {1, 4}) {
    omp_set_num_threads(threads);
    const auto s = verify_pl_embedding(c, Exec::serial);
    const auto p = verify_pl_embedding(c, Exec::parallel);
    CHECK(s.embedded());
    CHECK(s.embedded() == p.embedded());
    CHECK(s.pairs_tested == p.pairs_tested);
    CHECK(s.bad_pairs == p.bad_pairs);

    const auto le = determinant_extend(stack_embedding(c, cover.deck));
    const auto es = verify_equivariance(le, cover.deck, Exec::serial);
    const auto ep = verify_equivariance(le, cover.deck, Exec::parallel);
    CHECK(es.passed());
    CHECK(es.checked == ep.checked);
    CHECK(es.failures == ep.failures);
  }
}

TEST_CASE("embedding check agrees on a non-embedded complex") {
  // Octahedron with vertex 0 moved onto the centroid of triangle (1, 2, 4).
  auto oct = fixtures::octahedron();
  oct.coords[0] = {Rational(-1, 3), Rational(1, 3), Rational(1, 3)};
  for (int threads : {1, 4}) {
    omp_set_num_threads(threads);
    const auto s = verify_pl_embedding(oct, Exec::serial);
    const auto p = verify_pl_embedding(oct, Exec::parallel);
    CHECK_FALSE(s.embedded());
    CHECK(s.bad_pairs == p.bad_pairs);
  }
}

TEST_CASE("action validation") {
  const auto cover = forge_surface(2);
  auto broken = cover.deck;
  std::swap(broken.perms[2][0], broken.perms[2][1]);
  for (int threads : {1, 4}) {
    omp_set_num_threads(threads);
    const auto s = validate_action(cover.surface, broken, Exec::serial);
    const auto p = validate_action(cover.surface, broken, Exec::parallel);
    REQUIRE(s.checks.size() == p.checks.size());
    for (std::size_t i = 0; i < s.checks.size(); ++i) {
      CHECK(s.checks[i].name == p.checks[i].name);
      CHECK(s.checks[i].passed == p.checks[i].passed);
      CHECK(s.checks[i].detail == p.checks[i].detail);
    }
  }
}
