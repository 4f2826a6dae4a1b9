#include <doctest.h>

#include "eqlift/error.hpp"
#include "eqlift/group.hpp"
#include "oracles.hpp"

using namespace eqlift;

TEST_CASE("cyclic tables") {
  CHECK(make_cyclic(1).rows() == std::vector<std::vector<Label>>{{1}});
  CHECK(make_cyclic(2).rows() == std::vector<std::vector<Label>>{{1, 2}, {2, 1}});
  CHECK(make_cyclic(6).rows()[1] == std::vector<Label>{2, 3, 4, 5, 6, 1});
  CHECK_THROWS_AS(make_cyclic(0), Error);
  for (int n = 1; n <= 24; ++n) CHECK(validate_table(make_cyclic(n)).passed());
}

TEST_CASE("validate_table rejects broken tables") {
  SUBCASE("duplicate entry in a row") {
    const auto r = validate_table(GroupTable({{1, 1}, {2, 1}}));
    CHECK_FALSE(r.passed("latin_square"));
  }
  SUBCASE("subtraction mod 5 is a Latin square but not associative") {
    std::vector<std::vector<Label>> rows(5, std::vector<Label>(5));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) rows[i][j] = ((i - j) % 5 + 5) % 5 + 1;
    const GroupTable t(rows);
    const auto r = validate_table(t);
    CHECK(r.passed("latin_square"));
    CHECK_FALSE(r.passed("associativity"));
    CHECK_FALSE(r.passed());
    CHECK(find_nonassociative(t, Exec::serial).has_value());
  }
  SUBCASE("labels out of range") { CHECK_THROWS_AS(GroupTable({{1, 3}, {2, 1}}), Error); }
  SUBCASE("ragged table") { CHECK_THROWS_AS(GroupTable({{1, 2}, {2}}), Error); }
}

TEST_CASE("non-abelian and product groups pass") {
  const auto s3 = oracle::symmetric3();
  CHECK(validate_table(s3).passed());
  CHECK(validate_table(oracle::product_cyclic(2, 2)).passed());
  CHECK(validate_table(oracle::product_cyclic(3, 4)).passed());
  for (Label g = 1; g <= 6; ++g) CHECK(s3.mul(g, s3.inverse(g)) == 1);
}

TEST_CASE("right multiplication permutations") {
  const auto z2 = make_cyclic(2);
  const auto p = right_mult_permutation(z2, 2);
  CHECK(p.sigma == std::vector<Label>{2, 1});
  CHECK(p.parity == -1);

  const auto z6 = make_cyclic(6);
  const auto c = right_mult_permutation(z6, 2);
  CHECK(c.sigma == std::vector<Label>{2, 3, 4, 5, 6, 1});
  CHECK(c.parity == -1);

  const auto s3 = oracle::symmetric3();
  for (auto* t : {&z2, &z6, &s3}) {
    const auto id = right_mult_permutation(*t, 1);
    for (int i = 0; i < t->order(); ++i) CHECK(id.sigma[i] == i + 1);
    CHECK(id.parity == 1);
    for (Label g = 1; g <= t->order(); ++g) {
      const auto cp = right_mult_permutation(*t, g);
      std::vector<int> zero_based;
      for (Label x : cp.sigma) zero_based.push_back(x - 1);
      CHECK(cp.parity == oracle::cycle_sign(zero_based));
    }
  }
}

TEST_CASE("permutation parity against cycle sign") {
  std::vector<int> p{0, 1, 2, 3, 4, 5};
  do {
    CHECK(permutation_parity(p) == oracle::cycle_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("vertex actions and orbits") {
  VertexAction swap{make_cyclic(2), {{0, 1, 2}, {2, 1, 0}}};
  CHECK(validate_vertex_action(swap).passed());
  const auto o = orbits(swap);
  CHECK(o.orbits == std::vector<std::vector<int>>{{0, 2}, {1}});
  auto sorted = o.lengths;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<long>{1, 2});

  VertexAction trivial{make_cyclic(1), {{0, 1, 2, 3}}};
  CHECK(orbits(trivial).lengths == std::vector<long>{1, 1, 1, 1});

  SUBCASE("homomorphism failure") {
    VertexAction bad{make_cyclic(2), {{0, 1, 2}, {1, 2, 0}}};
    const auto r = validate_vertex_action(bad);
    CHECK_FALSE(r.passed("homomorphism"));
    CHECK(homomorphism_failures(bad, Exec::serial) == homomorphism_failures(bad, Exec::parallel));
    CHECK_THROWS_AS(orbits(bad), Error);
  }
  SUBCASE("non-bijective perm") {
    VertexAction bad{make_cyclic(2), {{0, 1, 2}, {0, 0, 2}}};
    CHECK_FALSE(validate_vertex_action(bad).passed("bijective"));
  }
  SUBCASE("identity must act trivially") {
    VertexAction bad{make_cyclic(2), {{2, 1, 0}, {2, 1, 0}}};
    CHECK_FALSE(validate_vertex_action(bad).passed("identity"));
  }
}

TEST_CASE("S3 acting on cosets of a transposition subgroup") {
  // S3 permutes {0,1,2}; element g acts on the point x by the permutation g
  // itself, which is a left action, so feed the inverse to get a right one.
  const auto s3 = oracle::symmetric3();
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  VertexAction a;
  a.group = s3;
  for (Label g = 1; g <= 6; ++g) {
    const auto& q = perms[s3.inverse(g) - 1];
    a.perms.push_back({q[0], q[1], q[2]});
  }
  const bool ok = validate_vertex_action(a).passed();
  // Whichever composition convention makes this valid, the other one must not.
  VertexAction b = a;
  for (Label g = 1; g <= 6; ++g) {
    const auto& q = perms[g - 1];
    b.perms[g - 1] = {q[0], q[1], q[2]};
  }
  CHECK(ok != validate_vertex_action(b).passed());
  CHECK(orbits(ok ? a : b).lengths == std::vector<long>{3});
}
