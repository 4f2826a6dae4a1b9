#include <doctest.h>

#include "eqlift/error.hpp"
#include "eqlift/lifter.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace eqlift;

namespace {

Eigen::MatrixXd to_double(const exact::Matrix& m) {
  Eigen::MatrixXd out(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out(r, c) = m(r, c).get_d();
  return out;
}

RationalVector rv(std::initializer_list<long> xs) {
  RationalVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("block representation matrices") {
  SUBCASE("trivial group") {
    const auto rep = build_block_rep(make_cyclic(1), 3);
    CHECK(rep.ambient_dim() == 3);
    CHECK(rep.dense(1) == exact::Matrix::identity(3));
  }
  SUBCASE("Z_2, d = 1") {
    const auto rep = build_block_rep(make_cyclic(2), 1);
    exact::Matrix swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    CHECK(rep.dense(2) == swap);
    CHECK(block_det(rep, 2) == -1);
    CHECK(exact::determinant(rep.dense(2)) == -1);
  }
  SUBCASE("Z_2, d = 2") {
    const auto rep = build_block_rep(make_cyclic(2), 2);
    CHECK(block_det(rep, 2) == 1);
    CHECK(exact::determinant(rep.dense(2)) == 1);
  }
  SUBCASE("Z_6, d = 3") {
    const auto rep = build_block_rep(make_cyclic(6), 3);
    CHECK(block_det(rep, 1) == 1);
    CHECK(block_det(rep, 2) == -1);
    CHECK(exact::determinant(rep.dense(2)) == -1);
  }
  CHECK_THROWS_AS(build_block_rep(make_cyclic(2), 0), Error);
}

TEST_CASE("dense matrices match the table oracle, including non-abelian groups") {
  const GroupTable groups[] = {make_cyclic(4), oracle::symmetric3(), oracle::product_cyclic(2, 2)};
  for (const auto& t : groups)
    for (int d = 1; d <= 3; ++d) {
      auto le = determinant_extend(LiftedEmbedding{{}, build_block_rep(t, d)}, true);
      for (Label g = 1; g <= t.order(); ++g) {
        const int sign = block_det(le.rep, g);
        CHECK(to_double(le.rep.dense(g)).isApprox(oracle::block_matrix(t, g, d, true, sign)));
        // Homomorphism: dense(g h) = dense(g) dense(h).
        for (Label h = 1; h <= t.order(); ++h)
          CHECK(exact::multiply(le.rep.dense(g), le.rep.dense(h)) == le.rep.dense(t.mul(g, h)));
      }
      CHECK(validate_rep(le.rep).passed());
    }
}

TEST_CASE("stacking the interval under x -> -x") {
  const auto interval = fixtures::interval();
  const auto action = fixtures::reflection();
  const auto le = stack_embedding(interval, action);
  CHECK(le.ambient_dim() == 2);
  CHECK(le.complex.coords[0] == rv({-1, 1}));
  CHECK(le.complex.coords[2] == rv({1, -1}));
  CHECK(verify_equivariance(le, action).passed());

  const auto ext = determinant_extend(le);
  CHECK(ext.ambient_dim() == 3);
  CHECK(ext.rep.extended);
  CHECK(ext.complex.coords[2] == rv({1, -1, 0}));
  exact::Matrix expected(3, 3);
  expected(0, 1) = 1;
  expected(1, 0) = 1;
  expected(2, 2) = -1;
  CHECK(ext.rep.dense(2) == expected);
  CHECK(exact::determinant(ext.rep.dense(2)) == 1);
  CHECK(verify_equivariance(ext, action).passed());
  CHECK(verify_pl_embedding(ext.complex).embedded());
}

TEST_CASE("stacking the octahedron under the antipodal map") {
  const auto oct = fixtures::octahedron();
  const auto action = fixtures::antipodal();
  const auto le = stack_embedding(oct, action);
  CHECK(le.ambient_dim() == 6);
  // Second block of the lift of v is e(-v).
  for (int v = 0; v < 6; ++v)
    for (int k = 0; k < 3; ++k) CHECK(le.complex.coords[v][3 + k] == -oct.coords[v][k]);
  CHECK(block_det(le.rep, 2) == -1);
  const auto ext = determinant_extend(le);
  CHECK(ext.ambient_dim() == 7);
  CHECK(verify_equivariance(ext, action).passed());
  CHECK(validate_rep(ext.rep).passed());
}

TEST_CASE("extension only when needed") {
  // Z_2 with d = 2: block swap already has det +1.
  const auto c = make_complex(2, {{0, 1}}, {}, {rv({0, 1}), rv({1, 0})}, ComplexMode::general);
  const VertexAction a{make_cyclic(2), {{0, 1}, {1, 0}}};
  const auto le = determinant_extend(stack_embedding(c, a));
  CHECK_FALSE(le.rep.extended);
  CHECK(le.ambient_dim() == 4);
  const auto forced = determinant_extend(stack_embedding(c, a), true);
  CHECK(forced.rep.extended);
  CHECK(forced.ambient_dim() == 5);
  CHECK(verify_equivariance(forced, a).passed());
}

TEST_CASE("trivial group lift is the identity") {
  const auto oct = fixtures::octahedron();
  const VertexAction a{make_cyclic(1), {{0, 1, 2, 3, 4, 5}}};
  const auto le = determinant_extend(stack_embedding(oct, a));
  CHECK(le.ambient_dim() == 3);
  CHECK(le.complex.coords == oct.coords);
  const auto eq = verify_equivariance(le, a);
  CHECK(eq.passed());
}

TEST_CASE("corrupted lift is caught at the right vertex") {
  const auto oct = fixtures::octahedron();
  const auto action = fixtures::antipodal();
  auto le = determinant_extend(stack_embedding(oct, action));
  le.complex.coords[4][0] += Rational(1, 7);
  const auto eq = verify_equivariance(le, action);
  CHECK_FALSE(eq.passed());
  bool saw_vertex = false;
  for (const auto& [g, v] : eq.failures) saw_vertex = saw_vertex || v == 4 || v == 5;
  CHECK(saw_vertex);
}

TEST_CASE("polygon with rotation lifts equivariantly for many n") {
  for (int n = 2; n <= 8; ++n) {
    const auto c = fixtures::polygon(n);
    const auto a = fixtures::rotation(n);
    const auto le = determinant_extend(stack_embedding(c, a));
    CHECK(le.ambient_dim() == 3 * n + (n % 2 == 0 ? 1 : 0));
    CHECK(verify_equivariance(le, a).passed());
    CHECK(verify_pl_embedding(le.complex).embedded());
  }
}

TEST_CASE("capacity guard") {
  const auto c = fixtures::polygon(8);
  LiftOptions small;
  small.max_dim = 10;
  CHECK_THROWS_AS(stack_embedding(c, fixtures::rotation(8), small), Error);
}

TEST_CASE("validate_rep catches tampering") {
  auto le = determinant_extend(stack_embedding(fixtures::octahedron(), fixtures::antipodal()));
  auto rep = le.rep;
  rep.detcol[1] = 1;
  CHECK_FALSE(validate_rep(rep).passed());
  rep = le.rep;
  std::swap(rep.blocks[1].sigma[0], rep.blocks[1].sigma[1]);
  CHECK_FALSE(validate_rep(rep).passed());
}
