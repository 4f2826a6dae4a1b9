#include "eqlift/lifter.hpp"

#include <string>

#include "eqlift/error.hpp"

namespace eqlift {

RationalVector BlockOrthogonalRep::apply(Label g, const RationalVector& y) const {
  const auto& sigma = blocks[static_cast<std::size_t>(g - 1)].sigma;
  RationalVector out(y.size());
  const int n = order();
  for (int i = 0; i < n; ++i) {
    const std::size_t dst = static_cast<std::size_t>(i) * block_size;
    const std::size_t src = static_cast<std::size_t>(sigma[i] - 1) * block_size;
    for (int k = 0; k < block_size; ++k) out[dst + k] = y[src + k];
  }
  if (extended) out.back() = detcol[static_cast<std::size_t>(g - 1)] * y.back();
  return out;
}

exact::Matrix BlockOrthogonalRep::dense(Label g) const {
  const int m = ambient_dim();
  exact::Matrix mat(m, m);
  const auto& sigma = blocks[static_cast<std::size_t>(g - 1)].sigma;
  for (int i = 0; i < order(); ++i)
    for (int k = 0; k < block_size; ++k)
      mat(i * block_size + k, (sigma[i] - 1) * block_size + k) = 1;
  if (extended) mat(m - 1, m - 1) = detcol[static_cast<std::size_t>(g - 1)];
  return mat;
}

BlockOrthogonalRep build_block_rep(const GroupTable& g, int block_size) {
  if (block_size < 1) throw Error(ErrorKind::domain, "block size must be >= 1");
  BlockOrthogonalRep rep;
  rep.group = g;
  rep.block_size = block_size;
  rep.blocks.reserve(g.order());
  rep.detcol.reserve(g.order());
  for (Label x = 1; x <= g.order(); ++x) {
    rep.blocks.push_back(right_mult_permutation(g, x));
    rep.detcol.push_back(block_det(rep, x));
  }
  return rep;
}

int block_det(const BlockOrthogonalRep& rep, Label g) {
  if (!rep.group.contains(g)) throw Error(ErrorKind::label, "label " + std::to_string(g) + " out of range");
  const int parity = rep.blocks[static_cast<std::size_t>(g - 1)].parity;
  return (parity < 0 && rep.block_size % 2 == 1) ? -1 : 1;
}

LiftedEmbedding stack_embedding(const EmbeddedComplex& c, const VertexAction& a,
                                const LiftOptions& options) {
  if (!c.has_coordinates()) throw Error(ErrorKind::invariant, "stack_embedding needs coordinates");
  if (a.vertex_count() != c.vertex_count)
    throw Error(ErrorKind::invariant, "action and complex disagree on the vertex count");
  const int n = a.group.order();
  const long m = static_cast<long>(c.dim) * n;
  if (m > options.max_dim)
    throw Error(ErrorKind::capacity, "lifted dimension " + std::to_string(m) + " exceeds cap " +
                                         std::to_string(options.max_dim));
  LiftedEmbedding le;
  le.rep = build_block_rep(a.group, c.dim);
  le.complex = c;
  le.complex.dim = static_cast<int>(m);
  le.complex.coords.assign(c.vertex_count, RationalVector(static_cast<std::size_t>(m)));
  for (int x = 0; x < c.vertex_count; ++x) {
    auto& out = le.complex.coords[x];
    for (Label i = 1; i <= n; ++i) {
      const auto& src = c.coords[a.perm(i)[x]];
      std::copy(src.begin(), src.end(), out.begin() + static_cast<long>(i - 1) * c.dim);
    }
  }
  return le;
}

LiftedEmbedding determinant_extend(LiftedEmbedding le, bool force) {
  if (le.rep.extended) return le;
  bool needed = false;
  for (Label g = 1; g <= le.rep.order(); ++g) needed = needed || block_det(le.rep, g) < 0;
  if (!needed && !force) return le;
  le.rep.extended = true;
  for (auto& p : le.complex.coords) p.emplace_back(0);
  le.complex.dim += 1;
  return le;
}

namespace {

bool equivariant_at(const LiftedEmbedding& le, const VertexAction& a, Label g, int x) {
  const auto& coords = le.complex.coords;
  return le.rep.apply(g, coords[x]) == coords[a.perm(g)[x]];
}

}  // namespace

EquivarianceReport verify_equivariance(const LiftedEmbedding& le, const VertexAction& a, Exec exec) {
  EquivarianceReport report;
  const int n = a.group.order();
  const int v = le.complex.vertex_count;
  if (a.vertex_count() != v || le.rep.order() != n) {
    report.failures.push_back({0, -1});
    return report;
  }
  report.checked = static_cast<std::size_t>(n) * v;
  if (exec == Exec::serial) {
    for (Label g = 1; g <= n; ++g)
      for (int x = 0; x < v; ++x)
        if (!equivariant_at(le, a, g, x)) report.failures.push_back({g, x});
    return report;
  }
  std::vector<std::vector<std::pair<Label, int>>> per_element(n);
#pragma omp parallel for schedule(dynamic)
  for (int g = 1; g <= n; ++g)
    for (int x = 0; x < v; ++x)
      if (!equivariant_at(le, a, g, x)) per_element[g - 1].push_back({g, x});
  for (auto& f : per_element) report.failures.insert(report.failures.end(), f.begin(), f.end());
  return report;
}

ValidationReport validate_rep(const BlockOrthogonalRep& rep) {
  ValidationReport report;
  const int n = rep.order();
  bool shape = static_cast<int>(rep.blocks.size()) == n && static_cast<int>(rep.detcol.size()) == n;
  report.add("shape", shape, shape ? "" : "one block permutation and sign per element expected");
  if (!shape) return report;

  std::string cayley;
  for (Label g = 1; g <= n && cayley.empty(); ++g) {
    const auto expected = right_mult_permutation(rep.group, g);
    const auto& got = rep.blocks[g - 1];
    if (got.element != g || got.sigma != expected.sigma || got.parity != expected.parity)
      cayley = "element " + std::to_string(g) + " is not right multiplication";
  }
  report.add("right_multiplication", cayley.empty(), cayley);
  if (!cayley.empty()) return report;

  std::string det;
  for (Label g = 1; g <= n && det.empty(); ++g)
    if (rep.detcol[g - 1] != block_det(rep, g)) det = "sign column wrong at element " + std::to_string(g);
  report.add("sign_column", det.empty(), det);

  // Structural homomorphism: compose the index maps the matrices encode.
  std::string hom;
  for (Label g = 1; g <= n && hom.empty(); ++g)
    for (Label h = 1; h <= n && hom.empty(); ++h) {
      const auto& sg = rep.blocks[g - 1].sigma;
      const auto& sh = rep.blocks[h - 1].sigma;
      const auto& sgh = rep.blocks[rep.group.mul(g, h) - 1].sigma;
      for (int i = 0; i < n; ++i)
        if (sgh[i] != sh[sg[i] - 1]) {
          hom = "matrix(" + std::to_string(g) + "*" + std::to_string(h) + ") != matrix(" +
                std::to_string(g) + ") matrix(" + std::to_string(h) + ")";
          break;
        }
      if (hom.empty() && rep.extended &&
          rep.detcol[rep.group.mul(g, h) - 1] != rep.detcol[g - 1] * rep.detcol[h - 1])
        hom = "sign column is not multiplicative at (" + std::to_string(g) + "," + std::to_string(h) + ")";
    }
  report.add("homomorphism", hom.empty(), hom);

  if (rep.extended) {
    std::string special;
    for (Label g = 1; g <= n && special.empty(); ++g)
      if (block_det(rep, g) * rep.detcol[g - 1] != 1)
        special = "element " + std::to_string(g) + " has determinant -1";
    report.add("special_orthogonal", special.empty(), special);
  }
  return report;
}

}  // namespace eqlift
