#pragma once

// Reference computations used only by the tests. Each one is written from the
// definitions, without calling into the library code it is compared against.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "eqlift/complex.hpp"
#include "eqlift/group.hpp"

namespace oracle {

// Size of the largest pairwise coprime subset of the distinct values > 1, by
// trying every subset.
inline int max_coprime_brute(const std::vector<long>& lengths) {
  std::set<long> distinct;
  for (long x : lengths)
    if (x > 1) distinct.insert(x);
  const std::vector<long> v(distinct.begin(), distinct.end());
  const std::size_t n = v.size();
  int best = 0;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && std::gcd(v[i], v[j]) != 1) ok = false;
    if (ok) best = std::max(best, __builtin_popcountl(mask));
  }
  return best;
}

// Table of the symmetric group S_3, built by composing permutations of {0,1,2}.
// Element 1 is the identity.
inline eqlift::GroupTable symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin()) + 1;
  };
  std::vector<std::vector<int>> rows(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      rows[a][b] = index(c);
    }
  return eqlift::GroupTable(rows);
}

// Z_a x Z_b with (i, j) -> i * b + j + 1.
inline eqlift::GroupTable product_cyclic(int a, int b) {
  const int n = a * b;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int i = (x / b + y / b) % a;
      const int j = (x % b + y % b) % b;
      rows[x][y] = i * b + j + 1;
    }
  return eqlift::GroupTable(rows);
}

// Dense matrix of the block action of g read straight from the group table:
// block i of the image is block (i * g) of the input. Optional sign entry.
inline Eigen::MatrixXd block_matrix(const eqlift::GroupTable& t, int g, int d, bool extended, int sign) {
  const int n = t.order();
  const int m = n * d + (extended ? 1 : 0);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  for (int i = 1; i <= n; ++i)
    for (int k = 0; k < d; ++k) a((i - 1) * d + k, (t.mul(i, g) - 1) * d + k) = 1.0;
  if (extended) a(m - 1, m - 1) = sign;
  return a;
}

// Sign of a 0-based permutation from its cycle decomposition.
inline int cycle_sign(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  int sign = 1;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// Count every face of every simplex, deduplicated, and alternate the signs.
inline long euler_by_faces(const eqlift::EmbeddedComplex& c) {
  std::set<std::vector<int>> faces;
  for (int v = 0; v < c.vertex_count; ++v) faces.insert({v});
  for (const auto& e : c.edges) faces.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
  for (const auto& t : c.triangles) {
    std::vector<int> s(t.begin(), t.end());
    std::sort(s.begin(), s.end());
    faces.insert(s);
    faces.insert({s[0], s[1]});
    faces.insert({s[0], s[2]});
    faces.insert({s[1], s[2]});
  }
  long chi = 0;
  for (const auto& f : faces) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

// chi = P * (2 - sum (1 - 1/delta)), computed with a common denominator.
inline long riemann_hurwitz_chi(long P, const std::vector<long>& indices) {
  long num = 2 * P;
  for (long d : indices) num -= P - P / d;
  return num;
}

// Orbit lengths of a single permutation, by following cycles.
inline std::vector<long> cycle_lengths(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<long> out;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    long len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = true;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

// det(I + A + ... + A^(w-1)) from the eigenvalues: each eigenvalue z
// contributes w when z = 1 and (1 - z^w) / (1 - z) otherwise.
inline double geometric_det_from_spectrum(const Eigen::MatrixXd& a, long w) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(a);
  std::complex<double> prod = 1.0;
  for (const auto& z : es.eigenvalues()) {
    if (std::abs(z - 1.0) < 1e-12)
      prod *= static_cast<double>(w);
    else
      prod *= (1.0 - std::pow(z, static_cast<double>(w))) / (1.0 - z);
  }
  return prod.real();
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace oracle
