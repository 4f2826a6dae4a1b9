#include "eqlift/complex.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <numeric>
#include <queue>
#include <sstream>

#include "eqlift/error.hpp"
#include "eqlift/exact_linalg.hpp"

namespace eqlift {
namespace {

std::string tuple_str(std::span<const int> s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// (edge, triangle) incidences sorted by edge.
std::vector<std::pair<Edge, int>> edge_incidences(const EmbeddedComplex& c) {
  std::vector<std::pair<Edge, int>> inc;
  inc.reserve(c.triangles.size() * 3);
  for (int t = 0; t < static_cast<int>(c.triangles.size()); ++t) {
    const auto& [a, b, d] = c.triangles[t];
    inc.push_back({Edge{a, b}, t});
    inc.push_back({Edge{b, d}, t});
    inc.push_back({Edge{a, d}, t});
  }
  std::sort(inc.begin(), inc.end());
  return inc;
}

template <class Simplex>
bool simplex_in_range(const Simplex& s, int v) {
  for (int x : s)
    if (x < 0 || x >= v) return false;
  return true;
}

}  // namespace

EmbeddedComplex make_complex(int vertex_count, std::vector<Edge> edges,
                             std::vector<Triangle> triangles, std::vector<RationalVector> coords,
                             ComplexMode mode) {
  EmbeddedComplex c;
  c.vertex_count = vertex_count;
  c.mode = mode;
  if (vertex_count < 0) throw Error(ErrorKind::invariant, "vertex_count: negative");
  for (auto& t : triangles) {
    std::sort(t.begin(), t.end());
    if (!simplex_in_range(t, vertex_count))
      throw Error(ErrorKind::invariant, "simplex_indices: triangle " + tuple_str(t) + " out of range");
    if (t[0] == t[1] || t[1] == t[2])
      throw Error(ErrorKind::invariant, "nondegenerate_simplices: triangle " + tuple_str(t));
    edges.push_back({t[0], t[1]});
    edges.push_back({t[1], t[2]});
    edges.push_back({t[0], t[2]});
  }
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (!simplex_in_range(e, vertex_count))
      throw Error(ErrorKind::invariant, "simplex_indices: edge " + tuple_str(e) + " out of range");
    if (e[0] == e[1]) throw Error(ErrorKind::invariant, "nondegenerate_simplices: edge " + tuple_str(e));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::sort(triangles.begin(), triangles.end());
  triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());
  c.edges = std::move(edges);
  c.triangles = std::move(triangles);
  if (!coords.empty()) {
    c.dim = static_cast<int>(coords.front().size());
    c.coords = std::move(coords);
  }
  const auto report = check_complex(c);
  for (const auto& check : report.checks)
    if (!check.passed) throw Error(ErrorKind::invariant, check.name + ": " + check.detail);
  return c;
}

ValidationReport check_complex(const EmbeddedComplex& c) {
  ValidationReport report;
  std::string range;
  for (const auto& e : c.edges)
    if (!simplex_in_range(e, c.vertex_count) || e[0] == e[1]) range = "edge " + tuple_str(e);
  for (const auto& t : c.triangles)
    if (!simplex_in_range(t, c.vertex_count) || t[0] == t[1] || t[1] == t[2])
      range = "triangle " + tuple_str(t);
  report.add("simplex_indices", range.empty(), range);

  if (c.has_coordinates()) {
    bool shape = static_cast<int>(c.coords.size()) == c.vertex_count && c.dim >= 1;
    for (const auto& p : c.coords) shape = shape && static_cast<int>(p.size()) == c.dim;
    report.add("coordinate_shape", shape,
               shape ? "" : "expected " + std::to_string(c.vertex_count) + " points in R^" +
                                std::to_string(c.dim));
    if (shape) {
      std::vector<int> order(c.vertex_count);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return c.coords[a] < c.coords[b]; });
      std::string dup;
      for (std::size_t i = 1; i < order.size() && dup.empty(); ++i)
        if (c.coords[order[i]] == c.coords[order[i - 1]])
          dup = "vertices " + std::to_string(std::min(order[i], order[i - 1])) + " and " +
                std::to_string(std::max(order[i], order[i - 1])) + " coincide";
      report.add("coordinates_injective", dup.empty(), dup);

      std::string flat;
      for (const auto& t : c.triangles) {
        exact::Matrix m(2, c.dim);
        for (int k = 0; k < c.dim; ++k) {
          m(0, k) = c.coords[t[1]][k] - c.coords[t[0]][k];
          m(1, k) = c.coords[t[2]][k] - c.coords[t[0]][k];
        }
        if (exact::rank(std::move(m)) < 2) {
          flat = "triangle " + tuple_str(t) + " is affinely degenerate";
          break;
        }
      }
      report.add("triangles_affinely_independent", flat.empty(), flat);
    }
  }
  if (c.mode == ComplexMode::closed_surface) report.append(closed_surface_checks(c));
  return report;
}

ValidationReport closed_surface_checks(const EmbeddedComplex& c) {
  ValidationReport report;
  const bool big_enough = c.vertex_count >= 2 && !c.triangles.empty();
  report.add("closed_surface_nonempty", big_enough,
             big_enough ? "" : "empty or single-vertex complex is not a closed surface");
  if (!big_enough) return report;

  const auto inc = edge_incidences(c);
  std::string manifold;
  {
    std::size_t i = 0;
    for (const auto& e : c.edges) {
      std::size_t count = 0;
      while (i < inc.size() && inc[i].first < e) ++i;
      while (i < inc.size() && inc[i].first == e) {
        ++count;
        ++i;
      }
      if (count != 2) {
        manifold = "edge " + tuple_str(e) + " lies in " + std::to_string(count) + " triangles";
        break;
      }
    }
  }
  report.add("edges_in_two_triangles", manifold.empty(), manifold);

  std::vector<std::vector<Edge>> link(c.vertex_count);
  for (const auto& [a, b, d] : c.triangles) {
    link[a].push_back({b, d});
    link[b].push_back({a, d});
    link[d].push_back({a, b});
  }
  std::string link_detail;
  for (int v = 0; v < c.vertex_count && link_detail.empty(); ++v) {
    const auto& edges = link[v];
    if (edges.empty()) {
      link_detail = "vertex " + std::to_string(v) + " has an empty link";
      break;
    }
    std::vector<int> verts;
    for (const auto& e : edges) verts.insert(verts.end(), e.begin(), e.end());
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < verts.size(); i += 2)
      if (i + 1 >= verts.size() || verts[i] != verts[i + 1] ||
          (i + 2 < verts.size() && verts[i + 2] == verts[i])) {
        link_detail = "link of vertex " + std::to_string(v) + " is not a 2-regular graph";
        break;
      }
    if (!link_detail.empty()) break;
    // 2-regular: single cycle iff walking from one edge visits every edge.
    std::vector<char> used(edges.size(), 0);
    std::size_t visited = 0;
    int current = edges[0][1];
    used[0] = 1;
    visited = 1;
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (used[k] || (edges[k][0] != current && edges[k][1] != current)) continue;
        used[k] = 1;
        ++visited;
        current = edges[k][0] == current ? edges[k][1] : edges[k][0];
        moved = true;
        break;
      }
    }
    if (visited != edges.size())
      link_detail = "link of vertex " + std::to_string(v) + " has several cycles";
  }
  report.add("vertex_links_are_cycles", link_detail.empty(), link_detail);

  DisjointSets ds(c.vertex_count);
  for (const auto& e : c.edges) ds.unite(e[0], e[1]);
  int components = 0;
  for (int v = 0; v < c.vertex_count; ++v) components += ds.find(v) == v;
  report.add("connected", components == 1,
             components == 1 ? "" : std::to_string(components) + " components");
  return report;
}

ValidationReport validate_action(const EmbeddedComplex& c, const VertexAction& a, Exec exec) {
  ValidationReport report;
  const bool sized = a.vertex_count() == c.vertex_count;
  report.add("vertex_count", sized,
             sized ? "" : "action moves " + std::to_string(a.vertex_count()) + " vertices, complex has " +
                              std::to_string(c.vertex_count));
  if (!sized) return report;
  report.append(validate_vertex_action(a, exec));
  if (!report.passed()) return report;

  const int n = a.group.order();
  auto first_bad = [&](Label g) -> std::string {
    const auto& p = a.perm(g);
    for (const auto& e : c.edges) {
      Edge img{p[e[0]], p[e[1]]};
      std::sort(img.begin(), img.end());
      if (!std::binary_search(c.edges.begin(), c.edges.end(), img))
        return "element " + std::to_string(g) + " maps edge " + tuple_str(e) + " to non-edge " +
               tuple_str(img);
    }
    for (const auto& t : c.triangles) {
      Triangle img{p[t[0]], p[t[1]], p[t[2]]};
      std::sort(img.begin(), img.end());
      if (!std::binary_search(c.triangles.begin(), c.triangles.end(), img))
        return "element " + std::to_string(g) + " maps triangle " + tuple_str(t) +
               " to non-triangle " + tuple_str(img);
    }
    return {};
  };
  std::vector<std::string> bad(n);
  if (exec == Exec::serial) {
    for (Label g = 1; g <= n; ++g) bad[g - 1] = first_bad(g);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int g = 1; g <= n; ++g) bad[g - 1] = first_bad(g);
  }
  std::string simplicial;
  for (const auto& b : bad)
    if (!b.empty()) {
      simplicial = b;
      break;
    }
  report.add("simplicial", simplicial.empty(), simplicial);

  std::string faithful;
  for (Label g = 2; g <= n && faithful.empty(); ++g) {
    const auto& p = a.perm(g);
    bool identity = true;
    for (int x = 0; x < c.vertex_count && identity; ++x) identity = p[x] == x;
    if (identity) faithful = "element " + std::to_string(g) + " acts trivially";
  }
  report.add("faithful", faithful.empty(), faithful);
  return report;
}

long euler_characteristic(const EmbeddedComplex& c) {
  return static_cast<long>(c.vertex_count) - static_cast<long>(c.edges.size()) +
         static_cast<long>(c.triangles.size());
}

bool is_orientable(const EmbeddedComplex& c) {
  const auto inc = edge_incidences(c);
  // Neighbours across each edge: exactly two triangles per edge.
  std::vector<std::vector<std::pair<int, Edge>>> adj(c.triangles.size());
  for (std::size_t i = 0; i < inc.size();) {
    std::size_t j = i;
    while (j < inc.size() && inc[j].first == inc[i].first) ++j;
    if (j - i != 2) return false;
    adj[inc[i].second].push_back({inc[i + 1].second, inc[i].first});
    adj[inc[i + 1].second].push_back({inc[i].second, inc[i].first});
    i = j;
  }
  // Sorted triangle (a,b,c) with orientation +1 traverses a->b, b->c, c->a.
  auto direction = [&](int t, const Edge& e) {
    const auto& tri = c.triangles[t];
    return (e[0] == tri[0] && e[1] == tri[2]) ? -1 : 1;
  };
  std::vector<int> orient(c.triangles.size(), 0);
  for (std::size_t seed = 0; seed < c.triangles.size(); ++seed) {
    if (orient[seed] != 0) continue;
    orient[seed] = 1;
    std::queue<int> q;
    q.push(static_cast<int>(seed));
    while (!q.empty()) {
      const int t = q.front();
      q.pop();
      for (const auto& [u, e] : adj[t]) {
        const int want = -orient[t] * direction(t, e) * direction(u, e);
        if (orient[u] == 0) {
          orient[u] = want;
          q.push(u);
        } else if (orient[u] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Pair test over sparse coordinate supports. Coordinates outside the union of
// the supports of the involved vertices are zero for all of them and add no
// constraints.
class PairTester {
 public:
  PairTester(const EmbeddedComplex& c, const std::vector<std::vector<int>>& support)
      : c_(c), support_(support) {}

  // conv(s) and conv(t) meet exactly in conv(s ∩ t).
  bool proper(const std::vector<int>& s, const std::vector<int>& t) const {
    std::vector<int> shared, all;
    std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(shared));
    std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(all));
    std::vector<int> rows;
    for (int v : all) {
      std::vector<int> merged;
      std::set_union(rows.begin(), rows.end(), support_[v].begin(), support_[v].end(),
                     std::back_inserter(merged));
      rows.swap(merged);
    }
    if (shared.empty() && boxes_disjoint(s, t, rows)) return true;
    if (affinely_independent(all, rows)) return true;
    return !meets_outside_shared(s, t, shared, rows);
  }

  bool affinely_independent(const std::vector<int>& pts, const std::vector<int>& rows) const {
    const int k = static_cast<int>(pts.size()) - 1;
    if (k <= 0) return true;
    exact::EchelonBasis basis(k);
    for (int r : rows) {
      std::vector<Rational> row(k);
      for (int j = 0; j < k; ++j) row[j] = at(pts[j + 1], r) - at(pts[0], r);
      basis.insert(std::move(row));
      if (basis.rank() == k) return true;
    }
    return false;
  }

 private:
  const Rational& at(int v, int r) const { return c_.coords[v][r]; }

  bool boxes_disjoint(const std::vector<int>& s, const std::vector<int>& t,
                      const std::vector<int>& rows) const {
    for (int r : rows) {
      auto [smin, smax] = std::minmax_element(s.begin(), s.end(),
                                              [&](int a, int b) { return at(a, r) < at(b, r); });
      auto [tmin, tmax] = std::minmax_element(t.begin(), t.end(),
                                              [&](int a, int b) { return at(a, r) < at(b, r); });
      if (at(*smax, r) < at(*tmin, r) || at(*tmax, r) < at(*smin, r)) return true;
    }
    return false;
  }

  // Barycentric weights lambda (on s) and mu (on t) with sum lambda = sum mu = 1,
  // sum lambda_i s_i = sum mu_j t_j, all >= 0. The intersection point lies
  // outside conv(shared) iff some lambda off `shared` is positive; the maximum
  // of that sum over the feasible polytope is attained at a basic solution, so
  // enumerating column supports is exact.
  bool meets_outside_shared(const std::vector<int>& s, const std::vector<int>& t,
                            const std::vector<int>& shared, const std::vector<int>& rows) const {
    const int ns = static_cast<int>(s.size());
    const int k = ns + static_cast<int>(t.size());
    exact::EchelonBasis basis(k + 1);
    {
      std::vector<Rational> sum_s(k + 1), sum_t(k + 1);
      for (int j = 0; j < ns; ++j) sum_s[j] = 1;
      for (int j = ns; j < k; ++j) sum_t[j] = 1;
      sum_s[k] = 1;
      sum_t[k] = 1;
      basis.insert(std::move(sum_s));
      basis.insert(std::move(sum_t));
    }
    for (int r : rows) {
      std::vector<Rational> row(k + 1);
      for (int j = 0; j < ns; ++j) row[j] = at(s[j], r);
      for (int j = ns; j < k; ++j) row[j] = -at(t[j - ns], r);
      basis.insert(std::move(row));
    }
    const auto& reduced = basis.rows();
    for (const auto& row : reduced) {
      bool only_rhs = sgn(row[k]) != 0;
      for (int j = 0; j < k && only_rhs; ++j) only_rhs = sgn(row[j]) == 0;
      if (only_rhs) return false;  // disjoint
    }
    std::vector<char> off_shared(ns, 0);
    for (int j = 0; j < ns; ++j)
      off_shared[j] = !std::binary_search(shared.begin(), shared.end(), s[j]);

    const int rank = basis.rank();
    std::vector<int> cols;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      if (std::popcount(mask) > rank) continue;
      cols.clear();
      for (int j = 0; j < k; ++j)
        if (mask & (1u << j)) cols.push_back(j);
      const auto x = exact::solve_unique(reduced, cols, k);
      if (!x) continue;
      bool feasible = true;
      for (const auto& v : *x) feasible = feasible && sgn(v) >= 0;
      if (!feasible) continue;
      for (std::size_t idx = 0; idx < cols.size(); ++idx)
        if (cols[idx] < ns && off_shared[cols[idx]] && sgn((*x)[idx]) > 0) return true;
    }
    return false;
  }

  const EmbeddedComplex& c_;
  const std::vector<std::vector<int>>& support_;
};

std::vector<std::vector<int>> maximal_simplices(const EmbeddedComplex& c) {
  std::vector<std::vector<int>> out;
  std::vector<char> covered_vertex(c.vertex_count, 0);
  std::vector<Edge> tri_edges;
  for (const auto& t : c.triangles) {
    out.push_back({t[0], t[1], t[2]});
    tri_edges.push_back({t[0], t[1]});
    tri_edges.push_back({t[1], t[2]});
    tri_edges.push_back({t[0], t[2]});
  }
  std::sort(tri_edges.begin(), tri_edges.end());
  for (const auto& e : c.edges) {
    covered_vertex[e[0]] = covered_vertex[e[1]] = 1;
    if (!std::binary_search(tri_edges.begin(), tri_edges.end(), e)) out.push_back({e[0], e[1]});
  }
  for (int v = 0; v < c.vertex_count; ++v)
    if (!covered_vertex[v]) out.push_back({v});
  return out;
}

}  // namespace

EmbeddingReport verify_pl_embedding(const EmbeddedComplex& c, Exec exec) {
  EmbeddingReport report;
  report.maximal = maximal_simplices(c);
  if (!c.has_coordinates() || static_cast<int>(c.coords.size()) != c.vertex_count) {
    report.vertex_injective = false;
    report.detail = "complex has no coordinates";
    return report;
  }
  std::vector<std::vector<int>> support(c.vertex_count);
  for (int v = 0; v < c.vertex_count; ++v)
    for (int k = 0; k < c.dim; ++k)
      if (sgn(c.coords[v][k]) != 0) support[v].push_back(k);

  {
    std::vector<int> order(c.vertex_count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return c.coords[a] < c.coords[b]; });
    for (std::size_t i = 1; i < order.size(); ++i)
      if (c.coords[order[i]] == c.coords[order[i - 1]]) {
        report.vertex_injective = false;
        report.detail = "vertices " + std::to_string(order[i - 1]) + " and " +
                        std::to_string(order[i]) + " coincide";
        return report;
      }
  }

  const PairTester tester(c, support);
  for (const auto& s : report.maximal) {
    std::vector<int> rows;
    for (int v : s) {
      std::vector<int> merged;
      std::set_union(rows.begin(), rows.end(), support[v].begin(), support[v].end(),
                     std::back_inserter(merged));
      rows.swap(merged);
    }
    if (!tester.affinely_independent(s, rows)) {
      report.simplices_nondegenerate = false;
      report.detail = "simplex " + tuple_str(s) + " is affinely degenerate";
      return report;
    }
  }

  const int count = static_cast<int>(report.maximal.size());
  report.pairs_tested = static_cast<std::size_t>(count) * (count - 1) / 2;
  const auto& simplices = report.maximal;
  if (exec == Exec::serial) {
    for (int i = 0; i < count; ++i)
      for (int j = i + 1; j < count; ++j)
        if (!tester.proper(simplices[i], simplices[j])) report.bad_pairs.push_back({i, j});
  } else {
    std::vector<std::vector<std::pair<int, int>>> per_row(count);
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < count; ++i)
      for (int j = i + 1; j < count; ++j)
        if (!tester.proper(simplices[i], simplices[j])) per_row[i].push_back({i, j});
    for (auto& row : per_row) report.bad_pairs.insert(report.bad_pairs.end(), row.begin(), row.end());
  }
  if (!report.bad_pairs.empty()) {
    const auto [i, j] = report.bad_pairs.front();
    report.detail = "simplices " + tuple_str(simplices[i]) + " and " + tuple_str(simplices[j]) +
                    " meet outside their common face";
  }
  return report;
}

EmbeddedComplex with_canonical_coordinates(const EmbeddedComplex& c) {
  EmbeddedComplex out = c;
  const int v = c.vertex_count;
  out.dim = std::max(1, v - 1);
  out.coords.assign(v, RationalVector(out.dim));
  for (int i = 1; i < v; ++i) out.coords[i][i - 1] = 1;
  return out;
}

EmbeddedComplex relabel(const EmbeddedComplex& c, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  std::vector<Triangle> triangles;
  for (const auto& e : c.edges) edges.push_back({perm[e[0]], perm[e[1]]});
  for (const auto& t : c.triangles) triangles.push_back({perm[t[0]], perm[t[1]], perm[t[2]]});
  std::vector<RationalVector> coords;
  if (c.has_coordinates()) {
    coords.resize(c.vertex_count);
    for (int x = 0; x < c.vertex_count; ++x) coords[perm[x]] = c.coords[x];
  }
  return make_complex(c.vertex_count, std::move(edges), std::move(triangles), std::move(coords), c.mode);
}

std::string to_off(const EmbeddedComplex& c) {
  if (!c.has_coordinates()) throw Error(ErrorKind::invariant, "OFF export needs coordinates");
  std::ostringstream os;
  os.precision(17);
  if (c.dim == 3)
    os << "OFF\n";
  else
    os << "nOFF\n" << c.dim << "\n";
  os << c.vertex_count << " " << c.triangles.size() << " " << c.edges.size() << "\n";
  for (const auto& p : c.coords) {
    for (int k = 0; k < c.dim; ++k) os << (k ? " " : "") << p[k].get_d();
    os << "\n";
  }
  for (const auto& t : c.triangles) os << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
  return os.str();
}

}  // namespace eqlift
