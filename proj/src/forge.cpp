#include "eqlift/forge.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "eqlift/error.hpp"

namespace eqlift {
namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// perm^k for a permutation given as an array.
std::vector<int> power_of(const std::vector<int>& perm, const std::vector<int>& prev) {
  std::vector<int> out(perm.size());
  for (std::size_t x = 0; x < perm.size(); ++x) out[x] = perm[prev[x]];
  return out;
}

VertexAction cyclic_action_from_generator(const std::vector<int>& generator, long order) {
  VertexAction action;
  action.group = make_cyclic(static_cast<int>(order));
  std::vector<int> current(generator.size());
  std::iota(current.begin(), current.end(), 0);
  action.perms.reserve(static_cast<std::size_t>(order));
  for (long k = 0; k < order; ++k) {
    action.perms.push_back(current);
    current = power_of(generator, current);
  }
  return action;
}

// Cycles of a permutation, ordered by smallest member.
std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<std::vector<int>> out;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = static_cast<int>(start); !seen[x]; x = perm[x]) {
      seen[x] = 1;
      cycle.push_back(x);
    }
    std::sort(cycle.begin(), cycle.end());
    out.push_back(std::move(cycle));
  }
  return out;
}

// A cyclic action generated by f is simplicial iff f is, and faithful iff the
// permutation f has order exactly P.
ValidationReport validate_cyclic_deck(const EmbeddedComplex& c, const std::vector<int>& f, long order) {
  ValidationReport report;
  std::string simplicial;
  for (const auto& t : c.triangles) {
    Triangle img{f[t[0]], f[t[1]], f[t[2]]};
    std::sort(img.begin(), img.end());
    if (!std::binary_search(c.triangles.begin(), c.triangles.end(), img)) {
      simplicial = "generator does not map triangles to triangles";
      break;
    }
  }
  report.add("deck_simplicial", simplicial.empty(), simplicial);
  long perm_order = 1;
  for (const auto& cyc : cycles_of(f)) perm_order = std::lcm(perm_order, static_cast<long>(cyc.size()));
  report.add("deck_faithful", perm_order == order,
             perm_order == order ? "" : "generator has order " + std::to_string(perm_order));
  return report;
}

}  // namespace

std::vector<long> first_primes(int l) {
  if (l < 1) throw Error(ErrorKind::domain, "need l >= 1 primes");
  std::vector<long> primes;
  for (long candidate = 2; static_cast<int>(primes.size()) < l; ++candidate) {
    bool prime = true;
    for (long p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
  }
  return primes;
}

OrbifoldSignature orbifold_signature(int l) {
  if (l < 2)
    throw Error(ErrorKind::degenerate_signature,
                "l = " + std::to_string(l) + " gives cone index 1; use the sphere rotation for l = 1");
  OrbifoldSignature sig;
  sig.l = l;
  sig.primes = first_primes(l);
  for (long p : sig.primes) sig.P *= p;
  for (long p : sig.primes) {
    sig.cone_indices.push_back(sig.P / p);
    sig.cone_indices.push_back(sig.P / p);
  }
  return sig;
}

ValidationReport audit_monodromy(const OrbifoldSignature& sig, const MonodromyData& mono) {
  ValidationReport report;
  const long P = sig.P;
  const bool shape = mono.modulus == P && static_cast<int>(mono.a.size()) == sig.l &&
                     static_cast<int>(mono.a_prime.size()) == sig.l;
  report.add("shape", shape, shape ? "" : "one exponent pair per prime expected");
  if (!shape) return report;

  long total = 0;
  for (int j = 0; j < sig.l; ++j) total = mod(total + mono.a[j] + mono.a_prime[j], P);
  report.add("product_relation", total == 0,
             total == 0 ? "" : "images of x_1 x'_1 ... x_l x'_l multiply to f^" + std::to_string(total));

  std::string order, inject;
  for (int j = 0; j < sig.l; ++j) {
    const long delta = sig.P / sig.primes[j];
    for (long e : {mono.a[j], mono.a_prime[j]}) {
      if (mod(delta * e, P) != 0 && order.empty())
        order = "f^" + std::to_string(mod(e, P)) + " does not have order dividing " + std::to_string(delta);
      if (P / std::gcd(mod(e, P), P) != delta && inject.empty())
        inject = "cone generator " + std::to_string(j + 1) + " maps to an element of order " +
                 std::to_string(P / std::gcd(mod(e, P), P)) + ", not " + std::to_string(delta);
    }
  }
  report.add("cone_orders", order.empty(), order);
  report.add("cone_subgroups_inject", inject.empty(), inject);

  long g = P;
  for (int j = 0; j < sig.l; ++j) g = std::gcd(g, std::gcd(mod(mono.a[j], P), mod(mono.a_prime[j], P)));
  report.add("surjective", g == 1, g == 1 ? "" : "image is the subgroup generated by f^" + std::to_string(g));
  return report;
}

MonodromyData monodromy(const OrbifoldSignature& sig) {
  MonodromyData mono;
  mono.modulus = sig.P;
  for (long p : sig.primes) {
    mono.a.push_back(mod(p, sig.P));
    mono.a_prime.push_back(mod(-p, sig.P));
  }
  const auto report = audit_monodromy(sig, mono);
  for (const auto& c : report.checks)
    if (!c.passed) throw Error(ErrorKind::construction, "monodromy " + c.name + ": " + c.detail);
  return mono;
}

RiemannHurwitz riemann_hurwitz_genus(const OrbifoldSignature& sig) {
  RiemannHurwitz rh;
  rh.chi_orb = 2;
  for (long delta : sig.cone_indices) rh.chi_orb -= 1 - Rational(1, delta);
  rh.chi_orb.canonicalize();
  const Rational chi = rh.chi_orb * sig.P;
  if (chi.get_den() != 1)
    throw Error(ErrorKind::inconsistency, "Euler characteristic " + format_rational(chi) + " is not an integer");
  rh.chi = chi.get_num().get_si();
  if (rh.chi % 2 != 0) throw Error(ErrorKind::inconsistency, "odd Euler characteristic for a closed orientable surface");
  rh.genus = 1 - rh.chi / 2;
  if (rh.genus < 0)
    throw Error(ErrorKind::inconsistency, "negative genus " + std::to_string(rh.genus) +
                                              ": an unbranched connected cover of the sphere has degree 1");
  return rh;
}

BranchedCoverSurface build_branched_cover(const OrbifoldSignature& sig, const MonodromyData& mono) {
  const auto mono_report = audit_monodromy(sig, mono);
  for (const auto& c : mono_report.checks)
    if (!c.passed) throw Error(ErrorKind::construction, "monodromy " + c.name + ": " + c.detail);
  const long P = sig.P;

  // Base sphere: a bipyramid over a ring alternating cone points and regular
  // vertices. Vertex 0 is the basepoint (apex), 1 the opposite apex, ring
  // position q is vertex 2 + q; cone i sits at ring position 2i. The slit for
  // cone i is the edge (basepoint, cone i), so no slit meets another away from
  // the basepoint and no two cone points are adjacent.
  const int cones = 2 * sig.l;
  const int ring = 2 * cones;
  auto ring_vertex = [&](int q) { return 2 + mod(q, ring); };
  std::vector<Triangle> base_tris;  // oriented
  for (int q = 0; q < ring; ++q) base_tris.push_back({0, static_cast<int>(ring_vertex(q)), static_cast<int>(ring_vertex(q + 1))});
  for (int q = 0; q < ring; ++q) base_tris.push_back({1, static_cast<int>(ring_vertex(q + 1)), static_cast<int>(ring_vertex(q))});
  const int faces = static_cast<int>(base_tris.size());
  const int base_vertices = 2 + ring;

  // Crossing the slit of cone i from top triangle q = 2i-1 into q = 2i shifts
  // the sheet by the monodromy exponent of that cone (x_j, then x'_j).
  auto cone_exponent = [&](int i) { return i % 2 == 0 ? mono.a[i / 2] : mono.a_prime[i / 2]; };
  std::map<Edge, std::vector<int>> edge_tris;
  for (int t = 0; t < faces; ++t) {
    const auto& tri = base_tris[t];
    for (int c = 0; c < 3; ++c) {
      Edge e{tri[c], tri[(c + 1) % 3]};
      std::sort(e.begin(), e.end());
      edge_tris[e].push_back(t);
    }
  }
  auto voltage = [&](const Edge& e, int from, int to) -> long {
    if (e[0] != 0 || e[1] < 2 || (e[1] - 2) % 2 != 0) return 0;
    const int i = (e[1] - 2) / 2;
    const int before = static_cast<int>(mod(2 * i - 1, ring));
    const int after = 2 * i;
    if (from == before && to == after) return cone_exponent(i);
    if (from == after && to == before) return -cone_exponent(i);
    throw Error(ErrorKind::construction, "slit edge with unexpected neighbours");
  };

  const std::size_t corner_count = static_cast<std::size_t>(P) * faces * 3;
  auto corner = [&](long sheet, int t, int c) {
    return static_cast<int>((static_cast<std::size_t>(sheet) * faces + t) * 3 + c);
  };
  auto position = [&](int t, int v) {
    for (int c = 0; c < 3; ++c)
      if (base_tris[t][c] == v) return c;
    return -1;
  };
  DisjointSets ds(corner_count);
  for (const auto& [e, tris] : edge_tris) {
    if (tris.size() != 2) throw Error(ErrorKind::construction, "base triangulation is not a closed surface");
    const int t1 = tris[0], t2 = tris[1];
    const long vol = voltage(e, t1, t2);
    for (long k = 0; k < P; ++k) {
      const long k2 = mod(k + vol, P);
      for (int v : e) ds.unite(corner(k, t1, position(t1, v)), corner(k2, t2, position(t2, v)));
    }
  }

  // Copy-major vertex numbering.
  std::vector<int> vertex_of_root(corner_count, -1);
  std::vector<int> projection;
  std::vector<int> corner_vertex(corner_count);
  for (long k = 0; k < P; ++k)
    for (int t = 0; t < faces; ++t)
      for (int c = 0; c < 3; ++c) {
        const int id = corner(k, t, c);
        const int root = ds.find(id);
        if (vertex_of_root[root] < 0) {
          vertex_of_root[root] = static_cast<int>(projection.size());
          projection.push_back(base_tris[t][c]);
        }
        corner_vertex[id] = vertex_of_root[root];
      }
  const int V = static_cast<int>(projection.size());

  std::vector<Triangle> tris;
  tris.reserve(static_cast<std::size_t>(P) * faces);
  for (long k = 0; k < P; ++k)
    for (int t = 0; t < faces; ++t)
      tris.push_back({corner_vertex[corner(k, t, 0)], corner_vertex[corner(k, t, 1)], corner_vertex[corner(k, t, 2)]});

  // The deck generator moves every sheet up by one.
  std::vector<int> f(V, -1);
  for (long k = 0; k < P; ++k)
    for (int t = 0; t < faces; ++t)
      for (int c = 0; c < 3; ++c) {
        const int from = corner_vertex[corner(k, t, c)];
        const int to = corner_vertex[corner(mod(k + 1, P), t, c)];
        if (f[from] >= 0 && f[from] != to)
          throw Error(ErrorKind::construction, "sheet shift is not well defined on vertex " + std::to_string(from));
        f[from] = to;
      }

  BranchedCoverSurface cover;
  try {
    cover.surface = make_complex(V, {}, std::move(tris), {}, ComplexMode::closed_surface);
  } catch (const Error& e) {
    throw Error(ErrorKind::construction, std::string("cover is not a closed surface: ") + e.what());
  }
  const std::size_t base_edges = edge_tris.size();
  if (cover.surface.triangles.size() != static_cast<std::size_t>(P) * faces ||
      cover.surface.edges.size() != static_cast<std::size_t>(P) * base_edges)
    throw Error(ErrorKind::construction, "lifted simplices collapsed: the cover is not simplicial");
  if (!is_orientable(cover.surface)) throw Error(ErrorKind::construction, "cover is not orientable");

  const auto rh = riemann_hurwitz_genus(sig);
  const long chi = euler_characteristic(cover.surface);
  if (chi != rh.chi)
    throw Error(ErrorKind::construction, "simplex count gives chi = " + std::to_string(chi) +
                                             ", Riemann-Hurwitz predicts " + std::to_string(rh.chi));

  const auto deck_report = validate_cyclic_deck(cover.surface, f, P);
  for (const auto& c : deck_report.checks)
    if (!c.passed) throw Error(ErrorKind::construction, c.name + ": " + c.detail);

  cover.deck = cyclic_action_from_generator(f, P);
  cover.projection = std::move(projection);
  std::vector<Triangle> base_sorted = base_tris;
  cover.base = make_complex(base_vertices, {}, std::move(base_sorted), {}, ComplexMode::closed_surface);
  for (int i = 0; i < cones; ++i) {
    const long delta = sig.cone_indices[i];
    cover.cones.push_back({static_cast<int>(ring_vertex(2 * i)), delta, P / delta});
  }
  cover.l = sig.l;
  cover.P = P;
  cover.genus = rh.genus;
  return cover;
}

BranchedCoverSurface sphere_rotation_cover() {
  // Octahedron: 0,1 = +-e1; 2,3 = +-e2; 4,5 = +-e3. The half-turn about the
  // e3 axis swaps 0<->1 and 2<->3 and fixes the poles 4, 5.
  std::vector<Triangle> tris;
  for (int x : {0, 1})
    for (int y : {2, 3})
      for (int z : {4, 5}) tris.push_back({x, y, z});
  BranchedCoverSurface cover;
  cover.surface = make_complex(6, {}, std::move(tris), {}, ComplexMode::closed_surface);
  cover.deck = cyclic_action_from_generator({1, 0, 3, 2, 4, 5}, 2);
  cover.projection = {0, 0, 1, 1, 2, 3};
  // The quotient is a two-triangle pillow, not a simplicial complex; keep it
  // in general mode for reference only.
  cover.base = make_complex(4, {}, {{0, 1, 2}, {0, 1, 3}}, {}, ComplexMode::general);
  cover.cones = {{2, 2, 1}, {3, 2, 1}};
  cover.l = 1;
  cover.P = 2;
  cover.genus = 0;
  cover.sphere_rotation = true;
  return cover;
}

BranchedCoverSurface forge_surface(int l) {
  if (l < 1) throw Error(ErrorKind::domain, "l must be >= 1");
  if (l == 1) return sphere_rotation_cover();
  const auto sig = orbifold_signature(l);
  return build_branched_cover(sig, monodromy(sig));
}

OrbitAuditReport orbit_audit(const BranchedCoverSurface& cover) {
  OrbitAuditReport out;
  const int V = cover.surface.vertex_count;
  const bool shape = cover.deck.group.order() == cover.P && cover.deck.vertex_count() == V &&
                     static_cast<int>(cover.projection.size()) == V && cover.P >= 2;
  out.report.add("shape", shape, shape ? "" : "deck action does not match the surface");
  if (!shape) return out;

  const auto& f = cover.deck.perm(2);
  std::vector<int> cycle_of(V, -1);
  const auto cycles = [&] {
    std::vector<char> seen(V, 0);
    std::vector<std::vector<int>> out_cycles;
    for (int start = 0; start < V; ++start) {
      if (seen[start]) continue;
      std::vector<int> cycle;
      for (int x = start; x >= 0 && x < V && !seen[x]; x = f[x]) {
        seen[x] = 1;
        cycle.push_back(x);
      }
      std::sort(cycle.begin(), cycle.end());
      out_cycles.push_back(std::move(cycle));
    }
    return out_cycles;
  }();
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    out.orbit_lengths.push_back(static_cast<long>(cycles[k].size()));
    for (int x : cycles[k]) cycle_of[x] = static_cast<int>(k);
  }

  std::vector<char> over_cone(V, 0);
  for (std::size_t i = 0; i < cover.cones.size(); ++i) {
    const auto& cone = cover.cones[i];
    std::vector<int> fiber;
    for (int x = 0; x < V; ++x)
      if (cover.projection[x] == cone.base_vertex) fiber.push_back(x);
    for (int x : fiber) over_cone[x] = 1;
    bool single = !fiber.empty();
    for (int x : fiber) single = single && cycle_of[x] == cycle_of[fiber.front()];
    single = single && cycles[cycle_of[fiber.front()]].size() == fiber.size();
    const bool ok = single && static_cast<long>(fiber.size()) == cone.fiber_length;
    out.cone_fiber_lengths.push_back(static_cast<long>(fiber.size()));
    out.report.add("cone_fiber_" + std::to_string(i + 1), ok,
                   ok ? ""
                      : "cone point " + std::to_string(i + 1) + " (index " + std::to_string(cone.index) +
                            "): fiber of " + std::to_string(fiber.size()) + " vertices is " +
                            (single ? "one orbit" : "not a single orbit") + ", expected one orbit of length " +
                            std::to_string(cone.fiber_length));
  }

  std::string free_detail;
  for (const auto& cycle : cycles) {
    if (over_cone[cycle.front()]) continue;
    if (static_cast<long>(cycle.size()) != cover.P) {
      free_detail = "orbit of vertex " + std::to_string(cycle.front()) + " has length " +
                    std::to_string(cycle.size()) + " away from the cone points";
      break;
    }
  }
  out.report.add("free_orbits", free_detail.empty(), free_detail);

  const auto primes = first_primes(cover.l);
  std::string missing;
  for (long p : primes)
    if (std::find(out.orbit_lengths.begin(), out.orbit_lengths.end(), p) == out.orbit_lengths.end())
      missing += (missing.empty() ? "" : ",") + std::to_string(p);
  out.report.add("prime_orbit_lengths", missing.empty(), missing.empty() ? "" : "no orbit of length " + missing);

  const auto profile = coprime_profile_of_orbits(out.orbit_lengths);
  out.report.add("coprime_hypothesis", profile.l == cover.l,
                 "max pairwise coprime subset has size " + std::to_string(profile.l));
  return out;
}

long hurwitz_dimension(long genus) {
  if (genus < 2) throw Error(ErrorKind::domain, "the Hurwitz bound needs genus > 1");
  return 252 * (genus - 1) + 1;
}

CounterexampleResult counterexample_pipeline(int m) {
  if (m < 1) throw Error(ErrorKind::domain, "m must be >= 1");
  CounterexampleResult r;
  r.m = m;
  r.l = m / 2 + 1;
  r.cover = forge_surface(r.l);
  r.audit = orbit_audit(r.cover);
  if (r.l >= 2) {
    const auto sig = orbifold_signature(r.l);
    r.monodromy_audit = audit_monodromy(sig, monodromy(sig));
  }
  r.profile = coprime_profile_of_orbits(r.audit.orbit_lengths);
  r.bound = r.profile.bound;
  return r;
}

}  // namespace eqlift
