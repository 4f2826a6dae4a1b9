#pragma once

#include "eqlift/complex.hpp"
#include "eqlift/group.hpp"

namespace fixtures {

using eqlift::Rational;
using eqlift::RationalVector;

// [-1, 1] subdivided at 0, so that x -> -x is simplicial.
inline eqlift::EmbeddedComplex interval() {
  return eqlift::make_complex(3, {{0, 1}, {1, 2}}, {}, {{Rational(-1)}, {Rational(0)}, {Rational(1)}},
                              eqlift::ComplexMode::general);
}

inline eqlift::VertexAction reflection() { return {eqlift::make_cyclic(2), {{0, 1, 2}, {2, 1, 0}}}; }

// Boundary of the cross-polytope: +-e_1, +-e_2, +-e_3 as vertices 0..5.
inline eqlift::EmbeddedComplex octahedron() {
  std::vector<RationalVector> coords;
  for (int axis = 0; axis < 3; ++axis)
    for (int s : {1, -1}) {
      RationalVector p(3, Rational(0));
      p[axis] = s;
      coords.push_back(p);
    }
  std::vector<eqlift::Triangle> tris;
  for (int x : {0, 1})
    for (int y : {2, 3})
      for (int z : {4, 5}) tris.push_back({x, y, z});
  return eqlift::make_complex(6, {}, tris, coords, eqlift::ComplexMode::closed_surface);
}

inline eqlift::VertexAction antipodal() {
  return {eqlift::make_cyclic(2), {{0, 1, 2, 3, 4, 5}, {1, 0, 3, 2, 5, 4}}};
}

// Z_n acting on a single n-cycle of vertices placed on the moment curve.
inline eqlift::EmbeddedComplex polygon(int n) {
  std::vector<eqlift::Edge> edges;
  std::vector<RationalVector> coords;
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n});
    coords.push_back({Rational(i), Rational(i * i), Rational(i * i * i)});
  }
  return eqlift::make_complex(n, edges, {}, coords, eqlift::ComplexMode::general);
}

inline eqlift::VertexAction rotation(int n) {
  eqlift::VertexAction a{eqlift::make_cyclic(n), {}};
  for (int g = 0; g < n; ++g) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + g) % n;
    a.perms.push_back(p);
  }
  return a;
}

}  // namespace fixtures
