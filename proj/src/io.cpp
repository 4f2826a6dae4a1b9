#include "eqlift/io.hpp"

#include <fstream>
#include <sstream>

#include "eqlift/error.hpp"

namespace eqlift::io {

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, path.string() + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
  out << dump(j);
}

namespace {

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::parse, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

json group_to_json(const GroupTable& t) { return json{{"order", t.order()}, {"table", t.rows()}}; }

GroupTable group_from_json(const json& j) {
  const int order = get_field<int>(j, "order");
  auto rows = get_field<std::vector<std::vector<Label>>>(j, "table");
  if (order < 1) throw Error(ErrorKind::invalid_order, "order must be >= 1");
  if (static_cast<int>(rows.size()) != order)
    throw Error(ErrorKind::parse, "table has " + std::to_string(rows.size()) + " rows, order is " + std::to_string(order));
  return GroupTable(std::move(rows));
}

json action_to_json(const VertexAction& a) {
  json perms = json::object();
  for (Label g = 1; g <= a.group.order(); ++g) perms[std::to_string(g)] = a.perm(g);
  return json{{"group", group_to_json(a.group)}, {"perms", perms}};
}

VertexAction action_from_json(const json& j, const std::filesystem::path& base_dir) {
  VertexAction a;
  if (!j.is_object() || !j.contains("group")) throw Error(ErrorKind::parse, "action needs a group");
  const auto& g = j.at("group");
  if (g.is_string())
    a.group = group_from_json(read_json(base_dir / g.get<std::string>()));
  else
    a.group = group_from_json(g);
  const auto perms = get_field<std::map<std::string, std::vector<int>>>(j, "perms");
  a.perms.resize(a.group.order());
  for (const auto& [key, perm] : perms) {
    int label = 0;
    try {
      label = std::stoi(key);
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, "perm key '" + key + "' is not a label");
    }
    if (!a.group.contains(label)) throw Error(ErrorKind::label, "perm key " + key + " out of range");
    a.perms[label - 1] = perm;
  }
  for (Label l = 1; l <= a.group.order(); ++l)
    if (a.perms[l - 1].empty()) throw Error(ErrorKind::parse, "missing perm for element " + std::to_string(l));
  return a;
}

json complex_to_json(const EmbeddedComplex& c, const VertexAction* action) {
  json j;
  j["dim"] = c.dim;
  j["vertex_count"] = c.vertex_count;
  j["surface"] = c.mode == ComplexMode::closed_surface ? "closed" : "general";
  if (c.has_coordinates()) {
    json verts = json::array();
    for (const auto& p : c.coords) {
      json row = json::array();
      for (const auto& q : p) row.push_back(format_rational(q));
      verts.push_back(std::move(row));
    }
    j["vertices"] = std::move(verts);
  }
  j["simplices"] = json{{"edges", c.edges}, {"triangles", c.triangles}};
  if (action != nullptr) j["action"] = action_to_json(*action);
  return j;
}

ComplexFile complex_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw Error(ErrorKind::parse, "complex file must be a JSON object");
  ComplexFile out;
  out.raw = j;
  std::vector<RationalVector> coords;
  int vertex_count = 0;
  if (j.contains("vertices")) {
    for (const auto& row : j.at("vertices")) {
      if (!row.is_array()) throw Error(ErrorKind::parse, "vertex coordinates must be arrays");
      RationalVector p;
      for (const auto& x : row) {
        if (x.is_string())
          p.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer())
          p.emplace_back(x.get<long>());
        else
          throw Error(ErrorKind::parse, "coordinates must be \"p/q\" strings or integers");
      }
      coords.push_back(std::move(p));
    }
    vertex_count = static_cast<int>(coords.size());
    const int dim = get_field<int>(j, "dim");
    for (const auto& p : coords)
      if (static_cast<int>(p.size()) != dim)
        throw Error(ErrorKind::invariant, "coordinate_shape: a vertex is not in R^" + std::to_string(dim));
    if (j.contains("vertex_count") && get_field<int>(j, "vertex_count") != vertex_count)
      throw Error(ErrorKind::invariant, "vertex_count disagrees with the vertex list");
  } else {
    vertex_count = get_field<int>(j, "vertex_count");
  }
  std::vector<Edge> edges;
  std::vector<Triangle> triangles;
  if (j.contains("simplices")) {
    const auto& s = j.at("simplices");
    if (s.contains("edges")) edges = get_field<std::vector<Edge>>(s, "edges");
    if (s.contains("triangles")) triangles = get_field<std::vector<Triangle>>(s, "triangles");
  }
  ComplexMode mode = ComplexMode::general;
  if (j.contains("surface")) {
    const auto m = get_field<std::string>(j, "surface");
    if (m == "closed")
      mode = ComplexMode::closed_surface;
    else if (m != "general")
      throw Error(ErrorKind::parse, "surface must be \"closed\" or \"general\"");
  }
  out.complex = make_complex(vertex_count, std::move(edges), std::move(triangles), std::move(coords), mode);
  if (j.contains("action")) out.action = action_from_json(j.at("action"), base_dir);
  return out;
}

ComplexFile load_complex(const std::filesystem::path& path) {
  return complex_from_json(read_json(path), path.parent_path());
}

json rep_to_json(const BlockOrthogonalRep& rep) {
  json elements = json::object();
  for (Label g = 1; g <= rep.order(); ++g)
    elements[std::to_string(g)] = json{{"sigma", rep.blocks[g - 1].sigma}, {"det", rep.detcol[g - 1]}};
  return json{{"m", rep.ambient_dim()},
              {"extended", rep.extended},
              {"block_size", rep.block_size},
              {"elements", elements}};
}

BlockOrthogonalRep rep_from_json(const json& j, const GroupTable& group) {
  BlockOrthogonalRep rep;
  rep.group = group;
  rep.extended = get_field<bool>(j, "extended");
  const int m = get_field<int>(j, "m");
  const int n = group.order();
  rep.block_size = j.contains("block_size") ? get_field<int>(j, "block_size") : (m - (rep.extended ? 1 : 0)) / n;
  if (rep.block_size < 1 || rep.ambient_dim() != m)
    throw Error(ErrorKind::parse, "representation dimension " + std::to_string(m) + " does not fit the group");
  const auto& elements = j.at("elements");
  for (Label g = 1; g <= n; ++g) {
    const auto key = std::to_string(g);
    if (!elements.contains(key)) throw Error(ErrorKind::parse, "representation lacks element " + key);
    CayleyPermutation cp;
    cp.element = g;
    cp.sigma = get_field<std::vector<Label>>(elements.at(key), "sigma");
    if (static_cast<int>(cp.sigma.size()) != n) throw Error(ErrorKind::parse, "sigma of element " + key + " has wrong length");
    for (Label x : cp.sigma)
      if (!group.contains(x)) throw Error(ErrorKind::label, "sigma entry out of range");
    cp.parity = permutation_parity(cp.sigma, true);
    rep.blocks.push_back(std::move(cp));
    rep.detcol.push_back(get_field<int>(elements.at(key), "det"));
  }
  return rep;
}

json dense_matrix_to_json(const exact::Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols; ++k) {
      const auto& q = m(i, k);
      if (q.get_den() == 1)
        row.push_back(q.get_num().get_si());
      else
        row.push_back(q.get_d());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

OrthogonalOperator operator_from_json(const json& j) {
  if (j.is_object() && j.contains("blocks")) {
    std::vector<RotationBlock> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back({get_field<long>(b, "angle_num"), get_field<long>(b, "angle_den")});
    const int tail = j.contains("identity_tail") ? get_field<int>(j, "identity_tail") : 0;
    return OrthogonalOperator::from_blocks(std::move(blocks), tail);
  }
  const json& rows = (j.is_object() && j.contains("matrix")) ? j.at("matrix") : j;
  if (!rows.is_array() || rows.empty()) throw Error(ErrorKind::parse, "matrix must be a non-empty array of rows");
  const auto n = static_cast<long>(rows.size());
  Eigen::MatrixXd a(n, n);
  for (long r = 0; r < n; ++r) {
    if (!rows[r].is_array() || static_cast<long>(rows[r].size()) != n)
      throw Error(ErrorKind::matrix_domain, "matrix is not square");
    for (long c = 0; c < n; ++c) a(r, c) = rows[r][c].get<double>();
  }
  return OrthogonalOperator::from_dense(std::move(a));
}

std::vector<Witness> witnesses_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "witnesses must be an array");
  std::vector<Witness> out;
  for (const auto& w : j) {
    const auto point = get_field<std::vector<double>>(w, "point");
    Witness wit;
    wit.point = Eigen::Map<const Eigen::VectorXd>(point.data(), static_cast<long>(point.size()));
    wit.length = get_field<long>(w, "length");
    out.push_back(std::move(wit));
  }
  return out;
}

json certificate_to_json(const SpectralCertificate& c) {
  json records = json::array();
  for (const auto& r : c.records) records.push_back(json{{"w", r.w}, {"det_residual", r.det_residual}, {"k", r.k}});
  json j{{"m", c.m},
         {"s", c.s},
         {"records", records},
         {"verdict", to_string(c.verdict)},
         {"tol", c.tol},
         {"roots_distinct", c.roots_distinct},
         {"reason", c.reason}};
  if (c.audit)
    j["dimension_audit"] = json{{"claimed_dim", c.audit->claimed_dim},
                                {"forced_eigenvalues", c.audit->forced_eigenvalues},
                                {"conjugate_pairs", c.audit->conjugate_pairs},
                                {"real_minus_one", c.audit->real_minus_one},
                                {"product_sign", c.audit->product_sign},
                                {"verdict", to_string(c.audit->verdict)},
                                {"reason", c.audit->reason}};
  return j;
}

}  // namespace eqlift::io
