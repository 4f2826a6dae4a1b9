#include "eqlift/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "eqlift/error.hpp"

namespace eqlift {

GroupTable::GroupTable(std::vector<std::vector<Label>> rows) {
  order_ = static_cast<int>(rows.size());
  if (order_ < 1) throw Error(ErrorKind::invalid_order, "group table is empty");
  entries_.reserve(static_cast<std::size_t>(order_) * order_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != order_)
      throw Error(ErrorKind::parse, "group table is not square");
    for (Label x : row) {
      if (x < 1 || x > order_)
        throw Error(ErrorKind::label, "table entry " + std::to_string(x) + " out of range");
      entries_.push_back(x);
    }
  }
}

std::vector<std::vector<Label>> GroupTable::rows() const {
  std::vector<std::vector<Label>> out(order_);
  for (int i = 0; i < order_; ++i)
    out[i].assign(entries_.begin() + static_cast<long>(i) * order_,
                  entries_.begin() + static_cast<long>(i + 1) * order_);
  return out;
}

Label GroupTable::inverse(Label g) const {
  for (Label h = 1; h <= order_; ++h)
    if (mul(g, h) == 1) return h;
  throw Error(ErrorKind::consistency, "element " + std::to_string(g) + " has no inverse");
}

GroupTable make_cyclic(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_order, "cyclic group order must be >= 1");
  std::vector<std::vector<Label>> rows(n, std::vector<Label>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n + 1;
  return GroupTable(std::move(rows));
}

std::optional<std::array<Label, 3>> find_nonassociative(const GroupTable& t, Exec exec) {
  const int n = t.order();
  if (exec == Exec::serial) {
    for (Label a = 1; a <= n; ++a)
      for (Label b = 1; b <= n; ++b)
        for (Label c = 1; c <= n; ++c)
          if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c))) return std::array{a, b, c};
    return std::nullopt;
  }
  // First failure in (a, b, c) lexicographic order: each row a reports its own
  // first failure, the smallest a wins.
  std::vector<std::array<Label, 3>> first(n, std::array<Label, 3>{0, 0, 0});
#pragma omp parallel for schedule(dynamic)
  for (int a = 1; a <= n; ++a) {
    for (Label b = 1; b <= n && first[a - 1][0] == 0; ++b)
      for (Label c = 1; c <= n; ++c)
        if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c))) {
          first[a - 1] = {a, b, c};
          break;
        }
  }
  for (const auto& f : first)
    if (f[0] != 0) return f;
  return std::nullopt;
}

ValidationReport validate_table(const GroupTable& t, Exec exec) {
  ValidationReport report;
  const int n = t.order();

  std::string latin_detail;
  for (int i = 1; i <= n && latin_detail.empty(); ++i) {
    std::vector<char> row_seen(n + 1, 0), col_seen(n + 1, 0);
    for (int j = 1; j <= n; ++j) {
      if (row_seen[t.mul(i, j)]++) {
        latin_detail = "row " + std::to_string(i) + " repeats " + std::to_string(t.mul(i, j));
        break;
      }
      if (col_seen[t.mul(j, i)]++) {
        latin_detail = "column " + std::to_string(i) + " repeats " + std::to_string(t.mul(j, i));
        break;
      }
    }
  }
  report.add("latin_square", latin_detail.empty(), latin_detail);

  std::string id_detail;
  for (int i = 1; i <= n; ++i)
    if (t.mul(1, i) != i || t.mul(i, 1) != i) {
      id_detail = "1 is not neutral for " + std::to_string(i);
      break;
    }
  report.add("identity", id_detail.empty(), id_detail);

  const auto bad = find_nonassociative(t, exec);
  report.add("associativity", !bad,
             bad ? "(" + std::to_string((*bad)[0]) + "*" + std::to_string((*bad)[1]) + ")*" +
                       std::to_string((*bad)[2]) + " differs"
                 : std::string{});

  std::string inv_detail;
  for (int g = 1; g <= n && inv_detail.empty(); ++g) {
    bool found = false;
    for (int h = 1; h <= n && !found; ++h) found = t.mul(g, h) == 1 && t.mul(h, g) == 1;
    if (!found) inv_detail = "element " + std::to_string(g) + " has no two-sided inverse";
  }
  report.add("inverses", inv_detail.empty(), inv_detail);
  return report;
}

int permutation_parity(std::span<const int> perm, bool one_based) {
  const int offset = one_based ? 1 : 0;
  const std::size_t n = perm.size();
  std::vector<char> seen(n, 0);
  int parity = 1;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(perm[i] - offset)) {
      seen[i] = 1;
      ++len;
    }
    if (len % 2 == 0) parity = -parity;
  }
  return parity;
}

CayleyPermutation right_mult_permutation(const GroupTable& t, Label g) {
  if (!t.contains(g))
    throw Error(ErrorKind::label, "label " + std::to_string(g) + " outside 1.." +
                                      std::to_string(t.order()));
  CayleyPermutation cp;
  cp.element = g;
  cp.sigma.resize(t.order());
  for (Label i = 1; i <= t.order(); ++i) cp.sigma[i - 1] = t.mul(i, g);
  cp.parity = permutation_parity(cp.sigma, true);
  return cp;
}

namespace {

bool is_permutation_of_range(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool composes(const VertexAction& a, Label i, Label j) {
  const auto& pij = a.perm(a.group.mul(i, j));
  const auto& pi = a.perm(i);
  const auto& pj = a.perm(j);
  for (std::size_t x = 0; x < pij.size(); ++x)
    if (pij[x] != pi[pj[x]]) return false;
  return true;
}

}  // namespace

std::vector<std::array<Label, 2>> homomorphism_failures(const VertexAction& a, Exec exec) {
  const int n = a.group.order();
  std::vector<std::array<Label, 2>> failures;
  if (exec == Exec::serial) {
    for (Label i = 1; i <= n; ++i)
      for (Label j = 1; j <= n; ++j)
        if (!composes(a, i, j)) failures.push_back({i, j});
    return failures;
  }
  std::vector<std::vector<std::array<Label, 2>>> per_row(n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 1; i <= n; ++i)
    for (Label j = 1; j <= n; ++j)
      if (!composes(a, i, j)) per_row[i - 1].push_back({i, j});
  for (auto& row : per_row) failures.insert(failures.end(), row.begin(), row.end());
  return failures;
}

ValidationReport validate_vertex_action(const VertexAction& a, Exec exec) {
  ValidationReport report;
  const int n = a.group.order();
  const int v = a.vertex_count();
  bool shape = static_cast<int>(a.perms.size()) == n;
  for (const auto& p : a.perms) shape = shape && static_cast<int>(p.size()) == v;
  report.add("shape", shape,
             shape ? "" : "expected " + std::to_string(n) + " permutations of equal length");
  if (!shape) return report;

  std::string bij;
  for (Label g = 1; g <= n; ++g)
    if (!is_permutation_of_range(a.perm(g))) {
      bij = "perm for element " + std::to_string(g) + " is not a bijection";
      break;
    }
  report.add("bijective", bij.empty(), bij);
  if (!bij.empty()) return report;

  const auto& id = a.perm(1);
  bool identity = true;
  for (int x = 0; x < v; ++x) identity = identity && id[x] == x;
  report.add("identity", identity, identity ? "" : "perm for element 1 is not the identity");

  const auto fails = homomorphism_failures(a, exec);
  report.add("homomorphism", fails.empty(),
             fails.empty() ? ""
                           : "perm[" + std::to_string(fails[0][0]) + "*" +
                                 std::to_string(fails[0][1]) + "] != perm[" +
                                 std::to_string(fails[0][0]) + "] o perm[" +
                                 std::to_string(fails[0][1]) + "] (" +
                                 std::to_string(fails.size()) + " failing pairs)");
  return report;
}

OrbitPartition orbits(const VertexAction& a) {
  const auto report = validate_vertex_action(a);
  if (!report.passed()) {
    for (const auto& c : report.checks)
      if (!c.passed) throw Error(ErrorKind::consistency, c.name + ": " + c.detail);
  }
  const int v = a.vertex_count();
  std::vector<char> seen(v, 0);
  OrbitPartition out;
  for (int x = 0; x < v; ++x) {
    if (seen[x]) continue;
    std::vector<int> orbit;
    for (const auto& p : a.perms) {
      const int y = p[x];
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.lengths.push_back(static_cast<long>(orbit.size()));
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace eqlift
