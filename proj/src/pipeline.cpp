#include "eqlift/pipeline.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include "eqlift/error.hpp"
#include "eqlift/io.hpp"

namespace eqlift {

using nlohmann::json;

Settings settings_from_env() {
  Settings s;
  if (const char* env = std::getenv("EQLIFT_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0))
      throw Error(ErrorKind::parse, std::string("EQLIFT_TOL is not a positive number: ") + env);
    s.tol = tol;
  }
  return s;
}

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
    throw Error(ErrorKind::io, "sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

InputDigest digest_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return {path.string(), sha256_hex(buf.str())};
}

json RunManifest::to_json() const {
  json inputs_json = json::array();
  for (const auto& d : inputs) inputs_json.push_back(json{{"path", d.path}, {"sha256", d.sha256}});
  return json{{"command", command},
              {"inputs", inputs_json},
              {"version", version},
              {"settings", json{{"tol", settings.tol}, {"orbit_cap", settings.orbit_cap}, {"max_dim", settings.max_dim}}},
              {"outcome", outcome}};
}

UpperReport pipeline_upper(const EmbeddedComplex& c, const VertexAction& a, bool force_extend,
                           const Settings& settings) {
  UpperReport r;
  r.action = validate_action(c, a);
  if (!r.action.passed()) return r;
  r.source_embedding = verify_pl_embedding(c);
  r.lift = determinant_extend(stack_embedding(c, a, LiftOptions{settings.max_dim}), force_extend);
  r.equivariance = verify_equivariance(r.lift, a);
  r.lifted_embedding = verify_pl_embedding(r.lift.complex);
  return r;
}

CounterexampleResult pipeline_lower(int m) {
  if (m < 1) throw Error(ErrorKind::domain, "m must be >= 1");
  return counterexample_pipeline(m);
}

RoundtripReport pipeline_roundtrip(int l, const Settings& settings) {
  if (l < 1) throw Error(ErrorKind::domain, "l must be >= 1");
  RoundtripReport r;
  r.l = l;
  const auto cover = forge_surface(l);
  const auto audit = orbit_audit(cover);
  r.lower_bound = coprime_profile_of_orbits(audit.orbit_lengths).bound;
  r.genus = cover.genus;
  r.P = cover.P;
  const auto source = with_canonical_coordinates(cover.surface);
  r.source_dim = source.dim;
  const auto lift = determinant_extend(stack_embedding(source, cover.deck, LiftOptions{settings.max_dim}));
  r.lifted_dim = lift.ambient_dim();
  r.extended = lift.rep.extended;
  r.equivariance_exact = verify_equivariance(lift, cover.deck).passed();
  r.embedded = verify_pl_embedding(lift.complex).embedded();
  return r;
}

json to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return json{{"passed", r.passed()}, {"checks", checks}};
}

json to_json(const EmbeddingReport& e) {
  json j{{"embedded", e.embedded()},
         {"vertex_injective", e.vertex_injective},
         {"simplices_nondegenerate", e.simplices_nondegenerate},
         {"bad_pairs", e.bad_pairs.size()},
         {"pairs_tested", e.pairs_tested}};
  if (!e.detail.empty()) j["detail"] = e.detail;
  return j;
}

json to_json(const UpperReport& r) {
  json j{{"passed", r.passed()}, {"action", to_json(r.action)}};
  if (!r.action.passed()) return j;
  json failures = json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(r.equivariance.failures.size(), 20); ++i)
    failures.push_back(json{{"element", r.equivariance.failures[i].first}, {"vertex", r.equivariance.failures[i].second}});
  j["m"] = r.lift.ambient_dim();
  j["source_dim"] = r.lift.rep.block_size;
  j["group_order"] = r.lift.rep.order();
  j["extended"] = r.lift.rep.extended;
  j["equivariance"] = json{{"exact", r.equivariance.passed()}, {"checked", r.equivariance.checked},
                           {"failures", failures}};
  j["source_embedding"] = to_json(r.source_embedding);
  j["lifted_embedding"] = to_json(r.lifted_embedding);
  return j;
}

json cover_metadata(const BranchedCoverSurface& cover) {
  json cone_indices = json::array();
  for (const auto& c : cover.cones) cone_indices.push_back(c.index);
  return json{{"l", cover.l},
              {"primes", first_primes(cover.l)},
              {"P", cover.P},
              {"cone_indices", cone_indices},
              {"genus", cover.genus},
              {"chi", euler_characteristic(cover.surface)}};
}

json to_json(const CounterexampleResult& r) {
  json j{{"m", r.m},
         {"l", r.l},
         {"bound", r.bound},
         {"holds", r.holds()},
         {"surface", cover_metadata(r.cover)},
         {"orbit_audit", to_json(r.audit.report)},
         {"coprime_lengths", r.profile.chosen},
         {"statement", "every equivariant embedding of this surface for its Z_" + std::to_string(r.cover.P) +
                           " action needs dimension >= " + std::to_string(r.bound) + " > " + std::to_string(r.m)}};
  if (!r.monodromy_audit.checks.empty()) j["monodromy_audit"] = to_json(r.monodromy_audit);
  return j;
}

json to_json(const RoundtripReport& r) {
  return json{{"l", r.l},
              {"lower_bound", r.lower_bound},
              {"source_dim", r.source_dim},
              {"lifted_dim", r.lifted_dim},
              {"extended", r.extended},
              {"genus", r.genus},
              {"P", r.P},
              {"equivariance_exact", r.equivariance_exact},
              {"embedded", r.embedded},
              {"passed", r.passed()}};
}

}  // namespace eqlift
