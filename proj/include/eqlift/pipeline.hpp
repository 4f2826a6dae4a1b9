#pragma once

// End-to-end runs tying forge, lifter and certifier together, plus the run
// manifest stamped into every emitted file.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqlift/complex.hpp"
#include "eqlift/forge.hpp"
#include "eqlift/lifter.hpp"

namespace eqlift {

inline constexpr const char* kToolVersion = "0.1.0";

struct Settings {
  double tol = kDefaultTolerance;
  long orbit_cap = kDefaultOrbitCap;
  long max_dim = LiftOptions{}.max_dim;
};

/// Defaults, with EQLIFT_TOL overriding the tolerance when set.
Settings settings_from_env();

struct InputDigest {
  std::string path;
  std::string sha256;
};

struct RunManifest {
  std::string command;
  std::vector<InputDigest> inputs;
  std::string version = kToolVersion;
  Settings settings;
  std::string outcome;

  nlohmann::json to_json() const;
};

std::string sha256_hex(const std::string& bytes);
InputDigest digest_file(const std::filesystem::path& path);

struct UpperReport {
  LiftedEmbedding lift;
  EquivarianceReport equivariance;
  EmbeddingReport source_embedding;
  EmbeddingReport lifted_embedding;
  ValidationReport action;

  bool passed() const {
    return action.passed() && equivariance.passed() && lifted_embedding.embedded();
  }
};

/// stack_embedding, determinant_extend, then exact equivariance and PL checks.
/// Throws invariant when the action fails validation.
UpperReport pipeline_upper(const EmbeddedComplex& c, const VertexAction& a, bool force_extend = false,
                           const Settings& settings = {});

/// Throws domain for m < 1.
CounterexampleResult pipeline_lower(int m);

struct RoundtripReport {
  int l = 0;
  int lower_bound = 0;
  int source_dim = 0;
  int lifted_dim = 0;
  bool extended = false;
  long genus = 0;
  long P = 1;
  bool equivariance_exact = false;
  bool embedded = false;
  bool passed() const { return equivariance_exact && embedded && lifted_dim >= lower_bound; }
};

/// Forge, canonical coordinates (d = V - 1), lift, and compare m with 2l.
RoundtripReport pipeline_roundtrip(int l, const Settings& settings = {});

nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const EmbeddingReport& e);
nlohmann::json to_json(const UpperReport& r);
nlohmann::json to_json(const CounterexampleResult& r);
nlohmann::json to_json(const RoundtripReport& r);
nlohmann::json cover_metadata(const BranchedCoverSurface& cover);

}  // namespace eqlift
