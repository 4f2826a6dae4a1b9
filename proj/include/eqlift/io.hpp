#pragma once

// JSON file formats. Group labels are 1-based, vertex indices 0-based, and
// rational coordinates are "numerator/denominator" strings.

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "eqlift/certifier.hpp"
#include "eqlift/complex.hpp"
#include "eqlift/group.hpp"
#include "eqlift/lifter.hpp"

namespace eqlift::io {

using nlohmann::json;

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);
std::string dump(const json& j);

json group_to_json(const GroupTable& t);
/// {"order": n, "table": [[...]]}. Shape errors throw parse.
GroupTable group_from_json(const json& j);

json action_to_json(const VertexAction& a);
/// `base_dir` resolves a group given as a file path.
VertexAction action_from_json(const json& j, const std::filesystem::path& base_dir = {});

json complex_to_json(const EmbeddedComplex& c, const VertexAction* action = nullptr);

struct ComplexFile {
  EmbeddedComplex complex;
  std::optional<VertexAction> action;
  json raw;
};

/// Parses and validates eagerly (load_complex). Mode comes from "surface":
/// "closed" or "general" (default).
ComplexFile complex_from_json(const json& j, const std::filesystem::path& base_dir = {});
ComplexFile load_complex(const std::filesystem::path& path);

json rep_to_json(const BlockOrthogonalRep& rep);
BlockOrthogonalRep rep_from_json(const json& j, const GroupTable& group);

json dense_matrix_to_json(const exact::Matrix& m);

/// Row-major floats, or {"blocks": [{"angle_num": a, "angle_den": b}], "identity_tail": t}.
OrthogonalOperator operator_from_json(const json& j);
/// [{"point": [...], "length": w}, ...]
std::vector<Witness> witnesses_from_json(const json& j);
json certificate_to_json(const SpectralCertificate& c);

}  // namespace eqlift::io
