#include "eqlift/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "eqlift/error.hpp"
#include "eqlift/io.hpp"
#include "eqlift/pipeline.hpp"

namespace eqlift::cli {
namespace {

using nlohmann::json;

struct Context {
  std::ostream& out;
  std::ostream& err;
  Settings settings;
  bool human = false;

  void emit(const json& j) const {
    if (!human) {
      out << io::dump(j);
      return;
    }
    for (const auto& [key, value] : j.items()) {
      if (key == "manifest") continue;
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
};

RunManifest manifest(const Context& ctx, std::string command, std::vector<std::filesystem::path> inputs,
                     std::string outcome) {
  RunManifest m;
  m.command = std::move(command);
  for (const auto& p : inputs) m.inputs.push_back(digest_file(p));
  m.settings = ctx.settings;
  m.outcome = std::move(outcome);
  return m;
}

int exit_for(bool passed) { return passed ? kExitOk : kExitVerificationFailed; }

std::string outcome(bool passed) { return passed ? "pass" : "fail"; }

std::vector<long> parse_lengths(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, "'" + item + "' is not an integer");
    }
  }
  return out;
}

// group ----------------------------------------------------------------------

int group_validate(const Context& ctx, const std::string& file) {
  const auto table = io::group_from_json(io::read_json(file));
  const auto report = validate_table(table);
  json j = to_json(report);
  j["order"] = table.order();
  j["manifest"] = manifest(ctx, "group validate", {file}, outcome(report.passed())).to_json();
  ctx.emit(j);
  return exit_for(report.passed());
}

int group_cyclic(const Context& ctx, int n, const std::string& file) {
  json j = io::group_to_json(make_cyclic(n));
  j["manifest"] = manifest(ctx, "group cyclic " + std::to_string(n), {}, "pass").to_json();
  if (file.empty())
    ctx.emit(j);
  else
    io::write_json(file, j);
  return kExitOk;
}

// complex --------------------------------------------------------------------

int complex_validate(const Context& ctx, const std::string& file) {
  json j;
  bool passed = true;
  try {
    const auto cf = io::load_complex(file);
    j["structure"] = to_json(check_complex(cf.complex));
    j["vertex_count"] = cf.complex.vertex_count;
    j["euler_characteristic"] = euler_characteristic(cf.complex);
    if (cf.complex.mode == ComplexMode::closed_surface) j["orientable"] = is_orientable(cf.complex);
    if (cf.complex.has_coordinates()) {
      const auto emb = verify_pl_embedding(cf.complex);
      j["embedding"] = to_json(emb);
      passed = passed && emb.embedded();
    }
    if (cf.action) {
      const auto act = validate_action(cf.complex, *cf.action);
      j["action"] = to_json(act);
      passed = passed && act.passed();
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::invariant) throw;
    passed = false;
    j["error"] = e.what();
  }
  j["valid"] = passed;
  j["manifest"] = manifest(ctx, "complex validate", {file}, outcome(passed)).to_json();
  ctx.emit(j);
  return exit_for(passed);
}

int complex_euler(const Context& ctx, const std::string& file) {
  const auto cf = io::load_complex(file);
  json j{{"V", cf.complex.vertex_count},
         {"E", cf.complex.edges.size()},
         {"F", cf.complex.triangles.size()},
         {"euler_characteristic", euler_characteristic(cf.complex)}};
  j["manifest"] = manifest(ctx, "complex euler", {file}, "pass").to_json();
  ctx.emit(j);
  return kExitOk;
}

int complex_off(const Context& ctx, const std::string& file, const std::string& out_file) {
  const auto text = to_off(io::load_complex(file).complex);
  if (out_file.empty()) {
    ctx.out << text;
  } else {
    std::ofstream os(out_file);
    if (!os) throw Error(ErrorKind::io, "cannot write " + out_file);
    os << text;
  }
  return kExitOk;
}

// lift -----------------------------------------------------------------------

std::filesystem::path default_rep_path(const std::filesystem::path& out) {
  auto p = out;
  p.replace_extension(".rep.json");
  return p;
}

int lift_build(const Context& ctx, const std::string& complex_file, const std::string& out_file,
               std::string rep_file, bool force_extend) {
  const auto cf = io::load_complex(complex_file);
  if (!cf.action) throw Error(ErrorKind::parse, complex_file + " has no action block");
  const auto report = pipeline_upper(cf.complex, *cf.action, force_extend, ctx.settings);
  json summary = to_json(report);
  const auto mf = manifest(ctx, "lift", {complex_file}, outcome(report.passed())).to_json();
  if (report.action.passed()) {
    if (rep_file.empty()) rep_file = default_rep_path(out_file).string();
    json lifted = io::complex_to_json(report.lift.complex, &*cf.action);
    lifted["representation"] = io::rep_to_json(report.lift.rep);
    lifted["manifest"] = mf;
    io::write_json(out_file, lifted);
    json rep = io::rep_to_json(report.lift.rep);
    rep["manifest"] = mf;
    io::write_json(rep_file, rep);
    summary["outputs"] = json{{"lift", out_file}, {"representation", rep_file}};
  }
  summary["manifest"] = mf;
  ctx.emit(summary);
  return exit_for(report.passed());
}

struct LoadedLift {
  LiftedEmbedding lift;
  VertexAction action;
};

LoadedLift load_lift(const std::string& lift_file, const std::string& rep_file) {
  const auto cf = io::load_complex(lift_file);
  if (!cf.action) throw Error(ErrorKind::parse, lift_file + " has no action block");
  json rep_json;
  if (!rep_file.empty())
    rep_json = io::read_json(rep_file);
  else if (cf.raw.contains("representation"))
    rep_json = cf.raw.at("representation");
  else
    throw Error(ErrorKind::parse, lift_file + " has no representation block; pass --rep");
  LoadedLift out{{cf.complex, io::rep_from_json(rep_json, cf.action->group)}, *cf.action};
  if (out.lift.rep.ambient_dim() != out.lift.complex.dim)
    throw Error(ErrorKind::invariant, "representation dimension does not match the coordinates");
  return out;
}

int lift_verify(const Context& ctx, const std::string& lift_file, const std::string& rep_file) {
  const auto loaded = load_lift(lift_file, rep_file);
  const auto rep_report = validate_rep(loaded.lift.rep);
  const auto action_report = validate_action(loaded.lift.complex, loaded.action);
  const auto eq = verify_equivariance(loaded.lift, loaded.action);
  const auto emb = verify_pl_embedding(loaded.lift.complex);
  const bool passed = rep_report.passed() && action_report.passed() && eq.passed() && emb.embedded();
  std::vector<std::filesystem::path> inputs{lift_file};
  if (!rep_file.empty()) inputs.emplace_back(rep_file);
  json j{{"m", loaded.lift.ambient_dim()},
         {"representation", to_json(rep_report)},
         {"action", to_json(action_report)},
         {"equivariance", json{{"exact", eq.passed()}, {"checked", eq.checked}, {"failures", eq.failures.size()}}},
         {"embedding", to_json(emb)},
         {"passed", passed}};
  j["manifest"] = manifest(ctx, "lift verify", inputs, outcome(passed)).to_json();
  ctx.emit(j);
  return exit_for(passed);
}

int lift_dense(const Context& ctx, const std::string& lift_file, const std::string& rep_file, int element,
               const std::string& out_file) {
  const auto loaded = load_lift(lift_file, rep_file);
  if (!loaded.lift.rep.group.contains(element))
    throw Error(ErrorKind::label, "element " + std::to_string(element) + " out of range");
  const json j = io::dense_matrix_to_json(loaded.lift.rep.dense(element));
  if (out_file.empty())
    ctx.out << j.dump() << "\n";
  else
    io::write_json(out_file, j);
  return kExitOk;
}

// certify --------------------------------------------------------------------

int certify_bound(const Context& ctx, const std::string& lengths_text) {
  const auto profile = max_coprime_subset(parse_lengths(lengths_text));
  json j{{"lengths", profile.lengths}, {"chosen", profile.chosen}, {"l", profile.l}, {"bound", profile.bound}};
  if (ctx.human) {
    ctx.out << "l = " << profile.l << "\n2l = " << profile.bound << "\n";
    return kExitOk;
  }
  j["manifest"] = manifest(ctx, "certify bound " + lengths_text, {}, "pass").to_json();
  ctx.emit(j);
  return kExitOk;
}

int certify_matrix(const Context& ctx, const std::string& matrix_file, const std::string& witness_file,
                   std::optional<int> claimed_dim) {
  const auto op = io::operator_from_json(io::read_json(matrix_file));
  const auto witnesses = io::witnesses_from_json(io::read_json(witness_file));
  const auto cert = certify(op, witnesses, ctx.settings.tol, claimed_dim, ctx.settings.orbit_cap);
  json j = io::certificate_to_json(cert);
  const bool consistent = cert.verdict == Verdict::consistent;
  j["manifest"] = manifest(ctx, "certify matrix", {matrix_file, witness_file}, to_string(cert.verdict)).to_json();
  ctx.emit(j);
  // A contradiction on a claimed dimension is the expected outcome of the
  // audit, not a failed verification.
  return claimed_dim ? kExitOk : exit_for(consistent);
}

// forge ----------------------------------------------------------------------

int forge_surface_cmd(const Context& ctx, int l, const std::string& out_file, bool with_coords) {
  const auto cover = forge_surface(l);
  const auto audit = orbit_audit(cover);
  const auto surface = with_coords ? with_canonical_coordinates(cover.surface) : cover.surface;
  json j = io::complex_to_json(surface, &cover.deck);
  j["metadata"] = cover_metadata(cover);
  j["metadata"]["projection"] = cover.projection;
  j["manifest"] = manifest(ctx, "forge surface --l " + std::to_string(l), {}, outcome(audit.passed())).to_json();
  if (out_file.empty()) {
    ctx.emit(j);
  } else {
    io::write_json(out_file, j);
    json summary = cover_metadata(cover);
    summary["orbit_audit"] = to_json(audit.report);
    summary["output"] = out_file;
    ctx.emit(summary);
  }
  return exit_for(audit.passed());
}

int forge_hurwitz(const Context& ctx, long genus) {
  const long dim = hurwitz_dimension(genus);
  if (ctx.human) {
    ctx.out << dim << "\n";
    return kExitOk;
  }
  ctx.emit(json{{"genus", genus}, {"dimension", dim}});
  return kExitOk;
}

int forge_counterexample(const Context& ctx, int m, const char* command) {
  const auto r = pipeline_lower(m);
  json j = to_json(r);
  j["manifest"] = manifest(ctx, std::string(command) + " --m " + std::to_string(m), {}, outcome(r.holds())).to_json();
  ctx.emit(j);
  return exit_for(r.holds());
}

// pipeline -------------------------------------------------------------------

int pipeline_upper_cmd(const Context& ctx, const std::string& complex_file, const std::string& action_file,
                       bool force_extend) {
  auto cf = io::load_complex(complex_file);
  std::vector<std::filesystem::path> inputs{complex_file};
  if (!action_file.empty()) {
    cf.action = io::action_from_json(io::read_json(action_file), std::filesystem::path(action_file).parent_path());
    inputs.emplace_back(action_file);
  }
  if (!cf.action) throw Error(ErrorKind::parse, "no action: add an action block or pass --action");
  const auto report = pipeline_upper(cf.complex, *cf.action, force_extend, ctx.settings);
  json j = to_json(report);
  j["manifest"] = manifest(ctx, "pipeline upper", inputs, outcome(report.passed())).to_json();
  ctx.emit(j);
  return exit_for(report.passed());
}

int pipeline_roundtrip_cmd(const Context& ctx, int l) {
  const auto r = pipeline_roundtrip(l, ctx.settings);
  json j = to_json(r);
  j["manifest"] = manifest(ctx, "pipeline roundtrip --l " + std::to_string(l), {}, outcome(r.passed())).to_json();
  ctx.emit(j);
  return exit_for(r.passed());
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::witness:
    case ErrorKind::construction:
    case ErrorKind::inconsistency:
      return kExitVerificationFailed;
    default:
      return kExitInputError;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant embeddings: lifts, lower-bound certificates and symmetric surfaces", "eqlift"};
  app.require_subcommand(1);
  bool human = false;
  std::optional<double> tol_flag;
  app.add_flag("--human", human, "Readable output instead of JSON");
  app.add_option("--tol", tol_flag, "Floating tolerance (default 1e-9, or EQLIFT_TOL)");

  // group
  auto* group = app.add_subcommand("group", "Group tables")->require_subcommand(1);
  std::string group_file, group_out;
  int cyclic_n = 0;
  auto* group_validate_cmd = group->add_subcommand("validate", "Check the group axioms");
  group_validate_cmd->add_option("file", group_file)->required();
  auto* group_cyclic_cmd = group->add_subcommand("cyclic", "Write the table of Z_n");
  group_cyclic_cmd->add_option("n", cyclic_n)->required();
  group_cyclic_cmd->add_option("-o,--out", group_out);

  // complex
  auto* complex = app.add_subcommand("complex", "Simplicial complexes")->require_subcommand(1);
  std::string complex_file, off_out;
  auto* complex_validate_cmd = complex->add_subcommand("validate", "Structure, action and embedding checks");
  complex_validate_cmd->add_option("file", complex_file)->required();
  auto* complex_euler_cmd = complex->add_subcommand("euler", "V - E + F");
  complex_euler_cmd->add_option("file", complex_file)->required();
  auto* complex_off_cmd = complex->add_subcommand("off", "Export to OFF");
  complex_off_cmd->add_option("file", complex_file)->required();
  complex_off_cmd->add_option("-o,--out", off_out);

  // lift
  auto* lift = app.add_subcommand("lift", "Equivariant lift of an embedded complex");
  lift->require_subcommand(0, 1);
  std::string lift_complex, lift_out, lift_rep, lift_file;
  bool force_extend = false;
  int dense_element = 1;
  std::string dense_out;
  lift->add_option("--complex", lift_complex, "Complex file with an action block");
  lift->add_option("--out", lift_out, "Lifted complex file");
  lift->add_option("--rep", lift_rep, "Representation file (default: <out>.rep.json)");
  lift->add_flag("--force-extend", force_extend, "Always append the sign coordinate");
  auto* lift_verify_cmd = lift->add_subcommand("verify", "Re-check equivariance and embedding of a lift");
  lift_verify_cmd->add_option("--lift", lift_file)->required();
  lift_verify_cmd->add_option("--rep", lift_rep);
  auto* lift_dense_cmd = lift->add_subcommand("dense", "Dense matrix of one element");
  lift_dense_cmd->add_option("--lift", lift_file)->required();
  lift_dense_cmd->add_option("--rep", lift_rep);
  lift_dense_cmd->add_option("--element", dense_element)->required();
  lift_dense_cmd->add_option("-o,--out", dense_out);

  // certify
  auto* cert = app.add_subcommand("certify", "Lower-bound certificates")->require_subcommand(1);
  std::string lengths, matrix_file, witness_file;
  std::optional<int> claim_dim;
  auto* cert_bound = cert->add_subcommand("bound", "Largest pairwise coprime subset of orbit lengths");
  cert_bound->add_option("--lengths", lengths)->required();
  auto* cert_matrix = cert->add_subcommand("matrix", "Spectral certificate for an orthogonal matrix");
  cert_matrix->add_option("--matrix", matrix_file)->required();
  cert_matrix->add_option("--witnesses", witness_file)->required();
  cert_matrix->add_option("--claim-dim", claim_dim, "Audit a claimed ambient dimension");

  // forge
  auto* forge = app.add_subcommand("forge", "Surfaces with prescribed cyclic symmetry")->require_subcommand(1);
  int forge_l = 0, forge_m = 0;
  long genus = 0;
  std::string forge_out;
  bool forge_coords = false;
  auto* forge_surface_sc = forge->add_subcommand("surface", "Build the branched cover for l primes");
  forge_surface_sc->add_option("--l", forge_l)->required();
  forge_surface_sc->add_option("-o,--out", forge_out);
  forge_surface_sc->add_flag("--coords", forge_coords, "Attach canonical simplex coordinates");
  auto* forge_hurwitz_sc = forge->add_subcommand("hurwitz", "252(g-1)+1");
  forge_hurwitz_sc->add_option("--genus", genus)->required();
  auto* forge_counter_sc = forge->add_subcommand("counterexample", "Surface needing dimension > m");
  forge_counter_sc->add_option("--m", forge_m)->required();

  // pipeline
  auto* pipe = app.add_subcommand("pipeline", "End-to-end runs")->require_subcommand(1);
  std::string pipe_complex, pipe_action;
  int pipe_m = 0, pipe_l = 0;
  bool pipe_force = false;
  auto* pipe_upper = pipe->add_subcommand("upper", "Lift and verify");
  pipe_upper->add_option("--complex", pipe_complex)->required();
  pipe_upper->add_option("--action", pipe_action);
  pipe_upper->add_flag("--force-extend", pipe_force);
  auto* pipe_lower = pipe->add_subcommand("lower", "Counterexample for dimension m");
  pipe_lower->add_option("--m", pipe_m)->required();
  auto* pipe_round = pipe->add_subcommand("roundtrip", "Forge, lift and compare with the lower bound");
  pipe_round->add_option("--l", pipe_l)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    Context ctx{out, err, settings_from_env(), human};
    if (tol_flag) {
      if (!(*tol_flag > 0.0)) throw Error(ErrorKind::parse, "--tol must be positive");
      ctx.settings.tol = *tol_flag;
    }
    if (group_validate_cmd->parsed()) return group_validate(ctx, group_file);
    if (group_cyclic_cmd->parsed()) return group_cyclic(ctx, cyclic_n, group_out);
    if (complex_validate_cmd->parsed()) return complex_validate(ctx, complex_file);
    if (complex_euler_cmd->parsed()) return complex_euler(ctx, complex_file);
    if (complex_off_cmd->parsed()) return complex_off(ctx, complex_file, off_out);
    if (lift_verify_cmd->parsed()) return lift_verify(ctx, lift_file, lift_rep);
    if (lift_dense_cmd->parsed()) return lift_dense(ctx, lift_file, lift_rep, dense_element, dense_out);
    if (lift->parsed()) {
      if (lift_complex.empty() || lift_out.empty()) throw Error(ErrorKind::parse, "lift needs --complex and --out");
      return lift_build(ctx, lift_complex, lift_out, lift_rep, force_extend);
    }
    if (cert_bound->parsed()) return certify_bound(ctx, lengths);
    if (cert_matrix->parsed()) return certify_matrix(ctx, matrix_file, witness_file, claim_dim);
    if (forge_surface_sc->parsed()) return forge_surface_cmd(ctx, forge_l, forge_out, forge_coords);
    if (forge_hurwitz_sc->parsed()) return forge_hurwitz(ctx, genus);
    if (forge_counter_sc->parsed()) return forge_counterexample(ctx, forge_m, "forge counterexample");
    if (pipe_upper->parsed()) return pipeline_upper_cmd(ctx, pipe_complex, pipe_action, pipe_force);
    if (pipe_lower->parsed()) return forge_counterexample(ctx, pipe_m, "pipeline lower");
    if (pipe_round->parsed()) return pipeline_roundtrip_cmd(ctx, pipe_l);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace eqlift::cli
