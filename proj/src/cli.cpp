#include "super3lie/cli.hpp"

#include <functional>
#include <map>

#include "super3lie/errors.hpp"

namespace super3lie {

namespace {

bool is_mathematical(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotACocycle:
    case ErrorKind::InvalidAlgebra:
    case ErrorKind::InvalidRepresentation:
    case ErrorKind::InvalidExtension:
    case ErrorKind::NotADerivation:
    case ErrorKind::NotCompatible:
    case ErrorKind::NotExtensible:
      return true;
    default:
      return false;
  }
}

Json labels_json(const SuperSpace& space) {
  Json out = Json::array();
  for (const auto& b : space.basis()) out.push_back(b.label);
  return out;
}

Json witnesses_json(const std::vector<Violation>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(violation_json(v));
  return out;
}

std::string flag(bool b) { return b ? "yes" : "no"; }

class Job {
 public:
  Job(const Json& job, std::filesystem::path base, const RunOptions& options)
      : job_(job), base_(std::move(base)) {
    const Json opts = job.contains("options") ? job["options"] : Json::object();
    if (!opts.is_object()) throw Error(ErrorKind::ParseError, "field 'options': expected an object");
    options_ = opts;
    dim_cap_ = options.dim_cap ? *options.dim_cap : opt_int("dim_cap", static_cast<long long>(kDefaultDimCap));
    level_cap_ = options.level_cap ? *options.level_cap : static_cast<int>(opt_int("level_cap", kDefaultLevelCap));
  }

  std::size_t dim_cap() const { return dim_cap_; }
  int level_cap() const { return level_cap_; }

  long long opt_int(const char* key, long long fallback) const {
    if (!options_.contains(key)) return fallback;
    const Json& v = options_[key];
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw Error(ErrorKind::ParseError, std::string("field 'options.") + key + "': expected a non-negative integer");
    }
    return v.get<long long>();
  }
  bool opt_bool(const char* key, bool fallback) const {
    if (!options_.contains(key)) return fallback;
    if (!options_[key].is_boolean()) {
      throw Error(ErrorKind::ParseError, std::string("field 'options.") + key + "': expected a boolean");
    }
    return options_[key].get<bool>();
  }
  std::vector<Parity> opt_parities(const char* key) const {
    if (!options_.contains(key)) return {Parity::Even, Parity::Odd};
    long long v = opt_int(key, 0);
    if (v > 1) throw Error(ErrorKind::ParseError, std::string("field 'options.") + key + "': expected 0 or 1");
    return {parity_from_bit(static_cast<int>(v))};
  }

  Json section(const char* key) const {
    if (!job_.contains(key)) throw Error(ErrorKind::ParseError, std::string("job is missing '") + key + "'");
    const Json& j = job_[key];
    if (j.is_string()) return read_json_file(base_ / j.get<std::string>());
    return j;
  }
  bool has(const char* key) const { return job_.contains(key); }

  const AlgebraPtr& algebra() {
    if (!algebra_) {
      algebra_ = std::make_shared<const ThreeLieSuperalgebra>(parse_algebra(section("algebra")));
      if (algebra_->dim() > dim_cap_) {
        throw Error(ErrorKind::DimensionCapExceeded, "algebra dimension " + std::to_string(algebra_->dim()) +
                                                         " exceeds cap " + std::to_string(dim_cap_));
      }
    }
    return algebra_;
  }

  const RepresentationPtr& representation() {
    if (!rep_) rep_ = std::make_shared<const Representation>(parse_representation(section("representation"), algebra()));
    return rep_;
  }

  const RepresentationPtr& verified_representation() {
    const RepresentationPtr& rep = representation();
    if (!verified_ && !verify_representation(*rep, dim_cap_).ok()) {
      throw Error(ErrorKind::InvalidRepresentation, "the representation fails its axioms (run verify-rep)");
    }
    verified_ = true;
    return rep;
  }

  Cochain cochain() { return parse_cochain(section("cochain"), representation()); }

  /// An explicit {"algebra", "sub", "section"?} or, when absent, the
  /// extension built from the representation and cochain of the job.
  const ExtensionData& extension() {
    if (ext_) return *ext_;
    if (has("extension")) {
      Json e = section("extension");
      const Json& alg_json = e.contains("algebra") ? e["algebra"] : Json();
      Json alg_doc = alg_json.is_string() ? read_json_file(base_ / alg_json.get<std::string>()) : alg_json;
      if (alg_doc.is_null()) throw Error(ErrorKind::ParseError, "field 'extension': missing key 'algebra'");
      auto total = std::make_shared<const ThreeLieSuperalgebra>(parse_algebra(alg_doc));
      if (!e.contains("sub") || !e["sub"].is_array()) {
        throw Error(ErrorKind::ParseError, "field 'extension.sub': expected an array of labels");
      }
      std::vector<std::size_t> sub;
      for (const auto& l : e["sub"]) {
        if (!l.is_string()) throw Error(ErrorKind::ParseError, "field 'extension.sub': expected labels");
        sub.push_back(total->space().index_of(l.get<std::string>()));
      }
      ext_ = make_extension(total, sub);
      if (e.contains("section")) {
        Matrix s = parse_matrix(e["section"], ext_->quotient->space(), total->space(), "extension.section");
        ext_ = make_extension(total, sub, s);
      }
    } else {
      ext_ = build_extension(verified_representation(), cochain(), {true, level_cap_});
    }
    if (ext_->quotient->dim() > dim_cap_) throw Error(ErrorKind::DimensionCapExceeded, "quotient exceeds dimension cap");
    return *ext_;
  }

  std::optional<GradedLinearMap> second_section() {
    if (!has("section2")) return std::nullopt;
    const ExtensionData& ext = extension();
    Matrix m = parse_matrix(section("section2"), ext.quotient->space(), ext.total->space(), "section2");
    return with_section(ext, GradedLinearMap(ext.quotient->space(), ext.total->space(), Parity::Even, m)).section;
  }

  /// The representation extracted from the extension, shared across uses.
  const RepresentationPtr& extension_rep() {
    if (!ext_rep_) ext_rep_ = std::make_shared<const Representation>(extract_phi(extension()));
    return ext_rep_;
  }

  DerivationPair pair(const Representation& rep) { return parse_pair(section("pair"), rep); }

 private:
  const Json& job_;
  std::filesystem::path base_;
  Json options_;
  std::size_t dim_cap_ = kDefaultDimCap;
  int level_cap_ = kDefaultLevelCap;
  AlgebraPtr algebra_;
  RepresentationPtr rep_;
  bool verified_ = false;
  std::optional<ExtensionData> ext_;
  RepresentationPtr ext_rep_;
};

struct Outcome {
  bool positive = true;
  Json result = Json::object();
  Json witnesses = Json::array();
  Json dims = Json::object();
  Json representatives = Json::array();
  std::vector<std::string> summary;
};

using Handler = std::function<Outcome(Job&)>;

Outcome cmd_verify(Job& job) {
  const auto& alg = job.algebra();
  AlgebraReport r = verify_algebra(*alg, job.dim_cap());
  Outcome out;
  out.positive = r.ok();
  out.result = {{"grading", r.grading},
                {"super_skew", r.super_skew},
                {"fundamental_identity", r.fundamental_identity},
                {"violation_count", r.violation_count}};
  out.witnesses = witnesses_json(r.violations);
  out.dims = {{"even", alg->space().even_dim()}, {"odd", alg->space().odd_dim()}};
  out.summary.push_back(alg->name() + ": grading " + flag(r.grading) + ", super-skew " + flag(r.super_skew) +
                        ", fundamental identity " + flag(r.fundamental_identity));
  return out;
}

Outcome cmd_derivations(Job& job) {
  const auto& alg = job.algebra();
  Outcome out;
  for (Parity p : job.opt_parities("degree")) {
    DerivationSpace d = derivation_space(alg, p);
    out.dims[parity_name(p)] = d.dim();
    for (const auto& b : d.basis) {
      out.representatives.push_back({{"degree", bit(p)}, {"map", matrix_json(alg->space(), alg->space(), b.matrix())}});
    }
    out.summary.push_back(std::string("Der_") + parity_name(p) + " has dimension " + std::to_string(d.dim()));
  }
  return out;
}

Outcome cmd_verify_rep(Job& job) {
  const auto& rep = job.representation();
  RepresentationReport r = verify_representation(*rep, job.dim_cap());
  Outcome out;
  out.positive = r.ok();
  out.result = {{"degree", r.degree},
                {"skew", r.skew},
                {"axiom3", r.axiom3},
                {"axiom4", r.axiom4},
                {"violation_count", r.violation_count}};
  out.witnesses = witnesses_json(r.violations);
  out.dims = {{"algebra", rep->algebra().dim()}, {"module", rep->module_dim()}};
  out.summary.push_back("representation: even " + flag(r.degree) + ", skew " + flag(r.skew) + ", axiom 3 " +
                        flag(r.axiom3) + ", axiom 4 " + flag(r.axiom4));
  return out;
}

Outcome cmd_cohomology(Job& job) {
  const auto& rep = job.verified_representation();
  long long level = job.opt_int("level", 2);
  if (level < 1) throw Error(ErrorKind::ParseError, "field 'options.level': expected a positive level");
  Outcome out;
  for (Parity p : job.opt_parities("parity")) {
    CohomologySpace h(rep, static_cast<int>(level), p, job.level_cap());
    out.dims[parity_name(p)] = {{"cochains", h.space().dim()},
                                {"cocycles", h.cocycles().dim()},
                                {"coboundaries", h.coboundaries().dim()},
                                {"cohomology", h.dim()}};
    for (const Cochain& z : h.representatives()) out.representatives.push_back(cochain_json(z));
    out.summary.push_back("level " + std::to_string(level) + " " + parity_name(p) + ": cocycles " +
                          std::to_string(h.cocycles().dim()) + ", coboundaries " +
                          std::to_string(h.coboundaries().dim()) + ", cohomology " + std::to_string(h.dim()));
  }
  return out;
}

Outcome cmd_build_extension(Job& job) {
  const auto& rep = job.verified_representation();
  Cochain omega = job.cochain();
  bool require = job.opt_bool("require_cocycle", true);
  ExtensionData ext = build_extension(rep, omega, {require, job.level_cap()});
  AlgebraReport r = verify_algebra(*ext.total, std::max(job.dim_cap(), ext.total->dim()));
  Outcome out;
  out.positive = r.ok();
  out.result = {{"algebra", algebra_json(*ext.total)},
                {"sub", labels_json(ext.sub_space)},
                {"cocycle", is_cocycle(omega, job.level_cap())},
                {"fundamental_identity", r.fundamental_identity},
                {"super_skew", r.super_skew}};
  out.witnesses = witnesses_json(r.violations);
  out.dims = {{"total", ext.total->dim()}, {"quotient", ext.quotient->dim()}, {"sub", ext.sub_space.dim()}};
  out.summary.push_back("extension of dimension " + std::to_string(ext.total->dim()) + ", fundamental identity " +
                        flag(r.fundamental_identity));
  return out;
}

Outcome cmd_extract(Job& job) {
  const ExtensionData& ext = job.extension();
  const RepresentationPtr& rep = job.extension_rep();
  Cochain omega = extract_omega(ext, rep);
  Outcome out;
  bool rep_ok = verify_representation(*rep, job.dim_cap()).ok();
  bool cocycle = is_cocycle(omega, job.level_cap());
  out.positive = rep_ok && cocycle;
  out.result = {{"representation", representation_json(*rep)},
                {"omega", cochain_json(omega)},
                {"representation_ok", rep_ok},
                {"omega_cocycle", cocycle}};
  if (auto s2 = job.second_section()) {
    ExtensionData other = with_section(ext, *s2);
    extract_phi(ext, s2);
    Cochain omega2 = extract_omega(other, rep);
    Cochain lambda = section_difference(ext, ext.section, *s2, rep);
    bool identity = (omega - omega2) == coboundary(lambda, job.level_cap());
    out.result["omega2"] = cochain_json(omega2);
    out.result["section_difference"] = cochain_json(lambda);
    out.result["difference_is_coboundary"] = identity;
    out.positive = out.positive && identity;
    out.summary.push_back("Omega_1 - Omega_2 = delta(s_1 - s_2): " + flag(identity));
  }
  out.dims = {{"quotient", ext.quotient->dim()}, {"sub", ext.sub_space.dim()}};
  out.summary.push_back("extracted Phi (valid " + flag(rep_ok) + ") and Omega (cocycle " + flag(cocycle) + ")");
  return out;
}

Outcome cmd_split_test(Job& job) {
  const ExtensionData& ext = job.extension();
  auto split = is_split(ext, job.level_cap());
  SplitImplication implication = h1_zero_implies_split(ext, job.level_cap());
  Outcome out;
  out.positive = split.has_value() && split->homomorphism.ok;
  out.result = {{"split", out.positive}, {"implication_holds", implication.holds}};
  if (split) {
    out.result["xi"] = cochain_json(split->xi);
    out.result["section"] = matrix_json(ext.quotient->space(), ext.total->space(), split->section.matrix());
    out.result["homomorphism"] = split->homomorphism.ok;
    if (split->homomorphism.witness) out.witnesses.push_back(violation_json(*split->homomorphism.witness));
  }
  out.dims = {{"cohomology", implication.cohomology_dim}};
  out.summary.push_back(out.positive ? "split: a homomorphic section exists" : "not split: [Omega] is nonzero");
  return out;
}

Outcome cmd_compatible_pairs(Job& job) {
  const auto& rep = job.verified_representation();
  Outcome out;
  for (Parity p : job.opt_parities("degree")) {
    CompatiblePairSpace space = compatible_pair_space(rep, p);
    out.dims[parity_name(p)] = space.dim();
    for (const auto& pair : space.basis) out.representatives.push_back(pair_json(pair));
    out.summary.push_back(std::string("compatible pairs of degree ") + parity_name(p) + ": " +
                          std::to_string(space.dim()));
  }
  return out;
}

Outcome cmd_obstruction(Job& job) {
  const ExtensionData& ext = job.extension();
  const RepresentationPtr& rep = job.extension_rep();
  DerivationPair pair = job.pair(*rep);
  ObstructionClass c = extension_obstruction(ext, pair, job.level_cap());
  Outcome out;
  out.result = {{"ob", cochain_json(c.ob)}, {"class", dense_json(c.coordinates)}, {"trivial", c.trivial}};
  if (auto s2 = job.second_section()) {
    ObstructionClass c2 = extension_obstruction(with_section(ext, *s2), pair, job.level_cap());
    bool same = c2.coordinates == c.coordinates;
    out.result["class_section2"] = dense_json(c2.coordinates);
    out.result["section_independent"] = same;
    out.positive = same;
  }
  out.dims = {{"cohomology", c.coordinates.size()}};
  out.summary.push_back(std::string("obstruction class is ") + (c.trivial ? "trivial" : "nontrivial"));
  return out;
}

Outcome cmd_lift(Job& job) {
  const ExtensionData& ext = job.extension();
  const RepresentationPtr& rep = job.extension_rep();
  DerivationPair pair = job.pair(*rep);
  LiftedDerivation lifted = lift_pair(ext, pair, job.level_cap());
  Outcome out;
  const ExtensibilityReport& r = lifted.report;
  out.positive = r.extensible() && r.compatible;
  out.result = {{"d_l", matrix_json(ext.total->space(), ext.total->space(), lifted.d_l.matrix())},
                {"mu", cochain_json(lifted.mu)},
                {"derivation", r.derivation},
                {"sub_square", r.sub_square},
                {"quotient_square", r.quotient_square},
                {"mu_in_sub", r.mu_in_sub},
                {"compatible", r.compatible}};
  out.witnesses = witnesses_json(r.witnesses);
  out.dims = {{"total", ext.total->dim()}, {"mu_solutions", lifted.solution_dim}};
  out.summary.push_back("lifted to a superderivation of L: " + flag(out.positive));
  return out;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"verify", cmd_verify},
      {"derivations", cmd_derivations},
      {"verify-rep", cmd_verify_rep},
      {"cohomology", cmd_cohomology},
      {"build-extension", cmd_build_extension},
      {"extract", cmd_extract},
      {"split-test", cmd_split_test},
      {"compatible-pairs", cmd_compatible_pairs},
      {"obstruction", cmd_obstruction},
      {"lift", cmd_lift},
  };
  return table;
}

// On a failed lift the obstruction class is still reported.
void annotate_failure(const std::string& command, Job& job, ErrorKind kind, Json& report) {
  if (command != "lift" || kind != ErrorKind::NotExtensible) return;
  try {
    const RepresentationPtr& rep = job.extension_rep();
    ObstructionClass c = extension_obstruction(job.extension(), job.pair(*rep), job.level_cap());
    report["result"] = {{"class", dense_json(c.coordinates)}, {"trivial", c.trivial}};
    report["dims"] = {{"cohomology", c.coordinates.size()}};
  } catch (const std::exception&) {
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

CommandResult run_command(const std::string& command, const Json& job_json, const std::filesystem::path& base_dir,
                          const RunOptions& options) {
  CommandResult res;
  Json& report = res.report;
  report = {{"command", command},
            {"status", "error"},
            {"witnesses", Json::array()},
            {"dims", Json::object()},
            {"representatives", Json::array()},
            {"result", Json::object()}};
  auto fail = [&](int code, const std::string& reason, const std::string& message) {
    res.exit_code = code;
    report["status"] = code == 1 ? "negative" : "error";
    report["reason"] = reason;
    report["message"] = message;
    res.summary.push_back(command + ": " + (code == 1 ? "negative" : "error") + " (" + reason + "): " + message);
  };
  auto it = handlers().find(command);
  if (it == handlers().end()) {
    fail(2, "UnknownCommand", "unknown command '" + command + "'");
    return res;
  }
  std::optional<Job> job;
  try {
    job.emplace(job_json, base_dir, options);
    Outcome out = it->second(*job);
    res.exit_code = out.positive ? 0 : 1;
    report["status"] = out.positive ? "ok" : "negative";
    report["result"] = std::move(out.result);
    report["witnesses"] = std::move(out.witnesses);
    report["dims"] = std::move(out.dims);
    report["representatives"] = std::move(out.representatives);
    res.summary.push_back(command + ": " + report["status"].get<std::string>());
    for (auto& s : out.summary) res.summary.push_back("  " + s);
  } catch (const Error& e) {
    fail(is_mathematical(e.kind()) ? 1 : 2, kind_name(e.kind()), e.what());
    if (job) annotate_failure(command, *job, e.kind(), report);
  } catch (const Json::exception& e) {
    fail(2, "ParseError", e.what());
  }
  return res;
}

CommandResult run_job_file(const std::string& command, const std::filesystem::path& job_path,
                           const RunOptions& options) {
  Json job;
  try {
    job = read_json_file(job_path);
  } catch (const Error& e) {
    CommandResult res;
    res.exit_code = 2;
    res.report = {{"command", command},
                  {"status", "error"},
                  {"reason", kind_name(e.kind())},
                  {"message", e.what()},
                  {"witnesses", Json::array()},
                  {"dims", Json::object()},
                  {"representatives", Json::array()},
                  {"result", Json::object()}};
    res.summary.push_back(command + ": error (" + std::string(kind_name(e.kind())) + "): " + e.what());
    return res;
  }
  std::string cmd = command;
  if (cmd.empty() && job.is_object() && job.contains("command") && job["command"].is_string()) {
    cmd = job["command"].get<std::string>();
  }
  return run_command(cmd, job, job_path.parent_path(), options);
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace super3lie
