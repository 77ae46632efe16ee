#include "soflag/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "soflag/characters.hpp"
#include "soflag/flagmatrix.hpp"
#include "soflag/laplacian.hpp"
#include "soflag/numeric.hpp"
#include "soflag/serialize.hpp"

namespace soflag::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using io::json;

std::uint64_t env_or_default_seed() {
  const char* env = std::getenv("SOFLAG_SEED");
  if (!env || !*env) return kDefaultSeed;
  try {
    std::size_t used = 0;
    auto seed = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return seed;
  } catch (const std::exception&) {
    throw UsageError(std::string("SOFLAG_SEED: not an unsigned integer: ") + env);
  }
}

GroupMode group_mode(const std::string& name, int n) {
  if (name == "so3") return GroupMode::so3();
  if (name == "so4") return GroupMode::so4();
  return n > 0 ? GroupMode::general_at(n) : GroupMode::general();
}

// lap ------------------------------------------------------------------------

struct LapArgs {
  std::string mode;
  std::string partition;
  int n = 0;
  std::string format = "both";
};

int cmd_lap(const LapArgs& a, std::ostream& out) {
  if (a.n != 0 && a.mode != "generaln") throw UsageError("--n: only valid with --mode generaln");
  const Partition lambda = Partition::parse(a.partition);
  GroupMode mode = group_mode(a.mode, a.n);
  TracePoly result(mode);
  if (mode.tag == GroupTag::GeneralN) {
    result = mode.symbolic() ? lap_partition(lambda) : substitute_n(lap_partition(lambda), mode.numeric_n);
  } else {
    TracePoly f = reduce(TracePoly::monomial(lambda, NPoly(1), GroupMode::general_at(mode.numeric_n)), mode);
    result = lap(f, mode);
  }
  if (a.format != "json") out << result.pretty() << "\n";
  if (a.format != "pretty") {
    json doc = {{"mode", mode.name()}, {"partition", lambda.to_string()}, {"laplacian", io::to_json(result)}};
    out << doc.dump(2) << "\n";
  }
  return kExitOk;
}

// matrix ---------------------------------------------------------------------

struct MatrixArgs {
  std::string mode;
  std::string basis;
  unsigned k = 0;
  int n = 0;
  std::string format = "pretty";
  bool closed = false;
};

BasisId default_basis(const std::string& mode) {
  if (mode == "so3") return BasisId::So3PowersOfTrace;
  if (mode == "so4") return BasisId::So4;
  return BasisId::Partitions;
}

std::string expression_table_pretty(const ExpressionTable& t) {
  std::ostringstream os;
  os << "mode=" << t.basis.mode.name() << " basis=" << basis_id_name(t.basis.id) << " k=" << t.basis.k << "\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    TracePoly sum(t.basis.mode);
    for (std::size_t r = 0; r < t.columns[c].size(); ++r)
      if (!t.columns[c][r].is_zero()) sum += t.basis.elements[r].function * t.columns[c][r];
    os << "D(" << t.basis.elements[c].label << ") = " << sum.pretty() << "\n";
  }
  return os.str();
}

int cmd_matrix(const MatrixArgs& a, std::ostream& out) {
  if (a.n != 0 && a.mode != "generaln") throw UsageError("--n: only valid with --mode generaln");
  const BasisId id = a.basis.empty() ? default_basis(a.mode) : parse_basis_id(a.basis);
  const GroupMode mode = group_mode(a.mode, a.n);
  if (mode.symbolic()) {
    if (a.closed) throw UsageError("--closed: only valid with --mode so3 or so4");
    if (a.format != "json" && a.format != "pretty")
      throw UsageError("--format: symbolic-N tables support json and pretty only");
    if (id != BasisId::Partitions) throw UsageError("--basis: generaln uses the partitions spanning set");
    ExpressionTable t = build_expression_table(a.k);
    out << (a.format == "json" ? io::to_json(t).dump(2) + "\n" : expression_table_pretty(t));
    return kExitOk;
  }
  if (a.closed && mode.tag == GroupTag::GeneralN) throw UsageError("--closed: only valid with --mode so3 or so4");
  FlagMatrix m = a.closed ? build_matrix_closed(mode, id, a.k) : build_matrix(mode, id, a.k);
  if (a.format == "json")
    out << io::to_json(m).dump(2) << "\n";
  else if (a.format == "csv")
    out << io::matrix_csv(m);
  else if (a.format == "latex")
    out << io::matrix_latex(m);
  else
    out << io::matrix_pretty(m);
  return kExitOk;
}

// spectrum -------------------------------------------------------------------

struct SpectrumArgs {
  std::string target;
  int n = 0;
  unsigned bound = 0;
  bool exact = false;
  std::string format = "text";
};

std::string joined_labels(const SpectrumEntry& e) {
  std::string s;
  for (std::size_t i = 0; i < e.labels.size(); ++i) s += (i ? " " : "") + e.labels[i].to_string();
  return s;
}

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
  SpectrumTarget target;
  if (a.target == "sphere") {
    if (a.n < 2) throw UsageError("--n: sphere target needs --n >= 2");
    target = {SpectrumKind::Sphere, a.n};
  } else {
    if (a.n != 0 && a.n != (a.target == "so3" ? 3 : 4)) throw UsageError("--n: conflicts with --target " + a.target);
    target = {a.target == "so3" ? SpectrumKind::SO3 : SpectrumKind::SO4, a.target == "so3" ? 3 : 4};
  }
  std::vector<SpectrumEntry> entries;
  if (a.exact) {
    if (target.kind == SpectrumKind::Sphere) throw UsageError("--exact: only valid for so3 and so4");
    FlagMatrix m = target.kind == SpectrumKind::SO3 ? build_matrix(GroupMode::so3(), BasisId::So3PowersOfTrace, a.bound)
                                                    : build_matrix(GroupMode::so4(), BasisId::So4, a.bound);
    entries = eigenvalues_exact(m);
  } else {
    entries = spectrum_closed(target, a.bound);
  }
  if (a.format == "json") {
    json list = json::array();
    for (auto& e : entries) list.push_back(io::to_json(e));
    json doc = {{"target", a.target}, {"bound", a.bound}, {"source", a.exact ? "flag_matrix" : "closed_form"},
                {"spectrum", list}};
    if (target.kind == SpectrumKind::Sphere) doc["n"] = a.n;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  for (auto& e : entries) {
    out << to_string(e.eigenvalue);
    if (a.exact) out << "\talg=" << e.algebraic_multiplicity << "\tgeo=" << e.geometric_multiplicity;
    out << "\t" << joined_labels(e) << "\n";
  }
  return kExitOk;
}

// characters -----------------------------------------------------------------

struct CharacterArgs {
  std::string mode;
  std::optional<unsigned> k;
  std::string j1;
  std::string j2;
  std::string format = "pretty";
};

void print_character(const Character& c, std::ostream& out) {
  out << "chi[" << c.label.to_string() << "] eigenvalue " << to_string(c.eigenvalue) << "\n";
  out << "  = " << c.poly.pretty() << "\n";
  if (c.trace_form) out << "  = " << c.trace_form->pretty() << "\n";
}

int cmd_characters(const CharacterArgs& a, std::ostream& out) {
  const bool half_integers = !a.j1.empty() || !a.j2.empty();
  if (a.mode == "so3") {
    if (half_integers) throw UsageError("--j1/--j2: only valid with --mode so4");
    if (!a.k) throw UsageError("--k: required with --mode so3");
    Character c = character_so3(*a.k);
    if (a.format == "json")
      out << io::to_json(c).dump(2) << "\n";
    else
      print_character(c, out);
    return kExitOk;
  }
  if (half_integers) {
    if (a.k) throw UsageError("--k: give either --k or --j1/--j2");
    if (a.j1.empty() || a.j2.empty()) throw UsageError("--j1/--j2: both are required");
    Character c = character_so4(parse_rational(a.j1), parse_rational(a.j2));
    if (a.format == "json")
      out << io::to_json(c).dump(2) << "\n";
    else
      print_character(c, out);
    return kExitOk;
  }
  if (!a.k) throw UsageError("--k or --j1/--j2: required with --mode so4");
  auto matches = match_characters(build_matrix(GroupMode::so4(), BasisId::So4, *a.k));
  if (a.format == "json") {
    json list = json::array();
    for (auto& m : matches) list.push_back(io::to_json(m));
    out << json{{"mode", "so4"}, {"k", *a.k}, {"matches", list}}.dump(2) << "\n";
    return kExitOk;
  }
  for (auto& m : matches) {
    out << "eigenvalue " << to_string(m.entry.eigenvalue) << " geometric multiplicity "
        << m.entry.geometric_multiplicity << (m.unexplained_multiplicity ? " (unexplained)" : "") << "\n";
    for (auto& c : m.characters) out << "  chi[" << c.label.to_string() << "] = " << c.poly.pretty() << "\n";
  }
  return kExitOk;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int n = 0;
  std::optional<unsigned> k;
  std::string partition;
  int i = 0;
  int j = 0;
  unsigned samples = 20;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  unsigned threads = 1;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = a.seed ? *a.seed : env_or_default_seed();
  if (a.samples == 0) throw UsageError("--samples: must be positive");
  if (!a.partition.empty() && a.suite != "laplacian") throw UsageError("--partition: only valid with --suite laplacian");
  if ((a.i || a.j) && a.suite != "gegenbauer") throw UsageError("--i/--j: only valid with --suite gegenbauer");
  if (a.k && a.suite == "identities") throw UsageError("--k: not used by --suite identities");

  std::vector<numeric::VerificationReport> reports;
  if (a.suite == "laplacian") {
    if (a.n < 2) throw UsageError("--n: must be at least 2");
    const double tol = a.tol.value_or(1e-8);
    std::vector<Partition> targets;
    if (!a.partition.empty())
      targets.push_back(Partition::parse(a.partition));
    else
      targets = enumerate_upto(a.k.value_or(4));
    for (auto& lambda : targets) reports.push_back(numeric::verify_partition(a.n, lambda, a.samples, seed, tol, a.threads));
  } else if (a.suite == "gegenbauer") {
    if (a.n < 3) throw UsageError("--n: gegenbauer suite needs n >= 3");
    if ((a.i == 0) != (a.j == 0)) throw UsageError("--i/--j: give both or neither");
    const double tol = a.tol.value_or(1e-8);
    std::vector<std::pair<int, int>> positions;
    if (a.i)
      positions.emplace_back(a.i, a.j);
    else
      positions = {{1, a.n}, {a.n, 1}};
    for (unsigned k = 0; k <= a.k.value_or(8); ++k)
      for (auto [i, j] : positions)
        reports.push_back(numeric::verify_gegenbauer(a.n, k, i, j, a.samples, seed, tol, a.threads));
  } else {
    if (a.n < 2) throw UsageError("--n: must be at least 2");
    reports = numeric::verify_identities(a.n, a.samples, seed, a.tol.value_or(0.0));
  }

  bool pass = true;
  json list = json::array();
  for (auto& r : reports) {
    pass = pass && r.pass;
    list.push_back(io::to_json(r));
    if (!r.pass) err << "verification failed: " << io::to_json(r).dump() << "\n";
  }
  out << json{{"suite", a.suite}, {"n", a.n}, {"seed", seed}, {"pass", pass}, {"reports", list}}.dump(2) << "\n";
  return pass ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laplace-Beltrami operator on SO(N) acting on trace polynomials", "soflag"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  LapArgs lap_args;
  auto* lap_cmd = app.add_subcommand("lap", "Laplacian of the trace monomial p_lambda");
  lap_cmd->add_option("--mode", lap_args.mode, "generaln, so3 or so4")
      ->required()
      ->check(CLI::IsMember({"generaln", "so3", "so4"}));
  lap_cmd->add_option("--partition", lap_args.partition, "comma-separated parts, 0 for the empty partition")->required();
  lap_cmd->add_option("--n", lap_args.n, "substitute N (generaln only)")->check(CLI::Range(2, 1 << 20));
  lap_cmd->add_option("--format", lap_args.format, "pretty, json or both")
      ->check(CLI::IsMember({"pretty", "json", "both"}));

  MatrixArgs matrix_args;
  auto* matrix_cmd = app.add_subcommand("matrix", "Matrix of the Laplacian on the flag V_{<=k}");
  matrix_cmd->add_option("--mode", matrix_args.mode, "so3, so4 or generaln")
      ->required()
      ->check(CLI::IsMember({"generaln", "so3", "so4"}));
  matrix_cmd->add_option("--basis", matrix_args.basis, "bprime, btrace, so4 or partitions")
      ->check(CLI::IsMember({"bprime", "btrace", "so4", "partitions"}));
  matrix_cmd->add_option("--k", matrix_args.k, "flag order")->required();
  matrix_cmd->add_option("--n", matrix_args.n, "fix N (generaln only)")->check(CLI::Range(2, 1 << 20));
  matrix_cmd->add_option("--format", matrix_args.format, "json, csv, latex or pretty")
      ->check(CLI::IsMember({"json", "csv", "latex", "pretty"}));
  matrix_cmd->add_flag("--closed", matrix_args.closed, "use the SO(3)/SO(4) closed-form Laplacians");

  SpectrumArgs spectrum_args;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues with their labels");
  spectrum_cmd->add_option("--target", spectrum_args.target, "so3, so4 or sphere")
      ->required()
      ->check(CLI::IsMember({"so3", "so4", "sphere"}));
  spectrum_cmd->add_option("--n", spectrum_args.n, "sphere S^{n-1}");
  spectrum_cmd->add_option("--bound", spectrum_args.bound, "largest degree k (max(k1,k2) for so4)")->required();
  spectrum_cmd->add_flag("--exact", spectrum_args.exact, "extract from the flag matrix of order bound");
  spectrum_cmd->add_option("--format", spectrum_args.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CharacterArgs char_args;
  auto* char_cmd = app.add_subcommand("characters", "Irreducible characters as trace polynomials");
  char_cmd->add_option("--mode", char_args.mode, "so3 or so4")->required()->check(CLI::IsMember({"so3", "so4"}));
  char_cmd->add_option("--k", char_args.k, "so3: chi_k; so4: all characters found in V_{<=k}");
  char_cmd->add_option("--j1", char_args.j1, "so4 highest weight, e.g. 3/2");
  char_cmd->add_option("--j2", char_args.j2, "so4 highest weight, e.g. 1/2");
  char_cmd->add_option("--format", char_args.format, "pretty or json")->check(CLI::IsMember({"pretty", "json"}));

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Numerical cross-checks on Haar-random rotations");
  verify_cmd->add_option("--suite", verify_args.suite, "laplacian, gegenbauer or identities")
      ->required()
      ->check(CLI::IsMember({"laplacian", "gegenbauer", "identities"}));
  verify_cmd->add_option("--n", verify_args.n, "matrix size")->required();
  verify_cmd->add_option("--k", verify_args.k, "laplacian: max partition degree (4); gegenbauer: max k (8)");
  verify_cmd->add_option("--partition", verify_args.partition, "laplacian: check a single partition");
  verify_cmd->add_option("--i", verify_args.i, "gegenbauer: row, 1-based");
  verify_cmd->add_option("--j", verify_args.j, "gegenbauer: column, 1-based");
  verify_cmd->add_option("--samples", verify_args.samples, "Haar samples per check");
  verify_cmd->add_option("--seed", verify_args.seed, "base seed (default SOFLAG_SEED or 12345)");
  verify_cmd->add_option("--tol", verify_args.tol, "relative tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", verify_args.threads, "worker threads")->check(CLI::Range(1u, 256u));

  std::vector<const char*> argv{"soflag"};
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*lap_cmd) return cmd_lap(lap_args, out);
    if (*matrix_cmd) return cmd_matrix(matrix_args, out);
    if (*spectrum_cmd) return cmd_spectrum(spectrum_args, out);
    if (*char_cmd) return cmd_characters(char_args, out);
    if (*verify_cmd) return cmd_verify(verify_args, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace soflag::cli
