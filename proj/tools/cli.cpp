#include "cli.hpp"

#include "liekit/builder/classical.hpp"
#include "liekit/builder/exceptional.hpp"
#include "liekit/builder/invariants.hpp"
#include "liekit/builder/table_io.hpp"
#include "liekit/kostant/kostant.hpp"
#include "liekit/rootsys/names.hpp"
#include "liekit/topol/topology.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>

namespace liekit::cli {

namespace {

using json = nlohmann::json;
using builder::BuildResult;
using builder::JacobiReport;
using builder::StructureTable;

struct Options {
  std::string verb;
  std::vector<std::string> args;
  std::string format = "text";
  bool verify = false;
  unsigned workers = 1;
  std::uint64_t cap = kostant::kDefaultOrbitCap;
  std::string output;
  int declared_dim = -1;
};

struct Outcome {
  json payload = json::object();
  json provenance = json::object();
  int code = kOk;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json big(const BigInt& b) {
  if (b.fits_slong_p()) return b.get_si();
  return b.get_str();
}

json terms_json(const builder::Terms& terms) {
  json a = json::array();
  for (const auto& t : terms) a.push_back({{"index", t.index}, {"coeff", t.coeff.str()}});
  return a;
}

json jacobi_json(const JacobiReport& r) {
  json j{{"dim", r.dim}, {"triples_checked", r.triples_checked}, {"violations", r.violations}};
  if (r.first_violation) {
    const auto& v = *r.first_violation;
    j["first_violation"] = {{"i", v.i}, {"j", v.j}, {"k", v.k}, {"defect", terms_json(v.defect)}};
  } else {
    j["first_violation"] = nullptr;
  }
  return j;
}

json recipe_json(const builder::BuildRecipe& r) {
  json s = json::array();
  for (const auto& [role, d] : r.summands) s.push_back({{"role", role}, {"dim", d}});
  return {{"target", r.target}, {"summands", s}, {"free_coefficients", r.free_coefficients}, {"dim", r.dim()}};
}

json coefficients_json(const std::vector<std::pair<std::string, Rational>>& c) {
  json o = json::object();
  for (const auto& [name, v] : c) o[name] = v.str();
  return o;
}

std::string lower_nospace(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void tag_all(Outcome& o, const char* tag = "computed") {
  for (auto it = o.payload.begin(); it != o.payload.end(); ++it)
    if (!o.provenance.contains(it.key())) o.provenance[it.key()] = tag;
}

// Adds Killing-form data; a form that is not negative definite of full rank fails verification.
void add_killing(Outcome& o, const StructureTable& t) {
  const auto k = builder::killing_summary(t);
  o.payload["killing"] = {{"rank", k.rank}, {"negative_definite", k.negative_definite}};
  if (!k.negative_definite || k.rank != t.dim()) o.code = kVerificationFailed;
}

struct Built {
  std::optional<StructureTable> table;
  Outcome outcome;
};

void record_build(Built& b, BuildResult r) {
  auto& p = b.outcome.payload;
  p["algebra"] = r.table.name();
  p["dim"] = r.table.dim();
  p["recipe"] = recipe_json(r.recipe);
  p["coefficients"] = coefficients_json(r.coefficients);
  p["jacobi"] = jacobi_json(r.jacobi);
  b.table = std::move(r.table);
}

Built build_classical(const rootsys::GroupId& id, unsigned workers) {
  using rootsys::Family;
  Built b;
  json steps = json::array();
  auto step = [&](BuildResult r) {
    steps.push_back({{"target", r.recipe.target}, {"dim", r.table.dim()}, {"violations", r.jacobi.violations},
                     {"coefficients", coefficients_json(r.coefficients)}});
    return r;
  };
  std::optional<BuildResult> last;
  const int r = id.rank;
  if (id.family == Family::A) {
    StructureTable t = builder::su_table(1);
    for (int k = 1; k < r + 1; ++k) {
      last = step(builder::extend_unitary(t, k, workers));
      t = last->table;
    }
  } else if (id.family == Family::C) {
    if (r == 1) throw UsageError("sp(1) is the starting table; build sp(2) or larger");
    StructureTable t = builder::sp_table(1);
    for (int k = 1; k < r; ++k) {
      last = step(builder::extend_symplectic(t, k, workers));
      t = last->table;
    }
  } else {
    const int n = id.family == Family::B ? 2 * r + 1 : 2 * r;
    StructureTable t = builder::so_table(2);
    for (int k = 2; k < n; ++k) {
      last = step(builder::extend_orthogonal(t, k, workers));
      t = last->table;
    }
  }
  record_build(b, std::move(*last));
  b.outcome.payload["steps"] = steps;
  return b;
}

Built build_target(const std::string& target, const Options& opt) {
  Built b;
  try {
    const std::string key = lower_nospace(target);
    static const std::regex spin_ext(R"(^(?:so|spin)\((\d{1,2})\)\+(?:spin|spinor|delta)(?:\((\d{1,2})\))?$)");
    std::smatch m;
    if (auto e = builder::parse_exceptional(key)) {
      record_build(b, builder::build_exceptional(*e, opt.workers));
    } else if (std::regex_match(key, m, spin_ext)) {
      const int n = std::stoi(m[1]);
      if (m[2].matched && std::stoi(m[2]) != n) throw UsageError("spinor of a different rank: " + target);
      record_build(b, builder::build_spin_extension(n, opt.workers));
    } else {
      const auto g = rootsys::parse_group_name(target);
      if (g.torus != 0) throw UsageError("build needs a simple algebra, not " + g.display);
      b = build_classical(g.id, opt.workers);
    }
  } catch (const builder::JacobiFailure& e) {
    b.outcome.payload = {{"algebra", target}, {"error", e.what()}, {"jacobi", jacobi_json(e.report)}};
    b.outcome.code = kVerificationFailed;
  } catch (const builder::NormalizationUnsolvable& e) {
    b.outcome.payload = {{"algebra", target}, {"error", e.what()}, {"outcome", "normalization_unsolvable"}};
    b.outcome.code = kVerificationFailed;
  }
  return b;
}

rootsys::NamedGroup group_arg(const Options& o, std::size_t i = 0) {
  if (o.args.size() <= i) throw UsageError(o.verb + ": missing group argument");
  return rootsys::parse_group_name(o.args[i]);
}

json weights_json(const std::vector<rootsys::Root>& roots) {
  json a = json::array();
  for (const auto& r : roots) a.push_back(r);
  return a;
}

Outcome cmd_build(const Options& o) {
  if (o.args.size() != 1) throw UsageError("build: expected one target");
  Built b = build_target(o.args[0], o);
  if (o.verify && b.table && b.outcome.code == kOk) add_killing(b.outcome, *b.table);
  return b.outcome;
}

Outcome cmd_roots(const Options& o) {
  const auto g = group_arg(o);
  const auto rs = rootsys::build_root_system(g.id);
  Outcome out;
  out.payload = {{"group", g.id.str()},
                 {"rank", rs.rank()},
                 {"dim", rs.dim()},
                 {"cartan_matrix", rs.cartan},
                 {"half_norms", rs.half_norms},
                 {"positive_roots", weights_json(rs.positive_roots)},
                 {"num_positive_roots", rs.positive_roots.size()},
                 {"highest_root", rs.highest_root()},
                 {"rho", rs.rho.labels},
                 {"coxeter_number", rs.coxeter_number ? json(*rs.coxeter_number) : json(nullptr)}};
  return out;
}

Outcome cmd_exponents(const Options& o) {
  const auto g = group_arg(o);
  const auto rs = rootsys::build_root_system(g.id);
  Outcome out;
  out.payload = {{"group", g.display},
                 {"cartan", g.id.str()},
                 {"exponents", rs.exponents},
                 {"degrees", rs.degrees},
                 {"weyl_order", rs.weyl_order},
                 {"torus", g.torus}};
  if (g.torus > 0) {
    // U(n): the torus contributes exponent 0
    std::vector<int> with_torus(static_cast<std::size_t>(g.torus), 0);
    with_torus.insert(with_torus.end(), rs.exponents.begin(), rs.exponents.end());
    out.payload["exponents_with_torus"] = with_torus;
  }
  return out;
}

Outcome cmd_dims(const Options& o) {
  const auto g = group_arg(o);
  json dims = json::array();
  for (const auto& d : rootsys::fundamental_dims(g.id)) dims.push_back(big(d));
  Outcome out;
  out.payload = {{"group", g.id.str()}, {"fundamental_dims", dims}, {"node_ordering", rootsys::kNodeOrdering}};
  return out;
}

Outcome cmd_kostant(const Options& o) {
  kostant::EqualRankPair p;
  if (o.args.size() == 1)
    p = kostant::preset(o.args[0]);
  else if (o.args.size() == 2)
    p = kostant::resolve_pair(o.args[0], o.args[1]);
  else
    throw UsageError("kostant: expected G H or a preset name (" + std::string("F4/B4, A4/A3+t, C3/C1xC2") + ")");
  const auto chi = kostant::euler_number(p);
  const auto m = kostant::multiplets(p, o.cap);
  json entries = json::array();
  for (const auto& e : m.entries) {
    json charges = json::array();
    for (const auto& c : e.torus_charges) charges.push_back(c.str());
    entries.push_back({{"sign", e.sign > 0 ? "+" : "-"},
                       {"length", e.length},
                       {"weight", e.weight.labels},
                       {"dim", big(e.dim)},
                       {"torus_charges", charges}});
  }
  json dims = json::array(), signs = json::array();
  for (const auto& e : m.entries) {
    dims.push_back(big(e.dim));
    signs.push_back(e.sign > 0 ? "+" : "-");
  }
  Outcome out;
  out.payload = {{"pair", p.name},
                 {"chi", chi},
                 {"weyl_order_big", p.big.weyl_order},
                 {"weyl_order_small", p.small.weyl_order},
                 {"small_simple_roots", weights_json(p.small_simple_roots)},
                 {"small_cartan", p.small.cartan},
                 {"torus", p.torus},
                 {"entries", entries},
                 {"dims", dims},
                 {"signs", signs},
                 {"signed_sum", big(m.signed_sum())},
                 {"unsigned_sum", big(m.unsigned_sum())}};
  return out;
}

Outcome cmd_spinsplit(const Options& o) {
  if (o.args.size() != 1) throw UsageError("spinsplit: expected n");
  const int n = std::stoi(o.args[0]);
  json terms = json::array();
  BigInt total = 0;
  for (const auto& t : kostant::spin_split_under_u(n)) {
    terms.push_back({{"degree", t.degree}, {"dim", big(t.dim)}, {"sign", t.sign > 0 ? "+" : "-"}});
    total += t.dim;
  }
  Outcome out;
  out.payload = {{"n", n}, {"terms", terms}, {"total", big(total)}};
  return out;
}

Outcome cmd_topology(const Options& o) {
  const auto g = group_arg(o);
  const auto r = topol::sphere_structure_report(g.id);
  json notes = json::array();
  for (const auto& n : r.fibration_notes) notes.push_back({{"subject", n.subject}, {"text", n.text}});
  Outcome out;
  out.payload = {{"group", g.id.str()},
                 {"dim", r.dim},
                 {"exponents", r.exponents},
                 {"sphere_dims", r.sphere_dims},
                 {"poincare", r.poincare},
                 {"poincare_text", topol::to_string(r.poincare)},
                 {"betti_sum", std::accumulate(r.poincare.begin(), r.poincare.end(), 0L)},
                 {"torsion_primes", r.torsion_primes},
                 {"capicua", {{"diffs", r.capicua.diffs}, {"is_palindrome", r.capicua.is_palindrome}}},
                 {"coxeter_number", r.coxeter_number ? json(*r.coxeter_number) : json(nullptr)},
                 {"fibration_notes", notes}};
  out.provenance["torsion_primes"] = topol::kTorsionProvenance;
  out.provenance["fibration_notes"] = topol::kTorsionProvenance;
  return out;
}

json coset_json(const topol::CosetEntry& e) {
  return {{"big", e.big}, {"small", e.small}, {"space", e.space_name}, {"space_dim", topol::coset_dim(e)}};
}

Outcome cmd_coset(const Options& o) {
  Outcome out;
  try {
    if (o.args.empty()) {
      json rows = json::array();
      for (const auto& e : topol::coset_table()) rows.push_back(coset_json(e));
      out.payload["cosets"] = rows;
    } else if (o.args.size() == 1) {
      const auto e = topol::find_coset(o.args[0]);
      if (!e) throw UsageError("coset: unknown space " + o.args[0] + " (run 'coset' for the table)");
      out.payload = coset_json(*e);
    } else if (o.args.size() == 2) {
      const int d = topol::group_expression_dim(o.args[0]) - topol::group_expression_dim(o.args[1]);
      topol::CosetEntry e{o.args[0], o.args[1], o.args[0] + "/" + o.args[1], o.declared_dim >= 0 ? o.declared_dim : d};
      out.payload = coset_json(e);
    } else {
      throw UsageError("coset: expected a space name or BIG SMALL");
    }
  } catch (const topol::DimensionMismatch& e) {
    out.payload = {{"error", e.what()}};
    out.code = kVerificationFailed;
  }
  return out;
}

StructureTable read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return builder::import_table(in);
}

Outcome verify_table(const StructureTable& t, const Options& o) {
  Outcome out;
  const auto report = builder::verify_jacobi(t, o.workers);
  out.payload = {{"algebra", t.name()}, {"dim", t.dim()}, {"stored_coefficients", t.stored_coefficients()},
                 {"jacobi", jacobi_json(report)}};
  if (!report.ok()) out.code = kVerificationFailed;
  if (o.verify && report.ok()) add_killing(out, t);
  return out;
}

Outcome cmd_import(const Options& o) {
  if (o.args.size() != 1) throw UsageError("import: expected one file");
  return verify_table(read_table(o.args[0]), o);
}

Outcome cmd_verify(const Options& o) {
  if (o.args.size() != 1) throw UsageError("verify: expected a file or a target");
  if (std::filesystem::is_regular_file(o.args[0])) return verify_table(read_table(o.args[0]), o);
  Built b = build_target(o.args[0], o);
  if (b.table && b.outcome.code == kOk) add_killing(b.outcome, *b.table);
  return b.outcome;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar_text(v[i]);
    return s + "]";
  }
  return v.dump();
}

bool is_flat_array(const json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_object(); });
}

void flatten(const json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), rows);
  } else if (v.is_array() && !is_flat_array(v)) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, scalar_text(v));
  }
}

void render(const json& envelope, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << envelope.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(envelope, "", rows);
  for (const auto& [k, v] : rows) out << k << (format == "tsv" ? "\t" : ": ") << v << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact construction and verification of compact simple Lie algebras", "liekit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv", "text"}));
  app.add_flag("--verify", o.verify, "Also check the Killing form (build, import, verify)");
  app.add_option("--workers", o.workers, "Jacobi sweep workers")->envname("LIEKIT_WORKERS")->check(CLI::Range(1u, 1024u));
  app.add_option("--cap", o.cap, "Weyl orbit enumeration cap for kostant");

  struct Verb {
    const char* name;
    const char* help;
    Outcome (*fn)(const Options&);
  };
  static const Verb verbs[] = {
      {"build", "Build and Jacobi-verify an algebra: G2 F4 E6 E7 E8, so(n) su(n) sp(n), so(n)+spinor", cmd_build},
      {"verify", "Verify a lie-structure file (or build a target) and check its Killing form", cmd_verify},
      {"roots", "Cartan matrix, positive roots, Weyl vector", cmd_roots},
      {"exponents", "Exponents, degrees and Weyl group order", cmd_exponents},
      {"dims", "Dimensions of the fundamental irreps", cmd_dims},
      {"kostant", "Euler number and Kostant multiplet of an equal-rank pair", cmd_kostant},
      {"spinsplit", "Spin(2n) spin module under U(n)", cmd_spinsplit},
      {"topology", "Sphere structure, Poincare polynomial, torsion primes", cmd_topology},
      {"coset", "Coset dimensions (table, a space name, or BIG SMALL)", cmd_coset},
      {"export", "Build a target and write it in lie-structure v1 format", nullptr},
      {"import", "Read a lie-structure v1 file and re-verify it", cmd_import},
  };
  std::vector<std::pair<CLI::App*, const Verb*>> subs;
  for (const auto& v : verbs) {
    auto* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("args", o.args, "Arguments");
    if (std::string(v.name) == "export") sub->add_option("-o,--output", o.output, "Write to a file instead of stdout");
    if (std::string(v.name) == "coset") sub->add_option("--dim", o.declared_dim, "Declared space dimension to check");
    subs.emplace_back(sub, &v);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "liekit: " << e.what() << "\n";
    return kUsage;
  }

  const Verb* verb = nullptr;
  for (const auto& [sub, v] : subs)
    if (sub->parsed()) verb = v;
  o.verb = verb->name;

  try {
    Outcome result;
    if (o.verb == "export") {
      if (o.args.size() != 1) throw UsageError("export: expected one target");
      Built b = build_target(o.args[0], o);
      if (!b.table) {
        result = b.outcome;
      } else if (o.output.empty()) {
        out << builder::export_table(*b.table);
        return kOk;
      } else {
        std::ofstream f(o.output);
        if (!f) throw UsageError("cannot write " + o.output);
        f << builder::export_table(*b.table);
        result.payload = {{"algebra", b.table->name()}, {"dim", b.table->dim()}, {"path", o.output},
                          {"stored_coefficients", b.table->stored_coefficients()}, {"jacobi", b.outcome.payload["jacobi"]}};
      }
    } else {
      result = verb->fn(o);
    }
    tag_all(result);
    json command = {{"verb", o.verb}, {"args", o.args}, {"format", o.format}, {"verify", o.verify}};
    if (o.verb == "kostant") command["cap"] = o.cap;
    const json envelope = {{"tool_version", kToolVersion},
                           {"command", command},
                           {"convention", rootsys::kNodeOrdering},
                           {"payload", result.payload},
                           {"provenance", result.provenance}};
    render(envelope, o.format, out);
    if (result.code == kVerificationFailed) err << "liekit: verification failed\n";
    return result.code;
  } catch (const std::exception& e) {
    err << "liekit: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace liekit::cli
