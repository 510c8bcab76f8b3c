// ternalg: command-line checks for ternary algebras and ternary omega-Lie
// algebras. Exit status 0 when every checked claim holds, 1 when one fails,
// 2 on usage or parse errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ternalg/descriptor.hpp"
#include "ternalg/error.hpp"
#include "ternalg/laws.hpp"
#include "ternalg/reproduce.hpp"
#include "ternalg/subalg.hpp"

using namespace ternalg;
using nlohmann::json;

namespace {

struct Common
{
  std::string algebra;
  std::string spec_file;
  std::string bracket = "omega";
  std::string mode = "exact";
  double tol = 1e-9;
  unsigned jobs = 0;
  std::string output = "human";
  std::uint64_t limit = 0;

  CheckOptions options() const
  {
    CheckOptions o;
    o.mode = parse_mode(mode);
    o.tol = tol;
    o.jobs = jobs;
    if (limit > 0)
      o.limit = limit;
    return o;
  }

  bool json_out() const { return output == "json"; }
};

class UsageError : public std::runtime_error
{
  using std::runtime_error::runtime_error;
};

void add_algebra_options(CLI::App *cmd, Common &c)
{
  auto *alg = cmd->add_option("--algebra,-a", c.algebra, "Algebra descriptor, e.g. cubic:n=2,pairing=A");
  auto *spec = cmd->add_option("--spec", c.spec_file, "JSON file with an algebra descriptor")->check(CLI::ExistingFile);
  alg->excludes(spec);
}

void add_run_options(CLI::App *cmd, Common &c)
{
  cmd->add_option("--mode", c.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--tol", c.tol, "Float-mode tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs,-j", c.jobs, "Worker threads (default: TERNALG_JOBS or all cores)");
  cmd->add_option("--output,-o", c.output, "human or json")->check(CLI::IsMember({"human", "json"}));
  cmd->add_option("--limit", c.limit, "Check only the first N tuples (non-certifying)");
}

void add_bracket_option(CLI::App *cmd, Common &c)
{
  cmd->add_option("--bracket,-b", c.bracket, "omega, conjugate, reduced or product")
      ->check(CLI::IsMember({"omega", "conjugate", "reduced", "product"}));
}

TernaryAlgebra load_algebra(const Common &c)
{
  if (!c.spec_file.empty()) {
    std::ifstream in(c.spec_file);
    json spec;
    try {
      spec = json::parse(in);
    } catch (const json::parse_error &e) {
      throw ParseError(std::string("invalid JSON in ") + c.spec_file + ": " + e.what(), e.byte);
    }
    return algebra_from_json(spec);
  }
  if (c.algebra.empty())
    throw UsageError("one of --algebra or --spec is required");
  return algebra_from_descriptor(c.algebra);
}

std::string algebra_name(const Common &c)
{
  return c.spec_file.empty() ? c.algebra : c.spec_file;
}

int emit_reports(const Common &c, const std::string &command, const std::vector<LawReport> &reports)
{
  bool ok = true;
  for (const auto &r : reports)
    ok = ok && r.holds;
  if (c.json_out()) {
    json j;
    j["command"] = command;
    j["algebra"] = algebra_name(c);
    j["holds"] = ok;
    j["reports"] = json::array();
    for (const auto &r : reports)
      j["reports"].push_back(r.to_json());
    std::cout << j.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

void stream(const Common &c, const LawReport &r)
{
  if (!c.json_out())
    std::cout << r.to_text() << std::endl;
}

std::vector<Element> parse_span(const std::string &text, const TernaryAlgebra &algebra)
{
  std::string t = text;
  if (!t.empty() && t.front() == '[')
    return parse_elements(json::parse(t), algebra);
  std::vector<Element> out;
  std::stringstream ss(t);
  std::string piece;
  while (std::getline(ss, piece, ','))
    out.push_back(parse_element(piece, algebra));
  return out;
}

std::string triple_text(const std::optional<std::array<std::size_t, 3>> &t, const std::vector<std::string> &a,
                        const std::vector<std::string> &b, const std::vector<std::string> &c)
{
  if (!t)
    return "";
  return "[" + a[(*t)[0]] + ", " + b[(*t)[1]] + ", " + c[(*t)[2]] + "]";
}

std::vector<std::string> element_names(const std::vector<Element> &xs, const TernaryAlgebra &alg)
{
  std::vector<std::string> out;
  for (const auto &x : xs)
    out.push_back(format_element(x, alg.labels()));
  return out;
}

int run_axioms(const Common &c)
{
  auto alg = load_algebra(c);
  auto br = Bracket::parse(c.bracket);
  auto opts = c.options();
  std::vector<LawReport> reports;
  reports.push_back(check_omega_symmetry(alg, br, opts));
  stream(c, reports.back());
  reports.push_back(check_ga15_identity(alg, br, opts));
  stream(c, reports.back());
  return emit_reports(c, "axioms", reports);
}

int run_assoc(const Common &c, int kind)
{
  auto alg = load_algebra(c);
  std::vector<LawReport> reports{check_assoc(alg, kind, c.options())};
  stream(c, reports.back());
  return emit_reports(c, "assoc", reports);
}

int run_constants(const Common &c, const std::string &basis_text)
{
  auto alg = load_algebra(c);
  auto br = Bracket::parse(c.bracket);
  auto opts = c.options();
  std::optional<std::vector<Element>> basis;
  std::vector<std::string> labels = argument_labels(alg);
  if (!basis_text.empty()) {
    basis = parse_span(basis_text, alg);
    labels.clear();
    for (std::size_t t = 0; t < basis->size(); ++t)
      labels.push_back("b" + std::to_string(t + 1));
  }
  StructureTensor constants = structure_constants(alg, br, basis);

  // Read back as an algebra whose plain product carries the constants.
  TernaryAlgebra carrier = algebra_from_constants(constants, labels);
  Bracket bare = Bracket::product();
  bare.name = br.name;
  bare.symmetry_root = br.symmetry_root;
  std::vector<LawReport> reports;
  reports.push_back(check_omega_symmetry(carrier, bare, opts));
  reports.push_back(check_ga15_system(constants, opts, labels));

  bool ok = reports[0].holds && reports[1].holds;
  if (c.json_out()) {
    json j;
    j["command"] = "constants";
    j["algebra"] = algebra_name(c);
    j["bracket"] = br.name;
    j["constants"] = constants_to_json(constants, labels);
    j["holds"] = ok;
    j["reports"] = {reports[0].to_json(), reports[1].to_json()};
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  const std::size_t d = constants.dim();
  std::cout << "structure constants of the " << br.name << " bracket (dimension " << d << ")\n";
  bool any = false;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Element col = constants.column(i, j, k);
        if (is_zero_vector(col))
          continue;
        any = true;
        std::cout << "  [" << labels[i] << "," << labels[j] << "," << labels[k] << "] = " << format_element(col, labels)
                  << "\n";
      }
  if (!any)
    std::cout << "  all brackets vanish\n";
  for (const auto &r : reports)
    std::cout << r.to_text() << "\n";
  return ok ? 0 : 1;
}

json closure_json(const ClosureReport &r, const std::string &failing)
{
  json j{{"holds", r.holds}, {"triples_checked", r.triples_checked}};
  if (!r.holds)
    j["failing"] = failing;
  return j;
}

int run_subalgebras(const Common &c, const std::vector<std::string> &spans, std::size_t size)
{
  auto alg = load_algebra(c);
  auto br = Bracket::parse(c.bracket);
  json out = json::array();
  bool ok = true;

  auto report_span = [&](const Subspace &s, const std::string &name, bool require_closed) {
    auto args = element_names(s.argument_set(), alg);
    auto outer = element_names(argument_basis(alg), alg);
    auto sub = is_subalgebra(s, br);
    auto ideal = is_ideal(s, br);
    auto ab = is_abelian(s, br);
    json j{{"span", name}, {"dim", s.dim()}};
    j["subalgebra"] = closure_json(sub, triple_text(sub.failing, args, args, args));
    j["ideal"] = closure_json(ideal.first_slot, triple_text(ideal.first_slot.failing, args, outer, outer));
    j["ideal_all_slots"] = ideal.all_slots.holds;
    j["abelian"] = closure_json(ab, triple_text(ab.failing, args, args, args));
    std::string type;
    if (sub.holds && s.dim() == 2 && alg.mode() == Linearity::Trilinear) {
      auto cls = classify_2dim(s, br);
      type = to_string(cls.type);
      j["type"] = type;
      j["method"] = cls.method;
    }
    if (require_closed)
      ok = ok && sub.holds;
    if (c.json_out()) {
      out.push_back(j);
      return;
    }
    std::cout << name << " (dim " << s.dim() << "): " << (sub.holds ? "subalgebra" : "not closed");
    if (!sub.holds)
      std::cout << " " << j["subalgebra"]["failing"].get<std::string>();
    if (sub.holds)
      std::cout << (ab.holds ? ", abelian" : ", non-abelian");
    std::cout << (ideal.first_slot.holds ? ", ideal" : ", not an ideal");
    if (ideal.first_slot.holds && !ideal.all_slots.holds)
      std::cout << " (slot 1 only)";
    if (!type.empty())
      std::cout << ", type " << type;
    std::cout << std::endl;
  };

  if (!spans.empty()) {
    for (const auto &text : spans) {
      Subspace s(alg, parse_span(text, alg));
      report_span(s, text, true);
    }
  } else {
    const std::size_t n = alg.dim();
    if (size == 0 || size > n)
      throw UsageError("--size must lie between 1 and the dimension");
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<std::size_t> idx;
      std::string name = "<";
      for (std::size_t t = 0; t < n; ++t)
        if (pick[t]) {
          name += (idx.empty() ? "" : ",") + alg.labels()[t];
          idx.push_back(t);
        }
      auto s = Subspace::coordinate_span(alg, idx);
      if (is_subalgebra(s, br).holds)
        report_span(s, name + ">", false);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  if (c.json_out())
    std::cout << json{{"command", "subalgebras"}, {"algebra", algebra_name(c)}, {"spans", out}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

int run_classify(const Common &c, const std::string &span)
{
  auto alg = load_algebra(c);
  auto br = Bracket::parse(c.bracket);
  Subspace s(alg, parse_span(span, alg));
  auto cls = classify_2dim(s, br);
  const bool ok = cls.type != TwoDimType::Unclassified;
  if (c.json_out()) {
    json j{{"command", "classify"}, {"algebra", algebra_name(c)}, {"span", span}, {"type", to_string(cls.type)},
           {"method", cls.method}, {"constants", constants_to_json(cls.constants)}};
    if (cls.witness) {
      json w = json::array();
      for (std::size_t r = 0; r < 2; ++r)
        w.push_back({cls.witness->operator()(r, 0).format(), cls.witness->operator()(r, 1).format()});
      j["witness"] = w;
    }
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  std::cout << span << ": type " << to_string(cls.type) << " (" << cls.method << ")\n";
  if (cls.witness) {
    const auto &w = *cls.witness;
    std::cout << "  witness (columns are the new basis): [" << w(0, 0).format() << ", " << w(0, 1).format() << "; "
              << w(1, 0).format() << ", " << w(1, 1).format() << "]\n";
  }
  return ok ? 0 : 1;
}

int run_reproduce(const Common &c, const std::string &target)
{
  auto sink = [&](const Claim &claim) {
    if (c.json_out())
      return;
    std::cout << (claim.holds ? "[PASS] " : "[FAIL] ") << claim.name;
    if (!claim.detail.empty())
      std::cout << "  -- " << claim.detail;
    std::cout << std::endl;
  };
  auto report = reproduce(target, c.options(), sink);
  if (c.json_out()) {
    json j{{"command", "reproduce"}, {"target", target}, {"holds", report.holds()}, {"claims", json::array()}};
    for (const auto &claim : report.claims)
      j["claims"].push_back({{"claim", claim.name}, {"holds", claim.holds}, {"detail", claim.detail}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::size_t pass = 0;
    for (const auto &claim : report.claims)
      pass += claim.holds ? 1 : 0;
    std::cout << target << ": " << pass << "/" << report.claims.size() << " claims hold\n";
  }
  return report.holds() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Checks for ternary algebras and ternary omega-Lie algebras"};
  app.require_subcommand(1);
  Common c;

  auto *axioms = app.add_subcommand("axioms", "omega-symmetry and GA(1,5)-identity of a bracket");
  add_algebra_options(axioms, c);
  add_bracket_option(axioms, c);
  add_run_options(axioms, c);

  int kind = 2;
  auto *assoc = app.add_subcommand("assoc", "Associativity of the first or second kind");
  add_algebra_options(assoc, c);
  assoc->add_option("--kind,-k", kind, "1 or 2")->check(CLI::IsMember({1, 2}));
  add_run_options(assoc, c);

  std::string basis;
  auto *constants = app.add_subcommand("constants", "Structure constants with their omega-symmetry and GA(1,5)-system");
  add_algebra_options(constants, c);
  add_bracket_option(constants, c);
  constants->add_option("--basis", basis, "Comma-separated basis expressions or a JSON array");
  add_run_options(constants, c);

  std::string span;
  auto *classify = app.add_subcommand("classify", "Type of a 2-dimensional subalgebra");
  add_algebra_options(classify, c);
  add_bracket_option(classify, c);
  classify->add_option("--span", span, "Two comma-separated element expressions or a JSON array")->required();
  classify->add_option("--output,-o", c.output, "human or json")->check(CLI::IsMember({"human", "json"}));

  std::vector<std::string> spans;
  std::size_t size = 2;
  auto *subalgebras = app.add_subcommand("subalgebras", "Subalgebra, ideal and abelian checks for spans");
  add_algebra_options(subalgebras, c);
  add_bracket_option(subalgebras, c);
  subalgebras->add_option("--span", spans, "Span to check (repeatable); default: all coordinate spans of --size");
  subalgebras->add_option("--size", size, "Dimension of enumerated coordinate spans");
  subalgebras->add_option("--output,-o", c.output, "human or json")->check(CLI::IsMember({"human", "json"}));

  std::string target;
  auto *repro = app.add_subcommand("reproduce", "Run a named bundle of claims");
  repro->add_option("target", target, "presentation, twodim-table, vector-prop, traces, theorem2, msc2-decomp or "
                                      "subalgebra-list")
      ->required();
  add_run_options(repro, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*axioms)
      return run_axioms(c);
    if (*assoc)
      return run_assoc(c, kind);
    if (*constants)
      return run_constants(c, basis);
    if (*classify)
      return run_classify(c, span);
    if (*subalgebras)
      return run_subalgebras(c, spans, size);
    if (*repro)
      return run_reproduce(c, target);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ShapeError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BasisError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
