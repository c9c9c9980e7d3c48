// Copyright 2026 The hypalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypalg/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypalg/algebra.hpp"
#include "hypalg/errors.hpp"
#include "hypalg/format.hpp"
#include "hypalg/holomorphy.hpp"
#include "hypalg/polysolve.hpp"
#include "hypalg/spectral.hpp"

namespace hypalg::cli {

namespace {

using json = nlohmann::ordered_json;

// Raised for bad configuration; maps to kInputError.
class InputError : public Error {
 public:
  using Error::Error;
};

double clean(double v) { return v == 0.0 ? 0.0 : v; }

json scalar_json(Scalar s, Field field) {
  if (field == Field::Real) return clean(s.real());
  return json::array({clean(s.real()), clean(s.imag())});
}

json element_json(const Element& a, Field field) {
  json out = json::array();
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(scalar_json(a[k], field));
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", clean(v));
  return buf;
}

// Human-readable element: "0.5*1 + 0.5*e".
std::string pretty(const Element& a, const AlgebraTable& table) {
  std::string out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Scalar c = a[k];
    if (std::abs(c) < 1e-15) continue;
    if (!out.empty()) out += " + ";
    std::string coeff;
    if (table.field() == Field::Real || c.imag() == 0.0) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.10g", clean(c.real()));
      coeff = buf;
    } else {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "(%.10g%+.10gi)", clean(c.real()), clean(c.imag()));
      coeff = buf;
    }
    out += coeff + "*" + table.basis_names()[k];
  }
  return out.empty() ? "0" : out;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

double tolerance_or(const CommandConfig& config, double fallback) {
  return config.tolerance.value_or(fallback);
}

void validate(const CommandConfig& config) {
  if (config.tolerance && !(*config.tolerance >= 0.0)) {
    throw InputError("--tol must be a non-negative number");
  }
  if (config.points == 0) throw InputError("--points must be positive");
  if (config.max_roots == 0) throw InputError("--max-roots must be positive");
  if (config.step && !(*config.step > 0.0)) throw InputError("--step must be positive");
  if (config.order && *config.order < 0) throw InputError("--order must be non-negative");
}

bool is_bicomplex(const AlgebraTable& table) {
  if (table.dim() != 2) return false;
  return table.constant(1, 1, 0) == Scalar(1.0) && table.constant(1, 1, 1) == Scalar(0.0);
}

Element random_point(const AlgebraTable& table, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Element x(table.dim());
  for (std::size_t k = 0; k < table.dim(); ++k) {
    const double re = dist(rng);
    x[k] = Scalar(re, table.field() == Field::Complex ? dist(rng) : 0.0);
  }
  return x;
}

IdempotentSystem obtain_system(const CommandConfig& config, const AlgebraTable& table,
                               const std::optional<std::vector<Element>>& supplied) {
  if (supplied) {
    return accept_idempotent_system(table, *supplied, Provenance::UserSupplied);
  }
  SpectralConfig spectral;
  spectral.seed = config.seed;
  return find_idempotent_system(table, spectral);
}

CommandResult run_verify(const CommandConfig& config, const AlgebraTable& table) {
  const AxiomReport report = verify_algebra(table, tolerance_or(config, kDefaultAxiomTolerance));
  CommandResult result;
  result.exit_code = report.passed() ? kSuccess : kMathFailure;
  if (config.format == OutputFormat::Machine) {
    json doc;
    doc["command"] = "verify";
    doc["field"] = field_name(table.field());
    doc["dim"] = table.dim();
    doc["commutativity"] = clean(report.commutativity);
    doc["unit_law"] = clean(report.unit_law);
    doc["associativity"] = clean(report.associativity);
    doc["realness"] = clean(report.realness);
    doc["tolerance"] = report.tolerance;
    doc["passed"] = report.passed();
    result.output = render(doc);
  } else {
    std::ostringstream os;
    os << "algebra: field " << field_name(table.field()) << ", dim " << table.dim() << "\n"
       << "commutativity residual: " << num(report.commutativity) << "\n"
       << "unit-law residual:      " << num(report.unit_law) << "\n"
       << "associativity residual: " << num(report.associativity) << "\n";
    if (table.field() == Field::Real) os << "imaginary residue:      " << num(report.realness) << "\n";
    os << "verdict: " << (report.passed() ? "pass" : "FAIL") << " (tol " << num(report.tolerance)
       << ")\n";
    result.output = os.str();
  }
  return result;
}

CommandResult run_idempotents(const CommandConfig& config, const AlgebraTable& table,
                              const std::optional<std::vector<Element>>& supplied) {
  const double tol = tolerance_or(config, 1e-8);
  CommandResult result;
  IdempotentSystem system;
  if (supplied) {
    system = {*supplied, tol, Provenance::UserSupplied};
  } else {
    SpectralConfig spectral;
    spectral.seed = config.seed;
    spectral.tol_idem = tol;
    system = find_idempotent_system(table, spectral);
  }
  const SystemReport report = verify_idempotent_system(table, system, tol);
  result.exit_code = report.passed() ? kSuccess : kMathFailure;

  if (config.output_path) {
    std::ofstream out(*config.output_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + config.output_path->string());
    out << write_idempotents(system.idems, table);
  }

  if (config.format == OutputFormat::Machine) {
    json doc;
    doc["command"] = "idempotents";
    doc["provenance"] = provenance_name(system.provenance);
    json idems = json::array();
    for (const Element& i : system.idems) idems.push_back(element_json(i, table.field()));
    doc["idempotents"] = idems;
    doc["idempotency"] = clean(report.idempotency);
    doc["orthogonality"] = clean(report.orthogonality);
    doc["completeness"] = clean(report.completeness);
    doc["rank"] = report.rank;
    doc["complete"] = report.full();
    doc["tolerance"] = tol;
    doc["passed"] = report.passed();
    result.output = render(doc);
  } else {
    std::ostringstream os;
    os << system.size() << " idempotent(s), " << provenance_name(system.provenance) << "\n";
    for (std::size_t l = 0; l < system.size(); ++l) {
      os << "  i" << (l + 1) << " = " << pretty(system[l], table) << "\n";
    }
    os << "idempotency residual:   " << num(report.idempotency) << "\n"
       << "orthogonality residual: " << num(report.orthogonality) << "\n"
       << "completeness residual:  " << num(report.completeness) << "\n"
       << "rank: " << report.rank << " of " << report.count
       << (report.full() ? "" : " (incomplete: fewer idempotents than dimensions)") << "\n"
       << "verdict: " << (report.passed() ? "pass" : "FAIL") << " (tol " << num(tol) << ")\n";
    result.output = os.str();
  }
  return result;
}

CommandResult run_solve(const CommandConfig& config, const AlgebraTable& table,
                        const AlgebraPolynomial& p,
                        const std::optional<std::vector<Element>>& supplied) {
  SolveOptions opts;
  opts.tol_root = tolerance_or(config, opts.tol_root);
  opts.max_roots = config.max_roots;
  const IdempotentSystem system = obtain_system(config, table, supplied);
  const RootSet roots = solve(p, table, system, opts);

  CommandResult result;
  if (config.format == OutputFormat::Machine) {
    json doc;
    json root_list = json::array();
    for (const Element& r : roots.roots) root_list.push_back(element_json(r, table.field()));
    json residual_list = json::array();
    for (double r : roots.residuals) residual_list.push_back(clean(r));
    json components = json::array();
    for (const ComponentSolution& c : roots.components) {
      json entry;
      entry["kind"] = component_kind_name(c.kind);
      entry["degree"] = c.effective_degree;
      json rs = json::array();
      for (const Scalar& s : c.roots) rs.push_back(scalar_json(s, table.field()));
      entry["roots"] = rs;
      json res = json::array();
      for (double r : c.residuals) res.push_back(clean(r));
      entry["residuals"] = res;
      components.push_back(entry);
    }
    doc["roots"] = root_list;
    doc["residuals"] = residual_list;
    doc["components"] = components;
    doc["truncated"] = roots.truncated;
    doc["parametric"] = roots.parametric;
    doc["combinations"] = roots.combinations;
    result.output = render(doc);
  } else {
    std::ostringstream os;
    for (std::size_t s = 0; s < roots.components.size(); ++s) {
      const ComponentSolution& c = roots.components[s];
      os << "component " << (s + 1) << ": " << component_kind_name(c.kind);
      if (c.kind == ComponentKind::Finite) os << ", " << c.roots.size() << " root(s)";
      os << "\n";
    }
    os << roots.roots.size() << " root(s)";
    if (roots.truncated) os << " (truncated from " << roots.combinations << ")";
    if (roots.parametric) os << " (parametric: free components shown at 0)";
    os << "\n";
    for (std::size_t n = 0; n < roots.roots.size(); ++n) {
      os << "  w = " << pretty(roots.roots[n], table) << "   residual " << num(roots.residuals[n])
         << "\n";
    }
    result.output = os.str();
  }
  return result;
}

CommandResult run_cr_check(const CommandConfig& config, const AlgebraTable& table,
                           const AlgebraFunction& f, const std::string& label) {
  const double tol = tolerance_or(config, kDefaultCrTolerance);
  std::mt19937_64 rng(config.seed);
  std::vector<double> worst(table.dim() > 0 ? table.dim() - 1 : 0, 0.0);
  double max_residual = 0.0;
  for (std::size_t n = 0; n < config.points; ++n) {
    const Element x = random_point(table, rng);
    const double step = config.step.value_or(default_fd_step(x));
    const CRReport report = check_cauchy_riemann(table, f, x, step, tol);
    for (std::size_t k = 0; k < worst.size(); ++k) worst[k] = std::max(worst[k], report.residuals[k]);
    max_residual = std::max(max_residual, report.max_residual);
  }
  const bool satisfied = max_residual <= tol;

  CommandResult result;
  result.exit_code = satisfied ? kSuccess : kMathFailure;
  if (config.format == OutputFormat::Machine) {
    json doc;
    doc["command"] = "cr-check";
    doc["function"] = label;
    doc["points"] = config.points;
    doc["step"] = config.step ? json(*config.step) : json("1e-5*(1+|x|)");
    json per_direction = json::array();
    for (double r : worst) per_direction.push_back(clean(r));
    doc["residuals"] = per_direction;
    doc["max_residual"] = clean(max_residual);
    doc["tolerance"] = tol;
    doc["satisfied"] = satisfied;
    result.output = render(doc);
  } else {
    std::ostringstream os;
    os << "Cauchy-Riemann check of " << label << " at " << config.points
       << " sampled point(s) (a sample, not a proof)\n";
    for (std::size_t k = 0; k < worst.size(); ++k) {
      os << "  direction " << table.basis_names()[k + 1] << ": max residual " << num(worst[k])
         << "\n";
    }
    os << "verdict: " << (satisfied ? "holomorphic at sampled points" : "NOT holomorphic")
       << " (tol " << num(tol) << ")\n";
    result.output = os.str();
  }
  return result;
}

CommandResult run_taylor(const CommandConfig& config, const AlgebraTable& table,
                         const AlgebraPolynomial& p, const Element& x, const Element& h) {
  const int order = config.order.value_or(static_cast<int>(p.degree()));
  const AlgebraFunction f = AlgebraFunction::polynomial(p);
  const Element series = taylor_eval(table, f, x, h, order);
  const Element direct = eval_poly(table, p, add(x, h));
  const double difference = distance_inf(series, direct);
  const double tol = tolerance_or(config, 1e-10);

  CommandResult result;
  if (config.format == OutputFormat::Machine) {
    json doc;
    doc["command"] = "taylor";
    doc["order"] = order;
    doc["taylor"] = element_json(series, table.field());
    doc["direct"] = element_json(direct, table.field());
    doc["difference"] = clean(difference);
    doc["tolerance"] = tol;
    doc["agrees"] = difference <= tol;
    result.output = render(doc);
  } else {
    std::ostringstream os;
    os << "order " << order << " Taylor sum: " << pretty(series, table) << "\n"
       << "direct f(x+h):        " << pretty(direct, table) << "\n"
       << "difference: " << num(difference) << (difference <= tol ? " (agrees" : " (differs")
       << " at tol " << num(tol) << ")\n";
    result.output = os.str();
  }
  return result;
}

}  // namespace

CommandResult run(const CommandConfig& config) {
  try {
    validate(config);
    const std::string& cmd = config.subcommand;
    if (cmd != "verify" && cmd != "idempotents" && cmd != "solve" && cmd != "cr-check" &&
        cmd != "taylor") {
      throw InputError("unknown subcommand '" + cmd + "'");
    }

    // Load and validate every input before computing anything.
    const AlgebraTable table = load_algebra(config.algebra_path);
    std::optional<AlgebraPolynomial> poly;
    if (config.polynomial_path) poly = load_polynomial(*config.polynomial_path, table);
    std::optional<std::vector<Element>> supplied;
    if (config.idempotent_path) supplied = load_idempotents(*config.idempotent_path, table);
    std::optional<Element> point;
    std::optional<Element> displacement;
    try {
      if (config.point) point = parse_element(*config.point, table);
      if (config.displacement) displacement = parse_element(*config.displacement, table);
    } catch (const ParseError& e) {
      throw InputError(std::string("bad --point/--displacement: ") + e.what());
    }

    if (cmd == "verify") return run_verify(config, table);

    const AxiomReport axioms = verify_algebra(table);
    if (!axioms.passed()) {
      CommandResult failed = run_verify(config, table);
      failed.error = "algebra fails the commutative unitary algebra axioms";
      return failed;
    }

    if (cmd == "idempotents") return run_idempotents(config, table, supplied);
    if (cmd == "solve") {
      if (!poly) throw InputError("solve needs --poly");
      return run_solve(config, table, *poly, supplied);
    }
    if (cmd == "cr-check") {
      if (poly && config.function_name) throw InputError("give either --poly or --function, not both");
      if (poly) return run_cr_check(config, table, AlgebraFunction::polynomial(*poly), "polynomial");
      if (!config.function_name) throw InputError("cr-check needs --poly or --function");
      if (*config.function_name != "conj") {
        throw InputError("unknown built-in function '" + *config.function_name + "'");
      }
      if (!is_bicomplex(table)) throw InputError("built-in 'conj' needs the bicomplex algebra");
      const AlgebraFunction conj = AlgebraFunction::black_box([](const Element& x) {
        return Element{x[0], -x[1]};
      });
      return run_cr_check(config, table, conj, "conj");
    }
    // taylor
    if (!poly) throw InputError("taylor needs --poly");
    if (!point || !displacement) throw InputError("taylor needs --point and --displacement");
    return run_taylor(config, table, *poly, *point, *displacement);
  } catch (const InputError& e) {
    return {kInputError, {}, e.what()};
  } catch (const ParseError& e) {
    return {kInputError, {}, e.what()};
  } catch (const DimensionMismatch& e) {
    return {kInputError, {}, e.what()};
  } catch (const SpectralError& e) {
    return {kMathFailure, {}, e.what()};
  } catch (const IncompleteSystem& e) {
    return {kMathFailure, {}, e.what()};
  } catch (const Error& e) {
    return {kMathFailure, {}, e.what()};
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computation in commutative unitary algebras given by structure constants"};
  app.require_subcommand(1);

  CommandConfig config;
  std::string algebra;
  std::string poly;
  std::string idempotents;
  std::string output;
  std::string function;
  std::string point;
  std::string displacement;
  std::string format = "human";
  std::uint64_t seed = 0;
  double tol = 0.0;
  double step = 0.0;
  int order = 0;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--algebra", algebra, "Algebra file")->required();
    sub->add_option("--tol", tol, "Tolerance (default depends on the subcommand)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "machine"}));
  };
  const auto seeded = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed (decimal u64; default 0 or $HYPALG_SEED)");
  };

  CLI::App* verify = app.add_subcommand("verify", "Check the commutative unitary algebra axioms");
  common(verify);

  CLI::App* idem = app.add_subcommand("idempotents", "Find or verify a complete idempotent system");
  common(idem);
  seeded(idem);
  idem->add_option("--idempotents", idempotents, "Verify this idempotent file instead of searching");
  idem->add_option("--out", output, "Write the system as an idempotent file");

  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve p(w) = 0 in the algebra");
  common(solve_cmd);
  seeded(solve_cmd);
  solve_cmd->add_option("--poly", poly, "Polynomial file")->required();
  solve_cmd->add_option("--idempotents", idempotents, "Use this idempotent system");
  solve_cmd->add_option("--max-roots", config.max_roots, "Enumeration cap");

  CLI::App* cr = app.add_subcommand("cr-check", "Sample the Cauchy-Riemann type conditions");
  common(cr);
  seeded(cr);
  cr->add_option("--poly", poly, "Polynomial file");
  cr->add_option("--function", function, "Built-in function (conj)");
  cr->add_option("--points", config.points, "Number of random sample points");
  cr->add_option("--step", step, "Fixed finite-difference step (default 1e-5*(1+|x|))");

  CLI::App* taylor = app.add_subcommand("taylor", "Compare a Taylor sum with direct evaluation");
  common(taylor);
  taylor->add_option("--poly", poly, "Polynomial file")->required();
  taylor->add_option("--point", point, "Expansion point x (dim scalars)")->required();
  taylor->add_option("--displacement", displacement, "Displacement h (dim scalars)")->required();
  taylor->add_option("--order", order, "Truncation order (default: degree)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  config.subcommand = chosen->get_name();
  config.algebra_path = algebra;
  config.format = format == "machine" ? OutputFormat::Machine : OutputFormat::Human;
  const auto given = [&](const char* flag) {
    const auto* opt = chosen->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--poly")) config.polynomial_path = poly;
  if (given("--idempotents")) config.idempotent_path = idempotents;
  if (given("--out")) config.output_path = output;
  if (given("--function")) config.function_name = function;
  if (given("--point")) config.point = point;
  if (given("--displacement")) config.displacement = displacement;
  if (given("--tol")) config.tolerance = tol;
  if (given("--step")) config.step = step;
  if (given("--order")) config.order = order;
  if (given("--seed")) {
    config.seed = seed;
  } else if (const char* env = std::getenv("HYPALG_SEED"); env != nullptr && *env != '\0') {
    const std::string_view text(env);
    std::uint64_t parsed = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      err << "error: HYPALG_SEED must be a decimal unsigned 64-bit integer\n";
      return kInputError;
    }
    config.seed = parsed;
  }

  const CommandResult result = run(config);
  out << result.output;
  if (!result.error.empty()) err << "error: " << result.error << "\n";
  return result.exit_code;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("hypalg");
  for (const auto& a : args) argv.push_back(a.c_str());
  return main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hypalg::cli
