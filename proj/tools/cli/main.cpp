// superjac: command-line front end for the Jacobian group law.

#include <CLI11.hpp>
#include <iostream>
#include <random>

#include "superjac/sampling.hpp"
#include "superjac/tools/checks.hpp"

namespace {

using superjac::io::json;
namespace sj = superjac;

struct RunConfig {
  std::uint64_t seed = 0x5eedULL;
  std::uint64_t scan_bound = sj::kDefaultScanBound;
  unsigned ext_cap = sj::kDefaultExtensionCap;
  std::string format = "text";
  bool timing = false;

  sj::PipelineOptions pipeline() const {
    sj::PipelineOptions opt;
    opt.ext_cap = ext_cap;
    opt.seed = seed;
    return opt;
  }
  sj::checks::Config checks() const { return {seed, scan_bound, ext_cap}; }
};

constexpr int kExitSuiteFailed = 1;
constexpr int kExitErrorBase = 10;

int exit_code_for(sj::ErrorCode code) { return kExitErrorBase + static_cast<int>(code); }

json envelope(const std::string& command, const RunConfig& cfg) {
  return {{"schema", sj::io::kSchemaVersion}, {"command", command}, {"seed", cfg.seed}};
}

std::string table_text(const sj::BasisTable& t) {
  std::string s;
  for (const auto& row : t.rows) {
    std::string line;
    for (const auto& cell : row) line += (line.empty() ? "" : "\t") + (cell ? cell->to_string() : std::string("0"));
    s += "  " + line + "\n";
  }
  return s;
}

json table_json(const sj::BasisTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const auto& cell : row) r.push_back(cell ? json(cell->to_string()) : json(nullptr));
    rows.push_back(r);
  }
  return rows;
}

json basis_json(const sj::AdoptedBasis& b) {
  json monos = json::array();
  for (const auto& m : b.monomials) monos.push_back(m.to_string());
  return {{"orders", b.orders}, {"monomials", monos}};
}

void emit(const RunConfig& cfg, const json& out, const std::string& text) {
  if (cfg.format == "json")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << "seed: " << cfg.seed << "\n" << text;
}

std::string divisor_text(const sj::ReducedDivisor& D) { return D.to_string() + "  [over " + D.field().name() + "]\n"; }

std::string poly_line(const char* name, const sj::UniPoly& u) { return std::string("  ") + name + " = " + u.to_string() + "\n"; }

std::string certificate_text(const sj::AddCertificate& cert) {
  std::string s = "certificate:\n";
  s += poly_line("f1", cert.f1) + poly_line("f2", cert.f2) + poly_line("f3", cert.f3()) + poly_line("f4", cert.f4());
  s += "  chord curve: " + cert.chord.ic.poly.to_string() + "\n";
  s += "  flip curve: " + cert.flip.ic.poly.to_string() + "\n";
  return s;
}

int cmd_info(const RunConfig& cfg, const std::string& curve_arg) {
  const auto c = sj::io::curve_from_json(sj::io::load_json(curve_arg));
  const int g = c.genus();
  const auto gaps = sj::gap_sequence(c);
  const auto table = sj::basis_matrix(c);
  const auto basis = sj::adopted_basis(c, 2 * g + 1);
  json out = envelope("info", cfg);
  out["curve"] = sj::io::to_json(c);
  out["result"] = {{"n", c.n()},
                   {"d", c.d()},
                   {"g", g},
                   {"gaps", gaps},
                   {"table", table_json(table)},
                   {"basis", basis_json(basis)},
                   {"interp_degree_bound", sj::interp_degree_bound(c)}};
  std::string text = c.to_string() + "\n";
  text += "n = " + std::to_string(c.n()) + ", d = " + std::to_string(c.d()) + ", g = " + std::to_string(g) + "\n";
  text += "gaps:";
  for (int x : gaps) text += " " + std::to_string(x);
  text += "\nB_{" + std::to_string(c.n()) + "," + std::to_string(c.d()) + "}:\n" + table_text(table);
  text += "first 2g+1 monomials:";
  for (const auto& m : basis.monomials) text += " " + m.to_string();
  text += "\ninterpolation degree bound: " + std::to_string(sj::interp_degree_bound(c)) + "\n";
  emit(cfg, out, text);
  return 0;
}

int cmd_basis(const RunConfig& cfg, int n, int d, int count) {
  const int g = sj::superelliptic_genus(n, d);
  if (count <= 0) count = 2 * g + 1;
  const auto b = sj::adopted_basis(n, d, count);
  const auto table = sj::basis_matrix(n, d);
  json out = envelope("basis", cfg);
  out["result"] = basis_json(b);
  out["result"]["n"] = n;
  out["result"]["d"] = d;
  out["result"]["g"] = g;
  out["result"]["gaps"] = sj::gap_sequence(n, d);
  out["result"]["table"] = table_json(table);
  std::string text = "n = " + std::to_string(n) + ", d = " + std::to_string(d) + ", g = " + std::to_string(g) + "\n";
  text += "orders:";
  for (int o : b.orders) text += " " + std::to_string(o);
  text += "\nmonomials:";
  for (const auto& m : b.monomials) text += " " + m.to_string();
  text += "\ntable:\n" + table_text(table);
  emit(cfg, out, text);
  return 0;
}

// Accepts either a bare object or the output envelope of another command.
json unwrap(json j) {
  if (j.is_object() && j.contains("command") && j.contains("result")) return j["result"];
  return j;
}

std::optional<sj::SuperellipticCurve> optional_curve(const std::string& arg) {
  if (arg.empty()) return std::nullopt;
  return sj::io::curve_from_json(sj::io::load_json(arg));
}

sj::ReducedDivisor read_divisor(const std::string& arg, const std::optional<sj::SuperellipticCurve>& c) {
  return sj::io::divisor_from_json(unwrap(sj::io::load_json(arg)), c ? &*c : nullptr);
}

int cmd_group(const RunConfig& cfg, const std::string& op, const std::vector<std::string>& args,
              const std::string& curve_arg, const std::string& scalar) {
  const auto c = optional_curve(curve_arg);
  const std::size_t want = op == "add" ? 2 : 1;
  if (args.size() != want)
    sj::fail(sj::ErrorCode::ParseError, op + " takes " + std::to_string(want) + " divisor argument(s)", "cli");
  const auto D1 = read_divisor(args[0], c);
  json out = envelope(op, cfg);
  std::string text;
  const auto opt = cfg.pipeline();
  if (op == "add" || op == "double") {
    const auto D2 = op == "add" ? read_divisor(args[1], c) : D1;
    sj::AddCertificate cert;
    const auto S = sj::add(D1, D2, &cert, opt);
    out["result"] = sj::io::to_json(S);
    out["certificate"] = sj::io::to_json(cert);
    text = divisor_text(S) + certificate_text(cert);
  } else if (op == "invert") {
    sj::StepCertificate cert;
    const auto S = sj::invert(D1, &cert, opt);
    out["result"] = sj::io::to_json(S);
    out["certificate"] = sj::io::to_json(cert);
    text = divisor_text(S) + "certificate:\n" + poly_line("F", cert.F) + poly_line("f3", cert.residual) +
           "  curve: " + cert.ic.poly.to_string() + "\n";
  } else {
    sj::BigInt N;
    try {
      N = sj::BigInt(scalar);
    } catch (const std::exception&) {
      sj::fail(sj::ErrorCode::ParseError, "bad scalar '" + scalar + "'", "cli");
    }
    const auto S = sj::scalar_mul(D1, N, opt);
    out["scalar"] = N.str();
    out["result"] = sj::io::to_json(S);
    text = divisor_text(S);
  }
  emit(cfg, out, text);
  return 0;
}

int cmd_order(const RunConfig& cfg, const std::string& curve_arg) {
  const auto c = sj::io::curve_from_json(sj::io::load_json(curve_arg));
  const auto L = sj::l_polynomial(c, cfg.scan_bound);
  json out = envelope("order", cfg);
  out["curve"] = sj::io::to_json(c);
  out["result"] = sj::io::to_json(L);
  std::string text = c.to_string() + "\nL(T) coefficients:";
  for (const auto& a : L.a) text += " " + a.str();
  text += "\n#X(F_q^i):";
  for (auto n : L.counts) text += " " + std::to_string(n);
  text += "\n#Jac = " + L.at_one().str() + "\n";
  emit(cfg, out, text);
  return 0;
}

int cmd_sample(const RunConfig& cfg, const std::string& curve_arg, int degree, int count) {
  const auto c = sj::io::curve_from_json(sj::io::load_json(curve_arg));
  if (degree < 0) degree = c.genus();
  if (degree > c.genus()) sj::fail(sj::ErrorCode::NotReduced, "degree exceeds the genus", "sample");
  std::mt19937_64 rng(cfg.seed);
  json list = json::array();
  std::string text;
  for (int i = 0; i < count; ++i) {
    const auto D = sj::random_divisor(c, degree, rng, cfg.ext_cap);
    list.push_back(sj::io::to_json(D));
    text += divisor_text(D);
  }
  json out = envelope("sample", cfg);
  out["result"] = count == 1 ? list[0] : list;
  emit(cfg, out, text);
  return 0;
}

int report_suites(const RunConfig& cfg, const std::string& command, const std::vector<sj::checks::Result>& results) {
  bool ok = true;
  json rows = json::array();
  std::string text;
  for (auto r : results) {
    ok = ok && r.passed;
    if (!cfg.timing) {
      // Timings vary between runs; strip them so output is reproducible.
      for (auto& [k, v] : r.stats.items())
        if (v.is_object()) v.erase("seconds");
    }
    json row = {{"criterion", r.criterion}, {"name", r.name}, {"passed", r.passed}, {"stats", r.stats},
                {"failures", r.failures}};
    if (cfg.timing) row["seconds"] = r.seconds;
    rows.push_back(row);
    text += r.line(cfg.timing) + "\n";
  }
  json out = envelope(command, cfg);
  out["result"] = {{"passed", ok}, {"suites", rows}};
  text += ok ? "all passed\n" : "FAILED\n";
  emit(cfg, out, text);
  return ok ? 0 : kExitSuiteFailed;
}

int cmd_selftest(const RunConfig& cfg, const std::string& tier) {
  std::vector<sj::checks::Result> results;
  if (tier == "all") {
    results = sj::checks::run_acceptance(cfg.checks());
  } else {
    results = sj::checks::run_tier(tier, cfg.checks());
  }
  return report_suites(cfg, "selftest", results);
}

int cmd_formulas_check(const RunConfig& cfg) {
  return report_suites(cfg, "formulas check", sj::checks::run_tier("formulas", cfg.checks()));
}

int report_error(const RunConfig& cfg, const std::string& command, const sj::Error& e) {
  const std::string code(sj::error_code_name(e.code()));
  if (cfg.format == "json") {
    json out = envelope(command, cfg);
    out["error"] = {{"code", code}, {"message", e.what()}, {"stage", e.stage()}, {"exit_code", exit_code_for(e.code())}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cerr << "error: " << code;
    if (!e.stage().empty()) std::cerr << " at " << e.stage();
    std::cerr << ": " << e.what() << "\n";
  }
  return exit_code_for(e.code());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact group law on superelliptic Jacobians y^n = f(x)"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed for sampling and root finding")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--scan-bound", cfg.scan_bound, "Largest field scanned by point counting")->capture_default_str();
  app.add_option("--ext-cap", cfg.ext_cap, "Largest absolute extension degree")->capture_default_str();

  std::string curve_arg, scalar = "0", tier;
  std::vector<std::string> divisors;
  int n = 0, d = 0, count = 0, degree = -1, sample_count = 1;

  auto* info = app.add_subcommand("info", "Genus, gaps and basis table of a curve");
  info->add_option("--curve", curve_arg, "Curve JSON (file or inline)")->required();

  auto* basis = app.add_subcommand("basis", "Adopted basis for (n, d)");
  basis->add_option("--n", n)->required();
  basis->add_option("--d", d)->required();
  basis->add_option("--count", count, "Number of monomials (default 2g + 1)");

  std::map<std::string, CLI::App*> group_cmds;
  for (const char* name : {"add", "invert", "double", "mul"}) {
    auto* sc = app.add_subcommand(name, std::string(name) + " divisors given as JSON files or inline JSON");
    sc->add_option("--curve", curve_arg, "Curve JSON when divisors omit it");
    sc->add_option("divisors", divisors, "Divisor JSON")->required();
    group_cmds[name] = sc;
  }
  group_cmds["mul"]->add_option("--scalar", scalar, "Non-negative integer")->required();

  auto* order = app.add_subcommand("order", "L-polynomial and Jacobian order by point counting");
  order->add_option("--curve", curve_arg)->required();

  auto* sample = app.add_subcommand("sample", "Random reduced divisors");
  sample->add_option("--curve", curve_arg)->required();
  sample->add_option("--degree", degree, "Number of points (default g)");
  sample->add_option("--count", sample_count)->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Run a verification tier");
  std::vector<std::string> tiers = sj::checks::tier_names();
  tiers.push_back("all");
  selftest->add_option("--tier", tier)->required()->check(CLI::IsMember(tiers));
  selftest->add_flag("--timing", cfg.timing, "Include run times");

  auto* formulas = app.add_subcommand("formulas", "Closed-form formula suites");
  formulas->require_subcommand(1);
  auto* check = formulas->add_subcommand("check", "Compare every formula with the generic pipeline");
  check->add_flag("--timing", cfg.timing, "Include run times");

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (info->parsed()) return cmd_info(cfg, curve_arg);
    if (basis->parsed()) return cmd_basis(cfg, n, d, count);
    for (const auto& [name, sc] : group_cmds)
      if (sc->parsed()) return cmd_group(cfg, name, divisors, curve_arg, scalar);
    if (order->parsed()) return cmd_order(cfg, curve_arg);
    if (sample->parsed()) return cmd_sample(cfg, curve_arg, degree, sample_count);
    if (selftest->parsed()) return cmd_selftest(cfg, tier);
    if (check->parsed()) return cmd_formulas_check(cfg);
  } catch (const sj::Error& e) {
    return report_error(cfg, command, e);
  }
  return 0;
}
