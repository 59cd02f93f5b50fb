// Command-line front end. All computation lives in cli_core.hpp; this file
// only binds flags to the four commands and routes the output stream.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_core.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Humbert Psi1 evaluator: series, integral and asymptotic routes with "
      "cross-checks. Output is CSV (17 significant digits)."};
  app.require_subcommand(1);

  std::string a = "1", b = "1/2", c = "1/3", cp = "1/4";
  std::string xs = "0", ys = "0";
  double tol = 1e-12;
  long max_terms = 100000;
  std::vector<long> orders;
  long N = 0;
  double w = 3.0, eps = 0.1;
  std::string precision = "standard", out_path, format = "csv";
  std::uint64_t seed = 1;
  std::string check = "gamma-ratio";
  long samples = 1000;
  std::vector<double> ts;

  app.add_option("--a", a,
                 "parameter a, complex 're[+im i]'; parts may be p/q "
                 "rationals (default 1)");
  app.add_option("--b", b, "parameter b (default 1/2)");
  app.add_option("--c", c, "lower parameter c (default 1/3)");
  app.add_option("--cp", cp, "lower parameter c' (default 1/4)");
  app.add_option("--x", xs,
                 "argument x (eval) or ray direction x0 (converge)");
  app.add_option("--y", ys,
                 "argument y (eval) or ray direction y0 (converge)");
  app.add_option("--tol", tol, "relative truncation tolerance");
  app.add_option("--max-terms", max_terms, "series term budget");
  app.add_option("--K", orders,
                 "expansion orders to sweep in converge: K on the positive "
                 "ray, exponential order N elsewhere (default 1 2 3)");
  app.add_option("--N", N,
                 "single expansion order; converge shorthand when --K is "
                 "absent");
  app.add_option("--w", w,
                 "target algebraic order for the general expansion");
  app.add_option("--eps", eps,
                 "pole-distance margin for the truncation selector");
  app.add_option("--t", ts,
                 "ray scales for converge (default 50 100 200 400)");
  app.add_option("--precision", precision, "standard or extended")
      ->check(CLI::IsMember({"standard", "extended"}));
  app.add_option("--seed", seed, "seed for the sampling commands");
  app.add_option("--samples", samples, "sample count for bounds");
  app.add_option("--check", check,
                 "bounds family: poch-ratio, gamma-ratio, shifted-product, "
                 "growth");
  app.add_option("--out", out_path, "write CSV to this file instead of stdout");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv"}));

  auto* cmd_eval = app.add_subcommand(
      "eval", "evaluate Psi1 at one point by every applicable route");
  auto* cmd_table1 = app.add_subcommand(
      "table1", "six-row Psi1 / leading-term ratio table on the benchmark "
                "rays");
  auto* cmd_converge =
      app.add_subcommand("converge", "error versus scale sweep along a ray");
  auto* cmd_bounds = app.add_subcommand(
      "bounds", "sampled inequality and growth-envelope checks");
  for (auto* s : {cmd_eval, cmd_table1, cmd_converge, cmd_bounds})
    s->fallthrough();

  CLI11_PARSE(app, argc, argv);

  hcli::RunConfig cfg;
  hcli::cld x, y;
  try {
    cfg.params = {hcli::parse_complex(a), hcli::parse_complex(b),
                  hcli::parse_complex(c), hcli::parse_complex(cp)};
    if (*cmd_converge && app.count("--x") == 0 && app.count("--y") == 0) {
      xs = "-1";  // benchmark ray when none was given
      ys = "2";
    }
    x = hcli::parse_complex(xs);
    y = hcli::parse_complex(ys);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  cfg.policy.rel_tol = tol;
  cfg.policy.max_terms = max_terms;
  cfg.K = orders.empty() ? 1 : orders.front();
  cfg.N = N;
  cfg.w = w;
  cfg.eps = eps;
  cfg.precision = precision == "extended" ? hcli::Precision::extended
                                          : hcli::Precision::standard;
  cfg.seed = seed;

  std::ofstream fout;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    fout.open(out_path, std::ios::binary);
    if (!fout) {
      std::cerr << "error: cannot open output file '" << out_path << "'\n";
      return 2;
    }
    out = &fout;
  }

  if (orders.empty() && N > 0) orders = {N};

  if (*cmd_eval) return hcli::run_eval(cfg, x, y, *out, std::cerr);
  if (*cmd_table1) return hcli::run_table1(cfg, *out, std::cerr);
  if (*cmd_converge) {
    if (y == hcli::cld(0)) {
      std::cerr << "error: converge needs a ray direction with y0 != 0\n";
      return 2;
    }
    return hcli::run_converge(cfg, x, y, ts, orders, *out, std::cerr);
  }
  return hcli::run_bounds(cfg, check, samples, *out, std::cerr);
}
