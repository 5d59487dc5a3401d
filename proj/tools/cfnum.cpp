#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfnum/assoc.hpp"
#include "cfnum/bases.hpp"
#include "cfnum/errors.hpp"
#include "cfnum/generating_functions.hpp"
#include "cfnum/report.hpp"
#include "cfnum/sequences.hpp"
#include "cfnum/triangles.hpp"
#include "cfnum/umbral.hpp"

namespace {

using namespace cfnum;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCrossCheck = 3;

struct ParamFlags {
  std::optional<std::string> lambda, r, s, a;

  void attach(CLI::App* cmd) {
    cmd->add_option("--lambda", lambda, "lambda as p/q");
    cmd->add_option("--r", r, "Gould-Hopper r as p/q");
    cmd->add_option("--s", s, "Gould-Hopper s as p/q");
    cmd->add_option("--a", a, "Poisson-Charlier a as p/q");
  }

  Params resolve() const {
    Params p = default_params();
    const auto set = [&](const char* key, const std::optional<std::string>& v) {
      if (v) p[key] = parse_rational(*v);
    };
    set("lambda", lambda);
    set("r", r);
    set("s", s);
    set("a", a);
    return p;
  }
};

// --order wins over CFNUM_ORDER; both fall back to the library default (-1).
int resolve_order(std::optional<int> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("CFNUM_ORDER"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("CFNUM_ORDER must be a non-negative integer");
  }
  return -1;
}

Params only(const Params& all, const std::vector<std::string>& keys) {
  Params out;
  for (const auto& k : keys) out[k] = all.at(k);
  return out;
}

std::string join_trimmed(const std::vector<Rational>& v) {
  std::size_t len = v.size();
  while (len > 1 && v[len - 1] == 0) --len;
  std::string out;
  for (std::size_t i = 0; i < len; ++i) out += (i ? "," : "") + to_string(v[i]);
  return out.empty() ? "0" : out;
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw UsageError("empty coefficient list");
  return out;
}

// Named delta series for the `series` command, or the f of a Sheffer catalog entry.
Series named_delta(const std::string& name, int order, const Params& params) {
  const Rational lam = params.at("lambda");
  if (name == "t") return Series::variable(order);
  if (name == "exp_lambda") return (exp_scaled(order, lam) - Rational(1)) / lam;
  if (name == "one_minus_exp_neg") return Series::constant(order, 1) - exp_scaled(order, -1);
  if (name == "lah") return -(Series::variable(order) * reciprocal(Series::constant(order, 1) - Series::variable(order)));
  if (name == "alpha") return alpha(order);
  if (name == "central") return central_delta(order);
  const auto spec = catalog(name, params);
  return spec.pair(order).f;
}

nlohmann::ordered_json coeffs_json(const Series& s) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& c : s.coefficients()) out.push_back(to_string(c));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact central factorial numbers of polynomial sequences"};
  app.require_subcommand(0, 1);
  bool list_flag = false;
  app.add_flag("--list-sequences", list_flag, "List catalog sequences and exit");

  // triangle
  auto* tri = app.add_subcommand("triangle", "Emit a number triangle");
  std::string family;
  int tri_n = 6;
  std::string tri_format = "json";
  bool no_crosscheck = false;
  std::optional<int> tri_order;
  ParamFlags tri_params;
  tri->add_option("--family", family, "s1 s2 s1l s2l t1 t2 t1l t2l r1l r2l lah l1c l2c tl1 tl2 gh")->required();
  tri->add_option("--n", tri_n, "Largest row index")->check(CLI::NonNegativeNumber);
  tri->add_option("--format", tri_format)->check(CLI::IsMember({"json", "csv"}));
  tri->add_flag("--no-crosscheck", no_crosscheck, "Skip the series vs algebra comparison");
  tri->add_option("--order", tri_order, "Series truncation order")->check(CLI::NonNegativeNumber);
  tri_params.attach(tri);

  // assoc
  auto* as = app.add_subcommand("assoc", "Emit T1(n,k;P) or T2(n,k;P)");
  std::string kind = "t2", seq, route;
  int as_n = 6;
  std::string as_format = "json";
  std::optional<int> as_order;
  ParamFlags as_params;
  as->add_option("--kind", kind)->check(CLI::IsMember({"t1", "t2"}));
  as->add_option("--seq", seq, "Catalog sequence name")->required();
  as->add_option("--route", route, "t2: explicit derivative genfunc; t1: functional solve genfunc matrix");
  as->add_option("--n", as_n)->check(CLI::NonNegativeNumber);
  as->add_option("--format", as_format)->check(CLI::IsMember({"json", "csv"}));
  as->add_option("--order", as_order)->check(CLI::NonNegativeNumber);
  as_params.attach(as);

  // convert
  auto* conv = app.add_subcommand("convert", "Change polynomial basis of a coefficient list");
  std::string from = "monomial", to = "central", coeff_text;
  ParamFlags conv_params;
  conv->add_option("--from", from)->required();
  conv->add_option("--to", to)->required();
  conv->add_option("coeffs", coeff_text, "Comma-separated p/q coefficients, lowest degree first")->required();
  conv_params.attach(conv);

  // series
  auto* ser = app.add_subcommand("series", "Emit f, its inverse, LC_f and EC_f");
  std::string ser_name;
  int ser_n = 9;
  std::optional<int> ser_order;
  ParamFlags ser_params;
  ser->add_option("--name", ser_name,
                  "t exp_lambda one_minus_exp_neg lah alpha central, or a Sheffer catalog sequence")
      ->required();
  ser->add_option("--n", ser_n)->check(CLI::NonNegativeNumber);
  ser->add_option("--order", ser_order)->check(CLI::NonNegativeNumber);
  ser_params.attach(ser);

  // verify
  auto* ver = app.add_subcommand("verify", "Run the identity suite");
  std::string suite = "all";
  SuiteOptions opts;
  ver->add_option("--suite", suite, "all, none, or comma-separated check ids");
  ver->add_option("--n", opts.n_max)->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", opts.seed);
  ver->add_option("--jobs", opts.jobs)->check(CLI::PositiveNumber);
  ver->add_option("--trials", opts.trials)->check(CLI::PositiveNumber);

  auto* lst = app.add_subcommand("list-sequences", "List catalog sequences");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (list_flag || lst->parsed()) {
      for (const auto& e : catalog_entries()) {
        std::string params;
        for (const auto& p : e.params) params += (params.empty() ? "" : ",") + p;
        std::cout << e.name << "\t" << (params.empty() ? "-" : params) << "\t" << e.description << "\n";
      }
      return 0;
    }

    if (tri->parsed()) {
      const FamilyId id = family_from_key(family);
      const auto fam = TriangleFamily::make(id, only(tri_params.resolve(), family_param_names(id)));
      const auto by_series = triangle_by_series(fam, tri_n, resolve_order(tri_order));
      if (!no_crosscheck) {
        const auto by_algebra = triangle_by_algebra(fam, tri_n);
        if (!(by_series.entries == by_algebra.entries)) {
          throw CrossCheckError("series and algebra routes disagree for family " + family);
        }
      }
      std::cout << (tri_format == "csv" ? triangle_csv(by_series.entries)
                                        : triangle_json(family, fam.params, by_series.entries));
      return 0;
    }

    if (as->parsed()) {
      const auto spec = catalog(seq, as_params.resolve());
      const int order = resolve_order(as_order);
      LowerTriangular t(0);
      if (kind == "t2") {
        const auto r = route.empty() ? T2Route::Explicit : t2_route_from_key(route);
        route = route_key(r);
        t = assoc_t2(spec, as_n, r, order);
      } else {
        const auto r = route.empty() ? T1Route::Solve : t1_route_from_key(route);
        route = route_key(r);
        t = assoc_t1(spec, as_n, r, order);
      }
      std::cout << (as_format == "csv" ? triangle_csv(t) : assoc_json(kind, seq, route, spec.params(), t));
      return 0;
    }

    if (conv->parsed()) {
      const Params p = conv_params.resolve();
      const auto coeffs = parse_list(coeff_text);
      const auto src = BasisId::of(basis_from_key(from), p.at("lambda"));
      const auto dst = BasisId::of(basis_from_key(to), p.at("lambda"));
      std::cout << join_trimmed(change_basis(coeffs, src, dst)) << "\n";
      return 0;
    }

    if (ser->parsed()) {
      const Params p = ser_params.resolve();
      int order = resolve_order(ser_order);
      if (order < 0) order = 2 * ser_n + 2;
      const Series f = named_delta(ser_name, order, p);
      if (!f.is_delta()) throw DomainError(ser_name + " is not a delta series");
      nlohmann::ordered_json out;
      out["series"] = ser_name;
      out["order"] = order;
      out["f"] = coeffs_json(f);
      out["f_bar"] = coeffs_json(comp_inverse(f));
      out["lc"] = coeffs_json(central_log(f));
      out["ec"] = coeffs_json(central_exp(f));
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (ver->parsed()) {
      opts.checks = parse_suite_filter(suite);
      const auto report = run_suite(opts);
      std::cout << report_json(report);
      return report.all_pass() ? 0 : kExitVerifyFailed;
    }

    std::cerr << app.help();
    return kExitUsage;
  } catch (const CrossCheckError& e) {
    std::cerr << "cross-check failure: " << e.what() << "\n";
    return kExitCrossCheck;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCrossCheck;
  }
}
