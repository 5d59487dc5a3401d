#include "cfnum/report.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cfnum/errors.hpp"

namespace cfnum {

using ordered_json = nlohmann::ordered_json;

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "orthogonality", "inverse_relations", "closed_forms", "recurrences",
      "sum_rule",      "routes",            "quadruple_sums",
  };
  return ids;
}

std::vector<std::string> parse_suite_filter(std::string_view text) {
  if (text == "all") return check_ids();
  std::vector<std::string> out;
  if (text.empty() || text == "none") return out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (std::find(check_ids().begin(), check_ids().end(), item) == check_ids().end()) {
      throw UsageError("unknown check '" + item + "'");
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  // Report order follows check_ids(), not the order given on the command line.
  std::vector<std::string> ordered;
  for (const auto& id : check_ids()) {
    if (std::find(out.begin(), out.end(), id) != out.end()) ordered.push_back(id);
  }
  return ordered;
}

bool SuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed(); });
}

namespace {

using Task = std::function<std::vector<IdentityCheck>()>;

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<IdentityCheck> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<std::vector<IdentityCheck>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  std::vector<IdentityCheck> out;
  for (auto& r : results) {
    for (auto& c : r) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

SuiteReport run_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.options = options;
  report.params = default_params();
  report.extra_lambdas = {Rational(1)};

  struct Setting {
    Params params;
    std::string suffix;
    bool lambda_only;
  };
  std::vector<Setting> settings = {{report.params, "", false}};
  for (const auto& lam : report.extra_lambdas) {
    Params p = report.params;
    p["lambda"] = lam;
    settings.push_back({p, "[lambda=" + to_string(lam) + "]", true});
  }

  std::vector<Task> tasks;
  const int n = options.n_max;
  for (const auto& id : options.checks) {
    std::uint64_t salt = 0;
    for (const auto& setting : settings) {
      for (const auto& entry : catalog_entries()) {
        ++salt;
        const bool uses_lambda =
            std::find(entry.params.begin(), entry.params.end(), "lambda") != entry.params.end();
        if (setting.lambda_only && !uses_lambda) continue;
        if (id == "quadruple_sums") continue;
        const std::string label = entry.name + setting.suffix;
        const Params params = setting.params;
        const std::uint64_t seed = mix(options.seed, salt);
        const int trials = options.trials;
        tasks.push_back([id, label, params, name = entry.name, n, seed, trials]() {
          const auto spec = catalog(name, params);
          IdentityCheck c;
          if (id == "orthogonality") c = check_orthogonality(spec, n);
          else if (id == "inverse_relations") c = check_inverse_relations(spec, n, trials, seed);
          else if (id == "closed_forms") c = check_closed_forms(spec, n);
          else if (id == "recurrences") c = check_recurrences(spec, n);
          else if (id == "sum_rule") c = check_sum_rule(spec, n);
          else c = check_routes(spec, n);
          c.sequence = label;
          return std::vector<IdentityCheck>{c};
        });
      }
      if (id == "closed_forms" && !setting.lambda_only) {
        tasks.push_back([n]() { return std::vector<IdentityCheck>{check_tl_compositions(n)}; });
      }
      if (id == "quadruple_sums") {
        const Params params = setting.params;
        const std::uint64_t seed = mix(options.seed, ++salt);
        const std::string suffix = setting.suffix;
        const bool lambda_only = setting.lambda_only;
        tasks.push_back([params, seed, suffix, lambda_only, n]() {
          std::vector<IdentityCheck> out;
          for (auto& c : check_quadruple_sums(params, n, seed)) {
            if (lambda_only && c.sequence != "rising_lambda") continue;
            c.sequence += suffix;
            out.push_back(std::move(c));
          }
          return out;
        });
      }
    }
  }
  report.checks = run_tasks(tasks, options.jobs);
  return report;
}

namespace {

ordered_json params_json(const Params& params) {
  ordered_json out = ordered_json::object();
  for (const auto& [k, v] : params) out[k] = to_string(v);
  return out;
}

ordered_json rows_json(const LowerTriangular& t) {
  ordered_json rows = ordered_json::array();
  for (int n = 0; n <= t.n_max(); ++n) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k <= n; ++k) row.push_back(to_string(t.at(n, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string report_json(const SuiteReport& report) {
  ordered_json params = params_json(report.params);
  ordered_json extra = ordered_json::array();
  for (const auto& l : report.extra_lambdas) extra.push_back(to_string(l));
  params["extra_lambda"] = extra;
  params["n_max"] = report.options.n_max;
  params["seed"] = report.options.seed;
  params["trials"] = report.options.trials;
  params["checks"] = report.options.checks;

  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json j;
    j["id"] = c.id;
    j["sequence"] = c.sequence;
    j["status"] = c.passed() ? "pass" : "fail";
    if (c.witness) {
      const auto& w = *c.witness;
      j["witness"] = {{"n", w.n}, {"k", w.k}, {"lhs", to_string(w.lhs)}, {"rhs", to_string(w.rhs)}, {"detail", w.detail}};
    }
    checks.push_back(std::move(j));
  }

  ordered_json out;
  out["suite_version"] = kSuiteVersion;
  out["params"] = std::move(params);
  out["checks"] = std::move(checks);
  out["all_pass"] = report.all_pass();
  return out.dump(2) + "\n";
}

std::string triangle_json(const std::string& family, const Params& params, const LowerTriangular& t) {
  ordered_json out;
  out["family"] = family;
  out["params"] = params_json(params);
  out["n_max"] = t.n_max();
  out["rows"] = rows_json(t);
  return out.dump(2) + "\n";
}

std::string assoc_json(const std::string& kind, const std::string& sequence, const std::string& route,
                       const Params& params, const LowerTriangular& t) {
  ordered_json out;
  out["family"] = kind;
  out["sequence"] = sequence;
  out["kind"] = kind;
  out["route"] = route;
  out["params"] = params_json(params);
  out["n_max"] = t.n_max();
  out["rows"] = rows_json(t);
  return out.dump(2) + "\n";
}

std::string triangle_csv(const LowerTriangular& t) {
  std::string out = "n,k,value\n";
  for (int n = 0; n <= t.n_max(); ++n) {
    for (int k = 0; k <= n; ++k) {
      out += std::to_string(n) + "," + std::to_string(k) + ",\"" + to_string(t.at(n, k)) + "\"\n";
    }
  }
  return out;
}

}  // namespace cfnum
