#include "cutofflab/cutofflab.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Raised for library failures; carries the status and message.
struct ApiError {
  cl_status status;
  std::string message;
};

struct UsageError {
  std::string message;
};

// A verification that ran but did not hold: the report is still printed.
struct VerificationFailed {
  json report;
};

void check(cl_status s) {
  if (s != CL_OK) throw ApiError{s, cl_last_error()};
}

json take_json(char* raw) {
  std::unique_ptr<char, void (*)(char*)> guard(raw, cl_free);
  return json::parse(raw);
}

std::string take_string(char* raw) {
  std::unique_ptr<char, void (*)(char*)> guard(raw, cl_free);
  return raw;
}

struct SpaceHandle {
  cl_space* ptr = nullptr;
  ~SpaceHandle() { cl_space_destroy(ptr); }
};

struct Args {
  std::string family;
  int n = 0;
  int q = 0;
  double t = 0;
  double eps = 0;
  int cap = 0;
  int steps = 0;
  long long paths = 1000;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string format = "json";
  std::string out;
  std::string algebra;
  int k = 2;
  int l = 0;
  std::string pattern;
  std::string weight = "0";
  std::string statistic = "omega";
  bool haar = false;
  bool circle = false;
  std::vector<double> angles;
  std::vector<double> zonal;
  std::vector<double> times;
  double theta = 0;
  double threshold = 0;
  std::string config;

  CLI::Option* t_opt = nullptr;
  CLI::Option* eps_opt = nullptr;
};

bool given(const CLI::Option* o) { return o && o->count() > 0; }

void add_space(CLI::App* cmd, Args& a, bool required = true) {
  auto* f = cmd->add_option("--family", a.family, "SO, SU, USp, GrR, GrC, GrH, SO2n_Un, SUn_SOn, SU2n_USpn, USpn_Un");
  auto* n = cmd->add_option("--n", a.n, "rank parameter n");
  if (required) {
    f->required();
    n->required();
  }
  cmd->add_option("--q", a.q, "Grassmannian q");
}

void add_output(CLI::App* cmd, Args& a) {
  cmd->add_option("--format", a.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", a.out, "write output to this path instead of stdout");
}

void add_time(CLI::App* cmd, Args& a) {
  a.t_opt = cmd->add_option("--t", a.t, "time");
  a.eps_opt = cmd->add_option("--eps", a.eps, "time as alpha (1 + eps) log(param)");
}

SpaceHandle open_space(const Args& a) {
  SpaceHandle h;
  check(cl_space_create(a.family.c_str(), a.n, a.q, &h.ptr));
  return h;
}

json describe(const SpaceHandle& h) {
  char* raw = nullptr;
  check(cl_space_describe(h.ptr, &raw));
  return take_json(raw);
}

double resolve_time(const Args& a, const SpaceHandle& h) {
  if (given(a.t_opt) && given(a.eps_opt)) throw UsageError{"--t and --eps are mutually exclusive"};
  if (given(a.t_opt)) return a.t;
  if (given(a.eps_opt)) return (1 + a.eps) * describe(h)["cutoff_time"].get<double>();
  throw UsageError{"one of --t or --eps is required"};
}

void require_json_format(const Args& a, const char* verb) {
  if (a.format != "json") throw UsageError{std::string("--format csv is not available for ") + verb};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string run_verb(const std::string& verb, Args& a) {
  if (verb == "describe") {
    require_json_format(a, "describe");
    SpaceHandle h = open_space(a);
    char* raw = nullptr;
    check(cl_space_minimal_weight(h.ptr, &raw));
    return json{{"space", describe(h)}, {"minimal_weight", take_json(raw)}}.dump(2);
  }
  if (verb == "enumerate") {
    SpaceHandle h = open_space(a);
    char* raw = nullptr;
    check(cl_enumerate(h.ptr, a.cap > 0 ? a.cap : 6, &raw));
    json arr = take_json(raw);
    if (a.format == "json") return arr.dump(2);
    std::string csv = "weight,dimension,casimir,sign_multiplicity\n";
    for (const auto& r : arr)
      csv += csv_field(r["weight"].get<std::string>()) + "," + r["dimension"].get<std::string>() + "," +
             r["casimir"].get<std::string>() + "," + std::to_string(r["sign_multiplicity"].get<int>()) + "\n";
    return csv;
  }
  if (verb == "series") {
    require_json_format(a, "series");
    SpaceHandle h = open_space(a);
    double t = resolve_time(a, h);
    char* raw = nullptr;
    check(cl_dominating_series(h.ptr, t, a.cap, &raw));
    json j = take_json(raw);
    double tv = 0;
    check(cl_tv_upper_bound(h.ptr, t, &tv));
    j["tv_upper_bound"] = tv;
    return j.dump(2);
  }
  if (verb == "tv-bound") {
    require_json_format(a, "tv-bound");
    SpaceHandle h = open_space(a);
    double t = resolve_time(a, h);
    double v = 0;
    check(cl_tv_upper_bound(h.ptr, t, &v));
    json j = {{"t", t}, {"value", v}};
    if (given(a.eps_opt)) j["eps"] = a.eps;
    return j.dump(2);
  }
  if (verb == "bound-sweep") {
    require_json_format(a, "bound-sweep");
    SpaceHandle h = open_space(a);
    char* raw = nullptr;
    check(cl_bound_sweep(h.ptr, a.cap > 0 ? a.cap : 40, &raw));
    return take_json(raw).dump(2);
  }
  if (verb == "eta") {
    require_json_format(a, "eta");
    SpaceHandle h = open_space(a);
    double t0 = given(a.t_opt) ? a.t : std::numeric_limits<double>::quiet_NaN();
    double v = 0;
    check(cl_eta(h.ptr, a.weight.c_str(), a.l, a.k, t0, &v));
    return json{{"base", a.weight}, {"l", a.l}, {"k", a.k}, {"value", v}}.dump(2);
  }
  if (verb == "density") {
    require_json_format(a, "density");
    if (!given(a.t_opt)) throw UsageError{"--t is required"};
    double v = 0;
    if (a.circle) {
      check(cl_density_circle(a.theta, a.t, a.cap, &v));
      return json{{"space", "circle"}, {"theta", a.theta}, {"t", a.t}, {"value", v}}.dump(2);
    }
    if (a.family.empty()) throw UsageError{"--family is required unless --circle is given"};
    SpaceHandle h = open_space(a);
    if (!a.zonal.empty())
      check(cl_density_rank_one(h.ptr, a.zonal.data(), a.zonal.size(), a.t, &v));
    else
      check(cl_density(h.ptr, a.angles.data(), a.angles.size(), a.t, a.cap, &v));
    return json{{"t", a.t}, {"value", v}}.dump(2);
  }
  if (verb == "moment") {
    require_json_format(a, "moment");
    if (!given(a.t_opt)) throw UsageError{"--t is required"};
    double re = 0, im = 0;
    check(cl_moment(a.algebra.c_str(), a.n, a.pattern.c_str(), a.t, &re, &im));
    return json{{"algebra", a.algebra}, {"n", a.n}, {"pattern", a.pattern}, {"t", a.t}, {"re", re}, {"im", im}}
        .dump(2);
  }
  if (verb == "eigentable") {
    require_json_format(a, "eigentable");
    char* raw = nullptr;
    check(cl_eigentable(a.algebra.c_str(), a.n, a.k, a.l, &raw));
    json j = take_json(raw);
    if (!j["passed"].get<bool>()) throw VerificationFailed{j};
    return j.dump(2);
  }
  if (verb == "zonal-expansion") {
    require_json_format(a, "zonal-expansion");
    SpaceHandle h = open_space(a);
    char* raw = nullptr;
    check(cl_zonal_expansion(h.ptr, &raw));
    return take_json(raw).dump(2);
  }
  if (verb == "simulate") {
    require_json_format(a, "simulate");
    SpaceHandle h = open_space(a);
    double t = a.haar ? -1.0 : resolve_time(a, h);
    char* raw = nullptr;
    check(cl_simulate(h.ptr, t, a.steps, a.seed, &raw));
    return take_json(raw).dump(2);
  }
  if (verb == "estimate") {
    require_json_format(a, "estimate");
    if (!a.config.empty()) {
      std::ifstream in(a.config);
      if (!in) throw UsageError{"cannot read --config " + a.config};
      json c;
      try {
        c = json::parse(in);
      } catch (const json::exception& e) {
        throw UsageError{std::string("invalid --config: ") + e.what()};
      }
      a.family = c.value("family", a.family);
      a.n = c.value("n", a.n);
      a.q = c.value("q", a.q);
      if (c.contains("t")) {
        a.t = c["t"].get<double>();
        a.haar = false;
      }
      if (c.value("haar", false)) a.haar = true;
      a.steps = c.value("steps", a.steps);
      a.paths = c.value("paths", a.paths);
      a.seed = c.value("seed", a.seed);
      a.statistic = c.value("statistic", a.statistic);
      a.threshold = c.value("threshold", a.threshold);
      if (c.contains("t")) a.t_opt = nullptr;
    }
    if (a.family.empty() || a.n == 0) throw UsageError{"--family and --n are required"};
    SpaceHandle h = open_space(a);
    double t = a.haar ? -1.0 : (a.t_opt ? resolve_time(a, h) : a.t);
    if (a.paths > std::numeric_limits<int>::max()) throw UsageError{"--paths is too large"};
    char* raw = nullptr;
    check(cl_estimate(h.ptr, a.statistic.c_str(), t, a.steps, static_cast<int>(a.paths), a.seed, a.threads,
                      a.threshold, &raw));
    return take_json(raw).dump(2);
  }
  if (verb == "profile") {
    SpaceHandle h = open_space(a);
    char* raw = nullptr;
    check(cl_profile(h.ptr, a.times.data(), a.times.size(), &raw));
    json pts = take_json(raw);
    if (a.format == "json") return pts.dump(2);
    std::string csv = "t,lower,upper\n";
    for (const auto& p : pts)
      csv += fmt(p["t"].get<double>()) + "," + fmt(p["lower"].get<double>()) + "," + fmt(p["upper"].get<double>()) +
             "\n";
    return csv;
  }
  if (verb == "verify-all") {
    require_json_format(a, "verify-all");
    char* raw = nullptr;
    int all = 0;
    check(cl_verify_all(a.threads, &raw, &all));
    json j = take_json(raw);
    for (const auto& c : j["criteria"])
      std::cerr << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["id"].get<int>() << " "
                << c["name"].get<std::string>() << ": " << c["summary"].get<std::string>() << "\n";
    if (!all) throw VerificationFailed{j};
    return j.dump(2);
  }
  throw UsageError{"unknown verb " + verb};
}

void emit(const Args& a, const std::string& text) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (a.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(a.out, std::ios::binary);
  if (!f) throw UsageError{"cannot write --out " + a.out};
  f << body;
}

bool is_input_error(cl_status s) {
  switch (s) {
    case CL_ERR_UNKNOWN_FAMILY:
    case CL_ERR_INVALID_RANK:
    case CL_ERR_WEIGHT_KIND_MISMATCH:
    case CL_ERR_UNSUPPORTED_SPACE:
    case CL_ERR_UNSUPPORTED_PATTERN:
    case CL_ERR_UNSUPPORTED_STATISTIC:
    case CL_ERR_FIELD_MISMATCH:
    case CL_ERR_HALF_PARTITION_UNSUPPORTED:
    case CL_ERR_INVALID_ARGUMENT: return true;
    default: return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heat-kernel series, cut-off bounds, moments and Monte Carlo checks for compact groups and "
               "symmetric spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cl_version());
  Args a;

  struct Verb {
    const char* name;
    const char* help;
  };
  const std::vector<Verb> verbs = {
      {"describe", "family constants, cut-off time and minimal weight"},
      {"enumerate", "weights of the indexing set with dimension and Casimir exponent"},
      {"series", "dominating series with certified tail at --t or --eps"},
      {"tv-bound", "total-variation upper bound at --t or --eps"},
      {"bound-sweep", "maximum per-term quantity at the cut-off time"},
      {"eta", "growth-step quotient for --weight, --l, --k"},
      {"density", "heat-kernel density of a group, a rank-one space or the circle"},
      {"moment", "exact moment of matrix coefficients"},
      {"eigentable", "diagonalize the tensor Casimir generator and check its table"},
      {"zonal-expansion", "expansion of the squared minimal spherical function"},
      {"simulate", "one Brownian or Haar sample"},
      {"estimate", "Monte Carlo estimate of a statistic"},
      {"profile", "lower and upper bounds on a time grid"},
      {"verify-all", "run every acceptance criterion"},
  };
  for (const auto& v : verbs) {
    CLI::App* cmd = app.add_subcommand(v.name, v.help);
    const std::string name = v.name;
    add_output(cmd, a);
    cmd->add_option("--threads", a.threads, "worker threads (default: CUTOFFLAB_THREADS or all cores)");
    if (name == "moment" || name == "eigentable") {
      cmd->add_option("--algebra", a.algebra, "so, su or usp")->required();
      cmd->add_option("--n", a.n, "rank parameter n")->required();
      if (name == "moment") {
        cmd->add_option("--pattern", a.pattern, "monomials such as 'g(1,1)^2 gbar(2,2)'")->required();
        add_time(cmd, a);
      } else {
        cmd->add_option("--k", a.k, "number of g slots");
        cmd->add_option("--l", a.l, "number of conjugate slots");
      }
      continue;
    }
    if (name == "verify-all") continue;
    add_space(cmd, a, name != "density" && name != "estimate");
    if (name == "series" || name == "tv-bound" || name == "simulate" || name == "estimate" || name == "eta" ||
        name == "density")
      add_time(cmd, a);
    if (name == "series" || name == "bound-sweep" || name == "enumerate" || name == "density")
      cmd->add_option("--cap", a.cap, "size cap of the weight sweep");
    if (name == "eta") {
      cmd->add_option("--weight", a.weight, "base weight, e.g. 2,1");
      cmd->add_option("--l", a.l, "rows raised")->required();
      cmd->add_option("--k", a.k, "amount raised")->required();
    }
    if (name == "density") {
      cmd->add_option("--angles", a.angles, "eigenvalue angles")->delimiter(',');
      cmd->add_option("--zonal", a.zonal, "spherical function values for rank-one spaces")->delimiter(',');
      cmd->add_flag("--circle", a.circle, "density of the circle group");
      cmd->add_option("--theta", a.theta, "angle on the circle");
    }
    if (name == "simulate" || name == "estimate") {
      cmd->add_flag("--haar", a.haar, "sample Haar measure instead of the Brownian law");
      cmd->add_option("--steps", a.steps, "integration steps (default: h = 0.01)");
      cmd->add_option("--seed", a.seed, "random seed");
    }
    if (name == "estimate") {
      cmd->add_option("--paths", a.paths, "number of samples");
      cmd->add_option("--statistic", a.statistic,
                      "trace, omega, zonal_min, abs2, indicator (with --threshold), moment:<pattern>");
      cmd->add_option("--threshold", a.threshold, "threshold a of the indicator |Omega| >= a");
      cmd->add_option("--config", a.config, "JSON file {family, n, q, t, steps, paths, seed, statistic}");
    }
    if (name == "profile") cmd->add_option("--times", a.times, "increasing time grid")->delimiter(',');
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string verb = chosen->get_name();
  // Every subcommand registers its own --t and --eps; keep the chosen ones.
  a.t_opt = chosen->get_option_no_throw("--t");
  a.eps_opt = chosen->get_option_no_throw("--eps");
  try {
    emit(a, run_verb(verb, a));
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << json{{"error", "usage"}, {"message", e.message}}.dump() << "\n";
    return kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << json{{"error", cl_status_name(e.status)}, {"message", e.message}}.dump() << "\n";
    return is_input_error(e.status) ? kExitUsage : kExitFailed;
  } catch (const VerificationFailed& e) {
    try {
      emit(a, e.report.dump(2));
    } catch (const UsageError& u) {
      std::cerr << json{{"error", "usage"}, {"message", u.message}}.dump() << "\n";
    }
    std::cerr << json{{"error", "verification failed"}}.dump() << "\n";
    return kExitFailed;
  }
}
