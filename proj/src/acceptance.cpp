#include "acceptance.hpp"

#include "closed_forms.hpp"
#include "cutoff.hpp"
#include "heatseries.hpp"
#include "moments.hpp"
#include "repchar.hpp"
#include "sampler.hpp"
#include "spaces.hpp"
#include "zonal.hpp"

#include <boost/random/uniform_real_distribution.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cutofflab {

namespace {

using json = nlohmann::json;

// Collects individual checks; the first failure becomes the summary line.
class Checks {
 public:
  void add(bool ok, const std::string& what, json detail = json::object()) {
    ++count_;
    if (!ok) {
      ++failed_;
      if (first_failure_.empty()) first_failure_ = what;
      detail["check"] = what;
      failures_.push_back(std::move(detail));
    }
  }
  void note(const std::string& key, json value) { extra_[key] = std::move(value); }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    if (ok())
      os << count_ << " checks held";
    else
      os << failed_ << " of " << count_ << " checks failed; first: " << first_failure_;
    return os.str();
  }
  json details() const {
    json d = extra_;
    d["checks"] = count_;
    d["failed"] = failed_;
    d["failures"] = failures_;
    return d;
  }

 private:
  long long count_ = 0, failed_ = 0;
  std::string first_failure_;
  json failures_ = json::array();
  json extra_ = json::object();
};

std::string space_label(const SpaceDescriptor& d) {
  std::string s = std::string(family_name(d.family)) + "(" + std::to_string(d.n);
  if (d.q) s += "," + std::to_string(*d.q);
  return s + ")";
}

int grassmannian_q(int n) { return std::min(2, n - 1); }

SpaceDescriptor space_at(Family f, int n) {
  bool grass = f == Family::GrR || f == Family::GrC || f == Family::GrH;
  return grass ? describe(f, n, grassmannian_q(n)) : describe(f, n);
}

const std::vector<Family> kQuotients = {Family::GrR,     Family::GrC,       Family::GrH,    Family::SO2n_Un,
                                        Family::SUn_SOn, Family::SU2n_USpn, Family::USpn_Un};
const std::vector<Family> kAllFamilies = {Family::SO,      Family::SU,      Family::USp,       Family::GrR,
                                          Family::GrC,     Family::GrH,     Family::SO2n_Un,   Family::SUn_SOn,
                                          Family::SU2n_USpn, Family::USpn_Un};

// Semistandard tableaux of the given shape with entries 1..n, by direct
// backtracking over the cells in row-major order.
long long count_tableaux(const std::vector<int>& shape, int n) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(shape.size()); ++r)
    for (int c = 0; c < shape[static_cast<size_t>(r)]; ++c) cells.push_back({r, c});
  std::vector<std::vector<int>> fill(shape.size());
  for (size_t r = 0; r < shape.size(); ++r) fill[r].assign(static_cast<size_t>(shape[r]), 0);
  long long count = 0;
  std::function<void(size_t)> place = [&](size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
    for (int v = lo; v <= n; ++v) {
      fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      place(idx + 1);
    }
  };
  place(0);
  return count;
}

std::vector<int> true_parts(const Weight& w) {
  std::vector<int> p;
  for (int v : w.parts2) p.push_back(v / 2);
  return p;
}

void criterion_dimension_oracle(Checks& c) {
  long long weights = 0;
  for (int n = 2; n <= 5; ++n) {
    SpaceDescriptor d = describe(Family::SU, n);
    for (const Weight& w : enumerate_weights(indexing_set(d), 6)) {
      ++weights;
      long long brute = count_tableaux(true_parts(w), n);
      Rational dim = dimension(d, w);
      c.add(dim == Rational(brute), "SU(" + std::to_string(n) + ") " + w.str(),
            {{"formula", to_string(dim)}, {"tableaux", brute}});
    }
  }
  c.note("weights", weights);
}

void criterion_catalan(Checks& c) {
  for (int n = 3; n <= 10; ++n) {
    SpaceDescriptor d = describe(Family::USp, n);
    Weight w = make_weight(std::vector<int>(static_cast<size_t>(n), 1), WeightKind::Y);
    BigInt catalan = 1;
    for (int i = 0; i < n + 1; ++i) catalan = catalan * (2 * (n + 1) - i) / (i + 1);
    catalan /= (n + 2);
    Rational dim = dimension(d, w);
    c.add(dim == Rational(catalan), "USp(" + std::to_string(n) + ") (1^n)",
          {{"dimension", to_string(dim)}, {"catalan", catalan.str()}});
  }
}

void criterion_minimal_weight(Checks& c) {
  json rows = json::array();
  std::vector<std::pair<Family, int>> cases = {{Family::SO, 10}, {Family::SO, 11}, {Family::SO, 13},
                                               {Family::SO, 14}, {Family::SU, 2},  {Family::SU, 5},
                                               {Family::USp, 3}, {Family::USp, 6}};
  for (auto [f, n] : cases) {
    SpaceDescriptor d = describe(f, n);
    MinimalWeight table = minimal_weight(d);
    std::optional<Rational> best;
    std::vector<Weight> argmins;
    for (const Weight& w : enumerate_weights(indexing_set(d), 6)) {
      if (w.is_zero()) continue;
      Rational b = casimir_exponent(d, w);
      if (!best || b < *best) {
        best = b;
        argmins = {w};
      } else if (b == *best) {
        argmins.push_back(w);
      }
    }
    bool found = std::find(argmins.begin(), argmins.end(), table.weight) != argmins.end();
    json names = json::array();
    for (const auto& w : argmins) names.push_back(w.str());
    rows.push_back({{"space", space_label(d)}, {"table", table.weight.str()}, {"brute_force", names},
                    {"b_min", to_string(*best)}});
    c.add(found && *best == table.b_min, space_label(d) + " minimal weight",
          {{"table", table.weight.str()}, {"brute_force", names}});
  }
  c.note("cases", rows);
}

void criterion_per_term(Checks& c) {
  json rows = json::array();
  auto check = [&](const SpaceDescriptor& d, bool include_half, const Rational& bound, const std::string& tag) {
    SweepReport r = bound_sweep(d, 40, include_half);
    bool exact = per_term_within(d, r.argmax, bound);
    bool ok = exact && r.max_value <= to_double(bound) * (1 + 1e-12);
    rows.push_back({{"space", space_label(d)}, {"claim", tag}, {"max", r.max_value}, {"argmax", r.argmax.str()},
                    {"bound", to_string(bound)}, {"holds", ok}});
    c.add(ok, space_label(d) + " max " + std::to_string(r.max_value) + " vs " + tag,
          {{"max", r.max_value}, {"argmax", r.argmax.str()}, {"bound", to_string(bound)}});
    return r;
  };
  for (int n = 3; n <= 12; ++n) {
    SpaceDescriptor d = describe(Family::USp, n);
    check(d, false, Rational(14, 3), "14/3");
    SweepReport r = check(d, false, Rational(8, 3), "8/3");
    std::vector<int> expected(static_cast<size_t>(n), 0);
    expected[0] = 2;
    expected[1] = 1;
    Weight arg = make_weight(expected, WeightKind::Y);
    c.add(r.argmax == arg, space_label(d) + " argmax " + r.argmax.str() + " vs " + arg.str());
  }
  for (int m = 5; m <= 12; ++m) check(describe(Family::SO, 2 * m + 1), false, Rational(11, 10), "11/10");
  for (int m = 5; m <= 12; ++m) check(describe(Family::SO, 2 * m), true, Rational(4, 3), "4/3");
  for (int n = 2; n <= 12; ++n) check(describe(Family::SU, n), false, Rational(3, 2), "3/2");
  c.note("sweeps", rows);
}

void criterion_series(Checks& c) {
  json rows = json::array();
  auto check = [&](const SpaceDescriptor& d, double eps, double bound, const std::string& tag) {
    TruncationReport r = dominating_series(d, time_at_eps(d, eps));
    double total = r.partial_sum + r.tail_bound;
    bool ok = r.controllable && total <= bound;
    rows.push_back({{"space", space_label(d)}, {"eps", eps}, {"certified_sum", total}, {"bound", bound},
                    {"claim", tag}, {"holds", ok}});
    c.add(ok, space_label(d) + " eps=" + std::to_string(eps) + " " + tag,
          {{"certified_sum", total}, {"bound", bound}, {"controllable", r.controllable}});
  };
  for (double eps : {0.5, 1.0}) {
    for (int n : {3, 6, 9}) check(describe(Family::USp, n), eps, 36 / std::pow(n, eps), "36/n^eps");
    for (int m : {5, 8, 11})
      check(describe(Family::SO, 2 * m + 1), eps, 144 / std::pow(2 * m + 1, eps), "144/(2n+1)^eps");
    for (int n : {2, 5, 8}) check(describe(Family::SU, n), eps, 400 / std::pow(n, 2 * eps), "400/n^(2eps)");
    for (Family f : kQuotients) {
      const int n0 = space_at(f, 4).n0;
      for (int n : {n0, n0 + 3, n0 + 6}) {
        SpaceDescriptor d = space_at(f, n);
        check(d, eps, 16 / std::pow(cutoff_param(d), eps / 2), "16/param^(eps/2)");
      }
    }
  }
  c.note("series", rows);
}

void criterion_moments(Checks& c) {
  json rows = json::array();
  const std::vector<double> times = {0.1, 1.0, 3.0};
  for (Algebra a : {Algebra::so, Algebra::su, Algebra::usp}) {
    for (int n = a == Algebra::so ? 4 : 3; n <= 6; ++n) {
      double worst = 0;
      long long count = 0;
      for (const auto& r : check_closed_forms(a, n, times)) {
        ++count;
        worst = std::max(worst, r.abs_error);
        c.add(r.abs_error <= 1e-9, std::string(algebra_name(a)) + "(" + std::to_string(n) + ") " + r.label +
                                       " t=" + std::to_string(r.t),
              {{"engine", r.engine}, {"closed", r.closed}, {"abs_error", r.abs_error}});
      }
      rows.push_back({{"algebra", algebra_name(a)}, {"n", n}, {"moments", count}, {"max_abs_error", worst}});
    }
  }
  c.note("moments", rows);
}

void criterion_eigentables(Checks& c) {
  struct Case {
    Algebra a;
    int n, k, l;
  };
  std::vector<Case> cases;
  for (int n : {4, 5}) {
    cases.push_back({Algebra::so, n, 2, 0});
    cases.push_back({Algebra::so, n, 4, 0});
    cases.push_back({Algebra::su, n, 1, 1});
    cases.push_back({Algebra::su, n, 2, 2});
    cases.push_back({Algebra::usp, n, 2, 0});
  }
  cases.push_back({Algebra::usp, 3, 4, 0});
  json rows = json::array();
  for (const auto& cs : cases) {
    EigenTableReport r = verify_eigentable(cs.a, cs.n, cs.k, cs.l);
    long long total = 0;
    for (const auto& row : r.rows) total += row.computed_mult;
    long long expected = 1;
    for (int i = 0; i < cs.k + cs.l; ++i) expected *= defining_dim(cs.a, cs.n);
    std::string tag = std::string(algebra_name(cs.a)) + "(" + std::to_string(cs.n) + ") k=" +
                      std::to_string(cs.k) + " l=" + std::to_string(cs.l);
    c.add(r.passed, tag + " table");
    c.add(total == expected, tag + " multiplicities sum to d^(k+l)", {{"sum", total}, {"expected", expected}});
    rows.push_back(to_json(r));
  }
  c.note("tables", rows);
}

void criterion_zonal(Checks& c) {
  json rows = json::array();
  for (Family f : kQuotients) {
    const int n0 = space_at(f, 4).n0;
    for (int n : {n0, n0 + 3}) {
      SpaceDescriptor d = space_at(f, n);
      const ZonalForm z = zonal_form(d);
      MomentEngine engine(z.algebra, z.algebra_n);
      auto terms = zonal_square_expansion(d);
      Rational sum = 0, constant = 0;
      for (const auto& t : terms) {
        sum += t.coefficient;
        if (t.weight.is_zero()) constant = t.coefficient;
      }
      const Rational dmin = minimal_weight(d).a_min;
      c.add(sum == 1, space_label(d) + " coefficients sum to 1", {{"sum", to_string(sum)}});
      c.add(constant * dmin == 1, space_label(d) + " constant term 1/D",
            {{"constant", to_string(constant)}, {"D", to_string(dmin)}});
      double worst = 0;
      for (double t : {0.2, 1.0, 2.0}) {
        double eng = zonal_square_engine(d, t, &engine);
        double ser = zonal_square_series(d, t);
        worst = std::max(worst, std::abs(eng - ser));
        c.add(std::abs(eng - ser) <= 1e-9, space_label(d) + " t=" + std::to_string(t),
              {{"engine", eng}, {"expansion", ser}});
      }
      rows.push_back({{"space", space_label(d)}, {"terms", terms.size()}, {"max_abs_error", worst}});
    }
  }
  c.note("spaces", rows);
}

void criterion_square_identity(Checks& c) {
  Rng rng = path_rng(20240501, 9);
  boost::random::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  boost::random::uniform_real_distribution<double> half(0.0, std::numbers::pi);
  json rows = json::array();
  for (LieType type : {LieType::A, LieType::B, LieType::C, LieType::D}) {
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const int r = 2 + trial % 5;
      std::vector<double> th;
      // regular alphabets: distinct eigenvalues, away from the walls
      while (true) {
        th.clear();
        if (type == LieType::A) {
          double total = 0;
          for (int i = 0; i < r - 1; ++i) {
            th.push_back(angle(rng));
            total += th.back();
          }
          th.push_back(-total);
          for (double& x : th) x = std::remainder(x, 2 * std::numbers::pi);
        } else {
          for (int i = 0; i < r; ++i) th.push_back(half(rng));
        }
        std::vector<double> s = th;
        std::sort(s.begin(), s.end());
        double gap = 1;
        for (size_t i = 1; i < s.size(); ++i) gap = std::min(gap, s[i] - s[i - 1]);
        if (type != LieType::A) gap = std::min({gap, s.front(), std::numbers::pi - s.back()});
        if (type == LieType::A) gap = std::min(gap, 2 * std::numbers::pi - (s.back() - s.front()));
        if (gap > 1e-3) break;
      }
      std::vector<cplx> alphabet;
      for (double x : th) alphabet.push_back(std::polar(1.0, x));
      double res = square_identity_residual(type, alphabet);
      worst = std::max(worst, res);
      c.add(res <= 1e-10, std::string("type ") + lie_type_char(type) + " trial " + std::to_string(trial),
            {{"residual", res}});
    }
    rows.push_back({{"type", std::string(1, lie_type_char(type))}, {"max_residual", worst}});
  }
  c.note("types", rows);
}

void criterion_variance(Checks& c) {
  json rows = json::array();
  for (Family f : kAllFamilies) {
    const int n0 = space_at(f, 4).n0;
    for (int n : {n0, n0 + 5}) {
      SpaceDescriptor d = space_at(f, n);
      auto [lo, hi] = certified_window(d);
      double worst_ratio = 0;
      for (int i = 0; i < 50; ++i) {
        double t = lo + (hi - lo) * (i + 1) / 51.0;
        MeanVariance mv = mean_variance(d, t);
        double bound = variance_bound(d, t);
        worst_ratio = std::max(worst_ratio, mv.variance / bound);
        c.add(mv.variance <= bound && mv.variance >= -1e-12, space_label(d) + " t=" + std::to_string(t),
              {{"variance", mv.variance}, {"bound", bound}});
      }
      rows.push_back({{"space", space_label(d)}, {"max_variance_over_bound", worst_ratio}});
    }
  }
  c.note("spaces", rows);
}

void criterion_monte_carlo(Checks& c, int threads) {
  json rows = json::array();
  auto check = [&](const std::string& tag, const Estimate& e, double exact) {
    double z = std::abs(e.mean - cplx(exact, 0)) / e.std_error;
    rows.push_back({{"case", tag}, {"estimate", e.mean.real()}, {"std_error", e.std_error}, {"exact", exact},
                    {"z", z}});
    c.add(z <= 4, tag, {{"estimate", e.mean.real()}, {"std_error", e.std_error}, {"exact", exact}});
  };
  PathConfig cfg;
  cfg.paths = 20000;
  cfg.seed = 11;
  cfg.threads = threads;
  cfg.t_final = 1.0;
  SpaceDescriptor su5 = describe(Family::SU, 5);
  // E_1[tr] = 5 e^{-B/2} with B = 24/25 for the defining representation
  const double su5_mean = mean_variance(su5, 1.0).mean;
  Estimate trace = estimate(su5, "trace", false, cfg);
  check("SU(5) E[tr g_1]", trace, su5_mean);
  const double halved = 5 * std::exp(-12.0 / 25 / 2);
  c.note("su5_halved_exponent", {{"value", halved}, {"z", std::abs(trace.mean.real() - halved) / trace.std_error}});
  check("SU(5) Haar E[|tr|^2]", estimate(su5, "abs2", true, cfg), 1.0);
  SpaceDescriptor so6 = describe(Family::SO, 6);
  double closed = 0;
  for (const auto& f : closed_forms(Algebra::so))
    if (f.pattern == "g(1,1)^2") closed = f.value(6, 1.0);
  check("SO(6) E[g_11^2] at t=1", estimate(so6, "moment:g(1,1)^2", false, cfg), closed);
  c.note("estimates", rows);
}

void criterion_profile(Checks& c) {
  json rows = json::array();
  for (int n : {10, 20}) {
    SpaceDescriptor d = describe(Family::SO, n);
    const double t_low = 2 * 0.8 * std::log(n);
    const double t_high = 2 * 2.0 * std::log(n);
    std::vector<double> grid = default_profile_grid(d, 41);
    grid.push_back(t_low);
    grid.push_back(t_high);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    auto points = profile(d, grid);
    double lower = 0, upper = 1;
    bool monotone = true;
    for (size_t i = 0; i < points.size(); ++i) {
      if (points[i].t == t_low) lower = points[i].lower;
      if (points[i].t == t_high) upper = points[i].upper;
      if (i > 0 && points[i].upper > points[i - 1].upper) monotone = false;
    }
    const double lower_claim = 1 - 36 / std::pow(n, 0.4);
    const double upper_claim = 6 / std::pow(n, 0.5);
    c.add(lower >= lower_claim, space_label(d) + " lower at eps=0.2", {{"lower", lower}, {"claim", lower_claim}});
    c.add(upper <= upper_claim, space_label(d) + " upper at eps=1", {{"upper", upper}, {"claim", upper_claim}});
    c.add(monotone, space_label(d) + " upper column non-increasing");
    rows.push_back({{"space", space_label(d)}, {"lower_at_eps_0.2", lower}, {"lower_claim", lower_claim},
                    {"upper_at_eps_1", upper}, {"upper_claim", upper_claim}, {"points", points.size()}});
  }
  c.note("profiles", rows);
}

struct CriterionInfo {
  const char* name;
  double budget;
};

const CriterionInfo kInfo[kCriterionCount] = {
    {"dimension oracle", 5},         {"Catalan dimensions", 1},  {"minimal-weight oracle", 10},
    {"per-term bounds at cut-off", 60}, {"series bounds", 120},   {"moment closed forms", 600},
    {"eigen-tables", 600},           {"zonal-square consistency", 300}, {"character identities", 5},
    {"variance bounds", 5},          {"Monte Carlo concordance", 300},  {"profile reproduction", 120},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) fail(Status::InvalidArgument, "criterion ids run from 1 to 12");
  const CriterionInfo& info = kInfo[id - 1];
  Checks c;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: criterion_dimension_oracle(c); break;
      case 2: criterion_catalan(c); break;
      case 3: criterion_minimal_weight(c); break;
      case 4: criterion_per_term(c); break;
      case 5: criterion_series(c); break;
      case 6: criterion_moments(c); break;
      case 7: criterion_eigentables(c); break;
      case 8: criterion_zonal(c); break;
      case 9: criterion_square_identity(c); break;
      case 10: criterion_variance(c); break;
      case 11: criterion_monte_carlo(c, options.threads); break;
      case 12: criterion_profile(c); break;
    }
  } catch (const Error& e) {
    c.add(false, std::string("error ") + status_name(e.status()) + ": " + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_budget = seconds <= info.budget;
  std::string summary = c.summary();
  if (!in_budget) summary += "; exceeded the time budget";
  json details = c.details();
  details["within_budget"] = in_budget;
  return {id, info.name, c.ok() && in_budget, seconds, info.budget, summary, details};
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end())
      continue;
    out.push_back(run_criterion(id, options));
  }
  return out;
}

json to_json(const CriterionResult& r) {
  return {{"id", r.id},           {"name", r.name},           {"passed", r.passed},
          {"seconds", r.seconds}, {"budget_seconds", r.budget_seconds}, {"summary", r.summary},
          {"details", r.details}};
}

json to_json(const std::vector<CriterionResult>& results) {
  json arr = json::array();
  bool all = true;
  for (const auto& r : results) {
    arr.push_back(to_json(r));
    all = all && r.passed;
  }
  return {{"criteria", arr}, {"all_passed", all}};
}

}  // namespace cutofflab
