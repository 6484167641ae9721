#include "heatseries.hpp"

#include <boost/math/tools/minima.hpp>

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>

namespace cutofflab {

namespace {

Weight filled(const IndexingSet& set, int rows, int unit2) {
  std::vector<int> p2(static_cast<size_t>(set.length), 0);
  for (int i = 0; i < rows; ++i) p2[static_cast<size_t>(i)] = unit2;
  return make_weight2(p2, set.kind, LastSign::plus);
}

// Exponent of the per-term quantity at the cut-off time: e^{-scale * B}
// multiplies the dimension, with scale = t0/2 for groups and t0 otherwise.
double per_term_scale(const SpaceDescriptor& d) {
  return d.is_group ? cutoff_time(d) / 2 : cutoff_time(d);
}

// log of the series coefficient A
long double log_coefficient(const SpaceDescriptor& d, const Weight& w, const FastRep& r) {
  if (!d.is_group) return r.log_dim;
  return 2 * r.log_dim + std::log(static_cast<long double>(sign_multiplicity(d, w)));
}

}  // namespace

WeightMonoid weight_monoid(const SpaceDescriptor& d) {
  const IndexingSet set = indexing_set(d);
  const int L = set.length;
  WeightMonoid m;
  std::vector<std::pair<int, int>> gens;  // (rows, unit2)
  std::vector<int> class_units{0};
  switch (set.kind) {
    case WeightKind::Y:
      for (int i = 1; i <= L; ++i) gens.push_back({i, 2});
      break;
    case WeightKind::evenY:
      for (int i = 1; i <= L; ++i) gens.push_back({i, 4});
      break;
    case WeightKind::doubledY:
      for (int i = 2; i <= L; i += 2) gens.push_back({i, 2});
      break;
    case WeightKind::evenOrOddY:
      for (int i = 1; i <= L; ++i) gens.push_back({i, 4});
      class_units.push_back(2);
      break;
    case WeightKind::halfY:
    case WeightKind::signedLastPart:
      for (int i = 1; i <= L; ++i) gens.push_back({i, 2});
      class_units.push_back(1);
      break;
    case WeightKind::Z:
      fail(Status::InvalidArgument, "Z sequences have no series monoid");
  }
  for (int unit : class_units) {
    Weight base = filled(set, unit ? L : 0, unit);
    m.classes.push_back({base, base.size2(), fast_rep(d, base).casimir});
  }
  for (auto [rows, unit2] : gens) {
    Weight g = filled(set, rows, unit2);
    m.generators.push_back({g, rows, unit2, g.size2(), fast_rep(d, g).casimir});
  }
  return m;
}

long double monoid_lower_bound(const SpaceDescriptor& d, const WeightMonoid& m, const Weight& w) {
  require_member(w, indexing_set(d));
  const MonoidClass* cls = &m.classes[0];
  if (m.classes.size() > 1) {
    bool second = indexing_set(d).kind == WeightKind::evenOrOddY
                      ? (w.parts2[0] / 2) % 2 != 0
                      : w.is_half();
    if (second) cls = &m.classes[1];
  }
  const int L = w.length();
  std::vector<int> mu(static_cast<size_t>(L + 1), 0);
  for (int i = 0; i < L; ++i)
    mu[static_cast<size_t>(i)] = w.parts2[static_cast<size_t>(i)] - cls->base.parts2[static_cast<size_t>(i)];
  long double bound = cls->casimir;
  std::vector<int> rebuilt(static_cast<size_t>(L), 0);
  for (const auto& g : m.generators) {
    int diff = mu[static_cast<size_t>(g.rows - 1)] - mu[static_cast<size_t>(g.rows)];
    if (diff < 0 || diff % g.unit2 != 0)
      fail(Status::Internal, "weight (" + w.str() + ") does not decompose over the generators");
    int mult = diff / g.unit2;
    bound += mult * g.casimir;
    for (int i = 0; i < g.rows; ++i) rebuilt[static_cast<size_t>(i)] += mult * g.unit2;
  }
  for (int i = 0; i < L; ++i)
    if (rebuilt[static_cast<size_t>(i)] != mu[static_cast<size_t>(i)])
      fail(Status::Internal, "weight (" + w.str() + ") does not decompose over the generators");
  return bound;
}

namespace {

// Bound on sum over m of prod x_i^{m_i}, restricted to base_size2 +
// sum m_i w_i > cap2, via min over r >= 1 of r^{base - cap2 - 1} prod 1/(1 - x_i r^{w_i}).
double chernoff_log(double base_size2, int cap2, const std::vector<double>& log_x,
                    const std::vector<int>& w) {
  double u_max = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < w.size(); ++i) u_max = std::min(u_max, -log_x[i] / w[i]);
  auto f = [&](double u) {
    double v = u * (base_size2 - cap2 - 1);
    for (size_t i = 0; i < w.size(); ++i) {
      double e = log_x[i] + u * w[i];
      if (e >= 0) return std::numeric_limits<double>::infinity();
      v -= std::log1p(-std::exp(e));
    }
    return v;
  };
  double hi = u_max * (1 - 1e-12);
  if (!(hi > 0)) return f(0.0);
  auto best = boost::math::tools::brent_find_minima(f, 0.0, hi, 52);
  return std::min(best.second, f(0.0));
}

struct SeriesState {
  std::vector<double> terms;
  int cap2 = -1;  // last completed doubled size
  double argmax_term = 0;
  std::optional<Weight> argmax;
};

double tail_bound(const SpaceDescriptor& d, const WeightMonoid& m, double t, int cap2) {
  const double t0 = cutoff_time(d);
  const double dt = t - t0;
  const double sup = per_term_sup(d) * (1 + 1e-9);
  double M = d.is_group ? sup * sup : sup;
  if (d.is_group && isometry_group(d).type == LieType::D) M *= 2;
  std::vector<double> log_x;
  std::vector<int> w;
  for (const auto& g : m.generators) {
    log_x.push_back(-dt * static_cast<double>(g.casimir));
    w.push_back(g.size2);
  }
  double total = 0;
  for (const auto& c : m.classes) {
    double lc = -dt * static_cast<double>(c.casimir) + chernoff_log(c.size2, cap2, log_x, w);
    total += M * std::exp(lc);
  }
  return total;
}

}  // namespace

TruncationReport dominating_series(const SpaceDescriptor& d, double t, const SeriesOptions& opt) {
  if (!(t > 0)) fail(Status::InvalidArgument, "t must be positive");
  if (opt.size_cap < 1) fail(Status::InvalidArgument, "size cap must be at least 1");
  const IndexingSet set = indexing_set(d);
  const bool controllable = t > cutoff_time(d);
  const WeightMonoid monoid = weight_monoid(d);
  SeriesState st;
  int target = opt.size_cap;
  TruncationReport rep;
  rep.t = t;
  rep.controllable = controllable;
  bool budget_hit = false;
  bool stopped = false;
  double running = 0;
  while (true) {
    enumerate_shells(set, st.cap2 + 1, 2 * target, [&](int s2, const std::vector<Weight>& shell) {
      for (const Weight& w : shell) {
        if (w.is_zero()) continue;
        FastRep r = fast_rep(d, w);
        double term = static_cast<double>(std::exp(log_coefficient(d, w, r) - t * r.casimir));
        st.terms.push_back(term);
        running += term;
        if (term > st.argmax_term) {
          st.argmax_term = term;
          st.argmax = w;
        }
      }
      st.cap2 = s2;
      if (static_cast<long long>(st.terms.size()) > opt.term_budget) {
        budget_hit = true;
        return false;
      }
      if (running > opt.stop_above) {
        stopped = true;
        return false;
      }
      return true;
    });
    rep.partial_sum = pairwise_sum(st.terms);
    rep.tail_bound = controllable ? tail_bound(d, monoid, t, st.cap2)
                                  : std::numeric_limits<double>::infinity();
    bool done = !controllable || !opt.auto_extend || budget_hit || stopped ||
                rep.tail_bound < opt.relative_tail * rep.partial_sum || target >= opt.max_cap;
    if (done) break;
    target = std::min(2 * target, opt.max_cap);
  }
  rep.terms_used = static_cast<long long>(st.terms.size());
  rep.size_cap = st.cap2 / 2;
  rep.argmax_weight = st.argmax;
  rep.argmax_term = st.argmax_term;
  return rep;
}

double tv_upper_bound(const SpaceDescriptor& d, double t, const SeriesOptions& options) {
  // Partial sums only grow and any total above 4 clamps the bound to 1.
  SeriesOptions o = options;
  o.stop_above = std::min(o.stop_above, 4.0);
  TruncationReport r = dominating_series(d, t, o);
  if (!r.controllable || !std::isfinite(r.tail_bound)) return 1.0;
  return std::min(1.0, 0.5 * std::sqrt(r.partial_sum + r.tail_bound));
}

SweepReport bound_sweep(const SpaceDescriptor& d, int size_cap, bool include_half) {
  if (size_cap < 0) fail(Status::InvalidArgument, "size cap must be non-negative");
  const IndexingSet set = indexing_set(d);
  const double scale = per_term_scale(d);
  const WeightMonoid monoid = weight_monoid(d);
  SweepReport rep;
  rep.size_cap = size_cap;
  rep.argmax = zero_weight(set);
  rep.max_value = 1.0;
  std::vector<Weight> outer;
  double outer_max = 0;
  enumerate_shells(
      set, 0, 2 * size_cap,
      [&](int, const std::vector<Weight>& shell) {
        double shell_max = 0;
        for (const Weight& w : shell) {
          FastRep r = fast_rep(d, w);
          double v = static_cast<double>(std::exp(r.log_dim - scale * r.casimir));
          ++rep.terms;
          shell_max = std::max(shell_max, v);
          if (v > rep.max_value) {
            rep.max_value = v;
            rep.argmax = w;
          }
        }
        if (!shell.empty()) {
          outer = shell;
          outer_max = shell_max;
        }
        return true;
      },
      include_half);
  bool decreasing = true;
  for (const Weight& w : outer) {
    FastRep r = fast_rep(d, w);
    for (const auto& g : monoid.generators) {
      std::vector<int> p2(w.parts2);
      for (int i = 0; i < g.rows; ++i) p2[static_cast<size_t>(i)] += g.unit2;
      FastRep s = fast_rep(d, make_weight2(p2, set.kind, LastSign::plus));
      if (s.log_dim - r.log_dim - scale * (s.casimir - r.casimir) >= 0) decreasing = false;
    }
    if (!decreasing) break;
  }
  rep.tail_flag = decreasing && size_cap > 0 && outer_max < rep.max_value;
  return rep;
}

bool per_term_within(const SpaceDescriptor& d, const Weight& w, const Rational& bound) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  using boost::multiprecision::pow;
  Rational dim = dimension(d, w);
  Rational b = casimir_exponent(d, w);
  BigInt p = cutoff_param(d);
  // With alpha = 2 for groups and 1 otherwise the per-term exponent is log(param) * B.
  BigInt bden = denominator(b);
  BigInt bnum = numerator(b);
  if (bden > 100000 || bnum > 100000000)
    fail(Status::TooLarge, "exponent too large for exact comparison");
  unsigned e_den = static_cast<unsigned>(bden);
  unsigned e_num = static_cast<unsigned>(bnum);
  BigInt lhs = pow(numerator(dim), e_den) * pow(denominator(bound), e_den);
  BigInt rhs = pow(numerator(bound), e_den) * pow(p, e_num) * pow(denominator(dim), e_den);
  return lhs <= rhs;
}

double per_term_sup(const SpaceDescriptor& d) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, double> cache;
  auto key = std::make_tuple(static_cast<int>(d.family), d.n, d.q.value_or(0));
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  double v = bound_sweep(d, 40).max_value;
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = v;
  return v;
}

double eta_quotient(const SpaceDescriptor& d, const Weight& base, int l, int k,
                    std::optional<double> t0) {
  Weight next = apply_step(GrowthStep{l, k, base});
  IsometryGroup g = isometry_group(d);
  FastRep a = group_fast(g, group_label_unchecked(d, base));
  FastRep b = group_fast(g, group_label_unchecked(d, next));
  double time = t0.value_or(cutoff_time(d));
  double scale = d.is_group ? time / 2 : time;
  return static_cast<double>(std::exp(b.log_dim - a.log_dim - scale * (b.casimir - a.casimir)));
}

namespace {

std::vector<cplx> group_alphabet(const SpaceDescriptor& d, const std::vector<double>& angles) {
  IsometryGroup g = isometry_group(d);
  size_t want = d.family == Family::SU ? static_cast<size_t>(d.n) : static_cast<size_t>(g.rank);
  std::vector<double> a(angles);
  if (d.family == Family::SU && a.size() + 1 == want) {
    double s = 0;
    for (double v : a) s += v;
    a.push_back(-s);
  }
  if (a.size() != want)
    fail(Status::InvalidArgument, "expected " + std::to_string(want) + " eigenvalue angles");
  std::vector<cplx> z;
  for (double v : a) z.push_back(std::polar(1.0, v));
  return z;
}

}  // namespace

double group_density(const SpaceDescriptor& d, const std::vector<double>& angles, double t,
                     int size_cap) {
  if (!d.is_group) fail(Status::UnsupportedSpace, "pointwise densities need a group family");
  if (!(t > 0)) fail(Status::InvalidArgument, "t must be positive");
  const std::vector<cplx> z = group_alphabet(d, angles);
  const IsometryGroup g = isometry_group(d);
  std::vector<double> terms;
  enumerate_by_size(
      indexing_set(d), size_cap,
      [&](const Weight& w) {
        FastRep r = fast_rep(d, w);
        double weight = static_cast<double>(std::exp(r.log_dim - t * r.casimir / 2));
        terms.push_back(weight * schur(g.type, w, z).real());
        return true;
      },
      false);
  return pairwise_sum(terms);
}

double circle_density(double theta, double t, int size_cap) {
  if (!(t > 0)) fail(Status::InvalidArgument, "t must be positive");
  std::vector<double> terms{1.0};
  for (int k = 1; k <= size_cap; ++k) terms.push_back(2 * std::exp(-0.5 * k * k * t) * std::cos(k * theta));
  return pairwise_sum(terms);
}

bool is_rank_one(const SpaceDescriptor& d) {
  return !d.is_group && weight_monoid(d).generators.size() == 1;
}

double rank_one_density(const SpaceDescriptor& d, const std::vector<double>& zonal_values,
                        double t) {
  if (!is_rank_one(d)) fail(Status::UnsupportedSpace, "explicit densities need a rank-one space");
  if (!(t > 0)) fail(Status::InvalidArgument, "t must be positive");
  const IndexingSet set = indexing_set(d);
  std::vector<double> terms;
  size_t k = 0;
  enumerate_by_size(set, 4 * static_cast<int>(zonal_values.size()) + 4, [&](const Weight& w) {
    if (k >= zonal_values.size()) return false;
    FastRep r = fast_rep(d, w);
    terms.push_back(static_cast<double>(std::exp(r.log_dim - t * r.casimir / 2)) * zonal_values[k]);
    ++k;
    return true;
  });
  return pairwise_sum(terms);
}

nlohmann::json to_json(const TruncationReport& r) {
  nlohmann::json j;
  j["t"] = r.t;
  j["partial_sum"] = r.partial_sum;
  j["tail_bound"] = std::isfinite(r.tail_bound) ? nlohmann::json(r.tail_bound) : nlohmann::json(nullptr);
  j["terms_used"] = r.terms_used;
  j["size_cap"] = r.size_cap;
  j["controllable"] = r.controllable;
  if (r.argmax_weight) j["argmax_weight"] = r.argmax_weight->str();
  return j;
}

nlohmann::json to_json(const SweepReport& r) {
  return {{"max", r.max_value},      {"argmax_weight", r.argmax.str()}, {"terms", r.terms},
          {"size_cap", r.size_cap}, {"tail_flag", r.tail_flag}};
}

}  // namespace cutofflab
