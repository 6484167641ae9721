#pragma once

#include "repchar.hpp"
#include "spaces.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <optional>
#include <vector>

namespace cutofflab {

// Every indexing set splits into a few classes, each of the form
// base + sum_i m_i * generator_i with m_i >= 0. Since the Casimir exponent
// is a positive quadratic form plus a linear form and all generators pair
// non-negatively, B(base + sum m_i g_i) >= B(base) + sum m_i B(g_i).
struct MonoidGenerator {
  Weight weight;
  int rows;   // number of non-zero rows
  int unit2;  // doubled value of the non-zero rows
  int size2;  // doubled size
  long double casimir;
};

struct MonoidClass {
  Weight base;
  int size2;
  long double casimir;
};

struct WeightMonoid {
  std::vector<MonoidClass> classes;
  std::vector<MonoidGenerator> generators;
};

WeightMonoid weight_monoid(const SpaceDescriptor& d);

// Lower bound B(base) + sum m_i B(g_i) for the decomposition of w.
long double monoid_lower_bound(const SpaceDescriptor& d, const WeightMonoid& m, const Weight& w);

struct SeriesOptions {
  int size_cap = 40;
  bool auto_extend = true;
  int max_cap = 200;
  double relative_tail = 1e-6;
  long long term_budget = 2000000;
  // Stop once the running partial sum exceeds this value; the report then
  // holds the partial sum reached so far.
  double stop_above = std::numeric_limits<double>::infinity();
};

struct TruncationReport {
  double t = 0;
  double partial_sum = 0;
  double tail_bound = 0;  // +inf when the tail is not controllable
  long long terms_used = 0;
  int size_cap = 0;
  bool controllable = true;
  std::optional<Weight> argmax_weight;  // largest term of the partial sum
  double argmax_term = 0;
};

// Sum of A(w) exp(-t B(w)) over non-trivial weights with a certified tail.
TruncationReport dominating_series(const SpaceDescriptor& d, double t,
                                   const SeriesOptions& options = {});

// min(1, sqrt(partial + tail) / 2), or 1 when the tail is not controllable.
double tv_upper_bound(const SpaceDescriptor& d, double t, const SeriesOptions& options = {});

struct SweepReport {
  double max_value = 0;
  Weight argmax;
  long long terms = 0;
  int size_cap = 0;
  // True when the outer shell lies below the maximum and every one-box
  // growth quotient leaving the last shell is below 1.
  bool tail_flag = false;
};

// Maximum of D e^{-t0 B / 2} (groups) or D e^{-t0 B} (symmetric spaces) at
// the cut-off time t0, over weights of size <= cap.
SweepReport bound_sweep(const SpaceDescriptor& d, int size_cap, bool include_half = true);

// Exact check D * param^{-B} <= bound, which is the per-term quantity at the
// cut-off time for every family.
bool per_term_within(const SpaceDescriptor& d, const Weight& w, const Rational& bound);

// Per-term uniform bound used by the tail certificate (cached).
double per_term_sup(const SpaceDescriptor& d);

// Quotient of per-term quantities across one growth step.
double eta_quotient(const SpaceDescriptor& d, const Weight& base, int l, int k,
                    std::optional<double> t0 = std::nullopt);

// Heat-kernel density of a group at the element with the given eigenvalue
// angles (rank many; SU accepts n or n-1 angles).
double group_density(const SpaceDescriptor& d, const std::vector<double>& angles, double t,
                     int size_cap = 40);
double circle_density(double theta, double t, int size_cap = 60);
// Rank-one symmetric spaces: zonal_values[k] is the value of the k-th
// spherical function at the point.
double rank_one_density(const SpaceDescriptor& d, const std::vector<double>& zonal_values,
                        double t);
bool is_rank_one(const SpaceDescriptor& d);

nlohmann::json to_json(const TruncationReport& r);
nlohmann::json to_json(const SweepReport& r);

}  // namespace cutofflab
