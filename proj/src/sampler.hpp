#pragma once

#include "cutoff.hpp"
#include "moments.hpp"

#include <boost/random/mersenne_twister.hpp>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cutofflab {

using Rng = boost::random::mt19937_64;

// Independent stream for one path, keyed by (seed, path index).
Rng path_rng(std::uint64_t seed, std::uint64_t path);

// A compact group in its defining matrix form.
struct GroupModel {
  Algebra algebra;
  int n;
  int dim;
  std::vector<Eigen::MatrixXcd> basis;
};

GroupModel group_model(Algebra a, int n);
// The group whose Brownian motion projects onto the space (the space itself
// for group families).
GroupModel group_model(const SpaceDescriptor& d);

struct PathConfig {
  double t_final = 1.0;
  int steps = 0;  // 0 selects ceil(t_final / 0.01)
  std::uint64_t seed = 1;
  long long paths = 1000;
  int threads = 0;  // 0 selects default_thread_count()
  int reorthonormalize_every = 50;
};

int resolved_steps(const PathConfig& c);

// Geometric Euler scheme g <- g exp(sqrt(h) sum_r N_r X_r). When conjugator
// is given each increment is replaced by k X k^{-1}.
Eigen::MatrixXcd brownian_endpoint(const GroupModel& m, double t, int steps, Rng& rng,
                                   const Eigen::MatrixXcd* conjugator = nullptr, int reorthonormalize_every = 50);
Eigen::MatrixXcd haar_sample(const GroupModel& m, Rng& rng);

// Projects onto the group: polar factor, determinant fixed for SU.
Eigen::MatrixXcd reorthonormalize(const GroupModel& m, const Eigen::MatrixXcd& g);

double unitarity_residual(const Eigen::MatrixXcd& g);
double symplectic_residual(const Eigen::MatrixXcd& g);  // || g^T J g - J ||_inf

struct Statistic {
  enum class Kind { trace, omega, abs2, indicator, moment } kind;
  double threshold = 0;  // indicator: |Omega| >= threshold
  Polynomial pattern;    // moment statistic
  std::string text;
};

// trace | omega | zonal_min | abs2 | indicator:<a> | moment:<pattern>
Statistic parse_statistic(const SpaceDescriptor& d, const std::string& text);
cplx evaluate_statistic(const Statistic& s, const OmegaSpec& omega, const Eigen::MatrixXcd& g);

struct Estimate {
  cplx mean;
  double std_error;
  long long n_samples;
  double variance;     // sample variance of the statistic
  double variance_se;  // delta-method standard error of the variance
};

// Monte Carlo estimate under the Brownian law at config.t_final, or under
// Haar measure when haar is true. Deterministic given (seed, paths).
Estimate estimate(const SpaceDescriptor& d, const Statistic& s, bool haar, const PathConfig& config);
Estimate estimate(const SpaceDescriptor& d, const std::string& statistic, bool haar, const PathConfig& config);

nlohmann::json to_json(const Estimate& e);

}  // namespace cutofflab
