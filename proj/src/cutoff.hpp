#pragma once

#include "heatseries.hpp"
#include "spaces.hpp"
#include "zonal.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <optional>
#include <vector>

namespace cutofflab {

// The statistic separating the Brownian law from Haar measure: the minimal
// character for groups, sqrt(D_min) times the minimal spherical function for
// symmetric spaces.
struct OmegaSpec {
  SpaceDescriptor space;
  bool is_trace;
  double normalization;  // sqrt(D_min) for symmetric spaces, 1 for groups
  bool complex_valued;
  Algebra algebra;  // algebra of the matrices Omega is evaluated on
  int algebra_n;
  int dim;
  std::optional<ZonalForm> zonal;
};

OmegaSpec omega_spec(const SpaceDescriptor& d);
cplx omega_value(const OmegaSpec& spec, const Eigen::MatrixXcd& g);

struct MeanVariance {
  double mean;
  double variance;
};

// Tabulated closed forms of E_t[Omega] and Var_t[Omega].
MeanVariance mean_variance(const SpaceDescriptor& d, double t);

// The same quantities rebuilt from the tensor-square expansions, with
// E_t[chi] = D e^{-t B / 2} for characters and e^{-t B / 2} for spherical
// functions.
MeanVariance mean_variance_from_expansion(const SpaceDescriptor& d, double t);

struct CharacterTerm {
  Weight weight;
  int multiplicity;
};
// |chi_min|^2 (or chi_min^2) as a sum of irreducible characters, groups only.
std::vector<CharacterTerm> character_square_expansion(const SpaceDescriptor& d);

// Variance bound K_X used by the Chebyshev argument. For Grassmannians it
// depends on eps = 1 - t / (alpha log param).
double variance_bound(const SpaceDescriptor& d, double t);
// Range of t where the variance bound is proven: eps in (0, 1/4).
std::pair<double, double> certified_window(const SpaceDescriptor& d);

// max(0, 1 - 4 (K_X + 1) / m^2) with m = E_t[Omega].
double lower_bound(const SpaceDescriptor& d, double t);

struct ProfilePoint {
  double t;
  double lower;
  double upper;
  bool lower_certified;  // t inside the certified window of the lower bound
};

std::vector<ProfilePoint> profile(const SpaceDescriptor& d, const std::vector<double>& grid,
                                  const SeriesOptions& options = {});
// Evenly spaced grid around the cut-off time.
std::vector<double> default_profile_grid(const SpaceDescriptor& d, int points = 41);

nlohmann::json to_json(const std::vector<ProfilePoint>& points);
std::string to_csv(const std::vector<ProfilePoint>& points);

}  // namespace cutofflab
