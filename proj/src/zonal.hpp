#pragma once

#include "moments.hpp"
#include "spaces.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <vector>

namespace cutofflab {

// Spherical function of the minimal weight of a symmetric space, written as
// phi(g) = <F, g F g^T> or <F, g F g^*> for a fixed unit matrix F fixed by
// the stabilizer subgroup.
struct ZonalForm {
  Algebra algebra;
  int algebra_n;
  int dim;                // size of the defining matrices
  Eigen::MatrixXcd form;  // F, unit Frobenius norm
  bool hermitian_action;  // g F g^* instead of g F g^T
  bool complex_valued;    // phi is complex and |phi|^2 is the relevant square
};

ZonalForm zonal_form(const SpaceDescriptor& d);
cplx zonal_value(const ZonalForm& z, const Eigen::MatrixXcd& g);

struct ZonalTerm {
  Weight weight;         // label in the indexing set of the space
  Rational coefficient;  // weight of phi_weight in the expansion of |phi_min|^2
  Rational casimir;      // B of the weight
};

// Expansion of |phi_min|^2 as a combination of spherical functions.
std::vector<ZonalTerm> zonal_square_expansion(const SpaceDescriptor& d);

// sum_c c e^{-t B / 2}: E_t[|phi_min|^2] predicted by the expansion.
double zonal_square_series(const SpaceDescriptor& d, double t);
// The same expectation computed from the moment engine.
double zonal_square_engine(const SpaceDescriptor& d, double t, const MomentEngine* engine = nullptr);
// E_t[phi_min] from the engine (second-order tensors); equals e^{-t B_min / 2}.
cplx zonal_mean_engine(const SpaceDescriptor& d, double t, const MomentEngine* engine = nullptr);

nlohmann::json to_json(const std::vector<ZonalTerm>& terms);

}  // namespace cutofflab
