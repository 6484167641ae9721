#pragma once

#include "common.hpp"
#include "partitions.hpp"
#include "spaces.hpp"

#include <vector>

namespace cutofflab {

// Exact Weyl dimension and Casimir exponent of a weight of the isometry
// group (label already in group coordinates, see group_label).
Rational group_dimension(const IsometryGroup& g, const Weight& label);
Rational group_casimir(const IsometryGroup& g, const Weight& label);

// Floating evaluation used by the series sweeps: natural log of the
// dimension and the Casimir exponent.
struct FastRep {
  long double log_dim;
  long double casimir;
};
FastRep group_fast(const IsometryGroup& g, const Weight& label);

Rational dimension(const SpaceDescriptor& d, const Weight& w);
Rational casimir_exponent(const SpaceDescriptor& d, const Weight& w);
FastRep fast_rep(const SpaceDescriptor& d, const Weight& w);

// Number of labels a weight stands for in the series: 2 for type-D group
// weights with a non-zero last part, 1 otherwise.
int sign_multiplicity(const SpaceDescriptor& d, const Weight& w);

// Series coefficient A: squared dimension (with the sign multiplicity) for
// groups, dimension for symmetric spaces.
Rational series_coefficient(const SpaceDescriptor& d, const Weight& w);

// Character values at an eigenvalue alphabet on the unit circle. For types
// B, C and D the alphabet lists z_1..z_r only; the inverses and the fixed
// eigenvalue 1 are implied. Type D returns the sum over both signs of the
// last part when that part is non-zero.
cplx schur(LieType type, const Weight& lambda, const std::vector<cplx>& alphabet);

// Residual of the tensor-square identity for the defining representation.
double square_identity_residual(LieType type, const std::vector<cplx>& alphabet);

// Validates that every entry lies on the unit circle within 1e-12.
void require_unit_alphabet(const std::vector<cplx>& alphabet);

}  // namespace cutofflab
