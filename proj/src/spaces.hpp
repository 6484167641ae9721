#pragma once

#include "common.hpp"
#include "partitions.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace cutofflab {

enum class Family { SO, SU, USp, GrR, GrC, GrH, SO2n_Un, SUn_SOn, SU2n_USpn, USpn_Un };
enum class LieType { A, B, C, D };
enum class Algebra { so, su, usp };

const char* family_name(Family f);
Family parse_family(const std::string& name);
const char* algebra_name(Algebra a);
Algebra parse_algebra(const std::string& name);
char lie_type_char(LieType t);
LieType parse_lie_type(char c);

struct SpaceDescriptor {
  Family family;
  int n;
  std::optional<int> q;
  int beta;
  int alpha_cutoff;
  int n0;
  Rational c_lower;
  Rational C_upper;
  int gamma_b;
  int gamma_a;
  Rational drift_alpha;
  bool is_group;
};

// The compact group G acting on the space (the space itself for group
// families), described as the root system used by the weight formulas.
struct IsometryGroup {
  LieType type;
  Algebra algebra;
  int algebra_n;  // n of so(n), su(n) or usp(n)
  int rank;       // label length used by the dimension and Casimir formulas
};

SpaceDescriptor describe(Family family, int n, std::optional<int> q = std::nullopt);
SpaceDescriptor describe(const std::string& family, int n, std::optional<int> q = std::nullopt);

IndexingSet indexing_set(const SpaceDescriptor& d);
IsometryGroup isometry_group(const SpaceDescriptor& d);

// The weight of the isometry group that labels a spherical representation
// of the space (zero padding, or the symmetric U(n) label for complex
// Grassmannians).
Weight group_label(const SpaceDescriptor& d, const Weight& w);
// Same embedding without the membership check, for intermediate weights of
// growth paths that leave the indexing set.
Weight group_label_unchecked(const SpaceDescriptor& d, const Weight& w);

struct MinimalWeight {
  Weight weight;
  Rational a_min;  // series coefficient: squared dimension for groups, dimension otherwise
  Rational b_min;  // Casimir exponent
};

MinimalWeight minimal_weight(const SpaceDescriptor& d);

// Argument of the logarithm in the cut-off time of the family.
int cutoff_param(const SpaceDescriptor& d);
double cutoff_time(const SpaceDescriptor& d);  // alpha_cutoff * log(param)
double time_at_eps(const SpaceDescriptor& d, double eps);  // alpha (1 + eps) log(param)

nlohmann::json to_json(const SpaceDescriptor& d);
nlohmann::json to_json(const IndexingSet& s);
nlohmann::json to_json(const Weight& w);

}  // namespace cutofflab
