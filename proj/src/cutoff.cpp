#include "cutoff.hpp"

#include "repchar.hpp"

#include <cmath>
#include <sstream>

namespace cutofflab {

namespace {

Algebra group_algebra(Family f) {
  switch (f) {
    case Family::SO: return Algebra::so;
    case Family::SU: return Algebra::su;
    case Family::USp: return Algebra::usp;
    default: break;
  }
  fail(Status::Internal, "not a group family");
}

double ex(double rate, double t) { return std::exp(-rate * t); }

// a / b, with the convention 0 when b vanishes; used where the tabulated
// coefficient is 0/0 and the corresponding term is absent.
double ratio(double a, double b) { return b == 0 ? 0.0 : a / b; }

}  // namespace

OmegaSpec omega_spec(const SpaceDescriptor& d) {
  if (d.is_group) {
    Algebra a = group_algebra(d.family);
    return {d, true, 1.0, d.family == Family::SU, a, d.n, defining_dim(a, d.n), std::nullopt};
  }
  ZonalForm z = zonal_form(d);
  double norm = std::sqrt(to_double(minimal_weight(d).a_min));
  return {d, false, norm, z.complex_valued, z.algebra, z.algebra_n, z.dim, z};
}

cplx omega_value(const OmegaSpec& spec, const Eigen::MatrixXcd& g) {
  if (g.rows() != spec.dim || g.cols() != spec.dim)
    fail(Status::FieldMismatch, "group element of size " + std::to_string(g.rows()) + " does not act on " +
                                    family_name(spec.space.family));
  if (spec.is_trace) return g.trace();
  return spec.normalization * zonal_value(*spec.zonal, g);
}

MeanVariance mean_variance(const SpaceDescriptor& d, double t) {
  if (t < 0) fail(Status::InvalidArgument, "t must be non-negative");
  const double n = d.n;
  switch (d.family) {
    case Family::SO: {
      if (d.n < 3) fail(Status::InvalidRank, "SO(n) needs n >= 3");
      double m = n * ex((n - 1) / (2 * n), t);
      double v = 1 + n * (n - 1) / 2 * ex((n - 2) / n, t) + (n * (n + 1) / 2 - 1) * ex(1, t) -
                 n * n * ex((n - 1) / n, t);
      return {m, v};
    }
    case Family::SU: {
      double m = n * ex((n * n - 1) / (2 * n * n), t);
      double v = 1 + (n * n - 1) * ex(1, t) - n * n * ex((n * n - 1) / (n * n), t);
      return {m, v};
    }
    case Family::USp: {
      double m = 2 * n * ex((2 * n + 1) / (4 * n), t);
      double v = 1 + (2 * n + 1) * (n - 1) * ex(1, t) + (2 * n + 1) * n * ex((n + 1) / n, t) -
                 4 * n * n * ex((2 * n + 1) / (2 * n), t);
      return {m, v};
    }
    case Family::GrR: {
      if (d.n < 3) fail(Status::InvalidRank, "Gr(n,q,R) needs n >= 3");
      const double q = *d.q, p = n - q, pq = p * q;
      double m = std::sqrt((n + 2) * (n - 1) / 2) * ex(1, t);
      double v = 1 + (2 * n * n / pq - 8) * (n - 1) * (n + 2) / ((n - 2) * (n + 4)) * ex(1, t) +
                 n * n / 3 * ((n + 2) / (n - 2) - (n + 2) * (n - 1) / (pq * (n - 2))) * ex((2 * n - 2) / n, t) +
                 n * n / 6 * ((n - 1) / (n + 4) + 2 * (n + 2) * (n - 1) / (pq * (n + 4))) * ex((2 * n + 4) / n, t) -
                 (n + 2) * (n - 1) / 2 * ex(2, t);
      return {m, v};
    }
    case Family::GrC: {
      const double q = *d.q, p = n - q, pq = p * q;
      double m = std::sqrt(n * n - 1) * ex(1, t);
      double v = 1 + ratio((2 * n * n / pq - 8) * (n * n - 1), n * n - 4) * ex(1, t) +
                 n * n / 2 * ratio((n + 1) * pq - (n * n - 1), pq * (n - 2)) * ex((2 * n - 2) / n, t) +
                 n * n / 2 * ((n - 1) / (n + 2) + (n * n - 1) / (pq * (n + 2))) * ex((2 * n + 2) / n, t) -
                 (n * n - 1) * ex(2, t);
      return {m, v};
    }
    case Family::GrH: {
      const double q = *d.q, p = n - q, pq = p * q;
      double m = std::sqrt((2 * n + 1) * (n - 1)) * ex(1, t);
      double v = 1 + ratio((n * n / pq - 4) * (n - 1) * (2 * n + 1), (n - 2) * (n + 1)) * ex(1, t) +
                 n * n / 3 * ratio((2 * n + 1) * pq - (2 * n + 1) * (n - 1), pq * (n - 2)) * ex((2 * n - 2) / n, t) +
                 n * n / 3 * (4 * (n - 1) / (n + 1) + (2 * n + 1) * (n - 1) / (pq * (n + 1))) * ex((2 * n + 1) / n, t) -
                 (2 * n + 1) * (n - 1) * ex(2, t);
      return {m, v};
    }
    case Family::SO2n_Un: {
      if (d.n < 4) fail(Status::InvalidRank, "SO(2n)/U(n) tables need n >= 4");
      double m = std::sqrt(n * (2 * n - 1)) * ex((n - 1) / n, t);
      double v = 1 + (n - 1) * (2 * n - 1) / 3 * ex((2 * n - 4) / n, t) + 4 * (n * n - 1) / 3 * ex((2 * n - 1) / n, t) -
                 n * (2 * n - 1) * ex((2 * n - 2) / n, t);
      return {m, v};
    }
    case Family::SUn_SOn: {
      double m = std::sqrt(n * (n + 1) / 2) * ex((n - 1) * (n + 2) / (n * n), t);
      double v = 1 + (n + 2) * (n - 1) / 2 * ex((2 * n + 2) / n, t) -
                 n * (n + 1) / 2 * ex((n - 1) * (2 * n + 4) / (n * n), t);
      return {m, v};
    }
    case Family::SU2n_USpn: {
      double m = std::sqrt(2 * n * n - n) * ex((n - 1) * (2 * n + 1) / (2 * n * n), t);
      double v = 1 + (2 * n * n - n - 1) * ex((2 * n - 1) / n, t) -
                 (2 * n * n - n) * ex((n - 1) * (2 * n + 1) / (n * n), t);
      return {m, v};
    }
    case Family::USpn_Un: {
      double m = std::sqrt(n * (2 * n + 1)) * ex((n + 1) / n, t);
      double v = 1 + 4 * (n - 1) * (n + 1) / 3 * ex((2 * n + 1) / n, t) +
                 (2 * n + 1) * (n + 1) / 3 * ex((2 * n + 4) / n, t) - n * (2 * n + 1) * ex((2 * n + 2) / n, t);
      return {m, v};
    }
  }
  fail(Status::Internal, "unhandled family");
}

std::vector<CharacterTerm> character_square_expansion(const SpaceDescriptor& d) {
  if (!d.is_group) fail(Status::UnsupportedSpace, "character squares are defined for group families");
  const IndexingSet set = indexing_set(d);
  std::vector<std::string> labels{"0"};
  switch (d.family) {
    case Family::SO:
      if (d.n < 3) fail(Status::InvalidRank, "SO(n) needs n >= 3");
      labels.push_back("2");
      // the exterior square is the adjoint; for SO(3) it is the defining representation
      labels.push_back(d.n == 3 ? "1" : "1,1");
      break;
    case Family::SU: {
      std::string adj = "2";
      for (int i = 0; i < d.n - 2; ++i) adj += ",1";
      labels.push_back(adj);
      break;
    }
    case Family::USp:
      labels.push_back("2");
      if (d.n >= 2) labels.push_back("1,1");
      break;
    default: break;
  }
  std::vector<CharacterTerm> out;
  for (const auto& l : labels) {
    Weight w = l == "0" ? zero_weight(set) : parse_weight(l, set);
    require_member(w, set);
    out.push_back({w, sign_multiplicity(d, w)});
  }
  return out;
}

MeanVariance mean_variance_from_expansion(const SpaceDescriptor& d, double t) {
  const MinimalWeight mw = minimal_weight(d);
  if (d.is_group) {
    double mean = to_double(dimension(d, mw.weight)) * std::exp(-t * to_double(mw.b_min) / 2);
    double second = 0;
    for (const auto& term : character_square_expansion(d))
      second += term.multiplicity * to_double(dimension(d, term.weight)) *
                std::exp(-t * to_double(casimir_exponent(d, term.weight)) / 2);
    return {mean, second - mean * mean};
  }
  const double D = to_double(mw.a_min);
  const double mean = std::sqrt(D) * std::exp(-t * to_double(mw.b_min) / 2);
  return {mean, D * zonal_square_series(d, t) - mean * mean};
}

std::pair<double, double> certified_window(const SpaceDescriptor& d) {
  const double t0 = cutoff_time(d);
  return {0.75 * t0, t0};
}

double variance_bound(const SpaceDescriptor& d, double t) {
  switch (d.family) {
    case Family::SO: return 8;
    case Family::SU: return 1;
    case Family::USp: return 3;
    case Family::SO2n_Un: return 3;
    case Family::SUn_SOn: return 1;
    case Family::SU2n_USpn: return 1;
    case Family::USpn_Un: return 3;
    case Family::GrR:
    case Family::GrC:
    case Family::GrH: {
      const double eps = 1 - t / cutoff_time(d);
      const double scale = d.family == Family::GrR ? 3 : 5;
      return scale * std::pow(static_cast<double>(d.n), eps);
    }
  }
  fail(Status::Internal, "unhandled family");
}

double lower_bound(const SpaceDescriptor& d, double t) {
  const double m = mean_variance(d, t).mean;
  if (m == 0) return 0;
  return std::max(0.0, 1 - 4 * (variance_bound(d, t) + 1) / (m * m));
}

std::vector<ProfilePoint> profile(const SpaceDescriptor& d, const std::vector<double>& grid,
                                  const SeriesOptions& options) {
  for (size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) fail(Status::InvalidArgument, "profile grid must be increasing");
  const double t0 = cutoff_time(d);
  const auto window = certified_window(d);
  std::vector<ProfilePoint> out;
  double running = 1.0;
  for (double t : grid) {
    if (t < 0) fail(Status::InvalidArgument, "profile times must be non-negative");
    double upper = t > t0 ? tv_upper_bound(d, t, options) : 1.0;
    // total variation to equilibrium never increases along the semigroup
    running = std::min(running, upper);
    out.push_back({t, lower_bound(d, t), running, t > window.first && t < window.second});
  }
  return out;
}

std::vector<double> default_profile_grid(const SpaceDescriptor& d, int points) {
  if (points < 2) fail(Status::InvalidArgument, "a profile needs at least two points");
  const double t0 = cutoff_time(d);
  std::vector<double> grid;
  for (int i = 0; i < points; ++i) grid.push_back(t0 * (0.2 + 2.3 * i / (points - 1)));
  return grid;
}

nlohmann::json to_json(const std::vector<ProfilePoint>& points) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : points)
    arr.push_back({{"t", p.t}, {"lower", p.lower}, {"upper", p.upper}, {"lower_certified", p.lower_certified}});
  return arr;
}

std::string to_csv(const std::vector<ProfilePoint>& points) {
  std::ostringstream os;
  os.precision(17);
  os << "t,lower,upper\n";
  for (const auto& p : points) os << p.t << ',' << p.lower << ',' << p.upper << '\n';
  return os.str();
}

}  // namespace cutofflab
