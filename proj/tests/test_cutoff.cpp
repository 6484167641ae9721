#include <doctest.h>

#include "cutoff.hpp"
#include "sampler.hpp"

#include <cmath>
#include <numbers>

using namespace cutofflab;

namespace {

const char* const kFamilyNames[] = {"SO", "SU", "USp", "GrR", "GrC", "GrH", "SO2n_Un", "SUn_SOn", "SU2n_USpn", "USpn_Un"};

SpaceDescriptor at(const char* f, int n) {
  const bool gr = std::string(f).rfind("Gr", 0) == 0;
  return describe(f, n, gr ? std::optional<int>(std::min(2, n - 1)) : std::nullopt);
}

// Time where the upper bound crosses the level, by bisection.
double crossing(const SpaceDescriptor& d, double level) {
  double lo = time_at_eps(d, 0.25), hi = time_at_eps(d, 3.0);
  for (int i = 0; i < 20; ++i) {
    double mid = 0.5 * (lo + hi);
    (tv_upper_bound(d, mid, {.size_cap = 16, .auto_extend = false}) > level ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("Omega at special elements") {
  for (const char* f : kFamilyNames) {
    SpaceDescriptor d = at(f, 5);
    OmegaSpec spec = omega_spec(d);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(spec.dim, spec.dim);
    CAPTURE(f);
    if (spec.is_trace)
      CHECK(std::abs(omega_value(spec, id) - double(spec.dim)) < 1e-12);
    else
      CHECK(std::abs(zonal_value(*spec.zonal, id) - 1.0) < 1e-12);
  }

  // block-diagonal element of the stabilizer of a real Grassmannian
  SpaceDescriptor gr = describe("GrR", 5, 2);
  OmegaSpec spec = omega_spec(gr);
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(5, 5);
  const double a = 0.7, b = 1.9;
  k(0, 0) = std::cos(a);
  k(0, 1) = -std::sin(a);
  k(1, 0) = std::sin(a);
  k(1, 1) = std::cos(a);
  k(2, 2) = 1;
  k(3, 3) = std::cos(b);
  k(3, 4) = -std::sin(b);
  k(4, 3) = std::sin(b);
  k(4, 4) = std::cos(b);
  CHECK(std::abs(zonal_value(*spec.zonal, k) - 1.0) < 1e-12);

  SpaceDescriptor su3 = describe("SU", 3);
  const cplx w = std::polar(1.0, 2 * std::numbers::pi / 3);
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(3, 3);
  diag(0, 0) = 1;
  diag(1, 1) = w;
  diag(2, 2) = std::conj(w);
  CHECK(std::abs(omega_value(omega_spec(su3), diag)) < 1e-12);
}

TEST_CASE("Omega is invariant under the stabilizer") {
  SpaceDescriptor d = describe("GrC", 6, 2);
  OmegaSpec spec = omega_spec(d);
  GroupModel m = group_model(d);
  Rng rng = path_rng(3, 3);
  Eigen::MatrixXcd g = haar_sample(m, rng);
  GroupModel upper = group_model(Algebra::su, 4);
  GroupModel lower = group_model(Algebra::su, 2);
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(6, 6);
  k.topLeftCorner(4, 4) = haar_sample(upper, rng);
  k.bottomRightCorner(2, 2) = haar_sample(lower, rng);
  CHECK(std::abs(omega_value(spec, g * k) - omega_value(spec, g)) < 1e-10);
}

TEST_CASE("mean and variance limits") {
  for (int n = 2; n <= 8; ++n) {
    MeanVariance mv = mean_variance(describe("SU", n), 0.0);
    CHECK(mv.mean == doctest::Approx(n));
    CHECK(std::abs(mv.variance) < 1e-9);
  }
  for (const char* f : kFamilyNames) {
    SpaceDescriptor d = at(f, describe(f, 4, std::string(f).rfind("Gr", 0) == 0 ? std::optional<int>(2) : std::nullopt).n0);
    MeanVariance far = mean_variance(d, 500.0);
    CAPTURE(f);
    CHECK(std::abs(far.mean) < 1e-9);
    CHECK(far.variance == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("orthogonal variance stays bounded") {
  for (int n = 10; n <= 40; ++n) CHECK(mean_variance(describe("SO", n), 1.5 * std::log(n)).variance <= 8.0);
}

TEST_CASE("tabulated forms agree with the square expansions") {
  for (const char* f : kFamilyNames) {
    for (int n : {4, 7}) {
      SpaceDescriptor d = at(f, n);
      for (double t : {0.0, 0.3, 1.0, 3.0}) {
        MeanVariance a = mean_variance(d, t);
        MeanVariance b = mean_variance_from_expansion(d, t);
        CAPTURE(f);
        CAPTURE(n);
        CAPTURE(t);
        CHECK(a.mean == doctest::Approx(b.mean).epsilon(1e-10));
        CHECK(a.variance == doctest::Approx(b.variance).epsilon(1e-9).scale(1.0));
      }
    }
  }
}

TEST_CASE("variances are non-negative") {
  for (const char* f : kFamilyNames) {
    const int n0 = at(f, 4).n0;
    for (int n = std::max(n0, 2); n <= n0 + 10; ++n) {
      SpaceDescriptor d = at(f, n);
      for (int i = 0; i <= 200; ++i) {
        double t = 0.05 * i;
        CAPTURE(f);
        CAPTURE(n);
        CAPTURE(t);
        CHECK(mean_variance(d, t).variance >= -1e-9);
      }
    }
  }
}

TEST_CASE("lower bound examples") {
  for (int n : {10, 15, 20, 40}) {
    SpaceDescriptor d = describe("SO", n);
    for (double eps : {0.05, 0.1, 0.2}) {
      double t = 2 * (1 - eps) * std::log(n);
      CHECK(lower_bound(d, t) >= 1 - 36 / std::pow(n, 2 * eps));
    }
    SpaceDescriptor gr = describe("GrR", n, 2);
    for (double eps : {0.05, 0.1, 0.2}) {
      double t = (1 - eps) * cutoff_time(gr);
      CHECK(lower_bound(gr, t) >= 1 - 32 / std::pow(n, eps));
    }
  }
  CHECK(lower_bound(describe("SO", 12), 200.0) == 0.0);
  CHECK(lower_bound(describe("GrH", 8, 2), 200.0) == 0.0);
}

TEST_CASE("profile shape") {
  SpaceDescriptor d = describe("SO", 20);
  std::vector<ProfilePoint> pts = profile(d, default_profile_grid(d));
  REQUIRE(pts.size() == 41);
  for (size_t i = 0; i < pts.size(); ++i) {
    CHECK(pts[i].lower >= 0);
    CHECK(pts[i].lower <= 1);
    CHECK(pts[i].upper >= 0);
    CHECK(pts[i].upper <= 1);
    if (i > 0) {
      CHECK(pts[i].t > pts[i - 1].t);
      CHECK(pts[i].upper <= pts[i - 1].upper);
    }
  }
  std::vector<ProfilePoint> two = profile(d, {2 * 0.8 * std::log(20.0), 2 * 1.5 * std::log(20.0)});
  CHECK(two[0].lower >= std::max(0.0, 1 - 36 / std::pow(20.0, 0.4)));
  CHECK(two[1].upper <= 6 / std::pow(20.0, 0.25));
}

TEST_CASE("doubling n shifts the cut-off by alpha log 2") {
  SpaceDescriptor small = describe("SU", 6);
  SpaceDescriptor large = describe("SU", 12);
  double shift = crossing(large, 0.1) - crossing(small, 0.1);
  CHECK(shift == doctest::Approx(small.alpha_cutoff * std::log(2.0)).epsilon(0.25));
}

TEST_CASE("profile CSV") {
  SpaceDescriptor d = describe("SU", 6);
  std::string csv = to_csv(profile(d, {1.0, 2.0}));
  CHECK(csv.rfind("t,lower,upper\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
