#include <doctest.h>

#include "sampler.hpp"

#include <cmath>

using namespace cutofflab;

namespace {

Status status_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.status();
  }
  return Status::Ok;
}

double combined_se(const Estimate& a, const Estimate& b) {
  return std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
}

}  // namespace

TEST_CASE("zero time gives the identity") {
  for (Algebra a : {Algebra::so, Algebra::su, Algebra::usp}) {
    GroupModel m = group_model(a, 4);
    Rng rng = path_rng(1, 0);
    Eigen::MatrixXcd g = brownian_endpoint(m, 0.0, 10, rng);
    CHECK((g - Eigen::MatrixXcd::Identity(m.dim, m.dim)).norm() < 1e-14);
  }
}

TEST_CASE("samples stay on the group") {
  for (Algebra a : {Algebra::so, Algebra::su, Algebra::usp}) {
    GroupModel m = group_model(a, 5);
    Rng rng = path_rng(3, 1);
    Eigen::MatrixXcd b = brownian_endpoint(m, 2.0, 200, rng);
    Eigen::MatrixXcd h = haar_sample(m, rng);
    CAPTURE(algebra_name(a));
    CHECK(unitarity_residual(b) < 1e-12);
    CHECK(unitarity_residual(h) < 1e-12);
    if (a != Algebra::usp) {
      CHECK(std::abs(b.determinant() - 1.0) < 1e-12);
      CHECK(std::abs(h.determinant() - 1.0) < 1e-12);
    } else {
      CHECK(symplectic_residual(b) < 1e-12);
      CHECK(symplectic_residual(h) < 1e-12);
    }
    if (a == Algebra::so) CHECK(b.imag().norm() < 1e-14);
  }
}

TEST_CASE("step resolution") {
  CHECK(resolved_steps({.t_final = 1.0}) == 100);
  CHECK(resolved_steps({.t_final = 0.333}) == 34);
  CHECK(resolved_steps({.t_final = 1.0, .steps = 7}) == 7);
}

TEST_CASE("Haar moments of the trace") {
  SpaceDescriptor su4 = describe("SU", 4);
  PathConfig c{.seed = 5, .paths = 10000, .threads = 2};
  Estimate tr = estimate(su4, "trace", true, c);
  CHECK(std::abs(tr.mean) <= 4 * tr.std_error);
  Estimate sq = estimate(su4, "abs2", true, c);
  CHECK(std::abs(sq.mean.real() - 1.0) <= 4 * sq.std_error);

  SpaceDescriptor so10 = describe("SO", 10);
  Estimate so_tr = estimate(so10, "trace", true, {.seed = 6, .paths = 5000, .threads = 2});
  CHECK(std::abs(so_tr.mean) <= 4 * so_tr.std_error);
}

TEST_CASE("Brownian trace mean matches the exact value") {
  SpaceDescriptor su3 = describe("SU", 3);
  Estimate e = estimate(su3, "trace", false, {.t_final = 1.0, .seed = 8, .paths = 2000, .threads = 2});
  double exact = 3 * std::exp(-to_double(minimal_weight(su3).b_min) / 2);
  CHECK(std::abs(e.mean.real() - exact) <= 4 * e.std_error);
  CHECK(std::abs(e.mean.imag()) <= 4 * e.std_error);
}

TEST_CASE("halving the step leaves the estimate within noise") {
  SpaceDescriptor usp = describe("USp", 3);
  PathConfig coarse{.t_final = 1.0, .steps = 100, .seed = 21, .paths = 2000, .threads = 2};
  PathConfig fine = coarse;
  fine.steps = 200;
  fine.seed = 22;
  Estimate a = estimate(usp, "trace", false, coarse);
  Estimate b = estimate(usp, "trace", false, fine);
  CHECK(std::abs(a.mean - b.mean) < 2 * combined_se(a, b));
}

TEST_CASE("conjugating the increments leaves the trace law unchanged") {
  GroupModel m = group_model(Algebra::su, 4);
  Rng krng = path_rng(99, 0);
  Eigen::MatrixXcd k = haar_sample(m, krng);
  const int paths = 1500;
  double plain = 0, plain2 = 0, conj = 0, conj2 = 0;
  for (int p = 0; p < paths; ++p) {
    Rng r1 = path_rng(31, p);
    Rng r2 = path_rng(32, p);
    double a = brownian_endpoint(m, 0.8, 80, r1).trace().real();
    double b = brownian_endpoint(m, 0.8, 80, r2, &k).trace().real();
    plain += a;
    plain2 += a * a;
    conj += b;
    conj2 += b * b;
  }
  double ma = plain / paths, mb = conj / paths;
  double va = plain2 / paths - ma * ma, vb = conj2 / paths - mb * mb;
  CHECK(std::abs(ma - mb) <= 4 * std::sqrt((va + vb) / paths));
}

TEST_CASE("estimates are independent of the thread count") {
  SpaceDescriptor d = describe("GrC", 5, 2);
  PathConfig c{.t_final = 0.6, .seed = 4, .paths = 64, .threads = 1};
  Estimate one = estimate(d, "omega", false, c);
  c.threads = 3;
  Estimate three = estimate(d, "omega", false, c);
  CHECK(one.mean == three.mean);
  CHECK(one.std_error == three.std_error);
  CHECK(one.variance == three.variance);
}

TEST_CASE("zonal statistic at time zero") {
  SpaceDescriptor d = describe("GrC", 6, 2);
  Estimate e = estimate(d, "zonal_min", false, {.t_final = 0.0, .paths = 8, .threads = 1});
  CHECK(e.mean.real() == doctest::Approx(std::sqrt(35.0)).epsilon(1e-12));
  CHECK(e.std_error < 1e-12);
}

TEST_CASE("indicator under Haar is bounded by Chebyshev") {
  SpaceDescriptor su5 = describe("SU", 5);
  Estimate e = estimate(su5, "indicator:3", true, {.seed = 12, .paths = 10000, .threads = 2});
  CHECK(e.mean.real() <= 1.0 / 9 + 4 * e.std_error);
}

TEST_CASE("statistic parsing") {
  CHECK(status_of([] { parse_statistic(describe("GrR", 5, 2), "trace"); }) == Status::UnsupportedStatistic);
  CHECK(status_of([] { parse_statistic(describe("SU", 3), "median"); }) == Status::UnsupportedStatistic);
  CHECK(parse_statistic(describe("SU", 3), "indicator:2.5").threshold == 2.5);
  CHECK(parse_statistic(describe("SU", 3), "moment:g(1,1) gbar(1,1)").kind == Statistic::Kind::moment);
}

TEST_CASE("estimates are reproducible") {
  SpaceDescriptor d = describe("SO", 6);
  PathConfig c{.t_final = 0.5, .seed = 77, .paths = 50, .threads = 2};
  CHECK(to_json(estimate(d, "omega", false, c)).dump() == to_json(estimate(d, "omega", false, c)).dump());
}
