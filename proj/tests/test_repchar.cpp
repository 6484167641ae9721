#include <doctest.h>

#include "repchar.hpp"
#include "sampler.hpp"

#include <boost/random/uniform_real_distribution.hpp>

#include <numbers>

using namespace cutofflab;

namespace {

std::vector<cplx> on_circle(const std::vector<double>& angles) {
  std::vector<cplx> z;
  for (double a : angles) z.push_back(std::polar(1.0, a));
  return z;
}

LieType type_of(Family f, int n) {
  if (f == Family::SU) return LieType::A;
  if (f == Family::USp) return LieType::C;
  return n % 2 ? LieType::B : LieType::D;
}

}  // namespace

TEST_CASE("dimensions") {
  CHECK(dimension(describe("USp", 3), parse_weight("1,1,1")) == 14);
  for (int n = 2; n <= 8; ++n) {
    SpaceDescriptor d = describe("SU", n);
    CHECK(dimension(d, parse_weight("1", indexing_set(d))) == n);
    CHECK(dimension(d, zero_weight(indexing_set(d))) == 1);
  }
  CHECK(dimension(describe("SU", 4), parse_weight("2,1,0")) == 20);
  CHECK(dimension(describe("SO", 7), parse_weight("1/2,1/2,1/2", WeightKind::halfY)) == 8);
  CHECK(dimension(describe("SO", 8), parse_weight("1,1,0,0", indexing_set(describe("SO", 8)))) == 28);
  CHECK(dimension(describe("GrC", 6, 2), parse_weight("1,0")) == 35);
}

TEST_CASE("Casimir exponents") {
  for (int m = 2; m <= 8; ++m) {
    SpaceDescriptor d = describe("SO", 2 * m + 1);
    CHECK(casimir_exponent(d, parse_weight("1", indexing_set(d))) == Rational(2 * m, 2 * m + 1));
    SpaceDescriptor u = describe("USp", m);
    CHECK(casimir_exponent(u, parse_weight("1", indexing_set(u))) == Rational(2 * m + 1, 2 * m));
    CHECK(casimir_exponent(u, zero_weight(indexing_set(u))) == 0);
  }
  CHECK_THROWS_AS(casimir_exponent(describe("USpn_Un", 3), parse_weight("1,0,0")), Error);
}

TEST_CASE("type D sign multiplicity") {
  SpaceDescriptor d = describe("SO", 8);
  CHECK(sign_multiplicity(d, parse_weight("1,1,1,1", indexing_set(d))) == 2);
  CHECK(sign_multiplicity(d, parse_weight("1,1,0,0", indexing_set(d))) == 1);
  CHECK(sign_multiplicity(describe("SO", 9), parse_weight("1,1,1,1", WeightKind::halfY)) == 1);
}

TEST_CASE("Schur function examples") {
  for (double theta : {0.3, 1.1, 2.9})
    for (int k = 0; k <= 5; ++k) {
      cplx v = schur(LieType::A, make_weight({k}, WeightKind::Y), on_circle({theta}));
      CHECK(std::abs(v - std::polar(1.0, k * theta)) < 1e-12);
    }
  std::vector<cplx> z = on_circle({0.2, 0.9, 2.1});
  cplx trace = 0;
  for (auto x : z) trace += x + 1.0 / x;
  CHECK(std::abs(schur(LieType::C, make_weight({1, 0, 0}, WeightKind::Y), z) - trace) < 1e-12);
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D})
    CHECK(std::abs(schur(t, make_weight({0, 0, 0}, WeightKind::Y), z) - 1.0) < 1e-12);
}

TEST_CASE("square identities") {
  CHECK(square_identity_residual(LieType::B, on_circle({0.1, 0.7, 1.3, 2.0, 2.8})) <= 1e-10);
  CHECK(square_identity_residual(LieType::A, on_circle({0.4, 1.5, -1.9})) <= 1e-10);
  // distinct roots of unity
  std::vector<double> roots;
  for (int j = 1; j <= 4; ++j) roots.push_back(2 * std::numbers::pi * j / 11);
  for (LieType t : {LieType::B, LieType::C, LieType::D}) CHECK(square_identity_residual(t, on_circle(roots)) <= 1e-10);
  CHECK_THROWS_AS(square_identity_residual(LieType::A, on_circle({0.4, 1.5, 0.3})), Error);
  CHECK_THROWS_AS(require_unit_alphabet({cplx(1.1, 0)}), Error);
}

TEST_CASE("dimension is the character at the identity") {
  const double eps = 1e-4;
  for (Family f : {Family::SU, Family::SO, Family::USp}) {
    for (int n = 3; n <= 5; ++n) {
      SpaceDescriptor d = describe(f, n);
      IsometryGroup g = isometry_group(d);
      int letters = f == Family::SU ? n : g.rank;
      std::vector<double> angles;
      for (int j = 1; j <= letters; ++j) angles.push_back(eps * j);
      if (f == Family::SU) {
        double s = 0;
        for (double a : angles) s += a;
        for (double& a : angles) a -= s / n;
      }
      for (const Weight& w : enumerate_weights(indexing_set(d), 4, false)) {
        double dim = to_double(dimension(d, w));
        cplx v = schur(type_of(f, n), w, on_circle(angles));
        double expected = dim * sign_multiplicity(d, w);
        CAPTURE(family_name(f));
        CAPTURE(n);
        CAPTURE(w.str());
        CHECK(std::abs(v.real() - expected) <= 1e-4 * expected);
      }
    }
  }
}

TEST_CASE("Casimir exponent grows along growth paths") {
  for (Family f : {Family::SU, Family::USp, Family::SO}) {
    SpaceDescriptor d = describe(f, f == Family::SO ? 11 : 5);
    const IndexingSet set = indexing_set(d);
    for (const Weight& w : enumerate_weights({WeightKind::Y, set.length}, 8)) {
      Rational prev = 0;
      for (const auto& s : growth_path(w)) {
        Weight next = apply_step(s);
        if (!belongs(next, set)) break;
        Rational b = casimir_exponent(d, next);
        CHECK(b > prev);
        prev = b;
      }
    }
  }
}

TEST_CASE("Casimir lower bounds by size") {
  for (int n = 3; n <= 12; ++n) {
    for (Family f : {Family::SO, Family::USp}) {
      SpaceDescriptor d = describe(f, f == Family::SO ? 2 * n + 1 : n);
      for (const Weight& w : enumerate_weights(indexing_set(d), n <= 6 ? 20 : 10))
        CHECK(casimir_exponent(d, w) * 2 >= w.size());
    }
  }
  for (int n = 4; n <= 9; ++n) {
    SpaceDescriptor d = describe("GrC", n, 2);
    for (const Weight& w : enumerate_weights(indexing_set(d), 20)) CHECK(casimir_exponent(d, w) >= w.size());
  }
}

TEST_CASE("random square identities") {
  Rng rng = path_rng(7, 7);
  boost::random::uniform_real_distribution<double> u(0.05, std::numbers::pi - 0.05);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> a;
    for (int i = 0; i < 4; ++i) a.push_back(u(rng) + 0.01 * i);
    for (LieType t : {LieType::B, LieType::C, LieType::D}) CHECK(square_identity_residual(t, on_circle(a)) <= 1e-9);
  }
}
