#include <doctest.h>

#include "heatseries.hpp"

#include <boost/math/quadrature/trapezoidal.hpp>

#include <cmath>
#include <numbers>

using namespace cutofflab;

TEST_CASE("dominating series examples") {
  SpaceDescriptor usp = describe("USp", 3);
  TruncationReport r = dominating_series(usp, 2 * 1.5 * std::log(3.0), {.size_cap = 40});
  CHECK(r.controllable);
  CHECK(r.partial_sum + r.tail_bound < 36 / std::sqrt(3.0));
  CHECK(r.partial_sum > 0);

  SpaceDescriptor su = describe("SU", 4);
  TruncationReport s = dominating_series(su, 2 * 1.25 * std::log(4.0), {.size_cap = 40});
  CHECK(s.controllable);
  CHECK(s.partial_sum + s.tail_bound <= 200);

  for (const char* f : {"SO", "SU", "USp"}) {
    TruncationReport far = dominating_series(describe(f, 5), 400.0);
    CHECK(far.partial_sum < 1e-30);
  }
}

TEST_CASE("series at small time reports an uncontrollable tail") {
  TruncationReport r = dominating_series(describe("SU", 6), 1e-4, {.size_cap = 10, .auto_extend = false});
  CHECK_FALSE(r.controllable);
  CHECK(std::isinf(r.tail_bound));
  CHECK(tv_upper_bound(describe("SU", 6), 1e-4, {.size_cap = 10, .auto_extend = false}) == 1.0);
}

TEST_CASE("total variation upper bound examples") {
  SpaceDescriptor so = describe("SO", 11);
  double v = tv_upper_bound(so, time_at_eps(so, 1.0));
  CHECK(v <= 6 / std::sqrt(11.0));
  CHECK(v <= 1.0);
  TruncationReport r = dominating_series(so, time_at_eps(so, 1.0));
  CHECK(v == doctest::Approx(0.5 * std::sqrt(r.partial_sum + r.tail_bound)).epsilon(1e-12));

  SpaceDescriptor grh = describe("GrH", 6, 2);
  CHECK(tv_upper_bound(grh, time_at_eps(grh, 1.0)) <= 2 / std::pow(6.0, 0.25));
  CHECK(tv_upper_bound(so, 1e3) < 1e-100);
}

TEST_CASE("series and bound decrease in time") {
  for (const char* f : {"SO", "SU", "USp", "GrR", "GrC", "GrH", "SO2n_Un", "SUn_SOn", "SU2n_USpn", "USpn_Un"}) {
    const bool gr = std::string(f).rfind("Gr", 0) == 0;
    SpaceDescriptor d = describe(f, 6, gr ? std::optional<int>(2) : std::nullopt);
    double prev_sum = INFINITY, prev_tv = 1.0;
    for (double e = 0.0; e <= 1.5; e += 0.25) {
      double t = time_at_eps(d, e);
      TruncationReport r = dominating_series(d, t);
      double total = r.controllable ? r.partial_sum + r.tail_bound : INFINITY;
      double tv = tv_upper_bound(d, t);
      CAPTURE(f);
      CAPTURE(e);
      CHECK(total <= prev_sum * (1 + 1e-12));
      CHECK(tv <= prev_tv + 1e-15);
      prev_sum = total;
      prev_tv = tv;
    }
  }
}

TEST_CASE("upper bound is dominated by the family constant") {
  const char* groups[] = {"SO", "SU", "USp"};
  for (const char* f : groups) {
    for (int offset : {0, 5}) {
      SpaceDescriptor base = describe(f, 2);
      SpaceDescriptor d = describe(f, base.n0 + offset);
      for (double eps : {0.5, 1.0}) {
        double bound = to_double(d.C_upper) / std::pow(cutoff_param(d), d.gamma_a * eps / 4);
        CAPTURE(f);
        CAPTURE(d.n);
        CAPTURE(eps);
        CHECK(tv_upper_bound(d, time_at_eps(d, eps)) <= bound);
      }
    }
  }
}

TEST_CASE("per-term sweep") {
  SpaceDescriptor usp = describe("USp", 5);
  SweepReport r = bound_sweep(usp, 20);
  CHECK(r.max_value >= 1.0);
  CHECK(r.max_value <= 14.0 / 3);
  CHECK(per_term_within(usp, zero_weight(indexing_set(usp)), 1));
  CHECK_FALSE(per_term_within(usp, zero_weight(indexing_set(usp)), Rational(99, 100)));
  SpaceDescriptor so = describe("SO", 11);
  Weight first = parse_weight("1", indexing_set(so));
  double direct = to_double(dimension(so, first)) * std::pow(11.0, -to_double(casimir_exponent(so, first)));
  CHECK(bound_sweep(so, 10, false).max_value >= direct * (1 - 1e-12));
}

TEST_CASE("growth quotients") {
  for (int n = 3; n <= 12; ++n) {
    SpaceDescriptor d = describe("USp", n);
    Weight zero = zero_weight(indexing_set(d));
    CHECK(eta_quotient(d, zero, 1, 1) <= 2.0);
    CHECK(eta_quotient(d, zero, 2, 1) <= 7.0 / 3);
    CHECK(eta_quotient(d, parse_weight("7", indexing_set(d)), 1, 8) < 1.0);
  }
  SpaceDescriptor su = describe("SU", 6);
  Weight base = parse_weight("2,1", indexing_set(su));
  // direct evaluation of the quotient of per-term quantities
  Weight next = parse_weight("3,1", indexing_set(su));
  auto term = [&](const Weight& w) {
    return to_double(dimension(su, w)) * std::exp(-cutoff_time(su) / 2 * to_double(casimir_exponent(su, w)));
  };
  CHECK(eta_quotient(su, base, 1, 2) == doctest::Approx(term(next) / term(base)).epsilon(1e-10));
}

TEST_CASE("circle density") {
  CHECK(circle_density(0.0, 2.0) == doctest::Approx(1.772637204826652).epsilon(1e-12));
  double direct = 1;
  for (int k = 1; k < 50; ++k) direct += 2 * std::exp(-k * k * 0.7 / 2) * std::cos(k * 1.3);
  CHECK(circle_density(1.3, 0.7) == doctest::Approx(direct).epsilon(1e-12));
  double integral = boost::math::quadrature::trapezoidal(
      [](double th) { return circle_density(th, 0.5); }, -std::numbers::pi, std::numbers::pi);
  CHECK(integral / (2 * std::numbers::pi) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("group densities") {
  SpaceDescriptor su2 = describe("SU", 2);
  for (double theta : {0.3, 1.2, 2.5}) {
    for (double t : {0.5, 2.0, 6.0}) {
      double expected = 0;
      for (int k = 0; k < 200; ++k)
        expected += std::exp(-k * (k + 2) * t / 8) * (k + 1) * std::sin((k + 1) * theta) / std::sin(theta);
      CHECK(group_density(su2, {theta, -theta}, t, 200) == doctest::Approx(expected).epsilon(1e-9));
    }
  }
  SpaceDescriptor so3 = describe("SO", 3);
  CHECK(group_density(so3, {1e-3}, 60.0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(group_density(describe("USp", 3), {0.4, 1.1, 2.0}, 80.0) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("rank-one densities") {
  CHECK(is_rank_one(describe("GrR", 7, 1)));
  CHECK_FALSE(is_rank_one(describe("GrC", 7, 2)));
  SpaceDescriptor sphere = describe("GrR", 7, 1);
  CHECK(rank_one_density(sphere, {1.0, 1.0, 1.0, 1.0, 1.0}, 200.0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(rank_one_density(describe("GrC", 7, 2), {1.0}, 1.0), Error);
}

TEST_CASE("weight monoid bound holds on enumerated weights") {
  for (const char* f : {"SO", "SU", "USp", "SO2n_Un", "SUn_SOn", "SU2n_USpn", "USpn_Un"}) {
    SpaceDescriptor d = describe(f, 6);
    WeightMonoid m = weight_monoid(d);
    for (const Weight& w : enumerate_weights(indexing_set(d), 10)) {
      CAPTURE(f);
      CAPTURE(w.str());
      CHECK(monoid_lower_bound(d, m, w) <= to_long_double(casimir_exponent(d, w)) * (1 + 1e-15L) + 1e-15L);
    }
  }
}
