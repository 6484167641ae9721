#include <doctest.h>

#include "closed_forms.hpp"
#include "moments.hpp"
#include "zonal.hpp"

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

}  // namespace

TEST_CASE("basis contracts to the drift constant") {
  for (Algebra a : {Algebra::so, Algebra::su, Algebra::usp}) {
    for (int n = minimum_algebra_n(a); n <= 5; ++n) {
      std::vector<Eigen::MatrixXcd> basis = algebra_basis(a, n);
      const int d = defining_dim(a, n);
      Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
      for (const auto& x : basis) sum += x * x;
      const double alpha = to_double(algebra_drift(a, n));
      CAPTURE(algebra_name(a));
      CAPTURE(n);
      CHECK((sum - alpha * Eigen::MatrixXcd::Identity(d, d)).norm() < 1e-12);
      for (const auto& x : basis) CHECK((x + x.adjoint()).norm() < 1e-12);
    }
  }
  CHECK(algebra_drift(Algebra::su, 2) == Rational(-3, 4));
  CHECK(algebra_drift(Algebra::usp, 3) == Rational(-7, 6));
}

TEST_CASE("first-order generator is a multiple of the identity") {
  for (int n = 3; n <= 6; ++n) {
    MomentGenerator g(Algebra::so, n, 1, 0);
    Eigen::MatrixXcd dense = g.dense();
    const double alpha = to_double(algebra_drift(Algebra::so, n));
    CHECK((dense - alpha / 2 * Eigen::MatrixXcd::Identity(n, n)).norm() < 1e-12);
    CHECK(moment(Algebra::so, n, "g(1,1)", 0.7).real() == doctest::Approx(std::exp(-(n - 1) * 0.7 / (2.0 * n))));
  }
}

TEST_CASE("moments at time zero are delta patterns") {
  CHECK(moment(Algebra::su, 4, "g(1,1)^2 gbar(2,2)", 0).real() == doctest::Approx(1.0));
  CHECK(std::abs(moment(Algebra::su, 4, "g(1,2) gbar(1,2)", 0)) < 1e-14);
  CHECK(moment(Algebra::usp, 3, "g(1,1) g(2,2)", 0).real() == doctest::Approx(1.0));
  CHECK(std::abs(moment(Algebra::so, 5, "g(1,2)^2", 0)) < 1e-14);
}

TEST_CASE("closed-form moment examples") {
  for (int n = 3; n <= 6; ++n) {
    for (double t : {0.1, 0.8, 2.5}) {
      CHECK(moment(Algebra::so, n, "g(1,1)^2", t).real() ==
            doctest::Approx(1.0 / n + (1 - 1.0 / n) * std::exp(-t)).epsilon(1e-10));
      CHECK(moment(Algebra::su, n, "abs2(1,2)", t).real() ==
            doctest::Approx((1 - std::exp(-t)) / n).epsilon(1e-10));
      CHECK(std::abs(moment(Algebra::so, n, "g(1,1) g(1,2)", t)) < 1e-13);
    }
  }
  for (int n = 2; n <= 4; ++n)
    for (double t : {0.3, 1.7})
      CHECK(moment(Algebra::usp, n, "g(1,1)^2", t).real() ==
            doctest::Approx(std::exp(-(n + 1) * t / n)).epsilon(1e-10));
}

TEST_CASE("moments approach Haar values") {
  CHECK(moment(Algebra::su, 4, "abs2(2,3)", 40).real() == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(moment(Algebra::so, 5, "g(1,1)^2", 40).real() == doctest::Approx(0.2).epsilon(1e-9));
  CHECK(std::abs(moment(Algebra::su, 3, "g(1,1)", 60)) < 1e-9);
}

TEST_CASE("closed forms agree with the engine") {
  for (Algebra a : {Algebra::so, Algebra::su, Algebra::usp}) {
    for (const ClosedFormCheck& c : check_closed_forms(a, a == Algebra::usp ? 3 : 4, {0.0, 0.4, 1.5})) {
      CAPTURE(c.label);
      CAPTURE(c.t);
      CHECK(c.abs_error < 1e-9);
    }
  }
}

TEST_CASE("eigen-table examples") {
  EigenTableReport so5 = verify_eigentable(Algebra::so, 5, 2, 0);
  CHECK(so5.passed);
  std::map<long long, long long> so5_mult;
  for (const EigenRow& r : so5.rows) so5_mult[std::llround(r.eigenvalue)] = r.computed_mult;
  CHECK(so5_mult[4] == 1);
  CHECK(so5_mult[1] == 10);
  CHECK(so5_mult[-1] == 14);

  EigenTableReport su3 = verify_eigentable(Algebra::su, 3, 1, 1);
  CHECK(su3.passed);
  long long total = 0;
  for (const EigenRow& r : su3.rows) {
    if (std::abs(r.eigenvalue - 8) < 1e-9) CHECK(r.computed_mult == 1);
    if (std::abs(r.eigenvalue + 1) < 1e-9) CHECK(r.computed_mult == 8);
    total += r.computed_mult;
  }
  CHECK(total == 9);

  EigenTableReport usp3 = verify_eigentable(Algebra::usp, 3, 2, 0);
  CHECK(usp3.passed);
  for (const EigenRow& r : usp3.rows) {
    if (std::abs(r.eigenvalue - 3.5) < 1e-9) CHECK(r.computed_mult == 1);
    if (std::abs(r.eigenvalue - 0.5) < 1e-9) CHECK(r.computed_mult == 14);
    if (std::abs(r.eigenvalue + 0.5) < 1e-9) CHECK(r.computed_mult == 21);
  }
  CHECK(usp3.unexpected.empty());
}

TEST_CASE("zonal expansions") {
  for (int n = 3; n <= 6; ++n) {
    std::vector<ZonalTerm> terms = zonal_square_expansion(describe("SUn_SOn", n));
    REQUIRE(terms.size() == 2);
    Rational denom = n * n + n;
    for (const ZonalTerm& t : terms) {
      if (t.weight.is_zero())
        CHECK(t.coefficient == Rational(2) / denom);
      else
        CHECK(t.coefficient == Rational(n * n + n - 2) / denom);
    }
    std::vector<ZonalTerm> usp = zonal_square_expansion(describe("USpn_Un", n));
    REQUIRE(usp.size() == 3);
    for (const ZonalTerm& t : usp) {
      if (t.weight.is_zero()) CHECK(t.coefficient == Rational(1, 2 * n * n + n));
      if (t.weight.str() == make_weight({2, 2}, WeightKind::Y).str() || t.weight.part(1) == 2)
        CHECK(t.coefficient == Rational(4 * (n - 1) * (n + 1), 3 * n * (2 * n + 1)));
      if (t.weight.part(0) == 4) CHECK(t.coefficient == Rational(n + 1, 3 * n));
    }
  }
}

TEST_CASE("zonal expansion matches the engine") {
  for (const char* f : {"GrR", "GrC", "GrH", "SO2n_Un", "SUn_SOn", "SU2n_USpn", "USpn_Un"}) {
    const bool gr = std::string(f).rfind("Gr", 0) == 0;
    SpaceDescriptor d = describe(f, 4, gr ? std::optional<int>(1) : std::nullopt);
    Rational sum = 0;
    for (const ZonalTerm& t : zonal_square_expansion(d)) sum += t.coefficient;
    CAPTURE(f);
    CHECK(sum == 1);
    for (double t : {0.0, 0.5}) CHECK(zonal_square_series(d, t) == doctest::Approx(zonal_square_engine(d, t)).epsilon(1e-9));
    CHECK(zonal_mean_engine(d, 0.8).real() ==
          doctest::Approx(std::exp(-0.8 * to_double(minimal_weight(d).b_min) / 2)).epsilon(1e-9));
  }
}

TEST_CASE("moment errors") {
  CHECK(status_of([] { moment(Algebra::su, 3, "g(1,1)^5", 1.0); }) == Status::UnsupportedPattern);
  CHECK(status_of([] { moment(Algebra::so, 3, "h(1,1)", 1.0); }) == Status::UnsupportedPattern);
  CHECK(status_of([] { moment(Algebra::so, 3, "g(4,1)", 1.0); }) == Status::UnsupportedPattern);
  CHECK(status_of([] { MomentGenerator(Algebra::su, 60, 4, 0); }) == Status::TooLarge);
  CHECK(status_of([] { algebra_basis(Algebra::so, 2); }) == Status::InvalidRank);
}
