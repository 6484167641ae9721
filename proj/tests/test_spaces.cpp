#include <doctest.h>

#include "partitions.hpp"
#include "repchar.hpp"
#include "spaces.hpp"

using namespace cutofflab;

namespace {

const Family kFamilies[] = {Family::SO,      Family::SU,      Family::USp,       Family::GrR,
                            Family::GrC,     Family::GrH,     Family::SO2n_Un,   Family::SUn_SOn,
                            Family::SU2n_USpn, Family::USpn_Un};

bool grassmannian(Family f) { return f == Family::GrR || f == Family::GrC || f == Family::GrH; }

Status status_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.status();
  }
  return Status::Ok;
}

}  // namespace

TEST_CASE("constants table rows") {
  SpaceDescriptor so = describe("SO", 10);
  CHECK(so.beta == 1);
  CHECK(so.alpha_cutoff == 2);
  CHECK(so.n0 == 10);
  CHECK(so.c_lower == 36);
  CHECK(so.C_upper == 6);
  CHECK(so.gamma_b == 2);
  CHECK(so.gamma_a == 2);
  CHECK(so.is_group);

  SpaceDescriptor grh = describe("GrH", 6, 2);
  CHECK(grh.beta == 4);
  CHECK(grh.alpha_cutoff == 1);
  CHECK(grh.n0 == 3);
  CHECK(grh.c_lower == 16);
  CHECK(grh.C_upper == 2);
  CHECK_FALSE(grh.is_group);

  CHECK(describe("SU", 2).drift_alpha == Rational(-3, 4));
  CHECK(describe("SO", 7).drift_alpha == Rational(-6, 7));
  CHECK(describe("USp", 3).drift_alpha == Rational(-7, 6));
  // quotients carry the drift of their isometry group
  CHECK(describe("SO2n_Un", 4).drift_alpha == Rational(-7, 8));
  CHECK(describe("SU2n_USpn", 3).drift_alpha == Rational(-35, 36));
}

TEST_CASE("describe validates its arguments") {
  CHECK(status_of([] { describe("Sp", 4); }) == Status::UnknownFamily);
  CHECK(status_of([] { describe("SU", 1); }) == Status::InvalidRank);
  CHECK(status_of([] { describe("GrC", 6); }) == Status::InvalidRank);
  CHECK(status_of([] { describe("GrC", 6, 6); }) == Status::InvalidRank);
  CHECK(status_of([] { describe("GrC", 6, 0); }) == Status::InvalidRank);
  CHECK(status_of([] { describe("SU", 6, 2); }) == Status::InvalidRank);
  // q is folded into q <= n/2
  CHECK(*describe("GrC", 7, 5).q == 2);
  CHECK(*describe("GrR", 6, 3).q == 3);
}

TEST_CASE("indexing sets") {
  auto is = [](const char* f, int n, std::optional<int> q, WeightKind k, int len) {
    IndexingSet s = indexing_set(describe(f, n, q));
    CHECK(s.kind == k);
    CHECK(s.length == len);
  };
  is("SU", 5, std::nullopt, WeightKind::Y, 4);
  is("SO", 11, std::nullopt, WeightKind::halfY, 5);
  is("SO", 10, std::nullopt, WeightKind::signedLastPart, 5);
  is("USp", 4, std::nullopt, WeightKind::Y, 4);
  is("USpn_Un", 4, std::nullopt, WeightKind::evenY, 4);
  is("GrR", 7, 3, WeightKind::evenOrOddY, 3);
  is("GrC", 6, 2, WeightKind::Y, 2);
  is("GrH", 6, 2, WeightKind::doubledY, 4);
  is("SU2n_USpn", 3, std::nullopt, WeightKind::doubledY, 5);
  is("SUn_SOn", 4, std::nullopt, WeightKind::evenY, 3);
  is("SO2n_Un", 5, std::nullopt, WeightKind::doubledY, 5);
}

TEST_CASE("minimal weights") {
  MinimalWeight so = minimal_weight(describe("SO", 11));
  CHECK(so.weight.str() == "1,0,0,0,0");
  CHECK(so.b_min == Rational(10, 11));
  CHECK(so.a_min == 121);

  MinimalWeight su = minimal_weight(describe("SU", 4));
  CHECK(su.weight.str() == "1,0,0");
  CHECK(su.b_min == Rational(15, 16));
  CHECK(su.a_min == 16);

  MinimalWeight gr = minimal_weight(describe("GrC", 6, 2));
  CHECK(gr.weight.str() == "1,0");
  CHECK(gr.b_min == 2);
  CHECK(gr.a_min == 35);
}

TEST_CASE("minimal weight agrees with the representation formulas") {
  for (Family f : kFamilies) {
    for (int n = 2; n <= 9; ++n) {
      if (f == Family::SO && n < 3) continue;
      // The isometry groups SO(2) and SO(4) split the minimal label into two
      // labels of opposite sign, which the tabulated coefficient counts together.
      if ((f == Family::GrR || f == Family::SO2n_Un) && n == 2) continue;
      std::optional<int> q;
      if (grassmannian(f)) q = std::max(1, n / 2);
      SpaceDescriptor d = describe(f, n, q);
      MinimalWeight m = minimal_weight(d);
      CAPTURE(std::string(family_name(f)));
      CAPTURE(n);
      CHECK(belongs(m.weight, indexing_set(d)));
      CHECK(m.b_min == casimir_exponent(d, m.weight));
      CHECK(m.a_min == series_coefficient(d, m.weight) / sign_multiplicity(d, m.weight));
    }
  }
}

TEST_CASE("group minimal weight is the brute-force minimizer over small weights") {
  // Below SO(9) the spin weights have a Casimir exponent at most that of the
  // vector weight, so the orthogonal check starts at 9.
  for (Family f : {Family::SO, Family::SU, Family::USp}) {
    for (int n = f == Family::SO ? 9 : 3; n <= 14; ++n) {
      SpaceDescriptor d = describe(f, n);
      MinimalWeight m = minimal_weight(d);
      std::vector<Weight> argmins;
      std::optional<Rational> best;
      for (const Weight& w : enumerate_weights(indexing_set(d), 6)) {
        if (w.is_zero()) continue;
        Rational b = casimir_exponent(d, w);
        if (!best || b < *best) {
          best = b;
          argmins = {w};
        } else if (b == *best) {
          argmins.push_back(w);
        }
      }
      CAPTURE(std::string(family_name(f)));
      CAPTURE(n);
      CHECK(*best == m.b_min);
      std::vector<Weight> expected{m.weight};
      if (f == Family::SU && n > 2 && n - 1 <= 6)
        expected.push_back(make_weight(std::vector<int>(static_cast<size_t>(n - 1), 1), WeightKind::Y));
      CHECK(argmins.size() == expected.size());
      for (const auto& w : expected) CHECK(std::find(argmins.begin(), argmins.end(), w) != argmins.end());
    }
  }
}

TEST_CASE("cut-off parameter and time") {
  CHECK(cutoff_param(describe("SO2n_Un", 5)) == 10);
  CHECK(cutoff_param(describe("SU2n_USpn", 4)) == 8);
  CHECK(cutoff_param(describe("SO", 11)) == 11);
  CHECK(cutoff_time(describe("SO", 11)) == doctest::Approx(2 * std::log(11.0)));
  CHECK(cutoff_time(describe("GrC", 8, 3)) == doctest::Approx(std::log(8.0)));
  CHECK(time_at_eps(describe("USp", 3), 0.5) == doctest::Approx(3 * std::log(3.0)));
}

TEST_CASE("descriptor JSON uses snake_case fields") {
  nlohmann::json j = to_json(describe("GrH", 6, 2));
  for (const char* key : {"family", "n", "q", "beta", "alpha_cutoff", "n0", "c_lower", "C_upper", "gamma_b",
                          "gamma_a", "drift_alpha", "is_group"})
    CHECK(j.contains(key));
  CHECK(j["q"] == 2);
  CHECK(to_json(describe("SU", 3))["q"].is_null());
}
