#include <doctest.h>

#include "cutofflab/cutofflab.h"

#include <nlohmann/json.hpp>

#include <cmath>
#include <limits>
#include <memory>
#include <string>

using json = nlohmann::json;

namespace {

json take(char* raw) {
  std::unique_ptr<char, void (*)(char*)> guard(raw, cl_free);
  return json::parse(raw);
}

std::string take_text(char* raw) {
  std::unique_ptr<char, void (*)(char*)> guard(raw, cl_free);
  return raw;
}

struct Space {
  cl_space* ptr = nullptr;
  Space(const char* family, int n, int q = 0) { REQUIRE(cl_space_create(family, n, q, &ptr) == CL_OK); }
  ~Space() { cl_space_destroy(ptr); }
};

}  // namespace

TEST_CASE("space handles and descriptions") {
  Space usp("USp", 3);
  char* raw = nullptr;
  REQUIRE(cl_space_describe(usp.ptr, &raw) == CL_OK);
  json d = take(raw);
  CHECK(d["beta"] == 4);
  CHECK(d["alpha_cutoff"] == 2);
  CHECK(d["c_lower"] == "5");
  CHECK(d["C_upper"] == "3");
  CHECK(d["cutoff_param"] == 3);
  CHECK(d["cutoff_time"].get<double>() == doctest::Approx(2 * std::log(3.0)));

  REQUIRE(cl_space_minimal_weight(usp.ptr, &raw) == CL_OK);
  json m = take(raw);
  CHECK(m.is_object());

  Space so("SO", 11);
  REQUIRE(cl_space_indexing_set(so.ptr, &raw) == CL_OK);
  json s = take(raw);
  CHECK(s["kind"] == "halfY");
  CHECK(s["length"] == 5);
  cl_space_destroy(nullptr);
}

TEST_CASE("error codes and messages") {
  cl_space* sp = nullptr;
  CHECK(cl_space_create("XX", 4, 0, &sp) == CL_ERR_UNKNOWN_FAMILY);
  CHECK(sp == nullptr);
  CHECK(std::string(cl_last_error()).size() > 0);
  CHECK(cl_space_create("SO", 1, 0, &sp) == CL_ERR_INVALID_RANK);
  CHECK(cl_space_create("GrR", 5, 0, &sp) != CL_OK);
  CHECK(cl_space_create("SO", 5, 0, nullptr) == CL_ERR_INVALID_ARGUMENT);
  CHECK(std::string(cl_status_name(CL_ERR_TOO_LARGE)) == "TooLarge");

  Space su("SU", 4);
  char* raw = nullptr;
  CHECK(cl_dimension(su.ptr, "1/2,1/2", &raw) == CL_ERR_WEIGHT_KIND_MISMATCH);
  double re = 0, im = 0;
  CHECK(cl_moment("su", 3, "g(1,1)^5", 1.0, &re, &im) == CL_ERR_UNSUPPORTED_PATTERN);
  Space gr("GrR", 5, 2);
  CHECK(cl_estimate(gr.ptr, "trace", 1.0, 0, 10, 1, 1, 0, &raw) == CL_ERR_UNSUPPORTED_STATISTIC);
  CHECK(std::string(cl_version()).size() > 0);
}

TEST_CASE("exact representation data") {
  Space usp("USp", 3);
  char* raw = nullptr;
  REQUIRE(cl_dimension(usp.ptr, "1,1,1", &raw) == CL_OK);
  CHECK(take_text(raw) == "14");
  REQUIRE(cl_casimir_exponent(usp.ptr, "1", &raw) == CL_OK);
  CHECK(take_text(raw) == "7/6");
  REQUIRE(cl_enumerate(usp.ptr, 2, &raw) == CL_OK);
  json e = take(raw);
  CHECK(e.size() == 4);
  CHECK(e[0].contains("weight"));
  CHECK(e[0].contains("dimension"));
  CHECK(e[0].contains("casimir"));
  REQUIRE(cl_growth_path("2,1,0", &raw) == CL_OK);
  CHECK(take(raw).size() == 2);

  const double alphabet[] = {std::cos(0.4), std::sin(0.4)};
  double re = 0, im = 0;
  REQUIRE(cl_schur('A', "3", alphabet, 1, &re, &im) == CL_OK);
  CHECK(re == doctest::Approx(std::cos(1.2)));
  CHECK(im == doctest::Approx(std::sin(1.2)));
  const double unit[] = {std::cos(0.3), std::sin(0.3), std::cos(1.4), std::sin(1.4), std::cos(2.2), std::sin(2.2)};
  double residual = 1;
  REQUIRE(cl_square_identity('C', unit, 3, &residual) == CL_OK);
  CHECK(residual < 1e-10);
}

TEST_CASE("series, densities and profile") {
  Space so("SO", 11);
  char* raw = nullptr;
  const double t = 4 * std::log(11.0);
  REQUIRE(cl_dominating_series(so.ptr, t, 40, &raw) == CL_OK);
  json s = take(raw);
  CHECK(s["partial_sum"].get<double>() > 0);
  double tv = 0;
  REQUIRE(cl_tv_upper_bound(so.ptr, t, &tv) == CL_OK);
  CHECK(tv <= 6 / std::sqrt(11.0));
  double eta = 0;
  Space usp("USp", 5);
  REQUIRE(cl_eta(usp.ptr, "0", 1, 1, std::numeric_limits<double>::quiet_NaN(), &eta) == CL_OK);
  CHECK(eta <= 2.0);
  double v = 0;
  REQUIRE(cl_density_circle(0.0, 2.0, 60, &v) == CL_OK);
  CHECK(v == doctest::Approx(1.772637204826652));
  double mean = 0, var = 0;
  Space su("SU", 5);
  REQUIRE(cl_mean_variance(su.ptr, 0.0, &mean, &var) == CL_OK);
  CHECK(mean == doctest::Approx(5.0));
  REQUIRE(cl_profile(su.ptr, nullptr, 0, &raw) == CL_OK);
  json p = take(raw);
  CHECK(p.size() == 41);
  const double times[] = {1.0, 3.0};
  REQUIRE(cl_profile(su.ptr, times, 2, &raw) == CL_OK);
  CHECK(take(raw)[1]["t"] == 3.0);
  CHECK(cl_profile(su.ptr, nullptr, 3, &raw) == CL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("moment engine handle") {
  cl_moments* m = nullptr;
  REQUIRE(cl_moments_create("so", 4, 2, 0, &m) == CL_OK);
  double re = 0, im = 0;
  REQUIRE(cl_moments_expect(m, "g(1,1)^2", 0.5, &re, &im) == CL_OK);
  CHECK(re == doctest::Approx(0.25 + 0.75 * std::exp(-0.5)));
  cl_moments_destroy(m);
  char* raw = nullptr;
  REQUIRE(cl_eigentable("su", 3, 1, 1, &raw) == CL_OK);
  CHECK(take(raw)["passed"] == true);
}

TEST_CASE("Monte Carlo entry points") {
  Space su("SU", 3);
  char* raw = nullptr;
  REQUIRE(cl_simulate(su.ptr, 0.0, 0, 1, &raw) == CL_OK);
  json g = take(raw);
  CHECK(g.is_object());
  REQUIRE(cl_estimate(su.ptr, "trace", 0.5, 0, 50, 9, 1, 0, &raw) == CL_OK);
  std::string first = take_text(raw);
  REQUIRE(cl_estimate(su.ptr, "trace", 0.5, 0, 50, 9, 2, 0, &raw) == CL_OK);
  CHECK(take_text(raw) == first);
  REQUIRE(cl_estimate(su.ptr, "indicator", -1.0, 0, 200, 9, 1, 2.0, &raw) == CL_OK);
  json e = take(raw);
  CHECK(e["n_samples"] == 200);
  CHECK(e["mean_re"].get<double>() <= 1.0);
}
