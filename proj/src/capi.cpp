#include "cutofflab/cutofflab.h"

#include "acceptance.hpp"
#include "cutoff.hpp"
#include "heatseries.hpp"
#include "moments.hpp"
#include "repchar.hpp"
#include "sampler.hpp"
#include "spaces.hpp"
#include "zonal.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

using namespace cutofflab;
using json = nlohmann::json;

struct cl_space {
  SpaceDescriptor descriptor;
};

struct cl_moments {
  std::unique_ptr<MomentEngine> engine;
  int k, l;
};

namespace {

thread_local std::string last_error;

template <class F>
cl_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return CL_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<cl_status>(static_cast<int>(e.status()));
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CL_ERR_TOO_LARGE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CL_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) fail(Status::InvalidArgument, std::string(what) + " must not be null");
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void write_json(const json& j, char** out) {
  require(out, "json_out");
  *out = copy_out(j.dump());
}

const SpaceDescriptor& space_of(const cl_space* s) {
  require(s, "space");
  return s->descriptor;
}

std::vector<cplx> interleaved(const double* re_im, size_t len) {
  if (len) require(re_im, "alphabet");
  std::vector<cplx> z;
  for (size_t i = 0; i < len; ++i) z.push_back({re_im[2 * i], re_im[2 * i + 1]});
  return z;
}

json matrix_json(const Eigen::MatrixXcd& g) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    json r = json::array(), m = json::array();
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      r.push_back(g(i, j).real());
      m.push_back(g(i, j).imag());
    }
    re.push_back(r);
    im.push_back(m);
  }
  return {{"re", re}, {"im", im}};
}

}  // namespace

extern "C" {

const char* cl_status_name(cl_status status) {
  if (status < CL_OK || status > CL_ERR_INTERNAL) return "Unknown";
  return status_name(static_cast<Status>(static_cast<int>(status)));
}

const char* cl_last_error(void) { return last_error.c_str(); }

void cl_free(char* ptr) { std::free(ptr); }

const char* cl_version(void) { return "0.1.0"; }

cl_status cl_space_create(const char* family, int n, int q, cl_space** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    std::optional<int> qq = q > 0 ? std::optional<int>(q) : std::nullopt;
    *out = new cl_space{describe(std::string(family), n, qq)};
  });
}

void cl_space_destroy(cl_space* space) { delete space; }

cl_status cl_space_describe(const cl_space* space, char** json_out) {
  return guarded([&] {
    const SpaceDescriptor& d = space_of(space);
    json j = to_json(d);
    j["cutoff_param"] = cutoff_param(d);
    j["cutoff_time"] = cutoff_time(d);
    j["indexing_set"] = to_json(indexing_set(d));
    write_json(j, json_out);
  });
}

cl_status cl_space_indexing_set(const cl_space* space, char** json_out) {
  return guarded([&] { write_json(to_json(indexing_set(space_of(space))), json_out); });
}

cl_status cl_space_minimal_weight(const cl_space* space, char** json_out) {
  return guarded([&] {
    MinimalWeight m = minimal_weight(space_of(space));
    write_json({{"weight", m.weight.str()}, {"series_coefficient", to_string(m.a_min)},
                {"casimir", to_string(m.b_min)}},
               json_out);
  });
}

cl_status cl_enumerate(const cl_space* space, int max_size, char** json_out) {
  return guarded([&] {
    const SpaceDescriptor& d = space_of(space);
    if (max_size < 0) fail(Status::InvalidArgument, "max_size must be non-negative");
    json arr = json::array();
    for (const Weight& w : enumerate_weights(indexing_set(d), max_size))
      arr.push_back({{"weight", w.str()},
                     {"dimension", to_string(dimension(d, w))},
                     {"casimir", to_string(casimir_exponent(d, w))},
                     {"sign_multiplicity", sign_multiplicity(d, w)}});
    write_json(arr, json_out);
  });
}

cl_status cl_growth_path(const char* weight, char** json_out) {
  return guarded([&] {
    require(weight, "weight");
    json arr = json::array();
    for (const auto& s : growth_path(parse_weight(std::string(weight), WeightKind::Y)))
      arr.push_back({{"l", s.l}, {"k", s.k}, {"base", s.base.str()}});
    write_json(arr, json_out);
  });
}

cl_status cl_dimension(const cl_space* space, const char* weight, char** rational_out) {
  return guarded([&] {
    require(weight, "weight");
    require(rational_out, "rational_out");
    const SpaceDescriptor& d = space_of(space);
    *rational_out = copy_out(to_string(dimension(d, parse_weight(weight, indexing_set(d)))));
  });
}

cl_status cl_casimir_exponent(const cl_space* space, const char* weight, char** rational_out) {
  return guarded([&] {
    require(weight, "weight");
    require(rational_out, "rational_out");
    const SpaceDescriptor& d = space_of(space);
    *rational_out = copy_out(to_string(casimir_exponent(d, parse_weight(weight, indexing_set(d)))));
  });
}

cl_status cl_schur(char type, const char* weight, const double* alphabet_re_im, size_t alphabet_len,
                   double* value_re, double* value_im) {
  return guarded([&] {
    require(weight, "weight");
    require(value_re, "value_re");
    require(value_im, "value_im");
    LieType t = parse_lie_type(type);
    WeightKind kind = t == LieType::D ? WeightKind::signedLastPart : WeightKind::Y;
    cplx v = schur(t, parse_weight(std::string(weight), kind), interleaved(alphabet_re_im, alphabet_len));
    *value_re = v.real();
    *value_im = v.imag();
  });
}

cl_status cl_square_identity(char type, const double* alphabet_re_im, size_t alphabet_len, double* residual) {
  return guarded([&] {
    require(residual, "residual");
    *residual = square_identity_residual(parse_lie_type(type), interleaved(alphabet_re_im, alphabet_len));
  });
}

cl_status cl_dominating_series(const cl_space* space, double t, int size_cap, char** json_out) {
  return guarded([&] {
    SeriesOptions o;
    if (size_cap > 0) o.size_cap = size_cap;
    write_json(to_json(dominating_series(space_of(space), t, o)), json_out);
  });
}

cl_status cl_tv_upper_bound(const cl_space* space, double t, double* value) {
  return guarded([&] {
    require(value, "value");
    *value = tv_upper_bound(space_of(space), t);
  });
}

cl_status cl_bound_sweep(const cl_space* space, int size_cap, char** json_out) {
  return guarded([&] {
    if (size_cap < 1) fail(Status::InvalidArgument, "size_cap must be positive");
    write_json(to_json(bound_sweep(space_of(space), size_cap)), json_out);
  });
}

cl_status cl_eta(const cl_space* space, const char* base_weight, int l, int k, double t0, double* value) {
  return guarded([&] {
    require(base_weight, "base_weight");
    require(value, "value");
    const SpaceDescriptor& d = space_of(space);
    std::optional<double> time = std::isnan(t0) ? std::nullopt : std::optional<double>(t0);
    *value = eta_quotient(d, parse_weight(base_weight, indexing_set(d)), l, k, time);
  });
}

cl_status cl_density(const cl_space* space, const double* angles, size_t count, double t, int size_cap,
                     double* value) {
  return guarded([&] {
    require(value, "value");
    if (count) require(angles, "angles");
    *value = group_density(space_of(space), std::vector<double>(angles, angles + count), t,
                           size_cap > 0 ? size_cap : 40);
  });
}

cl_status cl_density_circle(double theta, double t, int size_cap, double* value) {
  return guarded([&] {
    require(value, "value");
    *value = circle_density(theta, t, size_cap > 0 ? size_cap : 60);
  });
}

cl_status cl_density_rank_one(const cl_space* space, const double* zonal_values, size_t count, double t,
                              double* value) {
  return guarded([&] {
    require(value, "value");
    if (count) require(zonal_values, "zonal_values");
    *value = rank_one_density(space_of(space), std::vector<double>(zonal_values, zonal_values + count), t);
  });
}

cl_status cl_moments_create(const char* algebra, int n, int k, int l, cl_moments** out) {
  return guarded([&] {
    require(algebra, "algebra");
    require(out, "out");
    auto engine = std::make_unique<MomentEngine>(parse_algebra(algebra), n);
    engine->generator(k, l);  // validates and builds the generator eagerly
    *out = new cl_moments{std::move(engine), k, l};
  });
}

void cl_moments_destroy(cl_moments* engine) { delete engine; }

cl_status cl_moments_expect(const cl_moments* engine, const char* pattern, double t, double* value_re,
                            double* value_im) {
  return guarded([&] {
    require(engine, "engine");
    require(pattern, "pattern");
    require(value_re, "value_re");
    require(value_im, "value_im");
    cplx v = engine->engine->expect(std::string(pattern), t);
    *value_re = v.real();
    *value_im = v.imag();
  });
}

cl_status cl_moment(const char* algebra, int n, const char* pattern, double t, double* value_re,
                    double* value_im) {
  return guarded([&] {
    require(algebra, "algebra");
    require(pattern, "pattern");
    require(value_re, "value_re");
    require(value_im, "value_im");
    cplx v = moment(parse_algebra(algebra), n, pattern, t);
    *value_re = v.real();
    *value_im = v.imag();
  });
}

cl_status cl_eigentable(const char* algebra, int n, int k, int l, char** json_out) {
  return guarded([&] {
    require(algebra, "algebra");
    write_json(to_json(verify_eigentable(parse_algebra(algebra), n, k, l)), json_out);
  });
}

cl_status cl_zonal_expansion(const cl_space* space, char** json_out) {
  return guarded([&] { write_json(to_json(zonal_square_expansion(space_of(space))), json_out); });
}

cl_status cl_simulate(const cl_space* space, double t, int steps, uint64_t seed, char** json_out) {
  return guarded([&] {
    const SpaceDescriptor& d = space_of(space);
    GroupModel m = group_model(d);
    Rng rng = path_rng(seed, 0);
    PathConfig cfg;
    cfg.t_final = t;
    cfg.steps = steps;
    const bool haar = t < 0;
    Eigen::MatrixXcd g = haar ? haar_sample(m, rng) : brownian_endpoint(m, t, resolved_steps(cfg), rng);
    cplx omega = omega_value(omega_spec(d), g);
    json j = {{"space", to_json(d)},
              {"algebra", algebra_name(m.algebra)},
              {"haar", haar},
              {"t", haar ? json(nullptr) : json(t)},
              {"steps", haar ? json(nullptr) : json(resolved_steps(cfg))},
              {"seed", seed},
              {"unitarity_residual", unitarity_residual(g)},
              {"omega_re", omega.real()},
              {"omega_im", omega.imag()},
              {"element", matrix_json(g)}};
    write_json(j, json_out);
  });
}

cl_status cl_estimate(const cl_space* space, const char* statistic, double t, int steps, int paths,
                      uint64_t seed, int threads, double threshold, char** json_out) {
  return guarded([&] {
    require(statistic, "statistic");
    const SpaceDescriptor& d = space_of(space);
    std::string stat = statistic;
    if (stat == "indicator") stat += ":" + std::to_string(threshold);
    PathConfig cfg;
    cfg.t_final = t < 0 ? 0 : t;
    cfg.steps = steps;
    cfg.paths = paths;
    cfg.seed = seed;
    cfg.threads = threads;
    const bool haar = t < 0;
    Estimate e = estimate(d, stat, haar, cfg);
    json j = to_json(e);
    j["statistic"] = stat;
    j["haar"] = haar;
    j["t"] = haar ? json(nullptr) : json(t);
    j["steps"] = haar ? json(nullptr) : json(resolved_steps(cfg));
    j["seed"] = seed;
    write_json(j, json_out);
  });
}

cl_status cl_mean_variance(const cl_space* space, double t, double* mean, double* variance) {
  return guarded([&] {
    require(mean, "mean");
    require(variance, "variance");
    MeanVariance mv = mean_variance(space_of(space), t);
    *mean = mv.mean;
    *variance = mv.variance;
  });
}

cl_status cl_lower_bound(const cl_space* space, double t, double* value) {
  return guarded([&] {
    require(value, "value");
    *value = lower_bound(space_of(space), t);
  });
}

cl_status cl_profile(const cl_space* space, const double* times, size_t count, char** json_out) {
  return guarded([&] {
    const SpaceDescriptor& d = space_of(space);
    if (count) require(times, "times");
    std::vector<double> grid = count ? std::vector<double>(times, times + count) : default_profile_grid(d);
    write_json(to_json(profile(d, grid)), json_out);
  });
}

cl_status cl_verify_all(int threads, char** json_out, int* all_passed) {
  return guarded([&] {
    require(all_passed, "all_passed");
    AcceptanceOptions o;
    o.threads = threads;
    json j = to_json(run_acceptance(o));
    *all_passed = j["all_passed"].get<bool>() ? 1 : 0;
    write_json(j, json_out);
  });
}

}  // extern "C"
