#include "sampler.hpp"

#include <boost/random/normal_distribution.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>
#include <thread>

namespace cutofflab {

Rng path_rng(std::uint64_t seed, std::uint64_t path) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(path), static_cast<std::uint32_t>(path >> 32)};
  Rng rng;
  rng.seed(seq);
  return rng;
}

GroupModel group_model(Algebra a, int n) { return {a, n, defining_dim(a, n), algebra_basis(a, n)}; }

GroupModel group_model(const SpaceDescriptor& d) {
  OmegaSpec spec = omega_spec(d);
  return group_model(spec.algebra, spec.algebra_n);
}

int resolved_steps(const PathConfig& c) {
  if (c.steps > 0) return c.steps;
  return std::max(1, static_cast<int>(std::ceil(c.t_final / 0.01 - 1e-9)));
}

Eigen::MatrixXcd reorthonormalize(const GroupModel& m, const Eigen::MatrixXcd& g) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::MatrixXcd u = svd.matrixU() * svd.matrixV().adjoint();
  if (m.algebra == Algebra::so) return Eigen::MatrixXcd(u.real().cast<cplx>());
  if (m.algebra == Algebra::su) {
    cplx det = u.determinant();
    u *= std::pow(det, -1.0 / m.dim);
  }
  return u;
}

Eigen::MatrixXcd brownian_endpoint(const GroupModel& m, double t, int steps, Rng& rng,
                                   const Eigen::MatrixXcd* conjugator, int reorthonormalize_every) {
  if (t < 0) fail(Status::InvalidArgument, "t must be non-negative");
  if (steps < 1) fail(Status::InvalidArgument, "steps must be positive");
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(m.dim, m.dim);
  if (t == 0) return g;
  std::vector<Eigen::MatrixXcd> basis = m.basis;
  if (conjugator)
    for (auto& x : basis) x = (*conjugator) * x * conjugator->adjoint();
  const double sh = std::sqrt(t / steps);
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd xi(m.dim, m.dim);
  for (int s = 1; s <= steps; ++s) {
    xi.setZero();
    for (const auto& x : basis) xi += normal(rng) * x;
    xi *= sh;
    g = g * Eigen::MatrixXcd(xi.exp());
    if (reorthonormalize_every > 0 && s % reorthonormalize_every == 0) g = reorthonormalize(m, g);
  }
  return g;
}

namespace {

cplx complex_normal(Rng& rng, boost::random::normal_distribution<double>& normal) {
  double re = normal(rng);
  double im = normal(rng);
  return {re / std::sqrt(2.0), im / std::sqrt(2.0)};
}

Eigen::MatrixXcd haar_symplectic(int n, Rng& rng) {
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  const int d = 2 * n;
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 0; j < n; ++j) {
    // quaternionic Gaussian column in the complex form
    Eigen::VectorXcd c(d);
    for (int i = 0; i < n; ++i) {
      c(2 * i) = complex_normal(rng, normal);
      c(2 * i + 1) = complex_normal(rng, normal);
    }
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k < 2 * j; ++k) c -= g.col(k).dot(c) * g.col(k);
    c /= c.norm();
    // partner column: entry p(a) equals sigma(a) conj(c_a)
    Eigen::VectorXcd partner(d);
    for (int a = 0; a < d; ++a) partner(a ^ 1) = (a % 2 == 0 ? 1.0 : -1.0) * std::conj(c(a));
    g.col(2 * j) = c;
    g.col(2 * j + 1) = partner;
  }
  return g;
}

}  // namespace

Eigen::MatrixXcd haar_sample(const GroupModel& m, Rng& rng) {
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  const int d = m.dim;
  if (m.algebra == Algebra::usp) return haar_symplectic(m.n, rng);
  if (m.algebra == Algebra::so) {
    Eigen::MatrixXd z(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) z(i, j) = normal(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < d; ++i)
      if (r(i, i) < 0) q.col(i) *= -1.0;
    if (q.determinant() < 0) q.col(0) *= -1.0;
    return q.cast<cplx>();
  }
  Eigen::MatrixXcd z(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) z(i, j) = complex_normal(rng, normal);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  q *= std::pow(q.determinant(), -1.0 / d);
  return q;
}

double unitarity_residual(const Eigen::MatrixXcd& g) {
  Eigen::MatrixXcd e = g.adjoint() * g - Eigen::MatrixXcd::Identity(g.rows(), g.cols());
  return e.cwiseAbs().maxCoeff();
}

double symplectic_residual(const Eigen::MatrixXcd& g) {
  if (g.rows() % 2) fail(Status::FieldMismatch, "symplectic matrices have even size");
  Eigen::MatrixXcd J = symplectic_conjugator(static_cast<int>(g.rows() / 2));
  return (g.transpose() * J * g - J).cwiseAbs().maxCoeff();
}

Statistic parse_statistic(const SpaceDescriptor& d, const std::string& text) {
  Statistic s;
  s.text = text;
  if (text == "trace") {
    if (!d.is_group) fail(Status::UnsupportedStatistic, "trace is only defined for group families");
    s.kind = Statistic::Kind::trace;
  } else if (text == "omega" || text == "zonal_min") {
    s.kind = Statistic::Kind::omega;
  } else if (text == "abs2") {
    s.kind = Statistic::Kind::abs2;
  } else if (text.rfind("indicator:", 0) == 0) {
    s.kind = Statistic::Kind::indicator;
    try {
      s.threshold = std::stod(text.substr(10));
    } catch (const std::exception&) {
      fail(Status::UnsupportedStatistic, "indicator threshold must be a number");
    }
  } else if (text.rfind("moment:", 0) == 0) {
    s.kind = Statistic::Kind::moment;
    GroupModel m = group_model(d);
    s.pattern = parse_pattern(m.algebra, m.n, text.substr(7));
  } else {
    fail(Status::UnsupportedStatistic, "unknown statistic '" + text + "'");
  }
  return s;
}

cplx evaluate_statistic(const Statistic& s, const OmegaSpec& omega, const Eigen::MatrixXcd& g) {
  switch (s.kind) {
    case Statistic::Kind::trace: return g.trace();
    case Statistic::Kind::omega: return omega_value(omega, g);
    case Statistic::Kind::abs2: return std::norm(omega_value(omega, g));
    case Statistic::Kind::indicator: return std::abs(omega_value(omega, g)) >= s.threshold ? 1.0 : 0.0;
    case Statistic::Kind::moment: {
      cplx total = 0;
      for (const auto& m : s.pattern) {
        cplx v = m.coeff;
        for (const auto& e : m.g) v *= g(e.row, e.col);
        for (const auto& e : m.gbar) v *= std::conj(g(e.row, e.col));
        total += v;
      }
      return total;
    }
  }
  fail(Status::Internal, "unhandled statistic");
}

Estimate estimate(const SpaceDescriptor& d, const Statistic& s, bool haar, const PathConfig& config) {
  if (config.paths < 2) fail(Status::InvalidArgument, "need at least two paths");
  if (!haar && config.t_final < 0) fail(Status::InvalidArgument, "t must be non-negative");
  const GroupModel model = group_model(d);
  const OmegaSpec omega = omega_spec(d);
  const int steps = resolved_steps(config);
  const long long N = config.paths;
  std::vector<cplx> values(static_cast<size_t>(N));
  int threads = config.threads > 0 ? config.threads : default_thread_count();
  threads = static_cast<int>(std::max<long long>(1, std::min<long long>(threads, N)));
  std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
  auto work = [&](int worker) {
    try {
      for (long long p = worker; p < N; p += threads) {
        Rng rng = path_rng(config.seed, static_cast<std::uint64_t>(p));
        Eigen::MatrixXcd g = haar ? haar_sample(model, rng)
                                  : brownian_endpoint(model, config.t_final, steps, rng, nullptr,
                                                      config.reorthonormalize_every);
        values[static_cast<size_t>(p)] = evaluate_statistic(s, omega, g);
      }
    } catch (...) {
      errors[static_cast<size_t>(worker)] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  // reductions run in path order, independent of the scheduling above
  cplx sum = 0;
  for (const auto& v : values) sum += v;
  const cplx mean = sum / static_cast<double>(N);
  double m2 = 0, m4 = 0;
  for (const auto& v : values) {
    double a = std::norm(v - mean);
    m2 += a;
    m4 += a * a;
  }
  const double var = m2 / static_cast<double>(N - 1);
  const double fourth = m4 / static_cast<double>(N);
  const double var_se = std::sqrt(std::max(0.0, fourth - var * var) / static_cast<double>(N));
  return {mean, std::sqrt(var / static_cast<double>(N)), N, var, var_se};
}

Estimate estimate(const SpaceDescriptor& d, const std::string& statistic, bool haar, const PathConfig& config) {
  return estimate(d, parse_statistic(d, statistic), haar, config);
}

nlohmann::json to_json(const Estimate& e) {
  return {{"mean_re", e.mean.real()},   {"mean_im", e.mean.imag()},   {"std_error", e.std_error},
          {"n_samples", e.n_samples},   {"variance", e.variance},     {"variance_se", e.variance_se}};
}

}  // namespace cutofflab
