#include "zonal.hpp"

#include "repchar.hpp"

#include <cmath>
#include <string>

namespace cutofflab {

namespace {

Eigen::MatrixXcd split_diagonal(int dim, int low, int low_value, int high_value, double norm) {
  Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) f(i, i) = (i < low ? low_value : high_value) / norm;
  return f;
}

Eigen::MatrixXcd complex_structure(int dim) {
  Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(dim, dim);
  const double s = 1 / std::sqrt(static_cast<double>(dim));
  for (int i = 0; i + 1 < dim; i += 2) {
    f(i + 1, i) = s;
    f(i, i + 1) = -s;
  }
  return f;
}

Eigen::VectorXcd flatten(const Eigen::MatrixXcd& f) {
  const Eigen::Index d = f.rows();
  Eigen::VectorXcd v(d * d);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) v(a * d + b) = f(a, b);
  return v;
}

Eigen::VectorXcd kron(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
  Eigen::VectorXcd out(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out.segment(i * y.size(), y.size()) = x(i) * y;
  return out;
}

// Reorders a four-slot tensor from slot order (0, 1, 2, 3) to (0, 2, 1, 3).
Eigen::VectorXcd swap_middle_slots(const Eigen::VectorXcd& w, int d) {
  Eigen::VectorXcd out(w.size());
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) out(((a * d + c) * d + b) * d + e) = w(((a * d + b) * d + c) * d + e);
  return out;
}

struct EngineSetup {
  int k, l;
  Eigen::VectorXcd vector;  // the expectation is vector^* exp(tG) vector
};

// Second-order tensor representing phi: phi(g) = v^* rho(g) v.
EngineSetup first_order(const ZonalForm& z) {
  Eigen::VectorXcd v = flatten(z.form);
  if (z.hermitian_action && z.algebra == Algebra::su) return {1, 1, v};
  if (z.hermitian_action && z.algebra == Algebra::usp)
    // conj(g) = Q g Q^T turns the conjugate slot into a plain one
    return {2, 0, flatten(z.form * symplectic_conjugator(z.algebra_n))};
  return {2, 0, v};
}

EngineSetup second_order(const ZonalForm& z) {
  EngineSetup one = first_order(z);
  if (z.complex_valued) return {2, 2, kron(one.vector, one.vector.conjugate())};
  Eigen::VectorXcd w = kron(one.vector, one.vector);
  if (one.l == 1) return {2, 2, swap_middle_slots(w, z.dim)};
  return {4, 0, w};
}

}  // namespace

ZonalForm zonal_form(const SpaceDescriptor& d) {
  const int n = d.n;
  switch (d.family) {
    case Family::GrR:
    case Family::GrC: {
      const int q = *d.q, p = n - q;
      Algebra a = d.family == Family::GrR ? Algebra::so : Algebra::su;
      return {a, n, n, split_diagonal(n, p, -q, p, std::sqrt(static_cast<double>(n) * p * q)),
              d.family == Family::GrC, false};
    }
    case Family::GrH: {
      const int q = *d.q, p = n - q;
      return {Algebra::usp, n, 2 * n,
              split_diagonal(2 * n, 2 * p, -q, p, std::sqrt(2.0 * n * p * q)), true, false};
    }
    case Family::SO2n_Un: return {Algebra::so, 2 * n, 2 * n, complex_structure(2 * n), false, false};
    case Family::SU2n_USpn: return {Algebra::su, 2 * n, 2 * n, complex_structure(2 * n), false, true};
    case Family::SUn_SOn:
      return {Algebra::su, n, n, Eigen::MatrixXcd::Identity(n, n) / std::sqrt(static_cast<double>(n)), false,
              true};
    case Family::USpn_Un:
      return {Algebra::usp, n, 2 * n,
              Eigen::MatrixXcd::Identity(2 * n, 2 * n) / std::sqrt(2.0 * n), false, false};
    default: break;
  }
  fail(Status::InvalidArgument, std::string("spherical functions are defined for symmetric spaces, not ") +
                                    family_name(d.family));
}

cplx zonal_value(const ZonalForm& z, const Eigen::MatrixXcd& g) {
  if (g.rows() != z.dim || g.cols() != z.dim) fail(Status::InvalidArgument, "matrix size does not match the space");
  Eigen::MatrixXcd moved = z.hermitian_action ? Eigen::MatrixXcd(g * z.form * g.adjoint())
                                              : Eigen::MatrixXcd(g * z.form * g.transpose());
  return z.form.conjugate().cwiseProduct(moved).sum();
}

std::vector<ZonalTerm> zonal_square_expansion(const SpaceDescriptor& d) {
  const int n = d.n;
  const IndexingSet set = indexing_set(d);
  const Rational N(n);
  std::vector<std::pair<std::string, Rational>> raw;
  auto need = [&](int min_n) {
    if (n < min_n)
      fail(Status::InvalidRank, std::string("the square expansion of ") + family_name(d.family) +
                                    " needs n >= " + std::to_string(min_n));
  };
  switch (d.family) {
    case Family::GrR: {
      need(3);
      const Rational q(*d.q), p = N - q, pq = p * q;
      raw.push_back({"0", Rational(2) / (N * N + N - 2)});
      if (*d.q >= 2)
        raw.push_back({"2,2", (2 * N * N / 3) * (1 / ((N - 1) * (N - 2)) - 1 / (pq * (N - 2)))});
      raw.push_back({"2", (4 * N * N / pq - 16) / ((N - 2) * (N + 4))});
      raw.push_back({"4", (N * N / 3) * (1 / ((N + 2) * (N + 4)) + 2 / (pq * (N + 4)))});
      break;
    }
    case Family::GrC: {
      const Rational q(*d.q), p = N - q, pq = p * q;
      raw.push_back({"0", 1 / (N * N - 1)});
      if (n > 2) raw.push_back({"1", (2 * N * N / pq - 8) / (N * N - 4)});
      if (*d.q >= 2) raw.push_back({"1,1", (N * N / 2) * (1 / ((N - 1) * (N - 2)) - 1 / (pq * (N - 2)))});
      raw.push_back({"2", (N * N / 2) * (1 / ((N + 1) * (N + 2)) + 1 / (pq * (N + 2)))});
      break;
    }
    case Family::GrH: {
      const Rational q(*d.q), p = N - q, pq = p * q;
      raw.push_back({"0", 1 / (2 * N * N - N - 1)});
      if (*d.q >= 2) raw.push_back({"1,1,1,1", (N * N / 3) * (1 / ((N - 1) * (N - 2)) - 1 / (pq * (N - 2)))});
      if (n > 2) raw.push_back({"1,1", (N * N / pq - 4) / ((N - 2) * (N + 1))});
      raw.push_back({"2,2", (N * N / 3) * (4 / ((N + 1) * (2 * N + 1)) + 1 / (pq * (N + 1)))});
      break;
    }
    case Family::SO2n_Un:
      need(4);
      raw.push_back({"0", 1 / (2 * N * N - N)});
      raw.push_back({"1,1,1,1", (N - 1) / (3 * N)});
      raw.push_back({"2,2", 4 * (N * N - 1) / (3 * N * (2 * N - 1))});
      break;
    case Family::SUn_SOn: {
      std::string label = "4";
      for (int i = 0; i < n - 2; ++i) label += ",2";
      raw.push_back({"0", 2 / (N * N + N)});
      raw.push_back({label, (N * N + N - 2) / (N * N + N)});
      break;
    }
    case Family::SU2n_USpn: {
      std::string label = "2,2";
      for (int i = 0; i < 2 * n - 4; ++i) label += ",1";
      raw.push_back({"0", 1 / (2 * N * N - N)});
      raw.push_back({label, (2 * N * N - N - 1) / (2 * N * N - N)});
      break;
    }
    case Family::USpn_Un:
      raw.push_back({"0", 1 / (2 * N * N + N)});
      if (n >= 2) raw.push_back({"2,2", 4 * (N - 1) * (N + 1) / (3 * N * (2 * N + 1))});
      raw.push_back({"4", (N + 1) / (3 * N)});
      break;
    default:
      fail(Status::InvalidArgument, std::string("no square expansion for the group family ") +
                                        family_name(d.family));
  }
  std::vector<ZonalTerm> out;
  for (const auto& [label, c] : raw) {
    if (c == 0) continue;
    Weight w = label == "0" ? zero_weight(set) : parse_weight(label, set);
    require_member(w, set);
    out.push_back({w, c, casimir_exponent(d, w)});
  }
  return out;
}

double zonal_square_series(const SpaceDescriptor& d, double t) {
  double s = 0;
  for (const auto& term : zonal_square_expansion(d))
    s += to_double(term.coefficient) * std::exp(-t * to_double(term.casimir) / 2);
  return s;
}

double zonal_square_engine(const SpaceDescriptor& d, double t, const MomentEngine* engine) {
  ZonalForm z = zonal_form(d);
  std::unique_ptr<MomentEngine> own;
  if (!engine) {
    own = std::make_unique<MomentEngine>(z.algebra, z.algebra_n);
    engine = own.get();
  }
  EngineSetup s = second_order(z);
  return engine->bilinear(s.k, s.l, s.vector, s.vector, t).real();
}

cplx zonal_mean_engine(const SpaceDescriptor& d, double t, const MomentEngine* engine) {
  ZonalForm z = zonal_form(d);
  std::unique_ptr<MomentEngine> own;
  if (!engine) {
    own = std::make_unique<MomentEngine>(z.algebra, z.algebra_n);
    engine = own.get();
  }
  EngineSetup s = first_order(z);
  return engine->bilinear(s.k, s.l, s.vector, s.vector, t);
}

nlohmann::json to_json(const std::vector<ZonalTerm>& terms) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : terms)
    arr.push_back({{"weight", to_json(t.weight)},
                   {"coefficient", to_string(t.coefficient)},
                   {"coefficient_value", to_double(t.coefficient)},
                   {"casimir", to_string(t.casimir)}});
  return arr;
}

}  // namespace cutofflab
