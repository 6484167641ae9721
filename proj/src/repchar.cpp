#include "repchar.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace cutofflab {

namespace {

// Signed doubled coordinates of a label padded to `length`.
std::vector<int> coords2(const Weight& label, int length) {
  std::vector<int> v(static_cast<size_t>(length), 0);
  for (int i = 0; i < label.length() && i < length; ++i)
    v[static_cast<size_t>(i)] = label.parts2[static_cast<size_t>(i)];
  if (label.last_sign == LastSign::minus && label.length() <= length && label.length() > 0)
    v[static_cast<size_t>(label.length() - 1)] *= -1;
  for (int i = length; i < label.length(); ++i)
    if (label.parts2[static_cast<size_t>(i)] != 0)
      fail(Status::WeightKindMismatch, "label (" + label.str() + ") is too long for the group");
  return v;
}

int coord_count(const IsometryGroup& g) {
  return g.type == LieType::A ? g.algebra_n : g.rank;
}

// Visits each factor of the Weyl dimension product as (numerator2,
// denominator2), both in doubled units.
template <typename F>
void dimension_factors(const IsometryGroup& g, const std::vector<int>& x2, F&& factor) {
  const int r = static_cast<int>(x2.size());
  auto X = [&](int i) { return x2[static_cast<size_t>(i - 1)]; };
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) factor(X(i) - X(j) + 2 * (j - i), 2 * (j - i));
  }
  if (g.type == LieType::A) return;
  int offset = g.type == LieType::B ? 2 * r + 1 : g.type == LieType::C ? 2 * r + 2 : 2 * r;
  for (int i = 1; i <= r; ++i) {
    for (int j = (g.type == LieType::D ? i + 1 : i); j <= r; ++j)
      factor(X(i) + X(j) + 2 * (offset - i - j), 2 * (offset - i - j));
  }
}

// Casimir exponent as (numerator in quarter units, normalization).
template <typename T>
T casimir_value(const IsometryGroup& g, const std::vector<int>& x2) {
  const int N = g.algebra_n;
  const int r = static_cast<int>(x2.size());
  T acc = 0;
  if (g.type == LieType::A) {
    T total = 0;
    for (int i = 1; i <= r; ++i) {
      T x = T(x2[static_cast<size_t>(i - 1)]) / 2;
      acc += x * x + T(N + 1 - 2 * i) * x;
      total += x;
    }
    return (acc - total * total / N) / N;
  }
  if (g.type == LieType::C) {
    for (int i = 1; i <= r; ++i) {
      T x = T(x2[static_cast<size_t>(i - 1)]) / 2;
      acc += x * x + T(2 * r + 2 - 2 * i) * x;
    }
    return acc / (2 * r);
  }
  for (int i = 1; i <= r; ++i) {
    T x = T(x2[static_cast<size_t>(i - 1)]) / 2;
    acc += x * x + T(N - 2 * i) * x;
  }
  return acc / N;
}

}  // namespace

Rational group_dimension(const IsometryGroup& g, const Weight& label) {
  std::vector<int> x2 = coords2(label, coord_count(g));
  BigInt num = 1, den = 1;
  dimension_factors(g, x2, [&](int a, int b) {
    num *= a;
    den *= b;
  });
  return Rational(num, den);
}

Rational group_casimir(const IsometryGroup& g, const Weight& label) {
  return casimir_value<Rational>(g, coords2(label, coord_count(g)));
}

FastRep group_fast(const IsometryGroup& g, const Weight& label) {
  std::vector<int> x2 = coords2(label, coord_count(g));
  long double product = 1;
  dimension_factors(g, x2, [&](int a, int b) {
    product *= static_cast<long double>(a) / static_cast<long double>(b);
  });
  return {std::log(product), casimir_value<long double>(g, x2)};
}

Rational dimension(const SpaceDescriptor& d, const Weight& w) {
  return group_dimension(isometry_group(d), group_label(d, w));
}

Rational casimir_exponent(const SpaceDescriptor& d, const Weight& w) {
  return group_casimir(isometry_group(d), group_label(d, w));
}

FastRep fast_rep(const SpaceDescriptor& d, const Weight& w) {
  return group_fast(isometry_group(d), group_label(d, w));
}

int sign_multiplicity(const SpaceDescriptor& d, const Weight& w) {
  if (!d.is_group || isometry_group(d).type != LieType::D) return 1;
  return (w.length() > 0 && w.parts2.back() != 0) ? 2 : 1;
}

Rational series_coefficient(const SpaceDescriptor& d, const Weight& w) {
  Rational dim = dimension(d, w);
  if (!d.is_group) return dim;
  return dim * dim * sign_multiplicity(d, w);
}

void require_unit_alphabet(const std::vector<cplx>& alphabet) {
  if (alphabet.empty()) fail(Status::InvalidArgument, "empty eigenvalue alphabet");
  for (const cplx& z : alphabet)
    if (std::abs(std::abs(z) - 1.0) > 1e-12)
      fail(Status::InvalidArgument, "alphabet entries must lie on the unit circle");
}

namespace {

enum class Seq { Monomial, U, V, W, C };

// table[m][i] = divided difference [x_0..x_i] of the m-th polynomial of the
// sequence, built by the product rule so confluent alphabets stay finite.
std::vector<std::vector<cplx>> divided_table(Seq seq, const std::vector<cplx>& x, int max_m) {
  const size_t n = x.size();
  std::vector<std::vector<cplx>> t(static_cast<size_t>(max_m + 1), std::vector<cplx>(n, 0.0));
  // first two members: p_0 = c0, p_1 = x + c1
  cplx c0 = seq == Seq::C ? 2.0 : 1.0;
  cplx c1 = seq == Seq::V ? 1.0 : seq == Seq::W ? -1.0 : 0.0;
  t[0][0] = c0;
  if (max_m >= 1) {
    t[1][0] = x[0] + c1;
    if (n > 1) t[1][1] = 1.0;
  }
  const cplx back = seq == Seq::Monomial ? 0.0 : -1.0;
  for (int m = 1; m < max_m; ++m) {
    auto& next = t[static_cast<size_t>(m + 1)];
    const auto& cur = t[static_cast<size_t>(m)];
    const auto& prev = t[static_cast<size_t>(m - 1)];
    for (size_t i = 0; i < n; ++i) {
      cplx v = x[i] * cur[i] + back * prev[i];
      if (i > 0) v += cur[i - 1];
      next[i] = v;
    }
  }
  return t;
}

cplx det_ratio(Seq num_seq, const std::vector<int>& num_idx, Seq den_seq,
               const std::vector<int>& den_idx, const std::vector<cplx>& x) {
  const int n = static_cast<int>(x.size());
  int max_m = 1;
  for (int v : num_idx) max_m = std::max(max_m, v);
  for (int v : den_idx) max_m = std::max(max_m, v);
  auto tn = divided_table(num_seq, x, max_m);
  auto td = num_seq == den_seq ? tn : divided_table(den_seq, x, max_m);
  Eigen::MatrixXcd N(n, n), D(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      N(i, j) = tn[static_cast<size_t>(num_idx[static_cast<size_t>(j)])][static_cast<size_t>(i)];
      D(i, j) = td[static_cast<size_t>(den_idx[static_cast<size_t>(j)])][static_cast<size_t>(i)];
    }
  cplx den = D.partialPivLu().determinant();
  if (std::abs(den) < 1e-10)
    fail(Status::DegenerateAlphabet, "alphabet is too close to a singular point; perturb it");
  return N.partialPivLu().determinant() / den;
}

}  // namespace

cplx schur(LieType type, const Weight& lambda, const std::vector<cplx>& alphabet) {
  require_unit_alphabet(alphabet);
  const int n = static_cast<int>(alphabet.size());
  for (int i = n; i < lambda.length(); ++i)
    if (lambda.parts2[static_cast<size_t>(i)] != 0)
      fail(Status::InvalidArgument, "weight is longer than the alphabet");
  std::vector<int> x2(static_cast<size_t>(n), 0);
  for (int i = 0; i < std::min(n, lambda.length()); ++i)
    x2[static_cast<size_t>(i)] = lambda.parts2[static_cast<size_t>(i)];
  bool minus = lambda.last_sign == LastSign::minus && lambda.length() == n;
  bool half = lambda.is_half();
  if (half && (type == LieType::A || type == LieType::C))
    fail(Status::HalfPartitionUnsupported, "half weights exist only for orthogonal types");
  if (minus && type != LieType::D)
    fail(Status::WeightKindMismatch, "a signed last part needs type D");

  std::vector<int> num_idx(static_cast<size_t>(n)), den_idx(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) den_idx[static_cast<size_t>(j)] = n - 1 - j;

  if (type == LieType::A) {
    // Shift so that every part is non-negative: s_{l + c} = (prod z)^c s_l.
    int shift2 = *std::min_element(x2.begin(), x2.end());
    if (shift2 > 0) shift2 = 0;
    cplx prefactor = 1.0;
    if (shift2 < 0) {
      cplx prod = 1.0;
      for (const cplx& z : alphabet) prod *= z;
      prefactor = std::pow(prod, shift2 / 2);
    }
    for (int j = 0; j < n; ++j)
      num_idx[static_cast<size_t>(j)] = (x2[static_cast<size_t>(j)] - shift2) / 2 + n - 1 - j;
    return prefactor * det_ratio(Seq::Monomial, num_idx, Seq::Monomial, den_idx, alphabet);
  }

  std::vector<cplx> x(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = alphabet[static_cast<size_t>(i)] + 1.0 / alphabet[static_cast<size_t>(i)];
  cplx half_factor = 1.0;
  if (half) {
    for (const cplx& z : alphabet) {
      cplx s = std::sqrt(z);
      half_factor *= s + 1.0 / s;
    }
  }
  for (int j = 0; j < n; ++j) {
    int part = half ? (x2[static_cast<size_t>(j)] - 1) / 2 : x2[static_cast<size_t>(j)] / 2;
    num_idx[static_cast<size_t>(j)] = part + n - 1 - j;
  }
  switch (type) {
    case LieType::C:
      return det_ratio(Seq::U, num_idx, Seq::U, den_idx, x);
    case LieType::B:
      if (half) return half_factor * det_ratio(Seq::U, num_idx, Seq::V, den_idx, x);
      return det_ratio(Seq::V, num_idx, Seq::V, den_idx, x);
    case LieType::D: {
      if (half) return 2.0 * half_factor * det_ratio(Seq::W, num_idx, Seq::C, den_idx, x);
      cplx v = det_ratio(Seq::C, num_idx, Seq::C, den_idx, x);
      return x2.back() != 0 ? 2.0 * v : v;
    }
    case LieType::A:
      break;
  }
  fail(Status::Internal, "unhandled root system");
}

double square_identity_residual(LieType type, const std::vector<cplx>& alphabet) {
  require_unit_alphabet(alphabet);
  const int n = static_cast<int>(alphabet.size());
  if (n < 2) fail(Status::InvalidArgument, "the identity needs at least two eigenvalues");
  if (type == LieType::A) {
    cplx prod = 1.0, trace = 0.0;
    for (const cplx& z : alphabet) {
      prod *= z;
      trace += z;
    }
    if (std::abs(prod - 1.0) > 1e-10)
      fail(Status::InvalidArgument, "type A identity needs eigenvalues with product 1");
    std::vector<int> parts(static_cast<size_t>(n), 1);
    parts[0] = 2;
    parts[static_cast<size_t>(n - 1)] = 0;
    cplx rhs = schur(type, make_weight(parts, WeightKind::Y), alphabet) + 1.0;
    return std::abs(std::norm(trace) - rhs);
  }
  cplx trace = type == LieType::B ? 1.0 : 0.0;
  for (const cplx& z : alphabet) trace += z + 1.0 / z;
  std::vector<int> two(static_cast<size_t>(n), 0), pair(static_cast<size_t>(n), 0);
  two[0] = 2;
  pair[0] = pair[1] = 1;
  WeightKind kind = type == LieType::D ? WeightKind::signedLastPart : WeightKind::Y;
  cplx rhs = schur(type, make_weight(two, kind), alphabet) +
             schur(type, make_weight(pair, kind), alphabet) + 1.0;
  return std::abs(trace * trace - rhs);
}

}  // namespace cutofflab
