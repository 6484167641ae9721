#include "moments.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_map>

namespace cutofflab {

int defining_dim(Algebra a, int n) { return a == Algebra::usp ? 2 * n : n; }

Rational algebra_drift(Algebra a, int n) {
  switch (a) {
    case Algebra::so: return -Rational(n - 1, n);
    case Algebra::su: return -Rational(n * n - 1, n * n);
    case Algebra::usp: return -Rational(2 * n + 1, 2 * n);
  }
  return 0;
}

int minimum_algebra_n(Algebra a) { return a == Algebra::usp ? 1 : a == Algebra::so ? 3 : 2; }

namespace {

void check_rank(Algebra a, int n) {
  if (n < minimum_algebra_n(a))
    fail(Status::InvalidRank, std::string(algebra_name(a)) + "(" + std::to_string(n) +
                                  ") is below the supported range");
}

Eigen::MatrixXcd unit_block(int d, int bi, int bj, const Eigen::Matrix2cd& u) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  m.block(2 * bi, 2 * bj, 2, 2) = u;
  return m;
}

}  // namespace

std::vector<Eigen::MatrixXcd> algebra_basis(Algebra a, int n) {
  check_rank(a, n);
  const int d = defining_dim(a, n);
  const cplx I(0, 1);
  std::vector<Eigen::MatrixXcd> out;
  auto E = [&](int i, int j) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    m(i, j) = 1.0;
    return m;
  };
  if (a == Algebra::so) {
    const double s = 1 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.push_back(s * (E(i, j) - E(j, i)));
    return out;
  }
  if (a == Algebra::su) {
    const double s = 1 / std::sqrt(2.0 * n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        out.push_back(s * (E(i, j) - E(j, i)));
        out.push_back(s * I * (E(i, j) + E(j, i)));
      }
    // traceless diagonal directions w_m = (1, ..., 1, -m, 0, ...) / sqrt(m (m + 1))
    for (int m = 1; m < n; ++m) {
      Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
      const double c = 1 / std::sqrt(static_cast<double>(m) * (m + 1));
      for (int i = 0; i < m; ++i) h(i, i) = c;
      h(m, m) = -m * c;
      out.push_back(I * h / std::sqrt(static_cast<double>(n)));
    }
    return out;
  }
  // Quaternion units i, j, k as 2 x 2 complex matrices.
  Eigen::Matrix2cd qi, qj, qk, one;
  qi << I, 0, 0, -I;
  qj << 0, 1, -1, 0;
  qk << 0, I, I, 0;
  one << 1, 0, 0, 1;
  const double sd = 1 / std::sqrt(2.0 * n);
  const double so = 1 / std::sqrt(4.0 * n);
  for (int i = 0; i < n; ++i)
    for (const auto* u : {&qi, &qj, &qk}) out.push_back(sd * unit_block(d, i, i, *u));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.push_back(so * (unit_block(d, i, j, one) - unit_block(d, j, i, one)));
      for (const auto* u : {&qi, &qj, &qk})
        out.push_back(so * (unit_block(d, i, j, *u) + unit_block(d, j, i, *u)));
    }
  return out;
}

Eigen::MatrixXcd symplectic_conjugator(int n) {
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    q(2 * i, 2 * i + 1) = 1.0;
    q(2 * i + 1, 2 * i) = -1.0;
  }
  return q;
}

namespace {

constexpr long long kMaxTensorSize = 10000000;

long long ipow(long long base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

struct LocalEntry {
  int col;  // combined (j_a * d + j_b)
  cplx value;
};

// Rows of sum_r Y_a(r) (x) Y_b(r) on C^d (x) C^d, with Y = X for a g slot
// and Y = conj(X) for a conjugate slot.
std::vector<std::vector<LocalEntry>> pair_operator(const std::vector<Eigen::MatrixXcd>& basis,
                                                  int d, SlotKind sa, SlotKind sb) {
  std::vector<std::unordered_map<int, cplx>> acc(static_cast<size_t>(d * d));
  for (const auto& X : basis) {
    std::vector<std::tuple<int, int, cplx>> nz;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (X(i, j) != cplx(0.0)) nz.emplace_back(i, j, X(i, j));
    for (const auto& [ia, ja, va] : nz)
      for (const auto& [ib, jb, vb] : nz) {
        cplx a = sa == SlotKind::g ? va : std::conj(va);
        cplx b = sb == SlotKind::g ? vb : std::conj(vb);
        acc[static_cast<size_t>(ia * d + ib)][ja * d + jb] += a * b;
      }
  }
  std::vector<std::vector<LocalEntry>> rows(static_cast<size_t>(d * d));
  for (int r = 0; r < d * d; ++r) {
    std::vector<LocalEntry> row;
    for (const auto& [c, v] : acc[static_cast<size_t>(r)])
      if (std::abs(v) > 1e-15) row.push_back({c, v});
    std::sort(row.begin(), row.end(), [](const LocalEntry& x, const LocalEntry& y) { return x.col < y.col; });
    rows[static_cast<size_t>(r)] = std::move(row);
  }
  return rows;
}

}  // namespace

MomentGenerator::MomentGenerator(Algebra algebra, int n, int k, int l)
    : algebra_(algebra), n_(n), k_(k), l_(l), d_(defining_dim(algebra, n)) {
  check_rank(algebra, n);
  if (k < 0 || l < 0 || k + l < 1) fail(Status::InvalidArgument, "need k + l >= 1");
  if (algebra != Algebra::su && l > 0)
    fail(Status::InvalidArgument, "conjugate slots are only used for su; use conj() patterns");
  const int slots = k + l;
  if (std::pow(static_cast<double>(d_), slots) > static_cast<double>(kMaxTensorSize))
    fail(Status::TooLarge, "tensor space of dimension " + std::to_string(d_) + "^" +
                               std::to_string(slots) + " exceeds 1e7");
  size_ = ipow(d_, slots);
  shift_ = slots * to_double(algebra_drift(algebra, n)) / 2;

  const auto basis = algebra_basis(algebra, n);
  std::vector<SlotKind> kinds(static_cast<size_t>(slots), SlotKind::g);
  for (int s = k; s < slots; ++s) kinds[static_cast<size_t>(s)] = SlotKind::gbar;

  std::vector<Eigen::Triplet<cplx>> triplets;
  std::vector<long long> place(static_cast<size_t>(slots));
  for (int s = 0; s < slots; ++s) place[static_cast<size_t>(s)] = ipow(d_, slots - 1 - s);
  std::vector<int> digits(static_cast<size_t>(slots));
  for (int a = 0; a < slots; ++a)
    for (int b = a + 1; b < slots; ++b) {
      auto op = pair_operator(basis, d_, kinds[static_cast<size_t>(a)], kinds[static_cast<size_t>(b)]);
      const long long pa = place[static_cast<size_t>(a)], pb = place[static_cast<size_t>(b)];
      for (long long row = 0; row < size_; ++row) {
        int ia = static_cast<int>((row / pa) % d_);
        int ib = static_cast<int>((row / pb) % d_);
        long long rest = row - ia * pa - ib * pb;
        for (const auto& e : op[static_cast<size_t>(ia * d_ + ib)]) {
          long long col = rest + (e.col / d_) * pa + (e.col % d_) * pb;
          triplets.emplace_back(static_cast<int>(row), static_cast<int>(col), e.value);
        }
      }
    }
  coupling_.resize(static_cast<Eigen::Index>(size_), static_cast<Eigen::Index>(size_));
  coupling_.setFromTriplets(triplets.begin(), triplets.end());
  coupling_.makeCompressed();
  // one-norm: largest column sum of absolute values
  Eigen::VectorXd col_sums = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size_));
  for (Eigen::Index r = 0; r < coupling_.outerSize(); ++r)
    for (SparseC::InnerIterator it(coupling_, r); it; ++it) col_sums(it.col()) += std::abs(it.value());
  norm1_ = size_ > 0 ? col_sums.maxCoeff() : 0.0;
  double max_imag = 0;
  for (Eigen::Index r = 0; r < coupling_.outerSize(); ++r)
    for (SparseC::InnerIterator it(coupling_, r); it; ++it) max_imag = std::max(max_imag, std::abs(it.value().imag()));
  if (max_imag < 1e-15) {
    real_coupling_ = true;
    coupling_real_ = coupling_.real();
  }
}

long long MomentGenerator::flat_index(const std::vector<int>& digits) const {
  if (static_cast<int>(digits.size()) != k_ + l_) fail(Status::Internal, "wrong multi-index length");
  long long idx = 0;
  for (int v : digits) {
    if (v < 0 || v >= d_) fail(Status::InvalidArgument, "matrix index out of range");
    idx = idx * d_ + v;
  }
  return idx;
}

Eigen::VectorXcd MomentGenerator::apply_exp(const Eigen::VectorXcd& v, double t) const {
  if (v.size() != size_) fail(Status::Internal, "vector size mismatch");
  if (t < 0) fail(Status::InvalidArgument, "t must be non-negative");
  if (t == 0) return v;
  const int steps = std::max(1, static_cast<int>(std::ceil(t * norm1_)));
  const double h = t / steps;
  auto taylor = [&](auto x, const auto& A) {
    for (int s = 0; s < steps; ++s) {
      auto term = x;
      auto sum = x;
      for (int m = 1; m <= 80; ++m) {
        term = (h / m) * (A * term);
        sum += term;
        double tn = term.cwiseAbs().maxCoeff();
        double sn = sum.cwiseAbs().maxCoeff();
        if (tn <= 1e-17 * std::max(sn, 1e-300)) break;
      }
      x = sum;
    }
    return x;
  };
  if (real_coupling_) {
    // real and imaginary parts evolve separately
    Eigen::MatrixXd parts(v.size(), 2);
    parts.col(0) = v.real();
    parts.col(1) = v.imag();
    Eigen::MatrixXd out = taylor(parts, coupling_real_);
    Eigen::VectorXcd res(v.size());
    res.real() = out.col(0);
    res.imag() = out.col(1);
    return std::exp(t * shift_) * res;
  }
  Eigen::VectorXcd x = taylor(Eigen::VectorXcd(v), coupling_);
  return std::exp(t * shift_) * x;
}

Eigen::MatrixXcd MomentGenerator::dense() const {
  if (size_ > 6000) fail(Status::TooLarge, "dense generator limited to 6000 rows");
  Eigen::MatrixXcd m = Eigen::MatrixXcd(coupling_);
  m.diagonal().array() += shift_;
  return m;
}

namespace {

struct Factor {
  std::string name;
  int i, j, power;
};

std::vector<Factor> tokenize(const std::string& pattern) {
  std::vector<Factor> out;
  size_t pos = 0;
  auto skip = [&] {
    while (pos < pattern.size() && (std::isspace(static_cast<unsigned char>(pattern[pos])) || pattern[pos] == '*'))
      ++pos;
  };
  auto bad = [&](const std::string& why) -> void {
    fail(Status::UnsupportedPattern, "cannot parse pattern '" + pattern + "': " + why);
  };
  auto number = [&]() {
    size_t start = pos;
    while (pos < pattern.size() && std::isdigit(static_cast<unsigned char>(pattern[pos]))) ++pos;
    if (start == pos) bad("expected a number");
    return std::stoi(pattern.substr(start, pos - start));
  };
  skip();
  while (pos < pattern.size()) {
    size_t start = pos;
    while (pos < pattern.size() && (std::isalpha(static_cast<unsigned char>(pattern[pos])) ||
                                     (pos > start && std::isdigit(static_cast<unsigned char>(pattern[pos])))))
      ++pos;
    Factor f;
    f.name = pattern.substr(start, pos - start);
    if (f.name.empty() || pos >= pattern.size() || pattern[pos] != '(') bad("expected name(i,j)");
    ++pos;
    f.i = number();
    if (pos >= pattern.size() || pattern[pos] != ',') bad("expected ','");
    ++pos;
    f.j = number();
    if (pos >= pattern.size() || pattern[pos] != ')') bad("expected ')'");
    ++pos;
    f.power = 1;
    if (pos < pattern.size() && pattern[pos] == '^') {
      ++pos;
      f.power = number();
    }
    out.push_back(f);
    skip();
  }
  if (out.empty()) bad("empty pattern");
  return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Monomial m;
      m.coeff = x.coeff * y.coeff;
      m.g = x.g;
      m.g.insert(m.g.end(), y.g.begin(), y.g.end());
      m.gbar = x.gbar;
      m.gbar.insert(m.gbar.end(), y.gbar.begin(), y.gbar.end());
      out.push_back(std::move(m));
    }
  return out;
}

Polynomial single(MatrixEntry e, bool conjugate, cplx coeff = 1.0) {
  Monomial m;
  m.coeff = coeff;
  (conjugate ? m.gbar : m.g).push_back(e);
  return {m};
}

}  // namespace

Polynomial parse_pattern(Algebra a, int n, const std::string& pattern) {
  check_rank(a, n);
  const int d = defining_dim(a, n);
  Polynomial result{Monomial{}};
  for (const Factor& f : tokenize(pattern)) {
    if (f.power < 1) fail(Status::UnsupportedPattern, "powers must be positive");
    const int i = f.i - 1, j = f.j - 1;
    const int bound = (f.name == "abs2" && a == Algebra::usp) ? n : d;
    if (i < 0 || j < 0 || i >= bound || j >= bound)
      fail(Status::UnsupportedPattern, "index out of range in factor " + f.name);
    Polynomial factor;
    if (f.name == "g") {
      factor = single({i, j}, false);
    } else if (f.name == "gbar" || f.name == "conj") {
      if (a == Algebra::so) {
        factor = single({i, j}, false);
      } else if (a == Algebra::su) {
        factor = single({i, j}, true);
      } else {
        // conj of the (i, j) entry of the complex form is a signed entry
        int pi = i ^ 1, pj = j ^ 1;
        double sign = ((i % 2 == 0) ? 1.0 : -1.0) * ((j % 2 == 0) ? 1.0 : -1.0);
        factor = single({pi, pj}, false, sign);
      }
    } else if (f.name == "abs2") {
      if (a == Algebra::so) {
        factor = multiply(single({i, j}, false), single({i, j}, false));
      } else if (a == Algebra::su) {
        factor = multiply(single({i, j}, false), single({i, j}, true));
      } else {
        // squared quaternion norm from the 2 x 2 block (i, j)
        int r = 2 * i, c = 2 * j;
        factor = multiply(single({r, c}, false), single({r + 1, c + 1}, false));
        auto second = multiply(single({r, c + 1}, false), single({r + 1, c}, false, -1.0));
        factor.insert(factor.end(), second.begin(), second.end());
      }
    } else {
      fail(Status::UnsupportedPattern, "unknown factor '" + f.name + "'");
    }
    for (int p = 0; p < f.power; ++p) result = multiply(result, factor);
    for (const auto& m : result)
      if (m.g.size() + m.gbar.size() > 4)
        fail(Status::UnsupportedPattern, "moments of degree above 4 are not supported");
  }
  return result;
}

MomentEngine::MomentEngine(Algebra algebra, int n) : algebra_(algebra), n_(n) { check_rank(algebra, n); }

const MomentGenerator& MomentEngine::generator(int k, int l) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(k, l);
  auto it = cache_.find(key);
  if (it == cache_.end())
    it = cache_.emplace(key, std::make_unique<MomentGenerator>(algebra_, n_, k, l)).first;
  return *it->second;
}

cplx MomentEngine::expect(const Polynomial& p, double t) const {
  // Group monomials by (k, l) and column multi-index so that each distinct
  // column needs one exponential action.
  std::map<std::pair<int, int>, std::map<std::vector<int>, std::vector<std::pair<std::vector<int>, cplx>>>> jobs;
  cplx total = 0;
  for (const auto& m : p) {
    const int k = static_cast<int>(m.g.size()), l = static_cast<int>(m.gbar.size());
    if (k + l == 0) {
      total += m.coeff;
      continue;
    }
    std::vector<int> rows, cols;
    for (const auto& e : m.g) {
      rows.push_back(e.row);
      cols.push_back(e.col);
    }
    for (const auto& e : m.gbar) {
      rows.push_back(e.row);
      cols.push_back(e.col);
    }
    jobs[{k, l}][cols].push_back({rows, m.coeff});
  }
  for (const auto& [kl, by_col] : jobs) {
    const MomentGenerator& gen = generator(kl.first, kl.second);
    for (const auto& [cols, rows] : by_col) {
      Eigen::VectorXcd e = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(gen.size()));
      e(static_cast<Eigen::Index>(gen.flat_index(cols))) = 1.0;
      Eigen::VectorXcd x = gen.apply_exp(e, t);
      for (const auto& [r, c] : rows) total += c * x(static_cast<Eigen::Index>(gen.flat_index(r)));
    }
  }
  return total;
}

cplx MomentEngine::expect(const std::string& pattern, double t) const {
  return expect(parse_pattern(algebra_, n_, pattern), t);
}

cplx MomentEngine::bilinear(int k, int l, const Eigen::VectorXcd& left,
                            const Eigen::VectorXcd& right, double t) const {
  const MomentGenerator& gen = generator(k, l);
  if (left.size() != gen.size() || right.size() != gen.size())
    fail(Status::Internal, "vector size mismatch");
  return left.dot(gen.apply_exp(right, t));
}

cplx moment(Algebra a, int n, const std::string& pattern, double t) {
  return MomentEngine(a, n).expect(pattern, t);
}

namespace {

struct Claim {
  double value;
  long long mult;  // -1 when unspecified
};

std::vector<Claim> claimed_table(Algebra a, int n, int k, int l) {
  const double N = n;
  auto m = [](double v) { return static_cast<long long>(std::llround(v)); };
  if (a == Algebra::so && k == 2 && l == 0)
    return {{N - 1, 1}, {1, m(N * (N - 1) / 2)}, {-1, m((N + 2) * (N - 1) / 2)}};
  if (a == Algebra::so && k == 4 && l == 0)
    return {{2 * N - 2, 3},
            {N, m(3 * N * (N - 1))},
            {N - 2, m(3 * (N + 2) * (N - 1))},
            {6, m(N * (N - 1) * (N - 2) * (N - 3) / 24)},
            {2, m(3 * N * (N + 2) * (N - 1) * (N - 3) / 8)},
            {0, m(N * (N + 1) * (N + 2) * (N - 3) / 6)},
            {-2, m(3 * (N - 1) * (N - 2) * (N + 1) * (N + 4) / 8)},
            {-6, m(N * (N - 1) * (N + 1) * (N + 6) / 24)}};
  if (a == Algebra::su && k == 1 && l == 1) return {{N * N - 1, 1}, {-1, m(N * N - 1)}};
  if (a == Algebra::su && k == 2 && l == 2)
    return {{2 * N * N - 2, 2},
            {N * N - 2, m(4 * (N + 1) * (N - 1))},
            {2 * N - 2, m(N * N * (N + 1) * (N - 3) / 4)},
            {-2, m((N + 2) * (N + 1) * (N - 1) * (N - 2) / 2)},
            {-2 * N - 2, m(N * N * (N - 1) * (N + 3) / 4)}};
  if (a == Algebra::usp && k == 2 && l == 0)
    return {{(2 * N + 1) / 2, 1}, {0.5, m((N - 1) * (2 * N + 1))}, {-0.5, m(N * (2 * N + 1))}};
  if (a == Algebra::usp && k == 4 && l == 0)
    return {{2 * N + 1, 3}, {N + 1, -1}, {N, -1}, {3, -1}, {1, -1}, {0, -1}, {-1, -1}, {-3, -1}};
  fail(Status::InvalidArgument, "no eigen-table is known for this (algebra, k, l)");
}

// Merges coincident claimed values; a merged unspecified multiplicity stays
// unspecified.
std::vector<Claim> merge_claims(std::vector<Claim> claims) {
  std::vector<Claim> out;
  for (const auto& c : claims) {
    if (c.mult == 0) continue;
    auto it = std::find_if(out.begin(), out.end(), [&](const Claim& o) { return std::abs(o.value - c.value) < 1e-9; });
    if (it == out.end()) {
      out.push_back(c);
    } else if (it->mult < 0 || c.mult < 0) {
      // the fixed multiplicity of the top eigenvalue survives a merge with an unspecified one
      it->mult = -1;
    } else {
      it->mult += c.mult;
    }
  }
  std::sort(out.begin(), out.end(), [](const Claim& x, const Claim& y) { return x.value > y.value; });
  return out;
}

// Eigenvectors written out explicitly in the tables, with their eigenvalues.
std::vector<std::pair<Eigen::VectorXcd, double>> listed_vectors(const MomentGenerator& gen) {
  const int d = gen.dim();
  const int n = gen.n();
  const double N = n;
  std::vector<std::pair<Eigen::VectorXcd, double>> out;
  auto zero = [&]() -> Eigen::VectorXcd { return Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(gen.size())); };
  auto at = [&](std::vector<int> digits) { return static_cast<Eigen::Index>(gen.flat_index(digits)); };
  if (gen.algebra() == Algebra::so && gen.k() == 2) {
    auto v = zero();
    for (int i = 0; i < d; ++i) v(at({i, i})) = 1.0;
    out.push_back({v, N - 1});
    auto w = zero();
    w(at({0, 1})) = 1.0;
    w(at({1, 0})) = -1.0;
    out.push_back({w, 1});
  } else if (gen.algebra() == Algebra::so && gen.k() == 4) {
    auto v = zero();
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) v(at({a, a, b, b})) += 1.0;
    out.push_back({v, 2 * N - 2});
  } else if (gen.algebra() == Algebra::su && gen.k() == 1) {
    auto v = zero();
    for (int i = 0; i < d; ++i) v(at({i, i})) = 1.0;
    out.push_back({v, N * N - 1});
    auto w = zero();
    w(at({0, 1})) = 1.0;
    out.push_back({w, -1});
  } else if (gen.algebra() == Algebra::su && gen.k() == 2) {
    auto v = zero(), w = zero();
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        v(at({a, b, a, b})) += 1.0;
        w(at({a, b, b, a})) += 1.0;
      }
    out.push_back({v, 2 * N * N - 2});
    out.push_back({w, 2 * N * N - 2});
  } else if (gen.algebra() == Algebra::usp && gen.k() == 2) {
    auto v = zero();
    for (int i = 0; i < n; ++i) {
      v(at({2 * i, 2 * i + 1})) = 1.0;
      v(at({2 * i + 1, 2 * i})) = -1.0;
    }
    out.push_back({v, (2 * N + 1) / 2});
  } else if (gen.algebra() == Algebra::usp && gen.k() == 4) {
    // the invariant symplectic form placed on each of the three slot pairings
    std::vector<std::pair<std::pair<int, int>, double>> form;
    for (int i = 0; i < n; ++i) {
      form.push_back({{2 * i, 2 * i + 1}, 1.0});
      form.push_back({{2 * i + 1, 2 * i}, -1.0});
    }
    auto v1 = zero(), v2 = zero(), v3 = zero(), e = zero();
    for (const auto& [p, x] : form)
      for (const auto& [q, y] : form) {
        v1(at({p.first, p.second, q.first, q.second})) += x * y;
        v2(at({p.first, q.first, p.second, q.second})) += x * y;
        v3(at({p.first, q.first, q.second, p.second})) += x * y;
      }
    e(at({0, 0, 0, 0})) = 1.0;
    out.push_back({v1, 2 * N + 1});
    out.push_back({v2, 2 * N + 1});
    out.push_back({v3, 2 * N + 1});
    out.push_back({e, -3});
  }
  return out;
}

}  // namespace

EigenTableReport verify_eigentable(Algebra a, int n, int k, int l) {
  MomentGenerator gen(a, n, k, l);
  const double scale = a == Algebra::su ? static_cast<double>(n) * n : static_cast<double>(n);
  if (gen.size() > 6000) fail(Status::TooLarge, "eigen-table verification limited to 6000 rows");
  Eigen::MatrixXcd M = scale * Eigen::MatrixXcd(gen.coupling());
  // Hermitian up to rounding; the couplings built from the standard bases
  // are real, which allows the cheaper real symmetric solver.
  Eigen::MatrixXcd H = (M + M.adjoint()) / 2.0;
  Eigen::VectorXd evals;
  Eigen::MatrixXcd evecs;
  if (H.imag().cwiseAbs().maxCoeff() < 1e-14) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H.real());
    if (solver.info() != Eigen::Success) fail(Status::Internal, "eigen-solver failed");
    evals = solver.eigenvalues();
    evecs = solver.eigenvectors().cast<cplx>();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H);
    if (solver.info() != Eigen::Success) fail(Status::Internal, "eigen-solver failed");
    evals = solver.eigenvalues();
    evecs = solver.eigenvectors();
  }

  EigenTableReport rep{a, n, k, l, gen.size(), {}, {}, 0.0, true};
  std::vector<Claim> claims = merge_claims(claimed_table(a, n, k, l));
  // cluster computed eigenvalues
  struct Cluster {
    double value;
    long long count;
    double residual;
  };
  std::vector<Cluster> clusters;
  Eigen::MatrixXcd defect = M * evecs;
  defect.noalias() -= evecs * evals.cast<cplx>().asDiagonal();
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    double res = defect.col(i).norm();
    if (!clusters.empty() && std::abs(evals(i) - clusters.back().value) < 1e-6) {
      clusters.back().count++;
      clusters.back().residual = std::max(clusters.back().residual, res);
    } else {
      clusters.push_back({evals(i), 1, res});
    }
  }
  long long claimed_total = 0;
  bool all_specified = true;
  for (const auto& c : claims) {
    EigenRow row{c.value, c.mult, 0, 0.0, true};
    for (const auto& cl : clusters)
      if (std::abs(cl.value - c.value) < 1e-6) {
        row.computed_mult = cl.count;
        row.max_residual = cl.residual;
      }
    if (c.mult >= 0) {
      claimed_total += c.mult;
      row.ok = row.computed_mult == c.mult;
    } else {
      all_specified = false;
    }
    row.ok = row.ok && row.max_residual <= 1e-8;
    rep.passed = rep.passed && row.ok;
    rep.rows.push_back(row);
  }
  for (const auto& cl : clusters) {
    bool known = std::any_of(claims.begin(), claims.end(), [&](const Claim& c) { return std::abs(cl.value - c.value) < 1e-6; });
    if (!known) rep.unexpected.push_back(cl.value);
  }
  if (!rep.unexpected.empty()) rep.passed = false;
  if (all_specified && claimed_total != gen.size()) rep.passed = false;
  long long computed_total = 0;
  for (const auto& cl : clusters) computed_total += cl.count;
  if (computed_total != gen.size()) rep.passed = false;
  double listed = 0;
  for (const auto& [v, lambda] : listed_vectors(gen)) {
    double r = (M * v - lambda * v).norm() / v.norm();
    listed = std::max(listed, r);
  }
  rep.listed_vector_residual = listed;
  if (listed > 1e-8) rep.passed = false;
  return rep;
}

nlohmann::json to_json(const EigenTableReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"eigenvalue", row.eigenvalue},
                    {"claimed_mult", row.claimed_mult >= 0 ? nlohmann::json(row.claimed_mult) : nlohmann::json(nullptr)},
                    {"computed_mult", row.computed_mult},
                    {"max_residual", row.max_residual}});
  }
  return {{"algebra", algebra_name(r.algebra)},
          {"n", r.n},
          {"k", r.k},
          {"l", r.l},
          {"space_dim", r.space_dim},
          {"rows", rows},
          {"unexpected_eigenvalues", r.unexpected},
          {"listed_vector_residual", r.listed_vector_residual},
          {"passed", r.passed}};
}

}  // namespace cutofflab
