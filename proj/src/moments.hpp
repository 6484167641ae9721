#pragma once

#include "common.hpp"
#include "spaces.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <nlohmann/json.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace cutofflab {

using SparseC = Eigen::SparseMatrix<cplx, Eigen::RowMajor>;

// Size of the defining matrices: n for so(n) and su(n), 2n for usp(n).
int defining_dim(Algebra a, int n);
Rational algebra_drift(Algebra a, int n);
int minimum_algebra_n(Algebra a);

// Orthonormal basis X_r of the Lie algebra in its defining representation,
// normalized so that sum_r X_r X_r equals the drift constant times I.
std::vector<Eigen::MatrixXcd> algebra_basis(Algebra a, int n);

// Matrix Q with conj(g) = Q g Q^T for compact symplectic matrices in their
// 2n x 2n complex form.
Eigen::MatrixXcd symplectic_conjugator(int n);

enum class SlotKind { g, gbar };

// Generator of t -> E[g_t^{(x) k} (x) conj(g_t)^{(x) l}]: the tensor
// slots hold k copies of g followed by l copies of conj(g). Slot 0 is the
// most significant digit of a flat multi-index.
class MomentGenerator {
 public:
  MomentGenerator(Algebra algebra, int n, int k, int l);

  Algebra algebra() const { return algebra_; }
  int n() const { return n_; }
  int k() const { return k_; }
  int l() const { return l_; }
  int dim() const { return d_; }
  long long size() const { return size_; }
  double shift() const { return shift_; }  // (k + l) alpha / 2
  const SparseC& coupling() const { return coupling_; }  // sum over slot pairs

  long long flat_index(const std::vector<int>& digits) const;

  // exp(t G) v by Taylor steps on the sparse coupling.
  Eigen::VectorXcd apply_exp(const Eigen::VectorXcd& v, double t) const;
  // Dense generator, only for small sizes.
  Eigen::MatrixXcd dense() const;

 private:
  Algebra algebra_;
  int n_, k_, l_, d_;
  long long size_;
  double shift_;
  double norm1_;
  SparseC coupling_;
  bool real_coupling_ = false;
  Eigen::SparseMatrix<double, Eigen::RowMajor> coupling_real_;
};

struct MatrixEntry {
  int row;  // 0-based
  int col;
};

struct Monomial {
  cplx coeff{1.0, 0.0};
  std::vector<MatrixEntry> g;
  std::vector<MatrixEntry> gbar;
};

using Polynomial = std::vector<Monomial>;

// Grammar: factors separated by whitespace or '*'; each factor is
// name(i,j) with an optional ^p, names g, gbar, conj, abs2; indices are
// 1-based. For usp the g/gbar/conj indices address the 2n x 2n complex
// form and abs2(i,j) is the squared norm of the quaternion entry (i,j).
Polynomial parse_pattern(Algebra a, int n, const std::string& pattern);

class MomentEngine {
 public:
  MomentEngine(Algebra algebra, int n);
  Algebra algebra() const { return algebra_; }
  int n() const { return n_; }

  cplx expect(const Polynomial& p, double t) const;
  cplx expect(const std::string& pattern, double t) const;
  // left^* exp(tG) right on the (k, l) tensor space.
  cplx bilinear(int k, int l, const Eigen::VectorXcd& left, const Eigen::VectorXcd& right,
                double t) const;
  const MomentGenerator& generator(int k, int l) const;

 private:
  Algebra algebra_;
  int n_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<MomentGenerator>> cache_;
};

cplx moment(Algebra a, int n, const std::string& pattern, double t);

struct EigenRow {
  double eigenvalue;
  long long claimed_mult;  // -1 when the table leaves it unspecified
  long long computed_mult;
  double max_residual;
  bool ok;
};

struct EigenTableReport {
  Algebra algebra;
  int n, k, l;
  long long space_dim;
  std::vector<EigenRow> rows;
  std::vector<double> unexpected;  // computed eigenvalues missing from the table
  double listed_vector_residual;   // residual of the explicitly listed eigenvectors
  bool passed;
};

// Diagonalizes the scaled generator (n sum P for so/usp, n^2 sum P for su)
// and confronts it with the closed-form table for (k, l).
EigenTableReport verify_eigentable(Algebra a, int n, int k, int l);

nlohmann::json to_json(const EigenTableReport& r);

}  // namespace cutofflab
