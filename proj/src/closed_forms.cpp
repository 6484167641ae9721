#include "closed_forms.hpp"

#include <cmath>

namespace cutofflab {

namespace {

// e^{-r t} with the rate given as a function of n
double ex(double rate, double t) { return std::exp(-rate * t); }

std::vector<ClosedForm> so_forms() {
  using F = ClosedForm;
  auto x1 = [](double, double t) { return ex(1, t); };
  auto x2 = [](double, double t) { return ex(2, t); };
  auto A = [](double n, double t) { return ex((2 * n + 4) / n, t); };
  auto B = [](double n, double t) { return ex((2 * n - 2) / n, t); };
  auto C = [](double n, double t) { return ex((2 * n - 8) / n, t); };
  auto D = [](double n, double t) { return ex((2 * n - 4) / n, t); };
  auto Fm = [](double n, double t) { return ex((n - 2) / n, t); };
  return {
      F{"g_ii^2", "g(1,1)^2", 3, [=](double n, double t) { return 1 / n + (1 - 1 / n) * x1(n, t); }},
      F{"g_ij^2", "g(1,2)^2", 3, [=](double n, double t) { return (1 - x1(n, t)) / n; }},
      F{"g_ii g_jj", "g(1,1) g(2,2)", 3, [=](double n, double t) { return (x1(n, t) + Fm(n, t)) / 2; }},
      F{"g_ij g_ji", "g(1,2) g(2,1)", 3, [=](double n, double t) { return (x1(n, t) - Fm(n, t)) / 2; }},
      F{"g_ii g_ij", "g(1,1) g(1,2)", 3, [](double, double) { return 0.0; }},
      F{"g_ij g_kl", "g(1,2) g(3,4)", 4, [](double, double) { return 0.0; }},
      F{"g_ii^4", "g(1,1)^4", 3,
        [=](double n, double t) {
          return 3 / (n * (n + 2)) + 6 * (n - 1) / (n * (n + 4)) * x1(n, t) +
                 (n + 1) * (n - 1) / ((n + 2) * (n + 4)) * A(n, t);
        }},
      F{"g_ij^4", "g(1,2)^4", 3,
        [=](double n, double t) {
          return 3 / (n * (n + 2)) - 6 / (n * (n + 4)) * x1(n, t) + 3 / ((n + 2) * (n + 4)) * A(n, t);
        }},
      F{"g_ii^2 g_ij^2", "g(1,1)^2 g(1,2)^2", 3,
        [=](double n, double t) {
          return 1 / (n * (n + 2)) + (n - 2) / (n * (n + 4)) * x1(n, t) -
                 (n + 1) / ((n + 2) * (n + 4)) * A(n, t);
        }},
      F{"g_ij^2 g_ik^2", "g(1,2)^2 g(1,3)^2", 3,
        [=](double n, double t) {
          return 1 / (n * (n + 2)) - 2 / (n * (n + 4)) * x1(n, t) + 1 / ((n + 2) * (n + 4)) * A(n, t);
        }},
      F{"g_ij g_ik g_il^2", "g(1,2) g(1,3) g(1,4)^2", 4, [](double, double) { return 0.0; }},
      F{"g_ii^2 g_jj^2", "g(1,1)^2 g(2,2)^2", 3,
        [=](double n, double t) {
          return (n + 1) / ((n - 1) * n * (n + 2)) + 2 * (n + 3) / (n * (n + 4)) * x1(n, t) +
                 (n - 3) / (3 * (n - 1)) * B(n, t) + (n - 2) / (2 * n) * x2(n, t) +
                 (n * n + 4 * n + 6) / (6 * (n + 2) * (n + 4)) * A(n, t);
        }},
      F{"g_ij^2 g_ji^2", "g(1,2)^2 g(2,1)^2", 3,
        [=](double n, double t) {
          return (n + 1) / (n * (n - 1) * (n + 2)) - 2 / (n * (n + 4)) * x1(n, t) +
                 (n - 3) / (3 * (n - 1)) * B(n, t) - (n - 2) / (2 * n) * x2(n, t) +
                 (n * n + 4 * n + 6) / (6 * (n + 2) * (n + 4)) * A(n, t);
        }},
      F{"g_ii^2 g_jk^2", "g(1,1)^2 g(2,3)^2", 3,
        [=](double n, double t) {
          return (n + 1) / (n * (n - 1) * (n + 2)) + (n * n - 8) / (n * (n - 2) * (n + 4)) * x1(n, t) -
                 (n - 3) / (3 * (n - 1) * (n - 2)) * B(n, t) - 1 / (2 * n) * x2(n, t) -
                 n / (6 * (n + 2) * (n + 4)) * A(n, t);
        }},
      F{"g_ij^2 g_jk^2", "g(1,2)^2 g(2,3)^2", 3,
        [=](double n, double t) {
          return (n + 1) / (n * (n - 1) * (n + 2)) - 2 / ((n - 2) * (n + 4)) * x1(n, t) -
                 (n - 3) / (3 * (n - 1) * (n - 2)) * B(n, t) + 1 / (2 * n) * x2(n, t) -
                 n / (6 * (n + 2) * (n + 4)) * A(n, t);
        }},
      F{"g_ij^2 g_kl^2", "g(1,2)^2 g(3,4)^2", 4,
        [=](double n, double t) {
          return (n + 1) / (n * (n - 1) * (n + 2)) - 2 * (n + 2) / (n * (n - 2) * (n + 4)) * x1(n, t) +
                 2 / (3 * (n - 1) * (n - 2)) * B(n, t) + 1 / (3 * (n + 2) * (n + 4)) * A(n, t);
        }},
      F{"g_ii g_ij g_jj g_ji", "g(1,1) g(1,2) g(2,2) g(2,1)", 3,
        [=](double n, double t) {
          return -1 / (n * (n - 1) * (n + 2)) - 2 / (n * (n + 4)) * x1(n, t) -
                 (n - 3) / (6 * (n - 1)) * B(n, t) + (n * n + 4 * n + 6) / (6 * (n + 2) * (n + 4)) * A(n, t);
        }},
      F{"g_ik g_il g_jk g_jl", "g(1,3) g(1,4) g(2,3) g(2,4)", 4,
        [=](double n, double t) {
          return -1 / (n * (n - 1) * (n + 2)) + 4 / (n * (n - 2) * (n + 4)) * x1(n, t) -
                 1 / (3 * (n - 1) * (n - 2)) * B(n, t) + 1 / (3 * (n + 2) * (n + 4)) * A(n, t);
        }},
      F{"g_ii g_jj g_kk g_ll", "g(1,1) g(2,2) g(3,3) g(4,4)", 4,
        [=](double n, double t) {
          return C(n, t) / 24 + 3 * D(n, t) / 8 + B(n, t) / 6 + 3 * x2(n, t) / 8 + A(n, t) / 24;
        }},
      F{"g_ij g_jk g_kl g_li", "g(1,2) g(2,3) g(3,4) g(4,1)", 4,
        [=](double n, double t) { return -C(n, t) / 24 + D(n, t) / 8 - x2(n, t) / 8 + A(n, t) / 24; }},
      F{"g_ii g_jj g_kl g_lk", "g(1,1) g(2,2) g(3,4) g(4,3)", 4,
        [=](double n, double t) { return -C(n, t) / 24 - D(n, t) / 8 + x2(n, t) / 8 + A(n, t) / 24; }},
      F{"g_ij g_ji g_kl g_lk", "g(1,2) g(2,1) g(3,4) g(4,3)", 4,
        [=](double n, double t) {
          return C(n, t) / 24 - D(n, t) / 8 + B(n, t) / 6 - x2(n, t) / 8 + A(n, t) / 24;
        }},
  };
}

std::vector<ClosedForm> su_forms() {
  using F = ClosedForm;
  auto x1 = [](double, double t) { return ex(1, t); };
  auto x2 = [](double, double t) { return ex(2, t); };
  auto A = [](double n, double t) { return ex((2 * n + 2) / n, t); };
  auto B = [](double n, double t) { return ex((2 * n - 2) / n, t); };
  return {
      F{"|g_ii|^2", "abs2(1,1)", 2, [=](double n, double t) { return 1 / n + (1 - 1 / n) * x1(n, t); }},
      F{"|g_ij|^2", "abs2(1,2)", 2, [=](double n, double t) { return (1 - x1(n, t)) / n; }},
      F{"g_ii conj(g_jj)", "g(1,1) gbar(2,2)", 2, [=](double n, double t) { return x1(n, t); }},
      F{"|g_ii|^4", "abs2(1,1)^2", 2,
        [=](double n, double t) {
          return 2 / (n * (n + 1)) + 4 * (n - 1) / (n * (n + 2)) * x1(n, t) +
                 n * (n - 1) / ((n + 1) * (n + 2)) * A(n, t);
        }},
      F{"|g_ij|^4", "abs2(1,2)^2", 2,
        [=](double n, double t) {
          return 2 / (n * (n + 1)) - 4 / (n * (n + 2)) * x1(n, t) + 2 / ((n + 1) * (n + 2)) * A(n, t);
        }},
      F{"|g_ii|^2 |g_ij|^2", "abs2(1,1) abs2(1,2)", 2,
        [=](double n, double t) {
          return 1 / (n * (n + 1)) + (n - 2) / (n * (n + 2)) * x1(n, t) - n / ((n + 1) * (n + 2)) * A(n, t);
        }},
      F{"|g_ij|^2 |g_ik|^2", "abs2(1,2) abs2(1,3)", 3,
        [=](double n, double t) {
          return 1 / (n * (n + 1)) - 2 / (n * (n + 2)) * x1(n, t) + 1 / ((n + 1) * (n + 2)) * A(n, t);
        }},
      F{"|g_ii|^2 |g_jj|^2", "abs2(1,1) abs2(2,2)", 3,
        [=](double n, double t) {
          return 1 / ((n - 1) * (n + 1)) + 2 * (n + 1) / (n * (n + 2)) * x1(n, t) +
                 (n - 3) / (4 * (n - 1)) * B(n, t) + (n - 2) / (2 * n) * x2(n, t) +
                 (n * n + n + 2) / (4 * (n + 1) * (n + 2)) * A(n, t);
        }},
      F{"|g_ij|^2 |g_ji|^2", "abs2(1,2) abs2(2,1)", 3,
        [=](double n, double t) {
          return 1 / ((n - 1) * (n + 1)) - 2 / (n * (n + 2)) * x1(n, t) + (n - 3) / (4 * (n - 1)) * B(n, t) -
                 (n - 2) / (2 * n) * x2(n, t) + (n * n + n + 2) / (4 * (n + 1) * (n + 2)) * A(n, t);
        }},
      F{"|g_ii|^2 |g_jk|^2", "abs2(1,1) abs2(2,3)", 3,
        [=](double n, double t) {
          return 1 / ((n - 1) * (n + 1)) + (n * n - 2 * n - 2) / (n * (n - 2) * (n + 2)) * x1(n, t) -
                 (n - 3) / (4 * (n - 1) * (n - 2)) * B(n, t) - 1 / (2 * n) * x2(n, t) -
                 (n - 1) / (4 * (n + 1) * (n + 2)) * A(n, t);
        }},
      F{"|g_ij|^2 |g_jk|^2", "abs2(1,2) abs2(2,3)", 3,
        [=](double n, double t) {
          return 1 / ((n - 1) * (n + 1)) - 2 * (n - 1) / (n * (n - 2) * (n + 2)) * x1(n, t) -
                 (n - 3) / (4 * (n - 1) * (n - 2)) * B(n, t) + 1 / (2 * n) * x2(n, t) -
                 (n - 1) / (4 * (n + 1) * (n + 2)) * A(n, t);
        }},
      F{"|g_ij|^2 |g_kl|^2", "abs2(1,2) abs2(3,4)", 4,
        [=](double n, double t) {
          return 1 / ((n - 1) * (n + 1)) - 2 / ((n - 2) * (n + 2)) * x1(n, t) +
                 1 / (2 * (n - 1) * (n - 2)) * B(n, t) + 1 / (2 * (n + 1) * (n + 2)) * A(n, t);
        }},
  };
}

std::vector<ClosedForm> usp_forms() {
  using F = ClosedForm;
  auto x1 = [](double, double t) { return ex(1, t); };
  auto x2 = [](double, double t) { return ex(2, t); };
  auto P = [](double n, double t) { return ex((n + 1) / n, t); };
  auto Q = [](double n, double t) { return ex((2 * n + 1) / n, t); };
  auto R = [](double n, double t) { return ex((2 * n + 2) / n, t); };
  auto S = [](double n, double t) { return ex((2 * n + 4) / n, t); };
  auto B = [](double n, double t) { return ex((2 * n - 2) / n, t); };
  // entries of the complex form: a = 1 and b = 3 lie in different quaternion blocks
  return {
      F{"|q_ii|^2", "abs2(1,1)", 1, [=](double n, double t) { return 1 / n + (n - 1) / n * x1(n, t); }},
      F{"|q_ij|^2", "abs2(1,2)", 2, [=](double n, double t) { return (1 - x1(n, t)) / n; }},
      F{"h_aa^2", "g(1,1)^2", 1, [=](double n, double t) { return P(n, t); }},
      F{"h_ab^2", "g(1,3)^2", 2, [](double, double) { return 0.0; }},
      F{"h_aa^4", "g(1,1)^4", 1, [=](double n, double t) { return S(n, t); }},
      F{"h_ab^4", "g(1,3)^4", 2, [](double, double) { return 0.0; }},
      F{"h_aa^2 h_ab^2", "g(1,1)^2 g(1,3)^2", 2, [](double, double) { return 0.0; }},
      F{"h_ab^2 h_ac^2", "g(1,3)^2 g(1,5)^2", 3, [](double, double) { return 0.0; }},
      F{"(h_{2i-1,2i-1} h_{2i,2i})^2", "g(1,1)^2 g(2,2)^2", 1,
        [=](double n, double t) {
          return 1 / (n * (2 * n + 1)) + (n - 1) / (n * (n + 1)) * x1(n, t) + P(n, t) / (n + 1) +
                 (2 * n - 1) * (2 * n - 2) / (3 * (2 * n + 1) * (2 * n + 2)) * Q(n, t) +
                 (n - 1) / (2 * (n + 1)) * R(n, t) + S(n, t) / 6;
        }},
      F{"(h_{2i-1,2i} h_{2i,2i-1})^2", "g(1,2)^2 g(2,1)^2", 1,
        [=](double n, double t) {
          return 1 / (n * (2 * n + 1)) + (n - 1) / (n * (n + 1)) * x1(n, t) - P(n, t) / (n + 1) +
                 (2 * n - 1) * (2 * n - 2) / (3 * (2 * n + 1) * (2 * n + 2)) * Q(n, t) -
                 (n - 1) / (2 * (n + 1)) * R(n, t) + S(n, t) / 6;
        }},
      F{"(h_{2i-1,2j-1} h_{2i,2j})^2", "g(1,3)^2 g(2,4)^2", 2,
        [=](double n, double t) {
          return 1 / (n * (2 * n + 1)) - 1 / (n * (n + 1)) * x1(n, t) + Q(n, t) / ((2 * n + 1) * (n + 1));
        }},
      F{"(h_{2i-1,2j} h_{2i,2j-1})^2", "g(1,4)^2 g(2,3)^2", 2,
        [=](double n, double t) {
          return 1 / (n * (2 * n + 1)) - 1 / (n * (n + 1)) * x1(n, t) + Q(n, t) / ((2 * n + 1) * (n + 1));
        }},
      F{"(h_aa h_bb)^2", "g(1,1)^2 g(3,3)^2", 2,
        [=](double n, double t) { return Q(n, t) / 3 + R(n, t) / 2 + S(n, t) / 6; }},
      F{"(h_ab h_ba)^2", "g(1,3)^2 g(3,1)^2", 2,
        [=](double n, double t) { return Q(n, t) / 3 - R(n, t) / 2 + S(n, t) / 6; }},
      F{"h_{2i-1,2i-1} h_{2i-1,2i} h_{2i,2i} h_{2i,2i-1}", "g(1,1) g(1,2) g(2,2) g(2,1)", 1,
        [=](double n, double t) {
          return -1 / (2 * n * (2 * n + 1)) - (n - 1) / (2 * n * (n + 1)) * x1(n, t) -
                 (2 * n - 1) * (2 * n - 2) / (6 * (2 * n + 1) * (2 * n + 2)) * Q(n, t) + S(n, t) / 6;
        }},
      F{"|q_ii|^4", "abs2(1,1)^2", 1,
        [=](double n, double t) {
          return 3 / (n * (2 * n + 1)) + 3 * (n - 1) / (n * (n + 1)) * x1(n, t) +
                 (2 * n - 1) * (2 * n - 2) / ((2 * n + 1) * (2 * n + 2)) * Q(n, t);
        }},
      F{"|q_ij|^4", "abs2(1,2)^2", 2,
        [=](double n, double t) {
          return 3 / (n * (2 * n + 1)) - 3 / (n * (n + 1)) * x1(n, t) + 3 / ((2 * n + 1) * (n + 1)) * Q(n, t);
        }},
      F{"|q_ii q_ij|^2", "abs2(1,1) abs2(1,2)", 2,
        [=](double n, double t) {
          return 2 / (n * (2 * n + 1)) + (n - 2) / (n * (n + 1)) * x1(n, t) -
                 2 * (2 * n - 1) / ((2 * n + 1) * (2 * n + 2)) * Q(n, t);
        }},
      F{"|q_ij q_ik|^2", "abs2(1,2) abs2(1,3)", 3,
        [=](double n, double t) {
          return 2 / (n * (2 * n + 1)) - 2 / (n * (n + 1)) * x1(n, t) + 2 / ((2 * n + 1) * (n + 1)) * Q(n, t);
        }},
      F{"|q_ii q_jj|^2", "abs2(1,1) abs2(2,2)", 2,
        [=](double n, double t) {
          return (2 * n - 1) / (n * (n - 1) * (2 * n + 1)) + 2 / (n + 1) * x1(n, t) +
                 (n - 3) / (6 * (n - 1)) * B(n, t) + (n - 2) / (2 * n) * x2(n, t) +
                 (2 * n * n - n + 3) / (3 * (n + 1) * (2 * n + 1)) * Q(n, t);
        }},
      F{"|q_ij q_ji|^2", "abs2(1,2) abs2(2,1)", 2,
        [=](double n, double t) {
          return (2 * n - 1) / (n * (n - 1) * (2 * n + 1)) - 2 / (n * (n + 1)) * x1(n, t) +
                 (n - 3) / (6 * (n - 1)) * B(n, t) - (n - 2) / (2 * n) * x2(n, t) +
                 (2 * n * n - n + 3) / (3 * (n + 1) * (2 * n + 1)) * Q(n, t);
        }},
      F{"|q_ii q_jk|^2", "abs2(1,1) abs2(2,3)", 3,
        [=](double n, double t) {
          return (2 * n - 1) / (n * (n - 1) * (2 * n + 1)) +
                 (n * n - 3 * n + 1) / (n * (n + 1) * (n - 2)) * x1(n, t) -
                 (n - 3) / (6 * (n - 1) * (n - 2)) * B(n, t) - 1 / (2 * n) * x2(n, t) -
                 (2 * n - 3) / (3 * (n + 1) * (2 * n + 1)) * Q(n, t);
        }},
      F{"|q_ij q_jk|^2", "abs2(1,2) abs2(2,3)", 3,
        [=](double n, double t) {
          return (2 * n - 1) / (n * (n - 1) * (2 * n + 1)) -
                 (2 * n - 3) / (n * (n + 1) * (n - 2)) * x1(n, t) -
                 (n - 3) / (6 * (n - 1) * (n - 2)) * B(n, t) + 1 / (2 * n) * x2(n, t) -
                 (2 * n - 3) / (3 * (n + 1) * (2 * n + 1)) * Q(n, t);
        }},
      F{"|q_ij q_kl|^2", "abs2(1,2) abs2(3,4)", 4,
        [=](double n, double t) {
          return (2 * n - 1) / (n * (n - 1) * (2 * n + 1)) -
                 (2 * n - 2) / (n * (n + 1) * (n - 2)) * x1(n, t) +
                 1 / (3 * (n - 1) * (n - 2)) * B(n, t) + 4 / (3 * (n + 1) * (2 * n + 1)) * Q(n, t);
        }},
  };
}

}  // namespace

std::vector<ClosedForm> closed_forms(Algebra a) {
  switch (a) {
    case Algebra::so: return so_forms();
    case Algebra::su: return su_forms();
    case Algebra::usp: return usp_forms();
  }
  return {};
}

std::vector<ClosedFormCheck> check_closed_forms(Algebra a, int n, const std::vector<double>& times) {
  MomentEngine engine(a, n);
  std::vector<ClosedFormCheck> out;
  for (const auto& f : closed_forms(a)) {
    if (n < f.min_n) continue;
    auto poly = parse_pattern(a, n, f.pattern);
    for (double t : times) {
      cplx v = engine.expect(poly, t);
      double closed = f.value(n, t);
      out.push_back({f.label, f.pattern, n, t, v.real(), closed,
                     std::max(std::abs(v.real() - closed), std::abs(v.imag()))});
    }
  }
  return out;
}

}  // namespace cutofflab
