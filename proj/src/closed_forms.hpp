#pragma once

#include "moments.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cutofflab {

// A moment of the Brownian motion with a known closed form in (n, t).
struct ClosedForm {
  std::string label;    // e.g. "g_ii^2 g_jj^2"
  std::string pattern;  // moment pattern using i,j,k,l = 1,2,3,4
  int min_n;
  std::function<double(double n, double t)> value;
};

std::vector<ClosedForm> closed_forms(Algebra a);

struct ClosedFormCheck {
  std::string label;
  std::string pattern;
  int n;
  double t;
  double engine;
  double closed;
  double abs_error;
};

// Evaluates every applicable closed form against the moment engine.
std::vector<ClosedFormCheck> check_closed_forms(Algebra a, int n, const std::vector<double>& times);

}  // namespace cutofflab
