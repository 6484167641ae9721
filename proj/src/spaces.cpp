#include "spaces.hpp"

#include <cmath>

namespace cutofflab {

namespace {

struct TableRow {
  Family family;
  const char* name;
  int beta, alpha, gamma_b, gamma_a, n0, c, C;
};

// Cut-off constants, one row per family.
constexpr TableRow kTable[] = {
    {Family::SO, "SO", 1, 2, 2, 2, 10, 36, 6},
    {Family::SU, "SU", 2, 2, 2, 4, 2, 8, 10},
    {Family::USp, "USp", 4, 2, 2, 2, 3, 5, 3},
    {Family::GrR, "GrR", 1, 1, 1, 1, 10, 32, 2},
    {Family::GrC, "GrC", 2, 1, 1, 2, 2, 32, 2},
    {Family::GrH, "GrH", 4, 1, 1, 1, 3, 16, 2},
    {Family::SO2n_Un, "SO2n_Un", 1, 1, 2, 1, 10, 8, 2},
    {Family::SUn_SOn, "SUn_SOn", 2, 1, 2, 2, 2, 24, 8},
    {Family::SU2n_USpn, "SU2n_USpn", 2, 1, 2, 2, 2, 22, 8},
    {Family::USpn_Un, "USpn_Un", 4, 1, 2, 1, 3, 17, 2},
};

const TableRow& row(Family f) {
  for (const auto& r : kTable)
    if (r.family == f) return r;
  fail(Status::Internal, "missing table row");
}

bool is_grassmannian(Family f) {
  return f == Family::GrR || f == Family::GrC || f == Family::GrH;
}

Rational drift(Algebra a, int n) {
  switch (a) {
    case Algebra::so: return -Rational(n - 1, n);
    case Algebra::su: return -Rational(n * n - 1, n * n);
    case Algebra::usp: return -Rational(2 * n + 1, 2 * n);
  }
  return 0;
}

std::vector<int> unit_parts(int length, int ones, int value) {
  std::vector<int> p(static_cast<size_t>(length), 0);
  for (int i = 0; i < ones && i < length; ++i) p[static_cast<size_t>(i)] = value;
  return p;
}

}  // namespace

const char* family_name(Family f) { return row(f).name; }

Family parse_family(const std::string& name) {
  for (const auto& r : kTable)
    if (name == r.name) return r.family;
  fail(Status::UnknownFamily, "unknown family '" + name + "'");
}

const char* algebra_name(Algebra a) {
  switch (a) {
    case Algebra::so: return "so";
    case Algebra::su: return "su";
    case Algebra::usp: return "usp";
  }
  return "so";
}

Algebra parse_algebra(const std::string& name) {
  if (name == "so") return Algebra::so;
  if (name == "su") return Algebra::su;
  if (name == "usp" || name == "sp") return Algebra::usp;
  fail(Status::UnknownFamily, "unknown algebra '" + name + "'");
}

char lie_type_char(LieType t) { return "ABCD"[static_cast<int>(t)]; }

LieType parse_lie_type(char c) {
  switch (c) {
    case 'A': case 'a': return LieType::A;
    case 'B': case 'b': return LieType::B;
    case 'C': case 'c': return LieType::C;
    case 'D': case 'd': return LieType::D;
    default: fail(Status::InvalidArgument, std::string("unknown root system type '") + c + "'");
  }
}

SpaceDescriptor describe(Family family, int n, std::optional<int> q) {
  if (n < 2) fail(Status::InvalidRank, "n must be at least 2");
  if (is_grassmannian(family)) {
    if (!q) fail(Status::InvalidRank, "Grassmannians need q");
    if (*q < 1 || *q >= n) fail(Status::InvalidRank, "q must satisfy 1 <= q < n");
    if (2 * *q > n) q = n - *q;
  } else if (q) {
    fail(Status::InvalidRank, "q is only meaningful for Grassmannians");
  }
  const TableRow& r = row(family);
  SpaceDescriptor d{family, n, q, r.beta, r.alpha, r.n0, Rational(r.c), Rational(r.C),
                    r.gamma_b, r.gamma_a, 0, false};
  d.is_group = family == Family::SO || family == Family::SU || family == Family::USp;
  IsometryGroup g = isometry_group(d);
  d.drift_alpha = drift(g.algebra, g.algebra_n);
  return d;
}

SpaceDescriptor describe(const std::string& family, int n, std::optional<int> q) {
  return describe(parse_family(family), n, q);
}

IsometryGroup isometry_group(const SpaceDescriptor& d) {
  const int n = d.n;
  auto orthogonal = [](int m) {
    return IsometryGroup{m % 2 ? LieType::B : LieType::D, Algebra::so, m, m / 2};
  };
  switch (d.family) {
    case Family::SO: return orthogonal(n);
    case Family::SU: return {LieType::A, Algebra::su, n, n - 1};
    case Family::USp: return {LieType::C, Algebra::usp, n, n};
    case Family::GrR: return orthogonal(n);
    case Family::GrC: return {LieType::A, Algebra::su, n, n};
    case Family::GrH: return {LieType::C, Algebra::usp, n, n};
    case Family::SO2n_Un: return orthogonal(2 * n);
    case Family::SUn_SOn: return {LieType::A, Algebra::su, n, n - 1};
    case Family::SU2n_USpn: return {LieType::A, Algebra::su, 2 * n, 2 * n - 1};
    case Family::USpn_Un: return {LieType::C, Algebra::usp, n, n};
  }
  fail(Status::Internal, "unhandled family");
}

IndexingSet indexing_set(const SpaceDescriptor& d) {
  const int n = d.n;
  const int q = d.q.value_or(0);
  switch (d.family) {
    case Family::SO:
      return {n % 2 ? WeightKind::halfY : WeightKind::signedLastPart, n / 2};
    case Family::SU: return {WeightKind::Y, n - 1};
    case Family::USp: return {WeightKind::Y, n};
    case Family::GrR: return {WeightKind::evenOrOddY, q};
    case Family::GrC: return {WeightKind::Y, q};
    case Family::GrH: return {WeightKind::doubledY, 2 * q};
    case Family::SO2n_Un: return {WeightKind::doubledY, n};
    case Family::SUn_SOn: return {WeightKind::evenY, n - 1};
    case Family::SU2n_USpn: return {WeightKind::doubledY, 2 * n - 1};
    case Family::USpn_Un: return {WeightKind::evenY, n};
  }
  fail(Status::Internal, "unhandled family");
}

Weight group_label(const SpaceDescriptor& d, const Weight& w) {
  require_member(w, indexing_set(d));
  return group_label_unchecked(d, w);
}

Weight group_label_unchecked(const SpaceDescriptor& d, const Weight& w) {
  IsometryGroup g = isometry_group(d);
  if (d.is_group) return w;
  if (d.family == Family::GrC) {
    // (l_1, ..., l_q, 0, ..., 0, -l_q, ..., -l_1) in U(n)
    std::vector<int> p2(static_cast<size_t>(d.n), 0);
    const int q = w.length();
    for (int i = 0; i < q; ++i) {
      p2[static_cast<size_t>(i)] = w.parts2[static_cast<size_t>(i)];
      p2[static_cast<size_t>(d.n - 1 - i)] = -w.parts2[static_cast<size_t>(i)];
    }
    return make_weight2(p2, WeightKind::Z, LastSign::zero);
  }
  std::vector<int> p2 = w.parts2;
  p2.resize(static_cast<size_t>(g.rank), 0);
  WeightKind kind = g.type == LieType::D ? WeightKind::signedLastPart : WeightKind::Y;
  return make_weight2(p2, kind, LastSign::plus);
}

MinimalWeight minimal_weight(const SpaceDescriptor& d) {
  const int n = d.n;
  const IndexingSet set = indexing_set(d);
  const int L = set.length;
  auto w = [&](int ones, int value) { return make_weight(unit_parts(L, ones, value), set.kind); };
  switch (d.family) {
    case Family::SO: return {w(1, 1), Rational(n) * n, Rational(n - 1, n)};
    case Family::SU: return {w(1, 1), Rational(n) * n, 1 - Rational(1, n * n)};
    case Family::USp: return {w(1, 1), Rational(4) * n * n, Rational(2 * n + 1, 2 * n)};
    case Family::GrR: return {w(1, 2), Rational((n - 1) * (n + 2), 2), 2};
    case Family::GrC: return {w(1, 1), Rational(n * n - 1), 2};
    case Family::GrH: return {w(2, 1), Rational((n - 1) * (2 * n + 1)), 2};
    case Family::SO2n_Un: return {w(2, 1), Rational(n * (2 * n - 1)), Rational(2 * (n - 1), n)};
    case Family::SUn_SOn:
      return {w(1, 2), Rational(n * (n + 1), 2), Rational(2 * (n - 1) * (n + 2), n * n)};
    case Family::SU2n_USpn:
      return {w(2, 1), Rational(n * (2 * n - 1)), Rational((n - 1) * (2 * n + 1), n * n)};
    case Family::USpn_Un: return {w(1, 2), Rational(n * (2 * n + 1)), Rational(2 * (n + 1), n)};
  }
  fail(Status::Internal, "unhandled family");
}

int cutoff_param(const SpaceDescriptor& d) {
  if (d.family == Family::SO2n_Un || d.family == Family::SU2n_USpn) return 2 * d.n;
  return d.n;
}

double cutoff_time(const SpaceDescriptor& d) {
  return d.alpha_cutoff * std::log(static_cast<double>(cutoff_param(d)));
}

double time_at_eps(const SpaceDescriptor& d, double eps) { return (1.0 + eps) * cutoff_time(d); }

nlohmann::json to_json(const SpaceDescriptor& d) {
  nlohmann::json j;
  j["family"] = family_name(d.family);
  j["n"] = d.n;
  j["q"] = d.q ? nlohmann::json(*d.q) : nlohmann::json(nullptr);
  j["beta"] = d.beta;
  j["alpha_cutoff"] = d.alpha_cutoff;
  j["n0"] = d.n0;
  j["c_lower"] = to_string(d.c_lower);
  j["C_upper"] = to_string(d.C_upper);
  j["gamma_b"] = d.gamma_b;
  j["gamma_a"] = d.gamma_a;
  j["drift_alpha"] = to_string(d.drift_alpha);
  j["is_group"] = d.is_group;
  return j;
}

nlohmann::json to_json(const IndexingSet& s) {
  return {{"kind", kind_name(s.kind)}, {"length", s.length}};
}

nlohmann::json to_json(const Weight& w) { return w.str(); }

}  // namespace cutofflab
