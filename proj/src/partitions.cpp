#include "partitions.hpp"

#include <algorithm>
#include <sstream>

namespace cutofflab {

const char* kind_name(WeightKind kind) {
  switch (kind) {
    case WeightKind::Y: return "Y";
    case WeightKind::halfY: return "halfY";
    case WeightKind::Z: return "Z";
    case WeightKind::evenY: return "evenY";
    case WeightKind::doubledY: return "doubledY";
    case WeightKind::evenOrOddY: return "evenOrOddY";
    case WeightKind::signedLastPart: return "signedLastPart";
  }
  return "Y";
}

WeightKind parse_kind(const std::string& name) {
  for (auto k : {WeightKind::Y, WeightKind::halfY, WeightKind::Z, WeightKind::evenY,
                 WeightKind::doubledY, WeightKind::evenOrOddY, WeightKind::signedLastPart}) {
    if (name == kind_name(k)) return k;
  }
  fail(Status::InvalidArgument, "unknown weight kind '" + name + "'");
}

bool Weight::is_half() const {
  return std::any_of(parts2.begin(), parts2.end(), [](int v) { return v % 2 != 0; });
}

bool Weight::is_zero() const {
  return std::all_of(parts2.begin(), parts2.end(), [](int v) { return v == 0; });
}

int Weight::size2() const {
  int s = 0;
  for (size_t i = 0; i < parts2.size(); ++i) {
    bool negate = (i + 1 == parts2.size()) && last_sign == LastSign::minus;
    s += negate ? -parts2[i] : parts2[i];
  }
  return s;
}

Rational Weight::size() const { return Rational(size2(), 2); }

Rational Weight::part(int i) const {
  int v = parts2.at(static_cast<size_t>(i));
  if (i + 1 == length() && last_sign == LastSign::minus) v = -v;
  return Rational(v, 2);
}

std::string Weight::str() const {
  std::ostringstream out;
  for (int i = 0; i < length(); ++i) {
    if (i) out << ',';
    out << to_string(part(i));
  }
  return out.str();
}

bool Weight::operator==(const Weight& other) const {
  if (parts2 != other.parts2) return false;
  bool neg_a = last_sign == LastSign::minus;
  bool neg_b = other.last_sign == LastSign::minus;
  return neg_a == neg_b;
}

namespace {

LastSign sign_for(const std::vector<int>& parts2, bool negative) {
  if (parts2.empty() || parts2.back() == 0) return LastSign::zero;
  return negative ? LastSign::minus : LastSign::plus;
}

}  // namespace

Weight make_weight2(const std::vector<int>& parts2, WeightKind kind, LastSign sign) {
  Weight w;
  w.parts2 = parts2;
  w.kind = kind;
  if (!parts2.empty() && parts2.back() == 0) sign = LastSign::zero;
  if (sign == LastSign::zero && !parts2.empty() && parts2.back() != 0) sign = LastSign::plus;
  w.last_sign = sign;
  return w;
}

Weight make_weight(const std::vector<int>& parts, WeightKind kind) {
  std::vector<int> p2;
  p2.reserve(parts.size());
  bool negative = false;
  for (size_t i = 0; i < parts.size(); ++i) {
    int v = parts[i];
    if (v < 0 && kind != WeightKind::Z) {
      if (i + 1 == parts.size() && kind == WeightKind::signedLastPart) {
        negative = true;
        v = -v;
      } else {
        fail(Status::WeightKindMismatch, "negative part in a partition label");
      }
    }
    p2.push_back(2 * v);
  }
  return make_weight2(p2, kind, sign_for(p2, negative));
}

Weight zero_weight(const IndexingSet& set) {
  return make_weight2(std::vector<int>(static_cast<size_t>(set.length), 0), set.kind,
                      LastSign::zero);
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '(' && c != ')') {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

Weight parse_impl(const std::string& text, WeightKind kind, int pad_to) {
  std::vector<int> p2;
  bool negative = false;
  auto tokens = split(text, ',');
  for (size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    if (tok.empty()) fail(Status::InvalidArgument, "empty part in weight '" + text + "'");
    Rational v = parse_rational(tok);
    Rational doubled = v * 2;
    if (boost::multiprecision::denominator(doubled) != 1)
      fail(Status::WeightKindMismatch, "parts must be integers or half-integers");
    int d = static_cast<int>(boost::multiprecision::numerator(doubled));
    if (d < 0 && kind != WeightKind::Z) {
      if (kind == WeightKind::signedLastPart && i + 1 == tokens.size()) {
        negative = true;
        d = -d;
      } else {
        fail(Status::WeightKindMismatch, "negative part in weight '" + text + "'");
      }
    }
    p2.push_back(d);
  }
  if (pad_to > 0) {
    if (static_cast<int>(p2.size()) > pad_to) {
      for (size_t i = static_cast<size_t>(pad_to); i < p2.size(); ++i)
        if (p2[i] != 0)
          fail(Status::WeightKindMismatch, "weight '" + text + "' is longer than the label length");
      p2.resize(static_cast<size_t>(pad_to));
    }
    if (negative && static_cast<int>(p2.size()) < pad_to)
      fail(Status::WeightKindMismatch, "a signed part must be the last coordinate");
    // Padding with zeros is only meaningful for non-negative sequences.
    while (static_cast<int>(p2.size()) < pad_to) p2.push_back(0);
  }
  return make_weight2(p2, kind, sign_for(p2, negative));
}

}  // namespace

Weight parse_weight(const std::string& text, const IndexingSet& set) {
  Weight w = parse_impl(text, set.kind, set.length);
  require_member(w, set);
  return w;
}

Weight parse_weight(const std::string& text, WeightKind kind) {
  return parse_impl(text, kind, 0);
}

bool belongs(const Weight& w, const IndexingSet& set) {
  if (w.length() != set.length) return false;
  const auto& p = w.parts2;
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[i - 1]) return false;
  if (w.last_sign == LastSign::minus && set.kind != WeightKind::signedLastPart) return false;
  bool half = w.is_half();
  switch (set.kind) {
    case WeightKind::Y:
      return !half && std::all_of(p.begin(), p.end(), [](int v) { return v >= 0; });
    case WeightKind::Z:
      return !half;
    case WeightKind::halfY:
    case WeightKind::signedLastPart:
      for (int v : p)
        if (v < 0 || (v % 2 != 0) != half) return false;
      return true;
    case WeightKind::evenY:
      return std::all_of(p.begin(), p.end(), [](int v) { return v >= 0 && v % 4 == 0; });
    case WeightKind::doubledY: {
      if (half) return false;
      size_t i = 0;
      while (i < p.size()) {
        if (p[i] < 0) return false;
        if (p[i] == 0) {
          ++i;
          continue;
        }
        if (i + 1 >= p.size() || p[i + 1] != p[i]) return false;
        i += 2;
      }
      return true;
    }
    case WeightKind::evenOrOddY: {
      if (half || p.empty()) return !half;
      int parity = (p[0] / 2) % 2;
      for (int v : p)
        if (v < 0 || (v / 2) % 2 != parity) return false;
      return true;
    }
  }
  return false;
}

void require_member(const Weight& w, const IndexingSet& set) {
  if (!belongs(w, set))
    fail(Status::WeightKindMismatch, "weight (" + w.str() + ") is not in the " +
                                         std::string(kind_name(set.kind)) + " set of length " +
                                         std::to_string(set.length));
}

namespace {

// Partitions of `size` into at most `max_parts` parts, each <= max_part,
// visited in reverse lexicographic order.
void partitions_exact(int size, int max_parts, int max_part, std::vector<int>& cur,
                      const std::function<void(const std::vector<int>&)>& visit) {
  if (size == 0) {
    visit(cur);
    return;
  }
  if (max_parts == 0) return;
  int hi = std::min(size, max_part);
  int lo = (size + max_parts - 1) / max_parts;
  for (int first = hi; first >= lo; --first) {
    cur.push_back(first);
    partitions_exact(size - first, max_parts - 1, first, cur, visit);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions_of(int size, int max_parts) {
  std::vector<std::vector<int>> out;
  if (size < 0 || max_parts < 0) return out;
  std::vector<int> cur;
  partitions_exact(size, max_parts, size, cur,
                   [&](const std::vector<int>& p) { out.push_back(p); });
  return out;
}

std::vector<int> padded(const std::vector<int>& p, int length) {
  std::vector<int> out(p);
  out.resize(static_cast<size_t>(length), 0);
  return out;
}

// All doubled-part vectors of a given doubled size for the set.
std::vector<std::vector<int>> level(const IndexingSet& set, int size2, bool include_half) {
  const int L = set.length;
  std::vector<std::vector<int>> out;
  auto add_integer_class = [&](int true_size, int multiplier, bool doubled_rows) {
    int parts_cap = doubled_rows ? L / 2 : L;
    for (const auto& mu : partitions_of(true_size, parts_cap)) {
      std::vector<int> lam;
      for (int v : mu) {
        lam.push_back(2 * multiplier * v);
        if (doubled_rows) lam.push_back(2 * multiplier * v);
      }
      out.push_back(padded(lam, L));
    }
  };
  switch (set.kind) {
    case WeightKind::Y:
      if (size2 % 2 == 0) add_integer_class(size2 / 2, 1, false);
      break;
    case WeightKind::evenY:
      if (size2 % 4 == 0) add_integer_class(size2 / 4, 2, false);
      break;
    case WeightKind::doubledY:
      if (size2 % 4 == 0) add_integer_class(size2 / 4, 1, true);
      break;
    case WeightKind::evenOrOddY:
      if (size2 % 4 == 0) add_integer_class(size2 / 4, 2, false);
      if (size2 % 2 == 0 && size2 / 2 >= L && (size2 / 2 - L) % 2 == 0) {
        for (const auto& mu : partitions_of((size2 / 2 - L) / 2, L)) {
          std::vector<int> lam = padded(mu, L);
          for (int& v : lam) v = 2 * (2 * v + 1);
          out.push_back(lam);
        }
      }
      break;
    case WeightKind::halfY:
    case WeightKind::signedLastPart:
      if (size2 % 2 == 0) add_integer_class(size2 / 2, 1, false);
      if (include_half && size2 >= L && (size2 - L) % 2 == 0) {
        for (const auto& mu : partitions_of((size2 - L) / 2, L)) {
          std::vector<int> lam = padded(mu, L);
          for (int& v : lam) v = 2 * v + 1;
          out.push_back(lam);
        }
      }
      break;
    case WeightKind::Z:
      fail(Status::InvalidArgument, "unbounded Z sequences cannot be enumerated");
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

void enumerate_by_size(const IndexingSet& set, int max_size,
                       const std::function<bool(const Weight&)>& visit, bool include_half) {
  if (max_size < 0) return;
  if (set.length <= 0) fail(Status::InvalidArgument, "indexing set length must be positive");
  for (int s2 = 0; s2 <= 2 * max_size; ++s2) {
    for (const auto& p2 : level(set, s2, include_half)) {
      Weight w = make_weight2(p2, set.kind, LastSign::plus);
      if (!visit(w)) return;
    }
  }
}

void enumerate_shells(const IndexingSet& set, int min_size2, int max_size2,
                      const std::function<bool(int, const std::vector<Weight>&)>& visit,
                      bool include_half) {
  if (set.length <= 0) fail(Status::InvalidArgument, "indexing set length must be positive");
  for (int s2 = std::max(0, min_size2); s2 <= max_size2; ++s2) {
    std::vector<Weight> shell;
    for (const auto& p2 : level(set, s2, include_half))
      shell.push_back(make_weight2(p2, set.kind, LastSign::plus));
    if (!visit(s2, shell)) return;
  }
}

std::vector<Weight> enumerate_weights(const IndexingSet& set, int max_size, bool include_half) {
  std::vector<Weight> out;
  enumerate_by_size(
      set, max_size,
      [&](const Weight& w) {
        out.push_back(w);
        return true;
      },
      include_half);
  return out;
}

long long count_partitions(int size, int max_parts) {
  // p(size, parts <= max_parts) by the standard recurrence over the largest part count.
  std::vector<std::vector<long long>> table(static_cast<size_t>(size + 1),
                                            std::vector<long long>(static_cast<size_t>(max_parts + 1), 0));
  for (int k = 0; k <= max_parts; ++k) table[0][static_cast<size_t>(k)] = 1;
  for (int s = 1; s <= size; ++s) {
    for (int k = 1; k <= max_parts; ++k) {
      long long v = table[static_cast<size_t>(s)][static_cast<size_t>(k - 1)];
      if (s >= k) v += table[static_cast<size_t>(s - k)][static_cast<size_t>(k)];
      table[static_cast<size_t>(s)][static_cast<size_t>(k)] = v;
    }
  }
  return max_parts == 0 ? (size == 0 ? 1 : 0) : table[static_cast<size_t>(size)][static_cast<size_t>(max_parts)];
}

std::vector<GrowthStep> growth_path(const Weight& w) {
  if (w.is_half()) fail(Status::HalfPartitionUnsupported, "growth paths need integer weights");
  if (w.last_sign == LastSign::minus)
    fail(Status::InvalidArgument, "growth paths need a non-negative last part");
  const int L = w.length();
  std::vector<int> target(static_cast<size_t>(L));
  for (int i = 0; i < L; ++i) target[static_cast<size_t>(i)] = w.parts2[static_cast<size_t>(i)] / 2;
  std::vector<GrowthStep> steps;
  std::vector<int> cur(static_cast<size_t>(L), 0);
  int top = L > 0 ? target[0] : 0;
  for (int v = 1; v <= top; ++v) {
    int l = 0;
    while (l < L && target[static_cast<size_t>(l)] >= v) ++l;
    int below = l < L ? target[static_cast<size_t>(l)] : 0;
    std::vector<int> signed_cur(cur);
    steps.push_back(GrowthStep{l, v - below, make_weight(signed_cur, w.kind)});
    for (int i = 0; i < l; ++i) cur[static_cast<size_t>(i)] = v;
  }
  return steps;
}

Weight apply_step(const GrowthStep& step) {
  const Weight& base = step.base;
  const int L = base.length();
  if (step.l < 1 || step.l > L || step.k < 1)
    fail(Status::InvalidArgument, "growth step needs 1 <= l <= length and k >= 1");
  if (base.is_half()) fail(Status::HalfPartitionUnsupported, "growth steps need integer weights");
  std::vector<int> p(static_cast<size_t>(L));
  for (int i = 0; i < L; ++i) p[static_cast<size_t>(i)] = base.parts2[static_cast<size_t>(i)] / 2;
  int below = step.l < L ? p[static_cast<size_t>(step.l)] : 0;
  for (int i = 0; i < step.l; ++i) {
    if (p[static_cast<size_t>(i)] != below + step.k - 1)
      fail(Status::InvalidArgument, "base rows 1..l must all equal row l+1 plus k-1");
    p[static_cast<size_t>(i)] = below + step.k;
  }
  return make_weight(p, base.kind);
}

}  // namespace cutofflab
