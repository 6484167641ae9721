#pragma once

#include "common.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cutofflab {

enum class WeightKind { Y, halfY, Z, evenY, doubledY, evenOrOddY, signedLastPart };
enum class LastSign { plus, minus, zero };

const char* kind_name(WeightKind kind);
WeightKind parse_kind(const std::string& name);

struct IndexingSet {
  WeightKind kind;
  int length;
};

// Parts are stored doubled so that half-integers are odd entries and all
// arithmetic stays in integers.
struct Weight {
  std::vector<int> parts2;
  LastSign last_sign = LastSign::zero;
  WeightKind kind = WeightKind::Y;

  int length() const { return static_cast<int>(parts2.size()); }
  bool is_half() const;
  bool is_zero() const;
  int size2() const;
  Rational size() const;
  Rational part(int i) const;  // signed true value of part i (0-based)
  std::string str() const;

  bool operator==(const Weight& other) const;
  bool operator!=(const Weight& other) const { return !(*this == other); }
};

// Builds a weight from signed true integer parts; a negative last part sets
// the minus sign for signedLastPart weights.
Weight make_weight(const std::vector<int>& parts, WeightKind kind);
Weight make_weight2(const std::vector<int>& parts2, WeightKind kind, LastSign sign);
Weight zero_weight(const IndexingSet& set);

// Parses "2,1,0", "1/2,1/2" or "1,1,-1"; pads with zeros up to the set length
// and rejects weights outside the set.
Weight parse_weight(const std::string& text, const IndexingSet& set);
Weight parse_weight(const std::string& text, WeightKind kind = WeightKind::Y);

// True when the weight satisfies every constraint of the indexing set.
bool belongs(const Weight& w, const IndexingSet& set);
void require_member(const Weight& w, const IndexingSet& set);

// Streams every weight of the set with |w| <= max_size, grouped by
// increasing size and in reverse lexicographic order within a size. For
// halfY and signedLastPart the half class is included unless disabled; the
// signedLastPart stream only yields non-negative last parts. Returning false
// from the visitor stops the stream.
void enumerate_by_size(const IndexingSet& set, int max_size,
                       const std::function<bool(const Weight&)>& visit,
                       bool include_half = true);
// Visits whole shells of fixed doubled size in [min_size2, max_size2];
// returning false stops after the current shell.
void enumerate_shells(const IndexingSet& set, int min_size2, int max_size2,
                      const std::function<bool(int, const std::vector<Weight>&)>& visit,
                      bool include_half = true);
std::vector<Weight> enumerate_weights(const IndexingSet& set, int max_size,
                                      bool include_half = true);

// Brute-force counting oracle helpers.
long long count_partitions(int size, int max_parts);

struct GrowthStep {
  int l;  // number of rows raised (1-based row count)
  int k;  // new value of the raised rows minus the value of row l+1
  Weight base;
};

std::vector<GrowthStep> growth_path(const Weight& w);
Weight apply_step(const GrowthStep& step);

}  // namespace cutofflab
