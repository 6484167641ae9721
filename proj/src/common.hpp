#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutofflab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using cplx = std::complex<double>;

enum class Status {
  Ok = 0,
  UnknownFamily,
  InvalidRank,
  WeightKindMismatch,
  DegenerateAlphabet,
  TailNotControllable,
  UnsupportedSpace,
  TooLarge,
  UnsupportedPattern,
  UnsupportedStatistic,
  FieldMismatch,
  HalfPartitionUnsupported,
  InvalidArgument,
  Internal,
};

const char* status_name(Status s);

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

[[noreturn]] void fail(Status status, const std::string& message);

double to_double(const Rational& r);
long double to_long_double(const Rational& r);
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

// Fixed-order pairwise summation; the result depends only on the order of
// the input, never on how the values were produced.
double pairwise_sum(const std::vector<double>& values);
long double pairwise_sum(const std::vector<long double>& values);

int default_thread_count();

}  // namespace cutofflab
