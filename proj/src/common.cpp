#include "common.hpp"

#include <cstdlib>
#include <thread>

namespace cutofflab {

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "Ok";
    case Status::UnknownFamily: return "UnknownFamily";
    case Status::InvalidRank: return "InvalidRank";
    case Status::WeightKindMismatch: return "WeightKindMismatch";
    case Status::DegenerateAlphabet: return "DegenerateAlphabet";
    case Status::TailNotControllable: return "TailNotControllable";
    case Status::UnsupportedSpace: return "UnsupportedSpace";
    case Status::TooLarge: return "TooLarge";
    case Status::UnsupportedPattern: return "UnsupportedPattern";
    case Status::UnsupportedStatistic: return "UnsupportedStatistic";
    case Status::FieldMismatch: return "FieldMismatch";
    case Status::HalfPartitionUnsupported: return "HalfPartitionUnsupported";
    case Status::InvalidArgument: return "InvalidArgument";
    case Status::Internal: return "Internal";
  }
  return "Internal";
}

void fail(Status status, const std::string& message) { throw Error(status, message); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

long double to_long_double(const Rational& r) { return r.convert_to<long double>(); }

std::string to_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) fail(Status::InvalidArgument, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Status::InvalidArgument, "not a rational number: '" + text + "'");
  }
}

namespace {
template <typename T>
T pairwise(const T* data, size_t count) {
  if (count == 0) return T(0);
  if (count <= 8) {
    T acc = 0;
    for (size_t i = 0; i < count; ++i) acc += data[i];
    return acc;
  }
  size_t half = count / 2;
  return pairwise(data, half) + pairwise(data + half, count - half);
}
}  // namespace

double pairwise_sum(const std::vector<double>& values) {
  return pairwise(values.data(), values.size());
}

long double pairwise_sum(const std::vector<long double>& values) {
  return pairwise(values.data(), values.size());
}

int default_thread_count() {
  if (const char* env = std::getenv("CUTOFFLAB_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace cutofflab
