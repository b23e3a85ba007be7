#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace alber::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(eng_); }
  double log_uniform(double a, double b);
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(eng_); }
  double normal(double mean = 0.0, double sd = 1.0) {
    return std::normal_distribution<double>(mean, sd)(eng_);
  }
  bool chance(double p) { return uniform(0.0, 1.0) < p; }
  std::uint64_t bits() { return eng_(); }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// Thrown by require() inside a property case.
struct CaseFailure {
  std::string message;
};

inline void require(bool ok, const std::string& message) {
  if (!ok) throw CaseFailure{message};
}

// Builds a failure message from streamable parts.
template <class... T>
std::string msg(const T&... parts) {
  std::ostringstream os;
  os.precision(17);
  (os << ... << parts);
  return os.str();
}

struct Property {
  std::string module;
  std::string name;
  int cases = 100;
  std::function<void(Rng&)> check;
};

std::vector<Property>& registry();

struct Registrar {
  explicit Registrar(Property p) { registry().push_back(std::move(p)); }
};

struct PropertyOutcome {
  std::string module;
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  double seconds = 0.0;
  bool ok() const { return failures == 0 && cases >= 100; }
};

// Case i uses seed hash(module, name) + i so every property is reproducible
// in isolation.
PropertyOutcome run_property(const Property& p);
std::vector<PropertyOutcome> run_properties(const std::string& module_filter = {});

}  // namespace alber::testing

#define ALBER_PROPERTY_CAT2(a, b) a##b
#define ALBER_PROPERTY_CAT(a, b) ALBER_PROPERTY_CAT2(a, b)
#define ALBER_PROPERTY(module, name, cases)                                                   \
  static void ALBER_PROPERTY_CAT(alber_prop_fn_, __LINE__)(::alber::testing::Rng & rng);      \
  static ::alber::testing::Registrar ALBER_PROPERTY_CAT(alber_prop_reg_, __LINE__)(           \
      ::alber::testing::Property{module, name, cases, &ALBER_PROPERTY_CAT(alber_prop_fn_, __LINE__)}); \
  static void ALBER_PROPERTY_CAT(alber_prop_fn_, __LINE__)([[maybe_unused]] ::alber::testing::Rng & rng)
