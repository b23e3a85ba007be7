#include "property.hpp"

#include <chrono>
#include <cmath>
#include <exception>

namespace alber::testing {

double Rng::log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }

std::vector<Property>& registry() {
  static std::vector<Property> r;
  return r;
}

namespace {

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

PropertyOutcome run_property(const Property& p) {
  PropertyOutcome out{p.module, p.name, 0, 0, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t base = name_hash(p.module + "/" + p.name);
  for (int i = 0; i < p.cases; ++i) {
    Rng rng(base + static_cast<std::uint64_t>(i));
    std::string failure;
    try {
      p.check(rng);
    } catch (const CaseFailure& f) {
      failure = f.message;
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++out.cases;
    if (!failure.empty()) {
      if (out.failures == 0) out.first_failure = "case " + std::to_string(i) + ": " + failure;
      ++out.failures;
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<PropertyOutcome> run_properties(const std::string& module_filter) {
  std::vector<PropertyOutcome> out;
  for (const auto& p : registry()) {
    if (!module_filter.empty() && p.module != module_filter) continue;
    out.push_back(run_property(p));
  }
  return out;
}

}  // namespace alber::testing
