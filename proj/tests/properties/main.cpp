#include <cstdio>
#include <string>

#include "../support/property.hpp"

using namespace alber::testing;

// Usage: property_tests [module] [name substring]
int main(int argc, char** argv) {
  const std::string module = argc > 1 ? argv[1] : "";
  const std::string name = argc > 2 ? argv[2] : "";
  int failed = 0;
  int ran = 0;
  for (const auto& p : registry()) {
    if (!module.empty() && p.module != module) continue;
    if (!name.empty() && p.name.find(name) == std::string::npos) continue;
    const PropertyOutcome o = run_property(p);
    ++ran;
    std::printf("%s %s / %s: %d cases, %d failed, %.1f s\n", o.ok() ? "ok  " : "FAIL",
                o.module.c_str(), o.name.c_str(), o.cases, o.failures, o.seconds);
    if (!o.ok()) {
      std::printf("     %s\n", o.first_failure.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  std::printf("%d of %d properties passed\n", ran - failed, ran);
  return failed == 0 && ran > 0 ? 0 : 1;
}
