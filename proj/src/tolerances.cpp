#include "petrov/tolerances.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace petrov {

Tolerances Tolerances::from_env() {
  Tolerances tol;
  if (const char* env = std::getenv("PETROV_TOL")) {
    double value = 0.0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0.0) tol.identity = value;
  }
  return tol;
}

}  // namespace petrov
