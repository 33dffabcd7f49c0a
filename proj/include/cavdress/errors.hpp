#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cavdress {

/* Configuration problems. Carries one message per offending key so a CLI
   user sees every mistake at once instead of fixing them one by one. */
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(std::vector<std::string> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const { return issues_; }

private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "invalid configuration:";
    for (const auto& m : v) s += "\n  " + m;
    return s;
  }
  std::vector<std::string> issues_;
};

// Adaptive quadrature could not reach the requested relative tolerance.
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(double requested, double achieved)
      : std::runtime_error("quadrature did not converge: requested rel tol " +
                           std::to_string(requested) + ", achieved " +
                           std::to_string(achieved)),
        requested_(requested),
        achieved_(achieved) {}

  double requested() const { return requested_; }
  double achieved() const { return achieved_; }

private:
  double requested_;
  double achieved_;
};

// Truncated Fock basis would exceed the dense-solver budget.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A built-in identity check (sum rule / conservation) failed at an output boundary.
class IdentityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace cavdress
