#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "copsrobbers/game.hpp"

namespace copsrobbers {

// Exact fraction in lowest terms with a positive denominator.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  friend bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator<(Rational a, Rational b);
  friend bool operator<=(Rational a, Rational b) { return a < b || a == b; }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

// Smallest k with 2^k >= x, for x >= 1 (logarithms are base 2 throughout).
int ceil_log2(std::int64_t x);
// Smallest k with 2^k * rho >= d: the ceiling of log(d / rho).
int ceil_log2_ratio(std::int64_t d, std::int64_t rho);
// Protected radius for girth g: floor((g + 1) / 4).
int guard_radius(int girth);

struct BoundParams {
  std::optional<std::int64_t> n = std::nullopt;
  std::optional<std::int64_t> d = std::nullopt;
  std::optional<std::int64_t> g = std::nullopt;
  std::optional<std::int64_t> rho = std::nullopt;
};

struct BoundReport {
  std::string name;
  BoundParams params;
  // Exact exponent t in c <= n^{t + o(1)} where the bound has that form.
  std::optional<Rational> exponent;
  double exponent_value = 0;
  bool o1 = false;  // the bound carries an unquantified o(1) term
  std::optional<std::int64_t> count;        // ceil(n^t), or the exact bound
  std::optional<std::int64_t> slack_count;  // ceil(n^t log^2 n)
};

// Names: thm1, cor2, thm5, thm6, thm7, thm9, thm11. Throws PreconditionError
// for an unknown name, a missing or non-positive parameter, or when the
// logarithm in the formula rounds up to less than 1.
BoundReport evaluate(const std::string& name, const BoundParams& params);

Json to_json(const BoundReport& r);
std::string to_text(const BoundReport& r);

// gamma_i = (1 - 2 alpha) * sum_{j=1..i} 2^-j.
Rational gamma_schedule(Rational alpha, int i);
// gamma = 1 - 2 alpha and 2 alpha - gamma <= 1 - alpha (diameter 4).
bool diameter4_conditions(Rational alpha, Rational gamma);
// gamma = 1 - 2 alpha and 2 alpha - 2 gamma <= 1 - alpha (diameter 3).
bool diameter3_conditions(Rational alpha, Rational gamma);
// Supremum 2 / (2k + 3) of admissible alpha at escalation depth k.
Rational general_alpha_limit(int k);

}  // namespace copsrobbers
