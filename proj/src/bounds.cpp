#include "copsrobbers/bounds.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace copsrobbers {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

Rational operator+(Rational a, Rational b) { return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_}; }
Rational operator-(Rational a, Rational b) { return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_}; }
Rational operator*(Rational a, Rational b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
Rational operator/(Rational a, Rational b) { return {a.num_ * b.den_, a.den_ * b.num_}; }
bool operator<(Rational a, Rational b) { return a.num_ * b.den_ < b.num_ * a.den_; }

int ceil_log2(std::int64_t x) {
  if (x < 1) throw PreconditionError("logarithm of a non-positive value");
  int k = 0;
  while ((std::int64_t{1} << k) < x) ++k;
  return k;
}

int ceil_log2_ratio(std::int64_t d, std::int64_t rho) {
  if (d < 1 || rho < 1) throw PreconditionError("log(d/rho) needs d >= 1 and rho >= 1");
  int k = 0;
  while ((rho << k) < d) ++k;
  return k;
}

int guard_radius(int girth) { return (girth + 1) / 4; }

namespace {

std::int64_t need(const std::optional<std::int64_t>& v, const char* what, const std::string& name) {
  if (!v) throw PreconditionError(name + " needs parameter " + what);
  if (*v < 1) throw PreconditionError(std::string("parameter ") + what + " must be positive");
  return *v;
}

void fill_counts(BoundReport& r) {
  if (!r.params.n) return;
  const auto n = static_cast<long double>(*r.params.n);
  const long double base = std::pow(n, static_cast<long double>(r.exponent_value));
  const long double log_n = std::log2(n);
  r.count = static_cast<std::int64_t>(std::ceil(base - 1e-9L));
  r.slack_count = static_cast<std::int64_t>(std::ceil(base * log_n * log_n - 1e-9L));
}

BoundReport exponent_bound(const std::string& name, const BoundParams& params, Rational t) {
  BoundReport r{name, params, t, t.value(), true, std::nullopt, std::nullopt};
  fill_counts(r);
  return r;
}

void require_log_at_least_one(int k, const std::string& name) {
  if (k < 1) throw PreconditionError(name + ": the rounded-up logarithm is below 1, the formula is undefined");
}

}  // namespace

BoundReport evaluate(const std::string& name, const BoundParams& params) {
  if (name == "thm1") {
    const auto n = need(params.n, "n", name);
    if (n < 2) throw PreconditionError("thm1 needs n >= 2");
    const double log_n = std::log2(static_cast<double>(n));
    BoundReport r{name, params, std::nullopt, 1.0 - std::sqrt(log_n) / log_n, true, std::nullopt, std::nullopt};
    fill_counts(r);
    return r;
  }
  if (name == "cor2") {
    const int k = ceil_log2(need(params.d, "d", name));
    require_log_at_least_one(k, name);
    return exponent_bound(name, params, Rational(1) - Rational(1, k + 1));
  }
  if (name == "thm5") return exponent_bound(name, params, Rational(3, 5));
  if (name == "thm6") return exponent_bound(name, params, Rational(4, 7));
  if (name == "thm7") {
    const int k = ceil_log2(need(params.d, "d", name));
    require_log_at_least_one(k, name);
    return exponent_bound(name, params, Rational(1) - Rational(2, 2 * k + 1));
  }
  if (name == "thm9") {
    const auto d = need(params.d, "d", name);
    std::int64_t rho = 0;
    BoundParams filled = params;
    if (params.rho) {
      rho = need(params.rho, "rho", name);
    } else {
      rho = guard_radius(static_cast<int>(need(params.g, "g or rho", name)));
      if (rho < 1) throw PreconditionError("thm9: girth below 3 gives rho = 0");
      filled.rho = rho;
    }
    const int k = ceil_log2_ratio(d, rho);
    require_log_at_least_one(k, name);
    return exponent_bound(name, filled, Rational(1) - Rational(2, 2 * k + 1));
  }
  if (name == "thm11") {
    const auto n = need(params.n, "n", name);
    BoundReport r{name, params, Rational(1, 2), 0.5, false, std::nullopt, std::nullopt};
    // floor(sqrt(2n)) by integer square root
    std::int64_t s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(2 * n)));
    while (s * s > 2 * n) --s;
    while ((s + 1) * (s + 1) <= 2 * n) ++s;
    r.count = s;
    r.slack_count = s;
    return r;
  }
  throw PreconditionError("unknown bound '" + name + "' (expected thm1, cor2, thm5, thm6, thm7, thm9, thm11)");
}

Json to_json(const BoundReport& r) {
  Json j;
  j["name"] = r.name;
  Json p = Json::object();
  if (r.params.n) p["n"] = *r.params.n;
  if (r.params.d) p["d"] = *r.params.d;
  if (r.params.g) p["g"] = *r.params.g;
  if (r.params.rho) p["rho"] = *r.params.rho;
  j["params"] = p;
  j["exponent"] = r.exponent ? Json(r.exponent->str()) : Json(nullptr);
  j["exponent_value"] = r.exponent_value;
  j["o1"] = r.o1;
  j["count"] = r.count ? Json(*r.count) : Json(nullptr);
  j["slack_count"] = r.slack_count ? Json(*r.slack_count) : Json(nullptr);
  return j;
}

std::string to_text(const BoundReport& r) {
  std::ostringstream out;
  out << r.name << ": t=";
  if (r.exponent) {
    out << r.exponent->str() << " (" << r.exponent_value << ")";
  } else {
    out << r.exponent_value;
  }
  if (r.o1) out << " + o(1)";
  if (r.count) out << "  count=" << *r.count;
  if (r.slack_count) out << "  with log^2 n slack=" << *r.slack_count;
  return out.str();
}

Rational gamma_schedule(Rational alpha, int i) {
  if (i < 0) throw PreconditionError("negative densification index");
  if (i > 62) throw PreconditionError("densification index too large for exact arithmetic");
  const std::int64_t pow2 = std::int64_t{1} << i;
  return (Rational(1) - Rational(2) * alpha) * Rational(pow2 - 1, pow2);
}

bool diameter4_conditions(Rational alpha, Rational gamma) {
  return gamma == Rational(1) - Rational(2) * alpha && Rational(2) * alpha - gamma <= Rational(1) - alpha;
}

bool diameter3_conditions(Rational alpha, Rational gamma) {
  return gamma == Rational(1) - Rational(2) * alpha &&
         Rational(2) * alpha - Rational(2) * gamma <= Rational(1) - alpha;
}

Rational general_alpha_limit(int k) {
  if (k < 0) throw PreconditionError("negative escalation depth");
  return {2, 2 * k + 3};
}

}  // namespace copsrobbers
