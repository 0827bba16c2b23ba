#include "pfptopo/preference.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pfp {

namespace {

double weight_of(double k, const PreferenceScheme& scheme) {
  switch (scheme.kind) {
    case PreferenceKind::Linear: return k;
    case PreferenceKind::PositiveFeedback:
      return std::pow(k, 1.0 + scheme.param * std::log(k));
    case PreferenceKind::Exponential: return std::pow(k, scheme.param);
  }
  throw std::logic_error("preference: unknown scheme");
}

std::string short_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

}  // namespace

PreferenceScheme PreferenceScheme::positive_feedback(double delta) {
  if (delta < 0)
    throw std::invalid_argument("preference: delta must be >= 0, got " +
                                short_double(delta));
  return {PreferenceKind::PositiveFeedback, delta};
}

PreferenceScheme PreferenceScheme::exponential(double lambda) {
  if (lambda < 1)
    throw std::invalid_argument("preference: lambda must be >= 1, got " +
                                short_double(lambda));
  return {PreferenceKind::Exponential, lambda};
}

double preference_weight(int degree, const PreferenceScheme& scheme) {
  if (degree < 1)
    throw std::invalid_argument(
        "preference: weight undefined for degree " + std::to_string(degree));
  return weight_of(degree, scheme);
}

double preference_ratio(int degree, double mu,
                        const PreferenceScheme& scheme) {
  if (degree < 1)
    throw std::invalid_argument(
        "preference: ratio undefined for degree " + std::to_string(degree));
  if (mu < 1)
    throw std::invalid_argument("preference: mu must be >= 1, got " +
                                short_double(mu));
  return weight_of(mu * degree, scheme) / weight_of(degree, scheme);
}

std::string to_string(const PreferenceScheme& scheme) {
  switch (scheme.kind) {
    case PreferenceKind::Linear: return "linear";
    case PreferenceKind::PositiveFeedback:
      return "positive_feedback(delta=" + short_double(scheme.param) + ")";
    case PreferenceKind::Exponential:
      return "exponential(lambda=" + short_double(scheme.param) + ")";
  }
  return "?";
}

}  // namespace pfp
