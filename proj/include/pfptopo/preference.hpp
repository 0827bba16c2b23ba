#pragma once

#include <string>

namespace pfp {

enum class PreferenceKind { Linear, PositiveFeedback, Exponential };

// Attachment weight as a function of degree k >= 1:
//   linear             w(k) = k
//   positive_feedback  w(k) = k^(1 + delta * ln k)   (natural log)
//   exponential        w(k) = k^lambda
// delta = 0 and lambda = 1 both reduce to the linear scheme.
struct PreferenceScheme {
  PreferenceKind kind = PreferenceKind::Linear;
  double param = 0.0;  // delta or lambda, unused for linear

  static PreferenceScheme linear() { return {PreferenceKind::Linear, 0.0}; }
  static PreferenceScheme positive_feedback(double delta);
  static PreferenceScheme exponential(double lambda);

  bool operator==(const PreferenceScheme&) const = default;
};

double preference_weight(int degree, const PreferenceScheme& scheme);

// w(mu * k) / w(k) for real multiplier mu >= 1. For positive feedback this
// equals mu^(1 + delta * ln(mu * k)) * k^(delta * ln mu).
double preference_ratio(int degree, double mu, const PreferenceScheme& scheme);

std::string to_string(const PreferenceScheme& scheme);

}  // namespace pfp
