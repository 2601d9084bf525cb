#include "misinfo/sociopsych.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "misinfo/error.hpp"

namespace misinfo {

Factor factor_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFactorCount; ++i) {
    if (kFactorNames[i] == name) return static_cast<Factor>(i);
  }
  throw ValidationError("parameter", "unknown socio-psychological parameter '" +
                                         std::string(name) + "'");
}

std::string_view factor_name(Factor f) noexcept { return kFactorNames[static_cast<std::size_t>(f)]; }

SocioPsychProfile SocioPsychProfile::from_array(const std::array<double, kFactorCount>& a) noexcept {
  return {a[0], a[1], a[2], a[3], a[4], a[5], a[6]};
}

SocioPsychProfile SocioPsychProfile::uniform(double value) noexcept {
  return {value, value, value, value, value, value, value};
}

double& SocioPsychProfile::operator[](Factor which) noexcept {
  switch (which) {
    case Factor::kVariability: return f;
    case Factor::kTargeting: return p;
    case Factor::kVulnerability: return phi;
    case Factor::kFlowKnowledge: return tau;
    case Factor::kCompetence: return k;
    case Factor::kRepresentationForm: return s;
    case Factor::kInformationAmount: break;
  }
  return v;
}

double SocioPsychProfile::operator[](Factor which) const noexcept {
  return const_cast<SocioPsychProfile&>(*this)[which];
}

void SocioPsychProfile::validate() const {
  const auto values = as_array();
  for (std::size_t i = 0; i < kFactorCount; ++i) {
    if (!(values[i] >= 0.0 && values[i] <= 1.0)) {
      throw ValidationError("profile." + std::string(kFactorNames[i]),
                            "must lie in [0,1], got " + std::to_string(values[i]));
    }
  }
}

FactorWeights FactorWeights::from_array(const std::array<double, kFactorCount>& a) noexcept {
  return {a[0], a[1], a[2], a[3], a[4], a[5], a[6]};
}

FactorWeights FactorWeights::equal() noexcept {
  std::array<double, kFactorCount> a;
  a.fill(1.0 / static_cast<double>(kFactorCount));
  return from_array(a);
}

FactorWeights FactorWeights::one_hot(Factor f) noexcept {
  FactorWeights w;
  w[f] = 1.0;
  return w;
}

double& FactorWeights::operator[](Factor which) noexcept {
  switch (which) {
    case Factor::kVariability: return v_f;
    case Factor::kTargeting: return v_p;
    case Factor::kVulnerability: return v_phi;
    case Factor::kFlowKnowledge: return v_tau;
    case Factor::kCompetence: return v_k;
    case Factor::kRepresentationForm: return v_s;
    case Factor::kInformationAmount: break;
  }
  return v_v;
}

double FactorWeights::operator[](Factor which) const noexcept {
  return const_cast<FactorWeights&>(*this)[which];
}

void FactorWeights::validate() const {
  const auto values = as_array();
  double sum = 0.0;
  for (std::size_t i = 0; i < kFactorCount; ++i) {
    if (!(values[i] >= 0.0) || !std::isfinite(values[i])) {
      throw ValidationError("weights." + std::string(kFactorNames[i]),
                            "must be a finite non-negative number, got " +
                                std::to_string(values[i]));
    }
    sum += values[i];
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw ValidationError("weights", "must sum to 1, got " + std::to_string(sum));
  }
}

double integral_coefficient(const FactorWeights& weights, const SocioPsychProfile& profile) {
  weights.validate();
  profile.validate();
  const auto w = weights.as_array();
  const auto x = profile.as_array();
  double b = 0.0;
  for (std::size_t i = 0; i < kFactorCount; ++i) b += w[i] * x[i];
  // A convex combination can overshoot [0,1] only by the 1e-9 weight-sum slack
  // plus rounding.
  return std::clamp(b, 0.0, 1.0);
}

}  // namespace misinfo
