#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace misinfo {

/// The seven socio-psychological factors, in canonical order.
enum class Factor : std::size_t {
  kVariability = 0,        // f
  kTargeting,              // p
  kVulnerability,          // phi
  kFlowKnowledge,          // tau
  kCompetence,             // k
  kRepresentationForm,     // s
  kInformationAmount,      // v
};

inline constexpr std::size_t kFactorCount = 7;

/// Short names used in files: f, p, phi, tau, k, s, v.
inline constexpr std::array<std::string_view, kFactorCount> kFactorNames = {
    "f", "p", "phi", "tau", "k", "s", "v"};

/// Throws ValidationError for an unrecognised name.
Factor factor_from_name(std::string_view name);
std::string_view factor_name(Factor f) noexcept;

/// Per-node susceptibility parameters, each in [0,1].
struct SocioPsychProfile {
  double f = 0.0;
  double p = 0.0;
  double phi = 0.0;
  double tau = 0.0;
  double k = 0.0;
  double s = 0.0;
  double v = 0.0;

  std::array<double, kFactorCount> as_array() const noexcept { return {f, p, phi, tau, k, s, v}; }
  static SocioPsychProfile from_array(const std::array<double, kFactorCount>& a) noexcept;
  static SocioPsychProfile uniform(double value) noexcept;

  double& operator[](Factor f) noexcept;
  double operator[](Factor f) const noexcept;

  /// Throws ValidationError naming the first parameter outside [0,1].
  void validate() const;

  friend bool operator==(const SocioPsychProfile&, const SocioPsychProfile&) = default;
};

/// Non-negative factor weights summing to one.
struct FactorWeights {
  double v_f = 0.0;
  double v_p = 0.0;
  double v_phi = 0.0;
  double v_tau = 0.0;
  double v_k = 0.0;
  double v_s = 0.0;
  double v_v = 0.0;

  static constexpr double kSumTolerance = 1e-9;

  std::array<double, kFactorCount> as_array() const noexcept {
    return {v_f, v_p, v_phi, v_tau, v_k, v_s, v_v};
  }
  static FactorWeights from_array(const std::array<double, kFactorCount>& a) noexcept;
  static FactorWeights equal() noexcept;
  static FactorWeights one_hot(Factor f) noexcept;

  double& operator[](Factor f) noexcept;
  double operator[](Factor f) const noexcept;

  /// Throws ValidationError on a negative weight or |sum - 1| > 1e-9.
  void validate() const;

  friend bool operator==(const FactorWeights&, const FactorWeights&) = default;
};

/// Integral susceptibility coefficient B: the weighted sum of the profile's
/// parameters. Validates both arguments; the result lies in [0,1].
double integral_coefficient(const FactorWeights& weights, const SocioPsychProfile& profile);

}  // namespace misinfo
