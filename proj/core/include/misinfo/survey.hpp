#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "misinfo/sociopsych.hpp"

namespace misinfo {

/// One answer option of a survey question: the parameter value it encodes
/// and the fraction of respondents who chose it.
struct SurveyOption {
  double value = 0.0;
  double fraction = 0.0;

  friend bool operator==(const SurveyOption&, const SurveyOption&) = default;
};

/// A validated survey question. Options are kept sorted by value (the
/// fraction travels with its value), values are strictly increasing.
class SurveyQuestion {
 public:
  static constexpr double kFractionSumTolerance = 1e-6;

  /// Sorts the options and validates: weight in (0,1], at least two options,
  /// values and fractions in [0,1], distinct values, fractions summing to 1.
  /// Throws ValidationError.
  SurveyQuestion(double weight, std::vector<SurveyOption> options);

  double weight() const noexcept { return weight_; }
  const std::vector<SurveyOption>& options() const noexcept { return options_; }

  friend bool operator==(const SurveyQuestion&, const SurveyQuestion&) = default;

 private:
  double weight_;
  std::vector<SurveyOption> options_;
};

/// All questions contributing to one socio-psychological parameter.
class Survey {
 public:
  static constexpr double kWeightSumTolerance = 1e-9;

  /// Throws ValidationError when there are no questions or the question
  /// weights do not sum to 1.
  Survey(Factor parameter, std::vector<SurveyQuestion> questions);

  Factor parameter() const noexcept { return parameter_; }
  const std::vector<SurveyQuestion>& questions() const noexcept { return questions_; }

  friend bool operator==(const Survey&, const Survey&) = default;

 private:
  Factor parameter_;
  std::vector<SurveyQuestion> questions_;
};

/// The question's option values multiplied by its weight, ascending.
std::vector<double> scale_thresholds(const SurveyQuestion& q);

/// Piecewise-linear fraction of respondents at the scaled value `tau_star`:
/// 0 below the smallest scaled threshold, 1 above the largest, the knot's
/// fraction on a knot, and the straight line through the two bracketing
/// knots otherwise.
double question_fraction(const SurveyQuestion& q, double tau_star);

/// Mean over questions of question_fraction(q_i, w_i * tau).
double population_fraction(const Survey& s, double tau);

/// population_fraction sampled at `grid_points` evenly spaced values of tau
/// covering [0,1] including both ends. Throws ValidationError when
/// grid_points < 2.
std::vector<std::pair<double, double>> distribution_curve(const Survey& s, int grid_points);

/// Survey JSON:
/// {"parameter": "tau", "questions": [{"weight": 0.4,
///   "options": [{"value": 0.1, "fraction": 0.05}, ...]}, ...]}
Survey parse_survey(std::string_view json_text, std::string_view source_name = "<survey>");
Survey load_survey_file(const std::filesystem::path& path);
std::string survey_to_json(const Survey& s);

}  // namespace misinfo
