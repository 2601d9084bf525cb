#include "misinfo/survey.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "misinfo/error.hpp"

namespace misinfo {

namespace {

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

SurveyQuestion::SurveyQuestion(double weight, std::vector<SurveyOption> options)
    : weight_(weight), options_(std::move(options)) {
  if (!(weight_ > 0.0 && weight_ <= 1.0)) {
    throw ValidationError("questions.weight", "must lie in (0,1], got " + std::to_string(weight_));
  }
  if (options_.size() < 2) {
    throw ValidationError("questions.options", "a question needs at least two options");
  }
  double fraction_sum = 0.0;
  for (const auto& opt : options_) {
    if (!in_unit_interval(opt.value)) {
      throw ValidationError("options.value", "must lie in [0,1], got " + std::to_string(opt.value));
    }
    if (!in_unit_interval(opt.fraction)) {
      throw ValidationError("options.fraction",
                            "must lie in [0,1], got " + std::to_string(opt.fraction));
    }
    fraction_sum += opt.fraction;
  }
  if (std::abs(fraction_sum - 1.0) > kFractionSumTolerance) {
    throw ValidationError("options.fraction", "fractions must sum to 1, got " +
                                                  std::to_string(fraction_sum));
  }
  std::stable_sort(options_.begin(), options_.end(),
                   [](const SurveyOption& a, const SurveyOption& b) { return a.value < b.value; });
  for (std::size_t r = 1; r < options_.size(); ++r) {
    if (!(options_[r - 1].value < options_[r].value)) {
      throw ValidationError("options.value",
                            "duplicate option value " + std::to_string(options_[r].value));
    }
  }
}

Survey::Survey(Factor parameter, std::vector<SurveyQuestion> questions)
    : parameter_(parameter), questions_(std::move(questions)) {
  if (questions_.empty()) throw ValidationError("questions", "a survey needs at least one question");
  double weight_sum = 0.0;
  for (const auto& q : questions_) weight_sum += q.weight();
  if (std::abs(weight_sum - 1.0) > kWeightSumTolerance) {
    throw ValidationError("questions.weight", "question weights must sum to 1, got " +
                                                  std::to_string(weight_sum));
  }
}

std::vector<double> scale_thresholds(const SurveyQuestion& q) {
  std::vector<double> scaled;
  scaled.reserve(q.options().size());
  for (const auto& opt : q.options()) scaled.push_back(q.weight() * opt.value);
  return scaled;
}

double question_fraction(const SurveyQuestion& q, double tau_star) {
  const auto t = scale_thresholds(q);
  const auto& opts = q.options();
  if (std::isnan(tau_star)) throw ValidationError("tau", "must be a number");
  if (tau_star < t.front()) return 0.0;
  if (tau_star > t.back()) return 1.0;

  // First knot >= tau_star; exists because tau_star <= t.back().
  const auto it = std::lower_bound(t.begin(), t.end(), tau_star);
  const auto b_idx = static_cast<std::size_t>(it - t.begin());
  if (*it == tau_star) return opts[b_idx].fraction;

  const std::size_t a_idx = b_idx - 1;
  const double slope = (opts[a_idx].fraction - opts[b_idx].fraction) / (t[a_idx] - t[b_idx]);
  const double intercept = opts[b_idx].fraction - slope * t[b_idx];
  return slope * tau_star + intercept;
}

double population_fraction(const Survey& s, double tau) {
  double sum = 0.0;
  for (const auto& q : s.questions()) sum += question_fraction(q, q.weight() * tau);
  return sum / static_cast<double>(s.questions().size());
}

std::vector<std::pair<double, double>> distribution_curve(const Survey& s, int grid_points) {
  if (grid_points < 2) {
    throw ValidationError("grid", "need at least 2 grid points, got " + std::to_string(grid_points));
  }
  std::vector<std::pair<double, double>> curve;
  curve.reserve(static_cast<std::size_t>(grid_points));
  const double denom = static_cast<double>(grid_points - 1);
  for (int i = 0; i < grid_points; ++i) {
    const double tau = static_cast<double>(i) / denom;
    curve.emplace_back(tau, population_fraction(s, tau));
  }
  return curve;
}

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ValidationError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(where + "." + key, "missing field");
  return *it;
}

double require_number(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number()) throw ValidationError(where + "." + key, "expected a number");
  return v.get<double>();
}

}  // namespace

Survey parse_survey(std::string_view json_text, std::string_view source_name) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(source_name), std::nullopt, e.what());
  }
  const json& param = require(doc, "parameter", "survey");
  if (!param.is_string()) throw ValidationError("survey.parameter", "expected a string");
  const Factor factor = factor_from_name(param.get<std::string>());

  const json& qs = require(doc, "questions", "survey");
  if (!qs.is_array()) throw ValidationError("survey.questions", "expected an array");
  std::vector<SurveyQuestion> questions;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const std::string where = "questions[" + std::to_string(i) + "]";
    const double weight = require_number(qs[i], "weight", where);
    const json& opts = require(qs[i], "options", where);
    if (!opts.is_array()) throw ValidationError(where + ".options", "expected an array");
    std::vector<SurveyOption> options;
    for (std::size_t r = 0; r < opts.size(); ++r) {
      const std::string owhere = where + ".options[" + std::to_string(r) + "]";
      options.push_back({require_number(opts[r], "value", owhere),
                         require_number(opts[r], "fraction", owhere)});
    }
    questions.emplace_back(weight, std::move(options));
  }
  return Survey(factor, std::move(questions));
}

Survey load_survey_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string(), "cannot open survey file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_survey(buf.str(), path.string());
}

std::string survey_to_json(const Survey& s) {
  json doc;
  doc["parameter"] = std::string(factor_name(s.parameter()));
  doc["questions"] = json::array();
  for (const auto& q : s.questions()) {
    json jq;
    jq["weight"] = q.weight();
    jq["options"] = json::array();
    for (const auto& o : q.options()) jq["options"].push_back({{"value", o.value}, {"fraction", o.fraction}});
    doc["questions"].push_back(std::move(jq));
  }
  return doc.dump(2) + "\n";
}

}  // namespace misinfo
