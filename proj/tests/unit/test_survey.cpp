#include <cmath>
#include <random>

#include <doctest.h>

#include "misinfo/error.hpp"
#include "misinfo/survey.hpp"

using misinfo::Factor;
using misinfo::Survey;
using misinfo::SurveyOption;
using misinfo::SurveyQuestion;

namespace {

// The two-question worked example for the tau parameter.
SurveyQuestion question_one() {
  return SurveyQuestion(0.4, {{0.1, 0.05}, {0.2, 0.2}, {0.5, 0.13}, {0.7, 0.12}, {0.9, 0.5}});
}
SurveyQuestion question_two() {
  return SurveyQuestion(0.6, {{0.1, 0.3}, {0.3, 0.15}, {0.7, 0.15}, {0.9, 0.4}});
}
Survey worked_example() { return Survey(Factor::kFlowKnowledge, {question_one(), question_two()}); }

void check_all_close(const std::vector<double>& got, const std::vector<double>& want) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-9);
}

}  // namespace

TEST_CASE("scale thresholds") {
  check_all_close(misinfo::scale_thresholds(question_one()), {0.04, 0.08, 0.2, 0.28, 0.36});
  check_all_close(misinfo::scale_thresholds(question_two()), {0.06, 0.18, 0.42, 0.54});
  const SurveyQuestion unit(1.0, {{0.25, 0.5}, {0.75, 0.5}});
  CHECK(misinfo::scale_thresholds(unit) == std::vector<double>{0.25, 0.75});
}

TEST_CASE("question fraction") {
  CHECK(std::abs(misinfo::question_fraction(question_one(), 0.06) - 0.125) < 1e-9);
  CHECK(std::abs(misinfo::question_fraction(question_two(), 0.09) - 0.2625) < 1e-9);
  CHECK(misinfo::question_fraction(question_one(), 0.01) == 0.0);
  CHECK(misinfo::question_fraction(question_one(), 0.5) == 1.0);
  SUBCASE("exact knots return the knot fraction") {
    const SurveyQuestion q(1.0, {{0.25, 0.2}, {0.5, 0.3}, {0.75, 0.5}});
    CHECK(misinfo::question_fraction(q, 0.25) == 0.2);
    CHECK(misinfo::question_fraction(q, 0.5) == 0.3);
    CHECK(misinfo::question_fraction(q, 0.75) == 0.5);
  }
}

TEST_CASE("options are sorted jointly") {
  const SurveyQuestion shuffled(0.4, {{0.7, 0.12}, {0.1, 0.05}, {0.9, 0.5}, {0.5, 0.13}, {0.2, 0.2}});
  CHECK(shuffled == question_one());
}

TEST_CASE("population fraction") {
  CHECK(std::abs(misinfo::population_fraction(worked_example(), 0.15) - 0.19375) < 1e-9);
  CHECK(misinfo::population_fraction(worked_example(), 0.0) == 0.0);
  const Survey single(Factor::kTargeting, {SurveyQuestion(1.0, {{0.2, 0.4}, {0.6, 0.6}})});
  CHECK(misinfo::population_fraction(single, 0.4) ==
        misinfo::question_fraction(single.questions()[0], 0.4));
}

TEST_CASE("distribution curve") {
  const auto ends = misinfo::distribution_curve(worked_example(), 2);
  REQUIRE(ends.size() == 2);
  CHECK(ends[0].first == 0.0);
  CHECK(ends[1].first == 1.0);
  CHECK(ends[0].second == misinfo::population_fraction(worked_example(), 0.0));
  CHECK(ends[1].second == misinfo::population_fraction(worked_example(), 1.0));

  const auto curve = misinfo::distribution_curve(worked_example(), 21);
  CHECK(curve[3].first == 0.15);
  CHECK(std::abs(curve[3].second - 0.19375) < 1e-9);
  // Largest unscaled threshold is 0.9; beyond it every question is in its upper branch.
  for (const auto& [tau, fraction] : curve) {
    if (tau > 0.9) CHECK(fraction == 1.0);
  }
  CHECK_THROWS_AS(misinfo::distribution_curve(worked_example(), 1), misinfo::ValidationError);
}

TEST_CASE("invalid questions and surveys") {
  CHECK_THROWS_AS(SurveyQuestion(0.5, {{0.1, 1.0}}), misinfo::ValidationError);
  CHECK_THROWS_AS(SurveyQuestion(0.0, {{0.1, 0.5}, {0.2, 0.5}}), misinfo::ValidationError);
  CHECK_THROWS_AS(SurveyQuestion(0.5, {{0.1, 0.5}, {0.1, 0.5}}), misinfo::ValidationError);
  CHECK_THROWS_AS(SurveyQuestion(0.5, {{0.1, 0.5}, {0.2, 0.4}}), misinfo::ValidationError);
  CHECK_THROWS_AS(SurveyQuestion(0.5, {{-0.1, 0.5}, {0.2, 0.5}}), misinfo::ValidationError);
  CHECK_THROWS_AS(Survey(Factor::kCompetence, {question_one()}), misinfo::ValidationError);
  CHECK_THROWS_AS(Survey(Factor::kCompetence, {}), misinfo::ValidationError);
}

TEST_CASE("output stays in the unit interval") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> count(2, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = count(rng);
    std::vector<SurveyOption> opts;
    double sum = 0.0;
    for (int r = 0; r < m; ++r) {
      opts.push_back({(r + u(rng)) / m, u(rng)});
      sum += opts.back().fraction;
    }
    for (auto& o : opts) o.fraction /= sum;
    const SurveyQuestion q(u(rng) * 0.9 + 0.1, opts);
    for (int k = 0; k <= 50; ++k) {
      const double p = misinfo::question_fraction(q, k / 50.0);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
    }
  }
}

TEST_CASE("question weight cancels") {
  const std::vector<SurveyOption> opts = {{0.1, 0.05}, {0.2, 0.2}, {0.5, 0.13}, {0.7, 0.12}, {0.9, 0.5}};
  for (double tau = 0.0; tau <= 1.0; tau += 0.01) {
    const double ref = misinfo::question_fraction(SurveyQuestion(1.0, opts), tau);
    for (double w : {0.1, 0.5}) {
      CHECK(std::abs(misinfo::question_fraction(SurveyQuestion(w, opts), w * tau) - ref) < 1e-9);
    }
  }
}

TEST_CASE("json round trip and errors") {
  const auto s = worked_example();
  CHECK(misinfo::parse_survey(misinfo::survey_to_json(s)) == s);
  CHECK(misinfo::load_survey_file(MISINFO_TEST_DATA_DIR "/paper_tau_survey.json") == s);

  CHECK_THROWS_AS(misinfo::parse_survey("{"), misinfo::ParseError);
  CHECK_THROWS_AS(misinfo::parse_survey(R"({"parameter":"zeta","questions":[]})"),
                  misinfo::ValidationError);
  CHECK_THROWS_AS(misinfo::parse_survey(R"({"parameter":"f"})"), misinfo::ValidationError);
  CHECK_THROWS_AS(
      misinfo::parse_survey(R"({"parameter":"f","questions":[{"weight":1,"options":[{"value":0.1}]}]})"),
      misinfo::ValidationError);
  CHECK_THROWS_AS(misinfo::load_survey_file("/nonexistent.json"), misinfo::IoError);
}
