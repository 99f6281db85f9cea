#include "votetiming/closed_form.hpp"

namespace votetiming {

namespace {

ThresholdDecision against_threshold(const GameParams& params, const Rational& threshold) {
  if (params.cost < threshold) return {DecisionTag::Vote, threshold};
  if (params.cost > threshold) return {DecisionTag::Abstain, threshold};
  return {DecisionTag::Indifferent, threshold};
}

}  // namespace

ThresholdDecision decision_at_00(const GameParams& params) {
  params.validate();
  if (params.q1 == 1) return {DecisionTag::Indifferent, std::nullopt};
  Rational threshold = 1 + params.q2 / (2 * (params.q1 - 1));
  return against_threshold(params, threshold);
}

ThresholdDecision decision_at_01(const GameParams& params, const Rational& p1,
                                 const Rational& p2_10) {
  params.validate();
  Rational denom = (2 - 3 * params.q1) * p1 + params.q1;
  if (denom <= 0) return {DecisionTag::Indifferent, std::nullopt};
  Rational threshold =
      1 + ((p2_10 * params.q1 - 2 * params.q2) * p1 - p2_10 * params.q1) / denom;
  return against_threshold(params, threshold);
}

ThresholdDecision decision_at_10(const GameParams& params, const Rational& p2_01) {
  params.validate();
  if (params.q1 == 0) return {DecisionTag::Indifferent, std::nullopt};
  return against_threshold(params, p2_01);
}

ForcedDecisions forced_decisions(const GameParams& params) {
  params.validate();
  ThresholdDecision at_02{params.cost > 0 ? DecisionTag::Abstain : DecisionTag::Indifferent,
                          Rational(0)};
  return {Rational(1), at_02};
}

Rational u_early(const GameParams& params, const StrategyProfile& prof) {
  Rational value = (1 - prof.p1) *
                       (1 - params.q1 - (1 - params.q1 - params.q2) * prof.p2_01) -
                   params.cost;
  return value;
}

Rational u_wait(const GameParams& params, const StrategyProfile& prof) {
  const Rational& c = params.cost;
  const Rational& q1 = params.q1;
  const Rational& q2 = params.q2;
  Rational inner = (c - 2) * prof.p1 * (1 - prof.p2_01) +
                   c * ((prof.p1 - 1) * (2 * prof.p2_00 - prof.p2_10 - prof.p2_01) -
                        prof.p1 * prof.p2_01);
  Rational value = (prof.p1 - 1) * c * prof.p2_00 -
                   prof.p1 * (1 + (c - 1 + q2) * prof.p2_01) - q1 / 2 * inner;
  return value;
}

Rational u_diff(const GameParams& params, const StrategyProfile& prof) {
  const Rational& c = params.cost;
  const Rational& q1 = params.q1;
  const Rational& q2 = params.q2;
  Rational half = frac(1, 2);
  Rational term1 =
      (prof.p2_00 - 1 + (half * (prof.p2_01 + prof.p2_10) - prof.p2_00) * q1) * c;
  Rational term2 = ((3 * prof.p2_01 + prof.p2_10 - 2 * prof.p2_00 - 1) * q1 * half +
                    (prof.p2_00 - prof.p2_01)) *
                   c * prof.p1;
  Rational term3 = 1 - q1 - (1 - q1 - q2) * prof.p2_01;
  Rational value = term1 - term2 + term3;
  return value;
}

std::optional<Rational> p1_indifference(const GameParams& params, const Rational& p2_00,
                                        const Rational& p2_01, const Rational& p2_10) {
  const Rational& c = params.cost;
  const Rational& q1 = params.q1;
  const Rational& q2 = params.q2;
  Rational half = frac(1, 2);
  Rational denom = (half * (3 * p2_01 + p2_10 - 2 * p2_00 - 1) * q1 - p2_01 + p2_00) * c;
  if (denom == 0) return std::nullopt;
  Rational num = (p2_00 * (q1 - 1) - half * (p2_01 + p2_10) * q1 + 1) * c +
                 p2_01 * (1 - q1 - q2) + q1 - 1;
  Rational value = -num / denom;
  return value;
}

std::optional<Rational> p2_10_indifference(const GameParams& params, const Rational& p1) {
  Rational denom = (p1 - 1) * params.q1;
  if (denom == 0) return std::nullopt;
  Rational num = 2 * p1 * params.q2 -
                 (params.cost - 1) * ((3 * params.q1 - 2) * p1 - params.q1);
  Rational value = num / denom;
  return value;
}

std::optional<Rational> mixed_timing_p1(const GameParams& params, const Rational& p2_00) {
  if (params.cost == 0) return std::nullopt;
  Rational denom = 2 * params.cost * ((1 - params.q1) * p2_00 + params.q1 + params.q2 - 1);
  if (denom == 0) return std::nullopt;
  Rational num = 2 + (params.cost - 2) * params.q1 - 2 * params.cost;
  Rational value = 1 + num / denom;
  return value;
}

}  // namespace votetiming
