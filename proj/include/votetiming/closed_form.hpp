#pragma once

#include "votetiming/game.hpp"

#include <optional>

namespace votetiming {

enum class DecisionTag { Vote, Abstain, Indifferent };

// Cost-threshold decision at a turn-2 set: Vote strictly below the
// threshold, Abstain strictly above, Indifferent at the threshold exactly.
// An unreachable set carries Indifferent with no threshold.
struct ThresholdDecision {
  DecisionTag tag = DecisionTag::Indifferent;
  std::optional<Rational> threshold;
};

// Decision at tally <0,0> after waiting. Threshold 1 + q2 / (2(q1 - 1));
// unreachable when q1 = 1.
ThresholdDecision decision_at_00(const GameParams& params);

// Decision at tally <0,1> after waiting. Depends on the opponent's own-lead
// vote probability and on p1; unreachable when (2 - 3 q1) p1 + q1 = 0.
ThresholdDecision decision_at_01(const GameParams& params, const Rational& p1,
                                 const Rational& p2_10);

// Decision at tally <1,0> after waiting; indifference at cost = p2_01.
// Unreachable when q1 = 0.
ThresholdDecision decision_at_10(const GameParams& params, const Rational& p2_01);

// The two dominance-pinned fields: voting always wins at <1,1>; voting at
// <0,2> is futile for any positive cost.
struct ForcedDecisions {
  Rational p2_11;
  ThresholdDecision at_02;
};
ForcedDecisions forced_decisions(const GameParams& params);

// Expected utility of voting in turn 1 / of waiting, as closed forms over
// the profile. Both are equal, for every input, to the corresponding tree
// deviation values (tree_value_vote_early / tree_value_wait); the equality
// is enforced by the test suite.
Rational u_early(const GameParams& params, const StrategyProfile& profile);
Rational u_wait(const GameParams& params, const StrategyProfile& profile);

// u_early - u_wait as a single polynomial (an algebraic identity, tested
// rather than assumed).
Rational u_diff(const GameParams& params, const StrategyProfile& profile);

// p1 solving u_diff = 0 for the given turn-2 fields. nullopt when the
// linear coefficient vanishes (no interior indifference point).
std::optional<Rational> p1_indifference(const GameParams& params, const Rational& p2_00,
                                        const Rational& p2_01, const Rational& p2_10);

// p2_10 that places the <0,1>-set threshold exactly at the voting cost.
// nullopt when (p1 - 1) q1 = 0.
std::optional<Rational> p2_10_indifference(const GameParams& params, const Rational& p1);

// p1 of the mixed-timing construction (p2_01 = cost, p2_10 from
// p2_10_indifference), parameterized by p2_00. nullopt when cost = 0 or the
// denominator vanishes.
std::optional<Rational> mixed_timing_p1(const GameParams& params, const Rational& p2_00);

}  // namespace votetiming
