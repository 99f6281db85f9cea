#pragma once

#include "votetiming/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace votetiming {

// Exogenous parameters of the two-period referendum. The probability that
// the swing voter never shows up is always derived, never stored.
struct GameParams {
  Rational cost;  // voting cost for partisan voters, in [0, 1)
  Rational q1;    // swing-voter arrival probability in turn 1
  Rational q2;    // swing-voter arrival probability in turn 2

  Rational q_none() const;
  void validate() const;  // throws std::invalid_argument
};

// Public vote counts <for, against>. At most three ballots exist.
struct Tally {
  int for_votes = 0;
  int against_votes = 0;

  Tally swapped() const { return {against_votes, for_votes}; }
  bool operator==(const Tally&) const = default;
  std::string str() const;  // "<f,a>"
};

enum class VoterType { InFavor, Against, Uninformed };
enum class InformedAction { Vote, Wait, Abstain };

// Symmetric strategy for the partisan voters. p1 is the probability of
// voting in turn 1; each p2 field is the probability of voting in turn 2
// after waiting, indexed by the observed tally from the voter's own
// perspective (the Against voter reads the tally with components swapped).
//
// p2_11 and p2_02 are kept in the profile even though one action dominates
// at those tallies, so the evaluator is total over arbitrary profiles.
struct StrategyProfile {
  Rational p1;
  Rational p2_00;
  Rational p2_10;
  Rational p2_01;
  Rational p2_11 = Rational(1);  // voting there wins outright
  Rational p2_02 = Rational(0);  // voting there is futile

  const Rational& p2_at(const Tally& observed) const;  // throws if no action at tally
  void validate() const;
  bool operator==(const StrategyProfile&) const = default;
};

enum class Arrival { Early, Late, Never };
enum class EarlyCoin { ForF, ForA, NotApplicable };
enum class UninformedVote { None, ForF, ForA };
enum class Outcome { FWins, AWins };

// One leaf of the extensive form, with every chance move (including tie
// coins) materialized as an explicit branch.
struct TerminalPath {
  Arrival arrival = Arrival::Never;
  EarlyCoin early_coin = EarlyCoin::NotApplicable;
  bool f_voted_early = false;
  bool f_voted_late = false;
  bool a_voted_early = false;
  bool a_voted_late = false;
  UninformedVote uninformed_vote = UninformedVote::None;
  Tally final_tally;
  Outcome outcome = Outcome::FWins;
  Rational probability;
  Rational utility;  // for the InFavor voter

  bool f_voted() const { return f_voted_early || f_voted_late; }
  bool a_voted() const { return a_voted_early || a_voted_late; }
  std::string key() const;  // stable path identifier
};

// Information set of the InFavor voter. The turn-1 set is the unique root
// set (nothing observed yet); a turn-2 set presupposes the voter waited and
// is identified by the tally seen at the start of turn 2.
struct InfoSetId {
  int turn = 1;
  Tally tally;

  static InfoSetId turn_one() { return {1, Tally{0, 0}}; }
  static InfoSetId waited(const Tally& t);
  bool operator==(const InfoSetId&) const = default;
  std::string name() const;  // "turn1", "waited_00", ...
};

// The five tallies at which a voter who waited still has a move.
extern const std::array<Tally, 5> kActionableTallies;
int actionable_slot(const Tally& t);  // 0..4, or -1
const std::array<InfoSetId, 6>& all_info_sets();

// The swing voter's vote distribution given the interim tally it observes:
// deterministic support for the leader, a fair coin on ties.
struct VoteSplit {
  Rational for_f;
  Rational for_a;
};
VoteSplit bandwagon_vote(const Tally& interim);

// Winner distribution once the ballot closes.
struct OutcomeSplit {
  Rational f_wins;
  Rational a_wins;
};
OutcomeSplit final_outcome(const Tally& final_tally);

std::vector<TerminalPath> enumerate_outcomes(const StrategyProfile& profile,
                                             const GameParams& params);

// Ex-ante expected utility of the given voter type under the profile.
Rational evaluate_profile(const StrategyProfile& profile, const GameParams& params);
Rational evaluate_profile_as(VoterType type, const StrategyProfile& profile,
                             const GameParams& params);

// Value of the one-shot deviations at the root: vote in turn 1 with
// certainty, or wait and then follow the profile. Opponent and chance follow
// the profile in both cases.
Rational tree_value_vote_early(const StrategyProfile& profile, const GameParams& params);
Rational tree_value_wait(const StrategyProfile& profile, const GameParams& params);

// Conditional sums for all five waited sets, from a single tree walk.
// Weights come from chance and the opponent only; the voter's own turn-2
// mixing is excluded (the walk branches over both of their actions).
struct WaitConditionals {
  struct Row {
    Rational reach;        // P(tally | voter waited)
    Rational vote_sum;     // sum over states of P(state) * E[u | state, Vote]
    Rational abstain_sum;  // likewise for Abstain
  };
  std::array<Row, 5> rows;  // indexed by actionable_slot
};
WaitConditionals wait_conditionals(const StrategyProfile& profile, const GameParams& params);

// Conditional expected utility of playing `action` at `set`, weighting the
// set's states by their Bayes posterior. nullopt = the set has zero reach
// probability. Throws std::invalid_argument if the action is illegal there.
std::optional<Rational> evaluate_conditional(const StrategyProfile& profile,
                                             const GameParams& params, const InfoSetId& set,
                                             InformedAction action);

// One playout drawn from a deterministic stream seeded by `seed`.
TerminalPath sample_playout(const StrategyProfile& profile, const GameParams& params,
                            std::uint64_t seed);

}  // namespace votetiming
