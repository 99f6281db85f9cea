#include "votetiming/game.hpp"

#include <random>
#include <stdexcept>

namespace votetiming {

Rational GameParams::q_none() const {
  Rational r = 1 - q1 - q2;
  return r;
}

void GameParams::validate() const {
  if (cost < 0 || cost >= 1) throw std::invalid_argument("cost must be in [0, 1)");
  if (q1 < 0 || q2 < 0) throw std::invalid_argument("arrival probabilities must be non-negative");
  if (q1 + q2 > 1) throw std::invalid_argument("q1 + q2 must not exceed 1");
}

std::string Tally::str() const {
  return "<" + std::to_string(for_votes) + "," + std::to_string(against_votes) + ">";
}

const std::array<Tally, 5> kActionableTallies = {
    Tally{0, 0}, Tally{1, 0}, Tally{0, 1}, Tally{1, 1}, Tally{0, 2}};

int actionable_slot(const Tally& t) {
  for (int i = 0; i < 5; ++i) {
    if (kActionableTallies[static_cast<size_t>(i)] == t) return i;
  }
  return -1;
}

const Rational& StrategyProfile::p2_at(const Tally& observed) const {
  switch (actionable_slot(observed)) {
    case 0: return p2_00;
    case 1: return p2_10;
    case 2: return p2_01;
    case 3: return p2_11;
    case 4: return p2_02;
    default: throw std::invalid_argument("no turn-2 action at tally " + observed.str());
  }
}

void StrategyProfile::validate() const {
  for (const Rational* p : {&p1, &p2_00, &p2_10, &p2_01, &p2_11, &p2_02}) {
    if (!in_unit_interval(*p)) throw std::invalid_argument("strategy field outside [0,1]");
  }
}

InfoSetId InfoSetId::waited(const Tally& t) {
  if (actionable_slot(t) < 0)
    throw std::invalid_argument("no actionable waited set at tally " + t.str());
  return {2, t};
}

std::string InfoSetId::name() const {
  if (turn == 1) return "turn1";
  return "waited_" + std::to_string(tally.for_votes) + std::to_string(tally.against_votes);
}

const std::array<InfoSetId, 6>& all_info_sets() {
  static const std::array<InfoSetId, 6> sets = {
      InfoSetId::turn_one(),          InfoSetId::waited(Tally{0, 0}),
      InfoSetId::waited(Tally{1, 0}), InfoSetId::waited(Tally{0, 1}),
      InfoSetId::waited(Tally{1, 1}), InfoSetId::waited(Tally{0, 2})};
  return sets;
}

namespace {

int outcome_sign(const Tally& final_tally) {
  if (final_tally.for_votes > final_tally.against_votes) return 1;
  if (final_tally.for_votes < final_tally.against_votes) return -1;
  return 0;
}

struct BoolBranch {
  bool value;
  Rational prob;
};

int bool_branches(const Rational& p_true, BoolBranch out[2]) {
  int n = 0;
  if (p_true != 0) out[n++] = {true, p_true};
  Rational p_false = 1 - p_true;
  if (p_false != 0) out[n++] = {false, p_false};
  return n;
}

struct UnfBranch {
  UninformedVote vote;
  Rational prob;
};

// The swing voter arriving in turn 2 supports the interim leader and flips a
// fair coin on a tie.
int bandwagon_branches(const Tally& interim, UnfBranch out[2]) {
  if (interim.for_votes > interim.against_votes) {
    out[0] = {UninformedVote::ForF, Rational(1)};
    return 1;
  }
  if (interim.for_votes < interim.against_votes) {
    out[0] = {UninformedVote::ForA, Rational(1)};
    return 1;
  }
  out[0] = {UninformedVote::ForF, frac(1, 2)};
  out[1] = {UninformedVote::ForA, frac(1, 2)};
  return 2;
}

struct OutcomeBranch {
  Outcome outcome;
  Rational prob;
};

int final_branches(const Tally& final_tally, OutcomeBranch out[2]) {
  int s = outcome_sign(final_tally);
  if (s > 0) {
    out[0] = {Outcome::FWins, Rational(1)};
    return 1;
  }
  if (s < 0) {
    out[0] = {Outcome::AWins, Rational(1)};
    return 1;
  }
  out[0] = {Outcome::FWins, frac(1, 2)};
  out[1] = {Outcome::AWins, frac(1, 2)};
  return 2;
}

struct ArrivalBranch {
  Arrival arrival;
  Rational prob;
};

int arrival_branches(const GameParams& par, ArrivalBranch out[3]) {
  int n = 0;
  if (par.q1 != 0) out[n++] = {Arrival::Early, par.q1};
  if (par.q2 != 0) out[n++] = {Arrival::Late, par.q2};
  Rational qn = par.q_none();
  if (qn != 0) out[n++] = {Arrival::Never, qn};
  return n;
}

struct CoinBranch {
  EarlyCoin coin;
  Rational prob;
};

int coin_branches(Arrival arrival, CoinBranch out[2]) {
  if (arrival != Arrival::Early) {
    out[0] = {EarlyCoin::NotApplicable, Rational(1)};
    return 1;
  }
  out[0] = {EarlyCoin::ForF, frac(1, 2)};
  out[1] = {EarlyCoin::ForA, frac(1, 2)};
  return 2;
}

// Expected value of sign(final tally) for the InFavor voter, given the
// start-of-turn-2 tally and the two players' turn-2 vote probabilities.
// A final tie contributes 0 (the coin is fair), which is exact for values;
// path enumeration materializes the coin separately.
Rational expected_outcome_sign(const Tally& t2, const Rational& f_late,
                               const Rational& a_late, Arrival arrival) {
  Rational sum(0);
  BoolBranch fb[2], ab[2];
  int nf = bool_branches(f_late, fb);
  int na = bool_branches(a_late, ab);
  for (int i = 0; i < nf; ++i) {
    for (int j = 0; j < na; ++j) {
      Tally base{t2.for_votes + (fb[i].value ? 1 : 0),
                 t2.against_votes + (ab[j].value ? 1 : 0)};
      Rational w = fb[i].prob * ab[j].prob;
      if (arrival == Arrival::Late) {
        UnfBranch ub[2];
        int nu = bandwagon_branches(t2, ub);
        for (int k = 0; k < nu; ++k) {
          Tally final_tally = base;
          if (ub[k].vote == UninformedVote::ForF) final_tally.for_votes += 1;
          else final_tally.against_votes += 1;
          Rational term = w * ub[k].prob * outcome_sign(final_tally);
          sum += term;
        }
      } else {
        Rational term = w * outcome_sign(base);
        sum += term;
      }
    }
  }
  return sum;
}

// Enumerates every (arrival, coin, opponent turn-1 move) prefix reachable
// when the InFavor voter waits, and hands the visitor the start-of-turn-2
// tally with the prefix weight (chance and opponent only).
template <typename Visit>
void for_each_waited_prefix(const StrategyProfile& prof, const GameParams& par, Visit&& visit) {
  ArrivalBranch arr[3];
  int na = arrival_branches(par, arr);
  for (int ia = 0; ia < na; ++ia) {
    CoinBranch coins[2];
    int nc = coin_branches(arr[ia].arrival, coins);
    for (int ic = 0; ic < nc; ++ic) {
      BoolBranch aearly[2];
      int ne = bool_branches(prof.p1, aearly);
      for (int ie = 0; ie < ne; ++ie) {
        Tally t2{coins[ic].coin == EarlyCoin::ForF ? 1 : 0,
                 (aearly[ie].value ? 1 : 0) + (coins[ic].coin == EarlyCoin::ForA ? 1 : 0)};
        Rational w = arr[ia].prob * coins[ic].prob;
        w *= aearly[ie].prob;
        visit(arr[ia].arrival, coins[ic].coin, aearly[ie].value, t2, w);
      }
    }
  }
}

}  // namespace

VoteSplit bandwagon_vote(const Tally& interim) {
  UnfBranch b[2];
  int n = bandwagon_branches(interim, b);
  VoteSplit split{Rational(0), Rational(0)};
  for (int i = 0; i < n; ++i) {
    if (b[i].vote == UninformedVote::ForF) split.for_f += b[i].prob;
    else split.for_a += b[i].prob;
  }
  return split;
}

OutcomeSplit final_outcome(const Tally& final_tally) {
  OutcomeBranch b[2];
  int n = final_branches(final_tally, b);
  OutcomeSplit split{Rational(0), Rational(0)};
  for (int i = 0; i < n; ++i) {
    if (b[i].outcome == Outcome::FWins) split.f_wins += b[i].prob;
    else split.a_wins += b[i].prob;
  }
  return split;
}

Rational tree_value_vote_early(const StrategyProfile& prof, const GameParams& par) {
  prof.validate();
  par.validate();
  Rational value(0);
  ArrivalBranch arr[3];
  int na = arrival_branches(par, arr);
  for (int ia = 0; ia < na; ++ia) {
    CoinBranch coins[2];
    int nc = coin_branches(arr[ia].arrival, coins);
    for (int ic = 0; ic < nc; ++ic) {
      BoolBranch aearly[2];
      int ne = bool_branches(prof.p1, aearly);
      for (int ie = 0; ie < ne; ++ie) {
        Tally t2{1 + (coins[ic].coin == EarlyCoin::ForF ? 1 : 0),
                 (aearly[ie].value ? 1 : 0) + (coins[ic].coin == EarlyCoin::ForA ? 1 : 0)};
        Rational a_late =
            aearly[ie].value ? Rational(0) : prof.p2_at(t2.swapped());
        Rational w = arr[ia].prob * coins[ic].prob;
        w *= aearly[ie].prob;
        Rational ev = expected_outcome_sign(t2, Rational(0), a_late, arr[ia].arrival);
        value += w * ev;
      }
    }
  }
  value -= par.cost;
  return value;
}

WaitConditionals wait_conditionals(const StrategyProfile& prof, const GameParams& par) {
  prof.validate();
  par.validate();
  WaitConditionals table;
  for (auto& row : table.rows) {
    row.reach = 0;
    row.vote_sum = 0;
    row.abstain_sum = 0;
  }
  for_each_waited_prefix(prof, par,
                         [&](Arrival arrival, EarlyCoin, bool a_early, const Tally& t2,
                             const Rational& w) {
    int slot = actionable_slot(t2);
    Rational a_late = a_early ? Rational(0) : prof.p2_at(t2.swapped());
    auto& row = table.rows[static_cast<size_t>(slot)];
    row.reach += w;
    Rational vote_val = expected_outcome_sign(t2, Rational(1), a_late, arrival) - par.cost;
    Rational abstain_val = expected_outcome_sign(t2, Rational(0), a_late, arrival);
    row.vote_sum += w * vote_val;
    row.abstain_sum += w * abstain_val;
  });
  return table;
}

Rational tree_value_wait(const StrategyProfile& prof, const GameParams& par) {
  WaitConditionals table = wait_conditionals(prof, par);
  Rational value(0);
  for (int slot = 0; slot < 5; ++slot) {
    const auto& row = table.rows[static_cast<size_t>(slot)];
    if (row.reach == 0) continue;
    const Rational& pv = prof.p2_at(kActionableTallies[static_cast<size_t>(slot)]);
    Rational term = pv * row.vote_sum + (1 - pv) * row.abstain_sum;
    value += term;
  }
  return value;
}

std::optional<Rational> evaluate_conditional(const StrategyProfile& prof,
                                             const GameParams& par, const InfoSetId& set,
                                             InformedAction action) {
  prof.validate();
  par.validate();
  if (set.turn == 1) {
    if (action == InformedAction::Abstain)
      throw std::invalid_argument("Abstain is not available in turn 1");
    if (action == InformedAction::Vote) return tree_value_vote_early(prof, par);
    return tree_value_wait(prof, par);
  }
  if (action == InformedAction::Wait)
    throw std::invalid_argument("Wait is not available in turn 2");
  int slot = actionable_slot(set.tally);
  if (slot < 0) throw std::invalid_argument("no action at set " + set.name());
  WaitConditionals table = wait_conditionals(prof, par);
  const auto& row = table.rows[static_cast<size_t>(slot)];
  if (row.reach == 0) return std::nullopt;
  Rational value = (action == InformedAction::Vote ? row.vote_sum : row.abstain_sum) / row.reach;
  return value;
}

namespace {

std::string unf_label(Arrival a, UninformedVote v) {
  switch (v) {
    case UninformedVote::None: return "none";
    case UninformedVote::ForF: return a == Arrival::Early ? "early_F" : "late_F";
    case UninformedVote::ForA: return a == Arrival::Early ? "early_A" : "late_A";
  }
  return "none";
}

std::string informed_label(bool early, bool late) {
  if (early) return "early";
  if (late) return "late";
  return "abstain";
}

// Full extensive-form walk with the InFavor voter following `f_early` /
// `f_late` (per actionable slot). Tie coins appear as explicit branches.
template <typename Visit>
void walk_full(const StrategyProfile& prof, const GameParams& par, const Rational& f_early,
               const std::array<Rational, 5>& f_late, Visit&& visit) {
  ArrivalBranch arr[3];
  int na = arrival_branches(par, arr);
  for (int ia = 0; ia < na; ++ia) {
    CoinBranch coins[2];
    int nc = coin_branches(arr[ia].arrival, coins);
    for (int ic = 0; ic < nc; ++ic) {
      BoolBranch fearly[2];
      int nfe = bool_branches(f_early, fearly);
      for (int ife = 0; ife < nfe; ++ife) {
        BoolBranch aearly[2];
        int nae = bool_branches(prof.p1, aearly);
        for (int iae = 0; iae < nae; ++iae) {
          Tally t2{(fearly[ife].value ? 1 : 0) + (coins[ic].coin == EarlyCoin::ForF ? 1 : 0),
                   (aearly[iae].value ? 1 : 0) + (coins[ic].coin == EarlyCoin::ForA ? 1 : 0)};
          Rational w0 = arr[ia].prob * coins[ic].prob;
          w0 *= fearly[ife].prob;
          w0 *= aearly[iae].prob;

          BoolBranch flate[2];
          int nfl;
          if (fearly[ife].value) {
            flate[0] = {false, Rational(1)};
            nfl = 1;
          } else {
            nfl = bool_branches(f_late[static_cast<size_t>(actionable_slot(t2))], flate);
          }
          for (int ifl = 0; ifl < nfl; ++ifl) {
            BoolBranch alate[2];
            int nal;
            if (aearly[iae].value) {
              alate[0] = {false, Rational(1)};
              nal = 1;
            } else {
              nal = bool_branches(prof.p2_at(t2.swapped()), alate);
            }
            for (int ial = 0; ial < nal; ++ial) {
              UnfBranch unf[2];
              int nu;
              if (arr[ia].arrival == Arrival::Late) {
                nu = bandwagon_branches(t2, unf);
              } else {
                UninformedVote v = UninformedVote::None;
                if (coins[ic].coin == EarlyCoin::ForF) v = UninformedVote::ForF;
                if (coins[ic].coin == EarlyCoin::ForA) v = UninformedVote::ForA;
                unf[0] = {v, Rational(1)};
                nu = 1;
              }
              for (int iu = 0; iu < nu; ++iu) {
                Tally final_tally{t2.for_votes + (flate[ifl].value ? 1 : 0),
                                  t2.against_votes + (alate[ial].value ? 1 : 0)};
                if (arr[ia].arrival == Arrival::Late) {
                  if (unf[iu].vote == UninformedVote::ForF) final_tally.for_votes += 1;
                  if (unf[iu].vote == UninformedVote::ForA) final_tally.against_votes += 1;
                }
                Rational w1 = w0 * flate[ifl].prob;
                w1 *= alate[ial].prob;
                w1 *= unf[iu].prob;

                OutcomeBranch fin[2];
                int nfin = final_branches(final_tally, fin);
                for (int ifin = 0; ifin < nfin; ++ifin) {
                  TerminalPath path;
                  path.arrival = arr[ia].arrival;
                  path.early_coin = coins[ic].coin;
                  path.f_voted_early = fearly[ife].value;
                  path.f_voted_late = flate[ifl].value;
                  path.a_voted_early = aearly[iae].value;
                  path.a_voted_late = alate[ial].value;
                  path.uninformed_vote = unf[iu].vote;
                  path.final_tally = final_tally;
                  path.outcome = fin[ifin].outcome;
                  path.probability = w1 * fin[ifin].prob;
                  path.utility = Rational(fin[ifin].outcome == Outcome::FWins ? 1 : -1);
                  if (path.f_voted()) path.utility -= par.cost;
                  visit(path);
                }
              }
            }
          }
        }
      }
    }
  }
}

std::array<Rational, 5> profile_late(const StrategyProfile& prof) {
  return {prof.p2_00, prof.p2_10, prof.p2_01, prof.p2_11, prof.p2_02};
}

}  // namespace

std::string TerminalPath::key() const {
  std::string out = "unf=" + unf_label(arrival, uninformed_vote);
  out += "|f=" + informed_label(f_voted_early, f_voted_late);
  out += "|a=" + informed_label(a_voted_early, a_voted_late);
  out += "|final=" + std::to_string(final_tally.for_votes) + "," +
         std::to_string(final_tally.against_votes);
  out += outcome == Outcome::FWins ? "|F" : "|A";
  return out;
}

std::vector<TerminalPath> enumerate_outcomes(const StrategyProfile& prof,
                                             const GameParams& par) {
  prof.validate();
  par.validate();
  std::vector<TerminalPath> paths;
  walk_full(prof, par, prof.p1, profile_late(prof),
            [&](const TerminalPath& p) { paths.push_back(p); });
  return paths;
}

Rational evaluate_profile(const StrategyProfile& prof, const GameParams& par) {
  return evaluate_profile_as(VoterType::InFavor, prof, par);
}

Rational evaluate_profile_as(VoterType type, const StrategyProfile& prof,
                             const GameParams& par) {
  if (type == VoterType::Uninformed)
    throw std::invalid_argument("the swing voter has no utility function");
  prof.validate();
  par.validate();
  Rational value(0);
  walk_full(prof, par, prof.p1, profile_late(prof), [&](const TerminalPath& p) {
    if (type == VoterType::InFavor) {
      value += p.probability * p.utility;
    } else {
      Rational u = Rational(p.outcome == Outcome::AWins ? 1 : -1);
      if (p.a_voted()) u -= par.cost;
      value += p.probability * u;
    }
  });
  return value;
}

namespace {

// Deterministic uniform draw in [0, n): assembles bit-length(n) bits from the
// engine and rejects overshoots, so the stream is identical on every platform.
mpz_class uniform_below(std::mt19937_64& rng, const mpz_class& n) {
  if (n <= 1) return 0;
  size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  while (true) {
    mpz_class v(0);
    size_t filled = 0;
    while (filled < bits) {
      std::uint64_t w = rng();
      mpz_class chunk;
      mpz_import(chunk.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
      v <<= 64;
      v += chunk;
      filled += 64;
    }
    mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), bits);
    if (v < n) return v;
  }
}

bool bernoulli(std::mt19937_64& rng, const Rational& p) {
  if (p == 0) return false;
  if (p == 1) return true;
  mpz_class u = uniform_below(rng, p.get_den());
  return u < p.get_num();
}

}  // namespace

TerminalPath sample_playout(const StrategyProfile& prof, const GameParams& par,
                            std::uint64_t seed) {
  prof.validate();
  par.validate();
  std::mt19937_64 rng(seed);

  TerminalPath path;
  Rational pr(1);
  auto draw = [&](const Rational& p_true) {
    bool v = bernoulli(rng, p_true);
    pr *= v ? p_true : 1 - p_true;
    return v;
  };

  // arrival: single draw over the common denominator of (q1, q2)
  {
    mpz_class d1 = par.q1.get_den(), d2 = par.q2.get_den();
    mpz_class den;
    mpz_lcm(den.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
    mpz_class n1 = par.q1.get_num() * (den / d1);
    mpz_class n2 = par.q2.get_num() * (den / d2);
    mpz_class u = uniform_below(rng, den);
    if (u < n1) {
      path.arrival = Arrival::Early;
      pr *= par.q1;
    } else if (u < n1 + n2) {
      path.arrival = Arrival::Late;
      pr *= par.q2;
    } else {
      path.arrival = Arrival::Never;
      pr *= par.q_none();
    }
  }
  if (path.arrival == Arrival::Early) {
    path.early_coin = draw(frac(1, 2)) ? EarlyCoin::ForF : EarlyCoin::ForA;
    path.uninformed_vote =
        path.early_coin == EarlyCoin::ForF ? UninformedVote::ForF : UninformedVote::ForA;
  }

  path.f_voted_early = draw(prof.p1);
  path.a_voted_early = draw(prof.p1);

  Tally t2{(path.f_voted_early ? 1 : 0) + (path.early_coin == EarlyCoin::ForF ? 1 : 0),
           (path.a_voted_early ? 1 : 0) + (path.early_coin == EarlyCoin::ForA ? 1 : 0)};

  if (!path.f_voted_early) path.f_voted_late = draw(prof.p2_at(t2));
  if (!path.a_voted_early) path.a_voted_late = draw(prof.p2_at(t2.swapped()));

  Tally final_tally{t2.for_votes + (path.f_voted_late ? 1 : 0),
                    t2.against_votes + (path.a_voted_late ? 1 : 0)};
  if (path.arrival == Arrival::Late) {
    UnfBranch ub[2];
    int nu = bandwagon_branches(t2, ub);
    UninformedVote v = ub[0].vote;
    if (nu == 2) v = draw(frac(1, 2)) ? ub[0].vote : ub[1].vote;
    path.uninformed_vote = v;
    if (v == UninformedVote::ForF) final_tally.for_votes += 1;
    else final_tally.against_votes += 1;
  }
  path.final_tally = final_tally;

  int s = outcome_sign(final_tally);
  if (s > 0) path.outcome = Outcome::FWins;
  else if (s < 0) path.outcome = Outcome::AWins;
  else path.outcome = draw(frac(1, 2)) ? Outcome::FWins : Outcome::AWins;

  path.probability = pr;
  path.utility = Rational(path.outcome == Outcome::FWins ? 1 : -1);
  if (path.f_voted()) path.utility -= par.cost;
  return path;
}

}  // namespace votetiming
