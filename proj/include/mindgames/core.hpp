#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mindgames {

using PlayerId = int;

enum class EnvKind { Blotto, Ipd, Codenames, Mafia };

const char* env_name(EnvKind kind);                // e.g. "ColonelBlotto-v0"
std::optional<EnvKind> env_from_name(const std::string& name);
int env_player_count(EnvKind kind);                // 2 / 3 / 4 / 6
int env_expected_length(EnvKind kind);             // turns, for the validity diagnostic

// Classification of one submitted action string.
enum class OutcomeKind {
  Valid,
  NonFatalCorrected,  // replaced by a default / no-op, play proceeds
  NonFatalSkipped,    // the turn is forfeited, play proceeds
  RetryRequested,     // same player is re-prompted once
  FatalForfeit,       // game ends, offender loses
  FatalElimination,   // offender removed, game continues
};

enum class ErrorType {
  InvalidFormat,
  IllegalUnits,
  IllegalClue,
  InvalidMove,
  ProtectionOfEliminated,
};

const char* to_string(OutcomeKind kind);
const char* to_string(ErrorType type);

struct ActionOutcome {
  OutcomeKind kind = OutcomeKind::Valid;
  std::optional<ErrorType> error;  // present iff kind != Valid
  std::string raw_text;            // submitted string, preserved verbatim
};

// Terminal reward per player. Produced exactly once, at the terminal step.
using RewardVector = std::map<PlayerId, double>;

struct ErrorEvent {
  PlayerId player = 0;
  ErrorType type = ErrorType::InvalidFormat;
  bool fatal = false;
  bool parse_error = false;  // unparseable output, as opposed to a rule violation
  int turn = 0;
  std::string phase;
};

struct TrajectoryTurn {
  std::string observation;
  std::string action;
};

struct PlayerTrajectory {
  PlayerId player = 0;
  std::vector<TrajectoryTurn> turns;
};

struct StepResult {
  std::map<PlayerId, ActionOutcome> outcomes;
  std::optional<RewardVector> rewards;  // present iff the new state is terminal
};

class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class usage_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Per-environment knobs. Defaults reproduce the reference setup; the
// tournament manifest may override them.
struct EnvConfig {
  int blotto_rounds = 9;
  int blotto_units = 20;
  int ipd_rounds = 5;
  int ipd_chat_cap = 512;
  int codenames_turn_cap = 0;  // 0 = no cap; >0 ends the game in a draw
  std::vector<std::string> lexicon;  // empty = built-in wordlist
};

// One running game. Hidden state lives in the concrete subclass; callers see
// only the gym-style surface: who acts, what they observe, and step().
//
// Protocol per turn: for every player in active_players() call observation()
// (it drains that player's message queue), then call step() with exactly the
// active set's actions. All agent misbehavior is reported through
// ActionOutcome; step() itself never throws on bad action text.
class Env {
 public:
  virtual ~Env() = default;

  EnvKind kind() const { return kind_; }
  int player_count() const { return player_count_; }
  bool terminal() const { return terminal_; }
  int turn() const { return turn_; }

  virtual std::string phase() const = 0;
  virtual std::vector<PlayerId> active_players() const = 0;
  virtual std::string role_tag(PlayerId player) const = 0;

  std::string observation(PlayerId player);
  StepResult step(const std::map<PlayerId, std::string>& actions);

  const RewardVector& rewards() const;
  const std::vector<ErrorEvent>& errors() const { return errors_; }
  const std::vector<PlayerTrajectory>& trajectories() const { return trajectories_; }

  // Terminal-status vocabulary per player: normal, self_forfeit,
  // opponent_forfeit, player_eliminated_error, turn_limit.
  std::string reason(PlayerId player) const;

  // Valid actions the fatally-erring player completed before failing;
  // empty when the game ended without a fatal termination.
  std::optional<int> termination_depth() const;

 protected:
  Env(EnvKind kind, int player_count);

  virtual void do_step(const std::map<PlayerId, std::string>& actions,
                       StepResult& result) = 0;

  // Message plumbing shared by all engines. sender -1 renders as the game.
  void push_message(PlayerId recipient, int sender, const std::string& text);
  void push_to_all(int sender, const std::string& text);
  void push_to(const std::vector<PlayerId>& recipients, int sender,
               const std::string& text);

  // Re-prompts `player` with their previous observation plus a one-line
  // error notice; consumes no game turn.
  void request_retry(PlayerId player, const std::string& notice);

  void record_error(PlayerId player, ErrorType type, bool fatal, bool parse_error);
  void finish(RewardVector rewards, StepResult& result);
  // A fatal error that ends the whole game (Blotto forfeit, illegal clue).
  void set_forfeit(PlayerId offender);
  // A fatal error that removes one player while the game continues (Mafia).
  void set_error_elimination(PlayerId offender);
  // The game ended because an error elimination tripped a win condition.
  void set_error_caused_end(PlayerId offender);
  void set_turn_limit_hit() { turn_limit_hit_ = true; }

  EnvKind kind_;
  int player_count_;
  int turn_ = 1;
  bool terminal_ = false;

 private:
  std::vector<std::vector<std::string>> queues_;
  std::vector<std::string> last_observation_;
  std::vector<bool> observation_taken_;
  std::vector<PlayerTrajectory> trajectories_;
  std::vector<ErrorEvent> errors_;
  RewardVector rewards_;
  std::optional<PlayerId> fatal_offender_;
  bool forfeited_ = false;
  bool turn_limit_hit_ = false;
  std::vector<bool> eliminated_by_error_;
};

// reset(): builds the initial state s_1 for (kind, seed). Identical inputs
// produce bit-identical games.
std::unique_ptr<Env> make_env(EnvKind kind, std::uint64_t seed,
                              const EnvConfig& config = {});

}  // namespace mindgames
