#include "mindgames/core.hpp"

#include "mindgames/env_blotto.hpp"
#include "mindgames/env_codenames.hpp"
#include "mindgames/env_ipd.hpp"
#include "mindgames/env_mafia.hpp"

namespace mindgames {

const char* env_name(EnvKind kind) {
  switch (kind) {
    case EnvKind::Blotto: return "ColonelBlotto-v0";
    case EnvKind::Ipd: return "ThreePlayerIPD-v0";
    case EnvKind::Codenames: return "Codenames-v0";
    case EnvKind::Mafia: return "SecretMafia-v0";
  }
  return "?";
}

std::optional<EnvKind> env_from_name(const std::string& name) {
  if (name == "ColonelBlotto-v0" || name == "blotto") return EnvKind::Blotto;
  if (name == "ThreePlayerIPD-v0" || name == "ipd") return EnvKind::Ipd;
  if (name == "Codenames-v0" || name == "codenames") return EnvKind::Codenames;
  if (name == "SecretMafia-v0" || name == "mafia") return EnvKind::Mafia;
  return std::nullopt;
}

int env_player_count(EnvKind kind) {
  switch (kind) {
    case EnvKind::Blotto: return 2;
    case EnvKind::Ipd: return 3;
    case EnvKind::Codenames: return 4;
    case EnvKind::Mafia: return 6;
  }
  return 0;
}

int env_expected_length(EnvKind kind) {
  switch (kind) {
    case EnvKind::Blotto: return 9;
    case EnvKind::Ipd: return 10;
    case EnvKind::Codenames: return 10;
    case EnvKind::Mafia: return 10;
  }
  return 0;
}

const char* to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Valid: return "valid";
    case OutcomeKind::NonFatalCorrected: return "non_fatal_corrected";
    case OutcomeKind::NonFatalSkipped: return "non_fatal_skipped";
    case OutcomeKind::RetryRequested: return "retry_requested";
    case OutcomeKind::FatalForfeit: return "fatal_forfeit";
    case OutcomeKind::FatalElimination: return "fatal_elimination";
  }
  return "?";
}

const char* to_string(ErrorType type) {
  switch (type) {
    case ErrorType::InvalidFormat: return "invalid_format";
    case ErrorType::IllegalUnits: return "illegal_units";
    case ErrorType::IllegalClue: return "illegal_clue";
    case ErrorType::InvalidMove: return "invalid_move";
    case ErrorType::ProtectionOfEliminated: return "protection_of_eliminated";
  }
  return "?";
}

Env::Env(EnvKind kind, int player_count)
    : kind_(kind),
      player_count_(player_count),
      queues_(player_count),
      last_observation_(player_count),
      observation_taken_(player_count, false),
      eliminated_by_error_(player_count, false) {
  for (PlayerId p = 0; p < player_count; ++p)
    trajectories_.push_back(PlayerTrajectory{p, {}});
}

std::string Env::observation(PlayerId player) {
  if (player < 0 || player >= player_count_) throw usage_error("bad player id");
  auto& queue = queues_[player];
  std::string text;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    if (i) text += '\n';
    text += queue[i];
  }
  queue.clear();
  last_observation_[player] = text;
  observation_taken_[player] = true;
  return text;
}

StepResult Env::step(const std::map<PlayerId, std::string>& actions) {
  if (terminal_) throw usage_error("step on terminal game");
  auto active = active_players();
  if (actions.size() != active.size())
    throw usage_error("actions must be keyed exactly by the active set");
  for (PlayerId p : active)
    if (!actions.count(p)) throw usage_error("missing action for an active player");

  StepResult result;
  do_step(actions, result);

  // One (observation, action) pair per acting player, including retries and
  // invalid attempts: the literal string output is always preserved.
  for (const auto& [player, text] : actions) {
    trajectories_[player].turns.push_back(
        TrajectoryTurn{last_observation_[player], text});
    observation_taken_[player] = false;
  }
  turn_ += 1;
  return result;
}

const RewardVector& Env::rewards() const {
  if (!terminal_) throw usage_error("rewards requested before terminal state");
  return rewards_;
}

std::string Env::reason(PlayerId player) const {
  if (!terminal_) throw usage_error("reason requested before terminal state");
  if (turn_limit_hit_) return "turn_limit";
  if (eliminated_by_error_[player]) return "player_eliminated_error";
  if (fatal_offender_ && forfeited_)
    return *fatal_offender_ == player ? "self_forfeit" : "opponent_forfeit";
  return "normal";
}

std::optional<int> Env::termination_depth() const {
  if (!fatal_offender_) return std::nullopt;
  // Completed turns = logged actions that were not themselves error events.
  int logged = static_cast<int>(trajectories_[*fatal_offender_].turns.size());
  int errs = 0;
  for (const auto& e : errors_)
    if (e.player == *fatal_offender_) ++errs;
  return logged - errs;
}

void Env::push_message(PlayerId recipient, int sender, const std::string& text) {
  queues_[recipient].push_back("[" + std::to_string(sender) + "] " + text);
}

void Env::push_to_all(int sender, const std::string& text) {
  for (PlayerId p = 0; p < player_count_; ++p) push_message(p, sender, text);
}

void Env::push_to(const std::vector<PlayerId>& recipients, int sender,
                  const std::string& text) {
  for (PlayerId p : recipients) push_message(p, sender, text);
}

void Env::request_retry(PlayerId player, const std::string& notice) {
  auto& queue = queues_[player];
  queue.clear();
  if (!last_observation_[player].empty()) queue.push_back(last_observation_[player]);
  queue.push_back("[-1] " + notice);
}

void Env::record_error(PlayerId player, ErrorType type, bool fatal,
                       bool parse_error) {
  errors_.push_back(ErrorEvent{player, type, fatal, parse_error, turn_, phase()});
}

void Env::finish(RewardVector rewards, StepResult& result) {
  terminal_ = true;
  rewards_ = std::move(rewards);
  result.rewards = rewards_;
}

void Env::set_forfeit(PlayerId offender) {
  fatal_offender_ = offender;
  forfeited_ = true;
}

void Env::set_error_elimination(PlayerId offender) {
  eliminated_by_error_[offender] = true;
}

void Env::set_error_caused_end(PlayerId offender) {
  fatal_offender_ = offender;
}

std::unique_ptr<Env> make_env(EnvKind kind, std::uint64_t seed,
                              const EnvConfig& config) {
  switch (kind) {
    case EnvKind::Blotto: return std::make_unique<BlottoEnv>(seed, config);
    case EnvKind::Ipd: return std::make_unique<IpdEnv>(seed, config);
    case EnvKind::Codenames: return std::make_unique<CodenamesEnv>(seed, config);
    case EnvKind::Mafia: return std::make_unique<MafiaEnv>(seed, config);
  }
  throw config_error("unknown environment");
}

}  // namespace mindgames
