#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "mindgames/core.hpp"

namespace mindgames {

// Units committed to fields A, B, C in one round.
struct Allocation {
  int a = 0, b = 0, c = 0;
  int total() const { return a + b + c; }
  bool operator==(const Allocation&) const = default;
};

// Accepts the bracketed form `[A<x> B<y> C<z>]` (field letters
// case-insensitive, whitespace runs tolerated). The last well-formed bracket
// token in the text wins. Budget is checked against `units`.
std::variant<Allocation, ErrorType> parse_allocation(const std::string& text,
                                                     int units = 20);

struct BlottoRound {
  std::array<int, 2> fields_won{0, 0};  // per player
  std::optional<int> winner;            // nullopt = round tie
};

// Each field goes to the strictly larger commitment; equal commitments award
// it to neither.
BlottoRound resolve_blotto_round(const Allocation& p0, const Allocation& p1);

class BlottoEnv final : public Env {
 public:
  BlottoEnv(std::uint64_t seed, const EnvConfig& config);

  std::string phase() const override;
  std::vector<PlayerId> active_players() const override;
  std::string role_tag(PlayerId player) const override;

  int round() const { return round_; }
  const std::array<int, 2>& rounds_won() const { return rounds_won_; }

 private:
  void do_step(const std::map<PlayerId, std::string>& actions,
               StepResult& result) override;
  void handle_action(PlayerId player, const std::string& text, StepResult& result);
  void resolve_pending(StepResult& result);
  void forfeit(PlayerId offender, StepResult& result);
  void push_round_banner();
  RewardVector final_rewards() const;

  int rounds_total_;
  int units_;
  int round_ = 1;
  std::array<int, 2> rounds_won_{0, 0};
  std::array<std::optional<Allocation>, 2> pending_;
  std::array<bool, 2> awaiting_retry_{false, false};
};

}  // namespace mindgames
