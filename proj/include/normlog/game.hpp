#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "normlog/kb.hpp"

namespace normlog {

// Exact population counts for one binary attribute; no sampling.
struct DomainWorld {
  std::string attribute;
  int positive = 0;
  int negative = 0;

  int population() const { return positive + negative; }
};

DomainWorld build_world(int positive, int negative, std::string attribute);

enum class AgentLogic { Classical, Nonmonotonic };

const char* logic_name(AgentLogic logic);

struct AgentSpec {
  std::string id;
  AgentLogic logic = AgentLogic::Classical;
  ThresholdConfig threshold{0.01};
  std::shared_ptr<const KnowledgeBase> kb;
  int observation_budget = 0;
};

enum class Guess { Positive, Negative, Abstain };

struct GuessVector {
  std::vector<Guess> guesses;
  std::vector<std::string> audit;
};

// Individuals are ordered canonically, positives first.  Observed
// individuals (within the budget) are answered truthfully.  Beyond the
// budget a classical agent abstains; a nonmonotonic agent guesses
// positive when its knowledge base's statistic for the attribute clears
// the threshold, and abstains otherwise.  Agents never see the world's
// counts, only their own statistics.
GuessVector agent_guess(const AgentSpec& spec, const DomainWorld& world);

struct Score {
  int guessed_positive = 0;
  int guessed_negative = 0;
  int abstained = 0;
  int correct = 0;
  int errors = 0;
  int net = 0;  // correct - errors; abstentions score zero
};

Score score(const std::vector<Guess>& guesses, const DomainWorld& world);

struct GameConfig {
  DomainWorld world;
  std::optional<DomainWorld> shift;
  std::vector<AgentSpec> agents;
  // When set, all agents must share identical knowledge-base content.
  bool knowledge_invariance = false;
};

struct AgentResult {
  std::string id;
  AgentLogic logic = AgentLogic::Classical;
  Score score;
  std::vector<std::string> audit;
};

struct PhaseResult {
  std::string name;  // "base" or "shift"
  DomainWorld world;
  std::vector<AgentResult> agents;
  std::string winner;  // agent id, or "draw"
};

struct GameResult {
  PhaseResult base;
  std::optional<PhaseResult> shift;
};

// Deterministic: identical configs produce identical results.  The
// winner of a phase is the strictly greatest net score.
GameResult run_game(const GameConfig& config);

// Flat key=value file: world.positive, world.negative, world.attribute,
// shift.positive, shift.negative, agent.N.logic, agent.N.epsilon,
// agent.N.budget, knowledge_invariance, kb (path relative to the config
// file).  The epsilon default applies to agents that do not set one.
GameConfig load_game_config(const std::string& path, double default_epsilon = 0.01,
                            EnumerationLimits limits = {});

// Fixed-width table plus a machine-readable key=value tail.
std::string render_report(const GameResult& result);

}  // namespace normlog
