#pragma once

#include <cstdint>
#include <optional>

#include "hop/derivation.hpp"
#include "hop/tptp.hpp"

namespace hop {

struct Config {
  double timeLimitSeconds = 60.0;
  std::uint64_t iterationCap = 50000;
  std::uint32_t unificationDepth = 8;
  bool fsEnabled = false;
  bool psNot = true;
  bool psOr = true;
  bool psPi = true;
  bool psEq = true;
  std::uint32_t definitionalFactor = 4;
  bool proofOutput = true;
  bool replayAfterProve = false;
};

struct ProverResult {
  SzsStatus status = SzsStatus::Error;
  std::optional<Derivation> derivation;
  std::string message;  // detail for Error
  std::uint64_t iterations = 0;
  std::uint64_t generated = 0;
  std::uint64_t activeSize = 0;
};

// Given-clause saturation of a classical (non-modal) problem. Throws
// std::logic_error when the problem still carries a logic specification.
ProverResult saturate(const Problem& p, const Config& cfg);

// Full pipeline: embeds modal problems first, then saturates.
ProverResult prove(const Problem& p, const Config& cfg);

// Priority queue with the weight/age pick rotation exposed for testing.
class ClauseQueue {
public:
  explicit ClauseQueue(std::uint32_t weightPicks = 5) : ratio_(weightPicks) {}
  void push(std::uint64_t id, std::uint32_t weight);
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  // Rotates weightPicks lightest picks, then one oldest pick. Ties go to the
  // lower id. Throws std::logic_error when empty.
  std::uint64_t pick();
  void erase(std::uint64_t id);

private:
  struct Item {
    std::uint64_t id;
    std::uint32_t weight;
  };
  std::vector<Item> items_;
  std::uint32_t ratio_;
  std::uint64_t picks_ = 0;
};

}  // namespace hop
