#include "brainswap/factor_sequence.hpp"

namespace brainswap {

Permutation FactorSequence::product() const { return brainswap::product(factors); }

std::vector<Cycle> FactorSequence::run_order() const {
  return std::vector<Cycle>(factors.rbegin(), factors.rend());
}

std::string FactorSequence::to_string() const {
  if (factors.empty()) return "id";
  std::string out;
  for (const Cycle& c : factors) out += c.to_string();
  return out;
}

}  // namespace brainswap
