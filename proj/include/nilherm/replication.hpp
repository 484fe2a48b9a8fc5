#pragma once

#include <string>
#include <vector>

#include "nilherm/hermitian.hpp"
#include "nilherm/two_step_data.hpp"

namespace nilherm {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Number of built-in verification checks run by run_replication.
inline constexpr int kReplicationChecks = 10;

// One check, 1 <= id <= kReplicationChecks. Exceptions are caught and turned
// into a failed result that carries the message.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_replication();

struct NamedTriple {
  std::string name;
  MetricComplexTriple triple;
};

// The shared pool of Hermitian triples: standard abelian triples, free
// algebras, example and randomized 2-step builds, 3-step examples and the
// naturally reductive constructions. Built once.
const std::vector<NamedTriple>& triple_pool();

// Types and seeds of the randomized 2-step round trips.
const std::vector<std::pair<TwoStepType, std::uint64_t>>& round_trip_cases();

}  // namespace nilherm
