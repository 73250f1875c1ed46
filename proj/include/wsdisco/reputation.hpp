#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wsdisco/depgraph.hpp"
#include "wsdisco/store.hpp"

namespace wsdisco {

struct NumericReputationConfig {
  double lambda = 0.5;  // inclusion factor; smaller weights recent ratings more
};

// Recency-weighted average of ratings: sum(s_i * lambda^d_i) / sum(lambda^d_i).
// NoRatings on an empty list, DegenerateWeights when every weight is zero.
double numeric_reputation(const std::vector<RatingRecord>& ratings,
                          const NumericReputationConfig& cfg);

struct WalkConfig {
  double d = 0.15;               // random surfer jump, in (0,1)
  int k = 5;                     // maximum path length, >= 1
  std::uint64_t path_budget = 10'000'000;
};

struct SymbolicReputation {
  std::string service_id;
  std::map<std::string, double> scores;  // P(s,t) for every term seen
  std::set<std::string> terms;           // subset with P(s,t) > 1/N_t
};

// Vectorial-representation lookup; nullptr when the service has none.
using VrLookup = std::function<const std::vector<std::string>*(const std::string&)>;

VrLookup make_vr_lookup(const std::map<std::string, std::vector<std::string>>& table);

// Visits every directed path of length 1..max_len ending at target, walks
// included (nodes may repeat), shortest lengths first and lexicographic on
// the id sequence within a length. The visited vector runs source..target.
// Throws NotInGraph for an unknown target and BudgetExceeded past the budget.
void enumerate_paths(const DependencyGraph& graph, const std::string& target, int max_len,
                     std::uint64_t budget,
                     const std::function<void(const std::vector<std::string>&)>& visit);

std::vector<std::vector<std::string>> enumerate_paths(const DependencyGraph& graph,
                                                      const std::string& target, int max_len,
                                                      std::uint64_t budget = 10'000'000);

// Bounded random-walk reputation: P(s,t) starts at d/N_t for the service's
// own terms; every path q_l -> ... -> q_1 -> s of length l adds
// (1-d)^l / prod(O(q_i)) * d'/N_t for each t in VR(q_l), with d' = d before
// the last level and 1 at l = k. The reputation terms are those with
// P(s,t) > 1/N_t.
SymbolicReputation symbolic_reputation(const std::string& service_id,
                                       const DependencyGraph& graph, const VrLookup& vr,
                                       const TermStats& stats, const WalkConfig& cfg);

}  // namespace wsdisco
