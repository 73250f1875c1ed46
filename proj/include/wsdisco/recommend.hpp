#pragma once

#include <string>
#include <vector>

#include "wsdisco/discovery.hpp"
#include "wsdisco/store.hpp"

namespace wsdisco {

struct RecommendationConfig {
  int overlap_threshold = 1;  // minimum |SR(target) ∩ VR(q)|
  int max_results = 10;
  RepKind vr_kind = RepKind::B;
  double lambda = 0.5;
};

struct Recommendation {
  ScoredService scored;
  int overlap = 0;  // |SR(target) ∩ VR(q)|
};

// Candidates are the services sharing at least overlap_threshold terms with
// the target's symbolic reputation, the target itself excluded. They are
// ranked with the discovery contract: qos_score from stored advertisements
// under uniform attribute weights, reputation_score from the recency-weighted
// rating average, 0.5 standing in where a service advertises or logs nothing.
// Throws NoSymbolicReputation when the target has no stored SR.
std::vector<Recommendation> recommend(const std::string& target_id, const Store& store,
                                      const RecommendationConfig& cfg);

}  // namespace wsdisco
