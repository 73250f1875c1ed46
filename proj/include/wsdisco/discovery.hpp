#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wsdisco/representation.hpp"
#include "wsdisco/store.hpp"
#include "wsdisco/text.hpp"

namespace wsdisco {

struct QosConstraint {
  std::optional<double> min;
  std::optional<double> max;
};

struct QosRequirement {
  std::string attribute;
  QosConstraint constraint;
  double weight = 0.0;
};

struct ReputationRequirement {
  double min_score = 0.0;
  double weight = 0.0;
};

struct Query {
  std::string functional_terms;
  std::optional<std::vector<QosRequirement>> qos_requirements;
  std::optional<ReputationRequirement> reputation_requirement;
  std::optional<int> nb_max;
  RepKind rep_kind = RepKind::B;  // B or RBTT
  double match_threshold = 0.1;
};

struct ScoredService {
  std::string service_id;
  double functional_score = 0.0;
  std::optional<double> qos_score;
  std::optional<double> reputation_score;
  double overall = 0.0;
};

enum class SelectMode { Functional, Qos, QosAndRep };

const char* to_string(SelectMode m);

struct DiscoveryOptions {
  double lambda = 0.5;            // Eq. 1 inclusion factor for reputation lookups
  double select_threshold = 0.5;  // random-fallback cutoff when nb_max is absent
  std::uint64_t seed = 0;
};

struct DiscoveryResult {
  SelectMode mode = SelectMode::Functional;
  std::vector<ScoredService> services;
  std::vector<std::string> dropped_missing_reputation;
};

// Cosine over term frequency vectors; candidates must share at least one
// term and reach the threshold. Sorted by score descending, id ascending.
std::vector<ScoredService> func_matching(const Query& query, const Store& store);
std::vector<ScoredService> func_matching_terms(const TokenList& query_terms, RepKind kind,
                                               double threshold, const Store& store);

// Drops hard-constraint violators (value outside [min,max] or attribute
// missing) and scores survivors by weighted min-max normalization over the
// surviving cohort; a degenerate cohort (single survivor or flat values)
// normalizes to 1.
std::vector<ScoredService> qos_matching(std::vector<ScoredService> candidates,
                                        const std::vector<QosRequirement>& requirements,
                                        const Store& store);

// Weighted combination of qos_score and reputation_score; candidates below
// the reputation minimum or without ratings are dropped (the latter flagged
// through `dropped`). Descending overall, ties by ascending id.
std::vector<ScoredService> ranking(std::vector<ScoredService> candidates,
                                   const std::vector<QosRequirement>& requirements,
                                   const std::optional<ReputationRequirement>& rep_requirement,
                                   const Store& store, const DiscoveryOptions& options,
                                   std::vector<std::string>* dropped = nullptr);

// Combines component scores with the ranking weights and orders descending
// overall / ascending id. Shared with the recommender.
void rank_by_overall(std::vector<ScoredService>& candidates, double qos_weight,
                     double rep_weight);

// First nb_max entries, or — when nb_max is absent — one uniformly random
// pick (seeded) among candidates with overall >= the select threshold.
std::vector<ScoredService> select_services(const std::vector<ScoredService>& ranked,
                                           std::optional<int> nb_max,
                                           const DiscoveryOptions& options);

// Full discovery control flow: functional matching, then the QoS and
// reputation branches, then selection.
DiscoveryResult discover(const Query& query, const Store& store,
                         const DiscoveryOptions& options);

}  // namespace wsdisco
