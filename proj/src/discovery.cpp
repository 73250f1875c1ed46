#include "wsdisco/discovery.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "wsdisco/error.hpp"
#include "wsdisco/reputation.hpp"

namespace wsdisco {

const char* to_string(SelectMode m) {
  switch (m) {
    case SelectMode::Functional: return "Functional";
    case SelectMode::Qos: return "Qos";
    case SelectMode::QosAndRep: return "QosAndRep";
  }
  return "Functional";
}

namespace {

double cosine(const std::map<std::string, double>& a, const std::map<std::string, double>& b) {
  double dot = 0.0;
  for (const auto& [term, wa] : a) {
    auto it = b.find(term);
    if (it != b.end()) dot += wa * it->second;
  }
  if (dot <= 0.0) return 0.0;
  double na = 0.0, nb = 0.0;
  for (const auto& [term, w] : a) na += w * w;
  for (const auto& [term, w] : b) nb += w * w;
  return dot / std::sqrt(na * nb);
}

void sort_ranked(std::vector<ScoredService>& services) {
  std::sort(services.begin(), services.end(), [](const ScoredService& a, const ScoredService& b) {
    if (a.overall != b.overall) return a.overall > b.overall;
    return a.service_id < b.service_id;
  });
}

}  // namespace

std::vector<ScoredService> func_matching_terms(const TokenList& query_terms, RepKind kind,
                                               double threshold, const Store& store) {
  if (query_terms.empty()) return {};

  std::map<std::string, double> query_vec;
  for (const auto& term : query_terms) query_vec[term] += 1.0;

  std::vector<ScoredService> matches;
  for (const Representation* rep : store.list_representations(kind)) {
    double score = cosine(query_vec, rep->terms);
    if (score <= 0.0 || score < threshold) continue;  // no shared term is no match
    ScoredService s;
    s.service_id = rep->service_id;
    s.functional_score = score;
    s.overall = score;
    matches.push_back(std::move(s));
  }
  sort_ranked(matches);
  return matches;
}

std::vector<ScoredService> func_matching(const Query& query, const Store& store) {
  return func_matching_terms(pipeline(query.functional_terms), query.rep_kind,
                             query.match_threshold, store);
}

std::vector<ScoredService> qos_matching(std::vector<ScoredService> candidates,
                                        const std::vector<QosRequirement>& requirements,
                                        const Store& store) {
  std::map<std::string, std::map<std::string, QoSAdvertisement>> values;
  for (const auto& c : candidates) {
    auto list = store.qos_for(c.service_id);
    auto& entry = values[c.service_id];
    for (auto& ad : list) entry.emplace(ad.attribute, std::move(ad));
  }

  // hard constraints: missing attribute or out-of-range value drops the candidate
  std::vector<ScoredService> survivors;
  for (auto& c : candidates) {
    const auto& advertised = values[c.service_id];
    bool ok = true;
    for (const auto& req : requirements) {
      auto it = advertised.find(req.attribute);
      if (it == advertised.end()) {
        ok = false;
        break;
      }
      double v = it->second.value;
      if ((req.constraint.min && v < *req.constraint.min) ||
          (req.constraint.max && v > *req.constraint.max)) {
        ok = false;
        break;
      }
    }
    if (ok) survivors.push_back(std::move(c));
  }
  if (survivors.empty()) return survivors;

  // cohort min-max per attribute
  std::map<std::string, std::pair<double, double>> extent;
  for (const auto& req : requirements) {
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const auto& s : survivors) {
      double v = values[s.service_id].at(req.attribute).value;
      if (first) {
        lo = hi = v;
        first = false;
      } else {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    extent[req.attribute] = {lo, hi};
  }

  double total_weight = 0.0;
  for (const auto& req : requirements) total_weight += req.weight;

  for (auto& s : survivors) {
    double weighted = 0.0;
    for (const auto& req : requirements) {
      const auto& ad = values[s.service_id].at(req.attribute);
      auto [lo, hi] = extent[req.attribute];
      double norm;
      if (hi <= lo) {
        norm = 1.0;  // single survivor or flat cohort
      } else {
        norm = (ad.value - lo) / (hi - lo);
        if (ad.direction == QoSDirection::LowerBetter) norm = 1.0 - norm;
      }
      weighted += req.weight * norm;
    }
    s.qos_score = total_weight > 0.0 ? weighted / total_weight : 1.0;
    s.overall = *s.qos_score;
  }
  return survivors;
}

void rank_by_overall(std::vector<ScoredService>& candidates, double qos_weight,
                     double rep_weight) {
  for (auto& c : candidates) {
    double qos = c.qos_score.value_or(0.0);
    double rep = c.reputation_score.value_or(0.0);
    double total = qos_weight + rep_weight;
    c.overall = total > 0.0 ? (qos_weight * qos + rep_weight * rep) / total
                            : 0.5 * (qos + rep);
  }
  sort_ranked(candidates);
}

std::vector<ScoredService> ranking(std::vector<ScoredService> candidates,
                                   const std::vector<QosRequirement>& requirements,
                                   const std::optional<ReputationRequirement>& rep_requirement,
                                   const Store& store, const DiscoveryOptions& options,
                                   std::vector<std::string>* dropped) {
  if (!rep_requirement) {
    for (auto& c : candidates) c.overall = c.qos_score.value_or(0.0);
    sort_ranked(candidates);
    return candidates;
  }

  NumericReputationConfig rep_cfg{options.lambda};
  std::vector<ScoredService> kept;
  for (auto& c : candidates) {
    auto ratings = store.ratings_for(c.service_id);
    if (ratings.empty()) {
      if (dropped) dropped->push_back(c.service_id);  // MissingReputation: flagged, not fatal
      continue;
    }
    double rep = numeric_reputation(ratings, rep_cfg);
    if (rep < rep_requirement->min_score) continue;
    c.reputation_score = rep;
    kept.push_back(std::move(c));
  }

  double qos_weight = 0.0;
  for (const auto& req : requirements) qos_weight += req.weight;
  rank_by_overall(kept, qos_weight, rep_requirement->weight);
  return kept;
}

std::vector<ScoredService> select_services(const std::vector<ScoredService>& ranked,
                                           std::optional<int> nb_max,
                                           const DiscoveryOptions& options) {
  if (nb_max) {
    std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(std::max(0, *nb_max)),
                                          ranked.size());
    return {ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(n)};
  }
  // nb_max absent: one uniformly random pick above the threshold
  std::vector<const ScoredService*> eligible;
  for (const auto& s : ranked)
    if (s.overall >= options.select_threshold) eligible.push_back(&s);
  if (eligible.empty()) return {};
  std::mt19937_64 rng(options.seed);
  return {*eligible[static_cast<std::size_t>(rng() % eligible.size())]};
}

DiscoveryResult discover(const Query& query, const Store& store,
                         const DiscoveryOptions& options) {
  DiscoveryResult result;

  std::vector<ScoredService> functional = func_matching(query, store);
  if (functional.empty()) {
    result.mode = query.qos_requirements
                      ? (query.reputation_requirement ? SelectMode::QosAndRep : SelectMode::Qos)
                      : SelectMode::Functional;
    return result;  // empty functional match short-circuits
  }

  if (!query.qos_requirements) {
    result.mode = SelectMode::Functional;
    result.services = select_services(functional, query.nb_max, options);
    return result;
  }

  std::vector<ScoredService> qos_matched =
      qos_matching(std::move(functional), *query.qos_requirements, store);

  if (query.reputation_requirement) {
    result.mode = SelectMode::QosAndRep;
    std::vector<ScoredService> ranked =
        ranking(std::move(qos_matched), *query.qos_requirements, query.reputation_requirement,
                store, options, &result.dropped_missing_reputation);
    result.services = select_services(ranked, query.nb_max, options);
    return result;
  }

  result.mode = SelectMode::Qos;
  std::vector<ScoredService> ranked = ranking(std::move(qos_matched), *query.qos_requirements,
                                              std::nullopt, store, options, nullptr);
  result.services = select_services(ranked, query.nb_max, options);
  return result;
}

}  // namespace wsdisco
