#include "wsdisco/recommend.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wsdisco/error.hpp"
#include "wsdisco/reputation.hpp"

namespace wsdisco {

std::vector<Recommendation> recommend(const std::string& target_id, const Store& store,
                                      const RecommendationConfig& cfg) {
  if (!store.has_service(target_id)) fail(Errc::NotFound, "no such service: " + target_id);
  if (!store.has_representation(target_id, RepKind::SR))
    fail(Errc::NoSymbolicReputation, "no symbolic reputation stored for " + target_id);

  const Representation& sr = store.get_representation(target_id, RepKind::SR);
  std::set<std::string> sr_terms;
  for (const auto& [term, score] : sr.terms) {
    (void)score;
    sr_terms.insert(term);
  }

  struct Candidate {
    ScoredService scored;
    int overlap;
  };
  std::vector<Candidate> candidates;
  for (const auto& [id, svc] : store.services()) {
    (void)svc;
    if (id == target_id) continue;
    if (!store.has_representation(id, cfg.vr_kind)) continue;
    const Representation& vr = store.get_representation(id, cfg.vr_kind);
    int overlap = 0;
    for (const auto& [term, weight] : vr.terms) {
      (void)weight;
      if (sr_terms.count(term)) ++overlap;
    }
    if (overlap < cfg.overlap_threshold) continue;
    Candidate c;
    c.scored.service_id = id;
    c.scored.functional_score =
        sr_terms.empty() ? 0.0
                         : static_cast<double>(overlap) / static_cast<double>(sr_terms.size());
    c.overlap = overlap;
    candidates.push_back(std::move(c));
  }
  if (candidates.empty()) return {};

  // qos_score: uniform weights over the attributes advertised in the cohort,
  // min-max normalized per attribute; 0.5 where nothing is advertised.
  std::map<std::string, std::map<std::string, QoSAdvertisement>> advertised;
  std::map<std::string, std::pair<double, double>> extent;
  for (const auto& c : candidates) {
    for (auto& ad : store.qos_for(c.scored.service_id)) {
      auto it = extent.find(ad.attribute);
      if (it == extent.end()) {
        extent[ad.attribute] = {ad.value, ad.value};
      } else {
        it->second.first = std::min(it->second.first, ad.value);
        it->second.second = std::max(it->second.second, ad.value);
      }
      advertised[c.scored.service_id].emplace(ad.attribute, std::move(ad));
    }
  }

  NumericReputationConfig rep_cfg{cfg.lambda};
  std::vector<ScoredService> scored;
  std::map<std::string, int> overlap_by_id;
  for (auto& c : candidates) {
    auto ads = advertised.find(c.scored.service_id);
    if (ads == advertised.end() || ads->second.empty()) {
      c.scored.qos_score = 0.5;
    } else {
      double total = 0.0;
      for (const auto& [attr, ad] : ads->second) {
        auto [lo, hi] = extent[attr];
        double norm;
        if (hi <= lo) {
          norm = 1.0;
        } else {
          norm = (ad.value - lo) / (hi - lo);
          if (ad.direction == QoSDirection::LowerBetter) norm = 1.0 - norm;
        }
        total += norm;
      }
      c.scored.qos_score = total / static_cast<double>(ads->second.size());
    }

    auto ratings = store.ratings_for(c.scored.service_id);
    c.scored.reputation_score =
        ratings.empty() ? 0.5 : numeric_reputation(ratings, rep_cfg);

    overlap_by_id[c.scored.service_id] = c.overlap;
    scored.push_back(std::move(c.scored));
  }

  rank_by_overall(scored, 1.0, 1.0);

  std::vector<Recommendation> out;
  for (auto& s : scored) {
    if (static_cast<int>(out.size()) >= cfg.max_results) break;
    Recommendation rec;
    rec.overlap = overlap_by_id[s.service_id];
    rec.scored = std::move(s);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace wsdisco
