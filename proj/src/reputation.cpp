#include "wsdisco/reputation.hpp"

#include <algorithm>
#include <cmath>

#include "wsdisco/error.hpp"

namespace wsdisco {

double numeric_reputation(const std::vector<RatingRecord>& ratings,
                          const NumericReputationConfig& cfg) {
  if (ratings.empty()) fail(Errc::NoRatings, "no ratings to aggregate");

  // sorted accumulation makes the result bitwise permutation-invariant
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(ratings.size());
  for (const auto& r : ratings) pairs.emplace_back(r.score, r.age_days);
  std::sort(pairs.begin(), pairs.end());

  double numerator = 0.0;
  double denominator = 0.0;
  double lo = 1.0, hi = 0.0;
  for (const auto& [score, age] : pairs) {
    double weight = std::pow(cfg.lambda, age);
    numerator += score * weight;
    denominator += weight;
    lo = std::min(lo, score);
    hi = std::max(hi, score);
  }
  if (denominator <= 0.0)
    fail(Errc::DegenerateWeights, "all rating weights are zero (lambda=0 with no age-0 rating)");
  return std::clamp(numerator / denominator, lo, hi);
}

VrLookup make_vr_lookup(const std::map<std::string, std::vector<std::string>>& table) {
  return [&table](const std::string& id) -> const std::vector<std::string>* {
    auto it = table.find(id);
    return it == table.end() ? nullptr : &it->second;
  };
}

namespace {

// Nodes with a walk of exactly r steps to the target, for r = 0..max_len.
std::vector<std::set<std::string>> exact_reach(const DependencyGraph& graph,
                                               const std::string& target, int max_len) {
  std::vector<std::set<std::string>> reach(static_cast<std::size_t>(max_len) + 1);
  reach[0].insert(target);
  for (int r = 1; r <= max_len; ++r) {
    for (const auto& [from, to] : graph.edges)
      if (reach[static_cast<std::size_t>(r - 1)].count(to))
        reach[static_cast<std::size_t>(r)].insert(from);
  }
  return reach;
}

struct PathEnumerator {
  const DependencyGraph& graph;
  const std::vector<std::set<std::string>>& reach;
  const std::function<void(const std::vector<std::string>&)>& visit;
  std::uint64_t budget;
  std::uint64_t emitted = 0;
  std::vector<std::string> path;

  // Extends the path forward; `remaining` edges are left to reach the target.
  void extend(const std::string& node, int remaining) {
    path.push_back(node);
    if (remaining == 0) {
      if (++emitted > budget)
        fail(Errc::BudgetExceeded,
             "path enumeration exceeded budget of " + std::to_string(budget));
      visit(path);
    } else {
      for (const auto& next : graph.successors(node)) {
        if (!reach[static_cast<std::size_t>(remaining - 1)].count(next)) continue;
        extend(next, remaining - 1);
      }
    }
    path.pop_back();
  }
};

}  // namespace

void enumerate_paths(const DependencyGraph& graph, const std::string& target, int max_len,
                     std::uint64_t budget,
                     const std::function<void(const std::vector<std::string>&)>& visit) {
  if (!graph.has_node(target)) fail(Errc::NotInGraph, "service not in graph: " + target);
  if (max_len < 1) return;

  auto reach = exact_reach(graph, target, max_len);
  PathEnumerator enumerator{graph, reach, visit, budget};
  for (int len = 1; len <= max_len; ++len) {
    for (const auto& start : reach[static_cast<std::size_t>(len)])
      enumerator.extend(start, len);
  }
}

std::vector<std::vector<std::string>> enumerate_paths(const DependencyGraph& graph,
                                                      const std::string& target, int max_len,
                                                      std::uint64_t budget) {
  std::vector<std::vector<std::string>> out;
  enumerate_paths(graph, target, max_len, budget,
                  [&](const std::vector<std::string>& path) { out.push_back(path); });
  return out;
}

SymbolicReputation symbolic_reputation(const std::string& service_id,
                                       const DependencyGraph& graph, const VrLookup& vr,
                                       const TermStats& stats, const WalkConfig& cfg) {
  if (!graph.has_node(service_id)) fail(Errc::NotInGraph, "service not in graph: " + service_id);

  SymbolicReputation result;
  result.service_id = service_id;

  auto n_t = [&](const std::string& term) -> double {
    std::size_t df = stats.df(term);
    if (df == 0)
      fail(Errc::InconsistentStats, "term missing from stats: " + term);
    return static_cast<double>(df);
  };

  if (const auto* own = vr(service_id)) {
    for (const auto& term : *own) result.scores[term] = cfg.d / n_t(term);
  }

  enumerate_paths(graph, service_id, cfg.k, cfg.path_budget,
                  [&](const std::vector<std::string>& path) {
                    int length = static_cast<int>(path.size()) - 1;
                    const auto* source_terms = vr(path.front());
                    if (!source_terms || source_terms->empty()) return;
                    double fan_out = 1.0;
                    for (int i = 0; i < length; ++i)
                      fan_out *= static_cast<double>(
                          graph.out_degree(path[static_cast<std::size_t>(i)]));
                    double d_prime = length < cfg.k ? cfg.d : 1.0;
                    double base = std::pow(1.0 - cfg.d, length) / fan_out;
                    for (const auto& term : *source_terms)
                      result.scores[term] += base * (d_prime / n_t(term));
                  });

  for (const auto& [term, score] : result.scores) {
    if (score > 1.0 / n_t(term)) result.terms.insert(term);
  }
  return result;
}

}  // namespace wsdisco
