// Test-only reference implementations, kept independent of the library's
// computation paths: the dependency-graph oracle re-checks the pairwise
// definition directly, and the reputation oracle accumulates walk
// contributions through a plain backward recursion.
#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wsdisco/depgraph.hpp"
#include "wsdisco/reputation.hpp"
#include "wsdisco/store.hpp"

namespace oracles {

// Edge set by exhaustive pairwise operation checking.
inline std::set<std::pair<std::string, std::string>> dependency_edges(
    const std::map<std::string, wsdisco::ServiceRecord>& services,
    const wsdisco::SimilarityConfig& cfg, const wsdisco::TermStats& stats) {
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [pid, provider] : services) {
    for (const auto& [cid, consumer] : services) {
      if (pid == cid) continue;
      bool any = false;
      for (const auto& f_i : provider.operations) {
        for (const auto& f_j : consumer.operations) {
          if (wsdisco::operation_depends(f_i, f_j, cfg, stats)) {
            any = true;
            break;
          }
        }
        if (any) break;
      }
      if (any) edges.insert({pid, cid});
    }
  }
  return edges;
}

// Recursive accumulation of P(s,t): every backward extension of the walk is
// one path, and the terms of its start node contribute at that length.
inline std::map<std::string, double> sr_scores(
    const std::string& target, const wsdisco::DependencyGraph& graph,
    const std::map<std::string, std::vector<std::string>>& vr, const wsdisco::TermStats& stats,
    const wsdisco::WalkConfig& cfg) {
  std::map<std::string, double> scores;
  auto own = vr.find(target);
  if (own != vr.end())
    for (const auto& t : own->second) scores[t] = cfg.d / static_cast<double>(stats.df(t));

  std::function<void(const std::string&, int, double)> back = [&](const std::string& node,
                                                                  int depth, double fan) {
    for (const auto& pred : graph.predecessors(node)) {
      int length = depth + 1;
      double fan_here = fan * static_cast<double>(graph.out_degree(pred));
      double d_prime = length < cfg.k ? cfg.d : 1.0;
      auto terms = vr.find(pred);
      if (terms != vr.end()) {
        for (const auto& t : terms->second)
          scores[t] += std::pow(1.0 - cfg.d, length) / fan_here *
                       (d_prime / static_cast<double>(stats.df(t)));
      }
      if (length < cfg.k) back(pred, length, fan_here);
    }
  };
  back(target, 0, 1.0);
  return scores;
}

inline std::set<std::string> sr_terms(const std::map<std::string, double>& scores,
                                      const wsdisco::TermStats& stats) {
  std::set<std::string> terms;
  for (const auto& [t, p] : scores)
    if (p > 1.0 / static_cast<double>(stats.df(t))) terms.insert(t);
  return terms;
}

// Random instance shared by the reputation tests: graph, per-node term sets,
// and stats consistent with those sets.
struct WalkInstance {
  wsdisco::DependencyGraph graph;
  std::map<std::string, std::vector<std::string>> vr;
  wsdisco::TermStats stats;
  wsdisco::WalkConfig cfg;
};

inline WalkInstance random_walk_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  WalkInstance inst;

  int n = 1 + static_cast<int>(rng() % 6);
  std::vector<std::string> nodes;
  for (int i = 0; i < n; ++i) nodes.push_back("s" + std::to_string(i));
  inst.graph.nodes.insert(nodes.begin(), nodes.end());

  int edge_attempts = static_cast<int>(rng() % 11);
  for (int e = 0; e < edge_attempts; ++e) {
    auto from = nodes[rng() % nodes.size()];
    auto to = nodes[rng() % nodes.size()];
    if (from != to) inst.graph.edges.insert({from, to});
  }

  const char* universe[] = {"alpha", "beta", "gamma", "delta", "eps", "zeta", "eta", "theta"};
  for (const auto& node : nodes) {
    std::vector<std::string> terms;
    for (const char* t : universe)
      if (rng() % 5 < 2) terms.push_back(t);
    inst.vr[node] = std::move(terms);
  }
  for (const auto& [node, terms] : inst.vr)
    for (const auto& t : terms) inst.stats.postings[t].push_back(node);
  for (auto& [t, ids] : inst.stats.postings) std::sort(ids.begin(), ids.end());
  inst.stats.M = static_cast<std::size_t>(n);

  inst.cfg.k = 1 + static_cast<int>(rng() % 3);
  const double ds[] = {0.1, 0.15, 0.5};
  inst.cfg.d = ds[rng() % 3];
  return inst;
}

}  // namespace oracles
