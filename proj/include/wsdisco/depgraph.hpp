#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wsdisco/store.hpp"
#include "wsdisco/wsdl.hpp"

namespace wsdisco {

// Directed provider -> consumer graph over service ids.
struct DependencyGraph {
  std::set<std::string> nodes;
  std::set<std::pair<std::string, std::string>> edges;  // (provider, consumer)

  bool has_node(const std::string& id) const { return nodes.count(id) != 0; }
  bool has_edge(const std::string& from, const std::string& to) const {
    return edges.count({from, to}) != 0;
  }
  std::size_t out_degree(const std::string& id) const;
  // Sorted predecessor / successor lists.
  std::vector<std::string> predecessors(const std::string& id) const;
  std::vector<std::string> successors(const std::string& id) const;

  std::vector<GraphEdge> edge_list() const;
  static DependencyGraph from_edges(const std::vector<GraphEdge>& edges,
                                    const std::vector<std::string>& nodes);
};

enum class SimMethod { ExactStem, CorpusNGD };

const char* to_string(SimMethod m);
SimMethod sim_method_from(std::string_view s);

struct SimilarityConfig {
  SimMethod method = SimMethod::ExactStem;
  double alpha = 0.8;  // Def. 4.3.1 threshold
};

// Normalized distance over corpus document frequencies:
//   (max(log f(x), log f(y)) - log f(x,y)) / (log M - min(log f(x), log f(y)))
// +inf when either term is unseen or they never co-occur; 0 when the
// numerator vanishes.
double ngd(const std::string& x, const std::string& y, const TermStats& stats);

// Name similarity in [0,1]: pipeline-tokenize both names, score token pairs
// (equal stems, or 1-ngd clamped), take each token's best match on the other
// side, and average the two directions.
double similarity(const std::string& a, const std::string& b, const SimilarityConfig& cfg,
                  const TermStats& stats);

// f_j depends on f_i: f_j has at least one input and every input of f_j is
// matched by some output of f_i at sim >= alpha.
bool operation_depends(const OperationRecord& f_i, const OperationRecord& f_j,
                       const SimilarityConfig& cfg, const TermStats& stats);

// Edge (s_i, s_j) iff some operation pair satisfies operation_depends and
// s_i != s_j. EmptyCorpus when the store has no services.
DependencyGraph build_dependency_graph(const Store& store, const SimilarityConfig& cfg);

}  // namespace wsdisco
