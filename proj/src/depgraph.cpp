#include "wsdisco/depgraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "wsdisco/error.hpp"
#include "wsdisco/text.hpp"

namespace wsdisco {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

std::size_t DependencyGraph::out_degree(const std::string& id) const {
  std::size_t n = 0;
  for (auto it = edges.lower_bound({id, ""}); it != edges.end() && it->first == id; ++it) ++n;
  return n;
}

std::vector<std::string> DependencyGraph::predecessors(const std::string& id) const {
  std::vector<std::string> out;
  for (const auto& [from, to] : edges)
    if (to == id) out.push_back(from);
  return out;  // edges are ordered by (from, to), so this is sorted
}

std::vector<std::string> DependencyGraph::successors(const std::string& id) const {
  std::vector<std::string> out;
  for (auto it = edges.lower_bound({id, ""}); it != edges.end() && it->first == id; ++it)
    out.push_back(it->second);
  return out;
}

std::vector<GraphEdge> DependencyGraph::edge_list() const {
  std::vector<GraphEdge> out;
  for (const auto& [from, to] : edges) out.push_back({from, to});
  return out;
}

DependencyGraph DependencyGraph::from_edges(const std::vector<GraphEdge>& edges,
                                            const std::vector<std::string>& nodes) {
  DependencyGraph g;
  g.nodes.insert(nodes.begin(), nodes.end());
  for (const auto& e : edges) {
    g.nodes.insert(e.from);
    g.nodes.insert(e.to);
    if (e.from != e.to) g.edges.insert({e.from, e.to});
  }
  return g;
}

const char* to_string(SimMethod m) {
  return m == SimMethod::ExactStem ? "exact" : "ngd";
}

SimMethod sim_method_from(std::string_view s) {
  return s == "ngd" ? SimMethod::CorpusNGD : SimMethod::ExactStem;
}

double ngd(const std::string& x, const std::string& y, const TermStats& stats) {
  double fx = static_cast<double>(stats.df(x));
  double fy = static_cast<double>(stats.df(y));
  if (stats.M < 2 || fx < 1.0 || fy < 1.0) return kInf;
  double fxy = static_cast<double>(stats.co_df(x, y));
  if (fxy < 1.0) return kInf;

  double lx = std::log(fx);
  double ly = std::log(fy);
  double numerator = std::max(lx, ly) - std::log(fxy);
  if (numerator <= 0.0) return 0.0;
  double denominator = std::log(static_cast<double>(stats.M)) - std::min(lx, ly);
  if (denominator <= 0.0) return kInf;
  return numerator / denominator;
}

namespace {

double token_sim(const std::string& a, const std::string& b, const SimilarityConfig& cfg,
                 const TermStats& stats) {
  if (cfg.method == SimMethod::ExactStem) return a == b ? 1.0 : 0.0;
  if (a == b) return 1.0;
  double d = ngd(a, b, stats);
  if (!std::isfinite(d)) return 0.0;
  return std::clamp(1.0 - d, 0.0, 1.0);
}

double directed_sim(const TokenList& from, const TokenList& to, const SimilarityConfig& cfg,
                    const TermStats& stats) {
  double total = 0.0;
  for (const auto& a : from) {
    double best = 0.0;
    for (const auto& b : to) best = std::max(best, token_sim(a, b, cfg, stats));
    total += best;
  }
  return total / static_cast<double>(from.size());
}

}  // namespace

double similarity(const std::string& a, const std::string& b, const SimilarityConfig& cfg,
                  const TermStats& stats) {
  TokenList ta = pipeline(a);
  TokenList tb = pipeline(b);
  if (ta.empty() || tb.empty()) return 0.0;
  return 0.5 * (directed_sim(ta, tb, cfg, stats) + directed_sim(tb, ta, cfg, stats));
}

bool operation_depends(const OperationRecord& f_i, const OperationRecord& f_j,
                       const SimilarityConfig& cfg, const TermStats& stats) {
  if (f_j.inputs.empty()) return false;  // empty-input guard
  if (f_i.outputs.empty()) return false;
  for (const auto& input : f_j.inputs) {
    bool matched = false;
    for (const auto& output : f_i.outputs) {
      if (similarity(input.name, output.name, cfg, stats) >= cfg.alpha) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

namespace {

// similarity() over pre-tokenized names with a pair cache, for the all-pairs scan
struct SimCache {
  const SimilarityConfig& cfg;
  const TermStats& stats;
  std::unordered_map<std::string, TokenList> tokens;
  std::unordered_map<std::string, double> pair_sim;

  const TokenList& tokenized(const std::string& name) {
    auto it = tokens.find(name);
    if (it != tokens.end()) return it->second;
    return tokens.emplace(name, pipeline(name)).first->second;
  }

  double sim(const std::string& a, const std::string& b) {
    const std::string& lo = a <= b ? a : b;
    const std::string& hi = a <= b ? b : a;
    std::string key = lo + "\x1f" + hi;
    auto it = pair_sim.find(key);
    if (it != pair_sim.end()) return it->second;
    const TokenList& ta = tokenized(lo);
    const TokenList& tb = tokenized(hi);
    double value = 0.0;
    if (!ta.empty() && !tb.empty())
      value = 0.5 * (directed_sim(ta, tb, cfg, stats) + directed_sim(tb, ta, cfg, stats));
    pair_sim.emplace(std::move(key), value);
    return value;
  }

  bool depends(const OperationRecord& f_i, const OperationRecord& f_j, double alpha) {
    if (f_j.inputs.empty() || f_i.outputs.empty()) return false;
    for (const auto& input : f_j.inputs) {
      bool matched = false;
      for (const auto& output : f_i.outputs) {
        if (sim(input.name, output.name) >= alpha) {
          matched = true;
          break;
        }
      }
      if (!matched) return false;
    }
    return true;
  }
};

}  // namespace

DependencyGraph build_dependency_graph(const Store& store, const SimilarityConfig& cfg) {
  const auto& services = store.services();
  if (services.empty()) fail(Errc::EmptyCorpus, "store has no services");

  // CorpusNGD needs term frequencies; ExactStem ignores them.
  TermStats stats;
  if (cfg.method == SimMethod::CorpusNGD) stats = store.term_stats(RepKind::B);

  SimCache cache{cfg, stats, {}, {}};

  DependencyGraph graph;
  for (const auto& [id, svc] : services) {
    (void)svc;
    graph.nodes.insert(id);
  }

  for (const auto& [provider_id, provider] : services) {
    for (const auto& [consumer_id, consumer] : services) {
      if (provider_id == consumer_id) continue;
      bool dependent = false;
      for (const auto& f_i : provider.operations) {
        for (const auto& f_j : consumer.operations) {
          if (cache.depends(f_i, f_j, cfg.alpha)) {
            dependent = true;
            break;
          }
        }
        if (dependent) break;
      }
      if (dependent) graph.edges.insert({provider_id, consumer_id});
    }
  }
  return graph;
}

}  // namespace wsdisco
