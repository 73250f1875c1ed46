#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wsdisco/representation.hpp"
#include "wsdisco/store.hpp"

namespace wsdisco {

// |retrieved ∩ relevant| / |retrieved|; EmptyRetrieval when nothing was retrieved.
double precision(const std::set<std::string>& retrieved, const std::set<std::string>& relevant);

// |retrieved ∩ relevant| / |relevant|; EmptyRelevantSet when the category is empty.
double recall(const std::set<std::string>& retrieved, const std::set<std::string>& relevant);

struct EvalCell {
  std::string category;
  RepKind kind = RepKind::B;
  std::optional<double> precision_pct;  // undefined on empty retrieval
  double recall_pct = 0.0;
};

struct ExperimentReport {
  std::vector<std::string> categories;
  std::vector<RepKind> kinds;
  std::vector<EvalCell> cells;  // category-major, kind order as given
  int undefined_cells = 0;

  const EvalCell& cell(const std::string& category, RepKind kind) const;
  // Column averages over defined cells; nullopt when every cell is undefined.
  std::optional<double> average_precision(RepKind kind) const;
  double average_recall(RepKind kind) const;
};

// One discovery run per (category, kind) with the category name as the
// query, no threshold and no cap; precision/recall against the labeled set.
// Throws UnknownCategory / MissingRepresentation for bad inputs.
ExperimentReport run_category_experiment(const Store& store,
                                         const std::vector<std::string>& categories,
                                         const std::vector<RepKind>& kinds,
                                         const std::string& query_template = "{category}");

std::string to_csv(const ExperimentReport& report);
std::string to_markdown(const ExperimentReport& report);

}  // namespace wsdisco
