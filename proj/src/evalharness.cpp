#include "wsdisco/evalharness.hpp"

#include <algorithm>
#include <cstdio>

#include "wsdisco/discovery.hpp"
#include "wsdisco/error.hpp"

namespace wsdisco {

namespace {

std::size_t intersection_size(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::size_t n = 0;
  for (const auto& x : a)
    if (b.count(x)) ++n;
  return n;
}

std::string format_pct(double pct) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", pct);
  return buf;
}

std::string substitute(const std::string& templ, const std::string& category) {
  std::string out = templ;
  std::size_t pos = out.find("{category}");
  if (pos == std::string::npos) return category;
  out.replace(pos, std::string("{category}").size(), category);
  return out;
}

}  // namespace

double precision(const std::set<std::string>& retrieved, const std::set<std::string>& relevant) {
  if (retrieved.empty()) fail(Errc::EmptyRetrieval, "precision undefined on empty retrieval");
  return static_cast<double>(intersection_size(retrieved, relevant)) /
         static_cast<double>(retrieved.size());
}

double recall(const std::set<std::string>& retrieved, const std::set<std::string>& relevant) {
  if (relevant.empty()) fail(Errc::EmptyRelevantSet, "recall undefined on empty relevant set");
  return static_cast<double>(intersection_size(retrieved, relevant)) /
         static_cast<double>(relevant.size());
}

const EvalCell& ExperimentReport::cell(const std::string& category, RepKind kind) const {
  for (const auto& c : cells)
    if (c.category == category && c.kind == kind) return c;
  fail(Errc::NotFound, "no cell for " + category + "/" + to_string(kind));
}

std::optional<double> ExperimentReport::average_precision(RepKind kind) const {
  double sum = 0.0;
  int n = 0;
  for (const auto& c : cells) {
    if (c.kind != kind || !c.precision_pct) continue;
    sum += *c.precision_pct;
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

double ExperimentReport::average_recall(RepKind kind) const {
  double sum = 0.0;
  int n = 0;
  for (const auto& c : cells) {
    if (c.kind != kind) continue;
    sum += c.recall_pct;
    ++n;
  }
  return n == 0 ? 0.0 : sum / n;
}

ExperimentReport run_category_experiment(const Store& store,
                                         const std::vector<std::string>& categories,
                                         const std::vector<RepKind>& kinds,
                                         const std::string& query_template) {
  // labeled sets
  std::map<std::string, std::set<std::string>> labeled;
  for (const auto& [id, svc] : store.services())
    if (svc.category) labeled[*svc.category].insert(id);

  for (const auto& category : categories)
    if (!labeled.count(category)) fail(Errc::UnknownCategory, "no services labeled " + category);
  for (RepKind kind : kinds)
    if (store.list_representations(kind).empty())
      fail(Errc::MissingRepresentation,
           std::string("no ") + to_string(kind) + " representations stored");

  ExperimentReport report;
  report.categories = categories;
  report.kinds = kinds;

  for (const auto& category : categories) {
    const std::set<std::string>& relevant = labeled[category];
    for (RepKind kind : kinds) {
      TokenList query_terms = pipeline(substitute(query_template, category));
      std::set<std::string> retrieved;
      for (const auto& match : func_matching_terms(query_terms, kind, 0.0, store))
        retrieved.insert(match.service_id);

      EvalCell cell;
      cell.category = category;
      cell.kind = kind;
      if (retrieved.empty()) {
        ++report.undefined_cells;
      } else {
        cell.precision_pct = 100.0 * precision(retrieved, relevant);
      }
      cell.recall_pct = 100.0 * recall(retrieved, relevant);
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

std::string to_csv(const ExperimentReport& report) {
  std::string out = "category,rep_kind,precision_pct,recall_pct\n";
  for (const auto& c : report.cells) {
    out += c.category;
    out += ',';
    out += to_string(c.kind);
    out += ',';
    if (c.precision_pct) out += format_pct(*c.precision_pct);
    out += ',';
    out += format_pct(c.recall_pct);
    out += '\n';
  }
  for (RepKind kind : report.kinds) {
    out += "Average,";
    out += to_string(kind);
    out += ',';
    if (auto p = report.average_precision(kind)) out += format_pct(*p);
    out += ',';
    out += format_pct(report.average_recall(kind));
    out += '\n';
  }
  return out;
}

std::string to_markdown(const ExperimentReport& report) {
  std::string out = "| Categories |";
  for (RepKind kind : report.kinds) {
    out += " ";
    out += to_string(kind);
    out += " P % | ";
    out += to_string(kind);
    out += " R % |";
  }
  out += "\n|---|";
  for (std::size_t i = 0; i < report.kinds.size(); ++i) out += "---|---|";
  out += "\n";

  for (const auto& category : report.categories) {
    out += "| " + category + " |";
    for (RepKind kind : report.kinds) {
      const EvalCell& c = report.cell(category, kind);
      out += " ";
      out += c.precision_pct ? format_pct(*c.precision_pct) : std::string("—");
      out += " | ";
      out += format_pct(c.recall_pct);
      out += " |";
    }
    out += "\n";
  }

  out += "| Average |";
  for (RepKind kind : report.kinds) {
    auto p = report.average_precision(kind);
    out += " ";
    out += p ? format_pct(*p) : std::string("—");
    out += " | ";
    out += format_pct(report.average_recall(kind));
    out += " |";
  }
  out += "\n";

  if (report.undefined_cells > 0) {
    out += "\n_";
    out += std::to_string(report.undefined_cells);
    out += report.undefined_cells == 1 ? " undefined cell" : " undefined cells";
    out += " (empty retrieval) excluded from the precision averages._\n";
  }
  return out;
}

}  // namespace wsdisco
