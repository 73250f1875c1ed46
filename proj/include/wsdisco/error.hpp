#pragma once

#include <stdexcept>
#include <string>

namespace wsdisco {

enum class Errc {
  ParseError,
  UnsupportedVersion,
  ManifestError,
  NotFound,
  ReferentialIntegrity,
  EmptyCorpus,
  RuleSyntaxError,
  DuplicateRuleId,
  NoRatings,
  DegenerateWeights,
  NotInGraph,
  InconsistentStats,
  BudgetExceeded,
  EmptyRetrieval,
  EmptyRelevantSet,
  NoSymbolicReputation,
  UnknownCategory,
  MissingRepresentation,
  StoreLocked,
  IoError,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::UnsupportedVersion: return "UnsupportedVersion";
    case Errc::ManifestError: return "ManifestError";
    case Errc::NotFound: return "NotFound";
    case Errc::ReferentialIntegrity: return "ReferentialIntegrity";
    case Errc::EmptyCorpus: return "EmptyCorpus";
    case Errc::RuleSyntaxError: return "RuleSyntaxError";
    case Errc::DuplicateRuleId: return "DuplicateRuleId";
    case Errc::NoRatings: return "NoRatings";
    case Errc::DegenerateWeights: return "DegenerateWeights";
    case Errc::NotInGraph: return "NotInGraph";
    case Errc::InconsistentStats: return "InconsistentStats";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::EmptyRetrieval: return "EmptyRetrieval";
    case Errc::EmptyRelevantSet: return "EmptyRelevantSet";
    case Errc::NoSymbolicReputation: return "NoSymbolicReputation";
    case Errc::UnknownCategory: return "UnknownCategory";
    case Errc::MissingRepresentation: return "MissingRepresentation";
    case Errc::StoreLocked: return "StoreLocked";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

// Domain error carrying a machine-readable code next to the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace wsdisco
