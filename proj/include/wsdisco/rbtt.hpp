#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wsdisco/representation.hpp"
#include "wsdisco/text.hpp"
#include "wsdisco/wsdl.hpp"

namespace wsdisco {

enum class Pos { DT, PRP_REL, VERB, NOUN, PUNCT, SYM, OTHER };

const char* to_string(Pos p);

struct TaggedToken {
  std::string surface;
  std::string lemma;  // lowercased surface
  Pos pos = Pos::NOUN;
  bool start_para = false;
  bool start_sentence = false;
};

enum class RuleType { Namews, Purpose, Domain };

const char* to_string(RuleType t);
RuleType rule_type_from(std::string_view s);

// One matcher inside a trigger or stop alternative.
struct Matcher {
  enum class Kind { Lemma, Pos, FlagStartPara, FlagStartSentence, PunctAny };
  Kind kind = Kind::Lemma;
  std::string lemma;  // Kind::Lemma
  Pos pos = Pos::NOUN; // Kind::Pos
};

using MatcherSeq = std::vector<Matcher>;  // '+'-joined sequence

struct TagRule {
  std::string id;
  RuleType rule_type = RuleType::Namews;
  std::vector<MatcherSeq> trigger;  // alternatives
  std::vector<MatcherSeq> stop;     // alternatives
  bool forbid_single_determiner = false;
  int min_tokens = 1;
  int max_tokens = 0;  // 0 = unlimited
};

struct Annotation {
  std::string service_id;
  RuleType rule_type = RuleType::Namews;
  std::string text;   // surface form, original casing
  int start = 0;      // token offsets, [start, end)
  int end = 0;
  std::string rule_id;
};

struct LexiconEntry {
  std::string term;
  RuleType rule_type = RuleType::Namews;
  std::vector<std::string> sources;  // sorted "service_id/rule_id" keys
  std::uint64_t frequency() const { return sources.size(); }
};

using Lexicon = std::vector<LexiconEntry>;

// Whitespace/punctuation tokenization keeping hyphenated words whole, with a
// closed-class lexicon plus verb-suffix heuristics for tagging. Sentences
// start after . ! ? and paragraphs after blank lines and at text start.
std::vector<TaggedToken> tokenize_tag(std::string_view text);

// Rule DSL, one rule per line:
//   id TYPE trigger=<alt,alt,...> stop=<alt,...> [constraints=<c,...>]
// where an alternative is a '+'-joined sequence of matchers: lemma:word,
// flag:startPara, flag:startSentence, pos:DT|PRP_REL|VERB|NOUN|PUNCT|SYM,
// punct:any. Lines starting with '#' are comments.
std::vector<TagRule> load_rules(const std::string& path);
std::vector<TagRule> parse_rules(std::string_view text, const std::string& origin = "<string>");

// The shipped base rule set (a project asset reconstructed from the worked
// examples; overridable by file).
std::string_view default_rules_text();
const std::vector<TagRule>& default_rules();

// Left-to-right scan: a trigger match opens a span that closes at the first
// stop match. Overlaps resolve first-rule-wins, longest-span within a rule.
std::vector<Annotation> apply_rules(const std::vector<TaggedToken>& tokens,
                                    const std::vector<TagRule>& rules);

// Pipeline over the concatenated annotation texts; falls back to the baseline
// representation when the service produced no annotation.
Representation build_rbtt_representation(const std::vector<Annotation>& annotations,
                                         const ServiceRecord& service);
Representation build_rbtt_representation(const std::vector<Annotation>& annotations,
                                         const ServiceRecord& service, const Stoplist& general,
                                         const Stoplist& boilerplate);

// <ws><id>...</id><namews>...</namews>...</ws>, annotations in extraction
// order, no XML declaration.
std::string export_annotations_xml(const std::vector<Annotation>& annotations,
                                   const std::string& service_id);

// Adds or increments each annotation text; idempotent per
// (service_id, rule_id, text) triple.
void update_lexicon(const std::vector<Annotation>& annotations, Lexicon& lexicon);

}  // namespace wsdisco
