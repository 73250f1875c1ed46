#include "wsdisco/rbtt.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "wsdisco/error.hpp"

namespace wsdisco {

namespace {

const std::unordered_set<std::string>& determiners() {
  static const std::unordered_set<std::string> set = {
      "the", "a", "an", "this", "that", "these", "those"};
  return set;
}

const std::unordered_set<std::string>& relative_pronouns() {
  static const std::unordered_set<std::string> set = {"which", "who", "whom", "whose"};
  return set;
}

const std::unordered_set<std::string>& verb_stems() {
  static const std::unordered_set<std::string> set = {
      "am",       "is",       "are",      "was",      "were",    "be",       "been",
      "being",    "has",      "have",     "had",      "do",      "does",     "did",
      "done",     "can",      "could",    "will",     "would",   "shall",    "should",
      "may",      "might",    "must",     "use",      "provide", "allow",    "enable",
      "offer",    "return",   "send",     "receive",  "give",    "take",     "make",
      "deliver",  "serve",    "validate", "verify",   "convert", "compute",  "calculate",
      "process",  "handle",   "support",  "manage",   "create",  "generate", "retrieve",
      "search",   "find",     "store",    "save",     "load",    "query",    "respond",
      "perform",  "group",    "relate",   "report",   "describe","define",   "contain",
      "include",  "accept",   "check",    "call",     "run",     "work",     "help",
      "need",     "want",     "know",     "see",      "say",     "go",       "come",
      "look",     "publish",  "subscribe","update",   "expose",  "implement","track",
      "monitor",  "notify",   "operate",  "connect",  "submit",  "fetch",    "translate",
      "deploy",   "access",   "attach",   "arrive",   "link",    "follow",   "happen"};
  return set;
}

bool is_word_byte(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

bool is_sentence_punct(const std::string& s) {
  return s == "." || s == "!" || s == "?";
}

Pos classify_punct(char c) {
  switch (c) {
    case '.': case ',': case ';': case ':': case '!': case '?':
    case '(': case ')': case '"': case '\'':
      return Pos::PUNCT;
    default:
      return Pos::SYM;
  }
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool looks_like_verb(const std::string& lemma) {
  const auto& stems = verb_stems();
  if (stems.count(lemma)) return true;
  auto try_bases = [&](std::string_view suffix, bool restore_e, bool undouble) {
    if (lemma.size() <= suffix.size() || !lemma.ends_with(suffix)) return false;
    std::string base = lemma.substr(0, lemma.size() - suffix.size());
    if (stems.count(base)) return true;
    if (restore_e && stems.count(base + "e")) return true;
    if (undouble && base.size() >= 2 && base[base.size() - 1] == base[base.size() - 2] &&
        stems.count(base.substr(0, base.size() - 1)))
      return true;
    return false;
  };
  if (try_bases("ing", true, true)) return true;
  if (try_bases("ed", true, true)) return true;
  if (try_bases("es", false, false)) return true;
  if (try_bases("s", false, false)) return true;
  return false;
}

Pos tag_word(const std::string& lemma) {
  if (determiners().count(lemma)) return Pos::DT;
  if (relative_pronouns().count(lemma)) return Pos::PRP_REL;
  if (looks_like_verb(lemma)) return Pos::VERB;
  return Pos::NOUN;
}

// Shipped base rule set, reconstructed from the two worked examples plus
// common trigger phrases. A versioned project asset, overridable by file.
constexpr std::string_view kDefaultRules =
    R"(# namews: product names ahead of "web service" / "webservice"
nws.para      namews  trigger=<flag:startPara>                 stop=<lemma:web+lemma:service,lemma:webservice>  constraints=<forbid_single_determiner,max_tokens:6>
nws.sent      namews  trigger=<flag:startSentence>             stop=<lemma:web+lemma:service,lemma:webservice>  constraints=<forbid_single_determiner,max_tokens:6>
nws.called    namews  trigger=<lemma:called>                   stop=<punct:any,lemma:web+lemma:service>         constraints=<forbid_single_determiner,max_tokens:6>
nws.known     namews  trigger=<lemma:known+lemma:as>           stop=<punct:any,lemma:web+lemma:service>         constraints=<forbid_single_determiner,max_tokens:6>
nws.welcome   namews  trigger=<lemma:welcome+lemma:to>         stop=<punct:any,lemma:web+lemma:service>         constraints=<forbid_single_determiner,max_tokens:6>
# purpose: what the service does
pur.provides  purpose trigger=<lemma:provides>                 stop=<punct:any,pos:PRP_REL>                     constraints=<max_tokens:12>
pur.allows    purpose trigger=<lemma:allows>                   stop=<punct:any,pos:PRP_REL>                     constraints=<max_tokens:12>
pur.enables   purpose trigger=<lemma:enables>                  stop=<punct:any,pos:PRP_REL>                     constraints=<max_tokens:12>
pur.offers    purpose trigger=<lemma:offers>                   stop=<punct:any,pos:PRP_REL>                     constraints=<max_tokens:12>
pur.designed  purpose trigger=<lemma:designed+lemma:to>        stop=<punct:any,pos:PRP_REL>                     constraints=<max_tokens:12>
# domain: where the service is used
dom.usedtofor domain  trigger=<lemma:used+lemma:to+lemma:for>  stop=<punct:any,pos:PRP_REL>                     constraints=<max_tokens:8>
dom.usedfor   domain  trigger=<lemma:used+lemma:for>           stop=<punct:any,pos:PRP_REL>                     constraints=<max_tokens:8>
dom.usedin    domain  trigger=<lemma:used+lemma:in>            stop=<punct:any,pos:PRP_REL>                     constraints=<max_tokens:8>
dom.domainof  domain  trigger=<lemma:domain+lemma:of>          stop=<punct:any,pos:PRP_REL>                     constraints=<max_tokens:8>
)";

Pos pos_from(std::string_view s, const std::string& origin, std::size_t line_no) {
  if (s == "DT") return Pos::DT;
  if (s == "PRP_REL") return Pos::PRP_REL;
  if (s == "VERB") return Pos::VERB;
  if (s == "NOUN") return Pos::NOUN;
  if (s == "PUNCT") return Pos::PUNCT;
  if (s == "SYM") return Pos::SYM;
  if (s == "OTHER") return Pos::OTHER;
  fail(Errc::RuleSyntaxError,
       origin + ":" + std::to_string(line_no) + ": unknown pos class '" + std::string(s) + "'");
}

Matcher parse_matcher(std::string_view spec, const std::string& origin, std::size_t line_no) {
  Matcher m;
  if (spec.rfind("lemma:", 0) == 0) {
    m.kind = Matcher::Kind::Lemma;
    m.lemma = lower_ascii(spec.substr(6));
    if (m.lemma.empty())
      fail(Errc::RuleSyntaxError, origin + ":" + std::to_string(line_no) + ": empty lemma");
    return m;
  }
  if (spec.rfind("pos:", 0) == 0) {
    m.kind = Matcher::Kind::Pos;
    m.pos = pos_from(spec.substr(4), origin, line_no);
    return m;
  }
  if (spec == "flag:startPara") {
    m.kind = Matcher::Kind::FlagStartPara;
    return m;
  }
  if (spec == "flag:startSentence") {
    m.kind = Matcher::Kind::FlagStartSentence;
    return m;
  }
  if (spec == "punct:any") {
    m.kind = Matcher::Kind::PunctAny;
    return m;
  }
  fail(Errc::RuleSyntaxError,
       origin + ":" + std::to_string(line_no) + ": unknown matcher '" + std::string(spec) + "'");
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

std::vector<MatcherSeq> parse_alternatives(std::string_view value, const std::string& origin,
                                           std::size_t line_no) {
  std::vector<MatcherSeq> alts;
  for (std::string_view alt : split_on(value, ',')) {
    MatcherSeq seq;
    for (std::string_view item : split_on(alt, '+')) {
      if (item.empty())
        fail(Errc::RuleSyntaxError, origin + ":" + std::to_string(line_no) + ": empty matcher");
      seq.push_back(parse_matcher(item, origin, line_no));
    }
    alts.push_back(std::move(seq));
  }
  if (alts.empty())
    fail(Errc::RuleSyntaxError, origin + ":" + std::to_string(line_no) + ": empty matcher list");
  return alts;
}

// value inside <...> for key=<...>
std::string_view angle_value(std::string_view field, std::string_view key,
                             const std::string& origin, std::size_t line_no) {
  if (field.substr(0, key.size()) != key || field.substr(key.size(), 2) != "=<" ||
      field.back() != '>')
    fail(Errc::RuleSyntaxError, origin + ":" + std::to_string(line_no) + ": expected " +
                                    std::string(key) + "=<...>, got '" + std::string(field) + "'");
  return field.substr(key.size() + 2, field.size() - key.size() - 3);
}

void parse_constraints(std::string_view value, TagRule& rule, const std::string& origin,
                       std::size_t line_no) {
  for (std::string_view c : split_on(value, ',')) {
    if (c == "forbid_single_determiner") {
      rule.forbid_single_determiner = true;
      continue;
    }
    auto numeric = [&](std::string_view name) -> int {
      std::string_view rest;
      if (c.rfind(std::string(name) + ":", 0) == 0) {
        rest = c.substr(name.size() + 1);
      } else if (c.rfind(std::string(name) + "(", 0) == 0 && c.back() == ')') {
        rest = c.substr(name.size() + 1, c.size() - name.size() - 2);
      } else {
        return -1;
      }
      int n = 0;
      for (char ch : rest) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          fail(Errc::RuleSyntaxError,
               origin + ":" + std::to_string(line_no) + ": bad number in '" + std::string(c) + "'");
        n = n * 10 + (ch - '0');
      }
      return n;
    };
    if (int n = numeric("min_tokens"); n >= 0) {
      rule.min_tokens = n;
      continue;
    }
    if (int n = numeric("max_tokens"); n >= 0) {
      rule.max_tokens = n;
      continue;
    }
    fail(Errc::RuleSyntaxError,
         origin + ":" + std::to_string(line_no) + ": unknown constraint '" + std::string(c) + "'");
  }
}

}  // namespace

const char* to_string(Pos p) {
  switch (p) {
    case Pos::DT: return "DT";
    case Pos::PRP_REL: return "PRP_REL";
    case Pos::VERB: return "VERB";
    case Pos::NOUN: return "NOUN";
    case Pos::PUNCT: return "PUNCT";
    case Pos::SYM: return "SYM";
    case Pos::OTHER: return "OTHER";
  }
  return "OTHER";
}

const char* to_string(RuleType t) {
  switch (t) {
    case RuleType::Namews: return "namews";
    case RuleType::Purpose: return "purpose";
    case RuleType::Domain: return "domain";
  }
  return "namews";
}

RuleType rule_type_from(std::string_view s) {
  if (s == "purpose") return RuleType::Purpose;
  if (s == "domain") return RuleType::Domain;
  return RuleType::Namews;
}

std::vector<TaggedToken> tokenize_tag(std::string_view text) {
  std::vector<TaggedToken> tokens;
  bool next_para = true;
  bool next_sentence = true;
  int newlines_seen = 0;

  auto push_word = [&](std::string surface) {
    TaggedToken tok;
    tok.lemma = lower_ascii(surface);
    tok.surface = std::move(surface);
    tok.pos = tag_word(tok.lemma);
    tok.start_para = next_para;
    tok.start_sentence = next_para || next_sentence;
    next_para = false;
    next_sentence = false;
    tokens.push_back(std::move(tok));
  };

  auto push_punct = [&](char c) {
    TaggedToken tok;
    tok.surface = std::string(1, c);
    tok.lemma = tok.surface;
    tok.pos = classify_punct(c);
    tok.start_para = next_para;
    tok.start_sentence = next_para || next_sentence;
    next_para = false;
    next_sentence = false;
    if (is_sentence_punct(tok.surface)) next_sentence = true;
    tokens.push_back(std::move(tok));
  };

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      if (c == '\n' && ++newlines_seen >= 2) next_para = true;
      ++i;
      continue;
    }
    newlines_seen = 0;
    if (is_word_byte(c)) {
      std::size_t start = i;
      while (i < n) {
        unsigned char cur = static_cast<unsigned char>(text[i]);
        if (is_word_byte(cur)) {
          ++i;
        } else if (cur == '-' && i > start && i + 1 < n &&
                   is_word_byte(static_cast<unsigned char>(text[i + 1]))) {
          ++i;  // hyphenated words stay whole
        } else {
          break;
        }
      }
      push_word(std::string(text.substr(start, i - start)));
    } else {
      push_punct(static_cast<char>(c));
      ++i;
    }
  }
  return tokens;
}

std::vector<TagRule> parse_rules(std::string_view text, const std::string& origin) {
  std::vector<TagRule> rules;
  std::unordered_set<std::string> seen_ids;

  std::size_t line_no = 0;
  for (std::string_view line : split_on(text, '\n')) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line[0] == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
      if (end > pos) fields.push_back(line.substr(pos, end - pos));
      pos = end;
    }
    if (fields.size() < 4)
      fail(Errc::RuleSyntaxError,
           origin + ":" + std::to_string(line_no) + ": expected id TYPE trigger=<...> stop=<...>");

    TagRule rule;
    rule.id = std::string(fields[0]);
    if (!seen_ids.insert(rule.id).second)
      fail(Errc::DuplicateRuleId,
           origin + ":" + std::to_string(line_no) + ": duplicate rule id '" + rule.id + "'");

    if (fields[1] == "namews") rule.rule_type = RuleType::Namews;
    else if (fields[1] == "purpose") rule.rule_type = RuleType::Purpose;
    else if (fields[1] == "domain") rule.rule_type = RuleType::Domain;
    else
      fail(Errc::RuleSyntaxError, origin + ":" + std::to_string(line_no) + ": unknown rule type '" +
                                      std::string(fields[1]) + "'");

    rule.trigger = parse_alternatives(angle_value(fields[2], "trigger", origin, line_no), origin, line_no);
    rule.stop = parse_alternatives(angle_value(fields[3], "stop", origin, line_no), origin, line_no);
    for (std::size_t f = 4; f < fields.size(); ++f)
      parse_constraints(angle_value(fields[f], "constraints", origin, line_no), rule, origin, line_no);

    rules.push_back(std::move(rule));
  }
  return rules;
}

std::vector<TagRule> load_rules(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open rule file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rules(buf.str(), path);
}

std::string_view default_rules_text() { return kDefaultRules; }

const std::vector<TagRule>& default_rules() {
  static const std::vector<TagRule> rules = parse_rules(kDefaultRules, "<builtin>");
  return rules;
}

namespace {

// Returns the position after the trigger, or -1 when it does not match at i.
int match_trigger(const std::vector<TaggedToken>& tokens, const MatcherSeq& seq, int i) {
  int p = i;
  const int n = static_cast<int>(tokens.size());
  for (const Matcher& m : seq) {
    if (p >= n) return -1;
    const TaggedToken& tok = tokens[static_cast<std::size_t>(p)];
    switch (m.kind) {
      case Matcher::Kind::FlagStartPara:
        if (!tok.start_para) return -1;
        break;
      case Matcher::Kind::FlagStartSentence:
        if (!tok.start_sentence) return -1;
        break;
      case Matcher::Kind::Lemma:
        if (tok.lemma != m.lemma) return -1;
        ++p;
        break;
      case Matcher::Kind::Pos:
        if (tok.pos != m.pos) return -1;
        ++p;
        break;
      case Matcher::Kind::PunctAny:
        if (tok.pos != Pos::PUNCT) return -1;
        ++p;
        break;
    }
  }
  return p;
}

bool stop_fires_at(const std::vector<TaggedToken>& tokens, const std::vector<MatcherSeq>& stops,
                   int p) {
  const int n = static_cast<int>(tokens.size());
  if (p >= n) {
    // end of input counts as a punctuation boundary
    for (const MatcherSeq& alt : stops)
      if (alt.size() == 1 && alt.front().kind == Matcher::Kind::PunctAny) return true;
    return false;
  }
  for (const MatcherSeq& alt : stops) {
    int q = p;
    bool ok = true;
    for (const Matcher& m : alt) {
      if (q >= n) {
        ok = false;
        break;
      }
      const TaggedToken& tok = tokens[static_cast<std::size_t>(q)];
      switch (m.kind) {
        case Matcher::Kind::FlagStartPara:
          if (!tok.start_para) ok = false;
          break;
        case Matcher::Kind::FlagStartSentence:
          if (!tok.start_sentence) ok = false;
          break;
        case Matcher::Kind::Lemma:
          if (tok.lemma != m.lemma) ok = false;
          else ++q;
          break;
        case Matcher::Kind::Pos:
          if (tok.pos != m.pos) ok = false;
          else ++q;
          break;
        case Matcher::Kind::PunctAny:
          if (tok.pos != Pos::PUNCT) ok = false;
          else ++q;
          break;
      }
      if (!ok) break;
    }
    if (ok) return true;
  }
  return false;
}

struct SpanCandidate {
  std::size_t rule_idx;
  int start;
  int end;
};

}  // namespace

std::vector<Annotation> apply_rules(const std::vector<TaggedToken>& tokens,
                                    const std::vector<TagRule>& rules) {
  const int n = static_cast<int>(tokens.size());
  std::vector<SpanCandidate> candidates;

  for (std::size_t ri = 0; ri < rules.size(); ++ri) {
    const TagRule& rule = rules[ri];
    for (int i = 0; i < n; ++i) {
      int span_start = -1;
      for (const MatcherSeq& alt : rule.trigger) {
        span_start = match_trigger(tokens, alt, i);
        if (span_start >= 0) break;
      }
      if (span_start < 0) continue;

      int p = span_start;
      int span_end = -1;
      while (true) {
        if (stop_fires_at(tokens, rule.stop, p)) {
          span_end = p;
          break;
        }
        if (p >= n) break;
        ++p;
      }
      if (span_end < 0) continue;

      int len = span_end - span_start;
      if (len < 1 || len < rule.min_tokens) continue;
      if (rule.max_tokens > 0 && len > rule.max_tokens) continue;
      if (rule.forbid_single_determiner && len == 1 &&
          tokens[static_cast<std::size_t>(span_start)].pos == Pos::DT)
        continue;
      candidates.push_back({ri, span_start, span_end});
    }
  }

  // first-rule-wins across rules, longest span within a rule
  std::vector<SpanCandidate> order = candidates;
  std::sort(order.begin(), order.end(), [](const SpanCandidate& a, const SpanCandidate& b) {
    if (a.rule_idx != b.rule_idx) return a.rule_idx < b.rule_idx;
    int la = a.end - a.start, lb = b.end - b.start;
    if (la != lb) return la > lb;
    return a.start < b.start;
  });

  std::vector<SpanCandidate> accepted;
  for (const SpanCandidate& c : order) {
    bool overlaps = false;
    for (const SpanCandidate& a : accepted) {
      if (c.start < a.end && a.start < c.end) {
        overlaps = true;
        break;
      }
    }
    if (!overlaps) accepted.push_back(c);
  }
  std::sort(accepted.begin(), accepted.end(), [](const SpanCandidate& a, const SpanCandidate& b) {
    if (a.start != b.start) return a.start < b.start;
    return a.rule_idx < b.rule_idx;
  });

  std::vector<Annotation> annotations;
  for (const SpanCandidate& c : accepted) {
    Annotation ann;
    ann.rule_type = rules[c.rule_idx].rule_type;
    ann.rule_id = rules[c.rule_idx].id;
    ann.start = c.start;
    ann.end = c.end;
    for (int t = c.start; t < c.end; ++t) {
      if (t > c.start) ann.text += ' ';
      ann.text += tokens[static_cast<std::size_t>(t)].surface;
    }
    annotations.push_back(std::move(ann));
  }
  return annotations;
}

Representation build_rbtt_representation(const std::vector<Annotation>& annotations,
                                         const ServiceRecord& service, const Stoplist& general,
                                         const Stoplist& boilerplate) {
  if (annotations.empty()) {
    Representation rep = build_baseline(service, general, boilerplate);
    rep.kind = RepKind::RBTT;
    return rep;
  }
  std::string joined;
  for (const auto& ann : annotations) {
    if (!joined.empty()) joined += ' ';
    joined += ann.text;
  }
  Representation rep;
  rep.service_id = service.id;
  rep.kind = RepKind::RBTT;
  for (const auto& term : pipeline(joined, general, boilerplate)) rep.terms[term] += 1.0;
  return rep;
}

Representation build_rbtt_representation(const std::vector<Annotation>& annotations,
                                         const ServiceRecord& service) {
  return build_rbtt_representation(annotations, service, default_general_stoplist(),
                                   default_boilerplate_stoplist());
}

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string export_annotations_xml(const std::vector<Annotation>& annotations,
                                   const std::string& service_id) {
  std::string out = "<ws><id>" + xml_escape(service_id) + "</id>";
  for (const auto& ann : annotations) {
    const char* tag = to_string(ann.rule_type);
    out += "<";
    out += tag;
    out += ">";
    out += xml_escape(ann.text);
    out += "</";
    out += tag;
    out += ">";
  }
  out += "</ws>";
  return out;
}

void update_lexicon(const std::vector<Annotation>& annotations, Lexicon& lexicon) {
  for (const auto& ann : annotations) {
    std::string source = ann.service_id + "/" + ann.rule_id;
    auto it = std::find_if(lexicon.begin(), lexicon.end(), [&](const LexiconEntry& e) {
      return e.term == ann.text && e.rule_type == ann.rule_type;
    });
    if (it == lexicon.end()) {
      lexicon.push_back({ann.text, ann.rule_type, {source}});
      continue;
    }
    auto pos = std::lower_bound(it->sources.begin(), it->sources.end(), source);
    if (pos == it->sources.end() || *pos != source) it->sources.insert(pos, source);
  }
}

}  // namespace wsdisco
