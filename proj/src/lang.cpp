#include "wsdisco/lang.hpp"

#include <array>
#include <cctype>
#include <unordered_set>
#include <vector>

#include "wsdisco/text.hpp"

namespace wsdisco {

namespace {

struct LangList {
  const char* code;
  const char* words;  // space separated
};

// Compact function-word lists for the competitor languages. Words that also
// appear in the English list are left out so shared articles cannot flip a
// borderline English text.
constexpr std::array<LangList, 7> kCompetitors = {{
    {"de",
     "der das und ist sind ein eine einen einem dem den mit werden wird nicht "
     "sich auch bei aus als oder aber eines zur zum über für von einer dieser "
     "diese dieses sowie wurde sein ihre"},
    {"es",
     "el los las un una unas unos y es son para con del que se por su al lo "
     "como pero sus le ya este esta estos estas ser han hay entre sin sobre "
     "también cuando"},
    {"fr",
     "le la les des du de et est sont pour dans sur avec ce cette ces qui que "
     "quoi dont il elle ils elles nous vous je tu ne pas plus par au aux si "
     "son sa ses leur mais ou une"},
    {"it",
     "il lo gli le un una e sono per con di della che non si da al alla come "
     "più ma anche questo questa nel nella sul alle dei delle degli essere "
     "stato può"},
    {"nl",
     "het een zijn van voor met niet aan ook als bij uit dit dat die wordt "
     "worden deze naar werd hebben heeft kan zich tot onder tussen"},
    {"pt",
     "os um uma e é são para em com de do da que não se por seu ao como mais "
     "mas este esta foi pela pelo dos das nos nas uma ser há entre sem"},
    {"sv",
     "och det att en ett som den är på av för med till inte om man kan ska "
     "har hade vid efter under mellan denna detta dessa"},
}};

std::vector<std::string> word_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalpha(c) || c >= 0x80) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(current);
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(current);
  return tokens;
}

std::unordered_set<std::string> split_words(const char* words) {
  std::unordered_set<std::string> out;
  std::string current;
  for (const char* p = words;; ++p) {
    if (*p == ' ' || *p == '\0') {
      if (!current.empty()) out.insert(current);
      current.clear();
      if (*p == '\0') break;
    } else {
      current.push_back(*p);
    }
  }
  return out;
}

using LangSets = std::vector<std::pair<std::string, std::unordered_set<std::string>>>;

const LangSets& competitor_sets() {
  static const LangSets sets = [] {
    LangSets out;
    for (const auto& lang : kCompetitors) out.emplace_back(lang.code, split_words(lang.words));
    return out;
  }();
  return sets;
}

}  // namespace

std::string detect_language(std::string_view text, double en_threshold) {
  std::vector<std::string> tokens = word_tokens(text);
  if (tokens.empty()) return "unknown";

  const Stoplist& english = default_general_stoplist();
  std::size_t en_hits = 0;
  for (const auto& t : tokens)
    if (english.contains(t)) ++en_hits;
  double total = static_cast<double>(tokens.size());
  if (static_cast<double>(en_hits) / total > en_threshold) return "en";

  std::string best_code;
  double best_ratio = 0.0;
  for (const auto& [code, words] : competitor_sets()) {
    std::size_t hits = 0;
    for (const auto& t : tokens)
      if (words.count(t)) ++hits;
    double ratio = static_cast<double>(hits) / total;
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best_code = code;
    }
  }
  if (best_ratio > 0.0) return best_code;
  return "unknown";
}

}  // namespace wsdisco
