#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace wsdisco {

using TokenList = std::vector<std::string>;

// Case-insensitive word list loaded from a one-word-per-line UTF-8 file.
class Stoplist {
 public:
  static Stoplist from_file(const std::string& path);
  static Stoplist from_text(std::string_view text);

  bool contains(std::string_view token) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Built-in defaults; both can be overridden by file through the CLI.
const Stoplist& default_general_stoplist();
const Stoplist& default_boilerplate_stoplist();
std::string_view default_general_stoplist_text();
std::string_view default_boilerplate_stoplist_text();

// Removes markup tags and punctuation, keeping intra-word hyphens, and
// collapses whitespace runs to single spaces.
std::string strip_markup(std::string_view text);

// Splits an identifier at case boundaries, '_' '-' '.', and digit runs.
// Digit runs are dropped; piece casing is preserved; ALL-CAPS runs stay
// single tokens.
TokenList split_identifier(std::string_view ident);

TokenList remove_stopwords(const TokenList& tokens, const Stoplist& general,
                           const Stoplist& boilerplate);

// Lowercase + Porter.
std::string stem(std::string_view token);

// Full text processing: markup removal, word extraction, identifier
// splitting, stopword removal, stemming. Stemmed forms that land back on a
// stopword are dropped as well so the output never contains one.
TokenList pipeline(std::string_view text, const Stoplist& general,
                   const Stoplist& boilerplate);
TokenList pipeline(std::string_view text);

}  // namespace wsdisco
