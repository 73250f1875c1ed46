#include "wsdisco/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "wsdisco/error.hpp"
#include "wsdisco/porter.hpp"

namespace wsdisco {

namespace {

// Snowball English stopword list: function words only, so content-ish words
// like "system" or "bill" survive into representations.
constexpr std::string_view kGeneralStoplist = R"(i
me
my
myself
we
our
ours
ourselves
you
your
yours
yourself
yourselves
he
him
his
himself
she
her
hers
herself
it
its
itself
they
them
their
theirs
themselves
what
which
who
whom
this
that
these
those
am
is
are
was
were
be
been
being
have
has
had
having
do
does
did
doing
a
an
the
and
but
if
or
because
as
until
while
of
at
by
for
with
about
against
between
into
through
during
before
after
above
below
to
from
up
down
in
out
on
off
over
under
again
further
then
once
here
there
when
where
why
how
all
any
both
each
few
more
most
other
some
such
no
nor
not
only
own
same
so
than
too
very
s
t
can
will
just
don
should
now
)";

// WSDL boilerplate that would otherwise dominate every representation.
constexpr std::string_view kBoilerplateStoplist = R"(get
set
all
request
response
result
soap
http
type
array
of
string
int
return
new
input
output
service
web
)";

std::string lower_ascii(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

bool is_word_byte(unsigned char c) {
  return std::isalnum(c) || c >= 0x80;
}

enum class CharClass { Lower, Upper, Digit, Other };

CharClass classify(unsigned char c) {
  if (c >= 0x80) return CharClass::Lower;  // UTF-8 continuation bytes stay inside words
  if (std::isdigit(c)) return CharClass::Digit;
  if (std::isupper(c)) return CharClass::Upper;
  if (std::isalpha(c)) return CharClass::Lower;
  return CharClass::Other;
}

// Named/numeric character references worth decoding before punctuation removal.
std::string decode_entities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '&') {
      std::size_t semi = text.find(';', i + 1);
      if (semi != std::string_view::npos && semi - i <= 8) {
        std::string_view name = text.substr(i + 1, semi - i - 1);
        if (name == "amp") { out += '&'; i = semi + 1; continue; }
        if (name == "lt") { out += '<'; i = semi + 1; continue; }
        if (name == "gt") { out += '>'; i = semi + 1; continue; }
        if (name == "quot") { out += '"'; i = semi + 1; continue; }
        if (name == "apos") { out += '\''; i = semi + 1; continue; }
        if (name == "nbsp" || (!name.empty() && name[0] == '#')) {
          out += ' ';
          i = semi + 1;
          continue;
        }
      }
    }
    out += text[i];
    ++i;
  }
  return out;
}

}  // namespace

Stoplist Stoplist::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open stoplist: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

Stoplist Stoplist::from_text(std::string_view text) {
  Stoplist list;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (!line.empty() && line[0] != '#') list.words_.insert(lower_ascii(line));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return list;
}

bool Stoplist::contains(std::string_view token) const {
  return words_.count(lower_ascii(token)) != 0;
}

const Stoplist& default_general_stoplist() {
  static const Stoplist list = Stoplist::from_text(kGeneralStoplist);
  return list;
}

const Stoplist& default_boilerplate_stoplist() {
  static const Stoplist list = Stoplist::from_text(kBoilerplateStoplist);
  return list;
}

std::string_view default_general_stoplist_text() { return kGeneralStoplist; }
std::string_view default_boilerplate_stoplist_text() { return kBoilerplateStoplist; }

std::string strip_markup(std::string_view text) {
  std::string no_tags;
  no_tags.reserve(text.size());
  bool in_tag = false;
  for (char c : text) {
    if (in_tag) {
      if (c == '>') in_tag = false;
      continue;
    }
    if (c == '<') {
      in_tag = true;
      no_tags += ' ';
      continue;
    }
    no_tags += c;
  }

  std::string decoded = decode_entities(no_tags);

  std::string out;
  out.reserve(decoded.size());
  for (std::size_t i = 0; i < decoded.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(decoded[i]);
    if (is_word_byte(c)) {
      out += static_cast<char>(c);
    } else if (c == '-' && i > 0 && i + 1 < decoded.size() &&
               is_word_byte(static_cast<unsigned char>(decoded[i - 1])) &&
               is_word_byte(static_cast<unsigned char>(decoded[i + 1]))) {
      out += '-';
    } else {
      out += ' ';
    }
  }

  std::string collapsed;
  collapsed.reserve(out.size());
  bool pending_space = false;
  for (char c : out) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      pending_space = !collapsed.empty();
      continue;
    }
    if (pending_space) {
      collapsed += ' ';
      pending_space = false;
    }
    collapsed += c;
  }
  return collapsed;
}

TokenList split_identifier(std::string_view ident) {
  TokenList pieces;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      pieces.push_back(current);
      current.clear();
    }
  };

  std::size_t n = ident.size();
  for (std::size_t i = 0; i < n; ++i) {
    unsigned char c = static_cast<unsigned char>(ident[i]);
    CharClass cls = classify(c);
    if (cls == CharClass::Other || cls == CharClass::Digit) {
      flush();  // delimiters and digit runs end the current piece
      continue;
    }
    if (!current.empty()) {
      CharClass prev = classify(static_cast<unsigned char>(current.back()));
      if (prev == CharClass::Lower && cls == CharClass::Upper) {
        flush();
      } else if (prev == CharClass::Upper && cls == CharClass::Lower && current.size() > 1) {
        // end of an ALL-CAPS run: its last letter starts the next word
        char head = current.back();
        current.pop_back();
        flush();
        current += head;
      }
    }
    current += static_cast<char>(c);
  }
  flush();
  return pieces;
}

TokenList remove_stopwords(const TokenList& tokens, const Stoplist& general,
                           const Stoplist& boilerplate) {
  TokenList kept;
  kept.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (general.contains(t) || boilerplate.contains(t)) continue;
    kept.push_back(t);
  }
  return kept;
}

std::string stem(std::string_view token) { return porter_stem(token); }

TokenList pipeline(std::string_view text, const Stoplist& general,
                   const Stoplist& boilerplate) {
  std::string clean = strip_markup(text);

  TokenList words;
  std::size_t pos = 0;
  while (pos < clean.size()) {
    std::size_t space = clean.find(' ', pos);
    if (space == std::string::npos) space = clean.size();
    if (space > pos) {
      for (auto& piece : split_identifier(std::string_view(clean).substr(pos, space - pos)))
        words.push_back(std::move(piece));
    }
    pos = space + 1;
  }

  TokenList content = remove_stopwords(words, general, boilerplate);

  TokenList out;
  out.reserve(content.size());
  for (const auto& token : content) {
    std::string stemmed = stem(token);
    if (stemmed.empty()) continue;
    if (general.contains(stemmed) || boilerplate.contains(stemmed)) continue;
    out.push_back(std::move(stemmed));
  }
  return out;
}

TokenList pipeline(std::string_view text) {
  return pipeline(text, default_general_stoplist(), default_boilerplate_stoplist());
}

}  // namespace wsdisco
