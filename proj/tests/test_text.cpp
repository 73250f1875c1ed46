#include <random>
#include <string>

#include "doctest.h"
#include "wsdisco/text.hpp"

using namespace wsdisco;

TEST_CASE("strip_markup removes tags and punctuation") {
  CHECK(strip_markup("<b>weather</b> service!") == "weather service");
  CHECK(strip_markup("") == "");
  CHECK(strip_markup("CAPTCHA-image web service") == "CAPTCHA-image web service");
  CHECK(strip_markup("a  \n\t b") == "a b");
  CHECK(strip_markup("x &amp; y") == "x y");
  CHECK(strip_markup("- leading and trailing -") == "leading and trailing");
}

TEST_CASE("split_identifier") {
  CHECK(split_identifier("GetAllCountryCurrenciesResponse") ==
        TokenList{"Get", "All", "Country", "Currencies", "Response"});
  CHECK(split_identifier("") == TokenList{});
  CHECK(split_identifier("weather_report2XML") == TokenList{"weather", "report", "XML"});
  CHECK(split_identifier("XML") == TokenList{"XML"});
  CHECK(split_identifier("parseXMLDocument") == TokenList{"parse", "XML", "Document"});
  CHECK(split_identifier("CAPTCHA-image") == TokenList{"CAPTCHA", "image"});
  CHECK(split_identifier("ICD9") == TokenList{"ICD"});
  CHECK(split_identifier("a.b-c_d") == TokenList{"a", "b", "c", "d"});
}

TEST_CASE("split_identifier keeps letter content") {
  std::mt19937 rng(42);
  const std::string alphabet = "abcXYZ_-.019";
  for (int round = 0; round < 500; ++round) {
    std::string input;
    std::size_t len = rng() % 24;
    for (std::size_t i = 0; i < len; ++i) input += alphabet[rng() % alphabet.size()];

    std::string letters;
    for (char c : input)
      if (std::isalpha(static_cast<unsigned char>(c))) letters += c;

    std::string joined;
    for (const auto& piece : split_identifier(input)) joined += piece;
    CAPTURE(input);
    CHECK(joined == letters);
  }
}

TEST_CASE("remove_stopwords") {
  const Stoplist& general = default_general_stoplist();
  const Stoplist& boiler = default_boilerplate_stoplist();
  CHECK(remove_stopwords({"Get", "All", "Country", "Currencies", "Response"}, general, boiler) ==
        TokenList{"Country", "Currencies"});
  CHECK(remove_stopwords({}, general, boiler) == TokenList{});
  CHECK(remove_stopwords({"the", "weather", "of", "Paris"}, general, boiler) ==
        TokenList{"weather", "Paris"});
}

TEST_CASE("pipeline worked examples") {
  CHECK(pipeline("GetAllCountryCurrenciesResponse") == TokenList{"countri", "currenc"});
  CHECK(pipeline("") == TokenList{});
  CHECK(pipeline("<p>The ICD9 coding system</p>") == TokenList{"icd", "code", "system"});
  CHECK(pipeline("medical billing") == TokenList{"medic", "bill"});
  CHECK(pipeline("CAPTCHA-image") == TokenList{"captcha", "imag"});
}

TEST_CASE("pipeline output is lowercase, nonempty and stopword-free") {
  const Stoplist& general = default_general_stoplist();
  const Stoplist& boiler = default_boilerplate_stoplist();
  const char* samples[] = {
      "GetAllCountryCurrenciesResponse",
      "<div>The <b>fast</b> weather-report SERVICE returns getting all responses</div>",
      "ZipCode to CityName conversion, version 2.0 -- RPC/encoded!",
      "  ",
      "l'été à Paris: ICD9 codes & the billing SYSTEM",
  };
  for (const char* sample : samples) {
    for (const auto& token : pipeline(sample)) {
      CAPTURE(sample);
      CAPTURE(token);
      CHECK(!token.empty());
      CHECK(!general.contains(token));
      CHECK(!boiler.contains(token));
      for (char c : token) CHECK(!std::isupper(static_cast<unsigned char>(c)));
    }
  }
}

TEST_CASE("stoplist files match the built-ins") {
  Stoplist general = Stoplist::from_file(std::string(WSDISCO_SOURCE_DIR) +
                                         "/data/stoplists/english.txt");
  Stoplist boiler = Stoplist::from_file(std::string(WSDISCO_SOURCE_DIR) +
                                        "/data/stoplists/wsdl_boilerplate.txt");
  CHECK(general.size() == default_general_stoplist().size());
  CHECK(boiler.size() == default_boilerplate_stoplist().size());
  CHECK(general.contains("the"));
  CHECK(boiler.contains("soap"));
  CHECK(!general.contains("system"));
  CHECK(!general.contains("bill"));
}
