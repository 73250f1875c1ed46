#pragma once

#include <string>
#include <string_view>

namespace wsdisco {

// Stopword-ratio language recognition. Returns "en" when the English hit
// ratio over tokens exceeds the threshold, otherwise the best-scoring
// competing list's ISO-639-1 code, otherwise "unknown". Empty or tokenless
// text is "unknown".
std::string detect_language(std::string_view text, double en_threshold = 0.10);

}  // namespace wsdisco
