#pragma once

#include <string>
#include <string_view>

namespace wsdisco {

// Porter (1980) suffix stripping, matching the behaviour of the reference
// implementation (including its two documented departures from the paper:
// -bli -> -ble and -logi -> -log). Input is lowercased first; words shorter
// than three letters are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace wsdisco
