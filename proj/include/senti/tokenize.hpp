#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace senti {

using TokenSequence = std::vector<std::string>;

/// Splits UTF-8 text into lowercase word tokens.
///
/// A token is a maximal run of letters, digits and apostrophes. Letters
/// include non-ASCII letters; typographic apostrophes (U+2018/U+2019) are
/// folded to '\''. Apostrophes at either edge of a run are stripped, and a run
/// that consists only of apostrophes yields nothing. Invalid UTF-8 bytes act
/// as separators. No stemming and no stop-word removal.
TokenSequence tokenize(std::string_view text);

}  // namespace senti
