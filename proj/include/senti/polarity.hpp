#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace senti {

// Canonical order Positive < Negative < Neutral. Matrix rows/columns, pair
// enumeration and the final vote tie-break all follow it.
enum class Polarity : int { Positive = 0, Negative = 1, Neutral = 2 };

inline constexpr std::size_t kNumPolarities = 3;
inline constexpr std::array<Polarity, kNumPolarities> kAllPolarities = {
    Polarity::Positive, Polarity::Negative, Polarity::Neutral};

constexpr std::size_t index_of(Polarity p) { return static_cast<std::size_t>(p); }

std::string_view to_string(Polarity p);

/// Case-insensitive parse of "positive" / "negative" / "neutral".
std::optional<Polarity> parse_polarity(std::string_view text);

}  // namespace senti
