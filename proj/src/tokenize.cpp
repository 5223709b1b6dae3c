#include "senti/tokenize.hpp"

namespace senti {
namespace {

enum class CharClass { Separator, Word, Apostrophe };

// Decodes one code point starting at text[pos]; returns 0xFFFFFFFF for an
// invalid sequence (consuming one byte).
char32_t decode_utf8(std::string_view text, std::size_t& pos) {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  const unsigned char lead = byte(pos);
  std::size_t len;
  char32_t cp;
  if (lead < 0x80) {
    ++pos;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    ++pos;
    return 0xFFFFFFFF;
  }
  if (pos + len > text.size()) {
    ++pos;
    return 0xFFFFFFFF;
  }
  for (std::size_t i = 1; i < len; ++i) {
    const unsigned char b = byte(pos + i);
    if ((b & 0xC0) != 0x80) {
      ++pos;
      return 0xFFFFFFFF;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr char32_t kMinForLen[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMinForLen[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++pos;
    return 0xFFFFFFFF;
  }
  pos += len;
  return cp;
}

void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

CharClass classify(char32_t cp) {
  if (cp == U'\'' || cp == 0x2018 || cp == 0x2019) return CharClass::Apostrophe;
  if (cp < 0x80) {
    const bool alnum = (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') ||
                       (cp >= U'0' && cp <= U'9');
    return alnum ? CharClass::Word : CharClass::Separator;
  }
  if (cp == 0xFFFFFFFF) return CharClass::Separator;
  // Latin-1 punctuation and symbols, except the three letters living there.
  if (cp <= 0xBF) {
    return (cp == 0xAA || cp == 0xB5 || cp == 0xBA) ? CharClass::Word : CharClass::Separator;
  }
  if (cp == 0xD7 || cp == 0xF7) return CharClass::Separator;
  // General punctuation through misc symbols/arrows, CJK punctuation,
  // specials, halfwidth/fullwidth ASCII punctuation, emoji and pictographs.
  if ((cp >= 0x2000 && cp <= 0x2BFF) || (cp >= 0x3000 && cp <= 0x303F) ||
      (cp >= 0xFE30 && cp <= 0xFE4F) || (cp >= 0xFF00 && cp <= 0xFF0F) ||
      (cp >= 0xFF1A && cp <= 0xFF20) || (cp >= 0xFFF0 && cp <= 0xFFFF) ||
      (cp >= 0x1F000 && cp <= 0x1FAFF)) {
    return CharClass::Separator;
  }
  return CharClass::Word;
}

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp < 0xC0) return cp;
  if (cp <= 0xDE) return cp == 0xD7 ? cp : cp + 0x20;
  if ((cp >= 0x0100 && cp <= 0x0137) || (cp >= 0x014A && cp <= 0x0177)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if ((cp >= 0x0139 && cp <= 0x0148) || (cp >= 0x0179 && cp <= 0x017E)) {
    return (cp % 2 == 1) ? cp + 1 : cp;
  }
  if (cp == 0x0178) return 0x00FF;
  if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) return cp + 0x20;
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
  return cp;
}

void flush(std::string& current, TokenSequence& out) {
  std::size_t first = current.find_first_not_of('\'');
  if (first != std::string::npos) {
    std::size_t last = current.find_last_not_of('\'');
    out.push_back(current.substr(first, last - first + 1));
  }
  current.clear();
}

}  // namespace

TokenSequence tokenize(std::string_view text) {
  TokenSequence tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = decode_utf8(text, pos);
    switch (classify(cp)) {
      case CharClass::Word:
        encode_utf8(to_lower(cp), current);
        break;
      case CharClass::Apostrophe:
        current.push_back('\'');
        break;
      case CharClass::Separator:
        flush(current, tokens);
        break;
    }
  }
  flush(current, tokens);
  return tokens;
}

}  // namespace senti
