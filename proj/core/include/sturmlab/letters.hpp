#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include "sturmlab/errors.hpp"

namespace sturmlab {

/// Finite words are plain strings over 'a'..'z'; the alphabet order of a spec
/// decides which letters are valid and how colors are indexed.
using Word = std::string;

inline bool is_letter(char c) { return c >= 'a' && c <= 'z'; }

/// Letter complement on the two-letter alphabet {a, b}.
inline char exchange_letter(char c) {
  if (c == 'a') return 'b';
  if (c == 'b') return 'a';
  throw PreconditionError("exchange is defined only on the alphabet {a,b}");
}

/// Letterwise complement a <-> b.
inline Word exchange(std::string_view w) {
  Word out;
  out.reserve(w.size());
  for (char c : w) out.push_back(exchange_letter(c));
  return out;
}

inline std::size_t count_letter(std::string_view w, char c) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), c));
}

inline Word reversed(std::string_view w) { return Word(w.rbegin(), w.rend()); }

inline bool is_binary(std::string_view w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == 'a' || c == 'b'; });
}

/// True when w is c^|w| for a single letter c (and w nonempty).
inline bool is_letter_power(std::string_view w) {
  return !w.empty() && w.find_first_not_of(w.front()) == std::string_view::npos;
}

}  // namespace sturmlab
