#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sturmlab/letters.hpp"

namespace sturmlab {

/// One of the elementary morphisms L_x (x -> x, y -> xy) or R_x (x -> x,
/// y -> yx), over any alphabet of lowercase letters.
struct Morphism {
  enum class Kind { L, R };

  Kind kind;
  char letter;

  static Morphism L(char x) { return {Kind::L, x}; }
  static Morphism R(char x) { return {Kind::R, x}; }

  Word image(char y) const;
  Word apply(std::string_view w) const;

  /// "L_a", "R_b", ...
  std::string name() const;
  static Morphism parse(std::string_view name);

  bool operator==(const Morphism&) const = default;
};

/// Token boundaries of a decoding, plus which pair certified the last
/// complete token.  Re-encoding `decoded` always reproduces the consumed
/// input exactly; `tail_length` (0 or 1) letters at the end were ambiguous
/// or incomplete and are excluded from the decode.
struct DecodeCertificate {
  std::vector<std::size_t> token_starts;
  std::size_t consumed = 0;
  std::size_t tail_length = 0;
  std::string sync_note;
};

struct DecodeResult {
  Word decoded;
  DecodeCertificate certificate;
};

struct DecodeOptions {
  /// Treat a trailing lone x under L_x as the complete codeword "x" instead
  /// of an incomplete tail.  Valid when the caller knows the next letter of
  /// the underlying word is x (the synchronizing-pair situation U·x ∈ Pre).
  bool resolve_trailing = false;
};

/// Decodes w over the code {x} ∪ {xy : y≠x} (for L_x; deciphering delay 1)
/// or {x} ∪ {yx : y≠x} (for R_x).  Throws NotDecodableError at the first
/// position that cannot start a codeword.
DecodeResult desubstitute(std::string_view w, const Morphism& m, const DecodeOptions& = {});

}  // namespace sturmlab
