#include "sturmlab/morphism.hpp"

#include <sstream>

#include "sturmlab/errors.hpp"

namespace sturmlab {

Word Morphism::image(char y) const {
  if (!is_letter(y)) throw PreconditionError("morphism applied to a non-letter");
  if (y == letter) return Word(1, letter);
  if (kind == Kind::L) return Word{letter, y};
  return Word{y, letter};
}

Word Morphism::apply(std::string_view w) const {
  Word out;
  out.reserve(w.size() * 2);
  for (char c : w) {
    if (!is_letter(c)) throw PreconditionError("morphism applied to a non-letter");
    if (c == letter) {
      out.push_back(letter);
    } else if (kind == Kind::L) {
      out.push_back(letter);
      out.push_back(c);
    } else {
      out.push_back(c);
      out.push_back(letter);
    }
  }
  return out;
}

std::string Morphism::name() const {
  std::string s = kind == Kind::L ? "L_" : "R_";
  s.push_back(letter);
  return s;
}

Morphism Morphism::parse(std::string_view name) {
  if (name.size() == 3 && name[1] == '_' && is_letter(name[2])) {
    if (name[0] == 'L') return Morphism::L(name[2]);
    if (name[0] == 'R') return Morphism::R(name[2]);
  }
  throw PreconditionError("morphism name must look like L_a or R_b, got '" +
                          std::string(name) + "'");
}

namespace {

DecodeResult decode_l(std::string_view w, char x, bool resolve_trailing) {
  DecodeResult res;
  std::ostringstream note;
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] != x)
      throw NotDecodableError(std::string("letter '") + w[i] + "' cannot start an L_" + x +
                                  " codeword",
                              i);
    if (i + 1 < w.size() && w[i + 1] != x) {
      // Codeword x·y, y != x.
      res.certificate.token_starts.push_back(i);
      res.decoded.push_back(w[i + 1]);
      i += 2;
    } else if (i + 1 == w.size() && !resolve_trailing) {
      // Lone trailing x: could be "x" or the start of "xy"; deciphering
      // delay 1 leaves it unresolved.
      res.certificate.tail_length = 1;
      note << "trailing '" << x << "' at " << i << " left undecided (delay 1)";
      break;
    } else {
      // Next letter is x (or the caller vouched for it): the pair (x, x)
      // forces a boundary after position i.
      res.certificate.token_starts.push_back(i);
      res.decoded.push_back(x);
      i += 1;
    }
  }
  res.certificate.consumed = w.size() - res.certificate.tail_length;
  if (!res.certificate.token_starts.empty() && res.certificate.tail_length == 0 &&
      note.str().empty()) {
    std::size_t p = res.certificate.token_starts.back();
    if (p == 0)
      note << "single token spans the input start";
    else
      note << "pair (" << w[p - 1] << "," << x << ") at " << p - 1
           << " certifies the final boundary";
  }
  res.certificate.sync_note = note.str();
  return res;
}

DecodeResult decode_r(std::string_view w, char x) {
  DecodeResult res;
  std::ostringstream note;
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] == x) {
      res.certificate.token_starts.push_back(i);
      res.decoded.push_back(x);
      i += 1;
    } else if (i + 1 < w.size()) {
      if (w[i + 1] != x)
        throw NotDecodableError(std::string("letter '") + w[i] + "' followed by '" + w[i + 1] +
                                    "' does not close an R_" + x + " codeword",
                                i + 1);
      res.certificate.token_starts.push_back(i);
      res.decoded.push_back(w[i]);
      i += 2;
    } else {
      // Lone trailing y != x: the start of codeword y·x, incomplete.
      res.certificate.tail_length = 1;
      note << "trailing '" << w[i] << "' at " << i << " starts an incomplete codeword";
      break;
    }
  }
  res.certificate.consumed = w.size() - res.certificate.tail_length;
  if (!res.certificate.token_starts.empty() && note.str().empty()) {
    std::size_t e = res.certificate.consumed;
    note << "pair (" << x << "," << (e < w.size() ? std::string(1, w[e]) : std::string("$"))
         << ") certifies the final boundary";
  }
  res.certificate.sync_note = note.str();
  return res;
}

}  // namespace

DecodeResult desubstitute(std::string_view w, const Morphism& m, const DecodeOptions& opts) {
  DecodeResult res = m.kind == Morphism::Kind::L ? decode_l(w, m.letter, opts.resolve_trailing)
                                                 : decode_r(w, m.letter);
  // Certificate invariant: re-encoding reproduces the consumed input.
  Word reencoded = m.apply(res.decoded);
  if (reencoded != w.substr(0, res.certificate.consumed))
    throw InvariantViolationError("decode certificate failed round-trip for " + m.name());
  return res;
}

}  // namespace sturmlab
