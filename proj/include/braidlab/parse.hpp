#pragma once

// Text form of words.
//
//   token := gen exp?
//   gen   := "s"INT | "a"INT"."INT | "t"INT"."INT | "T"INT"."INT | "A"INT"."INT | "x"INT
//   exp   := "^" SIGNED_INT          (|k| <= 1000000)
//   sugar := "[" word "," word "]"   (commutator u v u^-1 v^-1, may carry an exp)
//
// Tokens are whitespace separated. In a single-factor pi1 context "a"INT is
// also accepted and is the form the formatter emits.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "braidlab/word.hpp"

namespace braidlab {

inline constexpr int kMaxExponent = 1'000'000;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t position);
  std::size_t position;
};

/// Parses and freely reduces. Throws ParseError on syntax errors and on
/// letters that are out of range for `ctx`.
Word parse_word(std::string_view text, GroupContext const& ctx);

std::string format_word(Word const& w);
std::string format_letter(Letter const& l, std::optional<GroupContext> const& ctx);

extern char const* const kWordGrammar;

}  // namespace braidlab
