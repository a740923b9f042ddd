#include "braidlab/parse.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace braidlab {

char const* const kWordGrammar =
    "Word grammar (UTF-8 text, whitespace-separated tokens):\n"
    "  token := gen exp? ; gen := \"s\"INT | \"a\"INT\".\"INT | \"t\"INT\".\"INT | \"T\"INT\".\"INT"
    " | \"A\"INT\".\"INT | \"x\"INT ; exp := \"^\" SIGNED_INT ;\n"
    "  sugar := \"[\" word \",\" word \"]\" (commutator u v u^-1 v^-1).\n"
    "Round-trip format is the same grammar with `^-1` for inverses and no sugar.\n"
    "In a pi1 context with one factor, \"a\"INT names the surface generator a_INT.\n";

ParseError::ParseError(std::string const& what, std::size_t pos)
    : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}

namespace {

bool is_separator(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '[' || c == ']' || c == ','; }

class Parser {
 public:
  Parser(std::string_view text, GroupContext const& ctx) : text_(text), ctx_(ctx) {}

  std::vector<Letter> parse_all() {
    auto out = parse_sequence(/*nested=*/false);
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return out;
  }

 private:
  std::string_view text_;
  GroupContext const& ctx_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::vector<Letter> parse_sequence(bool nested) {
    std::vector<Letter> out;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      char c = text_[pos_];
      if (c == ',' || c == ']') {
        if (!nested) throw ParseError(std::string("unexpected '") + c + "'", pos_);
        break;
      }
      auto item = c == '[' ? parse_commutator() : parse_generator();
      append_with_exponent(out, item);
    }
    return out;
  }

  std::vector<Letter> parse_commutator() {
    std::size_t const open = pos_++;
    auto u = parse_sequence(true);
    if (pos_ == text_.size() || text_[pos_] != ',') throw ParseError("expected ',' in commutator", pos_);
    ++pos_;
    auto v = parse_sequence(true);
    if (pos_ == text_.size() || text_[pos_] != ']') throw ParseError("unterminated commutator opened", open);
    ++pos_;
    std::vector<Letter> out = u;
    out.insert(out.end(), v.begin(), v.end());
    for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(it->inverse());
    for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(it->inverse());
    return out;
  }

  long read_int(bool allow_sign) {
    std::size_t const start = pos_;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t const digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError("expected integer", start);
    long value = 0;
    char const* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) throw ParseError("integer out of range", start);
    return value;
  }

  std::vector<Letter> parse_generator() {
    std::size_t const start = pos_;
    char const c = text_[pos_++];
    Letter l;
    auto index = [&]() {
      long v = read_int(false);
      if (v < 1 || v > 65535) throw ParseError("index out of range", start);
      return static_cast<int>(v);
    };
    auto dotted = [&](auto make) {
      int a = index();
      if (pos_ >= text_.size() || text_[pos_] != '.') throw ParseError("expected '.' in generator", pos_);
      ++pos_;
      int b = index();
      return make(a, b);
    };
    switch (c) {
      case 's': l = Letter::sigma(index()); break;
      case 'x': l = Letter::free_x(index()); break;
      case 't': l = dotted([](int a, int b) { return Letter::small_t(a, b); }); break;
      case 'T': l = dotted([](int a, int b) { return Letter::big_t(a, b); }); break;
      case 'A': l = dotted([](int a, int b) { return Letter::cap_a(a, b); }); break;
      case 'a': {
        int a = index();
        if (pos_ < text_.size() && text_[pos_] == '.') {
          ++pos_;
          l = Letter::surf_a(a, index());
        } else if (ctx_.family == Family::Pi1Surface && ctx_.n == 1) {
          l = Letter::surf_a(1, a);
        } else {
          throw ParseError("expected '.' in generator", pos_);
        }
        break;
      }
      default:
        throw ParseError(std::string("unknown generator '") + c + "'", start);
    }
    if (!ctx_.admits(l))
      throw ParseError("generator " + format_letter(l, ctx_) + " out of range for " + describe(ctx_), start);
    return {l};
  }

  void append_with_exponent(std::vector<Letter>& out, std::vector<Letter> const& item) {
    long k = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      std::size_t const at = pos_++;
      k = read_int(true);
      if (k > kMaxExponent || k < -kMaxExponent) throw ParseError("exponent exceeds 10^6", at);
    }
    if (pos_ < text_.size() && !is_separator(text_[pos_]))
      throw ParseError("expected whitespace between tokens", pos_);
    for (long c = 0; c < (k < 0 ? -k : k); ++c) {
      if (k > 0) {
        out.insert(out.end(), item.begin(), item.end());
      } else {
        for (auto it = item.rbegin(); it != item.rend(); ++it) out.push_back(it->inverse());
      }
    }
  }
};

}  // namespace

Word parse_word(std::string_view text, GroupContext const& ctx) {
  Parser p(text, ctx);
  return free_reduce(Word(ctx, p.parse_all()));
}

std::string format_letter(Letter const& l, std::optional<GroupContext> const& ctx) {
  std::string s;
  auto pair = [&](char c) { s = c + std::to_string(l.i) + "." + std::to_string(l.j); };
  switch (l.kind) {
    case Gen::Sigma: s = "s" + std::to_string(l.i); break;
    case Gen::FreeX: s = "x" + std::to_string(l.i); break;
    case Gen::SmallT: pair('t'); break;
    case Gen::BigT: pair('T'); break;
    case Gen::CapA: pair('A'); break;
    case Gen::SurfA:
      if (ctx && ctx->family == Family::Pi1Surface && ctx->n == 1)
        s = "a" + std::to_string(l.j);
      else
        pair('a');
      break;
  }
  if (l.sign < 0) s += "^-1";
  return s;
}

std::string format_word(Word const& w) {
  std::string out;
  for (auto const& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += format_letter(l, w.context());
  }
  return out;
}

}  // namespace braidlab
