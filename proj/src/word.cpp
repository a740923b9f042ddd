#include "braidlab/word.hpp"

#include <algorithm>
#include <sstream>

#include "braidlab/parse.hpp"

namespace braidlab {

std::string to_string(Family f) {
  switch (f) {
    case Family::Bn: return "bn";
    case Family::PBn: return "pbn";
    case Family::HatBn: return "hatbn";
    case Family::HatPBn: return "hatpbn";
    case Family::FreeGroup: return "free";
    case Family::Pi1Surface: return "pi1";
    case Family::Symmetric: return "sym";
  }
  return "?";
}

GroupContext GroupContext::make(Family family, int n, int g) {
  if (g < 0) throw ContextError("genus must be non-negative");
  switch (family) {
    case Family::FreeGroup:
      if (n < 0) throw ContextError("free group rank must be non-negative");
      if (g != 0) throw ContextError("free group context carries no genus");
      break;
    case Family::Symmetric:
      if (n < 1) throw ContextError("symmetric group needs n >= 1");
      if (g != 0) throw ContextError("symmetric group context carries no genus");
      break;
    case Family::Pi1Surface:
      if (n < 1) throw ContextError("pi1 context needs at least one factor");
      if (g < 1) throw ContextError("surface must have genus >= 1 (the sphere is excluded)");
      break;
    default:
      if (n < 1) throw ContextError("braid groups need n >= 1 strands");
      break;
  }
  return GroupContext{family, n, g};
}

bool GroupContext::admits(Letter const& l) const noexcept {
  int const i = l.i, j = l.j;
  bool const braid = family == Family::Bn || family == Family::HatBn;
  bool const pure = is_pure_type();
  switch (l.kind) {
    case Gen::Sigma:
      return (braid || family == Family::Symmetric) && j == 0 && i >= 1 && i <= n - 1;
    case Gen::SurfA:
      if (g < 1 || j < 1 || j > 2 * g) return false;
      if (braid) return i == 1;
      if (pure || family == Family::Pi1Surface) return i >= 1 && i <= n;
      return false;
    case Gen::SmallT:
    case Gen::BigT:
      return is_braid_type() && i >= 1 && i < j && j <= n;
    case Gen::CapA:
      if (g < 1 || j < 1 || j > 2 * g) return false;
      if (pure) return i >= 1 && i <= n;
      if (braid) return i == 2 && n >= 2;
      return false;
    case Gen::FreeX:
      return family == Family::FreeGroup && j == 0 && i >= 1 && i <= n;
  }
  return false;
}

bool GroupContext::is_ambient(Letter const& l) const noexcept {
  if (!admits(l)) return false;
  switch (family) {
    case Family::Bn:
    case Family::HatBn:
      return l.kind == Gen::Sigma || l.kind == Gen::SurfA;
    case Family::PBn:
      return l.kind == Gen::SurfA || l.kind == Gen::BigT;
    case Family::HatPBn:
      if (is_disk()) return l.kind == Gen::BigT;
      return l.kind == Gen::SurfA || l.kind == Gen::SmallT;
    default:
      return true;
  }
}

std::vector<Letter> GroupContext::generators() const {
  std::vector<Letter> out;
  auto surf = [&](int strands) {
    for (int i = 1; i <= strands; ++i)
      for (int r = 1; r <= 2 * g; ++r) out.push_back(Letter::surf_a(i, r));
  };
  auto pairs = [&](Gen kind) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        out.push_back(kind == Gen::BigT ? Letter::big_t(i, j) : Letter::small_t(i, j));
  };
  switch (family) {
    case Family::Bn:
    case Family::HatBn:
      if (g >= 1) surf(1);
      for (int i = 1; i < n; ++i) out.push_back(Letter::sigma(i));
      break;
    case Family::PBn:
      surf(n);
      pairs(Gen::BigT);
      break;
    case Family::HatPBn:
      surf(n);
      pairs(is_disk() ? Gen::BigT : Gen::SmallT);
      break;
    case Family::FreeGroup:
      for (int i = 1; i <= n; ++i) out.push_back(Letter::free_x(i));
      break;
    case Family::Pi1Surface:
      surf(n);
      break;
    case Family::Symmetric:
      for (int i = 1; i < n; ++i) out.push_back(Letter::sigma(i));
      break;
  }
  return out;
}

std::string describe(GroupContext const& ctx) {
  std::ostringstream os;
  os << to_string(ctx.family) << "(n=" << ctx.n << ", g=" << ctx.g << ")";
  return os.str();
}

Word::Word(GroupContext ctx, std::vector<Letter> letters) : ctx_(ctx), letters_(std::move(letters)) {
  for (auto const& l : letters_) {
    if (!ctx_.admits(l))
      throw ContextError("letter " + format_letter(l, ctx_) + " is not valid in " + describe(ctx_));
  }
}

bool Word::is_reduced() const noexcept {
  for (std::size_t k = 1; k < letters_.size(); ++k)
    if (letters_[k].cancels(letters_[k - 1])) return false;
  return true;
}

namespace {

// Stack-based reduction; shared by the public operations.
std::vector<Letter> reduce_letters(std::span<Letter const> in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (auto const& l : in) {
    if (!out.empty() && out.back().cancels(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

void require_same_context(Word const& u, Word const& v) {
  if (u.context() != v.context())
    throw ContextError("context mismatch: " + describe(u.context()) + " vs " + describe(v.context()));
}

}  // namespace

Word free_reduce(Word const& w) {
  if (w.is_reduced()) return w;
  return Word(w.context(), reduce_letters(w.letters()));
}

Word invert(Word const& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(w.context(), std::move(out));
}

Word concat(Word const& u, Word const& v) {
  require_same_context(u, v);
  std::vector<Letter> all(u.letters().begin(), u.letters().end());
  all.insert(all.end(), v.letters().begin(), v.letters().end());
  return Word(u.context(), reduce_letters(all));
}

Word concat(std::initializer_list<Word> parts) {
  if (parts.size() == 0) throw ContextError("concat of no words has no context");
  std::vector<Letter> all;
  for (auto const& p : parts) {
    require_same_context(*parts.begin(), p);
    all.insert(all.end(), p.letters().begin(), p.letters().end());
  }
  return Word(parts.begin()->context(), reduce_letters(all));
}

Word commutator(Word const& u, Word const& v) { return concat({u, v, invert(u), invert(v)}); }

Word conjugate(Word const& u, Word const& h) { return concat({h, u, invert(h)}); }

Word power(Word const& w, int k) {
  Word base = k < 0 ? invert(w) : w;
  std::vector<Letter> all;
  for (int c = 0; c < (k < 0 ? -k : k); ++c) all.insert(all.end(), base.letters().begin(), base.letters().end());
  return Word(w.context(), reduce_letters(all));
}

CyclicReduction cyclic_reduce(Word const& w) {
  Word r = free_reduce(w);
  auto letters = r.letters();
  std::size_t lo = 0, hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return {Word(w.context(), std::vector<Letter>(letters.begin() + lo, letters.begin() + hi)),
          Word(w.context(), std::vector<Letter>(letters.begin(), letters.begin() + lo))};
}

int exponent_sum(Word const& w, Letter generator) {
  generator = generator.positive();
  int total = 0;
  for (auto const& l : w.letters())
    if (l.positive() == generator) total += l.sign;
  return total;
}

MissingImage::MissingImage(Letter const& l)
    : std::runtime_error("no image for generator " + format_letter(l.positive(), std::nullopt)), letter(l) {}

Word substitute(Word const& w, GroupContext const& target, ImageLookup const& images) {
  std::vector<Letter> all;
  for (auto const& l : w.letters()) {
    auto image = images(l.positive());
    if (!image) throw MissingImage(l);
    if (image->context() != target)
      throw ContextError("image of " + format_letter(l.positive(), w.context()) + " lives in " +
                         describe(image->context()) + ", expected " + describe(target));
    if (l.sign > 0) {
      all.insert(all.end(), image->letters().begin(), image->letters().end());
    } else {
      for (auto it = image->letters().rbegin(); it != image->letters().rend(); ++it)
        all.push_back(it->inverse());
    }
  }
  return Word(target, reduce_letters(all));
}

}  // namespace braidlab
