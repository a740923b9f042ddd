#include "braidlab/surface.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "braidlab/parse.hpp"

namespace braidlab {

namespace {

void require_single_factor(Word const& w) {
  auto const& ctx = w.context();
  if (ctx.family != Family::Pi1Surface || ctx.n != 1)
    throw ContextError("expected a word of pi1(M), got " + describe(ctx));
}

// Letters of pi1(g) encoded as +-r.
int code_of(Letter const& l) { return l.sign * static_cast<int>(l.j); }
Letter letter_of(int code) { return Letter::surf_a(1, code < 0 ? -code : code, code < 0 ? -1 : 1); }

std::vector<int> relator_codes(int g) {
  std::vector<int> r;
  for (int k = 1; k <= 2 * g; ++k) r.push_back(-k);
  for (int k = 1; k <= 2 * g; ++k) r.push_back(k);
  return r;
}

// R and R^-1 as cyclic words, plus the position of every cyclic 2-letter
// subword. Pieces have length 1, so each ordered pair occurs at most once.
struct ShiftTables {
  int length = 0;
  std::vector<int> base[2];
  std::map<std::pair<int, int>, std::pair<int, int>> pair_at;

  explicit ShiftTables(int g) {
    base[0] = relator_codes(g);
    for (auto it = base[0].rbegin(); it != base[0].rend(); ++it) base[1].push_back(-*it);
    length = static_cast<int>(base[0].size());
    for (int b = 0; b < 2; ++b)
      for (int p = 0; p < length; ++p) {
        auto key = std::make_pair(base[b][p], base[b][(p + 1) % length]);
        if (!pair_at.emplace(key, std::make_pair(b, p)).second)
          throw std::logic_error("surface relator has a piece of length 2");
      }
  }
};

ShiftTables const& tables_for(int g) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ShiftTables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[g];
  if (!slot) slot = std::make_unique<ShiftTables>(g);
  return *slot;
}

void reduce_codes(std::vector<int>& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int c : w) {
    if (!out.empty() && out.back() == -c)
      out.pop_back();
    else
      out.push_back(c);
  }
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
    ++lo;
    --hi;
  }
  w.assign(out.begin() + lo, out.begin() + hi);
}

// One Dehn rewrite on the cyclic word; false when none applies.
bool dehn_step(std::vector<int>& w, ShiftTables const& tab) {
  int const m = static_cast<int>(w.size());
  int const rlen = tab.length;
  if (m < 2) return false;
  for (int q = 0; q < m; ++q) {
    auto it = tab.pair_at.find({w[q], w[(q + 1) % m]});
    if (it == tab.pair_at.end()) continue;
    auto const [b, p] = it->second;
    auto const& rel = tab.base[b];
    int len = 2;
    int const cap = std::min(m, rlen);
    while (len < cap && w[(q + len) % m] == rel[(p + len) % rlen]) ++len;
    if (2 * len <= rlen) continue;
    // rel[p .. p+len) = inverse of rel[p+len .. p+rlen)
    std::vector<int> next;
    next.reserve(m - len + (rlen - len));
    for (int k = rlen - 1; k >= len; --k) next.push_back(-rel[(p + k) % rlen]);
    for (int k = len; k < m; ++k) next.push_back(w[(q + k) % m]);
    w = std::move(next);
    reduce_codes(w);
    return true;
  }
  return false;
}

}  // namespace

Word surface_relator(int g) {
  auto ctx = GroupContext::pi1(g);
  std::vector<Letter> ls;
  for (int c : relator_codes(g)) ls.push_back(letter_of(c));
  return Word(ctx, std::move(ls));
}

Word dehn_reduce(Word const& w) {
  require_single_factor(w);
  int const g = w.context().g;
  if (g < 2) throw ContextError("Dehn's algorithm needs genus >= 2");
  auto const& tab = tables_for(g);
  std::vector<int> codes;
  for (auto const& l : w.letters()) codes.push_back(code_of(l));
  reduce_codes(codes);
  while (dehn_step(codes, tab)) {
  }
  std::vector<Letter> out;
  for (int c : codes) out.push_back(letter_of(c));
  return Word(w.context(), std::move(out));
}

Verdict is_trivial_pi1(Word const& w) {
  require_single_factor(w);
  int const g = w.context().g;
  if (g == 1) {
    return verdict_of(exponent_sum(w, Letter::surf_a(1, 1)) == 0 && exponent_sum(w, Letter::surf_a(1, 2)) == 0);
  }
  return verdict_of(dehn_reduce(w).empty());
}

Pi1Tuple Pi1Tuple::identity(int n, int g) {
  Pi1Tuple t;
  t.g = g;
  t.components.assign(n, Word(GroupContext::pi1(g)));
  return t;
}

std::string format_tuple(Pi1Tuple const& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.components.size(); ++k) {
    if (k) out += ", ";
    out += t.components[k].empty() ? "1" : format_word(t.components[k]);
  }
  return out + ")";
}

Verdict tuple_is_trivial(Pi1Tuple const& t) {
  for (auto const& c : t.components)
    if (is_trivial_pi1(c) != Verdict::Trivial) return Verdict::Nontrivial;
  return Verdict::Trivial;
}

Pi1Tuple split_components(Word const& w) {
  auto const& ctx = w.context();
  if (ctx.family != Family::Pi1Surface) throw ContextError("split_components needs a pi1 context");
  std::vector<std::vector<Letter>> parts(ctx.n);
  for (auto const& l : w.letters()) parts[l.i - 1].push_back(Letter::surf_a(1, l.j, l.sign));
  Pi1Tuple t;
  t.g = ctx.g;
  for (auto& p : parts) t.components.push_back(free_reduce(Word(GroupContext::pi1(ctx.g), std::move(p))));
  return t;
}

Word join_components(Pi1Tuple const& t) {
  auto ctx = GroupContext::pi1(t.g, static_cast<int>(t.components.size()));
  std::vector<Letter> out;
  for (std::size_t k = 0; k < t.components.size(); ++k) {
    if (t.components[k].context() != GroupContext::pi1(t.g))
      throw ContextError("tuple component is not a word of pi1(g)");
    for (auto const& l : t.components[k].letters())
      out.push_back(Letter::surf_a(static_cast<int>(k) + 1, l.j, l.sign));
  }
  return free_reduce(Word(ctx, std::move(out)));
}

}  // namespace braidlab
