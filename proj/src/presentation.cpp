#include "braidlab/presentation.hpp"

#include <algorithm>

#include "braidlab/random.hpp"

namespace braidlab {

GroupContext braid_context_of(GroupContext const& ctx) {
  switch (ctx.family) {
    case Family::Bn:
    case Family::PBn:
      return GroupContext::braid(ctx.n, ctx.g);
    case Family::HatBn:
    case Family::HatPBn:
      return GroupContext::hat_braid(ctx.n, ctx.g);
    default:
      throw ContextError("no braid generators in " + describe(ctx));
  }
}

namespace {

void check_pair(int i, int j, GroupContext const& ctx) {
  if (i < 1 || j > ctx.n || i > j) throw ContextError("index pair out of range in " + describe(ctx));
}

// Accumulates letters and reduces once at the end.
class Spell {
 public:
  explicit Spell(GroupContext ctx) : ctx_(ctx) {}

  Spell& s(int i, int sign = 1) { return push(Letter::sigma(i, sign)); }
  Spell& a(int i, int r, int sign = 1) { return push(Letter::surf_a(i, r, sign)); }
  Spell& t(int i, int j, int sign = 1) { return push(Letter::small_t(i, j, sign)); }
  Spell& A(int j, int s, int sign = 1) { return push(Letter::cap_a(j, s, sign)); }
  // T_{i,i} is the empty word.
  Spell& T(int i, int j, int sign = 1) { return i == j ? *this : push(Letter::big_t(i, j, sign)); }
  Spell& word(Word const& w) {
    letters_.insert(letters_.end(), w.letters().begin(), w.letters().end());
    return *this;
  }
  // a_{i,from} a_{i,from+1} ... a_{i,to} (ascending) or descending when from > to
  Spell& a_run(int i, int from, int to, int sign) {
    int const step = from <= to ? 1 : -1;
    for (int r = from; r != to + step; r += step) a(i, r, sign);
    return *this;
  }
  // a_{i,from} ... a_{i,to}; empty when from > to
  Spell& a_up(int i, int from, int to, int sign) {
    for (int r = from; r <= to; ++r) a(i, r, sign);
    return *this;
  }
  Word done() const { return free_reduce(Word(ctx_, letters_)); }

 private:
  Spell& push(Letter l) {
    letters_.push_back(l);
    return *this;
  }
  GroupContext ctx_;
  std::vector<Letter> letters_;
};

Word relation(Word const& lhs, Word const& rhs) { return concat(lhs, invert(rhs)); }

}  // namespace

Word expand_big_t(int i, int j, GroupContext const& ctx) {
  check_pair(i, j, ctx);
  Spell w(braid_context_of(ctx));
  if (i == j) return w.done();
  for (int k = i; k <= j - 2; ++k) w.s(k);
  w.s(j - 1).s(j - 1);
  for (int k = j - 2; k >= i; --k) w.s(k);
  return w.done();
}

Word expand_small_t(int i, int j, GroupContext const& ctx) {
  check_pair(i, j, ctx);
  Spell w(braid_context_of(ctx));
  if (i == j) return w.done();
  for (int k = i; k <= j - 2; ++k) w.s(k);
  w.s(j - 1).s(j - 1);
  for (int k = j - 2; k >= i; --k) w.s(k, -1);
  return w.done();
}

Word expand_cap_a(int j, int s, GroupContext const& ctx) {
  int const g = ctx.g;
  if (g < 1 || s < 1 || s > 2 * g) throw ContextError("A_{j,s}: s out of range in " + describe(ctx));
  if (ctx.is_pure_type()) {
    if (j < 1 || j > ctx.n) throw ContextError("A_{j,s}: j out of range in " + describe(ctx));
    Spell w(ctx);
    w.a_up(j, 1, s - 1, 1).a_up(j, s + 1, 2 * g, -1);
    return w.done();
  }
  if (ctx.family == Family::Bn || ctx.family == Family::HatBn) {
    if (j != 2 || ctx.n < 2) throw ContextError("A_{j,s} in a braid context exists only for j = 2, n >= 2");
    Spell w(ctx);
    w.s(1, -1).a_up(1, 1, s - 1, 1).a_up(1, s + 1, 2 * g, -1).s(1, -1);
    return w.done();
  }
  throw ContextError("A_{j,s} is not defined in " + describe(ctx));
}

Word expand_letter(Letter const& l, GroupContext const& ctx) {
  if (!ctx.admits(l)) throw ContextError("letter not valid in " + describe(ctx));
  Letter const p = l.positive();
  auto signed_result = [&](Word w) { return l.sign > 0 ? w : invert(w); };
  if (ctx.is_ambient(p)) return Word(ctx, {l});
  switch (ctx.family) {
    case Family::Bn:
    case Family::HatBn:
      if (p.kind == Gen::BigT) return signed_result(expand_big_t(p.i, p.j, ctx));
      if (p.kind == Gen::SmallT) return signed_result(expand_small_t(p.i, p.j, ctx));
      if (p.kind == Gen::CapA) return signed_result(expand_cap_a(p.i, p.j, ctx));
      break;
    case Family::PBn:
      if (p.kind == Gen::SmallT) return signed_result(Spell(ctx).T(p.i, p.j).T(p.i, p.j - 1, -1).done());
      if (p.kind == Gen::CapA) return signed_result(expand_cap_a(p.i, p.j, ctx));
      break;
    case Family::HatPBn:
      if (p.kind == Gen::CapA) return signed_result(expand_cap_a(p.i, p.j, ctx));
      if (ctx.is_disk() && p.kind == Gen::SmallT)
        return signed_result(Spell(ctx).T(p.i, p.j).T(p.i, p.j - 1, -1).done());
      if (p.kind == Gen::BigT) {
        // T_{i,j} = t_{i,j} t_{i,j-1} ... t_{i,i+1}
        Spell w(ctx);
        for (int k = p.j; k > p.i; --k) w.t(p.i, k);
        return signed_result(w.done());
      }
      break;
    default:
      break;
  }
  throw ContextError("no expansion for letter in " + describe(ctx));
}

Word expand_to_ambient(Word const& w) {
  std::vector<Letter> out;
  for (auto const& l : w.letters()) {
    auto e = expand_letter(l, w.context());
    out.insert(out.end(), e.letters().begin(), e.letters().end());
  }
  return free_reduce(Word(w.context(), std::move(out)));
}

Word to_sigma_word(Word const& w) {
  auto const& ctx = w.context();
  auto target = braid_context_of(ctx);
  std::vector<Letter> out;
  for (auto const& l : w.letters()) {
    Word e(target);
    switch (l.kind) {
      case Gen::Sigma: e = Word(target, {l}); break;
      case Gen::BigT: e = expand_big_t(l.i, l.j, ctx); break;
      case Gen::SmallT: e = expand_small_t(l.i, l.j, ctx); break;
      default: throw ContextError("to_sigma_word: surface letters have no sigma spelling");
    }
    if (l.kind != Gen::Sigma && l.sign < 0) e = invert(e);
    out.insert(out.end(), e.letters().begin(), e.letters().end());
  }
  return free_reduce(Word(target, std::move(out)));
}

RelatorFamily const* Presentation::find(std::string_view tag) const {
  for (auto const& f : families)
    if (f.tag == tag) return &f;
  return nullptr;
}

bool Presentation::has_conjugator_family() const {
  return std::any_of(families.begin(), families.end(), [](auto const& f) { return f.takes_conjugator; });
}

namespace {

using Emit = std::function<Word(IndexTuple const&, Word const*)>;

RelatorFamily finite_family(std::string tag, std::string condition, std::vector<IndexTuple> domain, Emit emit) {
  RelatorFamily f;
  f.tag = std::move(tag);
  f.condition = std::move(condition);
  f.domain = std::move(domain);
  f.emit = std::move(emit);
  return f;
}

// Relations shared by PB_n(M) and its link-homotopy quotient. `hat` selects
// the quotient's tighter s/r ranges in PR2 and PR3.
void add_pure_surface_families(Presentation& p, bool hat) {
  auto const ctx = p.context;
  int const n = ctx.n, g = ctx.g;

  p.families.push_back(finite_family("PR1", "single relation", {{}}, [ctx, n, g](IndexTuple const&, Word const*) {
    Spell lhs(ctx), rhs(ctx);
    lhs.a_run(n, 1, 2 * g, -1).a_run(n, 1, 2 * g, 1);
    for (int i = 1; i <= n - 1; ++i) rhs.T(i, n - 1, -1).T(i, n);
    return relation(lhs.done(), rhs.done());
  }));

  {
    std::vector<IndexTuple> dom;
    int const s_max = hat ? 2 * g - 1 : 2 * g;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int r = 1; r <= 2 * g; ++r)
          for (int s = 1; s <= s_max; ++s)
            if (r != s) dom.push_back({i, j, r, s});
    p.families.push_back(finite_family(
        "PR2", hat ? "1<=i<j<=n; 1<=r<=2g; 1<=s<=2g-1; r!=s" : "1<=i<j<=n; 1<=r,s<=2g; r!=s", std::move(dom),
        [ctx](IndexTuple const& x, Word const*) {
          return commutator(Spell(ctx).a(x[0], x[2]).done(), Spell(ctx).A(x[1], x[3]).done());
        }));
  }

  {
    std::vector<IndexTuple> dom;
    int const r_max = hat ? 2 * g - 1 : 2 * g;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int r = 1; r <= r_max; ++r) dom.push_back({i, j, r});
    p.families.push_back(finite_family(
        "PR3", hat ? "1<=i<j<=n; 1<=r<=2g-1" : "1<=i<j<=n; 1<=r<=2g", std::move(dom),
        [ctx](IndexTuple const& x, Word const*) {
          int const i = x[0], j = x[1], r = x[2];
          Spell lhs(ctx);
          lhs.a_run(i, 1, r, 1).A(j, r).a_run(i, r, 1, -1).A(j, r, -1);
          return relation(lhs.done(), Spell(ctx).T(i, j).T(i, j - 1, -1).done());
        }));
  }
}

void add_disk_pure_families(Presentation& p) {
  auto const ctx = p.context;
  int const n = ctx.n;
  {
    std::vector<IndexTuple> dom;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l)
            if ((i < j && j < k && k < l) || (i < k && k < l && l <= j)) dom.push_back({i, j, k, l});
    p.families.push_back(finite_family("PR4", "1<=i<j<k<l<=n or 1<=i<k<l<=j<=n", std::move(dom),
                                       [ctx](IndexTuple const& x, Word const*) {
                                         return commutator(Spell(ctx).T(x[0], x[1]).done(),
                                                           Spell(ctx).T(x[2], x[3]).done());
                                       }));
  }
  {
    std::vector<IndexTuple> dom;
    for (int i = 1; i <= n; ++i)
      for (int k = i + 1; k <= n; ++k)
        for (int j = k; j <= n; ++j)
          for (int l = j + 1; l <= n; ++l) dom.push_back({i, j, k, l});
    p.families.push_back(finite_family(
        "PR5", "1<=i<k<=j<l<=n", std::move(dom), [ctx](IndexTuple const& x, Word const*) {
          int const i = x[0], j = x[1], k = x[2], l = x[3];
          Word lhs = Spell(ctx).T(k, l).T(i, j).T(k, l, -1).done();
          Word rhs = Spell(ctx)
                         .T(i, k - 1)
                         .T(i, k, -1)
                         .T(i, j)
                         .T(i, l, -1)
                         .T(i, k)
                         .T(i, k - 1, -1)
                         .T(i, l)
                         .done();
          return relation(lhs, rhs);
        }));
  }
}

void add_pure_surface_tail(Presentation& p) {
  auto const ctx = p.context;
  int const n = ctx.n, g = ctx.g;
  {
    std::vector<IndexTuple> dom;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          if ((i < j && j < k) || (j < k && k < i))
            for (int r = 1; r <= 2 * g; ++r) dom.push_back({i, j, k, r});
    p.families.push_back(finite_family("PR6", "(1<=i<j<k<=n or 1<=j<k<i<=n); 1<=r<=2g", std::move(dom),
                                       [ctx](IndexTuple const& x, Word const*) {
                                         return commutator(Spell(ctx).a(x[0], x[3]).done(),
                                                           Spell(ctx).T(x[1], x[2]).done());
                                       }));
  }
  {
    std::vector<IndexTuple> dom;
    for (int j = 1; j <= n; ++j)
      for (int i = j + 1; i <= n; ++i)
        for (int k = i; k <= n; ++k)
          for (int r = 1; r <= 2 * g; ++r) dom.push_back({i, j, k, r});
    p.families.push_back(finite_family(
        "PR7", "1<=j<i<=k<=n; 1<=r<=2g", std::move(dom), [ctx, g](IndexTuple const& x, Word const*) {
          int const i = x[0], j = x[1], k = x[2], r = x[3];
          Word c = Spell(ctx).a_run(j, 2 * g, 1, -1).T(j, k).a_run(j, 2 * g, 1, 1).done();
          return commutator(Spell(ctx).a(i, r).done(), c);
        }));
  }
  {
    std::vector<IndexTuple> dom;
    for (int j = 1; j <= n - 1; ++j) dom.push_back({j});
    p.families.push_back(finite_family(
        "PR8", "1<=j<=n-1", std::move(dom), [ctx, n, g](IndexTuple const& x, Word const*) {
          int const j = x[0];
          Spell rhs(ctx);
          for (int i = 1; i <= j - 1; ++i)
            rhs.a_run(i, 2 * g, 1, -1).T(i, j - 1).T(i, j, -1).a_run(i, 1, 2 * g, 1);
          rhs.a_run(j, 1, 2 * g, 1).a_run(j, 1, 2 * g, -1);
          return relation(Spell(ctx).T(j, n).done(), rhs.done());
        }));
  }
}

RelatorFamily lh_family(GroupContext const& ctx, bool first_strand_only) {
  RelatorFamily f;
  int const n = ctx.n;
  if (first_strand_only) {
    f.tag = "LH";
    f.condition = "2<=j<=n; h in F(2g+n-1)";
    for (int j = 2; j <= n; ++j) f.domain.push_back({j});
    f.strand_of = [](IndexTuple const&) { return 1; };
    f.emit = [ctx](IndexTuple const& x, Word const* h) {
      Word t = Spell(ctx).t(1, x[0]).done();
      return commutator(t, conjugate(t, *h));
    };
  } else {
    f.tag = "LH1";
    f.condition = "1<=i<j<=n; h in F(2g+n-i)";
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) f.domain.push_back({i, j});
    f.strand_of = [](IndexTuple const& x) { return x[0]; };
    f.emit = [ctx](IndexTuple const& x, Word const* h) {
      Word t = Spell(ctx).t(x[0], x[1]).done();
      return commutator(t, conjugate(t, *h));
    };
  }
  f.takes_conjugator = true;
  return f;
}

void add_artin_families(Presentation& p) {
  auto const ctx = p.context;
  int const n = ctx.n;
  {
    std::vector<IndexTuple> dom;
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j) dom.push_back({i, j});
    p.families.push_back(finite_family("R1", "1<=i<j<=n-1; j-i>=2", std::move(dom),
                                       [ctx](IndexTuple const& x, Word const*) {
                                         return commutator(Spell(ctx).s(x[0]).done(), Spell(ctx).s(x[1]).done());
                                       }));
  }
  {
    std::vector<IndexTuple> dom;
    for (int i = 1; i <= n - 2; ++i) dom.push_back({i});
    p.families.push_back(
        finite_family("R2", "1<=i<=n-2", std::move(dom), [ctx](IndexTuple const& x, Word const*) {
          int const i = x[0];
          return relation(Spell(ctx).s(i).s(i + 1).s(i).done(), Spell(ctx).s(i + 1).s(i).s(i + 1).done());
        }));
  }
}

void add_braid_surface_families(Presentation& p, bool hat) {
  auto const ctx = p.context;
  int const n = ctx.n, g = ctx.g;
  p.families.push_back(finite_family("R3", "single relation", {{}}, [ctx, n, g](IndexTuple const&, Word const*) {
    Word lhs = Spell(ctx).a_run(1, 1, 2 * g, 1).a_run(1, 1, 2 * g, -1).done();
    return relation(lhs, expand_big_t(1, n, ctx));
  }));
  {
    std::vector<IndexTuple> dom;
    int const s_max = hat ? 2 * g - 1 : 2 * g;
    if (n >= 2)
      for (int r = 1; r <= 2 * g; ++r)
        for (int s = 1; s <= s_max; ++s)
          if (r != s) dom.push_back({r, s});
    p.families.push_back(finite_family(
        "R4", hat ? "1<=r<=2g; 1<=s<=2g-1; r!=s; n>=2" : "1<=r,s<=2g; r!=s; n>=2", std::move(dom),
        [ctx](IndexTuple const& x, Word const*) {
          return commutator(Spell(ctx).a(1, x[0]).done(), Spell(ctx).A(2, x[1]).done());
        }));
  }
  {
    std::vector<IndexTuple> dom;
    int const r_max = hat ? 2 * g - 1 : 2 * g;
    if (n >= 2)
      for (int r = 1; r <= r_max; ++r) dom.push_back({r});
    p.families.push_back(finite_family(
        "R5", hat ? "1<=r<=2g-1; n>=2" : "1<=r<=2g; n>=2", std::move(dom), [ctx](IndexTuple const& x, Word const*) {
          int const r = x[0];
          Word lhs = Spell(ctx).a_run(1, 1, r, 1).A(2, r).done();
          Word rhs = Spell(ctx).s(1).s(1).A(2, r).a_run(1, 1, r, 1).done();
          return relation(lhs, rhs);
        }));
  }
  {
    std::vector<IndexTuple> dom;
    for (int r = 1; r <= 2 * g; ++r)
      for (int i = 2; i <= n - 1; ++i) dom.push_back({r, i});
    p.families.push_back(finite_family("R6", "1<=r<=2g; 2<=i<=n-1", std::move(dom),
                                       [ctx](IndexTuple const& x, Word const*) {
                                         return commutator(Spell(ctx).a(1, x[0]).done(), Spell(ctx).s(x[1]).done());
                                       }));
  }
}

}  // namespace

Presentation build_presentation(Family family, int n, int g) {
  GroupContext ctx;
  try {
    ctx = GroupContext::make(family, n, g);
  } catch (ContextError const& e) {
    throw UnsupportedPresentation(e.what());
  }
  if (!ctx.is_braid_type()) throw UnsupportedPresentation("no presentation for " + describe(ctx));

  Presentation p{ctx, ctx.generators(), {}};
  bool const surface = g >= 1;
  switch (family) {
    case Family::PBn:
    case Family::HatPBn: {
      bool const hat = family == Family::HatPBn;
      if (hat) p.families.push_back(lh_family(ctx, false));
      if (surface) add_pure_surface_families(p, hat);
      add_disk_pure_families(p);
      if (surface) add_pure_surface_tail(p);
      break;
    }
    case Family::Bn:
    case Family::HatBn: {
      bool const hat = family == Family::HatBn;
      if (hat) p.families.push_back(lh_family(ctx, true));
      add_artin_families(p);
      if (surface) add_braid_surface_families(p, hat);
      break;
    }
    default:
      break;
  }
  return p;
}

std::vector<Letter> LHSampler::alphabet(GroupContext const& ctx, int strand) const {
  std::vector<Letter> out;
  bool const braid = ctx.family == Family::Bn || ctx.family == Family::HatBn;
  if (braid && strand != 1) throw ContextError("LH conjugators in a braid context live on strand 1");
  if (strand < 1 || strand > ctx.n) throw ContextError("strand out of range");
  for (int r = 1; r <= 2 * ctx.g; ++r) out.push_back(Letter::surf_a(strand, r));
  for (int k = strand + 1; k <= ctx.n; ++k) out.push_back(Letter::small_t(strand, k));
  return out;
}

std::vector<Word> LHSampler::sample(GroupContext const& ctx, int strand, IndexTuple const& indices) const {
  auto const basis = alphabet(ctx, strand);
  std::vector<std::uint64_t> salt(indices.begin(), indices.end());
  std::uint64_t s = mix_seed(seed, {static_cast<std::uint64_t>(strand), 0x4c48ULL});
  for (auto v : salt) s = mix_seed(s, {v});
  Rng rng(s);
  std::vector<Word> out;
  out.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    int const len = max_h_length <= 0 ? 0 : rng.between(0, max_h_length);
    out.push_back(random_reduced_word(rng, ctx, basis, len));
  }
  return out;
}

void for_each_relator(Presentation const& p, std::optional<LHSampler> const& lh,
                      std::function<void(Relator const&)> const& visit) {
  if (p.has_conjugator_family() && !lh)
    throw std::invalid_argument("presentation " + describe(p.context) + " has an LH family; a sampler is required");
  for (auto const& fam : p.families) {
    for (auto const& idx : fam.domain) {
      if (!fam.takes_conjugator) {
        visit(Relator{fam.tag, idx, std::nullopt, fam.emit(idx, nullptr)});
        continue;
      }
      for (auto const& h : lh->sample(p.context, fam.strand_of(idx), idx))
        visit(Relator{fam.tag, idx, h, fam.emit(idx, &h)});
    }
  }
}

std::vector<Relator> enumerate_relators(Presentation const& p, std::optional<LHSampler> const& lh) {
  std::vector<Relator> out;
  for_each_relator(p, lh, [&](Relator const& r) { out.push_back(r); });
  return out;
}

}  // namespace braidlab
