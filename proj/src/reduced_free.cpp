#include "braidlab/reduced_free.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <mutex>

#include "braidlab/presentation.hpp"
#include "braidlab/random.hpp"

namespace braidlab {

// All sequences of pairwise-distinct indices in 1..rank, ordered by degree
// then lexicographically, with a product table (-1 where indices repeat).
class MonomialBasis {
 public:
  explicit MonomialBasis(int rank) : rank_(rank) {
    std::size_t key_space = 1;
    for (int k = 0; k < rank; ++k) key_space *= static_cast<std::size_t>(rank + 1);
    slot_of_key_.assign(key_space, -1);
    std::vector<int> current;
    for (int degree = 0; degree <= rank; ++degree) extend(current, degree);

    std::size_t const n = monomials_.size();
    append_.assign(n * (rank + 1), -1);
    product_.assign(n * n, -1);
    for (std::size_t a = 0; a < n; ++a) {
      for (int i = 1; i <= rank; ++i) {
        if (masks_[a] & (1u << i)) continue;
        auto seq = monomials_[a];
        seq.push_back(i);
        append_[a * (rank + 1) + i] = index_of(seq);
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (masks_[a] & masks_[b]) continue;
        auto seq = monomials_[a];
        seq.insert(seq.end(), monomials_[b].begin(), monomials_[b].end());
        product_[a * n + b] = index_of(seq);
      }
    }
  }

  std::size_t size() const noexcept { return monomials_.size(); }
  std::vector<int> const& monomial(std::size_t k) const { return monomials_[k]; }
  int product(std::size_t a, std::size_t b) const { return product_[a * monomials_.size() + b]; }
  int append(std::size_t a, int i) const { return append_[a * (rank_ + 1) + i]; }

  int index_of(std::span<int const> seq) const {
    if (static_cast<int>(seq.size()) > rank_) return -1;
    std::size_t key = 0, scale = 1;
    unsigned mask = 0;
    for (int v : seq) {
      if (v < 1 || v > rank_ || (mask & (1u << v))) return -1;
      mask |= 1u << v;
      key += static_cast<std::size_t>(v) * scale;
      scale *= static_cast<std::size_t>(rank_ + 1);
    }
    return slot_of_key_[key];
  }

  static std::shared_ptr<MonomialBasis const> get(int rank) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<MonomialBasis const>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[rank];
    if (!slot) slot = std::make_shared<MonomialBasis const>(rank);
    return slot;
  }

 private:
  void extend(std::vector<int>& current, int degree) {
    if (static_cast<int>(current.size()) == degree) {
      std::size_t key = 0, scale = 1;
      unsigned mask = 0;
      for (int v : current) {
        key += static_cast<std::size_t>(v) * scale;
        scale *= static_cast<std::size_t>(rank_ + 1);
        mask |= 1u << v;
      }
      slot_of_key_[key] = static_cast<int>(monomials_.size());
      monomials_.push_back(current);
      masks_.push_back(mask);
      return;
    }
    for (int v = 1; v <= rank_; ++v) {
      if (std::find(current.begin(), current.end(), v) != current.end()) continue;
      current.push_back(v);
      extend(current, degree);
      current.pop_back();
    }
  }

  int rank_;
  std::vector<std::vector<int>> monomials_;
  std::vector<unsigned> masks_;
  std::vector<int> slot_of_key_;
  std::vector<int> append_;
  std::vector<int> product_;
};

MultilinearSeries::MultilinearSeries(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxSeriesRank)
    throw ContextError("series rank must lie in 0.." + std::to_string(kMaxSeriesRank));
  basis_ = MonomialBasis::get(rank);
  coeffs_.assign(basis_->size(), Coefficient(0));
}

MultilinearSeries MultilinearSeries::one(int rank) {
  MultilinearSeries s(rank);
  s.coeffs_[0] = 1;
  return s;
}

MultilinearSeries MultilinearSeries::generator(int rank, int i, int sign) {
  auto s = one(rank);
  int const idx = s.basis_->index_of(std::vector<int>{i});
  if (idx < 0) throw ContextError("generator index out of range");
  s.coeffs_[idx] = sign < 0 ? -1 : 1;
  return s;
}

MultilinearSeries MultilinearSeries::monomial(int rank, std::span<int const> indices) {
  MultilinearSeries s(rank);
  int const idx = s.basis_->index_of(indices);
  if (idx < 0) throw ContextError("not a multilinear monomial");
  s.coeffs_[idx] = 1;
  return s;
}

MultilinearSeries::Coefficient MultilinearSeries::coefficient(std::span<int const> indices) const {
  int const idx = basis_->index_of(indices);
  return idx < 0 ? Coefficient(0) : coeffs_[idx];
}

bool MultilinearSeries::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

bool MultilinearSeries::is_zero() const {
  for (auto const& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::vector<std::pair<std::vector<int>, MultilinearSeries::Coefficient>> MultilinearSeries::terms() const {
  std::vector<std::pair<std::vector<int>, Coefficient>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) out.emplace_back(basis_->monomial(k), coeffs_[k]);
  return out;
}

std::size_t MultilinearSeries::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](auto const& c) { return c != 0; }));
}

MultilinearSeries MultilinearSeries::operator+(MultilinearSeries const& o) const {
  if (o.rank_ != rank_) throw ContextError("series rank mismatch");
  auto out = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] += o.coeffs_[k];
  return out;
}

MultilinearSeries MultilinearSeries::operator-(MultilinearSeries const& o) const {
  if (o.rank_ != rank_) throw ContextError("series rank mismatch");
  auto out = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] -= o.coeffs_[k];
  return out;
}

MultilinearSeries MultilinearSeries::operator*(MultilinearSeries const& o) const {
  if (o.rank_ != rank_) throw ContextError("series rank mismatch");
  MultilinearSeries out(rank_);
  std::vector<std::size_t> rhs;
  for (std::size_t b = 0; b < o.coeffs_.size(); ++b)
    if (o.coeffs_[b] != 0) rhs.push_back(b);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (auto b : rhs) {
      int const idx = basis_->product(a, b);
      if (idx >= 0) out.coeffs_[idx] += coeffs_[a] * o.coeffs_[b];
    }
  }
  return out;
}

MultilinearSeries MultilinearSeries::inverse_unit() const {
  if (coeffs_[0] != 1) throw std::domain_error("inverse_unit: constant term must be 1");
  // (1 + N)^-1 = sum_k (-N)^k, and N^(rank+1) = 0
  auto const minus_n = one(rank_) - *this;
  auto result = one(rank_);
  auto power = one(rank_);
  for (int k = 1; k <= rank_; ++k) {
    power = power * minus_n;
    result = result + power;
  }
  return result;
}

std::string MultilinearSeries::to_string() const {
  std::string out;
  for (auto const& [seq, c] : terms()) {
    bool const negative = c < 0;
    Coefficient const mag = negative ? Coefficient(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono;
    for (int v : seq) mono += (mono.empty() ? "X" : " X") + std::to_string(v);
    if (seq.empty())
      out += mag.str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.str() + " " + mono;
  }
  return out.empty() ? "0" : out;
}

void MultilinearSeries::right_multiply_generator(int i, int sign) {
  if (i < 1 || i > rank_) throw ContextError("generator index out of range");
  // Sources are visited from the highest degree down so freshly written
  // (higher-degree) entries are never read again.
  for (std::size_t a = coeffs_.size(); a-- > 0;) {
    if (coeffs_[a] == 0) continue;
    int const idx = basis_->append(a, i);
    if (idx < 0) continue;
    if (sign > 0)
      coeffs_[idx] += coeffs_[a];
    else
      coeffs_[idx] -= coeffs_[a];
  }
}

MultilinearSeries magnus_expand(Word const& w) {
  auto const& ctx = w.context();
  if (ctx.family != Family::FreeGroup) throw ContextError("magnus_expand needs a free group word");
  auto s = MultilinearSeries::one(ctx.n);
  for (auto const& l : w.letters()) {
    if (l.kind != Gen::FreeX) throw ContextError("magnus_expand: non-x letter");
    s.right_multiply_generator(l.i, l.sign);
  }
  return s;
}

Verdict rf_is_trivial(Word const& w) { return verdict_of(magnus_expand(w).is_one()); }

namespace {

class ReducedFreeOracle final : public TrivialityOracle {
 public:
  explicit ReducedFreeOracle(int rank) : ctx_(GroupContext::free(rank)) {}
  GroupContext context() const override { return ctx_; }
  Verdict decide(Word const& w) const override { return rf_is_trivial(w); }
  std::string name() const override { return "magnus"; }

 private:
  GroupContext ctx_;
};

}  // namespace

OraclePtr reduced_free_oracle(int rank) { return std::make_shared<ReducedFreeOracle>(rank); }

ReducedEndo ReducedEndo::identity(int n) {
  ReducedEndo e;
  e.rank = n;
  for (int i = 1; i <= n; ++i) {
    e.images.push_back(MultilinearSeries::generator(n, i, 1));
    e.inverse_images.push_back(MultilinearSeries::generator(n, i, -1));
  }
  return e;
}

bool ReducedEndo::is_identity() const {
  for (int i = 1; i <= rank; ++i)
    if (!(images[i - 1] == MultilinearSeries::generator(rank, i, 1))) return false;
  return true;
}

namespace {

Word sigma_word_for_action(Word const& w) {
  auto const& ctx = w.context();
  if (!ctx.is_braid_type()) throw ContextError("Artin action needs a braid word, got " + describe(ctx));
  for (auto const& l : w.letters())
    if (l.kind == Gen::SurfA || l.kind == Gen::CapA)
      throw ContextError("Artin action is defined for disk braids only; surface letter present");
  return to_sigma_word(w);
}

}  // namespace

ReducedEndo artin_act(Word const& w) {
  auto const sigma = sigma_word_for_action(w);
  int const n = sigma.context().n;
  auto e = ReducedEndo::identity(n);
  auto& img = e.images;
  auto& inv = e.inverse_images;
  for (auto const& l : sigma.letters()) {
    std::size_t const a = l.i - 1, b = l.i;
    if (l.sign > 0) {
      auto new_a = img[a] * img[b] * inv[a];
      auto new_a_inv = img[a] * inv[b] * inv[a];
      img[b] = img[a];
      inv[b] = inv[a];
      img[a] = std::move(new_a);
      inv[a] = std::move(new_a_inv);
    } else {
      auto new_b = inv[b] * img[a] * img[b];
      auto new_b_inv = inv[b] * inv[a] * img[b];
      img[a] = img[b];
      inv[a] = inv[b];
      img[b] = std::move(new_b);
      inv[b] = std::move(new_b_inv);
    }
  }
  return e;
}

std::vector<Word> artin_act_words(Word const& w) {
  auto const sigma = sigma_word_for_action(w);
  int const n = sigma.context().n;
  auto const fctx = GroupContext::free(n);
  std::vector<Word> img;
  for (int i = 1; i <= n; ++i) img.push_back(Word(fctx, {Letter::free_x(i)}));
  constexpr std::size_t kMaxImage = 1'000'000;
  for (auto const& l : sigma.letters()) {
    std::size_t const a = l.i - 1, b = l.i;
    if (l.sign > 0) {
      Word new_a = concat({img[a], img[b], invert(img[a])});
      img[b] = img[a];
      img[a] = std::move(new_a);
    } else {
      Word new_b = concat({invert(img[b]), img[a], img[b]});
      img[a] = img[b];
      img[b] = std::move(new_b);
    }
    if (img[a].size() > kMaxImage || img[b].size() > kMaxImage)
      throw std::length_error("artin_act_words: image exceeds 10^6 letters");
  }
  return img;
}

Verdict lh_trivial_disk(Word const& w) {
  auto const sigma = sigma_word_for_action(w);
  if (!permutation_of(sigma).is_identity()) throw NotPureBraid("lh_trivial_disk: braid is not pure");
  return verdict_of(artin_act(sigma).is_identity());
}

Word sample_hn_element(int n, std::uint64_t seed, int size) {
  if (n < 2) throw ContextError("sample_hn_element needs n >= 2");
  auto const ctx = GroupContext::pure(n, 0);
  auto const gens = ctx.generators();
  Rng rng(mix_seed(seed, {static_cast<std::uint64_t>(n), 0x484eULL}));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);

  Word product(ctx);
  for (int k = 0; k < size; ++k) {
    auto const [i, j] = pairs[rng.below(pairs.size())];
    std::vector<Letter> t{Letter::big_t(i, j)};
    if (j - 1 > i) t.push_back(Letter::big_t(i, j - 1, -1));
    Word const small_t(ctx, std::move(t));
    Word const h = random_reduced_word(rng, ctx, gens, rng.between(0, 3));
    Word const c = random_reduced_word(rng, ctx, gens, rng.between(0, 3));
    product = concat(product, conjugate(commutator(small_t, conjugate(small_t, h)), c));
  }
  return product;
}

}  // namespace braidlab
