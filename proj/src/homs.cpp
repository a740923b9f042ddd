#include "braidlab/homs.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "braidlab/parse.hpp"

namespace braidlab {

namespace {

class FreeOracle final : public TrivialityOracle {
 public:
  explicit FreeOracle(GroupContext ctx) : ctx_(ctx) {}
  GroupContext context() const override { return ctx_; }
  Verdict decide(Word const& w) const override { return verdict_of(free_reduce(w).empty()); }
  std::string name() const override { return "free-reduction"; }

 private:
  GroupContext ctx_;
};

class Pi1ProductOracle final : public TrivialityOracle {
 public:
  Pi1ProductOracle(int g, int factors) : ctx_(GroupContext::pi1(g, factors)) {}
  GroupContext context() const override { return ctx_; }
  Verdict decide(Word const& w) const override { return tuple_is_trivial(split_components(w)); }
  std::string name() const override { return ctx_.g == 1 ? "abelianization" : "dehn"; }

 private:
  GroupContext ctx_;
};

class SymmetricOracle final : public TrivialityOracle {
 public:
  explicit SymmetricOracle(int n) : ctx_(GroupContext::symmetric(n)) {}
  GroupContext context() const override { return ctx_; }
  Verdict decide(Word const& w) const override { return verdict_of(permutation_of(w).is_identity()); }
  std::string name() const override { return "permutation"; }

 private:
  GroupContext ctx_;
};

class UndecidedOracle final : public TrivialityOracle {
 public:
  explicit UndecidedOracle(GroupContext ctx) : ctx_(ctx) {}
  GroupContext context() const override { return ctx_; }
  Verdict decide(Word const& w) const override {
    return free_reduce(w).empty() ? Verdict::Trivial : Verdict::Unknown;
  }
  std::string name() const override { return "none"; }

 private:
  GroupContext ctx_;
};

}  // namespace

OraclePtr free_group_oracle(GroupContext const& ctx) { return std::make_shared<FreeOracle>(ctx); }
OraclePtr pi1_product_oracle(int g, int factors) { return std::make_shared<Pi1ProductOracle>(g, factors); }
OraclePtr symmetric_oracle(int n) { return std::make_shared<SymmetricOracle>(n); }
OraclePtr undecided_oracle(GroupContext const& ctx) { return std::make_shared<UndecidedOracle>(ctx); }

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(n);
  for (int k = 0; k < n; ++k) p.image[k] = k + 1;
  return p;
}

Permutation Permutation::transposition(int n, int i) {
  auto p = identity(n);
  std::swap(p.image.at(i - 1), p.image.at(i));
  return p;
}

Permutation Permutation::after(Permutation const& other) const {
  Permutation out;
  out.image.resize(image.size());
  for (std::size_t k = 0; k < image.size(); ++k) out.image[k] = (*this)(other.image[k]);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.image.resize(image.size());
  for (std::size_t k = 0; k < image.size(); ++k) out.image[image[k] - 1] = static_cast<int>(k) + 1;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < image.size(); ++k)
    if (image[k] != static_cast<int>(k) + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < image.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(k + 1) + "→" + std::to_string(image[k]);
  }
  return out;
}

Permutation permutation_of(Word const& w) {
  auto const& ctx = w.context();
  if (!ctx.is_braid_type() && ctx.family != Family::Symmetric)
    throw ContextError("no strand permutation for " + describe(ctx));
  auto pi = Permutation::identity(ctx.n);
  for (auto const& l : w.letters()) {
    // a transposition is its own inverse, so the sign is irrelevant
    if (l.kind == Gen::Sigma) pi = pi.after(Permutation::transposition(ctx.n, l.i));
  }
  return pi;
}

GeneratorMap::GeneratorMap(std::string name, GroupContext domain, OraclePtr target, std::map<Letter, Word> images)
    : name_(std::move(name)), domain_(domain), oracle_(std::move(target)), images_(std::move(images)) {
  auto const tgt = oracle_->context();
  for (auto const& [letter, word] : images_) {
    if (letter.sign != 1 || !domain_.admits(letter))
      throw ContextError("map " + name_ + ": image key " + format_letter(letter, domain_) + " is not a domain symbol");
    if (word.context() != tgt)
      throw ContextError("map " + name_ + ": image of " + format_letter(letter, domain_) + " is not in " +
                         describe(tgt));
  }
  for (auto const& gen : domain_.generators())
    if (!images_.contains(gen)) throw MissingImage(gen);
}

std::optional<Word> GeneratorMap::image(Letter const& positive) const {
  auto it = images_.find(positive);
  if (it == images_.end()) return std::nullopt;
  return it->second;
}

Word apply(GeneratorMap const& map, Word const& w) {
  if (w.context() != map.domain())
    throw ContextError("map " + map.name() + " expects " + describe(map.domain()) + ", got " + describe(w.context()));
  auto const target = map.target();
  return substitute(w, target, [&](Letter const& l) -> std::optional<Word> {
    if (auto img = map.image(l)) return img;
    if (map.domain().is_ambient(l)) return std::nullopt;
    return apply(map, expand_letter(l, map.domain()));
  });
}

namespace {

Word single(GroupContext const& ctx, Letter l) { return Word(ctx, {l}); }

std::map<Letter, Word> strand_projection_images(GroupContext const& domain, GroupContext const& target) {
  std::map<Letter, Word> images;
  for (auto const& gen : domain.generators()) {
    if (gen.kind == Gen::SurfA)
      images.emplace(gen, single(target, gen));
    else
      images.emplace(gen, Word(target));
  }
  return images;
}

std::map<Letter, Word> identity_images(GroupContext const& domain, GroupContext const& target) {
  std::map<Letter, Word> images;
  for (auto const& gen : domain.generators()) images.emplace(gen, single(target, gen));
  return images;
}

std::map<Letter, Word> permutation_images(GroupContext const& domain, GroupContext const& target) {
  std::map<Letter, Word> images;
  for (auto const& gen : domain.generators())
    images.emplace(gen, gen.kind == Gen::Sigma ? single(target, gen) : Word(target));
  return images;
}

}  // namespace

GeneratorMap theta_hat_map(int n, int g) {
  auto domain = GroupContext::hat_pure(n, g);
  auto oracle = pi1_product_oracle(g, n);
  return GeneratorMap("theta_hat", domain, oracle, strand_projection_images(domain, oracle->context()));
}

GeneratorMap theta_map(int n, int g) {
  auto domain = GroupContext::pure(n, g);
  auto oracle = pi1_product_oracle(g, n);
  return GeneratorMap("theta", domain, oracle, strand_projection_images(domain, oracle->context()));
}

GeneratorMap f_map(int n, int g) {
  auto domain = GroupContext::pure(n, 0);
  auto target = GroupContext::pure(n, g);
  return GeneratorMap("f", domain, undecided_oracle(target), identity_images(domain, target));
}

GeneratorMap f_hat_map(int n, int g) {
  auto domain = GroupContext::hat_pure(n, 0);
  auto target = GroupContext::hat_pure(n, g);
  return GeneratorMap("f_hat", domain, undecided_oracle(target), identity_images(domain, target));
}

GeneratorMap p1_map(int n) {
  auto domain = GroupContext::pure(n, 0);
  auto target = GroupContext::hat_pure(n, 0);
  return GeneratorMap("p1", domain, undecided_oracle(target), identity_images(domain, target));
}

GeneratorMap p2_map(int n, int g) {
  auto domain = GroupContext::pure(n, g);
  auto target = GroupContext::hat_pure(n, g);
  return GeneratorMap("p2", domain, undecided_oracle(target), identity_images(domain, target));
}

GeneratorMap projection_map(int n, int g) {
  auto domain = GroupContext::braid(n, g);
  auto target = GroupContext::hat_braid(n, g);
  return GeneratorMap("p", domain, undecided_oracle(target), identity_images(domain, target));
}

GeneratorMap psi_map(int n, int g, Family domain_family) {
  if (domain_family != Family::HatBn && domain_family != Family::Bn)
    throw ContextError("psi is defined on Bn or HatBn");
  auto domain = GroupContext::make(domain_family, n, g);
  auto oracle = symmetric_oracle(n);
  return GeneratorMap("psi", domain, oracle, permutation_images(domain, oracle->context()));
}

GeneratorMap corrupted_theta_hat_map(int n, int g) {
  auto domain = GroupContext::hat_pure(n, g);
  auto oracle = pi1_product_oracle(g, n);
  auto images = strand_projection_images(domain, oracle->context());
  images.insert_or_assign(Letter::surf_a(1, 1), single(oracle->context(), Letter::surf_a(1, 2)));
  return GeneratorMap("theta_hat_corrupted", domain, oracle, std::move(images));
}

GeneratorMap corrupted_psi_map(int n, int g) {
  auto domain = GroupContext::hat_braid(n, g);
  auto oracle = symmetric_oracle(n);
  auto images = permutation_images(domain, oracle->context());
  if (n < 2 || g < 1) throw ContextError("corrupted psi needs n >= 2 and g >= 1");
  images.insert_or_assign(Letter::surf_a(1, 1), single(oracle->context(), Letter::sigma(1)));
  return GeneratorMap("psi_corrupted", domain, oracle, std::move(images));
}

Pi1Tuple theta_hat(Word const& w) {
  auto const& ctx = w.context();
  if (!ctx.is_pure_type() || ctx.g < 1)
    throw ContextError("theta_hat needs a pure surface word, got " + describe(ctx));
  auto map = ctx.family == Family::HatPBn ? theta_hat_map(ctx.n, ctx.g) : theta_map(ctx.n, ctx.g);
  return split_components(apply(map, w));
}

Word theta_preimage(Pi1Tuple const& t, int n) {
  if (static_cast<int>(t.size()) != n) throw ContextError("tuple size does not match n");
  auto ctx = GroupContext::hat_pure(n, t.g);
  std::vector<Letter> out;
  for (int i = 1; i <= n; ++i)
    for (auto const& l : t.components[i - 1].letters()) out.push_back(Letter::surf_a(i, l.j, l.sign));
  return free_reduce(Word(ctx, std::move(out)));
}

WellDefinedReport verify_well_defined(GeneratorMap const& map, std::optional<LHSampler> const& lh) {
  auto const pres = build_presentation(map.domain().family, map.domain().n, map.domain().g);
  auto const relators = enumerate_relators(pres, lh);

  std::vector<Verdict> verdicts(relators.size());
  std::vector<Word> images(relators.size(), Word(map.target()));
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      images[k] = apply(map, relators[k].word);
      verdicts[k] = map.oracle().decide(images[k]);
    }
  };
  std::size_t const workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  std::size_t const chunk = (relators.size() + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (std::size_t lo = 0; lo < relators.size(); lo += chunk)
    jobs.push_back(std::async(std::launch::async, work, lo, std::min(relators.size(), lo + chunk)));
  for (auto& j : jobs) j.get();

  WellDefinedReport report{map.name(), map.domain(), relators.size(), 0, {}, {}};
  for (std::size_t k = 0; k < relators.size(); ++k) {
    if (verdicts[k] == Verdict::Trivial) {
      ++report.passed;
      continue;
    }
    auto const& r = relators[k];
    RelatorFailure f{r.tag, r.indices, std::nullopt, format_word(r.word), format_word(images[k])};
    if (r.conjugator) f.conjugator = format_word(*r.conjugator);
    (verdicts[k] == Verdict::Unknown ? report.unknown : report.failed).push_back(std::move(f));
  }
  return report;
}

}  // namespace braidlab
