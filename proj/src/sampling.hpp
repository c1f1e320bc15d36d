#pragma once

#include <optional>
#include <random>

#include "mfunctor.hpp"

namespace catv {

// Deterministic sampling; mt19937_64 guarantees identical draws for a given
// seed across runs.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  int64_t below(int64_t n) { return n <= 1 ? 0 : static_cast<int64_t>(rng_() % n); }
  Obj obj(int64_t max_size) { return Obj{below(max_size + 1)}; }

  // nullopt when the hom-set is empty.
  std::optional<Mor> mor(const BaseCategory& B, Obj a, Obj b);

  // Rejection-samples a lawful functor with component sizes <= max_size.
  // Throws input_error when no lawful functor is found within the budget.
  MFunctor functor(std::shared_ptr<const FinCat> index,
                   std::shared_ptr<const BaseCategory> base, int64_t max_size,
                   int max_attempts = 20000);

  // A random natural transformation, if any exists.
  std::optional<NatTrans> nat(const MFunctor& M, const MFunctor& N);

 private:
  std::mt19937_64 rng_;
};

// Every lawful functor index -> base with component sizes <= max_size.
// Exhaustive; intended for index categories with few morphisms.
std::vector<MFunctor> enumerate_functors(std::shared_ptr<const FinCat> index,
                                         std::shared_ptr<const BaseCategory> base,
                                         int64_t max_size);

}  // namespace catv
