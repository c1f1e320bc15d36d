#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "basecat.hpp"
#include "fincat.hpp"

namespace catv {

// A functor I -> base, as explicit assignment tables. Identities are stored
// like every other morphism.
struct MFunctor {
  std::shared_ptr<const FinCat> index;
  std::shared_ptr<const BaseCategory> base;
  std::vector<Obj> on_objects;
  std::vector<Mor> on_morphisms;

  const Obj& at(int i) const { return on_objects[i]; }
  const Mor& map(int f) const { return on_morphisms[f]; }

  // Identity and composite preservation, checked exhaustively.
  Validation validate() const;
};

MFunctor constant_functor(std::shared_ptr<const FinCat> index,
                          std::shared_ptr<const BaseCategory> base, Obj value);

// K: i -> unit object, every morphism to the identity.
MFunctor unit_functor(std::shared_ptr<const FinCat> index,
                      std::shared_ptr<const BaseCategory> base);

// A natural transformation is just its component list; which functors it
// relates travels alongside in every call.
struct NatTrans {
  std::vector<Mor> components;
  friend bool operator==(const NatTrans&, const NatTrans&) = default;
};

bool naturality_holds(const MFunctor& M, const MFunctor& N, const NatTrans& t);
Validation validate_nat(const MFunctor& M, const MFunctor& N, const NatTrans& t);

// All natural transformations M -> N in lexicographic component order,
// via backtracking with per-object pruning. Throws resource_error when the
// unpruned candidate space exceeds the hom cap.
std::vector<NatTrans> enumerate_nat_trans(const MFunctor& M, const MFunctor& N);
int64_t count_nat_trans(const MFunctor& M, const MFunctor& N);

// Candidate-space size (the product of component hom counts).
int64_t nat_candidate_space(const MFunctor& M, const MFunctor& N);

// The identity transformation on M.
NatTrans identity_nat(const MFunctor& M);

// Vertical composite t2 ∘ t1.
NatTrans compose_nat(const MFunctor& M, const NatTrans& t2, const NatTrans& t1);

// m ⊗ M (left action), M ⊗ m (right action), pointwise tensor and the
// exponent M^m with (M^m)_i = [m, M_i].
MFunctor act(Obj m, const MFunctor& M);
MFunctor act_right(const MFunctor& M, Obj m);
MFunctor tensor_pointwise(const MFunctor& M, const MFunctor& N);
MFunctor exponent(const MFunctor& M, Obj m);

// X ∘ Phi for X over Phi's target.
MFunctor precompose(const MFunctor& X, const CatFunctor& phi);

}  // namespace catv
