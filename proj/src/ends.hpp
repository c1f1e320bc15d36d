#pragma once

#include <span>

#include "mfunctor.hpp"

namespace catv {

// A bifunctor I^op x I -> base, materialized as full tables. For a stored
// morphism f: s -> d and g: s' -> d', action(f, g) is the induced map
// F(d, s') -> F(s, d')  (contravariant first slot, covariant second).
struct Bifunctor {
  std::shared_ptr<const FinCat> index;
  std::shared_ptr<const BaseCategory> base;
  std::vector<Obj> objs;  // [i * n + j]
  std::vector<Mor> mors;  // [f * m + g]

  Obj at(int i, int j) const { return objs[i * index->n_objects() + j]; }
  const Mor& action(int f, int g) const { return mors[f * index->n_morphisms() + g]; }

  // Identities, composition in each slot, and the mixed interchange,
  // checked on every morphism pair.
  Validation validate() const;
};

// Builds the table-backed bifunctor from a callback giving F(i,j) and the
// action on a stored-morphism pair.
Bifunctor make_bifunctor(std::shared_ptr<const FinCat> index,
                         std::shared_ptr<const BaseCategory> base,
                         const std::function<Obj(int, int)>& obj_at,
                         const std::function<Mor(int, int)>& mor_at);

// (i,j) -> hom(M_i, N_j) as a finite set, with pre/post-composition actions.
// Always finset-valued regardless of the functors' base.
Bifunctor homset_bifunctor(const MFunctor& M, const MFunctor& N);

// (i,j) -> [M_i, N_j] in the functors' own base.
Bifunctor internal_hom_bifunctor(const MFunctor& M, const MFunctor& N);

// The end as the equalizer of the two canonical maps
// prod_i F(i,i) => prod_{f: i->j} F(i,j).
struct EndResult {
  std::shared_ptr<const BaseCategory> base;
  Obj carrier;
  std::vector<Mor> legs;  // carrier -> F(i,i)
  ProductResult diag;
  EqualizerResult eq;

  // Factors a wedge (w -> F(i,i))_i through the carrier; rejects families
  // that do not satisfy the wedge identities.
  Mor factor(std::span<const Mor> wedge) const;
};

// Dual: coequalizer of coprod_{f: i->j} F(j,i) => coprod_i F(i,i).
struct CoendResult {
  std::shared_ptr<const BaseCategory> base;
  Obj carrier;
  std::vector<Mor> colegs;  // F(i,i) -> carrier
  CoproductResult diag;
  CoequalizerResult coeq;

  Mor cofactor(std::span<const Mor> cowedge) const;
};

EndResult compute_end(const Bifunctor& F);
CoendResult compute_coend(const Bifunctor& F);

// Wedges d -> F(.,.) / cowedges F(.,.) -> d, enumerated directly (the
// continuity oracle). Each entry is one component tuple.
std::vector<std::vector<Mor>> enumerate_wedges(const Bifunctor& F, Obj d);
std::vector<std::vector<Mor>> enumerate_cowedges(const Bifunctor& F, Obj d);

struct ContinuityReport {
  bool pass = false;
  int64_t hom_into_end = 0, wedges = 0;
  int64_t hom_out_of_coend = 0, cowedges = 0;
};

// hom(d, end) <-> wedges from d, and hom(coend, d) <-> cowedges into d,
// both checked as explicit bijections.
ContinuityReport check_end_continuity(const Bifunctor& F, Obj d);

struct EndOfHomReport {
  bool pass = false;
  int64_t end_cardinality = 0;
  int64_t nat_trans_count = 0;
};

// The end of hom(M-, N=) has exactly one element per natural transformation
// M -> N; checked leg-by-leg against the brute-force enumeration.
EndOfHomReport end_of_hom_equals_nat(const MFunctor& M, const MFunctor& N);

}  // namespace catv
