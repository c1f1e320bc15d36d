#pragma once

#include "funcat.hpp"

namespace catv {

// The free functor at i: j |-> coproduct of units indexed by hom(i,j),
// with explicit summand bookkeeping (which injection belongs to which
// morphism f in I(i,j)). Every canonical map downstream is built from it.
struct FreeFunctor {
  MFunctor functor;
  int based_at = 0;
  std::vector<std::vector<int>> summands;  // per object j: morphisms i -> j

  const Obj& at(int j) const { return functor.at(j); }
  // Injection of the summand labelled by morphism f: unit -> h(j).
  Mor injection(int j, int f) const;
  int summand_pos(int j, int f) const;
};

FreeFunctor build_free(std::shared_ptr<const FinCat> index,
                       std::shared_ptr<const BaseCategory> base, int i);

// s-fold coproduct of the unit.
Obj free_on_set(const BaseCategory& B, int64_t s);
// Global points hom(unit, m), the underlying-set functor.
std::vector<Mor> points_of(const BaseCategory& B, Obj m);

// hom(U(s), m) <-> (maps s -> points(m)), checked as a natural bijection on
// fully enumerated sides. Emits under label eq1 (it is the same
// free/forgetful mechanism one level down).
void verify_free_points_adjunction(Report& rep, const BaseCategory& B, int64_t s, Obj m,
                                   Sampler& probes, int64_t probe_max_size);

// hom_{M^I}(h_i, M) <-> hom(unit, M_i): forward evaluates at the identity
// summand, backward cotuples M(f) over the summands. Exhaustive.
void verify_hom_from_free(Report& rep, const FreeFunctor& h, const MFunctor& M);

// The canonical morphism map(h_i, M) -> M_i together with its explicit
// inverse wedge; asserts both composites are identities and is_iso holds.
struct FreeMapIso {
  MapResult map;   // map(h_i, M)
  Mor to_value;    // map(h_i,M) -> M_i
  Mor from_value;  // M_i -> map(h_i,M)
  bool ok = false;
};
FreeMapIso free_map_iso(const FreeFunctor& h, const MFunctor& M);
void verify_free_map_iso(Report& rep, const FreeFunctor& h, const MFunctor& M);

// hom_{M^I}(h_i ⊗ m, M) <-> hom(m, M_i), with naturality probes in m and M.
void verify_eval_adjunction(Report& rep, const FreeFunctor& h, Obj m, const MFunctor& M,
                            Sampler& probes, int64_t probe_max_size);

// Reconstruction: at every object j, the coend over (i,i') of
// h_i(j) ⊗ M_{i'} maps isomorphically onto M_j, naturally in j.
struct DensityResult {
  std::vector<CoendResult> coends;   // per object j
  std::vector<Mor> comparisons;      // coend_j -> M_j
  bool ok = false;
};
DensityResult density_data(const MFunctor& M);
void verify_density(Report& rep, const MFunctor& M);

// The cowedge leg h_i(j) ⊗ M_{i'}-diagonal -> M_j used by the density
// comparison: on the summand labelled f: i -> j it is M(f) after the unitor.
Mor density_cowedge_leg(const FreeFunctor& h, const MFunctor& M, int j);

}  // namespace catv
