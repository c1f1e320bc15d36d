#pragma once

#include "ends.hpp"
#include "report.hpp"
#include "sampling.hpp"

namespace catv {

// map(M,N) = end over i of [M_i, N_i], with the end kept around for its
// legs and factorizer.
struct MapResult {
  Obj carrier;
  EndResult end;
};

MapResult map_functors(const MFunctor& M, const MFunctor& N);

// Functorial action of map in each slot, built through the end factorizer
// only. `dst` must be the map-end of the corresponding pair.
// map(M, v): map(M,N) -> map(M,N2) for v: N -> N2.
Mor map_post(const MapResult& src, const MapResult& dst, const MFunctor& M,
             const MFunctor& N, const MFunctor& N2, const NatTrans& v);
// map(x, N): map(M,N) -> map(M2,N) for x: M2 -> M.
Mor map_pre(const MapResult& src, const MapResult& dst, const MFunctor& M,
            const MFunctor& M2, const MFunctor& N, const NatTrans& x);

// The distinguished point of map(M,M): the wedge of curried unit actions,
// factored through the end.
Mor map_identity_point(const MapResult& r, const MFunctor& M);

// The closed-module translations. tau ranges over nat(m⊗M, N), sigma over
// nat(M, N^m), u over hom(m, map(M,N)). The exponent direction routes
// through the braiding; the map direction through curry and the factorizer.
NatTrans l1_to_exponent(Obj m, const MFunctor& M, const MFunctor& N, const NatTrans& tau);
NatTrans l1_from_exponent(Obj m, const MFunctor& M, const MFunctor& N, const NatTrans& sigma);
Mor l1_to_map(Obj m, const MFunctor& M, const MFunctor& N, const MapResult& r,
              const NatTrans& tau);
NatTrans l1_from_map(Obj m, const MFunctor& M, const MFunctor& N, const MapResult& r,
                     const Mor& u);

// Full check for one (m, M, N): cardinalities of the three hom-sets agree,
// both translations round-trip on every element, the translations are
// natural in all three slots (probed), and the three module coherence
// diagrams hold as exact table equalities.
void verify_closed_module(Report& rep, Obj m, const MFunctor& M, const MFunctor& N,
                          Sampler& probes, int64_t probe_max_size);

// Module-functor coherence: the structure isos mu are componentwise isos and
// the two coherence diagrams commute exactly.
void verify_module_functor_identity(Report& rep, Obj m, const MFunctor& M);
void verify_module_functor_precompose(Report& rep, const CatFunctor& phi, Obj m, Obj n,
                                      const MFunctor& Y);
void verify_module_functor_tensor(Report& rep, const MFunctor& N, Obj m, Obj n,
                                  const MFunctor& M);
// F(x) = h ⊗ x as a functor base -> base^I (h is a fixed functor, typically
// free); checks the genuinely non-strict mu built from the braiding.
void verify_module_functor_free(Report& rep, const MFunctor& h, Obj m, Obj n, Obj x);

}  // namespace catv
