#pragma once

#include "yoneda.hpp"

namespace catv {

// The right adjoint to precomposition along phi: I -> J, i.e. the pointwise
// right Kan extension: G(Y)_j = map(h_j ∘ phi, Y) for Y over I, with the
// action on J-morphisms induced purely through the end factorizer.
struct KanRight {
  MFunctor G;  // over phi.target
  std::vector<MapResult> maps;
  std::vector<FreeFunctor> free_on_target;
  CatFunctor phi;
};

KanRight right_adjoint_of_precomposition(const CatFunctor& phi, const MFunctor& Y);

// hom_{M^I}(X∘phi, Y) <-> hom_{M^J}(X, G(Y)) for X over J = phi.target.
NatTrans kan_translate(const KanRight& kr, const MFunctor& X, const MFunctor& Y,
                       const NatTrans& tau);
NatTrans kan_translate_back(const KanRight& kr, const MFunctor& X, const MFunctor& Y,
                            const NatTrans& sigma);

void verify_precomposition_adjunction(Report& rep, const CatFunctor& phi, const MFunctor& X,
                                      const MFunctor& Y, Sampler& probes,
                                      int64_t probe_max_size);

// The internal hom of the functor category: (P^N)_i = map(h_i ⊗ N, P), with
// the action on I-morphisms through the end factorizer.
struct ExponentFunctor {
  MFunctor F;  // P^N
  std::vector<MapResult> maps;
  std::vector<FreeFunctor> free_family;
};

ExponentFunctor internal_hom_functorcat(const MFunctor& N, const MFunctor& P);

// hom_{M^I}(M⊗N, P) <-> hom_{M^I}(M, P^N), routed through the density
// reconstruction of M (the concrete witness that -⊗N is cocontinuous).
struct ClosedMonoidalData {
  ExponentFunctor exp;        // P^N
  DensityResult density;      // of M
  std::vector<CoendResult> tensored;  // per j: coend of (h_i(j)⊗M_i')⊗N_j
  std::vector<Mor> chi;       // per j: tensored_j -> M_j⊗N_j (must be iso)
  bool cocontinuity_ok = false;
};

ClosedMonoidalData closed_monoidal_data(const MFunctor& M, const MFunctor& N,
                                        const MFunctor& P);
NatTrans closed_forward(const ClosedMonoidalData& d, const MFunctor& M, const MFunctor& N,
                        const MFunctor& P, const NatTrans& sigma);  // to hom(M⊗N, P)
NatTrans closed_backward(const ClosedMonoidalData& d, const MFunctor& M, const MFunctor& N,
                         const MFunctor& P, const NatTrans& tau);  // to hom(M, P^N)

void verify_closed_monoidal_functorcat(Report& rep, const MFunctor& M, const MFunctor& N,
                                       const MFunctor& P);

// Pointwise monoidal coherence of the functor category: associator/unitor
// naturality plus pentagon, triangle, hexagon and the self-inverse braiding,
// all as exact table equalities.
void verify_functorcat_coherence(Report& rep, const MFunctor& M, const MFunctor& N,
                                 const MFunctor& P, const MFunctor& Q);

// Cocontinuity spot-checks: precomposition and -⊗N preserve the computed
// density coends (label nt1).
void verify_cocontinuity_precompose(Report& rep, const CatFunctor& phi, const MFunctor& M);

// Limit consistency: along I -> terminal, G(Y) at the point is map(K, Y),
// which must agree with the direct end of the Y-diagonal bifunctor.
void verify_kan_limit_consistency(Report& rep, const MFunctor& Y);

}  // namespace catv
