#include <doctest.h>

#include "adjoint.hpp"
#include "helpers.hpp"

using namespace catv;
using testutil::cat;
using testutil::make_mf;
using testutil::naive_nat_count;

TEST_CASE("kan right adjoint along pick-object functors") {
  auto B = make_base({BaseKind::finset});
  auto T = cat(FinCat::terminal());
  auto A = cat(FinCat::arrow());

  // phi: terminal -> arrow at 0, Y = n over the terminal.
  auto Y = make_mf(T, B, {3});
  auto kr0 = right_adjoint_of_precomposition(pick_object(T, A, 0), Y);
  CHECK(kr0.G.at(0).size == 3);
  CHECK(kr0.G.at(1).size == 1);

  auto kr1 = right_adjoint_of_precomposition(pick_object(T, A, 1), Y);
  CHECK(kr1.G.at(0).size == 3);
  CHECK(kr1.G.at(1).size == 3);

  // phi = identity: G(Y) recovers Y by the free-map iso.
  auto M = make_mf(A, B, {2, 3}, {{"f", {0, 2}}});
  auto kr_id = right_adjoint_of_precomposition(identity_functor(A), M);
  CHECK(kr_id.G.at(0).size == M.at(0).size);
  CHECK(kr_id.G.at(1).size == M.at(1).size);
}

TEST_CASE("precomposition adjunction: enumerated bijection") {
  Report rep;
  Sampler smp(23);
  auto B = make_base({BaseKind::finset});
  auto T = cat(FinCat::terminal());
  auto A = cat(FinCat::arrow());

  // phi: terminal -> arrow at 0; X = (2,1) over the arrow, Y = 3 over the
  // terminal. Both sides must have 9 elements.
  auto X = make_mf(A, B, {2, 1}, {{"f", {0, 0}}});
  auto Y = make_mf(T, B, {3});
  CatFunctor phi = pick_object(T, A, 0);
  MFunctor Xphi = precompose(X, phi);
  CHECK(static_cast<int64_t>(enumerate_nat_trans(Xphi, Y).size()) == 9);
  verify_precomposition_adjunction(rep, phi, X, Y, smp, 2);

  // identity phi round-trips through the normalization.
  auto M = make_mf(A, B, {2, 2}, {{"f", {1, 1}}});
  verify_precomposition_adjunction(rep, identity_functor(A), M, M, smp, 2);

  // finvect analogue
  auto V = make_base({BaseKind::finvect, 2});
  auto XV = make_mf(A, V, {1, 1}, {{"f", {1}}});
  auto YV = make_mf(T, V, {2});
  verify_precomposition_adjunction(rep, pick_object(T, A, 0), XV, YV, smp, 1);

  CHECK(rep.all_pass());
}

TEST_CASE("internal hom of the functor category") {
  auto B = make_base({BaseKind::finset});
  auto T = cat(FinCat::terminal());
  auto A = cat(FinCat::arrow());

  // terminal: (P^N) is the base internal hom.
  auto NT = make_mf(T, B, {2});
  auto PT = make_mf(T, B, {3});
  auto eT = internal_hom_functorcat(NT, PT);
  CHECK(eT.F.at(0).size == 9);

  // N = K: P^K recovers P pointwise by the free-map iso.
  auto P = make_mf(A, B, {2, 3}, {{"f", {0, 2}}});
  auto eK = internal_hom_functorcat(unit_functor(A, B), P);
  CHECK(eK.F.at(0).size == P.at(0).size);
  CHECK(eK.F.at(1).size == P.at(1).size);

  // arrow, N=(1,1), P=(2,3): (P^N)_0 = 2 cross-checked by brute force below.
  auto N = make_mf(A, B, {1, 1}, {{"f", {0}}});
  auto e = internal_hom_functorcat(N, P);
  CHECK(e.F.at(0).size == 2);
  auto h0 = build_free(A, B, 0);
  MFunctor h0N = tensor_pointwise(h0.functor, N);
  CHECK(static_cast<int64_t>(enumerate_nat_trans(h0N, P).size()) == 2);
}

TEST_CASE("closed monoidal structure of the functor category") {
  Report rep;
  auto B = make_base({BaseKind::finset});
  auto A = cat(FinCat::arrow());
  auto T = cat(FinCat::terminal());

  auto P = make_mf(A, B, {2, 3}, {{"f", {0, 2}}});
  auto N = make_mf(A, B, {1, 1}, {{"f", {0}}});
  auto M = make_mf(A, B, {1, 1}, {{"f", {0}}});
  verify_closed_monoidal_functorcat(rep, M, N, P);
  // M = K degenerate case
  verify_closed_monoidal_functorcat(rep, unit_functor(A, B), N, P);

  auto V = make_base({BaseKind::finvect, 2});
  verify_closed_monoidal_functorcat(rep, make_mf(T, V, {1}), make_mf(T, V, {1}),
                                    make_mf(T, V, {1}));
  CHECK(rep.all_pass());

  // counts for the explicit instance
  MFunctor MN = tensor_pointwise(M, N);
  CHECK(static_cast<int64_t>(enumerate_nat_trans(MN, P).size()) == 2);
}

TEST_CASE("pointwise coherence of the functor category") {
  Report rep;
  auto B = make_base({BaseKind::finset});
  auto A = cat(FinCat::arrow());
  auto M = make_mf(A, B, {2, 1}, {{"f", {0}}});
  auto N = make_mf(A, B, {1, 2}, {{"f", {1}}});
  auto P = make_mf(A, B, {2, 2}, {{"f", {1, 0}}});
  auto Q = make_mf(A, B, {3, 1}, {{"f", {0, 0, 0}}});
  verify_functorcat_coherence(rep, M, N, P, Q);
  CHECK(rep.all_pass());
}

TEST_CASE("cocontinuity and limit consistency") {
  Report rep;
  auto B = make_base({BaseKind::finset});
  auto A = cat(FinCat::arrow());
  auto T = cat(FinCat::terminal());

  auto M = make_mf(A, B, {2, 3}, {{"f", {0, 2}}});
  verify_cocontinuity_precompose(rep, pick_object(T, A, 0), M);
  verify_cocontinuity_precompose(rep, identity_functor(A), M);

  verify_kan_limit_consistency(rep, M);
  auto W = cat(FinCat::walking_idempotent());
  verify_kan_limit_consistency(rep, make_mf(W, B, {3}, {{"e", {0, 1, 1}}}));

  auto V = make_base({BaseKind::finvect, 3});
  verify_kan_limit_consistency(rep, make_mf(A, V, {1, 1}, {{"f", {2}}}));

  CHECK(rep.all_pass());
}

TEST_CASE("evaluation has adjoints on both sides") {
  Report rep;
  Sampler smp(31);
  auto B = make_base({BaseKind::finset});
  auto A = cat(FinCat::arrow());
  auto T = cat(FinCat::terminal());

  int i = 1;
  auto M = make_mf(A, B, {2, 2}, {{"f", {0, 1}}});
  // left adjoint of Ev_i: h_i ⊗ -
  verify_eval_adjunction(rep, build_free(A, B, i), Obj{2}, M, smp, 2);
  // right adjoint of Ev_i: the kan right adjoint along terminal -> arrow
  auto Y = make_mf(T, B, {2});
  verify_precomposition_adjunction(rep, pick_object(T, A, i), M, Y, smp, 2);
  CHECK(rep.all_pass());
}
