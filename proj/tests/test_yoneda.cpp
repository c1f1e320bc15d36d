#include <doctest.h>

#include "helpers.hpp"
#include "yoneda.hpp"

using namespace catv;
using testutil::cat;
using testutil::make_mf;
using testutil::naive_nat_count;

TEST_CASE("free/points adjunction") {
  Report rep;
  Sampler smp(3);
  auto B = make_base({BaseKind::finset});
  CHECK(free_on_set(*B, 3).size == 3);
  CHECK(points_of(*B, Obj{4}).size() == 4);
  verify_free_points_adjunction(rep, *B, 3, Obj{2}, smp, 3);
  verify_free_points_adjunction(rep, *B, 0, Obj{3}, smp, 3);

  auto V = make_base({BaseKind::finvect, 2});
  CHECK(free_on_set(*V, 3).size == 3);
  CHECK(points_of(*V, Obj{2}).size() == 4);
  CHECK(V->hom_count(free_on_set(*V, 3), Obj{2}) == 64);
  verify_free_points_adjunction(rep, *V, 3, Obj{2}, smp, 2);
  verify_free_points_adjunction(rep, *V, 0, Obj{2}, smp, 2);
  CHECK(rep.all_pass());
}

TEST_CASE("free functor fixtures") {
  auto B = make_base({BaseKind::finset});

  auto T = cat(FinCat::terminal());
  auto hT = build_free(T, B, 0);
  CHECK(hT.at(0).size == 1);
  CHECK(hT.functor.validate().ok());

  auto A = cat(FinCat::arrow());
  auto h0 = build_free(A, B, 0);
  CHECK(h0.at(0).size == 1);
  CHECK(h0.at(1).size == 1);
  CHECK(h0.functor.map(A->morphism_index("f")).data == std::vector<int64_t>{0});
  CHECK(h0.functor.validate().ok());
  auto h1 = build_free(A, B, 1);
  CHECK(h1.at(0).size == 0);
  CHECK(h1.at(1).size == 1);

  auto W = cat(FinCat::walking_idempotent());
  auto hW = build_free(W, B, 0);
  CHECK(hW.at(0).size == 2);
  // e sends both summands (id, e) to the e summand.
  int e = W->morphism_index("e");
  int pos_e = hW.summand_pos(0, e);
  CHECK(hW.functor.map(e).data == std::vector<int64_t>{pos_e, pos_e});
  CHECK(hW.functor.validate().ok());

  auto V = make_base({BaseKind::finvect, 3});
  auto hV = build_free(W, V, 0);
  CHECK(hV.at(0).size == 2);
  CHECK(hV.functor.validate().ok());
}

TEST_CASE("hom from free: classical count") {
  Report rep;
  auto B = make_base({BaseKind::finset});

  auto T = cat(FinCat::terminal());
  auto hT = build_free(T, B, 0);
  auto M = make_mf(T, B, {3});
  verify_hom_from_free(rep, hT, M);
  CHECK(static_cast<int64_t>(enumerate_nat_trans(hT.functor, M).size()) == 3);

  auto A = cat(FinCat::arrow());
  auto h0 = build_free(A, B, 0);
  auto N = make_mf(A, B, {2, 3}, {{"f", {0, 2}}});
  verify_hom_from_free(rep, h0, N);
  CHECK(static_cast<int64_t>(enumerate_nat_trans(h0.functor, N).size()) == 2);

  auto V = make_base({BaseKind::finvect, 2});
  auto h0v = build_free(A, V, 0);
  auto MV = make_mf(A, V, {2, 1}, {{"f", {1, 0}}});
  verify_hom_from_free(rep, h0v, MV);
  CHECK(static_cast<int64_t>(enumerate_nat_trans(h0v.functor, MV).size()) == 4);

  CHECK(rep.all_pass());
}

TEST_CASE("free map iso (the map-level counting)") {
  Report rep;
  auto B = make_base({BaseKind::finset});

  auto T = cat(FinCat::terminal());
  verify_free_map_iso(rep, build_free(T, B, 0), make_mf(T, B, {3}));

  auto A = cat(FinCat::arrow());
  auto M = make_mf(A, B, {2, 3}, {{"f", {0, 2}}});
  auto r = free_map_iso(build_free(A, B, 0), M);
  CHECK(r.ok);
  CHECK(r.map.carrier.size == 2);  // |M_0|
  verify_free_map_iso(rep, build_free(A, B, 0), M);
  verify_free_map_iso(rep, build_free(A, B, 1), M);

  auto W = cat(FinCat::walking_idempotent());
  auto V = make_base({BaseKind::finvect, 2});
  auto MW = make_mf(W, V, {2}, {{"e", {1, 0, 0, 0}}});
  REQUIRE(MW.validate().ok());
  auto rw = free_map_iso(build_free(W, V, 0), MW);
  CHECK(rw.ok);
  CHECK(rw.map.carrier.size == 2);  // dim M
  verify_free_map_iso(rep, build_free(W, V, 0), MW);

  CHECK(rep.all_pass());
}

TEST_CASE("evaluation adjunction") {
  Report rep;
  Sampler smp(11);
  auto B = make_base({BaseKind::finset});
  auto A = cat(FinCat::arrow());
  auto M = make_mf(A, B, {2, 3}, {{"f", {0, 2}}});

  // m = unit reduces to the hom-from-free count.
  verify_eval_adjunction(rep, build_free(A, B, 0), B->unit(), M, smp, 2);

  // i = 1, m = 2: h_1 has empty 0-component, so only component 1 constrains:
  // both sides are the 9 maps 2 -> 3.
  auto h1 = build_free(A, B, 1);
  MFunctor h1m = act_right(h1.functor, Obj{2});
  CHECK(static_cast<int64_t>(enumerate_nat_trans(h1m, M).size()) == 9);
  CHECK(B->hom_count(Obj{2}, M.at(1)) == 9);
  verify_eval_adjunction(rep, h1, Obj{2}, M, smp, 2);

  auto T = cat(FinCat::terminal());
  auto V = make_base({BaseKind::finvect, 2});
  verify_eval_adjunction(rep, build_free(T, V, 0), Obj{1}, make_mf(T, V, {1}), smp, 1);

  CHECK(rep.all_pass());
}

TEST_CASE("density reconstruction") {
  Report rep;
  auto B = make_base({BaseKind::finset});

  auto T = cat(FinCat::terminal());
  verify_density(rep, make_mf(T, B, {3}));

  auto A = cat(FinCat::arrow());
  auto M = make_mf(A, B, {2, 3}, {{"f", {0, 2}}});
  auto d = density_data(M);
  CHECK(d.ok);
  CHECK(d.coends[0].carrier.size == 2);
  CHECK(d.coends[1].carrier.size == 3);
  verify_density(rep, M);

  auto V = make_base({BaseKind::finvect, 2});
  auto MV = make_mf(A, V, {1, 2}, {{"f", {1, 0}}});
  auto dv = density_data(MV);
  CHECK(dv.ok);
  CHECK(dv.coends[0].carrier.size == 1);
  CHECK(dv.coends[1].carrier.size == 2);
  verify_density(rep, MV);

  auto W = cat(FinCat::walking_idempotent());
  verify_density(rep, make_mf(W, B, {3}, {{"e", {1, 1, 1}}}));

  CHECK(rep.all_pass());
}

TEST_CASE("classical regression: free-hom count equals the component size") {
  auto B = make_base({BaseKind::finset});
  for (auto Ic : {FinCat::terminal(), FinCat::arrow(), FinCat::walking_idempotent(),
                  FinCat::commutative_square()}) {
    auto I = cat(std::move(Ic));
    Sampler smp(17);
    for (int rep = 0; rep < 3; ++rep) {
      MFunctor M = smp.functor(I, B, 3);
      for (int i = 0; i < I->n_objects(); ++i) {
        auto h = build_free(I, B, i);
        CHECK(static_cast<int64_t>(enumerate_nat_trans(h.functor, M).size()) ==
              M.at(i).size);
      }
    }
  }
}
