#include <doctest.h>

#include <random>

#include "basecat.hpp"

using namespace catv;

namespace {
Mor fs_mor(std::vector<int64_t> table, int64_t src, int64_t dst) {
  return Mor{Obj{src}, Obj{dst}, std::move(table)};
}
Mor fv_mor(std::vector<int64_t> rowmajor, int64_t src, int64_t dst) {
  return Mor{Obj{src}, Obj{dst}, std::move(rowmajor)};
}
}  // namespace

TEST_CASE("finset composition and identity") {
  auto B = make_base({BaseKind::finset});
  auto f = fs_mor({1, 0}, 2, 2);
  auto g = fs_mor({1, 0}, 2, 2);
  CHECK(B->compose(g, f) == fs_mor({0, 1}, 2, 2));
  CHECK(B->identity(Obj{3}) == fs_mor({0, 1, 2}, 3, 3));
  CHECK_THROWS_AS(B->compose(fs_mor({0}, 1, 1), fs_mor({0, 1}, 2, 2)), input_error);
}

TEST_CASE("finvect composition against identity") {
  auto B = make_base({BaseKind::finvect, 2});
  auto f = fv_mor({1, 1}, 2, 1);  // 1x2
  CHECK(B->compose(f, B->identity(Obj{2})) == f);
  CHECK(B->compose(B->identity(Obj{1}), f) == f);
}

TEST_CASE("finset tensor") {
  auto B = make_base({BaseKind::finset});
  CHECK(B->tensor_obj(Obj{2}, Obj{3}).size == 6);
  auto id2 = B->identity(Obj{2});
  auto swp = fs_mor({1, 0}, 2, 2);
  CHECK(B->tensor_mor(id2, swp) == fs_mor({1, 0, 3, 2}, 4, 4));
  // functoriality
  CHECK(B->tensor_mor(id2, B->identity(Obj{3})) == B->identity(Obj{6}));
}

TEST_CASE("finvect tensor") {
  auto B = make_base({BaseKind::finvect, 2});
  auto one = fv_mor({1}, 1, 1);
  CHECK(B->tensor_mor(one, one) == one);
  auto id2 = B->identity(Obj{2});
  CHECK(B->tensor_mor(id2, id2) == B->identity(Obj{4}));
}

TEST_CASE("structural isos: associator strict, braiding a real permutation") {
  auto B = make_base({BaseKind::finset});
  CHECK(B->associator(Obj{2}, Obj{3}, Obj{4}) == B->identity(Obj{24}));
  CHECK(B->lunitor(Obj{5}) == B->identity(Obj{5}));
  CHECK(B->runitor(Obj{5}) == B->identity(Obj{5}));
  auto s = B->braiding(Obj{2}, Obj{3});
  CHECK(s.data[1] == 2);  // (0,1) -> (1,0): 1 -> 1*2+0
  CHECK(B->is_iso(s));
  CHECK(B->compose(B->braiding(Obj{3}, Obj{2}), s) == B->identity(Obj{6}));

  auto V = make_base({BaseKind::finvect, 3});
  auto sv = V->braiding(Obj{2}, Obj{2});
  CHECK(V->is_iso(sv));
  CHECK(V->compose(sv, sv) == V->identity(Obj{4}));
}

TEST_CASE("internal hom sizes") {
  auto B = make_base({BaseKind::finset});
  CHECK(B->internal_hom(Obj{2}, Obj{3}).size == 9);
  CHECK(B->internal_hom(Obj{0}, Obj{3}).size == 1);
  CHECK(B->internal_hom(Obj{2}, Obj{0}).size == 0);
  auto V = make_base({BaseKind::finvect, 2});
  CHECK(V->internal_hom(Obj{2}, Obj{1}).size == 2);
}

TEST_CASE("curry/uncurry round-trip on the projection") {
  auto B = make_base({BaseKind::finset});
  // projection 2x2 -> 2 onto the first coordinate
  Mor pr = fs_mor({0, 0, 1, 1}, 4, 2);
  auto c = B->curry_split(pr, Obj{2}, Obj{2}, Obj{2});
  CHECK(B->uncurry_split(c, Obj{2}, Obj{2}, Obj{2}) == pr);
  // eval ∘ (curry(f) ⊗ id_b) = f
  auto ev = B->eval_mor(Obj{2}, Obj{2});
  CHECK(B->compose(ev, B->tensor_mor(c, B->identity(Obj{2}))) == pr);
}

TEST_CASE("products and coproducts") {
  auto B = make_base({BaseKind::finset});
  Obj objs[] = {Obj{2}, Obj{3}};
  auto cp = B->coproduct(objs);
  CHECK(cp.carrier.size == 5);
  CHECK(cp.injections[0].data == std::vector<int64_t>{0, 1});
  CHECK(cp.injections[1].data == std::vector<int64_t>{2, 3, 4});

  auto unit_prod = B->product({});
  CHECK(unit_prod.carrier.size == 1);
  auto empty_cp = B->coproduct({});
  CHECK(empty_cp.carrier.size == 0);

  auto pr = B->product(objs);
  CHECK(pr.carrier.size == 6);
  // universal property: tuple then project
  Mor legs[] = {fs_mor({1, 0}, 2, 2), fs_mor({2, 2}, 2, 3)};
  auto t = B->tuple(legs, Obj{2});
  CHECK(B->compose(pr.projections[0], t) == legs[0]);
  CHECK(B->compose(pr.projections[1], t) == legs[1]);

  Mor colegs[] = {fs_mor({0, 1}, 2, 2), fs_mor({1, 1, 0}, 3, 2)};
  auto ct = B->cotuple(colegs, Obj{2});
  CHECK(B->compose(ct, cp.injections[0]) == colegs[0]);
  CHECK(B->compose(ct, cp.injections[1]) == colegs[1]);

  auto V = make_base({BaseKind::finvect, 3});
  Obj vobjs[] = {Obj{1}, Obj{2}};
  auto vp = V->product(vobjs);
  CHECK(vp.carrier.size == 3);
  CHECK(vp.projections[0].data == std::vector<int64_t>{1, 0, 0});
  CHECK(vp.projections[1].data == std::vector<int64_t>{0, 1, 0, 0, 0, 1});
  auto vc = V->coproduct(vobjs);
  CHECK(vc.carrier.size == 3);
}

TEST_CASE("equalizers and coequalizers") {
  auto B = make_base({BaseKind::finset});
  auto f = B->identity(Obj{3});
  auto g = fs_mor({0, 0, 0}, 3, 3);
  auto eq = B->equalizer(f, g);
  CHECK(eq.carrier.size == 1);
  CHECK(eq.include.data == std::vector<int64_t>{0});

  auto c = B->coequalizer(fs_mor({0}, 1, 2), fs_mor({1}, 1, 2));
  CHECK(c.carrier.size == 1);

  auto V = make_base({BaseKind::finvect, 2});
  auto vf = fv_mor({1, 0, 0, 1}, 2, 2);
  auto vg = fv_mor({1, 0, 0, 0}, 2, 2);
  auto veq = V->equalizer(vf, vg);
  CHECK(veq.carrier.size == 1);
  // kernel of [[0,0],[0,1]] is spanned by e_0
  CHECK(veq.include.data == std::vector<int64_t>{1, 0});

  // cokernel of the same map has dim 1
  auto vco = V->coequalizer(vf, vg);
  CHECK(vco.carrier.size == 1);
  CHECK(V->compose(vco.project, fv_mor({0, 0, 0, 1}, 2, 2)).data ==
        std::vector<int64_t>{0, 0});
}

TEST_CASE("factor rejects non-commuting legs") {
  auto B = make_base({BaseKind::finset});
  auto f = B->identity(Obj{3});
  auto g = fs_mor({0, 0, 0}, 3, 3);
  auto eq = B->equalizer(f, g);
  CHECK_THROWS_AS(B->equalizer_factor(eq, fs_mor({2}, 1, 3)), input_error);
  auto leg = fs_mor({0, 0}, 2, 3);
  auto u = B->equalizer_factor(eq, leg);
  CHECK(B->compose(eq.include, u) == leg);

  auto co = B->coequalizer(fs_mor({0}, 1, 2), fs_mor({1}, 1, 2));
  CHECK_THROWS_AS(B->coequalizer_factor(co, B->identity(Obj{2})), input_error);
}

TEST_CASE("hom enumeration and iso tests") {
  auto B = make_base({BaseKind::finset});
  CHECK(B->hom_enumerate(Obj{2}, Obj{3}).size() == 9);
  CHECK(B->hom_count(Obj{0}, Obj{0}) == 1);
  CHECK(B->is_iso(B->braiding(Obj{2}, Obj{3})));
  CHECK_FALSE(B->is_iso(fs_mor({0, 0}, 2, 2)));

  auto V = make_base({BaseKind::finvect, 2});
  auto hv = V->hom_enumerate(Obj{1}, Obj{1});
  REQUIRE(hv.size() == 2);
  CHECK(hv[0].data == std::vector<int64_t>{0});
  CHECK(hv[1].data == std::vector<int64_t>{1});

  // encode/decode agree
  for (int64_t i = 0; i < 9; ++i)
    CHECK(B->hom_index(B->hom_element(Obj{2}, Obj{3}, i)) == i);

  Caps tight;
  tight.max_hom = 4;
  auto T = make_base({BaseKind::finset}, tight);
  CHECK_THROWS_AS(T->hom_enumerate(Obj{2}, Obj{3}), resource_error);
}

TEST_CASE("inverse") {
  auto B = make_base({BaseKind::finset});
  auto s = B->braiding(Obj{2}, Obj{3});
  CHECK(B->compose(B->inverse(s), s) == B->identity(Obj{6}));
  auto V = make_base({BaseKind::finvect, 5});
  auto m = fv_mor({2, 1, 1, 1}, 2, 2);
  CHECK(V->compose(V->inverse(m), m) == V->identity(Obj{2}));
  CHECK_THROWS_AS(V->inverse(fv_mor({1, 1, 1, 1}, 2, 2)), input_error);
}

TEST_CASE("p must be prime") {
  CHECK_THROWS_AS(make_base({BaseKind::finvect, 4}), input_error);
  CHECK_THROWS_AS(make_base({BaseKind::finvect, 1}), input_error);
  CHECK_NOTHROW(make_base({BaseKind::finvect, 7}));
}

// ---------------------------------------------------------------------------
// coherence properties
// ---------------------------------------------------------------------------

namespace {

void check_pentagon(const BaseCategory& B, Obj a, Obj b, Obj c, Obj d) {
  auto ab = B.tensor_obj(a, b);
  auto cd = B.tensor_obj(c, d);
  auto bc = B.tensor_obj(b, c);
  auto top = B.compose(B.associator(a, b, cd), B.associator(ab, c, d));
  auto bot = B.compose(
      B.tensor_mor(B.identity(a), B.associator(b, c, d)),
      B.compose(B.associator(a, bc, d), B.tensor_mor(B.associator(a, b, c), B.identity(d))));
  CHECK(top == bot);
}

void check_triangle(const BaseCategory& B, Obj a, Obj b) {
  auto lhs = B.compose(B.tensor_mor(B.identity(a), B.lunitor(b)),
                       B.associator(a, B.unit(), b));
  auto rhs = B.tensor_mor(B.runitor(a), B.identity(b));
  CHECK(lhs == rhs);
}

void check_hexagon(const BaseCategory& B, Obj a, Obj b, Obj c) {
  auto right = B.compose(B.associator(b, c, a),
                         B.compose(B.braiding(a, B.tensor_obj(b, c)), B.associator(a, b, c)));
  auto left = B.compose(
      B.tensor_mor(B.identity(b), B.braiding(a, c)),
      B.compose(B.associator(b, a, c), B.tensor_mor(B.braiding(a, b), B.identity(c))));
  CHECK(right == left);
}

void coherence_sweep(const BaseCategory& B, int64_t maxn) {
  for (int64_t a = 0; a <= maxn; ++a)
    for (int64_t b = 0; b <= maxn; ++b) {
      check_triangle(B, Obj{a}, Obj{b});
      auto s = B.braiding(Obj{a}, Obj{b});
      CHECK(B.compose(B.braiding(Obj{b}, Obj{a}), s) ==
            B.identity(B.tensor_obj(Obj{a}, Obj{b})));
      for (int64_t c = 0; c <= maxn; ++c) {
        check_hexagon(B, Obj{a}, Obj{b}, Obj{c});
        for (int64_t d = 0; d <= maxn; ++d) check_pentagon(B, Obj{a}, Obj{b}, Obj{c}, Obj{d});
      }
    }
}

}  // namespace

TEST_CASE("coherence sweep, small sizes") {
  coherence_sweep(*make_base({BaseKind::finset}), 3);
  coherence_sweep(*make_base({BaseKind::finvect, 2}), 2);
  coherence_sweep(*make_base({BaseKind::finvect, 3}), 2);
}

TEST_CASE("closure: curry and uncurry are mutually inverse on whole hom-sets") {
  for (BaseSpec spec : {BaseSpec{BaseKind::finset, 2}, BaseSpec{BaseKind::finvect, 2}}) {
    auto B = make_base(spec);
    int64_t maxn = spec.kind == BaseKind::finset ? 2 : 2;
    for (int64_t a = 0; a <= maxn; ++a)
      for (int64_t b = 0; b <= maxn; ++b)
        for (int64_t c = 0; c <= maxn; ++c) {
          Obj A{a}, Bo{b}, C{c};
          for (const auto& f : B->hom_enumerate(B->tensor_obj(A, Bo), C)) {
            auto cur = B->curry_split(f, A, Bo, C);
            CHECK(B->uncurry_split(cur, A, Bo, C) == f);
            CHECK(B->compose(B->eval_mor(Bo, C), B->tensor_mor(cur, B->identity(Bo))) == f);
          }
          for (const auto& g : B->hom_enumerate(A, B->internal_hom(Bo, C))) {
            auto unc = B->uncurry_split(g, A, Bo, C);
            CHECK(B->curry_split(unc, A, Bo, C) == g);
          }
        }
  }
}

TEST_CASE("curry bijection is natural in a and c (sampled)") {
  auto B = make_base({BaseKind::finset});
  std::mt19937_64 rng(7);
  auto rnd_mor = [&](Obj s, Obj d) {
    Mor m{s, d, {}};
    for (int64_t i = 0; i < s.size; ++i) m.data.push_back(rng() % d.size);
    return m;
  };
  Obj a{3}, a2{2}, b{2}, c{2}, c2{3};
  for (int rep = 0; rep < 20; ++rep) {
    auto f = rnd_mor(B->tensor_obj(a, b), c);
    auto u = rnd_mor(a2, a);
    // curry(f ∘ (u⊗id)) = curry(f) ∘ u
    CHECK(B->curry_split(B->compose(f, B->tensor_mor(u, B->identity(b))), a2, b, c) ==
          B->compose(B->curry_split(f, a, b, c), u));
    auto v = rnd_mor(c, c2);
    // curry(v ∘ f) = [b,v] ∘ curry(f), with [b,v] = curry(v ∘ eval)
    auto post = B->curry_split(B->compose(v, B->eval_mor(b, c)), B->internal_hom(b, c), b, c2);
    CHECK(B->curry_split(B->compose(v, f), a, b, c2) ==
          B->compose(post, B->curry_split(f, a, b, c)));
  }
}

TEST_CASE("mediating morphisms are unique at small sizes") {
  for (BaseSpec spec : {BaseSpec{BaseKind::finset, 2}, BaseSpec{BaseKind::finvect, 2}}) {
    auto B = make_base(spec);
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 12; ++rep) {
      Obj a{static_cast<int64_t>(rng() % 3)}, b{static_cast<int64_t>(1 + rng() % 2)};
      auto homs = B->hom_enumerate(a, b);
      if (homs.empty()) continue;
      auto f = homs[rng() % homs.size()];
      auto g = homs[rng() % homs.size()];
      auto eq = B->equalizer(f, g);
      Obj w{static_cast<int64_t>(1 + rng() % 2)};
      for (const auto& leg : B->hom_enumerate(w, a)) {
        if (B->compose(f, leg) != B->compose(g, leg)) continue;
        auto u = B->equalizer_factor(eq, leg);
        CHECK(B->compose(eq.include, u) == leg);
        int count = 0;
        for (const auto& cand : B->hom_enumerate(w, eq.carrier))
          if (B->compose(eq.include, cand) == leg) ++count;
        CHECK(count == 1);
      }
      auto co = B->coequalizer(f, g);
      for (const auto& leg : B->hom_enumerate(b, w)) {
        if (B->compose(leg, f) != B->compose(leg, g)) continue;
        auto u = B->coequalizer_factor(co, leg);
        CHECK(B->compose(u, co.project) == leg);
        int count = 0;
        for (const auto& cand : B->hom_enumerate(co.carrier, w))
          if (B->compose(cand, co.project) == leg) ++count;
        CHECK(count == 1);
      }
    }
  }
}
