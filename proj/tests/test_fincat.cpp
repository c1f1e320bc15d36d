#include <doctest.h>

#include "fincat.hpp"

using namespace catv;

TEST_CASE("terminal and arrow categories validate") {
  CHECK(FinCat::terminal().validate().ok());
  CHECK(FinCat::arrow().validate().ok());
  CHECK(FinCat::walking_idempotent().validate().ok());
  CHECK(FinCat::commutative_square().validate().ok());
  CHECK(FinCat::chain3().validate().ok());
  CHECK(FinCat::empty().validate().ok());
}

TEST_CASE("composite with wrong target is reported with the failing pair") {
  FinCatInput in;
  in.name = "bad-chain";
  in.objects = {"0", "1", "2"};
  in.morphisms = {{"f", "0", "1"}, {"g", "1", "2"}, {"gf", "0", "2"}};
  in.composition = {{"f", "g", "f"}};  // wrong target
  auto c = FinCat::build(in);
  auto v = c.validate();
  REQUIRE_FALSE(v.ok());
  CHECK(v.violations[0].find("(f,g)") != std::string::npos);
}

TEST_CASE("missing composition entry is a violation") {
  FinCatInput in;
  in.name = "gap";
  in.objects = {"0", "1", "2"};
  in.morphisms = {{"f", "0", "1"}, {"g", "1", "2"}, {"gf", "0", "2"}};
  auto v = FinCat::build(in).validate();
  REQUIRE_FALSE(v.ok());
  CHECK(v.violations[0].find("missing") != std::string::npos);
}

TEST_CASE("structural problems throw input_error") {
  FinCatInput dup;
  dup.objects = {"a", "a"};
  CHECK_THROWS_AS(FinCat::build(dup), input_error);

  FinCatInput dangling;
  dangling.objects = {"a"};
  dangling.morphisms = {{"f", "a", "b"}};
  CHECK_THROWS_AS(FinCat::build(dangling), input_error);

  FinCatInput reserved;
  reserved.objects = {"a"};
  reserved.morphisms = {{"id_a2", "a", "a"}};
  CHECK_THROWS_AS(FinCat::build(reserved), input_error);
}

TEST_CASE("associativity violation names the triple") {
  // Monoid-like single object with two generators and a bad table.
  FinCatInput in;
  in.objects = {"x"};
  in.morphisms = {{"s", "x", "x"}, {"t", "x", "x"}};
  in.composition = {{"s", "s", "s"}, {"s", "t", "t"}, {"t", "s", "s"}, {"t", "t", "s"}};
  // (s,t,t): comp(comp(s,t),t) = comp(t,t) = s; comp(s,comp(t,t)) = comp(s,s) = s. ok
  // (t,t,t): comp(s,t)=t vs comp(t,s)=s -> mismatch
  auto v = FinCat::build(in).validate();
  CHECK_FALSE(v.ok());
}

TEST_CASE("hom_set order: identity first, then presentation order") {
  auto term = FinCat::terminal();
  auto hs = term.hom_set(0, 0);
  REQUIRE(hs.size() == 1);
  CHECK(term.morphism_name(hs[0]) == "id_x");

  auto arrow = FinCat::arrow();
  auto h01 = arrow.hom_set(0, 1);
  REQUIRE(h01.size() == 1);
  CHECK(arrow.morphism_name(h01[0]) == "f");

  auto idem = FinCat::walking_idempotent();
  auto hxx = idem.hom_set(0, 0);
  REQUIRE(hxx.size() == 2);
  CHECK(idem.morphism_name(hxx[0]) == "id_x");
  CHECK(idem.morphism_name(hxx[1]) == "e");

  CHECK_THROWS_AS(idem.object_index("nope"), input_error);
}

TEST_CASE("composition closes hom-sets (exhaustive)") {
  for (const auto& c : {FinCat::arrow(), FinCat::walking_idempotent(),
                        FinCat::commutative_square(), FinCat::chain3()}) {
    for (int i = 0; i < c.n_objects(); ++i)
      for (int j = 0; j < c.n_objects(); ++j)
        for (int l = 0; l < c.n_objects(); ++l)
          for (int f : c.hom_set(i, j))
            for (int g : c.hom_set(j, l)) {
              int e = c.compose(f, g);
              CHECK(c.src(e) == i);
              CHECK(c.dst(e) == l);
            }
  }
}

TEST_CASE("opposite reverses arrows and is an involution") {
  auto arrow = FinCat::arrow();
  auto op = arrow.opposite();
  int f = op.morphism_index("f");
  CHECK(op.src(f) == arrow.dst(arrow.morphism_index("f")));
  CHECK(op.dst(f) == arrow.src(arrow.morphism_index("f")));
  CHECK(op.opposite() == arrow);

  auto term = FinCat::terminal();
  CHECK(term.opposite() == term);

  auto sq = FinCat::commutative_square();
  auto sq_op = sq.opposite();
  CHECK(sq_op.validate().ok());
  CHECK(sq_op.opposite() == sq);

  auto idem = FinCat::walking_idempotent();
  CHECK(idem.opposite().validate().ok());
  CHECK(idem.opposite().opposite() == idem);
}

TEST_CASE("functor validation") {
  auto arrow = std::make_shared<const FinCat>(FinCat::arrow());
  auto term = std::make_shared<const FinCat>(FinCat::terminal());

  CHECK(identity_functor(arrow).validate().ok());
  CHECK(to_terminal(arrow, term).validate().ok());

  // arrow -> arrow sending f to id_0 with 0->0, 1->1: endpoint mismatch.
  CatFunctor bad;
  bad.source = arrow;
  bad.target = arrow;
  bad.on_objects = {0, 1};
  bad.on_morphisms = {arrow->identity_of(0), arrow->identity_of(1), arrow->identity_of(0)};
  auto v = bad.validate();
  REQUIRE_FALSE(v.ok());
  CHECK(v.violations[0].find("endpoint") != std::string::npos);

  CatFunctor partial;
  partial.source = arrow;
  partial.target = arrow;
  partial.on_objects = {0};
  partial.on_morphisms = {};
  CHECK_THROWS_AS(partial.validate(), input_error);

  // functor laws through the composition table
  auto sq = std::make_shared<const FinCat>(FinCat::commutative_square());
  CHECK(identity_functor(sq).validate().ok());
  CHECK(to_terminal(sq, term).validate().ok());
  CHECK(pick_object(term, arrow, 1).validate().ok());
}
