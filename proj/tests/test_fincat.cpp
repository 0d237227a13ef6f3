#include "doctest.h"

#include <algorithm>

#include "deltacat/fincat.hpp"
#include "deltacat/fixtures.hpp"
#include "support.hpp"

using namespace deltacat;
using testsupport::category_law_failure;

TEST_CASE("terminal category validates with one synthesized identity") {
  auto one = validate_category({{"*"}, {}, {}});
  REQUIRE(one.ok());
  CHECK(one.value().objects.size() == 1);
  CHECK(one.value().morphisms.size() == 1);
  CHECK(one.value().id_of("*") == "id_*");
}

TEST_CASE("interval category has three morphisms") {
  auto two = validate_category({{"0", "1"}, {{"u", "0", "1"}}, {}});
  REQUIRE(two.ok());
  CHECK(two.value().morphisms.size() == 3);
  CHECK(two.value().src_of("u") == "0");
  CHECK(two.value().tgt_of("u") == "1");
}

TEST_CASE("idempotent loop validates; laws confirmed by exhaustive sweep") {
  auto loop = validate_category({{"*"}, {{"e", "*", "*"}}, {{"e", "e", "e"}}});
  REQUIRE(loop.ok());
  CHECK(loop.value().morphisms.size() == 2);
  CHECK(category_law_failure(loop.value()) == std::nullopt);
}

TEST_CASE("every fixture passes the independent law sweep") {
  for (const auto& [name, c] : fixtures::all()) {
    INFO(name);
    CHECK(category_law_failure(c) == std::nullopt);
  }
}

TEST_CASE("malformed categories are rejected with witnesses") {
  SUBCASE("dangling source") {
    auto r = validate_category({{"0"}, {{"u", "0", "1"}}, {}});
    REQUIRE(!r.ok());
    CHECK(r.error().code == ErrCode::malformed_category);
  }
  SUBCASE("duplicate morphism name") {
    auto r = validate_category(
        {{"0", "1"}, {{"u", "0", "1"}, {"u", "1", "0"}}, {}});
    REQUIRE(!r.ok());
  }
  SUBCASE("reserved identity prefix") {
    auto r = validate_category({{"0"}, {{"id_x", "0", "0"}}, {}});
    REQUIRE(!r.ok());
    CHECK(r.error().witness == "id_x");
  }
  SUBCASE("missing composite") {
    auto r = validate_category({{"0", "1", "2"},
                                {{"f", "0", "1"}, {"g", "1", "2"}},
                                {}});
    REQUIRE(!r.ok());
    CHECK(r.error().message.find("composition-totality") != std::string::npos);
  }
  SUBCASE("unit law conflict via a declared identity composite") {
    auto r = validate_category(
        {{"0", "1"},
         {{"s", "0", "1"}, {"t", "0", "1"}},
         {{"s", "id_1", "t"}}});
    REQUIRE(!r.ok());
    CHECK(r.error().message.find("unit-laws") != std::string::npos);
  }
  SUBCASE("associativity violation is witnessed by a triple") {
    // Total table on two endomorphisms; (a.a).a = a while a.(a.a) = b.
    auto r = validate_category({{"0"},
                                {{"a", "0", "0"}, {"b", "0", "0"}},
                                {{"a", "a", "b"},
                                 {"b", "a", "b"},
                                 {"a", "b", "a"},
                                 {"b", "b", "b"}}});
    REQUIRE(!r.ok());
    CHECK(r.error().message.find("associativity") != std::string::npos);
    CHECK(!r.error().witness.empty());
  }
}

TEST_CASE("compose follows the table and rejects non-composable pairs") {
  FinCategory two = fixtures::two();
  CHECK(compose(two, "id_1", "u").value() == "u");
  auto unknown = compose(two, "e", "u");
  REQUIRE(!unknown.ok());
  CHECK(unknown.error().code == ErrCode::unknown_morphism);
}

TEST_CASE("compose on the loop and failure witnesses") {
  FinCategory loop = fixtures::loop();
  CHECK(compose(loop, "e", "e").value() == "e");
  FinCategory two = fixtures::two();
  auto bad = compose(two, "u", "u");
  REQUIRE(!bad.ok());
  CHECK(bad.error().code == ErrCode::not_composable);
}

TEST_CASE("functor validation") {
  FinCategory two = fixtures::two();
  FinCategory one = fixtures::one();

  SUBCASE("identity functor is valid") {
    CHECK(check_functor(identity_functor(two)).ok());
  }
  SUBCASE("unique functor to the terminal category") {
    Functor bang{two, one, {{"0", "*"}, {"1", "*"}},
                 {{"id_0", "id_*"}, {"id_1", "id_*"}, {"u", "id_*"}}};
    CHECK(check_functor(bang).ok());
  }
  SUBCASE("sending u to an identity mismatching its boundary fails") {
    Functor bad{two, two, {{"0", "0"}, {"1", "1"}},
                {{"id_0", "id_0"}, {"id_1", "id_1"}, {"u", "id_0"}}};
    auto r = validate_functor(bad);
    REQUIRE(!r.ok());
    CHECK(r.error().code == ErrCode::not_a_functor);
  }
}

TEST_CASE("functor composition") {
  FinCategory two = fixtures::two();
  FinCategory one = fixtures::one();
  Functor bang{two, one, {{"0", "*"}, {"1", "*"}},
               {{"id_0", "id_*"}, {"id_1", "id_*"}, {"u", "id_*"}}};
  Functor pick1{one, two, {{"*", "1"}}, {{"id_*", "id_1"}}};

  SUBCASE("identity is neutral") {
    auto r = compose_functors(identity_functor(one), bang);
    REQUIRE(r.ok());
    CHECK(r.value() == bang);
  }
  SUBCASE("bang after pick is the identity on the terminal category") {
    auto r = compose_functors(bang, pick1);
    REQUIRE(r.ok());
    CHECK(r.value() == identity_functor(one));
  }
  SUBCASE("boundary mismatch is reported") {
    auto r = compose_functors(pick1, pick1);
    REQUIRE(!r.ok());
    CHECK(r.error().code == ErrCode::boundary_mismatch);
  }
}

TEST_CASE("bijective-on-objects predicate") {
  FinCategory two = fixtures::two();
  FinCategory one = fixtures::one();
  CHECK(is_bijective_on_objects(identity_functor(two)));
  Functor bang{two, one, {{"0", "*"}, {"1", "*"}},
               {{"id_0", "id_*"}, {"id_1", "id_*"}, {"u", "id_*"}}};
  CHECK(!is_bijective_on_objects(bang));
  Functor pick0{one, two, {{"*", "0"}}, {{"id_*", "id_0"}}};
  CHECK(!is_bijective_on_objects(pick0));
}

TEST_CASE("discrete opfibration predicate by exhaustive lift counting") {
  FinCategory two = fixtures::two();
  FinCategory one = fixtures::one();
  CHECK(is_discrete_opfibration(identity_functor(two)));
  Functor bang{two, one, {{"0", "*"}, {"1", "*"}},
               {{"id_0", "id_*"}, {"id_1", "id_*"}, {"u", "id_*"}}};
  CHECK(!is_discrete_opfibration(bang));  // id_* has two lifts at 0
  Functor pick0{one, two, {{"*", "0"}}, {{"id_*", "id_0"}}};
  CHECK(!is_discrete_opfibration(pick0));  // u has no lift
}

TEST_CASE("codiscrete categories and units") {
  SUBCASE("on one object") {
    auto [codisc, unit] = codiscrete_unit(fixtures::one());
    CHECK(codisc.morphisms.size() == 1);
    CHECK(check_functor(unit).ok());
  }
  SUBCASE("on the interval: one morphism per ordered pair") {
    auto [codisc, unit] = codiscrete_unit(fixtures::two());
    CHECK(codisc.morphisms.size() == 4);
    CHECK(unit.on_morphism("u") == "0~>1");
    CHECK(check_functor(unit).ok());
    CHECK(category_law_failure(codisc) == std::nullopt);
  }
  SUBCASE("the loop collapses onto the identity") {
    auto [codisc, unit] = codiscrete_unit(fixtures::loop());
    CHECK(codisc.morphisms.size() == 1);
    CHECK(unit.on_morphism("e") == "*~>*");
  }
  SUBCASE("the unit is bijective-on-objects on every fixture") {
    for (const auto& [name, c] : fixtures::all()) {
      INFO(name);
      CHECK(is_bijective_on_objects(codiscrete_unit(c).unit));
    }
  }
}

TEST_CASE("pullbacks") {
  FinCategory two = fixtures::two();
  FinCategory one = fixtures::one();
  Functor bang{two, one, {{"0", "*"}, {"1", "*"}},
               {{"id_0", "id_*"}, {"id_1", "id_*"}, {"u", "id_*"}}};

  SUBCASE("pullback of identities is the category of pair names") {
    auto pb = pullback(identity_functor(two), identity_functor(two));
    REQUIRE(pb.ok());
    CHECK(pb.value().apex.objects.size() == 2);
    CHECK(pb.value().apex.morphisms.size() == 3);
    CHECK(pb.value().apex.has_morphism("(u,u)"));
    CHECK(category_law_failure(pb.value().apex) == std::nullopt);
  }
  SUBCASE("two copies of the bang functor: 4 objects, 9 morphisms") {
    auto pb = pullback(bang, bang);
    REQUIRE(pb.ok());
    CHECK(pb.value().apex.objects.size() == 4);
    CHECK(pb.value().apex.morphisms.size() == 9);
    CHECK(check_functor(pb.value().to_left).ok());
    CHECK(check_functor(pb.value().to_right).ok());
    CHECK(category_law_failure(pb.value().apex) == std::nullopt);
  }
  SUBCASE("codiscrete square over the loop has 4 pair morphisms") {
    FinCategory loop = fixtures::loop();
    auto [codisc, unit] = codiscrete_unit(loop);
    auto pb = pullback(unit, unit);
    REQUIRE(pb.ok());
    CHECK(pb.value().apex.morphisms.size() == 4);
  }
  SUBCASE("morphism count equals the number of agreeing pairs") {
    auto pb = pullback(bang, identity_functor(one));
    REQUIRE(pb.ok());
    std::size_t pairs = 0;
    for (const auto& w : two.morphisms)
      for (const auto& u : one.morphisms)
        if (bang.on_morphism(w) == u) ++pairs;
    CHECK(pb.value().apex.morphisms.size() == pairs);
  }
  SUBCASE("projections are jointly injective on morphisms") {
    auto pb = pullback(bang, bang);
    REQUIRE(pb.ok());
    const auto& apex = pb.value().apex;
    for (const auto& m1 : apex.morphisms) {
      for (const auto& m2 : apex.morphisms) {
        if (m1 == m2) continue;
        bool same_left = pb.value().to_left.on_morphism(m1) ==
                         pb.value().to_left.on_morphism(m2);
        bool same_right = pb.value().to_right.on_morphism(m1) ==
                          pb.value().to_right.on_morphism(m2);
        CHECK(!(same_left && same_right));
      }
    }
  }
  SUBCASE("mediator exists, commutes, and is unique by name determination") {
    auto pb = pullback(bang, bang);
    REQUIRE(pb.ok());
    // Cone: the diagonal of the interval.
    auto mediator =
        pullback_mediator(pb.value(), identity_functor(two), identity_functor(two));
    REQUIRE(mediator.ok());
    auto left = compose_functors(pb.value().to_left, mediator.value());
    REQUIRE(left.ok());
    CHECK(left.value() == identity_functor(two));
    auto right = compose_functors(pb.value().to_right, mediator.value());
    REQUIRE(right.ok());
    CHECK(right.value() == identity_functor(two));
  }
  SUBCASE("boundary mismatch") {
    auto pb = pullback(identity_functor(two), identity_functor(one));
    REQUIRE(!pb.ok());
    CHECK(pb.error().code == ErrCode::boundary_mismatch);
  }
}

TEST_CASE("coproducts of categories") {
  FinCategory one = fixtures::one();
  FinCategory two = fixtures::two();
  FinCategory loop = fixtures::loop();

  SUBCASE("counts") {
    CHECK(coproduct_cat(one, one).cat.objects.size() == 2);
    CHECK(coproduct_cat(one, one).cat.morphisms.size() == 2);
    CHECK(coproduct_cat(two, one).cat.objects.size() == 3);
    CHECK(coproduct_cat(two, one).cat.morphisms.size() == 4);
    CHECK(coproduct_cat(loop, loop).cat.objects.size() == 2);
    CHECK(coproduct_cat(loop, loop).cat.morphisms.size() == 4);
  }
  SUBCASE("injections are valid functors, jointly surjective, no cross homs") {
    auto sum = coproduct_cat(two, loop);
    CHECK(check_functor(sum.inl).ok());
    CHECK(check_functor(sum.inr).ok());
    CHECK(category_law_failure(sum.cat) == std::nullopt);
    CHECK(sum.cat.hom("inl.0", "inr.*").empty());
    CHECK(sum.cat.hom("inr.*", "inl.1").empty());
    CHECK(sum.cat.objects.size() ==
          two.objects.size() + loop.objects.size());
    CHECK(sum.cat.morphisms.size() ==
          two.morphisms.size() + loop.morphisms.size());
  }
  SUBCASE("injections preserve and reflect homs") {
    auto sum = coproduct_cat(two, loop);
    CHECK(sum.cat.hom("inl.0", "inl.1").size() == two.hom("0", "1").size());
    CHECK(sum.cat.hom("inr.*", "inr.*").size() == loop.hom("*", "*").size());
  }
}

TEST_CASE("renaming is structure preserving") {
  FinCategory loop = fixtures::loop();
  std::map<ObjId, ObjId> objs{{"*", "x"}};
  std::map<MorId, MorId> mors{{"id_*", "one"}, {"e", "idem"}};
  FinCategory renamed = rename_category(loop, objs, mors);
  CHECK(renamed.has_object("x"));
  CHECK(renamed.id_of("x") == "one");
  CHECK(renamed.comp("idem", "idem") == "idem");
  CHECK(category_law_failure(renamed) == std::nullopt);
}

TEST_CASE("the empty category is allowed") {
  auto empty = validate_category({{}, {}, {}});
  REQUIRE(empty.ok());
  CHECK(empty.value().objects.empty());
  CHECK(check_functor(identity_functor(empty.value())).ok());
  CHECK(is_bijective_on_objects(identity_functor(empty.value())));
  CHECK(is_discrete_opfibration(identity_functor(empty.value())));
}
