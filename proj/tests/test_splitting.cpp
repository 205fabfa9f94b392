#include <doctest.h>

#include "cocart/splitting.hpp"
#include "fixtures.hpp"

using namespace cocart;
using cocart::testing::fixture;
using cocart::testing::make_discrete;
using cocart::testing::mor;
using cocart::testing::obj;

namespace {

// All splittings of an idempotent by the raw triple sweep, independent of
// split_idempotent's early return.
std::vector<Splitting> all_splittings(const Idempotent& e, const FinCat& c) {
  std::vector<Splitting> out;
  for (std::size_t si = 0; si < c.object_count(); ++si) {
    const Obj s{static_cast<std::int32_t>(si)};
    for (const Mor r : c.hom(e.object, s))
      for (const Mor sec : c.hom(s, e.object))
        if (c.compose(sec, r) == e.endo && c.compose(r, sec) == c.identity(s))
          out.push_back(Splitting{s, r, sec});
  }
  return out;
}

// Identity relative adjunction on a category: J = L = R = id, eta = id,
// flat = the identity tables.
WeakAdjunctionData identity_adjunction(CatRef c) {
  WeakAdjunctionData w;
  w.j = identity_functor(c);
  w.l = identity_functor(c);
  w.r = identity_functor(c);
  NatTrans eta{w.j, compose_functors(w.r, w.l), {}};
  for (std::size_t a = 0; a < c->object_count(); ++a)
    eta.components.push_back(c->identity(Obj{static_cast<std::int32_t>(a)}));
  w.eta = std::move(eta);
  w.flat.resize(c->object_count());
  for (std::size_t x = 0; x < c->object_count(); ++x) {
    w.flat[x].resize(c->object_count());
    for (std::size_t y = 0; y < c->object_count(); ++y)
      w.flat[x][y] =
          c->hom(Obj{static_cast<std::int32_t>(x)}, Obj{static_cast<std::int32_t>(y)});
  }
  return w;
}

} // namespace

TEST_CASE("retraction lemma holds over every idempotent of every fixture") {
  for (const char* name : {"f1_terminal", "f2_join", "f3_meet", "f4_z2",
                           "f5_walking_idempotent", "f5_tensor", "f7_double_unit"}) {
    const Bundle b = fixture(name);
    const FinCat& c = *b.category;
    for (const Idempotent& e : all_idempotents(c)) {
      const bool has_retraction = check_retraction_lemma(e, c);
      CHECK(has_retraction == (e.endo == c.identity(e.object)));
    }
  }
}

TEST_CASE("splitting identities is trivial, splitting F5's idempotent is impossible") {
  const Bundle f2 = fixture("f2_join");
  const Obj zero = obj(f2, "0");
  const auto trivial =
      split_idempotent(Idempotent{zero, f2.category->identity(zero)}, *f2.category);
  REQUIRE(trivial.has_value());
  CHECK(trivial->summand == zero);
  CHECK(trivial->retraction == f2.category->identity(zero));
  CHECK(trivial->section == f2.category->identity(zero));

  const Bundle f5 = fixture("f5_walking_idempotent");
  const Idempotent e{obj(f5, "*"), mor(f5, "e")};
  CHECK_FALSE(split_idempotent(e, *f5.category).has_value());
  // The deterministic search and the raw sweep are the same search.
  CHECK(all_splittings(e, *f5.category).empty());
}

TEST_CASE("a bogus retraction smuggled into the table breaks associativity") {
  auto c = std::make_shared<FinCat>();
  c->objects = {"*"};
  c->morphisms = {{"1", Obj{0}, Obj{0}}, {"e", Obj{0}, Obj{0}}, {"r", Obj{0}, Obj{0}}};
  c->identities = {Mor{0}};
  auto at = [&](std::size_t g, std::size_t f) -> Mor& { return c->compose_table[g * 3 + f]; };
  c->compose_table.assign(9, Mor{});
  at(0, 0) = Mor{0};
  at(0, 1) = Mor{1};
  at(0, 2) = Mor{2};
  at(1, 0) = Mor{1};
  at(1, 1) = Mor{1};  // e is idempotent
  at(1, 2) = Mor{1};
  at(2, 0) = Mor{2};
  at(2, 1) = Mor{0};  // the "retraction": r.e = 1 with e != 1
  at(2, 2) = Mor{2};
  CHECK_FALSE(validate_category(*c).ok());
}

TEST_CASE("genuine adjunction data yields identity idempotents and bijective comparisons") {
  const Bundle f2 = fixture("f2_join");
  const WeakAdjunctionData w = identity_adjunction(f2.category);
  REQUIRE(validate_weak_adjunction(w).ok());
  for (std::size_t x = 0; x < f2.category->object_count(); ++x) {
    const Obj a{static_cast<std::int32_t>(x)};
    const Idempotent e = weak_adjunction_idempotent(w, a);
    CHECK(e.endo == f2.category->identity(a));
  }
}

TEST_CASE("contrived weak adjunction over the walking idempotent") {
  // A = terminal, C = walking idempotent, E = the poset 0 -> 1.
  // J picks 0, L picks the single object, R collapses C onto 1, eta = u,
  // and flat sends the only comparison morphism to e.
  const Bundle f5 = fixture("f5_walking_idempotent");
  const Bundle f2 = fixture("f2_join");
  const CatRef terminal = fixture("f1_terminal").category;

  WeakAdjunctionData w;
  w.j = Functor{terminal, f2.category, {obj(f2, "0")}, {mor(f2, "id0")}};
  w.l = Functor{terminal, f5.category, {obj(f5, "*")}, {mor(f5, "1")}};
  w.r = Functor{f5.category, f2.category, {obj(f2, "1")}, {mor(f2, "id1"), mor(f2, "id1")}};
  w.eta = NatTrans{w.j, compose_functors(w.r, w.l), {mor(f2, "u")}};
  w.flat = {{{mor(f5, "e")}}};

  REQUIRE(validate_weak_adjunction(w).ok());
  const Idempotent e = weak_adjunction_idempotent(w, Obj{0});
  CHECK(e.endo == mor(f5, "e"));

  // Lemma cross-check: the canonical idempotent is the identity for every
  // object iff the comparison hom-maps are bijections.
  const FinCat& c_cat = *f5.category;
  const FinCat& e_cat = *f2.category;
  bool all_identity = true;
  bool all_bijective = true;
  for (std::size_t x = 0; x < 1; ++x) {
    const Obj a{static_cast<std::int32_t>(x)};
    if (weak_adjunction_idempotent(w, a).endo != c_cat.identity(w.l.apply(a)))
      all_identity = false;
    for (std::size_t y = 0; y < c_cat.object_count(); ++y) {
      const Obj target{static_cast<std::int32_t>(y)};
      const auto source_hom = c_cat.hom(w.l.apply(a), target);
      const auto image_hom = e_cat.hom(w.j.apply(a), w.r.apply(target));
      std::vector<Mor> hits;
      for (const Mor k : source_hom) {
        const Mor comparison = e_cat.compose(w.r.apply(k), w.eta.at(a));
        if (std::find(hits.begin(), hits.end(), comparison) == hits.end())
          hits.push_back(comparison);
      }
      if (hits.size() != source_hom.size() || hits.size() != image_hom.size())
        all_bijective = false;
    }
  }
  CHECK(all_identity == all_bijective);
  CHECK_FALSE(all_identity);

  // The identity adjunction passes the same cross-check positively.
  const WeakAdjunctionData good = identity_adjunction(f2.category);
  for (std::size_t x = 0; x < f2.category->object_count(); ++x) {
    const Obj a{static_cast<std::int32_t>(x)};
    CHECK(weak_adjunction_idempotent(good, a).endo ==
          f2.category->identity(good.l.apply(a)));
  }
}

// The binary weak coproduct on the join poset, packaged as a naturally weak
// relative adjunction: E = M x M, J picks the diagram (0, 1), L picks the
// candidate apex 1, R is the diagonal.
TEST_CASE("diagonal weak-coproduct adjunction data on the join poset") {
  const Bundle f2 = fixture("f2_join");
  const CatRef terminal = fixture("f1_terminal").category;
  const ProductCat square = product_category(f2.category, f2.category);

  const Obj zero = obj(f2, "0");
  const Obj one = obj(f2, "1");

  WeakAdjunctionData w;
  w.j = Functor{terminal, square.cat, {square.obj(zero, one)},
                {square.mor(mor(f2, "id0"), mor(f2, "id1"))}};
  w.l = Functor{terminal, f2.category, {one}, {mor(f2, "id1")}};
  w.r = diagonal_functor(f2.category);
  w.eta = NatTrans{w.j, compose_functors(w.r, w.l),
                   {square.mor(mor(f2, "u"), mor(f2, "id1"))}};
  // hom((0,1), (0,0)) is empty, hom((0,1), (1,1)) = {(u, id1)}: the one
  // comparison morphism is sent to its mediating morphism id1.
  w.flat = {{{}, {mor(f2, "id1")}}};

  REQUIRE(validate_weak_adjunction(w).ok());
  const Idempotent e = weak_adjunction_idempotent(w, Obj{0});
  CHECK(e.object == one);
  CHECK(e.endo == mor(f2, "id1"));
}

TEST_CASE("weak colimit of the binary diagram on the join poset") {
  const Bundle f2 = fixture("f2_join");
  WeakColimitData w;
  w.diagram = Functor{make_discrete(2), f2.category, {obj(f2, "0"), obj(f2, "1")},
                      {mor(f2, "id0"), mor(f2, "id1")}};
  w.apex = obj(f2, "1");
  w.cocone = {mor(f2, "u"), mor(f2, "id1")};
  const auto cocones = enumerate_cocones(w.diagram);
  REQUIRE(cocones.size() == 1);  // nothing lands in 0
  w.mediators = {mor(f2, "id1")};

  REQUIRE(validate_weak_colimit(w).ok());
  const auto result = colimit_from_weak(w);
  REQUIRE(result.has_value());
  CHECK(result->first == obj(f2, "1"));
  CHECK(result->second == w.cocone);
}

TEST_CASE("weak colimit of the empty diagram finds the initial object") {
  const Bundle f2 = fixture("f2_join");
  WeakColimitData w;
  w.diagram = Functor{make_discrete(0), f2.category, {}, {}};
  w.apex = obj(f2, "0");
  w.cocone = {};
  const auto cocones = enumerate_cocones(w.diagram);
  REQUIRE(cocones.size() == 2);  // one per object
  w.mediators = {mor(f2, "id0"), mor(f2, "u")};

  REQUIRE(validate_weak_colimit(w).ok());
  const auto result = colimit_from_weak(w);
  REQUIRE(result.has_value());
  CHECK(result->first == obj(f2, "0"));
  CHECK(is_initial(*f2.category, result->first));
}

TEST_CASE("weak colimits on the terminal category are trivial") {
  const Bundle f1 = fixture("f1_terminal");
  WeakColimitData w;
  w.diagram = Functor{make_discrete(2), f1.category, {obj(f1, "*"), obj(f1, "*")},
                      {mor(f1, "1"), mor(f1, "1")}};
  w.apex = obj(f1, "*");
  w.cocone = {mor(f1, "1"), mor(f1, "1")};
  w.mediators = {mor(f1, "1")};
  REQUIRE(validate_weak_colimit(w).ok());
  const auto result = colimit_from_weak(w);
  REQUIRE(result.has_value());
  CHECK(result->first == obj(f1, "*"));
}

TEST_CASE("karoubi envelopes of the fixtures") {
  const KaroubiEnvelope k1 = karoubi_envelope(fixture("f1_terminal").category);
  CHECK(k1.cat->object_count() == 1);
  CHECK(k1.cat->morphism_count() == 1);

  const KaroubiEnvelope k2 = karoubi_envelope(fixture("f2_join").category);
  CHECK(k2.cat->object_count() == 2);
  CHECK(k2.cat->morphism_count() == 3);

  const KaroubiEnvelope k5 = karoubi_envelope(fixture("f5_walking_idempotent").category);
  CHECK(k5.cat->object_count() == 2);
  CHECK(k5.cat->morphism_count() == 5);

  const KaroubiEnvelope k4 = karoubi_envelope(fixture("f4_z2").category);
  CHECK(k4.cat->object_count() == 1);
  CHECK(k4.cat->morphism_count() == 2);

  const KaroubiEnvelope k7 = karoubi_envelope(fixture("f7_double_unit").category);
  CHECK(k7.cat->object_count() == 2);
  CHECK(k7.cat->morphism_count() == 4);

  for (const KaroubiEnvelope* k : {&k1, &k2, &k5, &k4, &k7}) {
    CHECK(validate_category(*k->cat).ok());
    CHECK(validate_functor(k->embedding).ok());
    for (const Idempotent& e : all_idempotents(*k->cat))
      CHECK(split_idempotent(e, *k->cat).has_value());
  }
}

TEST_CASE("the walking idempotent splits through the new envelope object") {
  const Bundle f5 = fixture("f5_walking_idempotent");
  const KaroubiEnvelope k = karoubi_envelope(f5.category);
  const Mor embedded_e = k.embedding.apply(mor(f5, "e"));
  const Obj source = k.cat->dom(embedded_e);
  const auto split = split_idempotent(Idempotent{source, embedded_e}, *k.cat);
  REQUIRE(split.has_value());
  CHECK(split->summand == k.object_for(obj(f5, "*"), mor(f5, "e")));
}

TEST_CASE("splittings of the same idempotent have isomorphic summands") {
  const KaroubiEnvelope k = karoubi_envelope(fixture("f5_walking_idempotent").category);
  const FinCat& c = *k.cat;
  for (const Idempotent& e : all_idempotents(c)) {
    const auto splittings = all_splittings(e, c);
    REQUIRE_FALSE(splittings.empty());
    for (const Splitting& s1 : splittings) {
      for (const Splitting& s2 : splittings) {
        const Mor forward = c.compose(s2.retraction, s1.section);
        const Mor backward = c.compose(s1.retraction, s2.section);
        CHECK(c.compose(backward, forward) == c.identity(s1.summand));
        CHECK(c.compose(forward, backward) == c.identity(s2.summand));
      }
    }
  }
}

TEST_CASE("structure transport to the envelope") {
  // F2 has no nontrivial idempotents: the transport is an isomorphic copy.
  {
    const Bundle b = fixture("f2_join");
    const KaroubiEnvelope k = karoubi_envelope(b.category);
    const TransportedStructure moved = transport_magmal_to_karoubi(*b.magmal, b.symmetry, b.magma, k);
    CHECK(validate_magmal(moved.magmal).ok());
    REQUIRE(moved.magma.has_value());
    CHECK(validate_identity_magma(moved.magmal, *moved.magma).ok());
    CHECK(moved.magmal.unit == k.embedding.apply(b.magmal->unit));

    const std::size_t n = b.category->object_count();
    for (std::size_t ai = 0; ai < n; ++ai)
      for (std::size_t bi = 0; bi < n; ++bi) {
        const Obj a{static_cast<std::int32_t>(ai)}, bb{static_cast<std::int32_t>(bi)};
        CHECK(moved.magmal.tensor(k.embedding.apply(a), k.embedding.apply(bb)) ==
              k.embedding.apply(b.magmal->tensor(a, bb)));
      }
  }

  // F1 is trivial.
  {
    const Bundle b = fixture("f1_terminal");
    const KaroubiEnvelope k = karoubi_envelope(b.category);
    const TransportedStructure moved = transport_magmal_to_karoubi(*b.magmal, b.symmetry, b.magma, k);
    CHECK(validate_magmal(moved.magmal).ok());
    CHECK(moved.magma.has_value());
  }

  // F5 with the strict tensor gains a genuine new object; there is no magma
  // to transport, and the transported magmal structure re-validates.
  {
    const Bundle b = fixture("f5_tensor");
    const KaroubiEnvelope k = karoubi_envelope(b.category);
    const TransportedStructure moved =
        transport_magmal_to_karoubi(*b.magmal, b.symmetry, std::nullopt, k);
    CHECK(validate_magmal(moved.magmal).ok());
    CHECK_FALSE(moved.magma.has_value());
    CHECK(moved.magmal.base->object_count() == 2);
    for (const Idempotent& e : all_idempotents(*moved.magmal.base))
      CHECK(split_idempotent(e, *moved.magmal.base).has_value());
  }

  // F4 and F7 transport to isomorphic copies as well.
  for (const char* name : {"f4_z2", "f7_double_unit"}) {
    const Bundle b = fixture(name);
    const KaroubiEnvelope k = karoubi_envelope(b.category);
    const TransportedStructure moved =
        transport_magmal_to_karoubi(*b.magmal, b.symmetry, b.magma, k);
    CHECK(validate_magmal(moved.magmal).ok());
    REQUIRE(moved.symmetry.has_value());
    CHECK(validate_symmetric(moved.magmal, *moved.symmetry).ok());
    if (moved.magma) CHECK(validate_identity_magma(moved.magmal, *moved.magma).ok());
  }
}
