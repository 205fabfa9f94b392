#include <doctest.h>

#include "cocart/egger.hpp"

using namespace cocart;

namespace {

FinSetObj carrier_a(std::size_t n) { return make_finset(n, "a"); }
FinSetObj carrier_b(std::size_t n) { return make_finset(n, "b"); }

} // namespace

TEST_CASE("tensor carrier shape and ordering") {
  const FinSetObj a2 = carrier_a(2);
  const FinSetObj b2 = carrier_b(2);
  const FinSetObj t = egger_tensor(a2, b2);
  CHECK(t.size() == 8);  // 2 + 2*2 + 2
  CHECK(t.elements.front() == "inl(a0)");
  CHECK(t.elements[2] == "mid(a0,b0)");
  CHECK(t.elements.back() == "inr(b1)");

  // Empty left factor: the tensor is B in the inr block.
  const FinSetObj right_only = egger_tensor(egger_unit(), b2);
  CHECK(right_only.size() == 2);
  CHECK(right_only.elements[0] == "inr(b0)");

  CHECK(egger_tensor(carrier_a(1), carrier_b(1)).size() == 3);

  // Encode/decode round-trips across the whole carrier.
  for (std::size_t i = 0; i < t.size(); ++i) {
    const EggerElem e = egger_decode(a2, b2, static_cast<std::int32_t>(i));
    CHECK(egger_encode(a2, b2, e) == static_cast<std::int32_t>(i));
    CHECK(egger_label(a2, b2, e) == t.elements[i]);
  }
}

TEST_CASE("tensor of maps is functorial") {
  const FinSetObj a = carrier_a(2);
  const FinSetObj b = carrier_b(2);

  CHECK(egger_tensor_mor(identity_map(a), identity_map(b)) ==
        identity_map(egger_tensor(a, b)));

  // (f2 . f1) (x) (g2 . g1) = (f2 (x) g2) . (f1 (x) g1), exhaustively over
  // small maps.
  const FinSetObj c = make_finset(2, "c");
  for (const SetMor& f1 : all_maps(a, b)) {
    for (const SetMor& f2 : all_maps(b, c)) {
      for (const SetMor& g1 : all_maps(b, a)) {
        for (const SetMor& g2 : all_maps(a, c)) {
          // Shapes: f: a -> b -> c, g: b -> a -> c.
          const SetMor lhs = egger_tensor_mor(compose(f2, f1), compose(g2, g1));
          const SetMor rhs = compose(egger_tensor_mor(f2, g2), egger_tensor_mor(f1, g1));
          CHECK(lhs == rhs);
        }
      }
    }
  }

  // A constant first factor collapses the mid block in its first coordinate.
  SetMor constant{a, a, {0, 0}};
  const SetMor collapsed = egger_tensor_mor(constant, identity_map(b));
  const EggerElem moved = egger_decode(a, b, collapsed.map[static_cast<std::size_t>(
                                                  egger_encode(a, b, {EggerElem::Tag::Mid, 1, 1}))]);
  CHECK(moved.tag == EggerElem::Tag::Mid);
  CHECK(moved.first == 0);
  CHECK(moved.second == 1);
}

TEST_CASE("coherence components pass the exhaustive battery") {
  // Empty carriers: every law is vacuous but the battery still runs.
  CHECK_NOTHROW(egger_coherence(egger_unit(), egger_unit(), egger_unit()));

  // Singletons: the braiding swaps the outer blocks and transposes mid.
  const FinSetObj a1 = carrier_a(1);
  const FinSetObj b1 = carrier_b(1);
  const EggerCoherence coh = egger_coherence(a1, b1, a1);
  const SetMor braid = egger_braiding(a1, b1);
  CHECK(egger_decode(b1, a1, braid.map[0]).tag == EggerElem::Tag::Inr);   // inl -> inr
  CHECK(egger_decode(b1, a1, braid.map[1]).tag == EggerElem::Tag::Mid);   // mid transposed
  CHECK(egger_decode(b1, a1, braid.map[2]).tag == EggerElem::Tag::Inl);   // inr -> inl
  CHECK(coh.associator.dom.size() == 7);  // ((1+1+1) + (1+1+1)*1 + 1)

  // Pentagon instance spelled out on the singleton carriers.
  const SetMor lhs = compose(egger_associator(a1, b1, egger_tensor(a1, b1)),
                             egger_associator(egger_tensor(a1, b1), a1, b1));
  const SetMor rhs =
      compose(egger_tensor_mor(identity_map(a1), egger_associator(b1, a1, b1)),
              compose(egger_associator(a1, egger_tensor(b1, a1), b1),
                      egger_tensor_mor(egger_associator(a1, b1, a1), identity_map(b1))));
  CHECK(lhs == rhs);

  CHECK_NOTHROW(egger_coherence(carrier_a(2), carrier_b(2), carrier_a(2)));
}

TEST_CASE("left band magma") {
  const FinSetObj a1 = carrier_a(1);
  const LeftBandMagma m1 = left_band_magma(a1);
  for (const std::int32_t image : m1.mu.map) CHECK(image == 0);

  const FinSetObj a2 = carrier_a(2);
  const LeftBandMagma m2 = left_band_magma(a2);
  const std::int32_t mid01 = egger_encode(a2, a2, {EggerElem::Tag::Mid, 0, 1});
  CHECK(m2.mu.map[static_cast<std::size_t>(mid01)] == 0);  // pi_1

  // Naturality against the swap automorphism.
  SetMor swap{a2, a2, {1, 0}};
  CHECK(compose(swap, m2.mu) == compose(m2.mu, egger_tensor_mor(swap, swap)));

  CHECK(egger_magma_laws({a2, carrier_b(2)}, 3).ok());
}

TEST_CASE("the quasi-symmetry square fails exactly on the mid block") {
  const FinSetObj a2 = carrier_a(2);
  const FinSetObj b2 = carrier_b(2);
  const auto witness = check_diagram2_egger(a2, b2);
  REQUIRE(witness.has_value());
  CHECK(witness->element.tag == EggerElem::Tag::Mid);
  CHECK(witness->element.first == 0);
  CHECK(witness->element.second == 0);
  CHECK(witness->image.tag == EggerElem::Tag::Inl);
  CHECK(witness->image.first == 0);

  const auto tiny = check_diagram2_egger(carrier_a(1), carrier_b(1));
  REQUIRE(tiny.has_value());
  CHECK(tiny->element.tag == EggerElem::Tag::Mid);

  CHECK_FALSE(check_diagram2_egger(egger_unit(), b2).has_value());
  CHECK_FALSE(check_diagram2_egger(a2, egger_unit()).has_value());
}

// The computed composite agrees elementwise with the closed form: fix the
// outer blocks, project mid pairs onto their first component.
TEST_CASE("the quasi-symmetry composite is the first-component projection") {
  for (std::size_t p = 0; p <= 3; ++p) {
    for (std::size_t q = 0; q <= 2; ++q) {
      const FinSetObj a = carrier_a(p);
      const FinSetObj b = carrier_b(q);
      const SetMor endo = egger_diagram2_endo(a, b);
      CHECK(compose(endo, endo) == endo);
      for (std::size_t i = 0; i < endo.map.size(); ++i) {
        const EggerElem e = egger_decode(a, b, static_cast<std::int32_t>(i));
        EggerElem expected = e;
        if (e.tag == EggerElem::Tag::Mid) expected = {EggerElem::Tag::Inl, e.first, -1};
        CHECK(endo.map[i] == egger_encode(a, b, expected));
      }
    }
  }
}

TEST_CASE("splitting the idempotent recovers the plain sum") {
  const EggerSplitting s22 = egger_synthesize_coproduct(carrier_a(2), carrier_b(2), 3);
  CHECK(s22.summand.size() == 4);

  const EggerSplitting s0b = egger_synthesize_coproduct(egger_unit(), carrier_b(2), 3);
  CHECK(s0b.summand.size() == 2);

  const EggerSplitting s31 = egger_synthesize_coproduct(carrier_a(3), carrier_b(1), 3);
  CHECK(s31.summand.size() == 4);
}

TEST_CASE("monoid and semigroup counts agree") {
  const auto [m1, s1] = monoid_semigroup_correspondence(1);
  CHECK(m1 == 1);
  CHECK(s1 == 1);

  const auto [m2, s2] = monoid_semigroup_correspondence(2);
  CHECK(m2 == s2);

  CHECK_THROWS_AS(monoid_semigroup_correspondence(4), SizeLimitError);
}

// The full monoid diagram over M (x) M reduces to plain associativity of the
// mid table: the unit laws pin the outer blocks, so the two predicates agree
// on every table.
TEST_CASE("monoid laws reduce to associativity of the mid component") {
  const std::size_t n = 2;
  const FinSetObj m = make_finset(n, "m");
  std::vector<std::int32_t> table(n * n, 0);
  bool done = false;
  while (!done) {
    CHECK(egger_monoid_laws(m, table) == binary_op_associative(n, table));
    std::size_t pos = table.size();
    done = true;
    while (pos > 0) {
      --pos;
      if (static_cast<std::size_t>(++table[pos]) < n) {
        done = false;
        break;
      }
      table[pos] = 0;
    }
  }
}

TEST_CASE("the hypotheses hold while the square fails, for every small pair") {
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t q = 1; q <= 3; ++q) {
      const FinSetObj a = carrier_a(p);
      const FinSetObj b = carrier_b(q);
      CHECK(egger_magma_laws({a, b}, 2).ok());
      CHECK(check_diagram2_egger(a, b).has_value());
    }
  }
}
