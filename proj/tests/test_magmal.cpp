#include <doctest.h>

#include "cocart/magmal.hpp"
#include "fixtures.hpp"

using namespace cocart;
using cocart::testing::fixture;
using cocart::testing::mor;
using cocart::testing::obj;

namespace {

// F5 with the strict tensor but deliberately colax unitors lambda = rho = e;
// the unitors are natural (the monoid is commutative) and not invertible.
Bundle colax_walking_idempotent() {
  Bundle b = fixture("f5_tensor");
  MagmalStructure m = *b.magmal;
  const Mor e = mor(b, "e");
  m.lambda = {e};
  m.rho = {e};
  b.magmal = m;
  b.symmetry.reset();
  return b;
}

} // namespace

TEST_CASE("validate_magmal accepts the shipped magmal fixtures") {
  for (const char* name :
       {"f1_terminal", "f2_join", "f3_meet", "f4_z2", "f5_tensor", "f7_double_unit"}) {
    const Bundle b = fixture(name);
    REQUIRE_MESSAGE(b.magmal.has_value(), name);
    CHECK_MESSAGE(validate_magmal(*b.magmal).ok(), name);
    if (b.symmetry) CHECK_MESSAGE(validate_symmetric(*b.magmal, *b.symmetry).ok(), name);
  }
}

TEST_CASE("an ill-typed unitor component is reported") {
  const Bundle b = fixture("f2_join");
  MagmalStructure broken = *b.magmal;
  // lambda_0 must land in 0 (x) 0 = 0; aim it at 1 instead.
  broken.lambda[0] = mor(b, "u");
  const ValidationReport report = validate_magmal(broken);
  REQUIRE_FALSE(report.ok());
  CHECK(report.to_string().find("lambda") != std::string::npos);
  CHECK(report.to_string().find("ill-typed") != std::string::npos);
}

TEST_CASE("is_unital") {
  CHECK(is_unital(*fixture("f2_join").magmal));
  CHECK(is_unital(*fixture("f7_double_unit").magmal));

  const Bundle colax = colax_walking_idempotent();
  CHECK(validate_magmal(*colax.magmal).ok());
  CHECK_FALSE(is_unital(*colax.magmal));
}

TEST_CASE("unit comparison isomorphisms") {
  const Bundle f2 = fixture("f2_join");
  const UnitStructure same{f2.magmal->unit, f2.magmal->lambda, f2.magmal->rho};
  const auto [fwd, bwd] = unit_iso(same, same, *f2.magmal);
  CHECK(fwd == mor(f2, "id0"));
  CHECK(bwd == mor(f2, "id0"));

  // F7 carries two unit structures on the same tensor: I and I'.
  const Bundle f7 = fixture("f7_double_unit");
  const FinCat& c = *f7.category;
  const MagmalStructure& m = *f7.magmal;
  const UnitStructure at_i{m.unit, m.lambda, m.rho};
  // At I' the unitors are: lambda'_A : A -> I' (x) A = I', rho'_A : A -> A.
  UnitStructure at_i2;
  at_i2.unit = obj(f7, "I'");
  at_i2.lambda = {mor(f7, "u"), mor(f7, "1_I'")};
  at_i2.rho = {c.identity(obj(f7, "I")), c.identity(obj(f7, "I'"))};

  const auto [fwd2, bwd2] = unit_iso(at_i, at_i2, m);
  CHECK(fwd2 == mor(f7, "u"));
  CHECK(bwd2 == mor(f7, "v"));
  const auto [fwd3, bwd3] = unit_iso(at_i2, at_i, m);
  CHECK(fwd3 == mor(f7, "v"));
  CHECK(bwd3 == mor(f7, "u"));
  CHECK(c.compose(bwd2, fwd2) == c.identity(obj(f7, "I")));
  CHECK(c.compose(fwd2, bwd2) == c.identity(obj(f7, "I'")));
}

// Z/2 mutations that survive the naturality and involution checks but must
// be caught by the coherence laws themselves: these pin the orientation of
// the pentagon, triangle and hexagon formulas.
TEST_CASE("coherence laws discriminate on the group fixture") {
  const Bundle f4 = fixture("f4_z2");
  const Mor g = mor(f4, "g");

  {
    SymmetricStructure twisted = *f4.symmetry;
    twisted.sigma = {g};
    // sigma = g is natural (the group is abelian) and an involution...
    CHECK(validate_nat_trans(
              NatTrans{tensor_as_functor(*f4.magmal), tensor_after_swap_functor(*f4.magmal),
                       twisted.sigma})
              .ok());
    CHECK(check_sigma_involution(*f4.magmal, twisted.sigma).ok());
    // ...so only the hexagons can reject it, and they do.
    CHECK_FALSE(check_hexagons(*f4.magmal, twisted.alpha, twisted.sigma).ok());
    CHECK_FALSE(validate_symmetric(*f4.magmal, twisted).ok());
  }

  {
    SymmetricStructure twisted = *f4.symmetry;
    twisted.alpha = {g};
    CHECK_FALSE(check_pentagon(*f4.magmal, twisted.alpha).ok());
    CHECK_FALSE(check_triangle(*f4.magmal, twisted.alpha).ok());
    CHECK_FALSE(validate_symmetric(*f4.magmal, twisted).ok());
  }
}

TEST_CASE("identity magma validation") {
  const Bundle f2 = fixture("f2_join");
  CHECK(validate_identity_magma(*f2.magmal, *f2.magma).ok());

  const Bundle f1 = fixture("f1_terminal");
  CHECK(validate_identity_magma(*f1.magmal, *f1.magma).ok());

  // Z/2 admits no candidate at all: every (eta, mu) family fails.
  const Bundle f4 = fixture("f4_z2");
  for (const char* eta : {"1", "g"}) {
    for (const char* mu : {"1", "g"}) {
      IdentityMagma g{{mor(f4, eta)}, {mor(f4, mu)}};
      CHECK_FALSE(validate_identity_magma(*f4.magmal, g).ok());
    }
  }
}

TEST_CASE("enumeration respects the candidate-space bound") {
  // Z/2 has 2 x 2 raw candidate families on its single object.
  CHECK_THROWS_AS(
      enumerate_identity_magmas(*fixture("f4_z2").magmal, false, nullptr, SearchLimits{1}),
      SizeLimitError);
}

TEST_CASE("unit_iso demands invertible unitors") {
  const Bundle colax = colax_walking_idempotent();
  const UnitStructure u{colax.magmal->unit, colax.magmal->lambda, colax.magmal->rho};
  CHECK_THROWS_AS(unit_iso(u, u, *colax.magmal), NotInvertibleError);
}

TEST_CASE("identity magma enumeration") {
  const Bundle f2 = fixture("f2_join");
  const auto monoids = enumerate_identity_magmas(*f2.magmal, true, &*f2.symmetry);
  REQUIRE(monoids.size() == 1);
  CHECK(monoids.front() == *f2.magma);

  CHECK(enumerate_identity_magmas(*fixture("f3_meet").magmal, false, nullptr).empty());
  CHECK(enumerate_identity_magmas(*fixture("f4_z2").magmal, false, nullptr).empty());
}

// Membership in the enumeration is exactly an empty validation report:
// the backtracking search and the raw product-plus-validate sweep are
// different code paths over the same law set.
TEST_CASE("enumeration membership is characterized by validation") {
  for (const char* name : {"f2_join", "f4_z2", "f7_double_unit"}) {
    const Bundle b = fixture(name);
    const MagmalStructure& m = *b.magmal;
    const FinCat& c = *b.category;
    const std::size_t n = c.object_count();

    const auto enumerated = enumerate_identity_magmas(m, false, nullptr);

    std::vector<std::vector<std::pair<Mor, Mor>>> raw(n);
    for (std::size_t a = 0; a < n; ++a) {
      const Obj x{static_cast<std::int32_t>(a)};
      for (const Mor eta : c.hom(m.unit, x))
        for (const Mor mu : c.hom(m.tensor(x, x), x)) raw[a].emplace_back(eta, mu);
    }
    std::vector<std::size_t> idx(n, 0);
    std::size_t valid_count = 0;
    bool exhausted = false;
    for (std::size_t a = 0; a < n; ++a)
      if (raw[a].empty()) exhausted = true;
    while (!exhausted) {
      IdentityMagma g;
      g.eta.resize(n);
      g.mu.resize(n);
      for (std::size_t a = 0; a < n; ++a) {
        g.eta[a] = raw[a][idx[a]].first;
        g.mu[a] = raw[a][idx[a]].second;
      }
      const bool valid = validate_identity_magma(m, g).ok();
      const bool listed =
          std::find(enumerated.begin(), enumerated.end(), g) != enumerated.end();
      CHECK(valid == listed);
      if (valid) ++valid_count;

      std::size_t pos = n;
      exhausted = true;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < raw[pos].size()) {
          exhausted = false;
          break;
        }
        idx[pos] = 0;
      }
    }
    CHECK(valid_count == enumerated.size());
  }
}

TEST_CASE("eta at the unit is the identity for every valid family") {
  for (const char* name : {"f1_terminal", "f2_join", "f7_double_unit"}) {
    const Bundle b = fixture(name);
    for (const IdentityMagma& g : enumerate_identity_magmas(*b.magmal, false, nullptr))
      CHECK(g.eta_at(b.magmal->unit) == b.category->identity(b.magmal->unit));
  }
}

TEST_CASE("magma homomorphisms") {
  const Bundle f2 = fixture("f2_join");
  const MagmalStructure& m = *f2.magmal;
  const Obj zero = obj(f2, "0");
  const Obj one = obj(f2, "1");
  const UnitalMagma on_zero{zero, f2.magma->eta_at(zero), f2.magma->mu_at(zero)};
  const UnitalMagma on_one{one, f2.magma->eta_at(one), f2.magma->mu_at(one)};

  CHECK(is_magma_homomorphism(m, mor(f2, "id0"), on_zero, on_zero));
  CHECK(is_magma_homomorphism(m, mor(f2, "u"), on_zero, on_one));

  // g on Z/2 fails to be a homomorphism for some candidate structure.
  const Bundle f4 = fixture("f4_z2");
  const Obj star = obj(f4, "*");
  bool some_failure = false;
  for (const char* eta : {"1", "g"}) {
    for (const char* mu : {"1", "g"}) {
      const UnitalMagma cand{star, mor(f4, eta), mor(f4, mu)};
      if (!is_magma_homomorphism(*f4.magmal, mor(f4, "g"), cand, cand)) some_failure = true;
    }
  }
  CHECK(some_failure);
}

TEST_CASE("tensor product of magmas") {
  const Bundle f1 = fixture("f1_terminal");
  const UnitalMagma trivial{obj(f1, "*"), mor(f1, "1"), mor(f1, "1")};
  const UnitalMagma out = induced_magma_on_tensor(trivial, trivial, *f1.magmal, *f1.symmetry);
  CHECK(out.carrier == obj(f1, "*"));

  const Bundle f2 = fixture("f2_join");
  const Obj zero = obj(f2, "0");
  const Obj one = obj(f2, "1");
  const UnitalMagma on_zero{zero, f2.magma->eta_at(zero), f2.magma->mu_at(zero)};
  const UnitalMagma on_one{one, f2.magma->eta_at(one), f2.magma->mu_at(one)};

  const UnitalMagma mixed = induced_magma_on_tensor(on_zero, on_one, *f2.magmal, *f2.symmetry);
  CHECK(mixed.carrier == one);
  CHECK(mixed.mu == mor(f2, "id1"));

  const UnitalMagma doubled = induced_magma_on_tensor(on_one, on_one, *f2.magmal, *f2.symmetry);
  CHECK(validate_unital_magma(*f2.magmal, doubled).ok());
}

TEST_CASE("pointwise tensor of endofunctors") {
  const Bundle f2 = fixture("f2_join");
  const Functor id = identity_functor(f2.category);

  const Functor square = tensor_functors(id, id, *f2.magmal);
  CHECK(square.on_objects == id.on_objects);  // max is idempotent

  const Functor unit_left =
      tensor_functors(constant_functor(f2.category, f2.category, f2.magmal->unit), id,
                      *f2.magmal);
  CHECK(unit_left.on_objects == id.on_objects);  // 0 is the unit of max

  const Bundle f1 = fixture("f1_terminal");
  const Functor one = identity_functor(f1.category);
  CHECK(tensor_functors(one, one, *f1.magmal) == one);
}

// The pinned interchange bracketing agrees with an alternative coherent
// route, and the two directions invert each other.
TEST_CASE("interchange bracketings agree and invert") {
  for (const char* name : {"f1_terminal", "f2_join", "f4_z2", "f7_double_unit"}) {
    const Bundle b = fixture(name);
    const MagmalStructure& m = *b.magmal;
    const SymmetricStructure& s = *b.symmetry;
    const FinCat& c = *b.category;
    const std::size_t n = c.object_count();
    for (std::size_t ai = 0; ai < n; ++ai) {
      for (std::size_t bi = 0; bi < n; ++bi) {
        const Obj a{static_cast<std::int32_t>(ai)}, bb{static_cast<std::int32_t>(bi)};
        const Mor fox = fox_interchange(m, s, a, bb);
        CHECK(fox == fox_interchange_alt(m, s, a, bb));
        const Mor middle = middle_interchange(m, s, a, bb);
        CHECK(c.compose(middle, fox) ==
              c.identity(m.tensor(m.tensor(a, bb), m.tensor(a, bb))));
        CHECK(c.compose(fox, middle) ==
              c.identity(m.tensor(m.tensor(a, a), m.tensor(bb, bb))));
      }
    }
  }
}

TEST_CASE("induced tensor magma satisfies the unit laws on every fixture pair") {
  for (const char* name : {"f1_terminal", "f2_join", "f7_double_unit"}) {
    const Bundle b = fixture(name);
    const std::size_t n = b.category->object_count();
    for (std::size_t ai = 0; ai < n; ++ai) {
      for (std::size_t bi = 0; bi < n; ++bi) {
        const Obj a{static_cast<std::int32_t>(ai)}, bb{static_cast<std::int32_t>(bi)};
        const UnitalMagma left{a, b.magma->eta_at(a), b.magma->mu_at(a)};
        const UnitalMagma right{bb, b.magma->eta_at(bb), b.magma->mu_at(bb)};
        const UnitalMagma out =
            induced_magma_on_tensor(left, right, *b.magmal, *b.symmetry);
        CHECK(validate_unital_magma(*b.magmal, out).ok());
      }
    }
  }
}
