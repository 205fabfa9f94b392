#pragma once

#include <cstdint>
#include <utility>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cocart/error.hpp"

// Finite-category kernel: categories as explicit composition tables, functors
// and natural transformations as total index maps, plus the brute-force
// universal-property oracles every higher layer treats as ground truth.
//
// Objects and morphisms are identified by position in file order; names are
// carried only for parsing and reports. Equality is index equality. All
// values are immutable after validation and every operation is a pure
// function of its inputs, so read-sharing across threads is safe.

namespace cocart {

struct Obj {
  std::int32_t v = -1;
  constexpr bool valid() const noexcept { return v >= 0; }
  friend constexpr bool operator==(Obj, Obj) noexcept = default;
  friend constexpr auto operator<=>(Obj, Obj) noexcept = default;
};

struct Mor {
  std::int32_t v = -1;
  constexpr bool valid() const noexcept { return v >= 0; }
  friend constexpr bool operator==(Mor, Mor) noexcept = default;
  friend constexpr auto operator<=>(Mor, Mor) noexcept = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
  void merge(const ValidationReport& other, const std::string& prefix);
  std::string to_string() const;
};

struct FinCat {
  struct MorRec {
    std::string name;
    Obj dom;
    Obj cod;
  };

  std::vector<std::string> objects;
  std::vector<MorRec> morphisms;
  std::vector<Mor> identities;     // indexed by object
  std::vector<Mor> compose_table;  // g.v * morphism_count() + f.v; invalid = non-composable

  std::size_t object_count() const noexcept { return objects.size(); }
  std::size_t morphism_count() const noexcept { return morphisms.size(); }

  const std::string& object_name(Obj a) const;
  const std::string& morphism_name(Mor f) const;

  // Name lookups. The checked variants throw ResolveError.
  std::optional<Obj> find_object(const std::string& name) const;
  std::optional<Mor> find_morphism(const std::string& name) const;
  Obj object_named(const std::string& name) const;
  Mor morphism_named(const std::string& name) const;

  Obj dom(Mor f) const;
  Obj cod(Mor f) const;
  Mor identity(Obj a) const;

  bool composable(Mor g, Mor f) const;
  // g after f. Looking up a non-composable pair is a hard error.
  Mor compose(Mor g, Mor f) const;

  // Morphisms a -> b in file order. Ordering is stable across runs for
  // identical input files.
  std::vector<Mor> hom(Obj a, Obj b) const;

  bool is_identity(Mor f) const;

  bool operator==(const FinCat& other) const;

private:
  void check_obj(Obj a) const;
  void check_mor(Mor f) const;
};

using CatRef = std::shared_ptr<const FinCat>;

// Checks every FinCat invariant (typing, identity table, totality of
// composition over composable pairs, identity laws, associativity) and lists
// each violation with its witnessing morphisms. Empty report == valid.
ValidationReport validate_category(const FinCat& c);

struct Functor {
  CatRef source;
  CatRef target;
  std::vector<Obj> on_objects;
  std::vector<Mor> on_morphisms;

  Obj apply(Obj a) const;
  Mor apply(Mor f) const;

  bool operator==(const Functor& other) const;
};

ValidationReport validate_functor(const Functor& f);

Functor identity_functor(CatRef c);
Functor constant_functor(CatRef source, CatRef target, Obj at);
// g after f.
Functor compose_functors(const Functor& g, const Functor& f);

// Binary product category. Object (a, b) sits at index a.v*|Obj(right)|+b.v
// and morphism (f, g) at f.v*|Mor(right)|+g.v, so iterated products built
// with the same rule agree on indices regardless of bracketing.
struct ProductCat {
  CatRef cat;
  CatRef left;
  CatRef right;

  Obj obj(Obj a, Obj b) const;
  Mor mor(Mor f, Mor g) const;
  Obj first(Obj p) const;
  Obj second(Obj p) const;
  Mor first(Mor p) const;
  Mor second(Mor p) const;
};

ProductCat product_category(CatRef c, CatRef d);

// Triple product with object index i*n^2 + j*n + k; used to state naturality
// of associator-shaped families in all three slots at once.
struct TripleCat {
  CatRef cat;
  CatRef base;

  Obj obj(Obj a, Obj b, Obj c) const;
  Mor mor(Mor f, Mor g, Mor h) const;
};

TripleCat triple_product(CatRef c);

// X |-> (X, X) into product_category(c, c).
Functor diagonal_functor(CatRef c);

struct NatTrans {
  Functor source;
  Functor target;
  std::vector<Mor> components;  // indexed by source-category object

  Mor at(Obj a) const;

  bool operator==(const NatTrans& other) const;
};

ValidationReport validate_nat_trans(const NatTrans& t);

struct Cospan {
  Obj apex;
  Mor left;   // A -> apex
  Mor right;  // B -> apex
};

struct Span {
  Obj apex;
  Mor first;   // apex -> A
  Mor second;  // apex -> B
};

// Brute-force universal-property oracles. The *_failure variants return the
// first counter-witness in file order; the bool forms are thin wrappers.
struct InitialityFailure {
  Obj probe;
  std::size_t hom_count;  // |hom(i, probe)|, != 1
};

std::optional<InitialityFailure> initiality_failure(const FinCat& c, Obj i);
bool is_initial(const FinCat& c, Obj i);

std::optional<InitialityFailure> terminality_failure(const FinCat& c, Obj t);
bool is_terminal(const FinCat& c, Obj t);

struct CoproductFailure {
  Obj probe;
  Mor a;
  Mor b;
  std::size_t mediator_count;  // != 1
};

std::optional<CoproductFailure> coproduct_failure(const FinCat& c, const Cospan& s);
bool is_coproduct(const FinCat& c, const Cospan& s);

std::optional<CoproductFailure> product_failure(const FinCat& c, const Span& s);
bool is_product(const FinCat& c, const Span& s);

// All cocones under a finite diagram, apex-major then lexicographic in the
// legs (file order).
std::vector<std::pair<Obj, std::vector<Mor>>> enumerate_cocones(const Functor& diagram);

// General colimit oracle for a finite diagram: cocone legs indexed by the
// shape's objects; exactly one mediator to every competing cocone.
bool is_colimit(const Functor& diagram, Obj apex, const std::vector<Mor>& cocone);

struct SearchLimits {
  // Maximum number of candidate families a single exhaustive search may
  // cover; pathological inputs fail fast with SizeLimitError.
  std::uint64_t max_candidates = 10'000'000;
};

// Exhaustive, deterministic list of all natural transformations f => g,
// lexicographic in per-object component choice (file order). Throws
// SizeLimitError when prod_X |hom(fX, gX)| exceeds the bound.
std::vector<NatTrans> natural_transformations_between(const Functor& f, const Functor& g,
                                                      SearchLimits limits = {});

std::optional<Mor> two_sided_inverse(const FinCat& c, Mor f);

} // namespace cocart
