#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "cocart/fincat.hpp"
#include "cocart/magmal.hpp"

// Idempotents and their splittings, naturally weak relative adjunctions and
// naturally weak colimits, and the Karoubi envelope. This is the machinery
// behind "the canonical idempotent splits iff the (co)limit exists".

namespace cocart {

struct Idempotent {
  Obj object;
  Mor endo;  // endo . endo = endo
};

bool is_idempotent(const FinCat& c, Mor e);

// All idempotents in deterministic (object, morphism) order.
std::vector<Idempotent> all_idempotents(const FinCat& c);

struct Splitting {
  Obj summand;
  Mor retraction;  // A -> S
  Mor section;     // S -> A; section . retraction = e, retraction . section = id_S
};

// An idempotent admits a retraction iff it is the identity. Returns whether a
// retraction exists and checks the equivalence against (e = id) directly.
bool check_retraction_lemma(const Idempotent& e, const FinCat& c);

// First splitting in deterministic (summand, retraction, section) order, or
// nothing when the idempotent does not split in c.
std::optional<Splitting> split_idempotent(const Idempotent& e, const FinCat& c);

// Naturally weak relative adjunction: functors J : A -> E, L : A -> C,
// R : C -> E, a transformation eta : J => R.L, and a chosen section flat of
// the induced comparison hom_C(LX, Y) -> hom_E(JX, RY).
struct WeakAdjunctionData {
  Functor j;
  Functor l;
  Functor r;
  NatTrans eta;
  // flat[x][y] is parallel to hom_E(Jx, Ry) in file order; entries live in
  // hom_C(Lx, y).
  std::vector<std::vector<std::vector<Mor>>> flat;

  Mor flat_at(Obj x, Obj y, Mor h) const;
};

// Section property and naturality of flat in both variables.
ValidationReport validate_weak_adjunction(const WeakAdjunctionData& w);

// The canonical idempotent flat_{X,LX}(eta_X) on LX. Throws
// InvariantViolatedError when the computed endomorphism is not idempotent,
// which signals that w breaks its section/naturality contract.
Idempotent weak_adjunction_idempotent(const WeakAdjunctionData& w, Obj x);

// Naturally weak colimit: a cocone plus an extensionally tabulated mediator
// for every competing cocone, natural in the target.
struct WeakColimitData {
  Functor diagram;
  Obj apex;
  std::vector<Mor> cocone;     // legs D(j) -> apex
  std::vector<Mor> mediators;  // parallel to enumerate_cocones(diagram)
};

ValidationReport validate_weak_colimit(const WeakColimitData& w);

// Splits the canonical idempotent (the mediator of the weak colimit's own
// cocone) and transports the cocone along the retraction. The result is
// checked against the universal-property oracles before being returned.
std::optional<std::pair<Obj, std::vector<Mor>>> colimit_from_weak(const WeakColimitData& w);

// Karoubi envelope: objects are the idempotents of the base, named "(A|e)";
// hom((A,p),(B,q)) = { f : A -> B | q.f.p = f } with identity p.
struct KaroubiEnvelope {
  CatRef cat;
  Functor embedding;                   // A |-> (A, id_A)
  std::vector<Idempotent> object_data; // per envelope object
  std::vector<Mor> underlying;         // per envelope morphism

  Obj object_for(Obj base_obj, Mor idem) const;
  Mor morphism_for(Obj env_src, Obj env_dst, Mor base_mor) const;

private:
  friend KaroubiEnvelope karoubi_envelope(CatRef c);
  std::map<std::pair<std::int32_t, std::int32_t>, Obj> object_index_;
  std::map<std::tuple<std::int32_t, std::int32_t, std::int32_t>, Mor> morphism_index_;
};

// Builds the envelope and checks that every idempotent of the result splits.
KaroubiEnvelope karoubi_envelope(CatRef c);

struct TransportedStructure {
  MagmalStructure magmal;
  std::optional<SymmetricStructure> symmetry;
  std::optional<IdentityMagma> magma;
};

// Transfers magmal (and, when present, symmetry and identity-magma)
// structure along the embedding: (A,p)(x)(B,q) := (A(x)B, p(x)q) with unit
// (I, id) and all components conjugated by the idempotents. The output is
// re-validated and an InvariantViolatedError carries the report when the
// transfer fails.
TransportedStructure transport_magmal_to_karoubi(const MagmalStructure& m,
                                                 const std::optional<SymmetricStructure>& s,
                                                 const std::optional<IdentityMagma>& g,
                                                 const KaroubiEnvelope& envelope);

} // namespace cocart
