#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cocart/error.hpp"
#include "cocart/fincat.hpp"

// Finite-set backend for the tensor A (x) B = A + A*B + B on Set: the
// three-case tagged sum, its symmetric monoidal coherence data, the left-band
// magma on every carrier, the element-level failure of the quasi-symmetry
// square, the recovery of genuine coproducts by splitting, and the
// monoid/semigroup correspondence.
//
// Set is infinite, so naturality and universal-property checks run over a
// bounded probe regime: all functions between the given carriers and the
// canonical probe sets of size <= bound.

namespace cocart {

struct FinSetObj {
  std::vector<std::string> elements;

  std::size_t size() const noexcept { return elements.size(); }
  bool operator==(const FinSetObj& other) const = default;
};

// {prefix0, ..., prefix(k-1)}.
FinSetObj make_finset(std::size_t k, const std::string& prefix);

struct SetMor {
  FinSetObj dom;
  FinSetObj cod;
  std::vector<std::int32_t> map;  // per dom element: index into cod

  std::int32_t operator()(std::int32_t i) const { return map[static_cast<std::size_t>(i)]; }
  bool operator==(const SetMor& other) const = default;
};

SetMor identity_map(const FinSetObj& a);
SetMor compose(const SetMor& g, const SetMor& f);
bool is_bijection(const SetMor& f);
SetMor inverse_map(const SetMor& f);

struct EggerElem {
  enum class Tag : std::uint8_t { Inl, Mid, Inr };
  Tag tag = Tag::Inl;
  std::int32_t first = -1;   // Inl / Mid
  std::int32_t second = -1;  // Mid / Inr

  bool operator==(const EggerElem& other) const = default;
};

FinSetObj egger_unit();  // the empty set

// A + A*B + B with elements ordered: inl block, mid block row-major, inr
// block; labels "inl(a)", "mid(a,b)", "inr(b)".
FinSetObj egger_tensor(const FinSetObj& a, const FinSetObj& b);

EggerElem egger_decode(const FinSetObj& a, const FinSetObj& b, std::int32_t index);
std::int32_t egger_encode(const FinSetObj& a, const FinSetObj& b, const EggerElem& e);
std::string egger_label(const FinSetObj& a, const FinSetObj& b, const EggerElem& e);

// inl a |-> inl f(a); mid(a,b) |-> mid(f a, g b); inr b |-> inr g(b).
SetMor egger_tensor_mor(const SetMor& f, const SetMor& g);

SetMor egger_lambda(const FinSetObj& a);  // a |-> inr a  :  A -> I(x)A
SetMor egger_rho(const FinSetObj& a);     // a |-> inl a  :  A -> A(x)I
SetMor egger_braiding(const FinSetObj& a, const FinSetObj& b);
SetMor egger_associator(const FinSetObj& a, const FinSetObj& b, const FinSetObj& c);

struct EggerCoherence {
  SetMor associator;  // (a(x)b)(x)c -> a(x)(b(x)c)
  SetMor braiding;    // a(x)b -> b(x)a
  SetMor lambda;      // a -> I(x)a
  SetMor rho;         // a -> a(x)I
};

// Returns the coherence components at the given carriers after verifying
// pentagon, triangle, both hexagons, involutivity and naturality exhaustively
// over carriers and functions drawn from {a, b, c}. The components are a
// reconstruction and earn their keep only by passing this battery.
EggerCoherence egger_coherence(const FinSetObj& a, const FinSetObj& b, const FinSetObj& c);

struct LeftBandMagma {
  SetMor eta;  // empty map I -> A
  SetMor mu;   // inl x |-> x, mid(x,y) |-> x, inr y |-> y
};

LeftBandMagma left_band_magma(const FinSetObj& a);

// Unit laws plus eta/mu naturality over every function between probe carriers
// of size <= probe_bound (and the given carriers); returns the violations.
ValidationReport egger_magma_laws(const std::vector<FinSetObj>& carriers,
                                  std::size_t probe_bound);

// The quasi-symmetry composite as one endomorphism of A (x) B.
SetMor egger_diagram2_endo(const FinSetObj& a, const FinSetObj& b);

struct EggerWitness {
  EggerElem element;
  EggerElem image;
};

// First element (deterministic order) moved by the quasi-symmetry composite,
// or nothing when the composite is the identity (some carrier empty).
std::optional<EggerWitness> check_diagram2_egger(const FinSetObj& a, const FinSetObj& b);

struct EggerSplitting {
  FinSetObj summand;  // A + B
  SetMor retraction;  // A(x)B -> summand
  SetMor section;     // summand -> A(x)B
  SetMor leg_left;    // A -> summand
  SetMor leg_right;   // B -> summand
};

// Splits the quasi-symmetry idempotent through A + B and verifies the cospan
// against every probe target of size <= probe_bound.
EggerSplitting egger_synthesize_coproduct(const FinSetObj& a, const FinSetObj& b,
                                          std::size_t probe_bound = 3);

// Counts monoids for the Egger tensor on an n-element carrier (full diagram
// checks; unit components are forced) and, independently, associative binary
// operations on n elements. The two must agree.
std::pair<std::uint64_t, std::uint64_t> monoid_semigroup_correspondence(std::size_t n,
                                                                        SearchLimits limits = {});

// The two predicates behind the counts, exposed so tests can compare them
// table by table.
bool egger_monoid_laws(const FinSetObj& m, const std::vector<std::int32_t>& mid_table);
bool binary_op_associative(std::size_t n, const std::vector<std::int32_t>& table);

// Probe universe helpers.
std::vector<FinSetObj> probe_sets(std::size_t max_size);
std::vector<SetMor> all_maps(const FinSetObj& s, const FinSetObj& t);

} // namespace cocart
