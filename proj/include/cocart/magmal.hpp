#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cocart/fincat.hpp"

// Magmal and symmetric-monoidal structure on a finite category: tensor
// tables, colax unitors, associator/braiding components, unital magmas, and
// the pointwise endofunctor structure used to speak about magma structures
// on the identity functor.
//
// Unitors follow the colax orientation throughout: lambda_A : A -> I (x) A
// and rho_A : A -> A (x) I, with lambda_I = rho_I. A structure is "unital"
// when both families are invertible; colax data is accepted everywhere
// except operations that explicitly require unitality.

namespace cocart {

struct MagmalStructure {
  CatRef base;
  Obj unit;
  std::vector<Obj> tensor_obj;  // a.v * |Obj| + b.v
  std::vector<Mor> tensor_mor;  // f.v * |Mor| + g.v
  std::vector<Mor> lambda;      // lambda_A : A -> I (x) A
  std::vector<Mor> rho;         // rho_A    : A -> A (x) I

  Obj tensor(Obj a, Obj b) const;
  Mor tensor(Mor f, Mor g) const;
  Mor lambda_at(Obj a) const;
  Mor rho_at(Obj a) const;

  bool operator==(const MagmalStructure& other) const;
};

// Covers table typing, bifunctoriality (the tensor as a functor out of
// base x base), unitor naturality, and lambda_I = rho_I.
ValidationReport validate_magmal(const MagmalStructure& m);

// True iff every unitor component has a two-sided inverse.
bool is_unital(const MagmalStructure& m);

struct SymmetricStructure {
  std::vector<Mor> alpha;  // alpha_{A,B,C} : (A(x)B)(x)C -> A(x)(B(x)C), index a*n^2+b*n+c
  std::vector<Mor> sigma;  // sigma_{A,B}   : A(x)B -> B(x)A, index a*n+b

  Mor alpha_at(const FinCat& base, Obj a, Obj b, Obj c) const;
  Mor sigma_at(const FinCat& base, Obj a, Obj b) const;

  bool operator==(const SymmetricStructure& other) const = default;
};

// Naturality of alpha and sigma in every slot (over the product categories),
// invertibility of alpha, pentagon, triangle, both hexagons, and
// sigma_{B,A} . sigma_{A,B} = id.
ValidationReport validate_symmetric(const MagmalStructure& m, const SymmetricStructure& s);

Mor alpha_inverse(const MagmalStructure& m, const SymmetricStructure& s, Obj a, Obj b, Obj c);

struct UnitalMagma {
  Obj carrier;
  Mor eta;  // I -> A
  Mor mu;   // A (x) A -> A

  bool operator==(const UnitalMagma& other) const = default;
};

ValidationReport validate_unital_magma(const MagmalStructure& m, const UnitalMagma& u);

// Per-object families eta_A : I -> A and mu_A : A(x)A -> A carrying a unital
// magma structure on the identity functor; validity additionally demands
// naturality of both families, i.e. every morphism is a homomorphism.
struct IdentityMagma {
  std::vector<Mor> eta;
  std::vector<Mor> mu;

  Mor eta_at(Obj a) const;
  Mor mu_at(Obj a) const;

  bool operator==(const IdentityMagma& other) const = default;
};

ValidationReport validate_identity_magma(const MagmalStructure& m, const IdentityMagma& g);

// A unit triple on a fixed tensor; two of these are canonically isomorphic.
struct UnitStructure {
  Obj unit;
  std::vector<Mor> lambda;
  std::vector<Mor> rho;
};

// Returns the canonical pair (I -> I', I' -> I) built from the two unitor
// families and checks the composites are mutually inverse. Throws
// NotInvertibleError when a required unitor inverse is missing.
std::pair<Mor, Mor> unit_iso(const UnitStructure& u1, const UnitStructure& u2,
                             const MagmalStructure& m);

// Exhaustive, deterministic enumeration. With require_commutative_monoid the
// families are additionally filtered by associativity (via alpha) and
// commutativity (via sigma); a symmetric structure must then be supplied.
std::vector<IdentityMagma> enumerate_identity_magmas(const MagmalStructure& m,
                                                     bool require_commutative_monoid,
                                                     const SymmetricStructure* s,
                                                     SearchLimits limits = {});

bool is_magma_homomorphism(const MagmalStructure& m, Mor f, const UnitalMagma& a,
                           const UnitalMagma& b);

// Tensor-product magma: carrier A(x)B, multiplication through the
// middle-interchange map, unit (eta_A (x) eta_B) . lambda_I.
UnitalMagma induced_magma_on_tensor(const UnitalMagma& a, const UnitalMagma& b,
                                    const MagmalStructure& m, const SymmetricStructure& s);

// Pointwise tensor of endofunctors: (F (x) G)X = FX (x) GX.
Functor tensor_functors(const Functor& f, const Functor& g, const MagmalStructure& m);

// The tensor tables as functors; index conventions of ProductCat/TripleCat
// and MagmalStructure agree by construction.
Functor tensor_as_functor(const MagmalStructure& m);              // (A,B) |-> A(x)B
Functor tensor_after_swap_functor(const MagmalStructure& m);      // (A,B) |-> B(x)A
Functor left_assoc_functor(const MagmalStructure& m);             // (A,B,C) |-> (A(x)B)(x)C
Functor right_assoc_functor(const MagmalStructure& m);            // (A,B,C) |-> A(x)(B(x)C)

// Individual coherence laws over associator/braiding component tables;
// validate_symmetric is their conjunction plus naturality and invertibility.
ValidationReport check_pentagon(const MagmalStructure& m, const std::vector<Mor>& alpha);
ValidationReport check_triangle(const MagmalStructure& m, const std::vector<Mor>& alpha);
ValidationReport check_hexagons(const MagmalStructure& m, const std::vector<Mor>& alpha,
                                const std::vector<Mor>& sigma);
ValidationReport check_sigma_involution(const MagmalStructure& m, const std::vector<Mor>& sigma);

// The canonical "swap the middle two factors" morphisms, pinned to one
// bracketing; any coherent alternative agrees by Mac Lane coherence and a
// property test asserts as much for one alternative route.
//
//   middle_interchange : (A(x)A)(x)(B(x)B) -> (A(x)B)(x)(A(x)B)   [sigma_{A,B}]
//   fox_interchange    : (A(x)B)(x)(A(x)B) -> (A(x)A)(x)(B(x)B)   [sigma_{B,A}]
Mor middle_interchange(const MagmalStructure& m, const SymmetricStructure& s, Obj a, Obj b);
Mor fox_interchange(const MagmalStructure& m, const SymmetricStructure& s, Obj a, Obj b);

// Alternative bracketing of fox_interchange used only as a coherence
// cross-check.
Mor fox_interchange_alt(const MagmalStructure& m, const SymmetricStructure& s, Obj a, Obj b);

} // namespace cocart
