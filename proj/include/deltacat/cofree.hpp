#pragma once

#include "deltacat/lens.hpp"

namespace deltacat {

/// The cofree delta lens on a cofunctor phi : A -/-> B. The lens lives on
/// the pair category P: same objects as A, morphisms are pairs "(w,u)" of an
/// A-morphism and a B-morphism with matching boundaries under phi's object
/// map. Its Put lifts u at a to the pair of phi's chosen lift and u itself.
struct CofreeLens {
  Cofunctor cofunctor;  // phi
  DeltaLens lens;       // Get is the projection P -> B
  Functor proj_source;  // projection P -> A

  const FinCategory& apex() const { return lens.get.source; }

  bool operator==(const CofreeLens&) const = default;
};

/// A coalgebra for the comonad on Cof(B) induced by the cofree construction.
struct Coalgebra {
  Cofunctor carrier;      // phi
  CofMorphism structure;  // phi -> LR(phi)

  bool operator==(const Coalgebra&) const = default;
};

/// Direct pair construction; the runtime default.
CofreeLens cofree_lens(const Cofunctor& phi);

/// The same lens built through the codiscrete square and an abstract
/// pullback, with the pair-named objects renamed back to A's objects.
/// Agreement with cofree_lens is itself a checked property.
CofreeLens cofree_lens_via_pullback(const Cofunctor& phi);

/// The bijective-on-objects comparison from the span apex of phi into the
/// pair category; an identity-on-names inclusion.
Functor span_embedding(const Cofunctor& phi);

/// Action of the cofree construction on a morphism of cofunctors:
/// objects follow the carrier, a pair (w, u) goes to (h w, u).
LensMorphism cofree_on_morphism(const CofMorphism& m);

/// Underlying-cofunctor image of cofree_on_morphism: the comonad's action.
CofMorphism lr_on_morphism(const CofMorphism& m);

/// Counit component at phi: the projection P -> A as a morphism of
/// cofunctors LR(phi) -> phi.
CofMorphism counit(const Cofunctor& phi);

/// Unit component at a lens: the carrier sends w to (w, f w).
LensMorphism unit(const DeltaLens& lens);

/// Comultiplication at phi: L applied to the unit at the cofree lens,
/// sending (w, u) to ((w,u), u).
CofMorphism comultiplication(const Cofunctor& phi);

/// One triangle identity with an explicitly supplied unit carrier, so that
/// faults can be injected: counit after the unit must be the identity on
/// the lens's underlying cofunctor.
std::optional<Error> check_lens_triangle(const DeltaLens& lens,
                                         const Functor& unit_carrier);

/// The other triangle: the cofree image of the counit after the unit at the
/// cofree lens must be the identity on the cofree lens.
std::optional<Error> check_cofunctor_triangle(const Cofunctor& phi,
                                              const Functor& unit_carrier);

/// Both triangle identities with the real unit and counit.
std::optional<Error> check_triangle_identities(const Cofunctor& phi,
                                               const DeltaLens& lens);

std::vector<LawCheck> comonad_law_checks(const Cofunctor& phi);
std::optional<Error> check_comonad_laws(const Cofunctor& phi);

CheckedValue<Coalgebra> check_coalgebra(const Cofunctor& phi,
                                        const Functor& structure_carrier);
Result<Coalgebra> validate_coalgebra(const Cofunctor& phi,
                                     const CofMorphism& structure);

DeltaLens coalgebra_to_lens(const Coalgebra& coalgebra);
Coalgebra lens_to_coalgebra(const DeltaLens& lens);

struct Factorization {
  LensMorphism first;  // bijective-on-objects unit carrier
  CofreeLens second;   // cofree lens on the underlying cofunctor
};
Factorization factorize(const DeltaLens& lens);

}  // namespace deltacat
