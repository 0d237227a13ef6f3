#pragma once

#include <map>
#include <utility>

#include "deltacat/fincat.hpp"

namespace deltacat {

// Lift table: (object of the source, morphism of the base out of its image)
// maps to the chosen morphism of the source.
using LiftKey = std::pair<ObjId, MorId>;
using LiftTable = std::map<LiftKey, MorId>;

/// A cofunctor in its lifting-operation presentation: the Put-only part of a
/// lens. The table is stored dense, one row per applicable pair.
struct Cofunctor {
  FinCategory source;  // A
  FinCategory base;    // B
  std::map<ObjId, ObjId> object_map;
  LiftTable lifts;

  const ObjId& on_object(const ObjId& a) const { return object_map.at(a); }

  bool operator==(const Cofunctor&) const = default;
};

/// The same data as a span: a bijective-on-objects left leg and a discrete
/// opfibration right leg out of a common apex.
struct CofSpan {
  FinCategory apex;  // X
  Functor left;      // X -> A
  Functor right;     // X -> B

  bool operator==(const CofSpan&) const = default;
};

/// A morphism of cofunctors over a shared base: a functor between the source
/// categories that commutes with the object maps and preserves chosen lifts.
struct CofMorphism {
  Cofunctor from;
  Cofunctor to;
  Functor carrier;  // from.source -> to.source

  bool operator==(const CofMorphism&) const = default;
};

CheckOutcome check_cofunctor(const Cofunctor& raw);
Result<Cofunctor> validate_cofunctor(Cofunctor raw);

Result<MorId> lift(const Cofunctor& phi, const ObjId& a, const MorId& u);

CofSpan to_span(const Cofunctor& phi);
Result<Cofunctor> from_span(const CofSpan& span);

Cofunctor identity_cofunctor(const FinCategory& base);

CheckedValue<CofMorphism> check_cof_morphism(const Functor& carrier,
                                             const Cofunctor& from,
                                             const Cofunctor& to);
Result<CofMorphism> validate_cof_morphism(const Functor& carrier,
                                          const Cofunctor& from,
                                          const Cofunctor& to);

/// The functor between span apexes induced by a morphism of cofunctors.
Functor induced_apex_functor(const CofMorphism& m);

CofMorphism identity_cof_morphism(const Cofunctor& phi);
Result<CofMorphism> compose_cof_morphisms(const CofMorphism& second,
                                          const CofMorphism& first);

struct CoproductCof {
  Cofunctor cofunctor;  // source is the coproduct category
  CofMorphism inl;
  CofMorphism inr;
};
Result<CoproductCof> coproduct_cofunctors(const Cofunctor& phi,
                                          const Cofunctor& gamma);

/// Copairing against a cocone (h, k): the unique mediating morphism out of
/// the coproduct, validated before it is returned.
Result<CofMorphism> coproduct_cof_mediator(const CoproductCof& coproduct,
                                           const CofMorphism& h,
                                           const CofMorphism& k);

}  // namespace deltacat
