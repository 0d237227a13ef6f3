#pragma once

#include "deltacat/cofunctor.hpp"

namespace deltacat {

/// A delta lens: a Get functor together with a Put lifting operation whose
/// rows are keyed exactly like a cofunctor's and satisfy the lens laws.
/// The underlying object assignments of Get and Put agree by representation.
struct DeltaLens {
  Functor get;     // f : A -> B
  LiftTable puts;  // (a, u : f a -> b) -> morphism of A

  const FinCategory& source() const { return get.source; }
  const FinCategory& base() const { return get.target; }

  bool operator==(const DeltaLens&) const = default;
};

/// A morphism of delta lenses over a shared base: a morphism of the
/// underlying cofunctors whose carrier also pastes with the Gets.
struct LensMorphism {
  DeltaLens from;
  DeltaLens to;
  Functor carrier;

  bool operator==(const LensMorphism&) const = default;
};

CheckOutcome check_lens(const DeltaLens& raw);
Result<DeltaLens> validate_lens(DeltaLens raw);

Result<MorId> lens_get(const DeltaLens& lens, const MorId& w);
Result<MorId> lens_put(const DeltaLens& lens, const ObjId& a, const MorId& u);

/// Forgets the Get's morphism map; always a valid cofunctor.
Cofunctor underlying_cofunctor(const DeltaLens& lens);

CheckedValue<LensMorphism> check_lens_morphism(const Functor& carrier,
                                               const DeltaLens& from,
                                               const DeltaLens& to);
Result<LensMorphism> validate_lens_morphism(const Functor& carrier,
                                            const DeltaLens& from,
                                            const DeltaLens& to);

LensMorphism identity_lens_morphism(const DeltaLens& lens);
Result<LensMorphism> compose_lens_morphisms(const LensMorphism& second,
                                            const LensMorphism& first);

DeltaLens identity_lens(const FinCategory& base);

struct CoproductLens {
  DeltaLens lens;
  LensMorphism inl;
  LensMorphism inr;
};
Result<CoproductLens> coproduct_lenses(const DeltaLens& l1,
                                       const DeltaLens& l2);

Result<LensMorphism> coproduct_lens_mediator(const CoproductLens& coproduct,
                                             const LensMorphism& h,
                                             const LensMorphism& k);

}  // namespace deltacat
