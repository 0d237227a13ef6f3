#pragma once

#include "deltacat/cofree.hpp"

namespace deltacat::oracle {

/// Enumeration bounds on the input categories. Derived categories (the pair
/// category of a cofree lens) are not bounded separately.
struct EnumBounds {
  std::size_t max_objects = 3;
  std::size_t max_morphisms = 9;
};

/// All functors A -> B, by brute force over every raw object map and raw
/// morphism map, filtered through the functor laws. Lexicographic in the
/// (object_map, morphism_map) tables, duplicate-free.
Result<std::vector<Functor>> enumerate_functors(const FinCategory& a,
                                                const FinCategory& b,
                                                const EnumBounds& bounds = {});

/// All cofunctors A -/-> B: every object map paired with every lift table
/// whose rows pick a morphism out of the keyed object, filtered through the
/// cofunctor axioms.
Result<std::vector<Cofunctor>> enumerate_cofunctors(
    const FinCategory& a, const FinCategory& b, const EnumBounds& bounds = {});

/// All delta lenses whose underlying cofunctor is phi: every morphism map
/// extending phi's object map, filtered through the lens laws with
/// puts = lifts of phi.
Result<std::vector<DeltaLens>> enumerate_lenses_over(
    const Cofunctor& phi, const EnumBounds& bounds = {});

/// All coalgebra structure maps on phi: every functor from phi's source to
/// the pair category, filtered through the morphism-of-cofunctors conditions
/// and both coalgebra laws.
Result<std::vector<Coalgebra>> enumerate_coalgebras(
    const Cofunctor& phi, const EnumBounds& bounds = {});

}  // namespace deltacat::oracle
