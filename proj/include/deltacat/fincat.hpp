#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "deltacat/error.hpp"

namespace deltacat {

using ObjId = std::string;
using MorId = std::string;

// Composition key (g, f) stands for "g after f".
using ComposeKey = std::pair<MorId, MorId>;

struct MorDecl {
  MorId name;
  ObjId src;
  ObjId tgt;
};

// Unchecked category description, as read from a file or built by hand.
// Identities are implicit: they are synthesized as "id_<object>" during
// validation, and declared morphism names may not use the "id_" prefix.
struct RawCategory {
  std::vector<ObjId> objects;
  std::vector<MorDecl> morphisms;
  std::vector<std::array<MorId, 3>> compose;  // [f, g, g_after_f]
};

/// A finite category with total source/target/identity/composition tables.
/// Values are immutable after validation; every operation on them is pure.
struct FinCategory {
  std::vector<ObjId> objects;    // sorted
  std::vector<MorId> morphisms;  // sorted, identities included
  std::map<MorId, ObjId> src;
  std::map<MorId, ObjId> tgt;
  std::map<ObjId, MorId> identity;
  std::map<ComposeKey, MorId> table;  // total on composable pairs

  bool has_object(const ObjId& o) const;
  bool has_morphism(const MorId& m) const;
  const ObjId& src_of(const MorId& m) const;
  const ObjId& tgt_of(const MorId& m) const;
  const MorId& id_of(const ObjId& o) const;
  bool is_identity(const MorId& m) const;
  bool composable(const MorId& g, const MorId& f) const;
  const MorId& comp(const MorId& g, const MorId& f) const;  // must be composable
  std::vector<MorId> morphisms_from(const ObjId& o) const;
  std::vector<MorId> hom(const ObjId& a, const ObjId& b) const;

  bool operator==(const FinCategory&) const = default;
};

struct Functor {
  FinCategory source;
  FinCategory target;
  std::map<ObjId, ObjId> object_map;
  std::map<MorId, MorId> morphism_map;

  const ObjId& on_object(const ObjId& o) const { return object_map.at(o); }
  const MorId& on_morphism(const MorId& m) const { return morphism_map.at(m); }

  bool operator==(const Functor&) const = default;
};

// Canonical names for constructed categories. Structural equality of
// constructions is name equality, so these are part of the contract.
std::string pair_name(const std::string& x, const std::string& y);
std::string codiscrete_arrow_name(const ObjId& a, const ObjId& b);
inline constexpr const char* kIdentityPrefix = "id_";
inline constexpr const char* kInlPrefix = "inl.";
inline constexpr const char* kInrPrefix = "inr.";

CheckedValue<FinCategory> check_category(const RawCategory& raw);
Result<FinCategory> validate_category(const RawCategory& raw);

Result<MorId> compose(const FinCategory& c, const MorId& g, const MorId& f);

CheckOutcome check_functor(const Functor& f);
Result<Functor> validate_functor(Functor f);

Functor identity_functor(const FinCategory& c);
Result<Functor> compose_functors(const Functor& g, const Functor& f);

bool is_bijective_on_objects(const Functor& f);
bool is_discrete_opfibration(const Functor& f);

/// Codiscrete category on a set of objects: exactly one morphism between
/// every ordered pair, named "<src>~><tgt>".
FinCategory codiscrete_category(const std::vector<ObjId>& objects);

struct CodiscreteUnit {
  FinCategory codiscrete;
  Functor unit;  // identity on objects, collapses each hom-set
};
CodiscreteUnit codiscrete_unit(const FinCategory& c);

/// The codiscrete functor induced by a plain object map.
Functor codiscrete_functor(const FinCategory& from_codiscrete,
                           const FinCategory& to_codiscrete,
                           const std::map<ObjId, ObjId>& object_map);

struct Pullback {
  FinCategory apex;       // objects "(a,b)", morphisms "(w,u)"
  Functor to_left;        // apex -> F.source
  Functor to_right;       // apex -> G.source
};
Result<Pullback> pullback(const Functor& f, const Functor& g);

/// Mediating functor into a pullback from a candidate cone, checked against
/// the universal property.
Result<Functor> pullback_mediator(const Pullback& pb, const Functor& cone_left,
                                  const Functor& cone_right);

struct CoproductCat {
  FinCategory cat;  // objects/morphisms prefixed "inl." / "inr."
  Functor inl;
  Functor inr;
};
CoproductCat coproduct_cat(const FinCategory& a, const FinCategory& b);

/// Rebuild a category along bijective renamings of its objects and morphisms.
FinCategory rename_category(const FinCategory& c,
                            const std::map<ObjId, ObjId>& object_names,
                            const std::map<MorId, MorId>& morphism_names);

}  // namespace deltacat
