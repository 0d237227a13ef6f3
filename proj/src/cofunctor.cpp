#include "deltacat/cofunctor.hpp"

#include <algorithm>

namespace deltacat {

using detail::cat;

namespace {

std::string row_str(const ObjId& a, const MorId& u) {
  return cat("(at=", a, ", over=", u, ")");
}

}  // namespace

CheckOutcome check_cofunctor(const Cofunctor& raw) {
  CheckOutcome out;

  for (const auto& a : raw.source.objects) {
    if (!raw.object_map.count(a)) {
      out.shape_error = Error{ErrCode::malformed_input,
                              "object_map is missing a source object", a};
      return out;
    }
  }
  for (const auto& [a, b] : raw.object_map) {
    if (!raw.source.has_object(a)) {
      out.shape_error = Error{ErrCode::unknown_object,
                              "object_map key is not a source object", a};
      return out;
    }
    if (!raw.base.has_object(b)) {
      out.shape_error = Error{ErrCode::unknown_object,
                              "object_map value is not a base object", b};
      return out;
    }
  }
  for (const auto& [key, chosen] : raw.lifts) {
    const auto& [a, u] = key;
    if (!raw.source.has_object(a) || !raw.base.has_morphism(u) ||
        !raw.source.has_morphism(chosen)) {
      out.shape_error = Error{ErrCode::malformed_input,
                              "lift entry names unknown identifiers",
                              row_str(a, u)};
      return out;
    }
    if (raw.base.src_of(u) != raw.on_object(a)) {
      out.shape_error = Error{
          ErrCode::malformed_input,
          "lift entry is not applicable: src(over) differs from the object's image",
          row_str(a, u)};
      return out;
    }
  }

  LawCheck coverage{"lift-coverage", ErrCode::lift_missing, 0, {}};
  for (const auto& a : raw.source.objects) {
    for (const auto& u : raw.base.morphisms) {
      if (raw.base.src_of(u) != raw.on_object(a)) continue;
      ++coverage.domain;
      if (!raw.lifts.count({a, u}))
        coverage.witnesses.push_back(row_str(a, u));
    }
  }

  LawCheck ax1{"lift-boundaries", ErrCode::law_violation, 0, {}};
  for (const auto& [key, w] : raw.lifts) {
    const auto& [a, u] = key;
    ++ax1.domain;
    if (raw.source.src_of(w) != a) {
      ax1.witnesses.push_back(
          cat(row_str(a, u), ": chosen ", w, " has source ",
              raw.source.src_of(w), ", expected ", a));
      continue;
    }
    if (raw.on_object(raw.source.tgt_of(w)) != raw.base.tgt_of(u)) {
      ax1.witnesses.push_back(
          cat(row_str(a, u), ": image of tgt(", w, ") is ",
              raw.on_object(raw.source.tgt_of(w)), ", expected ",
              raw.base.tgt_of(u)));
    }
  }

  LawCheck ax2{"lift-identities", ErrCode::law_violation, 0, {}};
  for (const auto& a : raw.source.objects) {
    ++ax2.domain;
    auto it = raw.lifts.find({a, raw.base.id_of(raw.on_object(a))});
    if (it == raw.lifts.end()) continue;  // coverage witnesses this
    if (it->second != raw.source.id_of(a)) {
      ax2.witnesses.push_back(
          cat("lift(", a, ", id) = ", it->second, ", expected ",
              raw.source.id_of(a)));
    }
  }

  LawCheck ax3{"lift-composition", ErrCode::law_violation, 0, {}};
  for (const auto& a : raw.source.objects) {
    for (const auto& u : raw.base.morphisms) {
      if (raw.base.src_of(u) != raw.on_object(a)) continue;
      for (const auto& v : raw.base.morphisms) {
        if (!raw.base.composable(v, u)) continue;
        ++ax3.domain;
        auto first = raw.lifts.find({a, u});
        if (first == raw.lifts.end()) continue;
        const auto& w1 = first->second;
        if (raw.source.src_of(w1) != a) continue;  // boundary suite owns this
        const ObjId& mid = raw.source.tgt_of(w1);
        auto second = raw.lifts.find({mid, v});
        auto whole = raw.lifts.find({a, raw.base.comp(v, u)});
        if (second == raw.lifts.end() || whole == raw.lifts.end()) continue;
        const auto& w2 = second->second;
        if (!raw.source.composable(w2, w1)) {
          ax3.witnesses.push_back(
              cat("(at=", a, ", u=", u, ", v=", v, "): lifts ", w1, ", ", w2,
                  " are not composable"));
          continue;
        }
        if (whole->second != raw.source.comp(w2, w1)) {
          ax3.witnesses.push_back(
              cat("(at=", a, ", u=", u, ", v=", v, "): lift of composite is ",
                  whole->second, ", expected ", raw.source.comp(w2, w1)));
        }
      }
    }
  }

  out.laws = {coverage, ax1, ax2, ax3};
  return out;
}

Result<Cofunctor> validate_cofunctor(Cofunctor raw) {
  auto outcome = check_cofunctor(raw);
  if (auto err = outcome.first_error()) return *err;
  return raw;
}

Result<MorId> lift(const Cofunctor& phi, const ObjId& a, const MorId& u) {
  if (!phi.source.has_object(a))
    return Error{ErrCode::unknown_object, "no such source object", a};
  if (!phi.base.has_morphism(u))
    return Error{ErrCode::unknown_morphism, "no such base morphism", u};
  if (phi.base.src_of(u) != phi.on_object(a)) {
    return Error{ErrCode::not_applicable,
                 "src(u) differs from the image of the object",
                 row_str(a, u)};
  }
  return phi.lifts.at({a, u});
}

CofSpan to_span(const Cofunctor& phi) {
  CofSpan s;
  FinCategory& x = s.apex;
  x.objects = phi.source.objects;
  std::map<MorId, MorId> to_source;  // apex morphism -> chosen lift
  std::map<MorId, MorId> to_base;    // apex morphism -> base morphism

  for (const auto& [key, w] : phi.lifts) {
    const auto& [a, u] = key;
    MorId m = pair_name(w, u);
    x.morphisms.push_back(m);
    x.src[m] = a;
    x.tgt[m] = phi.source.tgt_of(w);
    to_source[m] = w;
    to_base[m] = u;
  }
  std::sort(x.morphisms.begin(), x.morphisms.end());
  for (const auto& a : x.objects) {
    x.identity[a] =
        pair_name(phi.source.id_of(a), phi.base.id_of(phi.on_object(a)));
  }
  for (const auto& m2 : x.morphisms) {
    for (const auto& m1 : x.morphisms) {
      if (!x.composable(m2, m1)) continue;
      x.table[{m2, m1}] =
          pair_name(phi.source.comp(to_source[m2], to_source[m1]),
                    phi.base.comp(to_base[m2], to_base[m1]));
    }
  }

  std::map<ObjId, ObjId> left_obj, right_obj;
  for (const auto& a : x.objects) {
    left_obj[a] = a;
    right_obj[a] = phi.on_object(a);
  }
  s.left = Functor{x, phi.source, left_obj, to_source};
  s.right = Functor{x, phi.base, right_obj, to_base};
  return s;
}

Result<Cofunctor> from_span(const CofSpan& span) {
  if (span.left.source != span.apex || span.right.source != span.apex) {
    return Error{ErrCode::boundary_mismatch,
                 "span legs must share the apex as source"};
  }
  if (auto err = check_functor(span.left).first_error()) return *err;
  if (auto err = check_functor(span.right).first_error()) return *err;
  if (!is_bijective_on_objects(span.left)) {
    return Error{ErrCode::not_boo, "left leg is not bijective-on-objects"};
  }
  if (!is_discrete_opfibration(span.right)) {
    return Error{ErrCode::not_dopf, "right leg is not a discrete opfibration"};
  }

  std::map<ObjId, ObjId> inverse;  // A object -> apex object
  for (const auto& [x, a] : span.left.object_map) inverse[a] = x;

  Cofunctor phi;
  phi.source = span.left.target;
  phi.base = span.right.target;
  for (const auto& a : phi.source.objects)
    phi.object_map[a] = span.right.on_object(inverse.at(a));

  for (const auto& a : phi.source.objects) {
    const ObjId& x = inverse.at(a);
    for (const auto& u : phi.base.morphisms) {
      if (phi.base.src_of(u) != phi.on_object(a)) continue;
      // The unique right-leg lift of u with source x.
      for (const auto& m : span.apex.morphisms) {
        if (span.apex.src_of(m) == x && span.right.on_morphism(m) == u) {
          phi.lifts[{a, u}] = span.left.on_morphism(m);
          break;
        }
      }
    }
  }
  return phi;
}

Cofunctor identity_cofunctor(const FinCategory& base) {
  Cofunctor phi;
  phi.source = base;
  phi.base = base;
  for (const auto& b : base.objects) phi.object_map[b] = b;
  for (const auto& b : base.objects) {
    for (const auto& u : base.morphisms) {
      if (base.src_of(u) == b) phi.lifts[{b, u}] = u;
    }
  }
  return phi;
}

CheckedValue<CofMorphism> check_cof_morphism(const Functor& carrier,
                                             const Cofunctor& from,
                                             const Cofunctor& to) {
  CheckedValue<CofMorphism> out;
  if (from.base != to.base) {
    out.outcome.shape_error = Error{ErrCode::boundary_mismatch,
                                    "cofunctors do not share a base"};
    return out;
  }
  if (carrier.source != from.source || carrier.target != to.source) {
    out.outcome.shape_error =
        Error{ErrCode::boundary_mismatch,
              "carrier does not run between the source categories"};
    return out;
  }

  auto functor_outcome = check_functor(carrier);
  if (functor_outcome.shape_error) {
    out.outcome.shape_error = functor_outcome.shape_error;
    return out;
  }
  LawCheck functoriality{"carrier-functoriality", ErrCode::not_a_functor, 0, {}};
  for (const auto& law : functor_outcome.laws) {
    functoriality.domain += law.domain;
    functoriality.witnesses.insert(functoriality.witnesses.end(),
                                   law.witnesses.begin(), law.witnesses.end());
  }

  LawCheck objects{"object-map-agreement", ErrCode::object_map_mismatch, 0, {}};
  for (const auto& a : from.source.objects) {
    ++objects.domain;
    if (to.on_object(carrier.on_object(a)) != from.on_object(a)) {
      objects.witnesses.push_back(
          cat(a, ": image ", to.on_object(carrier.on_object(a)),
              " differs from ", from.on_object(a)));
    }
  }

  LawCheck lifts{"lift-preservation", ErrCode::lift_not_preserved, 0, {}};
  bool lifts_queryable = functoriality.passed() && objects.passed();
  for (const auto& [key, w] : from.lifts) {
    const auto& [a, u] = key;
    ++lifts.domain;
    if (!lifts_queryable) continue;
    auto it = to.lifts.find({carrier.on_object(a), u});
    if (it == to.lifts.end()) {
      lifts.witnesses.push_back(
          cat(row_str(a, u), ": codomain has no lift at the image object"));
      continue;
    }
    if (carrier.on_morphism(w) != it->second) {
      lifts.witnesses.push_back(
          cat(row_str(a, u), ": h(", w, ") = ", carrier.on_morphism(w),
              " != ", it->second));
    }
  }

  // The apex functor is uniquely induced; the commuting diagram it sits in is
  // asserted rather than assumed.
  LawCheck apex{"induced-apex-square", ErrCode::law_violation, 0, {}};
  if (functoriality.passed() && objects.passed() && lifts.passed()) {
    CofMorphism m{from, to, carrier};
    Functor bar = induced_apex_functor(m);
    apex.domain = bar.source.morphisms.size() + bar.source.objects.size();
    auto from_span_ = to_span(from);
    auto to_span_ = to_span(to);
    if (!check_functor(bar).ok()) {
      apex.witnesses.push_back("induced apex map is not a functor");
    } else {
      auto left1 = compose_functors(to_span_.left, bar);
      auto left2 = compose_functors(carrier, from_span_.left);
      auto right1 = compose_functors(to_span_.right, bar);
      if (!left1.ok() || !left2.ok() || !right1.ok() ||
          !(left1.value() == left2.value()) ||
          !(right1.value() == from_span_.right)) {
        apex.witnesses.push_back("apex square does not commute");
      }
    }
  }

  out.outcome.laws = {functoriality, objects, lifts, apex};
  if (out.outcome.ok()) out.value = CofMorphism{from, to, carrier};
  return out;
}

Result<CofMorphism> validate_cof_morphism(const Functor& carrier,
                                          const Cofunctor& from,
                                          const Cofunctor& to) {
  auto checked = check_cof_morphism(carrier, from, to);
  if (checked.value) return std::move(*checked.value);
  return *checked.outcome.first_error();
}

Functor induced_apex_functor(const CofMorphism& m) {
  CofSpan from_span_ = to_span(m.from);
  CofSpan to_span_ = to_span(m.to);
  Functor bar{from_span_.apex, to_span_.apex, {}, {}};
  for (const auto& a : from_span_.apex.objects)
    bar.object_map[a] = m.carrier.on_object(a);
  for (const auto& x : from_span_.apex.morphisms) {
    bar.morphism_map[x] = pair_name(
        m.carrier.on_morphism(from_span_.left.on_morphism(x)),
        from_span_.right.on_morphism(x));
  }
  return bar;
}

CofMorphism identity_cof_morphism(const Cofunctor& phi) {
  return CofMorphism{phi, phi, identity_functor(phi.source)};
}

Result<CofMorphism> compose_cof_morphisms(const CofMorphism& second,
                                          const CofMorphism& first) {
  if (!(first.to == second.from)) {
    return Error{ErrCode::boundary_mismatch,
                 "cofunctor morphisms are not composable"};
  }
  auto carrier = compose_functors(second.carrier, first.carrier);
  if (!carrier.ok()) return carrier.error();
  return CofMorphism{first.from, second.to, std::move(carrier).take()};
}

Result<CoproductCof> coproduct_cofunctors(const Cofunctor& phi,
                                          const Cofunctor& gamma) {
  if (phi.base != gamma.base) {
    return Error{ErrCode::boundary_mismatch,
                 "coproduct requires a shared base"};
  }
  CoproductCat cats = coproduct_cat(phi.source, gamma.source);
  Cofunctor sum;
  sum.source = cats.cat;
  sum.base = phi.base;
  for (const auto& [a, b] : phi.object_map)
    sum.object_map[cats.inl.on_object(a)] = b;
  for (const auto& [c, b] : gamma.object_map)
    sum.object_map[cats.inr.on_object(c)] = b;
  for (const auto& [key, w] : phi.lifts)
    sum.lifts[{cats.inl.on_object(key.first), key.second}] =
        cats.inl.on_morphism(w);
  for (const auto& [key, w] : gamma.lifts)
    sum.lifts[{cats.inr.on_object(key.first), key.second}] =
        cats.inr.on_morphism(w);

  CoproductCof out{std::move(sum), {}, {}};
  out.inl = CofMorphism{phi, out.cofunctor, cats.inl};
  out.inr = CofMorphism{gamma, out.cofunctor, cats.inr};
  return out;
}

Result<CofMorphism> coproduct_cof_mediator(const CoproductCof& coproduct,
                                           const CofMorphism& h,
                                           const CofMorphism& k) {
  if (!(h.from == coproduct.inl.from) || !(k.from == coproduct.inr.from)) {
    return Error{ErrCode::boundary_mismatch,
                 "cocone legs do not match the coproduct summands"};
  }
  if (!(h.to == k.to)) {
    return Error{ErrCode::boundary_mismatch,
                 "cocone legs do not share a codomain"};
  }
  Functor m{coproduct.cofunctor.source, h.to.source, {}, {}};
  for (const auto& [a, ca] : coproduct.inl.carrier.object_map)
    m.object_map[ca] = h.carrier.on_object(a);
  for (const auto& [c, cc] : coproduct.inr.carrier.object_map)
    m.object_map[cc] = k.carrier.on_object(c);
  for (const auto& [w, cw] : coproduct.inl.carrier.morphism_map)
    m.morphism_map[cw] = h.carrier.on_morphism(w);
  for (const auto& [w, cw] : coproduct.inr.carrier.morphism_map)
    m.morphism_map[cw] = k.carrier.on_morphism(w);
  return validate_cof_morphism(m, coproduct.cofunctor, h.to);
}

}  // namespace deltacat
