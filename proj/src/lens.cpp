#include "deltacat/lens.hpp"

namespace deltacat {

using detail::cat;

namespace {

std::string row_str(const ObjId& a, const MorId& u) {
  return cat("(at=", a, ", over=", u, ")");
}

}  // namespace

CheckOutcome check_lens(const DeltaLens& raw) {
  CheckOutcome out;

  auto get_outcome = check_functor(raw.get);
  if (get_outcome.shape_error) {
    out.shape_error = get_outcome.shape_error;
    return out;
  }
  LawCheck get_law{"get-functoriality", ErrCode::not_a_functor, 0, {}};
  for (const auto& law : get_outcome.laws) {
    get_law.domain += law.domain;
    get_law.witnesses.insert(get_law.witnesses.end(), law.witnesses.begin(),
                             law.witnesses.end());
  }

  const FinCategory& a_cat = raw.source();
  const FinCategory& b_cat = raw.base();

  for (const auto& [key, chosen] : raw.puts) {
    const auto& [a, u] = key;
    if (!a_cat.has_object(a) || !b_cat.has_morphism(u) ||
        !a_cat.has_morphism(chosen)) {
      out.shape_error = Error{ErrCode::malformed_input,
                              "put entry names unknown identifiers",
                              row_str(a, u)};
      return out;
    }
    if (b_cat.src_of(u) != raw.get.on_object(a)) {
      out.shape_error = Error{
          ErrCode::malformed_input,
          "put entry is not applicable: src(over) differs from the object's image",
          row_str(a, u)};
      return out;
    }
  }

  LawCheck coverage{"put-coverage", ErrCode::lift_missing, 0, {}};
  for (const auto& a : a_cat.objects) {
    for (const auto& u : b_cat.morphisms) {
      if (b_cat.src_of(u) != raw.get.on_object(a)) continue;
      ++coverage.domain;
      if (!raw.puts.count({a, u})) coverage.witnesses.push_back(row_str(a, u));
    }
  }

  bool get_ok = get_law.passed();

  LawCheck ax1{"put-get", ErrCode::law_violation, 0, {}};
  for (const auto& [key, w] : raw.puts) {
    const auto& [a, u] = key;
    ++ax1.domain;
    if (a_cat.src_of(w) != a) {
      ax1.witnesses.push_back(cat(row_str(a, u), ": put ", w, " has source ",
                                  a_cat.src_of(w), ", expected ", a));
      continue;
    }
    if (!get_ok) continue;
    if (raw.get.on_morphism(w) != u) {
      ax1.witnesses.push_back(cat(row_str(a, u), ": f(", w, ") = ",
                                  raw.get.on_morphism(w), " != ", u));
    }
  }

  LawCheck ax2{"put-identity", ErrCode::law_violation, 0, {}};
  for (const auto& a : a_cat.objects) {
    ++ax2.domain;
    auto it = raw.puts.find({a, b_cat.id_of(raw.get.on_object(a))});
    if (it == raw.puts.end()) continue;
    if (it->second != a_cat.id_of(a)) {
      ax2.witnesses.push_back(cat("put(", a, ", id) = ", it->second,
                                  ", expected ", a_cat.id_of(a)));
    }
  }

  LawCheck ax3{"put-composition", ErrCode::law_violation, 0, {}};
  for (const auto& a : a_cat.objects) {
    for (const auto& u : b_cat.morphisms) {
      if (b_cat.src_of(u) != raw.get.on_object(a)) continue;
      for (const auto& v : b_cat.morphisms) {
        if (!b_cat.composable(v, u)) continue;
        ++ax3.domain;
        auto first = raw.puts.find({a, u});
        if (first == raw.puts.end()) continue;
        const auto& w1 = first->second;
        if (a_cat.src_of(w1) != a) continue;
        const ObjId& mid = a_cat.tgt_of(w1);
        auto second = raw.puts.find({mid, v});
        auto whole = raw.puts.find({a, b_cat.comp(v, u)});
        if (second == raw.puts.end() || whole == raw.puts.end()) continue;
        const auto& w2 = second->second;
        if (!a_cat.composable(w2, w1)) {
          ax3.witnesses.push_back(cat("(at=", a, ", u=", u, ", v=", v,
                                      "): puts ", w1, ", ", w2,
                                      " are not composable"));
          continue;
        }
        if (whole->second != a_cat.comp(w2, w1)) {
          ax3.witnesses.push_back(
              cat("(at=", a, ", u=", u, ", v=", v, "): put of composite is ",
                  whole->second, ", expected ", a_cat.comp(w2, w1)));
        }
      }
    }
  }

  out.laws = {get_law, coverage, ax1, ax2, ax3};
  return out;
}

Result<DeltaLens> validate_lens(DeltaLens raw) {
  auto outcome = check_lens(raw);
  if (auto err = outcome.first_error()) return *err;
  return raw;
}

Result<MorId> lens_get(const DeltaLens& lens, const MorId& w) {
  if (!lens.source().has_morphism(w))
    return Error{ErrCode::unknown_morphism, "no such source morphism", w};
  return lens.get.on_morphism(w);
}

Result<MorId> lens_put(const DeltaLens& lens, const ObjId& a, const MorId& u) {
  if (!lens.source().has_object(a))
    return Error{ErrCode::unknown_object, "no such source object", a};
  if (!lens.base().has_morphism(u))
    return Error{ErrCode::unknown_morphism, "no such base morphism", u};
  if (lens.base().src_of(u) != lens.get.on_object(a)) {
    return Error{ErrCode::not_applicable,
                 "src(u) differs from the image of the object",
                 row_str(a, u)};
  }
  return lens.puts.at({a, u});
}

Cofunctor underlying_cofunctor(const DeltaLens& lens) {
  return Cofunctor{lens.source(), lens.base(), lens.get.object_map, lens.puts};
}

CheckedValue<LensMorphism> check_lens_morphism(const Functor& carrier,
                                               const DeltaLens& from,
                                               const DeltaLens& to) {
  CheckedValue<LensMorphism> out;
  auto cof = check_cof_morphism(carrier, underlying_cofunctor(from),
                                underlying_cofunctor(to));
  out.outcome = cof.outcome;
  if (!out.outcome.ok()) return out;

  // The pasting condition: the Gets must agree through the carrier.
  LawCheck pasting{"get-pasting", ErrCode::get_not_preserved, 0, {}};
  auto composite = compose_functors(to.get, carrier);
  pasting.domain =
      from.source().objects.size() + from.source().morphisms.size();
  if (!composite.ok()) {
    pasting.witnesses.push_back("gets are not composable with the carrier");
  } else {
    for (const auto& a : from.source().objects) {
      if (composite.value().on_object(a) != from.get.on_object(a)) {
        pasting.witnesses.push_back(
            cat("object ", a, ": g(h(", a, ")) = ",
                composite.value().on_object(a), " != ", from.get.on_object(a)));
      }
    }
    for (const auto& w : from.source().morphisms) {
      if (composite.value().on_morphism(w) != from.get.on_morphism(w)) {
        pasting.witnesses.push_back(
            cat("morphism ", w, ": g(h(", w, ")) = ",
                composite.value().on_morphism(w), " != ",
                from.get.on_morphism(w)));
      }
    }
  }
  out.outcome.laws.push_back(pasting);
  if (out.outcome.ok()) out.value = LensMorphism{from, to, carrier};
  return out;
}

Result<LensMorphism> validate_lens_morphism(const Functor& carrier,
                                            const DeltaLens& from,
                                            const DeltaLens& to) {
  auto checked = check_lens_morphism(carrier, from, to);
  if (checked.value) return std::move(*checked.value);
  return *checked.outcome.first_error();
}

LensMorphism identity_lens_morphism(const DeltaLens& lens) {
  return LensMorphism{lens, lens, identity_functor(lens.source())};
}

Result<LensMorphism> compose_lens_morphisms(const LensMorphism& second,
                                            const LensMorphism& first) {
  if (!(first.to == second.from)) {
    return Error{ErrCode::boundary_mismatch,
                 "lens morphisms are not composable"};
  }
  auto carrier = compose_functors(second.carrier, first.carrier);
  if (!carrier.ok()) return carrier.error();
  return LensMorphism{first.from, second.to, std::move(carrier).take()};
}

DeltaLens identity_lens(const FinCategory& base) {
  Cofunctor phi = identity_cofunctor(base);
  return DeltaLens{identity_functor(base), phi.lifts};
}

Result<CoproductLens> coproduct_lenses(const DeltaLens& l1,
                                       const DeltaLens& l2) {
  auto cof = coproduct_cofunctors(underlying_cofunctor(l1),
                                  underlying_cofunctor(l2));
  if (!cof.ok()) return cof.error();
  const CoproductCof& sum = cof.value();

  // Copair the Gets over the coproduct of the sources.
  Functor get{sum.cofunctor.source, l1.base(), sum.cofunctor.object_map, {}};
  for (const auto& [w, cw] : sum.inl.carrier.morphism_map)
    get.morphism_map[cw] = l1.get.on_morphism(w);
  for (const auto& [w, cw] : sum.inr.carrier.morphism_map)
    get.morphism_map[cw] = l2.get.on_morphism(w);

  CoproductLens out{DeltaLens{std::move(get), sum.cofunctor.lifts}, {}, {}};
  out.inl = LensMorphism{l1, out.lens, sum.inl.carrier};
  out.inr = LensMorphism{l2, out.lens, sum.inr.carrier};
  return out;
}

Result<LensMorphism> coproduct_lens_mediator(const CoproductLens& coproduct,
                                             const LensMorphism& h,
                                             const LensMorphism& k) {
  auto cof_sum = coproduct_cofunctors(underlying_cofunctor(h.from),
                                      underlying_cofunctor(k.from));
  if (!cof_sum.ok()) return cof_sum.error();
  auto mediator = coproduct_cof_mediator(
      cof_sum.value(),
      CofMorphism{underlying_cofunctor(h.from), underlying_cofunctor(h.to),
                  h.carrier},
      CofMorphism{underlying_cofunctor(k.from), underlying_cofunctor(k.to),
                  k.carrier});
  if (!mediator.ok()) return mediator.error();
  return validate_lens_morphism(mediator.value().carrier, coproduct.lens,
                                h.to);
}

}  // namespace deltacat
