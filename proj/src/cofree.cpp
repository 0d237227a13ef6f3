#include "deltacat/cofree.hpp"

#include <algorithm>

namespace deltacat {

using detail::cat;

CofreeLens cofree_lens(const Cofunctor& phi) {
  const FinCategory& a_cat = phi.source;
  const FinCategory& b_cat = phi.base;

  CofreeLens out;
  out.cofunctor = phi;
  FinCategory p;
  std::map<MorId, MorId> to_source;  // pair morphism -> A component
  std::map<MorId, MorId> to_base;    // pair morphism -> B component

  p.objects = a_cat.objects;
  for (const auto& w : a_cat.morphisms) {
    for (const auto& u : b_cat.morphisms) {
      if (phi.on_object(a_cat.src_of(w)) != b_cat.src_of(u)) continue;
      if (phi.on_object(a_cat.tgt_of(w)) != b_cat.tgt_of(u)) continue;
      MorId m = pair_name(w, u);
      p.morphisms.push_back(m);
      p.src[m] = a_cat.src_of(w);
      p.tgt[m] = a_cat.tgt_of(w);
      to_source[m] = w;
      to_base[m] = u;
    }
  }
  std::sort(p.morphisms.begin(), p.morphisms.end());
  for (const auto& a : p.objects)
    p.identity[a] = pair_name(a_cat.id_of(a), b_cat.id_of(phi.on_object(a)));
  for (const auto& m2 : p.morphisms) {
    for (const auto& m1 : p.morphisms) {
      if (!p.composable(m2, m1)) continue;
      p.table[{m2, m1}] = pair_name(a_cat.comp(to_source[m2], to_source[m1]),
                                    b_cat.comp(to_base[m2], to_base[m1]));
    }
  }

  std::map<ObjId, ObjId> obj_id_map;
  for (const auto& a : p.objects) obj_id_map[a] = a;

  out.proj_source = Functor{p, a_cat, obj_id_map, to_source};

  Functor proj_base{p, b_cat, phi.object_map, to_base};
  LiftTable puts;
  for (const auto& [key, w] : phi.lifts)
    puts[key] = pair_name(w, key.second);
  out.lens = DeltaLens{std::move(proj_base), std::move(puts)};
  return out;
}

CofreeLens cofree_lens_via_pullback(const Cofunctor& phi) {
  CodiscreteUnit unit_a = codiscrete_unit(phi.source);
  CodiscreteUnit unit_b = codiscrete_unit(phi.base);
  Functor phi_hat = codiscrete_functor(unit_a.codiscrete, unit_b.codiscrete,
                                       phi.object_map);
  auto left = compose_functors(phi_hat, unit_a.unit);
  auto pb = pullback(left.value(), unit_b.unit);

  // Rename the pair-named objects back to A's: "(a, phi a)" becomes a.
  const Pullback& raw = pb.value();
  std::map<ObjId, ObjId> obj_names;
  std::map<MorId, MorId> mor_names;
  for (const auto& o : raw.apex.objects)
    obj_names[o] = raw.to_left.on_object(o);
  for (const auto& m : raw.apex.morphisms) mor_names[m] = m;
  FinCategory p = rename_category(raw.apex, obj_names, mor_names);

  auto renamed = [&](const Functor& f) {
    Functor out{p, f.target, {}, {}};
    for (const auto& [o, v] : f.object_map) out.object_map[obj_names.at(o)] = v;
    out.morphism_map = f.morphism_map;
    return out;
  };

  CofreeLens out;
  out.cofunctor = phi;
  out.proj_source = renamed(raw.to_left);
  LiftTable puts;
  for (const auto& [key, w] : phi.lifts)
    puts[key] = pair_name(w, key.second);
  out.lens = DeltaLens{renamed(raw.to_right), std::move(puts)};
  return out;
}

Functor span_embedding(const Cofunctor& phi) {
  CofSpan span = to_span(phi);
  CofreeLens cofree = cofree_lens(phi);
  Functor embed{span.apex, cofree.apex(), {}, {}};
  for (const auto& a : span.apex.objects) embed.object_map[a] = a;
  for (const auto& m : span.apex.morphisms) embed.morphism_map[m] = m;
  return embed;
}

LensMorphism cofree_on_morphism(const CofMorphism& m) {
  CofreeLens from = cofree_lens(m.from);
  CofreeLens to = cofree_lens(m.to);
  Functor carrier{from.apex(), to.apex(), {}, {}};
  for (const auto& a : from.apex().objects)
    carrier.object_map[a] = m.carrier.on_object(a);
  for (const auto& p : from.apex().morphisms) {
    carrier.morphism_map[p] =
        pair_name(m.carrier.on_morphism(from.proj_source.on_morphism(p)),
                  from.lens.get.on_morphism(p));
  }
  return LensMorphism{from.lens, to.lens, std::move(carrier)};
}

CofMorphism lr_on_morphism(const CofMorphism& m) {
  LensMorphism r = cofree_on_morphism(m);
  return CofMorphism{underlying_cofunctor(r.from), underlying_cofunctor(r.to),
                     r.carrier};
}

CofMorphism counit(const Cofunctor& phi) {
  CofreeLens cofree = cofree_lens(phi);
  return CofMorphism{underlying_cofunctor(cofree.lens), phi,
                     cofree.proj_source};
}

LensMorphism unit(const DeltaLens& lens) {
  CofreeLens cofree = cofree_lens(underlying_cofunctor(lens));
  Functor carrier{lens.source(), cofree.apex(), {}, {}};
  for (const auto& a : lens.source().objects) carrier.object_map[a] = a;
  for (const auto& w : lens.source().morphisms)
    carrier.morphism_map[w] = pair_name(w, lens.get.on_morphism(w));
  return LensMorphism{lens, cofree.lens, std::move(carrier)};
}

CofMorphism comultiplication(const Cofunctor& phi) {
  CofreeLens cofree = cofree_lens(phi);
  LensMorphism u = unit(cofree.lens);
  return CofMorphism{underlying_cofunctor(u.from), underlying_cofunctor(u.to),
                     u.carrier};
}

namespace {

std::optional<std::string> functor_difference(const Functor& got,
                                              const Functor& want) {
  if (got == want) return std::nullopt;
  for (const auto& [o, v] : want.object_map) {
    auto it = got.object_map.find(o);
    if (it == got.object_map.end() || it->second != v)
      return cat("object ", o);
  }
  for (const auto& [m, v] : want.morphism_map) {
    auto it = got.morphism_map.find(m);
    if (it == got.morphism_map.end() || it->second != v)
      return cat("morphism ", m, ": ",
                 it == got.morphism_map.end() ? "missing" : it->second,
                 " != ", v);
  }
  return "functors differ in their boundary categories";
}

}  // namespace

std::optional<Error> check_lens_triangle(const DeltaLens& lens,
                                         const Functor& unit_carrier) {
  CofreeLens cofree = cofree_lens(underlying_cofunctor(lens));
  auto composite = compose_functors(cofree.proj_source, unit_carrier);
  if (!composite.ok()) {
    return Error{ErrCode::triangle_violation,
                 "unit carrier does not land in the pair category"};
  }
  if (auto diff =
          functor_difference(composite.value(), identity_functor(lens.source()))) {
    return Error{ErrCode::triangle_violation,
                 "counit after unit is not the identity on the source", *diff};
  }
  return std::nullopt;
}

std::optional<Error> check_cofunctor_triangle(const Cofunctor& phi,
                                              const Functor& unit_carrier) {
  CofreeLens cofree = cofree_lens(phi);
  LensMorphism r_of_counit = cofree_on_morphism(counit(phi));
  auto composite = compose_functors(r_of_counit.carrier, unit_carrier);
  if (!composite.ok()) {
    return Error{ErrCode::triangle_violation,
                 "unit carrier does not land in the double pair category"};
  }
  if (auto diff = functor_difference(composite.value(),
                                     identity_functor(cofree.apex()))) {
    return Error{ErrCode::triangle_violation,
                 "cofree counit after unit is not the identity on the pair category",
                 *diff};
  }
  return std::nullopt;
}

std::optional<Error> check_triangle_identities(const Cofunctor& phi,
                                               const DeltaLens& lens) {
  if (auto err = check_lens_triangle(lens, unit(lens).carrier)) return err;
  CofreeLens cofree = cofree_lens(phi);
  return check_cofunctor_triangle(phi, unit(cofree.lens).carrier);
}

std::vector<LawCheck> comonad_law_checks(const Cofunctor& phi) {
  Cofunctor lr_phi = underlying_cofunctor(cofree_lens(phi).lens);
  CofMorphism delta = comultiplication(phi);
  CofMorphism ident = identity_cof_morphism(lr_phi);
  std::size_t domain =
      lr_phi.source.objects.size() + lr_phi.source.morphisms.size();

  auto carrier_diff = [&](const Result<CofMorphism>& got,
                          const CofMorphism& want) -> std::optional<std::string> {
    if (!got.ok()) return std::string("composite is undefined");
    if (got.value() == want) return std::nullopt;
    return functor_difference(got.value().carrier, want.carrier)
        .value_or("endpoints differ");
  };

  LawCheck left{"counitality-left", ErrCode::law_violation, domain, {}};
  if (auto diff = carrier_diff(compose_cof_morphisms(counit(lr_phi), delta), ident))
    left.witnesses.push_back(*diff);

  LawCheck right{"counitality-right", ErrCode::law_violation, domain, {}};
  if (auto diff = carrier_diff(
          compose_cof_morphisms(lr_on_morphism(counit(phi)), delta), ident))
    right.witnesses.push_back(*diff);

  LawCheck coassoc{"coassociativity", ErrCode::law_violation, domain, {}};
  auto lhs = compose_cof_morphisms(lr_on_morphism(delta), delta);
  auto rhs = compose_cof_morphisms(comultiplication(lr_phi), delta);
  if (!lhs.ok() || !rhs.ok()) {
    coassoc.witnesses.push_back("composite is undefined");
  } else if (!(lhs.value() == rhs.value())) {
    coassoc.witnesses.push_back(
        functor_difference(lhs.value().carrier, rhs.value().carrier)
            .value_or("endpoints differ"));
  }

  return {left, right, coassoc};
}

std::optional<Error> check_comonad_laws(const Cofunctor& phi) {
  for (const auto& law : comonad_law_checks(phi)) {
    if (!law.passed()) {
      return Error{law.code, cat("comonad law '", law.law, "' violated"),
                   law.witnesses.front()};
    }
  }
  return std::nullopt;
}

CheckedValue<Coalgebra> check_coalgebra(const Cofunctor& phi,
                                        const Functor& structure_carrier) {
  CheckedValue<Coalgebra> out;
  Cofunctor lr_phi = underlying_cofunctor(cofree_lens(phi).lens);

  auto cof = check_cof_morphism(structure_carrier, phi, lr_phi);
  out.outcome = cof.outcome;
  if (!out.outcome.ok()) return out;
  const CofMorphism& h = *cof.value;

  CofreeLens cofree = cofree_lens(phi);

  LawCheck counit_law{"counit-law", ErrCode::counit_law_violation, 0, {}};
  for (const auto& a : phi.source.objects) {
    ++counit_law.domain;
    if (cofree.proj_source.on_object(h.carrier.on_object(a)) != a) {
      counit_law.witnesses.push_back(cat("object ", a));
    }
  }
  for (const auto& w : phi.source.morphisms) {
    ++counit_law.domain;
    const auto& image =
        cofree.proj_source.on_morphism(h.carrier.on_morphism(w));
    if (image != w) {
      counit_law.witnesses.push_back(
          cat("morphism ", w, ": counit of image is ", image));
    }
  }

  // Redundant once the counit law holds, but checked, never assumed.
  LawCheck comult_law{"comultiplication-law", ErrCode::comult_law_violation,
                      0, {}};
  auto lhs = compose_cof_morphisms(lr_on_morphism(h), h);
  auto rhs = compose_cof_morphisms(comultiplication(phi), h);
  comult_law.domain =
      phi.source.objects.size() + phi.source.morphisms.size();
  if (!lhs.ok() || !rhs.ok()) {
    comult_law.witnesses.push_back("composite is undefined");
  } else if (!(lhs.value() == rhs.value())) {
    comult_law.witnesses.push_back(
        functor_difference(lhs.value().carrier, rhs.value().carrier)
            .value_or("endpoints differ"));
  }

  // The forced shape of a lawful structure map, reported explicitly.
  LawCheck on_objects{"carrier-identity-on-objects", ErrCode::counit_law_violation,
                      phi.source.objects.size(), {}};
  for (const auto& a : phi.source.objects) {
    if (h.carrier.on_object(a) != a) on_objects.witnesses.push_back(a);
  }
  LawCheck first_component{"carrier-first-component", ErrCode::counit_law_violation,
                           phi.source.morphisms.size(), {}};
  for (const auto& w : phi.source.morphisms) {
    if (cofree.proj_source.on_morphism(h.carrier.on_morphism(w)) != w)
      first_component.witnesses.push_back(w);
  }

  out.outcome.laws.push_back(counit_law);
  out.outcome.laws.push_back(comult_law);
  out.outcome.laws.push_back(on_objects);
  out.outcome.laws.push_back(first_component);
  if (out.outcome.ok()) out.value = Coalgebra{phi, h};
  return out;
}

Result<Coalgebra> validate_coalgebra(const Cofunctor& phi,
                                     const CofMorphism& structure) {
  if (!(structure.from == phi)) {
    return Error{ErrCode::boundary_mismatch,
                 "structure map does not start at the given cofunctor"};
  }
  Cofunctor lr_phi = underlying_cofunctor(cofree_lens(phi).lens);
  if (!(structure.to == lr_phi)) {
    return Error{ErrCode::boundary_mismatch,
                 "structure map does not land in the cofree image"};
  }
  auto checked = check_coalgebra(phi, structure.carrier);
  if (checked.value) return std::move(*checked.value);
  return *checked.outcome.first_error();
}

DeltaLens coalgebra_to_lens(const Coalgebra& coalgebra) {
  CofreeLens cofree = cofree_lens(coalgebra.carrier);
  auto get = compose_functors(cofree.lens.get, coalgebra.structure.carrier);
  return DeltaLens{std::move(get).take(), coalgebra.carrier.lifts};
}

Coalgebra lens_to_coalgebra(const DeltaLens& lens) {
  Cofunctor phi = underlying_cofunctor(lens);
  LensMorphism u = unit(lens);
  CofMorphism structure{phi, underlying_cofunctor(u.to), u.carrier};
  return Coalgebra{std::move(phi), std::move(structure)};
}

Factorization factorize(const DeltaLens& lens) {
  return Factorization{unit(lens), cofree_lens(underlying_cofunctor(lens))};
}

}  // namespace deltacat
