#include "deltacat/fincat.hpp"

#include <algorithm>
#include <set>

namespace deltacat {

using detail::cat;

bool FinCategory::has_object(const ObjId& o) const {
  return std::binary_search(objects.begin(), objects.end(), o);
}

bool FinCategory::has_morphism(const MorId& m) const {
  return std::binary_search(morphisms.begin(), morphisms.end(), m);
}

const ObjId& FinCategory::src_of(const MorId& m) const { return src.at(m); }
const ObjId& FinCategory::tgt_of(const MorId& m) const { return tgt.at(m); }
const MorId& FinCategory::id_of(const ObjId& o) const { return identity.at(o); }

bool FinCategory::is_identity(const MorId& m) const {
  return identity.at(src_of(m)) == m;
}

bool FinCategory::composable(const MorId& g, const MorId& f) const {
  return src_of(g) == tgt_of(f);
}

const MorId& FinCategory::comp(const MorId& g, const MorId& f) const {
  return table.at({g, f});
}

std::vector<MorId> FinCategory::morphisms_from(const ObjId& o) const {
  std::vector<MorId> out;
  for (const auto& m : morphisms)
    if (src_of(m) == o) out.push_back(m);
  return out;
}

std::vector<MorId> FinCategory::hom(const ObjId& a, const ObjId& b) const {
  std::vector<MorId> out;
  for (const auto& m : morphisms)
    if (src_of(m) == a && tgt_of(m) == b) out.push_back(m);
  return out;
}

std::string pair_name(const std::string& x, const std::string& y) {
  return cat("(", x, ",", y, ")");
}

std::string codiscrete_arrow_name(const ObjId& a, const ObjId& b) {
  return cat(a, "~>", b);
}

namespace {

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

std::optional<Error> shape(ErrCode code, std::string message,
                           std::string witness = "") {
  return Error{code, std::move(message), std::move(witness)};
}

}  // namespace

CheckedValue<FinCategory> check_category(const RawCategory& raw) {
  CheckedValue<FinCategory> out;
  auto& shape_error = out.outcome.shape_error;

  std::set<ObjId> objs;
  for (const auto& o : raw.objects) {
    if (o.empty()) {
      shape_error = shape(ErrCode::malformed_category, "empty object name");
      return out;
    }
    if (!objs.insert(o).second) {
      shape_error = shape(ErrCode::malformed_category, "duplicate object", o);
      return out;
    }
  }

  FinCategory c;
  c.objects.assign(objs.begin(), objs.end());

  for (const auto& d : raw.morphisms) {
    if (d.name.empty()) {
      shape_error = shape(ErrCode::malformed_category, "empty morphism name");
      return out;
    }
    if (starts_with(d.name, kIdentityPrefix)) {
      shape_error = shape(ErrCode::malformed_category,
                          "declared morphism uses the reserved id_ prefix",
                          d.name);
      return out;
    }
    if (c.src.count(d.name)) {
      shape_error =
          shape(ErrCode::malformed_category, "duplicate morphism", d.name);
      return out;
    }
    if (!objs.count(d.src) || !objs.count(d.tgt)) {
      shape_error = shape(
          ErrCode::malformed_category, "morphism endpoint is not an object",
          cat(d.name, ": ", d.src, " -> ", d.tgt));
      return out;
    }
    c.src[d.name] = d.src;
    c.tgt[d.name] = d.tgt;
  }

  for (const auto& o : c.objects) {
    MorId id = cat(kIdentityPrefix, o);
    c.identity[o] = id;
    c.src[id] = o;
    c.tgt[id] = o;
  }
  for (const auto& [m, _] : c.src) c.morphisms.push_back(m);
  std::sort(c.morphisms.begin(), c.morphisms.end());

  for (const auto& triple : raw.compose) {
    const auto& [f, g, gf] = std::tie(triple[0], triple[1], triple[2]);
    for (const auto& m : {f, g, gf}) {
      if (!c.src.count(m)) {
        shape_error = shape(ErrCode::malformed_category,
                            "compose entry names unknown morphism", m);
        return out;
      }
    }
    if (!c.composable(g, f)) {
      shape_error = shape(ErrCode::malformed_category,
                          "compose entry for a non-composable pair",
                          cat("(f=", f, ", g=", g, ")"));
      return out;
    }
    auto [it, inserted] = c.table.insert({{g, f}, gf});
    if (!inserted && it->second != gf) {
      shape_error = shape(ErrCode::malformed_category,
                          "conflicting compose entries",
                          cat("(f=", f, ", g=", g, ")"));
      return out;
    }
  }

  // Identity completion, recording conflicts with declared entries.
  LawCheck units{"unit-laws", ErrCode::malformed_category, 0, {}};
  for (const auto& m : c.morphisms) {
    units.domain += 2;
    ComposeKey left{c.id_of(c.tgt_of(m)), m};
    auto [lit, linserted] = c.table.insert({left, m});
    if (!linserted && lit->second != m) {
      units.witnesses.push_back(
          cat("comp(", left.first, ", ", m, ") = ", lit->second,
              ", expected ", m));
    }
    ComposeKey right{m, c.id_of(c.src_of(m))};
    auto [rit, rinserted] = c.table.insert({right, m});
    if (!rinserted && rit->second != m) {
      units.witnesses.push_back(
          cat("comp(", m, ", ", right.second, ") = ", rit->second,
              ", expected ", m));
    }
  }

  LawCheck totality{"composition-totality", ErrCode::malformed_category, 0, {}};
  for (const auto& g : c.morphisms) {
    for (const auto& f : c.morphisms) {
      if (!c.composable(g, f)) continue;
      ++totality.domain;
      if (!c.table.count({g, f}))
        totality.witnesses.push_back(cat("missing composite (f=", f, ", g=", g, ")"));
    }
  }

  LawCheck boundaries{"composite-boundaries", ErrCode::malformed_category, 0, {}};
  for (const auto& [key, gf] : c.table) {
    const auto& [g, f] = key;
    ++boundaries.domain;
    if (c.src_of(gf) != c.src_of(f) || c.tgt_of(gf) != c.tgt_of(g)) {
      boundaries.witnesses.push_back(
          cat("comp(", g, ", ", f, ") = ", gf, ": ", c.src_of(gf), " -> ",
              c.tgt_of(gf), ", expected ", c.src_of(f), " -> ", c.tgt_of(g)));
    }
  }

  LawCheck assoc{"associativity", ErrCode::malformed_category, 0, {}};
  for (const auto& h : c.morphisms) {
    for (const auto& g : c.morphisms) {
      if (!c.composable(h, g)) continue;
      for (const auto& f : c.morphisms) {
        if (!c.composable(g, f)) continue;
        ++assoc.domain;
        auto gf = c.table.find({g, f});
        auto hg = c.table.find({h, g});
        if (gf == c.table.end() || hg == c.table.end()) continue;  // witnessed above
        auto lhs = c.table.find({h, gf->second});
        auto rhs = c.table.find({hg->second, f});
        if (lhs == c.table.end() || rhs == c.table.end()) continue;
        if (lhs->second != rhs->second) {
          assoc.witnesses.push_back(
              cat("(h=", h, ", g=", g, ", f=", f, "): comp(h, comp(g,f)) = ",
                  lhs->second, " != ", rhs->second, " = comp(comp(h,g), f)"));
        }
      }
    }
  }

  out.outcome.laws = {units, totality, boundaries, assoc};
  if (out.outcome.ok()) out.value = std::move(c);
  return out;
}

Result<FinCategory> validate_category(const RawCategory& raw) {
  auto checked = check_category(raw);
  if (checked.value) return std::move(*checked.value);
  return *checked.outcome.first_error();
}

Result<MorId> compose(const FinCategory& c, const MorId& g, const MorId& f) {
  for (const auto& m : {g, f}) {
    if (!c.has_morphism(m))
      return Error{ErrCode::unknown_morphism, "no such morphism", m};
  }
  if (!c.composable(g, f)) {
    return Error{ErrCode::not_composable,
                 "src(g) != tgt(f)",
                 cat("(g=", g, ": ", c.src_of(g), " -> ", c.tgt_of(g),
                     ", f=", f, ": ", c.src_of(f), " -> ", c.tgt_of(f), ")")};
  }
  return c.comp(g, f);
}

CheckOutcome check_functor(const Functor& f) {
  CheckOutcome out;

  for (const auto& o : f.source.objects) {
    if (!f.object_map.count(o)) {
      out.shape_error = shape(ErrCode::malformed_input,
                              "object_map is missing a source object", o);
      return out;
    }
  }
  for (const auto& [o, fo] : f.object_map) {
    if (!f.source.has_object(o)) {
      out.shape_error =
          shape(ErrCode::unknown_object, "object_map key is not a source object", o);
      return out;
    }
    if (!f.target.has_object(fo)) {
      out.shape_error = shape(ErrCode::unknown_object,
                              "object_map value is not a target object", fo);
      return out;
    }
  }
  for (const auto& m : f.source.morphisms) {
    if (!f.morphism_map.count(m)) {
      out.shape_error = shape(ErrCode::malformed_input,
                              "morphism_map is missing a source morphism", m);
      return out;
    }
  }
  for (const auto& [m, fm] : f.morphism_map) {
    if (!f.source.has_morphism(m)) {
      out.shape_error = shape(ErrCode::unknown_morphism,
                              "morphism_map key is not a source morphism", m);
      return out;
    }
    if (!f.target.has_morphism(fm)) {
      out.shape_error = shape(ErrCode::unknown_morphism,
                              "morphism_map value is not a target morphism", fm);
      return out;
    }
  }

  LawCheck bounds{"preserves-boundaries", ErrCode::not_a_functor, 0, {}};
  for (const auto& m : f.source.morphisms) {
    ++bounds.domain;
    const auto& fm = f.on_morphism(m);
    if (f.target.src_of(fm) != f.on_object(f.source.src_of(m)) ||
        f.target.tgt_of(fm) != f.on_object(f.source.tgt_of(m))) {
      bounds.witnesses.push_back(
          cat(m, " |-> ", fm, " has boundary ", f.target.src_of(fm), " -> ",
              f.target.tgt_of(fm), ", expected ",
              f.on_object(f.source.src_of(m)), " -> ",
              f.on_object(f.source.tgt_of(m))));
    }
  }

  LawCheck ids{"preserves-identities", ErrCode::not_a_functor, 0, {}};
  for (const auto& o : f.source.objects) {
    ++ids.domain;
    const auto& img = f.on_morphism(f.source.id_of(o));
    const auto& want = f.target.id_of(f.on_object(o));
    if (img != want) {
      ids.witnesses.push_back(cat("id_", o, " |-> ", img, ", expected ", want));
    }
  }

  LawCheck comps{"preserves-composition", ErrCode::not_a_functor, 0, {}};
  for (const auto& [key, gf] : f.source.table) {
    const auto& [g, fm] = key;
    ++comps.domain;
    const auto& ig = f.on_morphism(g);
    const auto& im = f.on_morphism(fm);
    if (!f.target.composable(ig, im)) {
      comps.witnesses.push_back(
          cat("images of (g=", g, ", f=", fm, ") are not composable"));
      continue;
    }
    if (f.on_morphism(gf) != f.target.comp(ig, im)) {
      comps.witnesses.push_back(
          cat("F(comp(", g, ", ", fm, ")) = ", f.on_morphism(gf), " != ",
              f.target.comp(ig, im), " = comp(F ", g, ", F ", fm, ")"));
    }
  }

  out.laws = {bounds, ids, comps};
  return out;
}

Result<Functor> validate_functor(Functor f) {
  auto outcome = check_functor(f);
  if (auto err = outcome.first_error()) return *err;
  return f;
}

Functor identity_functor(const FinCategory& c) {
  Functor f{c, c, {}, {}};
  for (const auto& o : c.objects) f.object_map[o] = o;
  for (const auto& m : c.morphisms) f.morphism_map[m] = m;
  return f;
}

Result<Functor> compose_functors(const Functor& g, const Functor& f) {
  if (f.target != g.source) {
    return Error{ErrCode::boundary_mismatch,
                 "target of the first functor differs from source of the second"};
  }
  Functor out{f.source, g.target, {}, {}};
  for (const auto& [o, fo] : f.object_map) out.object_map[o] = g.on_object(fo);
  for (const auto& [m, fm] : f.morphism_map)
    out.morphism_map[m] = g.on_morphism(fm);
  return out;
}

bool is_bijective_on_objects(const Functor& f) {
  std::set<ObjId> image;
  for (const auto& [_, fo] : f.object_map) {
    if (!image.insert(fo).second) return false;
  }
  return image.size() == f.target.objects.size();
}

bool is_discrete_opfibration(const Functor& f) {
  for (const auto& a : f.source.objects) {
    const auto& fa = f.on_object(a);
    for (const auto& u : f.target.morphisms) {
      if (f.target.src_of(u) != fa) continue;
      std::size_t lifts = 0;
      for (const auto& w : f.source.morphisms) {
        if (f.source.src_of(w) == a && f.on_morphism(w) == u) ++lifts;
      }
      if (lifts != 1) return false;
    }
  }
  return true;
}

FinCategory codiscrete_category(const std::vector<ObjId>& objects) {
  FinCategory c;
  c.objects = objects;
  std::sort(c.objects.begin(), c.objects.end());
  for (const auto& a : c.objects) {
    for (const auto& b : c.objects) {
      MorId m = codiscrete_arrow_name(a, b);
      c.morphisms.push_back(m);
      c.src[m] = a;
      c.tgt[m] = b;
    }
    c.identity[a] = codiscrete_arrow_name(a, a);
  }
  std::sort(c.morphisms.begin(), c.morphisms.end());
  for (const auto& g : c.morphisms) {
    for (const auto& f : c.morphisms) {
      if (!c.composable(g, f)) continue;
      c.table[{g, f}] = codiscrete_arrow_name(c.src_of(f), c.tgt_of(g));
    }
  }
  return c;
}

CodiscreteUnit codiscrete_unit(const FinCategory& c) {
  CodiscreteUnit out{codiscrete_category(c.objects), {}};
  out.unit.source = c;
  out.unit.target = out.codiscrete;
  for (const auto& o : c.objects) out.unit.object_map[o] = o;
  for (const auto& m : c.morphisms)
    out.unit.morphism_map[m] = codiscrete_arrow_name(c.src_of(m), c.tgt_of(m));
  return out;
}

Functor codiscrete_functor(const FinCategory& from_codiscrete,
                           const FinCategory& to_codiscrete,
                           const std::map<ObjId, ObjId>& object_map) {
  Functor f{from_codiscrete, to_codiscrete, object_map, {}};
  for (const auto& m : from_codiscrete.morphisms) {
    f.morphism_map[m] =
        codiscrete_arrow_name(object_map.at(from_codiscrete.src_of(m)),
                              object_map.at(from_codiscrete.tgt_of(m)));
  }
  return f;
}

Result<Pullback> pullback(const Functor& f, const Functor& g) {
  if (f.target != g.target) {
    return Error{ErrCode::boundary_mismatch,
                 "pullback legs must share their target category"};
  }
  Pullback pb;
  FinCategory& p = pb.apex;
  std::map<ObjId, ObjId> obj_left, obj_right;
  std::map<MorId, MorId> mor_left, mor_right;

  for (const auto& a : f.source.objects) {
    for (const auto& b : g.source.objects) {
      if (f.on_object(a) != g.on_object(b)) continue;
      ObjId o = pair_name(a, b);
      p.objects.push_back(o);
      obj_left[o] = a;
      obj_right[o] = b;
      p.identity[o] = pair_name(f.source.id_of(a), g.source.id_of(b));
    }
  }
  std::sort(p.objects.begin(), p.objects.end());

  for (const auto& w : f.source.morphisms) {
    for (const auto& u : g.source.morphisms) {
      if (f.on_morphism(w) != g.on_morphism(u)) continue;
      MorId m = pair_name(w, u);
      p.morphisms.push_back(m);
      p.src[m] = pair_name(f.source.src_of(w), g.source.src_of(u));
      p.tgt[m] = pair_name(f.source.tgt_of(w), g.source.tgt_of(u));
      mor_left[m] = w;
      mor_right[m] = u;
    }
  }
  std::sort(p.morphisms.begin(), p.morphisms.end());

  for (const auto& m2 : p.morphisms) {
    for (const auto& m1 : p.morphisms) {
      if (!p.composable(m2, m1)) continue;
      p.table[{m2, m1}] =
          pair_name(f.source.comp(mor_left[m2], mor_left[m1]),
                    g.source.comp(mor_right[m2], mor_right[m1]));
    }
  }

  pb.to_left = Functor{p, f.source, obj_left, mor_left};
  pb.to_right = Functor{p, g.source, obj_right, mor_right};
  return pb;
}

Result<Functor> pullback_mediator(const Pullback& pb, const Functor& cone_left,
                                  const Functor& cone_right) {
  if (cone_left.source != cone_right.source) {
    return Error{ErrCode::boundary_mismatch, "cone legs must share a source"};
  }
  if (cone_left.target != pb.to_left.target ||
      cone_right.target != pb.to_right.target) {
    return Error{ErrCode::boundary_mismatch,
                 "cone legs must land in the pullback's feet"};
  }

  Functor m{cone_left.source, pb.apex, {}, {}};
  for (const auto& o : cone_left.source.objects) {
    ObjId target = pair_name(cone_left.on_object(o), cone_right.on_object(o));
    if (!pb.apex.has_object(target)) {
      return Error{ErrCode::law_violation,
                   "cone does not commute with the pullback cospan", o};
    }
    m.object_map[o] = target;
  }
  for (const auto& w : cone_left.source.morphisms) {
    MorId target =
        pair_name(cone_left.on_morphism(w), cone_right.on_morphism(w));
    if (!pb.apex.has_morphism(target)) {
      return Error{ErrCode::law_violation,
                   "cone does not commute with the pullback cospan", w};
    }
    m.morphism_map[w] = target;
  }
  if (auto err = check_functor(m).first_error()) return *err;
  return m;
}

CoproductCat coproduct_cat(const FinCategory& a, const FinCategory& b) {
  CoproductCat out;
  FinCategory& c = out.cat;
  auto copy_side = [&c](const FinCategory& side, const char* prefix,
                        Functor& inj) {
    inj.source = side;
    for (const auto& o : side.objects) {
      ObjId co = cat(prefix, o);
      c.objects.push_back(co);
      inj.object_map[o] = co;
    }
    for (const auto& m : side.morphisms) {
      MorId cm = cat(prefix, m);
      c.morphisms.push_back(cm);
      c.src[cm] = cat(prefix, side.src_of(m));
      c.tgt[cm] = cat(prefix, side.tgt_of(m));
      inj.morphism_map[m] = cm;
    }
    for (const auto& [o, id] : side.identity)
      c.identity[cat(prefix, o)] = cat(prefix, id);
    for (const auto& [key, gf] : side.table)
      c.table[{cat(prefix, key.first), cat(prefix, key.second)}] = cat(prefix, gf);
  };
  copy_side(a, kInlPrefix, out.inl);
  copy_side(b, kInrPrefix, out.inr);
  std::sort(c.objects.begin(), c.objects.end());
  std::sort(c.morphisms.begin(), c.morphisms.end());
  out.inl.target = c;
  out.inr.target = c;
  return out;
}

FinCategory rename_category(const FinCategory& c,
                            const std::map<ObjId, ObjId>& object_names,
                            const std::map<MorId, MorId>& morphism_names) {
  FinCategory out;
  for (const auto& o : c.objects) out.objects.push_back(object_names.at(o));
  for (const auto& m : c.morphisms) out.morphisms.push_back(morphism_names.at(m));
  std::sort(out.objects.begin(), out.objects.end());
  std::sort(out.morphisms.begin(), out.morphisms.end());
  for (const auto& [m, o] : c.src) out.src[morphism_names.at(m)] = object_names.at(o);
  for (const auto& [m, o] : c.tgt) out.tgt[morphism_names.at(m)] = object_names.at(o);
  for (const auto& [o, m] : c.identity)
    out.identity[object_names.at(o)] = morphism_names.at(m);
  for (const auto& [key, gf] : c.table) {
    out.table[{morphism_names.at(key.first), morphism_names.at(key.second)}] =
        morphism_names.at(gf);
  }
  return out;
}

}  // namespace deltacat
