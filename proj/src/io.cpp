#include "deltacat/io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace deltacat::io {

namespace fs = std::filesystem;
using detail::cat;
using nlohmann::json;

namespace {

Error malformed(std::string message, std::string witness = "") {
  return Error{ErrCode::malformed_input, std::move(message),
               std::move(witness)};
}

Result<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return malformed("cannot read file", path.string());
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  return content;
}

Result<json> load_json(const fs::path& path) {
  auto content = read_file(path);
  if (!content.ok()) return content.error();
  try {
    return json::parse(content.value());
  } catch (const json::parse_error& e) {
    return malformed("file is not valid JSON",
                     cat(path.string(), ": ", e.what()));
  }
}

Result<const json*> field(const json& j, const char* key) {
  if (!j.is_object()) return malformed("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) return malformed("missing key", key);
  return &*it;
}

Result<std::string> string_field(const json& j, const char* key) {
  auto f = field(j, key);
  if (!f.ok()) return f.error();
  if (!f.value()->is_string())
    return malformed("expected a string", key);
  return f.value()->get<std::string>();
}

Result<std::map<std::string, std::string>> string_map_field(const json& j,
                                                            const char* key) {
  auto f = field(j, key);
  if (!f.ok()) return f.error();
  if (!f.value()->is_object())
    return malformed("expected an object of strings", key);
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : f.value()->items()) {
    if (!v.is_string()) return malformed("expected a string value", k);
    out[k] = v.get<std::string>();
  }
  return out;
}

Result<RawCategory> raw_category_from_json(const json& j) {
  RawCategory raw;
  auto objects = field(j, "objects");
  if (!objects.ok()) return objects.error();
  if (!objects.value()->is_array())
    return malformed("expected an array", "objects");
  for (const auto& o : *objects.value()) {
    if (!o.is_string()) return malformed("object names must be strings");
    raw.objects.push_back(o.get<std::string>());
  }
  auto morphisms = field(j, "morphisms");
  if (!morphisms.ok()) return morphisms.error();
  if (!morphisms.value()->is_array())
    return malformed("expected an array", "morphisms");
  for (const auto& m : *morphisms.value()) {
    auto name = string_field(m, "name");
    auto src = string_field(m, "src");
    auto tgt = string_field(m, "tgt");
    if (!name.ok()) return name.error();
    if (!src.ok()) return src.error();
    if (!tgt.ok()) return tgt.error();
    raw.morphisms.push_back({name.value(), src.value(), tgt.value()});
  }
  auto compose = field(j, "compose");
  if (!compose.ok()) return compose.error();
  if (!compose.value()->is_array())
    return malformed("expected an array", "compose");
  for (const auto& t : *compose.value()) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() ||
        !t[1].is_string() || !t[2].is_string()) {
      return malformed("compose entries must be [f, g, gf] triples");
    }
    raw.compose.push_back({t[0].get<std::string>(), t[1].get<std::string>(),
                           t[2].get<std::string>()});
  }
  return raw;
}

// A category reference is either an inline object or a path relative to the
// directory of the referring file.
CheckedValue<FinCategory> category_from_ref(const json& j,
                                            const fs::path& base_dir);

CheckedValue<FinCategory> checked_category_from_json(const json& j) {
  auto raw = raw_category_from_json(j);
  if (!raw.ok()) {
    CheckedValue<FinCategory> out;
    out.outcome.shape_error = raw.error();
    return out;
  }
  return check_category(raw.value());
}

CheckedValue<FinCategory> category_from_ref(const json& j,
                                            const fs::path& base_dir) {
  if (j.is_string()) {
    fs::path ref = base_dir / j.get<std::string>();
    auto loaded = load_json(ref);
    if (!loaded.ok()) {
      CheckedValue<FinCategory> out;
      out.outcome.shape_error = loaded.error();
      return out;
    }
    return checked_category_from_json(loaded.value());
  }
  return checked_category_from_json(j);
}

Result<FinCategory> category_ref(const json& j, const fs::path& base_dir) {
  auto checked = category_from_ref(j, base_dir);
  if (checked.value) return std::move(*checked.value);
  return *checked.outcome.first_error();
}

Result<LiftTable> lift_table_from_json(const json& j, const char* key) {
  auto rows = field(j, key);
  if (!rows.ok()) return rows.error();
  if (!rows.value()->is_array()) return malformed("expected an array", key);
  LiftTable out;
  for (const auto& row : *rows.value()) {
    auto at = string_field(row, "at");
    auto over = string_field(row, "over");
    auto chosen = string_field(row, "chosen");
    if (!at.ok()) return at.error();
    if (!over.ok()) return over.error();
    if (!chosen.ok()) return chosen.error();
    LiftKey k{at.value(), over.value()};
    if (out.count(k))
      return malformed("duplicate table row",
                       cat("(at=", k.first, ", over=", k.second, ")"));
    out[k] = chosen.value();
  }
  return out;
}

Result<Functor> functor_pieces_from_json(const json& j,
                                         const fs::path& base_dir,
                                         const char* target_key) {
  auto source_ref = field(j, "source");
  if (!source_ref.ok()) return source_ref.error();
  auto source = category_ref(*source_ref.value(), base_dir);
  if (!source.ok()) return source.error();
  auto target_ref = field(j, target_key);
  if (!target_ref.ok()) return target_ref.error();
  auto target = category_ref(*target_ref.value(), base_dir);
  if (!target.ok()) return target.error();
  auto object_map = string_map_field(j, "object_map");
  if (!object_map.ok()) return object_map.error();
  auto morphism_map = string_map_field(j, "morphism_map");
  if (!morphism_map.ok()) return morphism_map.error();
  return Functor{std::move(source).take(), std::move(target).take(),
                 object_map.value(), morphism_map.value()};
}

template <typename T>
CheckedValue<T> fail_shape(Error error) {
  CheckedValue<T> out;
  out.outcome.shape_error = std::move(error);
  return out;
}

// ---------------------------------------------------------------------------
// Canonical serialization

// Rename every identity morphism to its reserved file-format name "id_<obj>".
std::pair<FinCategory, std::map<MorId, MorId>> canonicalize_identities(
    const FinCategory& c) {
  std::map<MorId, MorId> rename;
  std::map<MorId, MorId> target_of_identity;
  for (const auto& [o, id] : c.identity)
    target_of_identity[id] = cat(kIdentityPrefix, o);
  for (const auto& m : c.morphisms) {
    auto it = target_of_identity.find(m);
    MorId wanted = it == target_of_identity.end() ? m : it->second;
    rename[m] = wanted;
  }
  std::map<MorId, int> uses;
  for (const auto& [_, v] : rename) ++uses[v];
  for (const auto& [v, n] : uses) {
    if (n > 1)
      throw std::logic_error(cat("identity rename collides on '", v, "'"));
  }
  std::map<ObjId, ObjId> obj_names;
  for (const auto& o : c.objects) obj_names[o] = o;
  return {rename_category(c, obj_names, rename), rename};
}

json category_to_json(const FinCategory& canonical) {
  json j;
  j["objects"] = canonical.objects;
  json morphisms = json::array();
  for (const auto& m : canonical.morphisms) {
    if (canonical.is_identity(m)) continue;
    morphisms.push_back({{"name", m},
                         {"src", canonical.src_of(m)},
                         {"tgt", canonical.tgt_of(m)}});
  }
  j["morphisms"] = std::move(morphisms);
  std::vector<std::array<std::string, 3>> triples;
  for (const auto& [key, gf] : canonical.table) {
    const auto& [g, f] = key;
    if (canonical.is_identity(g) || canonical.is_identity(f)) continue;
    triples.push_back({f, g, gf});
  }
  std::sort(triples.begin(), triples.end());
  json compose = json::array();
  for (const auto& t : triples) compose.push_back({t[0], t[1], t[2]});
  j["compose"] = std::move(compose);
  return j;
}

json functor_to_json(const Functor& f, const char* target_key) {
  auto [src_cat, src_ren] = canonicalize_identities(f.source);
  auto [tgt_cat, tgt_ren] = canonicalize_identities(f.target);
  json j;
  j["source"] = category_to_json(src_cat);
  j[target_key] = category_to_json(tgt_cat);
  json om = json::object();
  for (const auto& [o, v] : f.object_map) om[o] = v;
  j["object_map"] = std::move(om);
  json mm = json::object();
  for (const auto& [m, v] : f.morphism_map) mm[src_ren.at(m)] = tgt_ren.at(v);
  j["morphism_map"] = std::move(mm);
  return j;
}

json lift_table_to_json(const LiftTable& table,
                        const std::map<MorId, MorId>& source_ren,
                        const std::map<MorId, MorId>& base_ren) {
  json rows = json::array();
  for (const auto& [key, chosen] : table) {
    rows.push_back({{"at", key.first},
                    {"over", base_ren.at(key.second)},
                    {"chosen", source_ren.at(chosen)}});
  }
  return rows;
}

json cofunctor_to_json(const Cofunctor& phi) {
  auto [src_cat, src_ren] = canonicalize_identities(phi.source);
  auto [base_cat, base_ren] = canonicalize_identities(phi.base);
  json j;
  j["source"] = category_to_json(src_cat);
  j["base"] = category_to_json(base_cat);
  json om = json::object();
  for (const auto& [o, v] : phi.object_map) om[o] = v;
  j["object_map"] = std::move(om);
  j["lifts"] = lift_table_to_json(phi.lifts, src_ren, base_ren);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Result<Kind> kind_of(const fs::path& path) {
  const std::string name = path.filename().string();
  auto ends_with = [&name](const std::string& suffix) {
    return name.size() >= suffix.size() &&
           name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".cat.json")) return Kind::category;
  if (ends_with(".fun.json")) return Kind::functor;
  if (ends_with(".cof.json")) return Kind::cofunctor;
  if (ends_with(".lens.json")) return Kind::lens;
  if (ends_with(".coalg.json")) return Kind::coalgebra;
  return malformed("unrecognized file kind (expected .cat/.fun/.cof/.lens/.coalg .json)",
                   name);
}

CheckedValue<FinCategory> check_parse_category(const fs::path& path) {
  auto j = load_json(path);
  if (!j.ok()) return fail_shape<FinCategory>(j.error());
  return checked_category_from_json(j.value());
}

CheckedValue<Functor> check_parse_functor(const fs::path& path) {
  auto j = load_json(path);
  if (!j.ok()) return fail_shape<Functor>(j.error());
  auto pieces = functor_pieces_from_json(j.value(), path.parent_path(), "target");
  if (!pieces.ok()) return fail_shape<Functor>(pieces.error());
  CheckedValue<Functor> out;
  out.outcome = check_functor(pieces.value());
  if (out.outcome.ok()) out.value = std::move(pieces).take();
  return out;
}

CheckedValue<Cofunctor> check_parse_cofunctor(const fs::path& path) {
  auto j = load_json(path);
  if (!j.ok()) return fail_shape<Cofunctor>(j.error());
  auto source_ref = field(j.value(), "source");
  if (!source_ref.ok()) return fail_shape<Cofunctor>(source_ref.error());
  auto source = category_ref(*source_ref.value(), path.parent_path());
  if (!source.ok()) return fail_shape<Cofunctor>(source.error());
  auto base_ref = field(j.value(), "base");
  if (!base_ref.ok()) return fail_shape<Cofunctor>(base_ref.error());
  auto base = category_ref(*base_ref.value(), path.parent_path());
  if (!base.ok()) return fail_shape<Cofunctor>(base.error());
  auto object_map = string_map_field(j.value(), "object_map");
  if (!object_map.ok()) return fail_shape<Cofunctor>(object_map.error());
  auto lifts = lift_table_from_json(j.value(), "lifts");
  if (!lifts.ok()) return fail_shape<Cofunctor>(lifts.error());

  Cofunctor phi{std::move(source).take(), std::move(base).take(),
                object_map.value(), lifts.value()};
  CheckedValue<Cofunctor> out;
  out.outcome = check_cofunctor(phi);
  if (out.outcome.ok()) out.value = std::move(phi);
  return out;
}

CheckedValue<DeltaLens> check_parse_lens(const fs::path& path) {
  auto j = load_json(path);
  if (!j.ok()) return fail_shape<DeltaLens>(j.error());
  auto get_ref = field(j.value(), "get");
  if (!get_ref.ok()) return fail_shape<DeltaLens>(get_ref.error());
  auto get = functor_pieces_from_json(*get_ref.value(), path.parent_path(),
                                      "base");
  if (!get.ok()) return fail_shape<DeltaLens>(get.error());
  auto puts = lift_table_from_json(j.value(), "puts");
  if (!puts.ok()) return fail_shape<DeltaLens>(puts.error());

  DeltaLens lens{std::move(get).take(), puts.value()};
  CheckedValue<DeltaLens> out;
  out.outcome = check_lens(lens);
  if (out.outcome.ok()) out.value = std::move(lens);
  return out;
}

CheckedValue<Coalgebra> check_parse_coalgebra(const fs::path& path) {
  auto j = load_json(path);
  if (!j.ok()) return fail_shape<Coalgebra>(j.error());
  auto cof_ref = field(j.value(), "cofunctor");
  if (!cof_ref.ok()) return fail_shape<Coalgebra>(cof_ref.error());

  CheckedValue<Cofunctor> phi;
  if (cof_ref.value()->is_string()) {
    phi = check_parse_cofunctor(path.parent_path() /
                                cof_ref.value()->get<std::string>());
  } else {
    auto source_ref = field(*cof_ref.value(), "source");
    if (!source_ref.ok()) return fail_shape<Coalgebra>(source_ref.error());
    auto source = category_ref(*source_ref.value(), path.parent_path());
    if (!source.ok()) return fail_shape<Coalgebra>(source.error());
    auto base_ref = field(*cof_ref.value(), "base");
    if (!base_ref.ok()) return fail_shape<Coalgebra>(base_ref.error());
    auto base = category_ref(*base_ref.value(), path.parent_path());
    if (!base.ok()) return fail_shape<Coalgebra>(base.error());
    auto object_map = string_map_field(*cof_ref.value(), "object_map");
    if (!object_map.ok()) return fail_shape<Coalgebra>(object_map.error());
    auto lifts = lift_table_from_json(*cof_ref.value(), "lifts");
    if (!lifts.ok()) return fail_shape<Coalgebra>(lifts.error());
    Cofunctor value{std::move(source).take(), std::move(base).take(),
                    object_map.value(), lifts.value()};
    phi.outcome = check_cofunctor(value);
    if (phi.outcome.ok()) phi.value = std::move(value);
  }
  if (!phi.value) {
    CheckedValue<Coalgebra> out;
    out.outcome = phi.outcome;
    return out;
  }

  auto carrier_objects = string_map_field(j.value(), "carrier_object_map");
  if (!carrier_objects.ok())
    return fail_shape<Coalgebra>(carrier_objects.error());
  auto carrier_morphisms = string_map_field(j.value(), "carrier_morphism_map");
  if (!carrier_morphisms.ok())
    return fail_shape<Coalgebra>(carrier_morphisms.error());

  CofreeLens cofree = cofree_lens(*phi.value);
  Functor carrier{phi.value->source, cofree.apex(), carrier_objects.value(),
                  carrier_morphisms.value()};
  return check_coalgebra(*phi.value, carrier);
}

namespace {

template <typename T>
Result<T> collapse(CheckedValue<T> checked) {
  if (checked.value) return std::move(*checked.value);
  return *checked.outcome.first_error();
}

}  // namespace

Result<FinCategory> parse_category(const fs::path& p) {
  return collapse(check_parse_category(p));
}
Result<Functor> parse_functor(const fs::path& p) {
  return collapse(check_parse_functor(p));
}
Result<Cofunctor> parse_cofunctor(const fs::path& p) {
  return collapse(check_parse_cofunctor(p));
}
Result<DeltaLens> parse_lens(const fs::path& p) {
  return collapse(check_parse_lens(p));
}
Result<Coalgebra> parse_coalgebra(const fs::path& p) {
  return collapse(check_parse_coalgebra(p));
}

Result<ParsedValue> parse_file(const fs::path& path) {
  auto kind = kind_of(path);
  if (!kind.ok()) return kind.error();
  switch (kind.value()) {
    case Kind::category: {
      auto v = parse_category(path);
      if (!v.ok()) return v.error();
      return ParsedValue{std::move(v).take()};
    }
    case Kind::functor: {
      auto v = parse_functor(path);
      if (!v.ok()) return v.error();
      return ParsedValue{std::move(v).take()};
    }
    case Kind::cofunctor: {
      auto v = parse_cofunctor(path);
      if (!v.ok()) return v.error();
      return ParsedValue{std::move(v).take()};
    }
    case Kind::lens: {
      auto v = parse_lens(path);
      if (!v.ok()) return v.error();
      return ParsedValue{std::move(v).take()};
    }
    case Kind::coalgebra: {
      auto v = parse_coalgebra(path);
      if (!v.ok()) return v.error();
      return ParsedValue{std::move(v).take()};
    }
  }
  return malformed("unreachable");
}

std::string serialize(const FinCategory& c) {
  return dump(category_to_json(canonicalize_identities(c).first));
}

std::string serialize(const Functor& f) {
  return dump(functor_to_json(f, "target"));
}

std::string serialize(const Cofunctor& phi) {
  return dump(cofunctor_to_json(phi));
}

std::string serialize(const DeltaLens& lens) {
  auto [_, src_ren] = canonicalize_identities(lens.source());
  auto [__, base_ren] = canonicalize_identities(lens.base());
  json j;
  j["get"] = functor_to_json(lens.get, "base");
  j["puts"] = lift_table_to_json(lens.puts, src_ren, base_ren);
  return dump(j);
}

std::string serialize(const Coalgebra& coalgebra) {
  const Cofunctor& phi = coalgebra.carrier;
  auto [_, src_ren] = canonicalize_identities(phi.source);
  auto [__, base_ren] = canonicalize_identities(phi.base);
  CofreeLens cofree = cofree_lens(phi);
  // The pair category is reconstructed by the reader, so carrier values are
  // rewritten against the pair names the canonical cofunctor will produce.
  std::map<MorId, MorId> pair_ren;
  for (const auto& p : cofree.apex().morphisms) {
    pair_ren[p] = pair_name(src_ren.at(cofree.proj_source.on_morphism(p)),
                            base_ren.at(cofree.lens.get.on_morphism(p)));
  }
  json j;
  j["cofunctor"] = cofunctor_to_json(phi);
  json om = json::object();
  for (const auto& [a, v] : coalgebra.structure.carrier.object_map) om[a] = v;
  j["carrier_object_map"] = std::move(om);
  json mm = json::object();
  for (const auto& [m, v] : coalgebra.structure.carrier.morphism_map)
    mm[src_ren.at(m)] = pair_ren.at(v);
  j["carrier_morphism_map"] = std::move(mm);
  return dump(j);
}

Result<std::monostate> write_file(const fs::path& path,
                                  const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return malformed("cannot open file for writing", path.string());
  out << content;
  if (!out) return malformed("write failed", path.string());
  return std::monostate{};
}

}  // namespace deltacat::io
