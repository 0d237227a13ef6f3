#pragma once

#include <filesystem>
#include <variant>

#include "deltacat/cofree.hpp"

namespace deltacat::io {

// File kinds, keyed by extension: .cat.json, .fun.json, .cof.json,
// .lens.json, .coalg.json.
enum class Kind { category, functor, cofunctor, lens, coalgebra };

Result<Kind> kind_of(const std::filesystem::path& path);

using ParsedValue =
    std::variant<FinCategory, Functor, Cofunctor, DeltaLens, Coalgebra>;

// Checked parses: file, JSON, and reference errors land in the outcome's
// shape error; law failures land in the law suites. The value is present
// only when the file passed its kind's validator.
CheckedValue<FinCategory> check_parse_category(const std::filesystem::path&);
CheckedValue<Functor> check_parse_functor(const std::filesystem::path&);
CheckedValue<Cofunctor> check_parse_cofunctor(const std::filesystem::path&);
CheckedValue<DeltaLens> check_parse_lens(const std::filesystem::path&);
CheckedValue<Coalgebra> check_parse_coalgebra(const std::filesystem::path&);

Result<FinCategory> parse_category(const std::filesystem::path&);
Result<Functor> parse_functor(const std::filesystem::path&);
Result<Cofunctor> parse_cofunctor(const std::filesystem::path&);
Result<DeltaLens> parse_lens(const std::filesystem::path&);
Result<Coalgebra> parse_coalgebra(const std::filesystem::path&);

Result<ParsedValue> parse_file(const std::filesystem::path&);

// Canonical serialization: sorted keys, sorted arrays, two-space indent, LF
// endings, trailing newline. Identity morphisms are implicit in the file
// format, so they are renamed to "id_<object>" on the way out and composites
// involving them are dropped; parsing re-synthesizes them.
std::string serialize(const FinCategory&);
std::string serialize(const Functor&);
std::string serialize(const Cofunctor&);
std::string serialize(const DeltaLens&);
std::string serialize(const Coalgebra&);

Result<std::monostate> write_file(const std::filesystem::path&,
                                  const std::string& content);

}  // namespace deltacat::io
