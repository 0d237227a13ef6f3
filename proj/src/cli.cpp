#include "deltacat/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "deltacat/io.hpp"
#include "deltacat/oracle.hpp"

namespace deltacat::cli {

namespace fs = std::filesystem;
using detail::cat;
using nlohmann::json;

namespace {

Report from_outcome(const CheckOutcome& outcome) {
  Report report;
  report.checks = outcome.laws;
  report.error = outcome.first_error();
  return report;
}

Report finish(Report report) {
  if (!report.error) {
    for (const auto& law : report.checks) {
      if (!law.passed()) {
        report.error = Error{law.code, cat("law '", law.law, "' violated"),
                             law.witnesses.front()};
        break;
      }
    }
  }
  if (!report.error) {
    report.status = "pass";
  } else {
    report.status = exit_class(report.error->code) == 2 ? "malformed" : "fail";
  }
  return report;
}

Report fail_with(Error error) {
  Report report;
  report.error = std::move(error);
  return finish(report);
}

// Category arguments may be file paths or names of curated fixtures, looked
// up in DELTACAT_FIXTURES (falling back to the built-in fixture directory).
fs::path fixture_dir() {
  if (const char* env = std::getenv("DELTACAT_FIXTURES")) return env;
#ifdef DELTACAT_FIXTURE_DIR
  return DELTACAT_FIXTURE_DIR;
#else
  return ".";
#endif
}

Result<FinCategory> resolve_category(const std::string& arg) {
  if (fs::exists(arg)) return io::parse_category(arg);
  fs::path named = fixture_dir() / (arg + ".cat.json");
  if (fs::exists(named)) return io::parse_category(named);
  return Error{ErrCode::malformed_input,
               "no such file or fixture name", arg};
}

Result<oracle::EnumBounds> parse_bounds(const std::string& spec) {
  oracle::EnumBounds bounds;
  if (spec.empty()) return bounds;
  std::istringstream in(spec);
  char comma = 0;
  if (!(in >> bounds.max_objects >> comma >> bounds.max_morphisms) ||
      comma != ',') {
    return Error{ErrCode::malformed_input,
                 "expected --bounds <objects>,<morphisms>", spec};
  }
  return bounds;
}

LawCheck law_from(const std::string& name, ErrCode code, std::size_t domain,
                  const std::optional<Error>& error) {
  LawCheck law{name, code, domain, {}};
  if (error) law.witnesses.push_back(error->str());
  return law;
}

std::size_t merge_into(Report& report, const std::string& prefix,
                       const CheckOutcome& outcome) {
  std::size_t failures = outcome.ok() ? 0 : 1;
  if (outcome.shape_error && !report.error) report.error = outcome.shape_error;
  for (auto law : outcome.laws) {
    law.law = cat(prefix, law.law);
    report.checks.push_back(std::move(law));
  }
  return failures;
}

Report do_check(const fs::path& path) {
  auto kind = io::kind_of(path);
  if (!kind.ok()) return fail_with(kind.error());
  Report report;
  switch (kind.value()) {
    case io::Kind::category:
      report = from_outcome(io::check_parse_category(path).outcome);
      break;
    case io::Kind::functor:
      report = from_outcome(io::check_parse_functor(path).outcome);
      break;
    case io::Kind::cofunctor:
      report = from_outcome(io::check_parse_cofunctor(path).outcome);
      break;
    case io::Kind::lens:
      report = from_outcome(io::check_parse_lens(path).outcome);
      break;
    case io::Kind::coalgebra:
      report = from_outcome(io::check_parse_coalgebra(path).outcome);
      break;
  }
  return finish(report);
}

Report do_get(const fs::path& lens_path, const MorId& morphism) {
  auto lens = io::parse_lens(lens_path);
  if (!lens.ok()) return fail_with(lens.error());
  auto image = lens_get(lens.value(), morphism);
  if (!image.ok()) return fail_with(image.error());
  Report report;
  report.facts["result"] = image.value();
  return finish(report);
}

Report do_put(const fs::path& lens_path, const ObjId& at, const MorId& over) {
  auto lens = io::parse_lens(lens_path);
  if (!lens.ok()) return fail_with(lens.error());
  auto chosen = lens_put(lens.value(), at, over);
  if (!chosen.ok()) return fail_with(chosen.error());
  Report report;
  report.facts["result"] = chosen.value();
  return finish(report);
}

Report write_artifact(Report& report, const fs::path& path,
                      const std::string& content) {
  auto written = io::write_file(path, content);
  if (!written.ok()) {
    report.error = written.error();
  } else {
    report.artifacts_written.push_back(path.string());
  }
  return finish(report);
}

Report do_cofree(const fs::path& cof_path, const std::string& out_path) {
  auto phi = io::parse_cofunctor(cof_path);
  if (!phi.ok()) return fail_with(phi.error());
  CofreeLens cofree = cofree_lens(phi.value());
  Report report = from_outcome(check_lens(cofree.lens));
  report.facts["apex-objects"] = std::to_string(cofree.apex().objects.size());
  report.facts["apex-morphisms"] =
      std::to_string(cofree.apex().morphisms.size());
  if (!out_path.empty())
    return write_artifact(report, out_path, io::serialize(cofree.lens));
  return finish(report);
}

Report do_factorize(const fs::path& lens_path, const std::string& out_path,
                    const std::string& out_unit_path) {
  auto lens = io::parse_lens(lens_path);
  if (!lens.ok()) return fail_with(lens.error());
  Factorization fact = factorize(lens.value());

  Report report;
  report.checks.push_back(law_from(
      "first-factor-bijective-on-objects", ErrCode::law_violation,
      fact.first.carrier.object_map.size(),
      is_bijective_on_objects(fact.first.carrier)
          ? std::nullopt
          : std::make_optional(Error{ErrCode::law_violation,
                                     "unit carrier is not bijective-on-objects"})));

  LawCheck reassembly{"get-reassembly", ErrCode::law_violation, 0, {}};
  auto composite = compose_functors(fact.second.lens.get, fact.first.carrier);
  reassembly.domain = lens.value().source().morphisms.size();
  if (!composite.ok() || !(composite.value() == lens.value().get)) {
    reassembly.witnesses.push_back(
        "second factor's Get does not recompose to the original");
  }
  report.checks.push_back(reassembly);

  LawCheck transport{"put-transport", ErrCode::law_violation,
                     lens.value().puts.size(), {}};
  for (const auto& [key, w] : lens.value().puts) {
    if (fact.first.carrier.on_morphism(w) != fact.second.lens.puts.at(key)) {
      transport.witnesses.push_back(
          cat("(at=", key.first, ", over=", key.second, ")"));
    }
  }
  report.checks.push_back(transport);

  if (!out_unit_path.empty()) {
    auto written =
        io::write_file(out_unit_path, io::serialize(fact.first.carrier));
    if (!written.ok()) return fail_with(written.error());
    report.artifacts_written.push_back(out_unit_path);
  }
  if (!out_path.empty())
    return write_artifact(report, out_path, io::serialize(fact.second.lens));
  return finish(report);
}

Report do_coalgebra_verify(const fs::path& path) {
  return finish(from_outcome(io::check_parse_coalgebra(path).outcome));
}

Report do_coalgebra_from_lens(const fs::path& lens_path,
                              const std::string& out_path) {
  auto lens = io::parse_lens(lens_path);
  if (!lens.ok()) return fail_with(lens.error());
  Coalgebra coalgebra = lens_to_coalgebra(lens.value());
  Report report = from_outcome(
      check_coalgebra(coalgebra.carrier, coalgebra.structure.carrier).outcome);
  if (!out_path.empty())
    return write_artifact(report, out_path, io::serialize(coalgebra));
  return finish(report);
}

Report do_coalgebra_to_lens(const fs::path& coalg_path,
                            const std::string& out_path) {
  auto coalgebra = io::parse_coalgebra(coalg_path);
  if (!coalgebra.ok()) return fail_with(coalgebra.error());
  DeltaLens lens = coalgebra_to_lens(coalgebra.value());
  Report report = from_outcome(check_lens(lens));
  if (!out_path.empty())
    return write_artifact(report, out_path, io::serialize(lens));
  return finish(report);
}

Report do_coproduct(const fs::path& left_path, const fs::path& right_path,
                    const std::string& out_path) {
  auto left_kind = io::kind_of(left_path);
  auto right_kind = io::kind_of(right_path);
  if (!left_kind.ok()) return fail_with(left_kind.error());
  if (!right_kind.ok()) return fail_with(right_kind.error());
  if (left_kind.value() != right_kind.value()) {
    return fail_with(Error{ErrCode::malformed_input,
                           "coproduct arguments must share a kind"});
  }

  Report report;
  if (left_kind.value() == io::Kind::cofunctor) {
    auto phi = io::parse_cofunctor(left_path);
    if (!phi.ok()) return fail_with(phi.error());
    auto gamma = io::parse_cofunctor(right_path);
    if (!gamma.ok()) return fail_with(gamma.error());
    auto sum = coproduct_cofunctors(phi.value(), gamma.value());
    if (!sum.ok()) return fail_with(sum.error());
    merge_into(report, "inl-",
               check_cof_morphism(sum.value().inl.carrier, phi.value(),
                                  sum.value().cofunctor)
                   .outcome);
    merge_into(report, "inr-",
               check_cof_morphism(sum.value().inr.carrier, gamma.value(),
                                  sum.value().cofunctor)
                   .outcome);
    if (!out_path.empty())
      return write_artifact(report, out_path,
                            io::serialize(sum.value().cofunctor));
    return finish(report);
  }
  if (left_kind.value() == io::Kind::lens) {
    auto l1 = io::parse_lens(left_path);
    if (!l1.ok()) return fail_with(l1.error());
    auto l2 = io::parse_lens(right_path);
    if (!l2.ok()) return fail_with(l2.error());
    auto sum = coproduct_lenses(l1.value(), l2.value());
    if (!sum.ok()) return fail_with(sum.error());
    merge_into(report, "inl-",
               check_lens_morphism(sum.value().inl.carrier, l1.value(),
                                   sum.value().lens)
                   .outcome);
    merge_into(report, "inr-",
               check_lens_morphism(sum.value().inr.carrier, l2.value(),
                                   sum.value().lens)
                   .outcome);
    if (!out_path.empty())
      return write_artifact(report, out_path, io::serialize(sum.value().lens));
    return finish(report);
  }
  return fail_with(Error{ErrCode::malformed_input,
                         "coproduct expects .cof.json or .lens.json inputs"});
}

Report do_triangles(const fs::path& cof_path, const fs::path& lens_path) {
  auto phi = io::parse_cofunctor(cof_path);
  if (!phi.ok()) return fail_with(phi.error());
  auto lens = io::parse_lens(lens_path);
  if (!lens.ok()) return fail_with(lens.error());

  Report report;
  report.checks.push_back(law_from(
      "triangle-lens-side", ErrCode::triangle_violation,
      lens.value().source().morphisms.size(),
      check_lens_triangle(lens.value(), unit(lens.value()).carrier)));
  CofreeLens cofree = cofree_lens(phi.value());
  report.checks.push_back(law_from(
      "triangle-cofunctor-side", ErrCode::triangle_violation,
      cofree.apex().morphisms.size(),
      check_cofunctor_triangle(phi.value(), unit(cofree.lens).carrier)));
  return finish(report);
}

Report do_comonad_laws(const fs::path& cof_path) {
  auto phi = io::parse_cofunctor(cof_path);
  if (!phi.ok()) return fail_with(phi.error());
  Report report;
  report.checks = comonad_law_checks(phi.value());
  return finish(report);
}

std::string index_name(const char* stem, std::size_t i, const char* ext) {
  std::ostringstream os;
  os << stem << "_" << std::setfill('0') << std::setw(3) << i << ext;
  return os.str();
}

template <typename T>
Report list_enumeration(const Result<std::vector<T>>& values,
                        const char* kind_name, const char* stem,
                        const char* ext, const std::string& out_dir,
                        const oracle::EnumBounds& bounds) {
  if (!values.ok()) return fail_with(values.error());
  Report report;
  report.facts["bounds"] = cat(bounds.max_objects, ",", bounds.max_morphisms);
  report.facts["count"] = std::to_string(values.value().size());
  report.facts["kind"] = kind_name;
  if (!out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    for (std::size_t i = 0; i < values.value().size(); ++i) {
      fs::path path = fs::path(out_dir) / index_name(stem, i, ext);
      auto written = io::write_file(path, io::serialize(values.value()[i]));
      if (!written.ok()) return fail_with(written.error());
      report.artifacts_written.push_back(path.string());
    }
  }
  return finish(report);
}

Report do_enumerate(const std::string& what, const std::vector<std::string>& args,
                    const std::string& bounds_spec, const std::string& out_dir) {
  auto bounds = parse_bounds(bounds_spec);
  if (!bounds.ok()) return fail_with(bounds.error());

  if (what == "functors" || what == "cofunctors") {
    if (args.size() != 2) {
      return fail_with(Error{ErrCode::malformed_input,
                             "expected two categories (paths or fixture names)"});
    }
    auto a = resolve_category(args[0]);
    if (!a.ok()) return fail_with(a.error());
    auto b = resolve_category(args[1]);
    if (!b.ok()) return fail_with(b.error());
    if (what == "functors") {
      return list_enumeration(
          oracle::enumerate_functors(a.value(), b.value(), bounds.value()),
          "functors", "functor", ".fun.json", out_dir, bounds.value());
    }
    return list_enumeration(
        oracle::enumerate_cofunctors(a.value(), b.value(), bounds.value()),
        "cofunctors", "cofunctor", ".cof.json", out_dir, bounds.value());
  }
  if (what == "lenses-over" || what == "coalgebras") {
    if (args.size() != 1) {
      return fail_with(
          Error{ErrCode::malformed_input, "expected one .cof.json path"});
    }
    auto phi = io::parse_cofunctor(args[0]);
    if (!phi.ok()) return fail_with(phi.error());
    if (what == "lenses-over") {
      return list_enumeration(
          oracle::enumerate_lenses_over(phi.value(), bounds.value()),
          "lenses-over", "lens", ".lens.json", out_dir, bounds.value());
    }
    return list_enumeration(
        oracle::enumerate_coalgebras(phi.value(), bounds.value()),
        "coalgebras", "coalgebra", ".coalg.json", out_dir, bounds.value());
  }
  return fail_with(Error{
      ErrCode::malformed_input,
      "expected one of: functors, cofunctors, lenses-over, coalgebras", what});
}

}  // namespace

int Report::exit_code() const {
  if (!error) return 0;
  return exit_class(error->code);
}

std::string render_text(const Report& report, bool all_witnesses) {
  std::ostringstream os;
  for (const auto& law : report.checks) {
    os << "check " << law.law << ": " << (law.passed() ? "pass" : "FAIL")
       << " (domain " << law.domain << ")\n";
    if (!law.passed()) {
      std::size_t shown = all_witnesses ? law.witnesses.size() : 1;
      for (std::size_t i = 0; i < shown && i < law.witnesses.size(); ++i)
        os << "  witness: " << law.witnesses[i] << "\n";
    }
  }
  for (const auto& [name, value] : report.facts)
    os << name << ": " << value << "\n";
  for (const auto& path : report.artifacts_written)
    os << "wrote: " << path << "\n";
  if (report.error) os << "error: " << report.error->str() << "\n";
  os << "status: " << report.status << "\n";
  return os.str();
}

std::string render_json(const Report& report) {
  json j;
  j["status"] = report.status;
  json checks = json::array();
  for (const auto& law : report.checks) {
    checks.push_back({{"law", law.law},
                      {"domain", law.domain},
                      {"passed", law.passed()},
                      {"witnesses", law.witnesses}});
  }
  j["checks"] = std::move(checks);
  json facts = json::object();
  for (const auto& [name, value] : report.facts) facts[name] = value;
  j["facts"] = std::move(facts);
  j["artifacts_written"] = report.artifacts_written;
  if (report.error) {
    j["error"] = {{"code", to_string(report.error->code)},
                  {"message", report.error->message},
                  {"witness", report.error->witness}};
  }
  return j.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"finite categories, cofunctors, delta lenses, and the cofree lens construction"};
  app.name("deltacat");
  app.require_subcommand(1);

  std::string format = "text";
  bool all_witnesses = false;
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--witness", all_witnesses, "print every witness, not just the first");

  std::function<Report()> action;

  auto* check = app.add_subcommand("check", "validate a file and report its law suites");
  check->fallthrough();
  static std::string check_path;
  check->add_option("file", check_path, "input file")->required();
  check->callback([&] { action = [] { return do_check(check_path); }; });

  auto* get = app.add_subcommand("get", "apply a lens's Get to a morphism");
  get->fallthrough();
  static std::string get_path, get_morphism;
  get->add_option("lens", get_path)->required();
  get->add_option("morphism", get_morphism)->required();
  get->callback([&] { action = [] { return do_get(get_path, get_morphism); }; });

  auto* put = app.add_subcommand("put", "apply a lens's Put at an object over a base morphism");
  put->fallthrough();
  static std::string put_path, put_at, put_over;
  put->add_option("lens", put_path)->required();
  put->add_option("object", put_at)->required();
  put->add_option("morphism", put_over)->required();
  put->callback(
      [&] { action = [] { return do_put(put_path, put_at, put_over); }; });

  auto* cofree = app.add_subcommand("cofree", "build the cofree lens on a cofunctor");
  cofree->fallthrough();
  static std::string cofree_path, cofree_out;
  cofree_out.clear();
  cofree->add_option("cofunctor", cofree_path)->required();
  cofree->add_option("--out", cofree_out, "write the lens here");
  cofree->callback(
      [&] { action = [] { return do_cofree(cofree_path, cofree_out); }; });

  auto* factorize = app.add_subcommand(
      "factorize", "split a lens into a bijective-on-objects functor followed by a cofree lens");
  factorize->fallthrough();
  static std::string fact_path, fact_out, fact_out_unit;
  fact_out.clear();
  fact_out_unit.clear();
  factorize->add_option("lens", fact_path)->required();
  factorize->add_option("--out", fact_out, "write the cofree factor here");
  factorize->add_option("--out-unit", fact_out_unit, "write the unit carrier here");
  factorize->callback([&] {
    action = [] { return do_factorize(fact_path, fact_out, fact_out_unit); };
  });

  auto* coalgebra = app.add_subcommand("coalgebra", "comonad coalgebra operations");
  coalgebra->fallthrough();
  coalgebra->require_subcommand(1);
  static std::string coalg_path, coalg_out;
  coalg_out.clear();
  auto* verify = coalgebra->add_subcommand("verify", "check the coalgebra laws");
  verify->fallthrough();
  verify->add_option("file", coalg_path)->required();
  verify->callback(
      [&] { action = [] { return do_coalgebra_verify(coalg_path); }; });
  auto* from_lens = coalgebra->add_subcommand("from-lens", "structure map of a lens");
  from_lens->fallthrough();
  from_lens->add_option("lens", coalg_path)->required();
  from_lens->add_option("--out", coalg_out);
  from_lens->callback([&] {
    action = [] { return do_coalgebra_from_lens(coalg_path, coalg_out); };
  });
  auto* to_lens = coalgebra->add_subcommand("to-lens", "lens carried by a coalgebra");
  to_lens->fallthrough();
  to_lens->add_option("coalgebra", coalg_path)->required();
  to_lens->add_option("--out", coalg_out);
  to_lens->callback([&] {
    action = [] { return do_coalgebra_to_lens(coalg_path, coalg_out); };
  });

  auto* coproduct = app.add_subcommand(
      "coproduct", "coproduct of two cofunctors or two lenses over a shared base");
  coproduct->fallthrough();
  static std::string copr_left, copr_right, copr_out;
  copr_out.clear();
  coproduct->add_option("left", copr_left)->required();
  coproduct->add_option("right", copr_right)->required();
  coproduct->add_option("--out", copr_out);
  coproduct->callback([&] {
    action = [] { return do_coproduct(copr_left, copr_right, copr_out); };
  });

  auto* triangles = app.add_subcommand(
      "triangles", "check both triangle identities of the adjunction");
  triangles->fallthrough();
  static std::string tri_cof, tri_lens;
  triangles->add_option("cofunctor", tri_cof)->required();
  triangles->add_option("lens", tri_lens)->required();
  triangles->callback(
      [&] { action = [] { return do_triangles(tri_cof, tri_lens); }; });

  auto* comonad = app.add_subcommand(
      "comonad-laws", "check counitality and coassociativity at a cofunctor");
  comonad->fallthrough();
  static std::string comonad_cof;
  comonad->add_option("cofunctor", comonad_cof)->required();
  comonad->callback(
      [&] { action = [] { return do_comonad_laws(comonad_cof); }; });

  auto* enumerate = app.add_subcommand(
      "enumerate", "brute-force enumeration: functors, cofunctors, lenses-over, coalgebras");
  enumerate->fallthrough();
  static std::string enum_what, enum_bounds, enum_out;
  static std::vector<std::string> enum_args;
  enum_bounds.clear();
  enum_out.clear();
  enum_args.clear();
  enumerate->add_option("what", enum_what)->required();
  enumerate->add_option("args", enum_args, "categories or a cofunctor file");
  enumerate->add_option("--bounds", enum_bounds, "<objects>,<morphisms>");
  enumerate->add_option("--out", enum_out, "write each element into this directory");
  enumerate->callback([&] {
    action = [] {
      return do_enumerate(enum_what, enum_args, enum_bounds, enum_out);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Report report = action ? action() : fail_with(Error{ErrCode::malformed_input,
                                                      "no command given"});
  out << (format == "json" ? render_json(report)
                           : render_text(report, all_witnesses));
  return report.exit_code();
}

}  // namespace deltacat::cli
