// Acceptance suite: one criterion per section, each printing a pass/fail
// line. All checks are exact; the only tolerances are the stated runtime
// budgets. Exit code is the number of failed criteria.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "deltacat/cli.hpp"
#include "deltacat/cofree.hpp"
#include "deltacat/fixtures.hpp"
#include "deltacat/io.hpp"
#include "deltacat/oracle.hpp"

using namespace deltacat;
namespace fs = std::filesystem;

namespace {

struct Checker {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::ostringstream log;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (failures <= 10) log << "    counterexample: " << what << "\n";
    }
  }
};

struct Dataset {
  std::vector<std::pair<std::string, FinCategory>> fixtures;
  // Enumerated cofunctors over every ordered fixture pair, and the lenses
  // over each of them.
  std::vector<Cofunctor> cofunctors;
  std::vector<std::vector<DeltaLens>> lenses_by_cofunctor;
  std::vector<DeltaLens> lenses;
  // Functors between every ordered fixture pair, for the proposition check.
  std::map<std::pair<std::string, std::string>, std::vector<Functor>> functors;
};

Dataset build_dataset() {
  Dataset data;
  data.fixtures = fixtures::all();
  for (const auto& [an, a] : data.fixtures) {
    for (const auto& [bn, b] : data.fixtures) {
      data.functors[{an, bn}] = oracle::enumerate_functors(a, b).value();
      for (auto& phi : oracle::enumerate_cofunctors(a, b).value()) {
        auto lenses = oracle::enumerate_lenses_over(phi).value();
        for (const auto& lens : lenses) data.lenses.push_back(lens);
        data.cofunctors.push_back(std::move(phi));
        data.lenses_by_cofunctor.push_back(std::move(lenses));
      }
    }
  }
  return data;
}

using Criterion = std::function<void(const Dataset&, Checker&)>;

// 1. Cofunctor and lens law suites hold exhaustively on everything the
//    oracle enumerates between the curated fixtures.
void criterion_law_suites(const Dataset& data, Checker& c) {
  for (const auto& [name, cat] : data.fixtures) {
    // Re-validate the fixture through the category checker by rebuilding a
    // raw description from its tables.
    RawCategory raw;
    raw.objects = cat.objects;
    for (const auto& m : cat.morphisms) {
      if (cat.is_identity(m)) continue;
      raw.morphisms.push_back({m, cat.src_of(m), cat.tgt_of(m)});
    }
    for (const auto& [key, gf] : cat.table) {
      if (cat.is_identity(key.first) || cat.is_identity(key.second)) continue;
      raw.compose.push_back({key.second, key.first, gf});
    }
    c.expect(check_category(raw).outcome.ok(), "fixture " + name);
  }
  c.expect(!data.cofunctors.empty(), "no cofunctors enumerated");
  c.expect(!data.lenses.empty(), "no lenses enumerated");
  std::size_t rows_swept = 0;
  for (const auto& phi : data.cofunctors) {
    c.expect(check_cofunctor(phi).ok(), "cofunctor law suite");
    rows_swept += phi.lifts.size();
  }
  for (const auto& lens : data.lenses) {
    c.expect(check_lens(lens).ok(), "lens law suite");
    rows_swept += lens.puts.size();
  }
  c.expect(rows_swept > 0, "no table rows were swept");
}

// 2. from_span inverts to_span on lift tables, and both span legs satisfy
//    their defining predicates.
void criterion_span_equivalence(const Dataset& data, Checker& c) {
  for (const auto& phi : data.cofunctors) {
    CofSpan span = to_span(phi);
    c.expect(is_bijective_on_objects(span.left), "left leg not boo");
    c.expect(is_discrete_opfibration(span.right), "right leg not dopf");
    c.expect(check_functor(span.left).ok() && check_functor(span.right).ok(),
             "span legs are not functors");
    auto back = from_span(span);
    c.expect(back.ok() && back.value() == phi, "span round trip");
  }
}

// 3. A pair (functor, lift table) is a lens exactly when the functor is a
//    morphism of cofunctors into the trivial cofunctor: both directions,
//    over every candidate including invalid ones.
void criterion_proposition(const Dataset& data, Checker& c) {
  std::size_t invalid_seen = 0;
  for (const auto& [an, a] : data.fixtures) {
    for (const auto& [bn, b] : data.fixtures) {
      Cofunctor trivial = identity_cofunctor(b);
      for (const auto& phi : data.cofunctors) {
        if (phi.source != a || phi.base != b) continue;
        for (const auto& f : data.functors.at({an, bn})) {
          DeltaLens candidate{f, phi.lifts};
          bool lens_ok = check_lens(candidate).ok();
          bool morphism_ok =
              check_cof_morphism(f, phi, trivial).outcome.ok();
          if (!lens_ok) ++invalid_seen;
          c.expect(lens_ok == morphism_ok, "proposition mismatch at " + an +
                                               " -/-> " + bn);
        }
      }
    }
  }
  c.expect(invalid_seen > 0, "no invalid candidates were exercised");
}

// 4. Pair-category counting: same objects as the source, and every hom-set
//    is the product of the source hom-set and the base hom-set.
void criterion_counting(const Dataset& data, Checker& c) {
  for (const auto& phi : data.cofunctors) {
    CofreeLens cofree = cofree_lens(phi);
    c.expect(cofree.apex().objects == phi.source.objects,
             "pair category changed the objects");
    std::size_t pairs = 0;
    for (const auto& a : phi.source.objects) {
      for (const auto& a2 : phi.source.objects) {
        std::size_t expected =
            phi.source.hom(a, a2).size() *
            phi.base.hom(phi.on_object(a), phi.on_object(a2)).size();
        pairs += expected;
        c.expect(cofree.apex().hom(a, a2).size() == expected,
                 "hom-set count mismatch");
      }
    }
    c.expect(cofree.apex().morphisms.size() == pairs, "total count mismatch");
  }
}

// 5. Triangle identities of the adjunction, by exact carrier equality.
void criterion_triangles(const Dataset& data, Checker& c) {
  for (const auto& lens : data.lenses) {
    c.expect(check_lens_triangle(lens, unit(lens).carrier) == std::nullopt,
             "lens-side triangle");
  }
  for (const auto& phi : data.cofunctors) {
    CofreeLens cofree = cofree_lens(phi);
    c.expect(check_cofunctor_triangle(phi, unit(cofree.lens).carrier) ==
                 std::nullopt,
             "cofunctor-side triangle");
  }
  for (std::size_t i = 0; i < data.cofunctors.size(); ++i) {
    for (const auto& lens : data.lenses_by_cofunctor[i]) {
      c.expect(check_triangle_identities(data.cofunctors[i], lens) ==
                   std::nullopt,
               "combined triangle check");
    }
  }
}

// 6. Comonad laws: both counitality equations and coassociativity.
void criterion_comonad(const Dataset& data, Checker& c) {
  for (const auto& phi : data.cofunctors) {
    for (const auto& law : comonad_law_checks(phi)) {
      c.expect(law.passed(), "comonad law " + law.law);
    }
  }
}

// 7. The main theorem at desk scale: coalgebra structures on phi biject
//    with lenses over phi, via the two mutually inverse conversions.
void criterion_main_theorem(const Dataset& data, Checker& c) {
  std::size_t coalgebras_total = 0;
  for (std::size_t i = 0; i < data.cofunctors.size(); ++i) {
    const Cofunctor& phi = data.cofunctors[i];
    const auto& lenses = data.lenses_by_cofunctor[i];
    auto coalgebras = oracle::enumerate_coalgebras(phi).value();
    coalgebras_total += coalgebras.size();
    c.expect(coalgebras.size() == lenses.size(),
             "coalgebra and lens counts differ");

    for (const auto& coalgebra : coalgebras) {
      DeltaLens lens = coalgebra_to_lens(coalgebra);
      bool found = false;
      for (const auto& known : lenses) found = found || known == lens;
      c.expect(found, "converted lens is not in the enumeration");
      c.expect(lens_to_coalgebra(lens) == coalgebra,
               "lens_to_coalgebra does not invert coalgebra_to_lens");
    }
    for (const auto& lens : lenses) {
      Coalgebra coalgebra = lens_to_coalgebra(lens);
      bool found = false;
      for (const auto& known : coalgebras)
        found = found || known == coalgebra;
      c.expect(found, "converted coalgebra is not in the enumeration");
      c.expect(coalgebra_to_lens(coalgebra) == lens,
               "coalgebra_to_lens does not invert lens_to_coalgebra");
    }
  }
  c.expect(coalgebras_total > 0, "no coalgebras were enumerated");
}

// 8. The forgetful functor maps lens coproducts to cofunctor coproducts on
//    the nose; injections validate; the mediating morphism against every
//    enumerated cocone exists uniquely. Uniqueness is brute-forced over
//    bases and sources among {one, two, loop}.
void criterion_coproducts(const Dataset& data, Checker& c) {
  for (std::size_t i = 0; i < data.lenses.size(); ++i) {
    for (std::size_t j = 0; j < data.lenses.size(); ++j) {
      const DeltaLens& l1 = data.lenses[i];
      const DeltaLens& l2 = data.lenses[j];
      if (!(l1.base() == l2.base())) continue;
      auto sum = coproduct_lenses(l1, l2);
      c.expect(sum.ok(), "lens coproduct failed");
      if (!sum.ok()) continue;
      auto cof_sum = coproduct_cofunctors(underlying_cofunctor(l1),
                                          underlying_cofunctor(l2));
      c.expect(cof_sum.ok() && underlying_cofunctor(sum.value().lens) ==
                                   cof_sum.value().cofunctor,
               "L does not map the coproduct on the nose");
      c.expect(check_lens_morphism(sum.value().inl.carrier, l1,
                                   sum.value().lens)
                   .outcome.ok(),
               "inl is not a lens morphism");
      c.expect(check_lens_morphism(sum.value().inr.carrier, l2,
                                   sum.value().lens)
                   .outcome.ok(),
               "inr is not a lens morphism");
    }
  }

  // Uniqueness against enumerated cocones.
  std::vector<std::string> small{"one", "two", "loop"};
  auto fixture_named = [&](const std::string& name) {
    for (const auto& [n, cat] : data.fixtures)
      if (n == name) return cat;
    return FinCategory{};
  };
  std::size_t cocones = 0;
  for (const auto& bn : small) {
    FinCategory base = fixture_named(bn);
    std::vector<Cofunctor> over_base;
    for (const auto& phi : data.cofunctors) {
      bool small_source = false;
      for (const auto& sn : small)
        small_source = small_source || phi.source == fixture_named(sn);
      if (phi.base == base && small_source) over_base.push_back(phi);
    }
    for (const auto& phi : over_base) {
      for (const auto& gamma : over_base) {
        auto sum = coproduct_cofunctors(phi, gamma);
        c.expect(sum.ok(), "cofunctor coproduct failed");
        if (!sum.ok()) continue;
        c.expect(check_cof_morphism(sum.value().inl.carrier, phi,
                                    sum.value().cofunctor)
                     .outcome.ok(),
                 "cofunctor inl invalid");
        c.expect(check_cof_morphism(sum.value().inr.carrier, gamma,
                                    sum.value().cofunctor)
                     .outcome.ok(),
                 "cofunctor inr invalid");
        for (const auto& delta : over_base) {
          // Coproduct sources exceed the default enumeration bounds.
          oracle::EnumBounds wide{6, 12};
          // Cocone legs.
          std::vector<CofMorphism> hs, ks;
          for (const auto& f :
               oracle::enumerate_functors(phi.source, delta.source, wide)
                   .value()) {
            auto m = check_cof_morphism(f, phi, delta);
            if (m.value) hs.push_back(*m.value);
          }
          for (const auto& f :
               oracle::enumerate_functors(gamma.source, delta.source, wide)
                   .value()) {
            auto m = check_cof_morphism(f, gamma, delta);
            if (m.value) ks.push_back(*m.value);
          }
          // Candidate mediators out of the coproduct.
          std::vector<CofMorphism> candidates;
          for (const auto& f :
               oracle::enumerate_functors(sum.value().cofunctor.source,
                                          delta.source, wide)
                   .value()) {
            auto m = check_cof_morphism(f, sum.value().cofunctor, delta);
            if (m.value) candidates.push_back(*m.value);
          }
          for (const auto& h : hs) {
            for (const auto& k : ks) {
              ++cocones;
              auto mediator = coproduct_cof_mediator(sum.value(), h, k);
              c.expect(mediator.ok(), "no mediating morphism");
              if (!mediator.ok()) continue;
              std::size_t matching = 0;
              bool is_the_mediator = false;
              for (const auto& m : candidates) {
                auto via_inl = compose_cof_morphisms(m, sum.value().inl);
                auto via_inr = compose_cof_morphisms(m, sum.value().inr);
                bool commutes = via_inl.ok() && via_inr.ok() &&
                                via_inl.value().carrier == h.carrier &&
                                via_inr.value().carrier == k.carrier;
                if (commutes) {
                  ++matching;
                  is_the_mediator =
                      is_the_mediator ||
                      m.carrier == mediator.value().carrier;
                }
              }
              c.expect(matching == 1, "mediating morphism is not unique");
              c.expect(is_the_mediator, "copair is not the mediator");
            }
          }
        }
      }
    }
  }
  c.expect(cocones > 0, "no cocones were enumerated");
}

// 9. Every lens factorizes as a bijective-on-objects unit followed by the
//    cofree lens on its underlying cofunctor, and reassembles exactly.
void criterion_factorization(const Dataset& data, Checker& c) {
  for (const auto& lens : data.lenses) {
    Factorization fact = factorize(lens);
    c.expect(is_bijective_on_objects(fact.first.carrier),
             "first factor is not bijective-on-objects");
    c.expect(fact.second == cofree_lens(underlying_cofunctor(lens)),
             "second factor is not the cofree lens");
    c.expect(check_lens_morphism(fact.first.carrier, lens, fact.second.lens)
                 .outcome.ok(),
             "unit is not a lens morphism");
    auto reassembled =
        compose_functors(fact.second.lens.get, fact.first.carrier);
    c.expect(reassembled.ok() && reassembled.value() == lens.get,
             "Get does not reassemble");
    bool puts_ok = true;
    for (const auto& [key, w] : lens.puts) {
      puts_ok = puts_ok && fact.first.carrier.on_morphism(w) ==
                               fact.second.lens.puts.at(key);
    }
    c.expect(puts_ok, "puts do not transport along the unit");
  }
}

// 10. CLI contract: parse -> serialize -> parse is the identity, canonical
//     bytes are stable across runs, and exit codes follow the contract.
void criterion_cli(const Dataset& data, Checker& c) {
  (void)data;
  fs::path dir = fs::temp_directory_path() / "deltacat_acceptance";
  fs::create_directories(dir);
  auto run = [](const std::vector<std::string>& args, std::string* out = nullptr) {
    std::ostringstream o, e;
    int code = cli::run(args, o, e);
    if (out) *out = o.str();
    return code;
  };
  auto spit = [](const fs::path& p, const std::string& s) {
    std::ofstream f(p, std::ios::binary);
    f << s;
  };

  DeltaLens lens = identity_lens(fixtures::two());
  fs::path lens_path = dir / "two.lens.json";
  spit(lens_path, io::serialize(lens));

  auto first = io::parse_lens(lens_path);
  c.expect(first.ok(), "parse failed");
  spit(lens_path, io::serialize(first.value()));
  auto second = io::parse_lens(lens_path);
  c.expect(second.ok() && first.value() == second.value(),
           "parse-serialize-parse is not the identity");

  fs::path out1 = dir / "a.lens.json";
  fs::path out2 = dir / "b.lens.json";
  fs::path cof_path = dir / "loop.cof.json";
  spit(cof_path, io::serialize(identity_cofunctor(fixtures::loop())));
  c.expect(run({"cofree", cof_path.string(), "--out", out1.string()}) == 0,
           "cofree run failed");
  c.expect(run({"cofree", cof_path.string(), "--out", out2.string()}) == 0,
           "cofree rerun failed");
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  };
  c.expect(slurp(out1) == slurp(out2), "canonical bytes are not stable");
  c.expect(run({"check", out1.string()}) == 0,
           "written artifact does not re-validate");

  c.expect(run({"check", lens_path.string()}) == 0, "valid lens should exit 0");

  DeltaLens broken = lens;
  broken.puts[{"0", "u"}] = "id_0";
  fs::path broken_path = dir / "broken.lens.json";
  spit(broken_path, io::serialize(broken));
  c.expect(run({"check", broken_path.string()}) == 1,
           "law failure should exit 1");

  fs::path junk_path = dir / "junk.lens.json";
  spit(junk_path, "{{{");
  c.expect(run({"check", junk_path.string()}) == 2,
           "malformed input should exit 2");

  // Fault-injected coalgebra: carrier crosses the fibres of a collapsing
  // cofunctor, passing the morphism conditions but failing the counit law.
  Cofunctor phi{fixtures::discrete2(),
                fixtures::one(),
                {{"0", "*"}, {"1", "*"}},
                {{{"0", "id_*"}, "id_0"}, {{"1", "id_*"}, "id_1"}}};
  CofreeLens cofree = cofree_lens(phi);
  Functor crossed{phi.source, cofree.apex(), {{"0", "1"}, {"1", "0"}},
                  {{"id_0", cofree.apex().id_of("1")},
                   {"id_1", cofree.apex().id_of("0")}}};
  auto m = validate_cof_morphism(crossed, phi, underlying_cofunctor(cofree.lens));
  c.expect(m.ok(), "fault injection setup failed");
  if (m.ok()) {
    fs::path bad_path = dir / "bad.coalg.json";
    spit(bad_path, io::serialize(Coalgebra{phi, m.value()}));
    std::string output;
    c.expect(run({"coalgebra", "verify", bad_path.string()}, &output) == 1,
             "coalgebra law failure should exit 1");
    c.expect(output.find("CounitLawViolation") != std::string::npos,
             "missing counit violation witness");
  }

  fs::remove_all(dir);
}

struct Spec {
  std::string name;
  Criterion run;
  double budget_seconds;  // 0 = no stated budget
};

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;

  auto t0 = clock::now();
  Dataset data = build_dataset();
  double setup = std::chrono::duration<double>(clock::now() - t0).count();
  std::cout << "enumerated " << data.cofunctors.size() << " cofunctors and "
            << data.lenses.size() << " lenses over "
            << data.fixtures.size() << " fixtures in " << setup << "s\n";

  std::vector<Spec> specs{
      {"1 law suites hold exhaustively", criterion_law_suites, 5.0},
      {"2 span equivalence", criterion_span_equivalence, 0},
      {"3 lens = morphism into trivial cofunctor", criterion_proposition, 0},
      {"4 pair-category counting law", criterion_counting, 0},
      {"5 triangle identities", criterion_triangles, 10.0},
      {"6 comonad laws", criterion_comonad, 0},
      {"7 coalgebras biject with lenses", criterion_main_theorem, 30.0},
      {"8 coproduct creation", criterion_coproducts, 0},
      {"9 factorization through the cofree lens", criterion_factorization, 0},
      {"10 CLI round-trip and exit codes", criterion_cli, 0},
  };

  int failed = 0;
  for (const auto& spec : specs) {
    Checker checker;
    auto start = clock::now();
    spec.run(data, checker);
    double elapsed = std::chrono::duration<double>(clock::now() - start).count();
    bool in_budget = spec.budget_seconds == 0 || elapsed < spec.budget_seconds;
    bool ok = checker.failures == 0 && in_budget;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << spec.name
              << " (" << checker.checks << " checks, " << elapsed << "s";
    if (spec.budget_seconds > 0) std::cout << " / budget " << spec.budget_seconds << "s";
    std::cout << ")\n";
    if (!in_budget) std::cout << "    exceeded runtime budget\n";
    std::cout << checker.log.str();
    if (!ok) ++failed;
  }
  return failed;
}
