#include "deltacat/fixtures.hpp"

namespace deltacat::fixtures {

namespace {

FinCategory build(const RawCategory& raw) {
  auto result = validate_category(raw);
  // Fixtures are compiled in; a failure here is a programming error.
  return std::move(result).take();
}

}  // namespace

FinCategory one() { return build({{"*"}, {}, {}}); }

FinCategory two() { return build({{"0", "1"}, {{"u", "0", "1"}}, {}}); }

FinCategory loop() {
  return build({{"*"}, {{"e", "*", "*"}}, {{"e", "e", "e"}}});
}

FinCategory discrete2() { return build({{"0", "1"}, {}, {}}); }

FinCategory parallel_pair() {
  return build({{"0", "1"}, {{"s", "0", "1"}, {"t", "0", "1"}}, {}});
}

FinCategory composable_pair() {
  return build({{"0", "1", "2"},
                {{"f", "0", "1"}, {"g", "1", "2"}, {"gf", "0", "2"}},
                {{"f", "g", "gf"}}});
}

std::vector<std::pair<std::string, FinCategory>> all() {
  return {{"one", one()},
          {"two", two()},
          {"loop", loop()},
          {"discrete2", discrete2()},
          {"parallel-pair", parallel_pair()},
          {"composable-pair", composable_pair()}};
}

}  // namespace deltacat::fixtures
