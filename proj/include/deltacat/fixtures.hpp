#pragma once

#include <string>
#include <utility>
#include <vector>

#include "deltacat/fincat.hpp"

namespace deltacat::fixtures {

// The curated fixture set: every fixture validates, and tests and the
// acceptance suite quantify over this list.

FinCategory one();              // single object "*"
FinCategory two();              // interval: u : 0 -> 1
FinCategory loop();             // one object, idempotent endomorphism e
FinCategory discrete2();        // two objects, identities only
FinCategory parallel_pair();    // s, t : 0 -> 1
FinCategory composable_pair();  // f : 0 -> 1, g : 1 -> 2, gf = g after f

std::vector<std::pair<std::string, FinCategory>> all();

}  // namespace deltacat::fixtures
