#pragma once

#include <string>

#include "semisplit/fixture.hpp"
#include "semisplit/ring.hpp"

namespace testsupport {

inline semisplit::AmalgamPtr fixture(const std::string& name) {
  return semisplit::resolve_fixture(name, SEMISPLIT_FIXTURE_DIR);
}

inline semisplit::RingTag tag(const semisplit::AmalgamPtr& g, semisplit::RingKind k,
                              semisplit::CoeffRing c = semisplit::CoeffRing::integers()) {
  return semisplit::RingTag{k, g, c};
}

inline const char* const kFixtures[] = {"FIX-D", "FIX-Q", "FIX-S", "FIX-G0", "FIX-N"};

}  // namespace testsupport
