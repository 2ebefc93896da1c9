#pragma once

#include <string>
#include <vector>

#include "psifloor/diagram.hpp"
#include "psifloor/relative.hpp"

namespace psifloor {

/// The worked example of degree 5 and type (7,0,1,1).
PsiFloorDiagram example_diagram();
/// Its pictured edge choice: the first edge at the second floor, both ends at the third.
EdgeChoice example_choice();
/// The relative data alpha = (1), beta = (2,1) on the same diagram.
CompatiblePair example_pair();
RelativeEdgeChoice example_relative_choice();

struct FixtureResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

std::vector<std::string> fixture_names();

/// Runs every fixture whose name contains `filter` (all when empty).
std::vector<FixtureResult> run_fixtures(const std::string& filter = "");

}  // namespace psifloor
