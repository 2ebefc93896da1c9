#pragma once

#include <json.hpp>

#include "psifloor/engine.hpp"

namespace psifloor {

using Json = nlohmann::json;

/// {"vertices":[[d,a],...],"edges":[[src,tgt,w],...]}
Json to_json(const PsiFloorDiagram& diagram);
PsiFloorDiagram diagram_from_json(const Json& j);

/// One {"vertex":v,"chosen_edges":[...],"chosen_ends":n} per floor.
Json to_json(const PsiFloorDiagram& diagram, const EdgeChoice& choice);

Json to_json(const InvariantKey& key);
InvariantKey key_from_json(const Json& j);

Json to_json(const ComputationResult& result);

}  // namespace psifloor
