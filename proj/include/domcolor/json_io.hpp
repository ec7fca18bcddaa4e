#pragma once

#include <json.hpp>

#include "domcolor/coloring.hpp"
#include "domcolor/solvers.hpp"
#include "domcolor/survey.hpp"
#include "domcolor/theory.hpp"

namespace domcolor {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "domcolor/1";

// Field order is fixed by insertion order; output is byte-stable for equal
// inputs. Colourings are normalised and written in the digit line format.

Json to_json(const Coloring& c);
Json to_json(const ViolationReport& r);
Json to_json(const ColoringResult& r);
Json to_json(const InvariantReport& r);
Json to_json(const BoundRecord& r);
Json to_json(const BoundsReport& r);
Json to_json(const SurveyReport& r);
Json to_json(const FamilyCheckReport& r);

Json vertex_set_json(VertexSet s);

}  // namespace domcolor
