#pragma once

/// \file
/// Text and JSON renderings of classifications, witnesses and suite reports.
/// JSON keys are emitted in a fixed order.

#include <string>

#include <nlohmann/json.hpp>

#include "topoideal/classes.hpp"
#include "topoideal/maps.hpp"
#include "topoideal/spacefile.hpp"
#include "topoideal/verify.hpp"

namespace topoideal {

using Json = nlohmann::ordered_json;

/// One `name=true|false` line per class, in enum order.
std::string classes_text(ClassVector v);
/// Image-side classes are listed only when the map carries a codomain ideal.
std::string map_classes_text(const SpaceMap& f, MapClassVector v);

Json classes_json(const NamedSpace& s, SubsetMask a, ClassVector v);
Json map_classes_json(const NamedSpace& dom, const NamedMap& m, MapClassVector v);

/// Space-file text of every structure in the witness plus its trace.
std::string witness_text(const Witness& w);
Json witness_json(const Witness& w);

/// Summary table followed by the witnesses of failing checks.
std::string report_text(const Report& r);
Json report_json(const Report& r);

/// The pre-I-open and I-open families of a space.
std::string tabulate_text(const NamedSpace& s);
Json tabulate_json(const NamedSpace& s);

} // namespace topoideal
