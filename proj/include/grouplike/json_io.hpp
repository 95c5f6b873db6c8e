#pragma once

#include <string>

#include <json.hpp>

#include "grouplike/bibundle.hpp"
#include "grouplike/circlegeom.hpp"
#include "grouplike/groupoid.hpp"
#include "grouplike/nctorus.hpp"
#include "grouplike/scalar.hpp"
#include "grouplike/symprel.hpp"

namespace grouplike {

// Insertion-ordered so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings, angles as coefficient objects (zero a1/a2
// coefficients are omitted). All from_json functions throw ParseError on
// malformed or ill-typed input.

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json angle_to_json(const Angle& a);
Angle angle_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);

// Either the explicit table form {objects, arrows, units, inv, comp} or the
// action shorthand {action: {group, carrier, act}}.
Json groupoid_to_json(const FiniteGroupoid& g);
GroupoidPtr groupoid_from_json(const Json& j);

// Embeds both foot groupoids inline.
Json bibundle_to_json(const Bibundle& b);
Bibundle bibundle_from_json(const Json& j);

Json symp_space_to_json(const SympSpace& s);
SympSpace symp_space_from_json(const Json& j);

Json relation_to_json(const LinRelation& r);
LinRelation relation_from_json(const Json& j);

Json module_class_to_json(const ModuleClass& c);
ModuleClass module_class_from_json(const Json& j);

Json circle_to_json(const TorusCircle& c);
TorusCircle circle_from_json(const Json& j);

Json validation_to_json(const ValidationReport& r);
Json stacky_report_to_json(const StackyReport& r);
Json zigzag_report_to_json(const ZigZagReport& r);
Json classification_to_json(const TensorClassification& t);
Json agreement_to_json(const AgreementReport& r);

// Parses text (ParseError on bad JSON) / loads a file (IoError if unreadable).
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

} // namespace grouplike
