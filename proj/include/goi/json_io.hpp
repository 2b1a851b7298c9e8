#pragma once
// JSON forms for every value the CLI reads or writes.
//
//   matrix   {"dom": [{"label","dim","dual"}...], "cod": [...],
//             "entries": [[re,im],...]}   row-major in (input, output)
//   vector   {"space": [...], "coords": [[re,im],...]}
//   relation {"dom": ["a","b"], "cod": ["c"], "pairs": [[0,0],[1,0]]}
//   multirel {"dom": [...], "cod": [...], "weights": [[...],...]}
//   goi      {"src": {"pos":..., "neg":...}, "dst": {...}, "under": ...}

#include <json.hpp>

#include "goi/category.hpp"
#include "goi/interaction.hpp"
#include "goi/projector.hpp"
#include "goi/rel_bridge.hpp"

namespace goi {

using json = nlohmann::json;

json to_json(const FdSpace& s);
FdSpace fdspace_from_json(const json& j);
json to_json(const TensorSpace& s);
TensorSpace space_from_json(const json& j);

json to_json(const Vec& v);
Vec vec_from_json(const json& j);
json to_json(const LinMap& f);
LinMap map_from_json(const json& j);

json to_json(const Rel& r);
Rel rel_from_json(const json& j);

json to_json(const Carrier& c);
Carrier carrier_from_json(const json& j);
json to_json(const TimesObj& o);
TimesObj times_obj_from_json(const json& j);
json to_json(const PlusObj& o);
PlusObj plus_obj_from_json(const json& j);

json to_json(const Multirel& m);
Multirel multirel_from_json(const json& j);

json to_json(const AxiomCheck& c);

json to_json(const GoiFdvec::Object& o);
json to_json(const GoiFdvec::Morphism& m);
GoiFdvec::Object goi_fdvec_object_from_json(const json& j);
GoiFdvec::Morphism goi_fdvec_from_json(const json& j);
json to_json(const GoiRelTimes::Morphism& m);
json to_json(const GoiRelPlus::Morphism& m);

json to_json(const DemoReport& r);
json to_json(const MeasurementOutcome& o);

json complex_to_json(const cplx& c);
cplx complex_from_json(const json& j);

}  // namespace goi
