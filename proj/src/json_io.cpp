#include "goi/json_io.hpp"

namespace goi {

json complex_to_json(const cplx& c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error("complex value must be a [re, im] pair");
  return cplx{j[0].get<double>(), j[1].get<double>()};
}

json to_json(const FdSpace& s) {
  return json{{"label", s.label}, {"dim", s.dim}, {"dual", s.dual}};
}

FdSpace fdspace_from_json(const json& j) {
  FdSpace s;
  s.label = j.at("label").get<std::string>();
  s.dim = j.at("dim").get<std::size_t>();
  s.dual = j.value("dual", false);
  if (s.dim < 1) throw Error("factor dim must be >= 1");
  return s;
}

json to_json(const TensorSpace& s) {
  json arr = json::array();
  for (const auto& f : s.factors) arr.push_back(to_json(f));
  return arr;
}

TensorSpace space_from_json(const json& j) {
  TensorSpace s;
  for (const auto& f : j) s.factors.push_back(fdspace_from_json(f));
  return s;
}

json to_json(const Vec& v) {
  json coords = json::array();
  for (const cplx& c : v.coords) coords.push_back(complex_to_json(c));
  return json{{"space", to_json(v.space)}, {"coords", coords}};
}

Vec vec_from_json(const json& j) {
  const TensorSpace space = space_from_json(j.at("space"));
  std::vector<cplx> coords;
  for (const auto& c : j.at("coords")) coords.push_back(complex_from_json(c));
  return make_vec(space, std::move(coords));
}

json to_json(const LinMap& f) {
  json entries = json::array();
  for (const cplx& c : f.a) entries.push_back(complex_to_json(c));
  return json{{"dom", to_json(f.dom)}, {"cod", to_json(f.cod)},
              {"entries", entries}};
}

LinMap map_from_json(const json& j) {
  const TensorSpace dom = space_from_json(j.at("dom"));
  const TensorSpace cod = space_from_json(j.at("cod"));
  std::vector<cplx> entries;
  for (const auto& c : j.at("entries")) entries.push_back(complex_from_json(c));
  return make_map(dom, cod, std::move(entries));
}

json to_json(const Rel& r) {
  json pairs = json::array();
  for (const auto& [i, j2] : r.pairs) pairs.push_back(json::array({i, j2}));
  return json{{"dom", r.dom}, {"cod", r.cod}, {"pairs", pairs}};
}

Rel rel_from_json(const json& j) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (const auto& p : j.at("pairs"))
    pairs.emplace_back(p[0].get<std::uint32_t>(), p[1].get<std::uint32_t>());
  return make_rel(j.at("dom").get<std::vector<std::string>>(),
                  j.at("cod").get<std::vector<std::string>>(), std::move(pairs));
}

json to_json(const Carrier& c) {
  return json{{"label", c.label}, {"elems", c.elems}};
}

Carrier carrier_from_json(const json& j) {
  return Carrier{j.at("label").get<std::string>(),
                 j.at("elems").get<std::vector<std::string>>()};
}

json to_json(const TimesObj& o) {
  json arr = json::array();
  for (const auto& a : o.atoms) arr.push_back(to_json(a));
  return arr;
}

TimesObj times_obj_from_json(const json& j) {
  TimesObj o;
  for (const auto& a : j) o.atoms.push_back(carrier_from_json(a));
  return o;
}

json to_json(const PlusObj& o) {
  json arr = json::array();
  for (const auto& a : o.atoms) arr.push_back(to_json(a));
  return arr;
}

PlusObj plus_obj_from_json(const json& j) {
  PlusObj o;
  for (const auto& a : j) o.atoms.push_back(carrier_from_json(a));
  return o;
}

json to_json(const Multirel& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dom.size(); ++i) {
    json row = json::array();
    for (std::size_t j2 = 0; j2 < m.cod.size(); ++j2) row.push_back(m.at(i, j2));
    rows.push_back(row);
  }
  return json{{"dom", m.dom}, {"cod", m.cod}, {"weights", rows}};
}

Multirel multirel_from_json(const json& j) {
  const auto dom = j.at("dom").get<std::vector<std::string>>();
  const auto cod = j.at("cod").get<std::vector<std::string>>();
  std::vector<double> w;
  w.reserve(dom.size() * cod.size());
  for (const auto& row : j.at("weights"))
    for (const auto& x : row) w.push_back(x.get<double>());
  return make_multirel(dom, cod, std::move(w));
}

json to_json(const AxiomCheck& c) {
  json out{{"axiom", c.axiom}, {"category", c.category}, {"samples", c.samples},
           {"passed", c.passed}};
  if (!c.passed) out["counterexample"] = c.counterexample;
  return out;
}

json to_json(const GoiFdvec::Object& o) {
  return json{{"pos", to_json(o.pos)}, {"neg", to_json(o.neg)}};
}

json to_json(const GoiFdvec::Morphism& m) {
  return json{{"src", to_json(m.src)}, {"dst", to_json(m.dst)},
              {"under", to_json(m.under)}};
}

GoiFdvec::Object goi_fdvec_object_from_json(const json& j) {
  return GoiFdvec::Object{space_from_json(j.at("pos")),
                          space_from_json(j.at("neg"))};
}

GoiFdvec::Morphism goi_fdvec_from_json(const json& j) {
  return GoiFdvec::make(goi_fdvec_object_from_json(j.at("src")),
                        goi_fdvec_object_from_json(j.at("dst")),
                        map_from_json(j.at("under")));
}

json to_json(const GoiRelTimes::Morphism& m) {
  return json{{"src", json{{"pos", to_json(m.src.pos)}, {"neg", to_json(m.src.neg)}}},
              {"dst", json{{"pos", to_json(m.dst.pos)}, {"neg", to_json(m.dst.neg)}}},
              {"under", to_json(m.under)}};
}

json to_json(const GoiRelPlus::Morphism& m) {
  return json{{"src", json{{"pos", to_json(m.src.pos)}, {"neg", to_json(m.src.neg)}}},
              {"dst", json{{"pos", to_json(m.dst.pos)}, {"neg", to_json(m.dst.neg)}}},
              {"under", to_json(m.under)}};
}

json to_json(const MeasurementOutcome& o) {
  json out{{"outcome", o.outcome}, {"probability", o.probability}};
  if (o.post_state) out["post_state"] = to_json(*o.post_state);
  return out;
}

json to_json(const DemoReport& r) {
  json out{{"failure_branch", r.failure_branch},
           {"probability", r.probability},
           {"proportional_to_expected", r.proportional_to_expected},
           {"scalar", complex_to_json(r.scalar)}};
  out["output_factor"] = r.output_factor ? to_json(*r.output_factor) : json{};
  return out;
}

}  // namespace goi
