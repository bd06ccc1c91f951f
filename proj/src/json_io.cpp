#include "skein/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace skein {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw ParseError("schema error at " + where + ": " + what);
}

int get_int(const Json& obj, const char* key, const std::string& where, std::optional<int> fallback = std::nullopt) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    schema(where, std::string("missing field \"") + key + "\"");
  }
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) schema(where + "." + key, "expected an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& v, const std::string& where) {
  if (!v.is_array()) schema(where, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_number_integer()) schema(where + "[" + std::to_string(k) + "]", "expected an integer");
    out.push_back(v[k].get<int>());
  }
  return out;
}

// Direction (+1 up) of an endpoint given "in"/"out" or +-1 as an up/down flag.
std::vector<int> endpoint_list(const Json& v, const std::string& where, bool top) {
  if (!v.is_array()) schema(where, "expected an array of \"in\"/\"out\" markers");
  std::vector<int> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    const Json& x = v[k];
    if (x.is_string()) {
      const auto s = x.get<std::string>();
      if (s != "in" && s != "out") schema(at, "expected \"in\" or \"out\"");
      const bool inward = s == "in";
      out.push_back(inward != top ? 1 : -1);
    } else if (x.is_number_integer() && (x.get<int>() == 1 || x.get<int>() == -1)) {
      out.push_back(x.get<int>());
    } else {
      schema(at, "expected \"in\", \"out\", 1 or -1");
    }
  }
  return out;
}

Event event_from_json(const Json& e, const std::string& where) {
  if (!e.is_object()) schema(where, "expected an object");
  if (!e.contains("kind") || !e.at("kind").is_string()) schema(where + ".kind", "expected a string");
  const auto kind = e.at("kind").get<std::string>();
  if (kind == "cup") return Event::cup(get_int(e, "pos", where));
  if (kind == "cap") return Event::cap(get_int(e, "pos", where));
  if (kind == "cross") {
    const int pos = get_int(e, "pos", where);
    if (!e.contains("over") || !e.at("over").is_string()) schema(where + ".over", "expected \"L\" or \"R\"");
    const auto over = e.at("over").get<std::string>();
    if (over != "L" && over != "R") schema(where + ".over", "expected \"L\" or \"R\"");
    return Event::cross(pos, over == "L" ? Over::left : Over::right);
  }
  if (kind == "punctures") {
    if (!e.contains("gaps")) schema(where, "missing field \"gaps\"");
    return Event::punctures(int_list(e.at("gaps"), where + ".gaps"));
  }
  schema(where + ".kind", "unknown event kind \"" + kind + "\"");
}

Json coeff_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

}  // namespace

SlicedDiagram diagram_from_json(const Json& j) {
  if (!j.is_object()) schema("top level", "expected a diagram object");
  SlicedDiagram d;
  d.bottom = get_int(j, "bottom", "diagram", 0);
  d.top = get_int(j, "top", "diagram", 0);
  if (!j.contains("events") || !j.at("events").is_array()) schema("diagram.events", "expected an array");
  const Json& events = j.at("events");
  for (std::size_t k = 0; k < events.size(); ++k)
    d.events.push_back(event_from_json(events[k], "events[" + std::to_string(k) + "]"));
  validate(d);
  if (!j.contains("orientations") || j.at("orientations").is_null()) return d;
  const Json& o = j.at("orientations");
  if (o.is_array()) {
    d.orientation = int_list(o, "orientations");
    validate(d);
    return d;
  }
  if (!o.is_object()) schema("orientations", "expected an array of signs or an endpoint object");
  const auto bottom = o.contains("bottom") ? endpoint_list(o.at("bottom"), "orientations.bottom", false)
                                           : std::vector<int>{};
  const auto top = o.contains("top") ? endpoint_list(o.at("top"), "orientations.top", true) : std::vector<int>{};
  const auto loops = o.contains("loops") ? int_list(o.at("loops"), "orientations.loops") : std::vector<int>{};
  return orient_from_endpoints(std::move(d), bottom, top, loops);
}

Json diagram_to_json(const SlicedDiagram& d) {
  Json events = Json::array();
  for (const Event& e : d.events) {
    Json x;
    switch (e.kind) {
      case EventKind::cup: x = {{"kind", "cup"}, {"pos", e.pos}}; break;
      case EventKind::cap: x = {{"kind", "cap"}, {"pos", e.pos}}; break;
      case EventKind::cross:
        x = {{"kind", "cross"}, {"pos", e.pos}, {"over", e.over == Over::left ? "L" : "R"}};
        break;
      case EventKind::punctures: x = {{"kind", "punctures"}, {"gaps", e.gaps}}; break;
    }
    events.push_back(std::move(x));
  }
  Json j = {{"bottom", d.bottom}, {"top", d.top}, {"events", std::move(events)}};
  if (d.orientation) j["orientations"] = *d.orientation;
  return j;
}

SlicedDiagram parse_diagram_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    const auto last_nl = text.rfind('\n', upto == 0 ? 0 : upto - 1);
    const auto column = last_nl == std::string::npos ? upto + 1 : upto - last_nl;
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column));
  }
  return diagram_from_json(j);
}

SlicedDiagram parse_diagram_stream(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_diagram_text(text);
}

SlicedDiagram parse_diagram_file(const std::string& path) {
  if (path == "-") return parse_diagram_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return parse_diagram_stream(in);
  } catch (const ValidationError&) {
    throw;
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json poly_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, coeff_to_json(c)}));
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) schema("polynomial", "expected an array of [exponent, coefficient] pairs");
  LaurentPoly p;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      schema("polynomial", "expected [exponent, coefficient]");
    Integer c;
    if (t[1].is_number_integer()) c = t[1].get<std::int64_t>();
    else if (t[1].is_string()) c = Integer(t[1].get<std::string>());
    else schema("polynomial", "coefficient must be an integer or a decimal string");
    p.add_term(t[0].get<int>(), c);
  }
  return p;
}

Json multicurve_to_json(const LaminarMulticurve& m) {
  if (!m.matching.empty()) {
    Json pairs = Json::array();
    for (const auto& [a, b] : m.matching) pairs.push_back(Json::array({a, b}));
    return {{"matching", pairs}};
  }
  return {{"curve", m.curves}};
}

Json bracket_to_json(const BracketElement& b) {
  Json terms = Json::array();
  for (const auto& [key, v] : b.terms()) {
    Json t = multicurve_to_json(key);
    t["coeff"] = poly_to_json(v.value());
    t["text"] = v.to_string();
    terms.push_back(std::move(t));
  }
  return {{"reduction", b.reduction()}, {"terms", terms}};
}

Json homclass_to_json(const HomClass& c) { return {{"free", c.free_part}, {"torsion", c.torsion_part}}; }

Json kappa_to_json(const KappaImage& k) {
  return {{"class", homclass_to_json(k.alpha)},
          {"mod2_tag", k.tag},
          {"omega", k.omega},
          {"reduction_index", k.reduction},
          {"writhe", k.writhe},
          {"value", bracket_to_json(k.value)},
          {"reference_tangle", diagram_to_json(k.reference)}};
}

Json przytycki_to_json(const PrzytyckiClass& p) {
  return {{"class", homclass_to_json(p.alpha)},
          {"omega", p.omega},
          {"modulus", 2 * p.omega},
          {"exponent", p.exponent},
          {"reference_tangle", diagram_to_json(p.reference)}};
}

ManifoldHomologyData homology_from_json(const Json& j) {
  if (!j.is_object()) schema("manifold data", "expected an object with r, torsion, s, iota, v0");
  ManifoldHomologyData d;
  d.free_rank = get_int(j, "r", "manifold data");
  d.h2_rank = get_int(j, "s", "manifold data", 0);
  if (j.contains("torsion")) d.torsion = int_list(j.at("torsion"), "manifold data.torsion");
  if (j.contains("iota")) {
    const Json& rows = j.at("iota");
    if (!rows.is_array()) schema("manifold data.iota", "expected an r x s integer matrix");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::vector<long> row;
      for (int x : int_list(rows[r], "manifold data.iota[" + std::to_string(r) + "]")) row.push_back(x);
      d.pairing.push_back(std::move(row));
    }
  } else {
    d.pairing.assign(d.free_rank, std::vector<long>(d.h2_rank, 0));
  }
  if (j.contains("v0")) {
    for (int x : int_list(j.at("v0"), "manifold data.v0")) d.base_pairing.push_back(x);
  } else {
    d.base_pairing.assign(d.h2_rank, 0);
  }
  d.label = j.value("label", std::string("custom"));
  d.check();
  return d;
}

}  // namespace skein
