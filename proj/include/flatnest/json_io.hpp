#ifndef FLATNEST_JSON_IO_HPP
#define FLATNEST_JSON_IO_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "flatnest/building.hpp"
#include "flatnest/complex.hpp"
#include "flatnest/error.hpp"
#include "flatnest/fan.hpp"
#include "flatnest/ground.hpp"
#include "flatnest/oracle.hpp"

namespace flatnest {

using Json = nlohmann::ordered_json;

/// Numbers when they fit in 64 bits, decimal strings otherwise.
inline Json integer_to_json(const Integer& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) fail(ErrorKind::parse, "coefficients must be nonnegative");
    return Integer(v);
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorKind::parse, "malformed integer '" + s + "'");
    return Integer(s);
  }
  fail(ErrorKind::parse, "expected an integer");
}

/// {label: coefficient} in ground order, zero entries omitted.
inline Json sum_to_json(const GroundSet& g, const SumVec& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v[i] != 0) out[g.label(i)] = integer_to_json(v[i]);
  return out;
}

/// Accepts the object form or the symbolic form "2x+y".
inline SumVec sum_from_json(const GroundSet& g, const Json& j) {
  if (j.is_string()) return parse_sum(g, j.get<std::string>());
  if (!j.is_object()) fail(ErrorKind::parse, "a sum is a string or an object of coefficients");
  std::vector<Integer> coeffs(g.size(), 0);
  for (const auto& [label, value] : j.items()) {
    auto idx = g.find(label);
    if (!idx) fail(ErrorKind::parse, "unknown label '" + label + "'");
    coeffs[*idx] = integer_from_json(value);
  }
  for (const auto& c : coeffs)
    if (c != 0) return SumVec(std::move(coeffs));
  fail(ErrorKind::parse, "a sum needs a positive coefficient");
}

inline Json face_to_json(const GroundSet& g, const Face& f) {
  Json out = Json::array();
  for (const auto& v : f) out.push_back(sum_to_json(g, v));
  return out;
}

inline Face face_from_json(const GroundSet& g, const Json& j) {
  if (!j.is_array()) fail(ErrorKind::parse, "a face is an array of sums");
  std::vector<SumVec> out;
  for (const auto& v : j) out.push_back(sum_from_json(g, v));
  Face f(out);
  if (f.size() != out.size()) fail(ErrorKind::parse, "a face lists a vertex twice");
  return f;
}

inline Json bases_to_json(const GroundSet& g, const Complex& c) {
  Json out = Json::array();
  for (const auto& b : c.bases()) out.push_back(face_to_json(g, b));
  return out;
}

inline Json atoms_to_json(const GroundSet& g) {
  Json out = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back(g.label(i));
  return out;
}

inline GroundSet atoms_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::parse, "\"atoms\" must be an array of labels");
  std::vector<std::string> labels;
  for (const auto& a : j) {
    if (!a.is_string()) fail(ErrorKind::parse, "atom labels are strings");
    labels.push_back(a.get<std::string>());
  }
  try {
    return GroundSet(std::move(labels));
  } catch (const Error& e) {
    throw Error(ErrorKind::parse, e.what());
  }
}

/// {"atoms": [...], "bases": [[sum, ...], ...]}
inline Json complex_to_json(const GroundSet& g, const Complex& c) {
  Json out = Json::object();
  out["atoms"] = atoms_to_json(g);
  out["bases"] = bases_to_json(g, c);
  return out;
}

inline std::pair<GroundSet, Complex> complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j.contains("bases"))
    fail(ErrorKind::parse, "a complex is an object with \"atoms\" and \"bases\"");
  auto g = atoms_from_json(j["atoms"]);
  if (!j["bases"].is_array()) fail(ErrorKind::parse, "\"bases\" must be an array");
  std::vector<Face> faces;
  for (const auto& f : j["bases"]) faces.push_back(face_from_json(g, f));
  Complex c(std::move(faces));
  return {std::move(g), std::move(c)};
}

inline Json hypergraph_to_json(const GroundSet& g, const Hypergraph<SumVec>& h) {
  Json out = Json::array();
  for (const auto& m : h) out.push_back(face_to_json(g, m));
  return out;
}

inline Json flat_to_json(const GroundSet& g, const FlatBuildingSet& d) {
  Json out = Json::array();
  for (const auto& v : d) out.push_back(sum_to_json(g, v));
  return out;
}

/// {"members": [sum, ...]}
inline Json flat_building_set_to_json(const GroundSet& g, const FlatBuildingSet& d) {
  Json out = Json::object();
  out["members"] = flat_to_json(g, d);
  return out;
}

inline Json literal_bases_to_json(const GroundSet& g, const LiteralComplex& c) {
  Json out = Json::array();
  for (const auto& b : c.bases()) {
    Json face = Json::array();
    for (const auto& v : b) face.push_back(render(g, v));
    out.push_back(std::move(face));
  }
  return out;
}

inline Json fan_to_json(const FanData& fan) {
  Json out = Json::object();
  Json rays = Json::array();
  for (const auto& r : fan.rays) {
    Json ray = Json::array();
    for (const auto& x : r) ray.push_back(integer_to_json(x));
    rays.push_back(std::move(ray));
  }
  out["rays"] = std::move(rays);
  out["cones"] = fan.cones;
  return out;
}

inline Json witness_to_json(const GroundSet& g, const FaithfulnessWitness& w) {
  auto coeffs = [](const std::vector<Rational>& k) {
    Json out = Json::array();
    for (const auto& x : k) out.push_back(x.str());
    return out;
  };
  Json out = Json::object();
  out["relation"] = describe_witness(g, w);
  out["lhs"] = face_to_json(g, w.lhs);
  out["lhs_coeffs"] = coeffs(w.lhs_coeffs);
  out["rhs"] = face_to_json(g, w.rhs);
  out["rhs_coeffs"] = coeffs(w.rhs_coeffs);
  return out;
}

/// Two-space indentation, newline-terminated.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace flatnest

#endif  // FLATNEST_JSON_IO_HPP
