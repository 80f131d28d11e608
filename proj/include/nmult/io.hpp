// JSON (de)serialization for ideals, regions, graded systems and reports.
// All numeric payloads are exact numerator/denominator pairs; a decimal
// rendering rides along for display only. Output is deterministic: nlohmann
// objects keep keys sorted and reports carry no timestamps.
#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nmult/valuation.hpp"

namespace nmult {

using nlohmann::json;

inline json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(v));
  return json(to_string(v));
}

inline json rat_to_json(const Rat& q) {
  json j;
  j["num"] = int_to_json(rat_num(q));
  j["den"] = int_to_json(rat_den(q));
  j["dec"] = decimal_string(q);
  return j;
}

inline Int json_to_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw parse_error("expected an integer or integer string");
}

inline Rat json_to_rat(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    Int d = json_to_int(j.at("den"));
    if (d == 0) throw parse_error("zero denominator");
    return Rat(json_to_int(j.at("num")), d);
  }
  throw parse_error("expected a rational (integer, \"p/q\" string, or {num,den})");
}

inline json zvec_to_json(const ZVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

inline json qvec_to_json(const QVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(to_string(x));
  return a;
}

inline json ideal_to_json(const MonomialIdeal& a) {
  json j;
  j["dim"] = a.dim();
  json gens = json::array();
  for (const auto& g : a.generators()) gens.push_back(zvec_to_json(g));
  j["generators"] = gens;
  return j;
}

inline MonomialIdeal json_to_ideal(const json& j) {
  if (!j.contains("dim") || !j.contains("generators"))
    throw parse_error("ideal needs \"dim\" and \"generators\"");
  int dim = j.at("dim").get<int>();
  std::vector<ZVec> gens;
  for (const auto& row : j.at("generators")) {
    ZVec g;
    for (const auto& x : row) g.push_back(json_to_int(x));
    gens.push_back(std::move(g));
  }
  try {
    return MonomialIdeal::from_generators(dim, std::move(gens));
  } catch (const value_error& e) {
    throw parse_error(std::string("bad ideal: ") + e.what());
  }
}

// Canonical textual form: the sorted vertex list, entries as "p/q" strings.
inline json region_to_json(const NewtonRegion& p) {
  json j;
  j["dim"] = p.dim();
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(qvec_to_json(v));
  j["vertices"] = verts;
  return j;
}

inline NewtonRegion json_to_region(const json& j) {
  if (!j.contains("dim") || !j.contains("vertices"))
    throw parse_error("region needs \"dim\" and \"vertices\"");
  int dim = j.at("dim").get<int>();
  std::vector<QVec> verts;
  for (const auto& row : j.at("vertices")) {
    QVec v;
    for (const auto& x : row) v.push_back(json_to_rat(x));
    verts.push_back(std::move(v));
  }
  try {
    return region_from_generators(dim, verts);
  } catch (const value_error& e) {
    throw parse_error(std::string("bad region: ") + e.what());
  }
}

inline json system_to_json(const GradedSystem& s) {
  json j;
  j["dim"] = s.dim();
  switch (s.kind()) {
    case GradedSystem::Kind::Power:
      j["kind"] = "power";
      j["payload"] = json{{"base", ideal_to_json(*s.power_base()).at("generators")}};
      break;
    case GradedSystem::Kind::Kw1:
      j["kind"] = "builtin";
      j["payload"] = json{{"name", "kw1"}};
      break;
    case GradedSystem::Kind::Affine: {
      json factors = json::array();
      for (const auto& f : s.affine_factors())
        factors.push_back(json{{"generators", ideal_to_json(f.ideal).at("generators")},
                               {"slope", to_string(f.slope)},
                               {"intercept", to_string(f.intercept)}});
      j["kind"] = "affine";
      j["payload"] = json{{"factors", factors}};
      break;
    }
    case GradedSystem::Kind::Table: {
      json ideals = json::array();
      for (const auto& [k, ideal] : s.table_ideals())
        ideals.push_back(ideal_to_json(ideal).at("generators"));
      j["kind"] = "table";
      j["payload"] = json{{"ideals", ideals}};
      break;
    }
  }
  if (s.known_limit()) j["known_limit"] = region_to_json(*s.known_limit()).at("vertices");
  return j;
}

inline GradedSystem json_to_system(const json& j) {
  if (!j.contains("dim") || !j.contains("kind") || !j.contains("payload"))
    throw parse_error("system needs \"dim\", \"kind\" and \"payload\"");
  int dim = j.at("dim").get<int>();
  std::string kind = j.at("kind").get<std::string>();
  const json& payload = j.at("payload");
  std::optional<GradedSystem> s;
  try {
    if (kind == "power") {
      json ideal = {{"dim", dim}, {"generators", payload.at("base")}};
      s = GradedSystem::power(json_to_ideal(ideal));
    } else if (kind == "affine") {
      std::vector<AffineFactor> factors;
      for (const auto& f : payload.at("factors")) {
        json ideal = {{"dim", dim}, {"generators", f.at("generators")}};
        factors.push_back(AffineFactor{json_to_ideal(ideal), json_to_rat(f.at("slope")),
                                       json_to_rat(f.at("intercept"))});
      }
      s = GradedSystem::affine(dim, std::move(factors));
    } else if (kind == "table") {
      std::map<int, MonomialIdeal> ideals;
      int k = 1;
      for (const auto& gens : payload.at("ideals")) {
        json ideal = {{"dim", dim}, {"generators", gens}};
        ideals.emplace(k++, json_to_ideal(ideal));
      }
      s = GradedSystem::table(dim, std::move(ideals));
    } else if (kind == "builtin") {
      std::string name = payload.at("name").get<std::string>();
      if (name == "kw1")
        s = GradedSystem::kw1();
      else if (name == "m-powers")
        s = GradedSystem::m_powers();
      else
        throw parse_error("unknown builtin system: " + name);
    } else {
      throw parse_error("unknown system kind: " + kind);
    }
  } catch (const value_error& e) {
    throw parse_error(std::string("bad system: ") + e.what());
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad system payload: ") + e.what());
  }
  if (j.contains("known_limit")) {
    json region = {{"dim", dim}, {"vertices", j.at("known_limit")}};
    s = s->with_known_limit(json_to_region(region));
  }
  return *s;
}

inline json weight_to_json(const ValuationWeight& w) { return zvec_to_json(w.w); }

inline json b_divisor_to_json(const BDivisorSample& b) {
  json arr = json::array();
  for (const auto& w : b.weights) {
    const Rat& c = b.coefficients.at(w);
    json e;
    e["weight"] = weight_to_json(w);
    e["num"] = int_to_json(rat_num(c));
    e["den"] = int_to_json(rat_den(c));
    arr.push_back(e);
  }
  return json{{"coefficients", arr}};
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return j;
}

}  // namespace nmult
