#include "torifan/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "torifan/error.hpp"

namespace torifan {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { fail(errc::parse_error, what); }

ordered_json parse_document(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Int int_entry(const ordered_json& j, const char* where) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Rat r = parse_rat(j.get<std::string>());
    if (!is_integer(r)) bad(std::string(where) + " must be an integer, got " + str(r));
    return to_integer(r);
  }
  bad(std::string(where) + " must be an integer");
}

Rat rat_entry(const ordered_json& j, const char* where) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  bad(std::string(where) + " must be an integer or a \"p/q\" string");
}

ordered_json json_int(const Int& v) {
  if (v.fits_slong_p()) return ordered_json(v.get_si());
  return ordered_json(str(v));
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

Fan fan_from_json(const std::string& text) {
  ordered_json j = parse_document(text);
  if (!j.is_object()) bad("fan document must be an object");
  for (const char* key : {"dim", "rays", "max_cones"})
    if (!j.contains(key)) bad(std::string("fan document lacks \"") + key + "\"");

  Fan f;
  if (!j["dim"].is_number_integer()) bad("\"dim\" must be an integer");
  f.dim = j["dim"].get<int>();

  if (!j["rays"].is_array()) bad("\"rays\" must be an array");
  for (const ordered_json& row : j["rays"]) {
    if (!row.is_array()) bad("each ray must be an array of integers");
    LatticeVector v;
    for (const ordered_json& e : row) v.coords.push_back(int_entry(e, "ray entry"));
    f.rays.push_back(std::move(v));
  }

  if (!j["max_cones"].is_array()) bad("\"max_cones\" must be an array");
  for (const ordered_json& row : j["max_cones"]) {
    if (!row.is_array()) bad("each cone must be an array of ray indices");
    Cone c;
    for (const ordered_json& e : row) {
      if (!e.is_number_integer()) bad("cone entry must be a ray index");
      c.rays.push_back(e.get<int>());
    }
    f.max_cones.push_back(std::move(c));
  }
  return f;
}

std::string fan_to_json(const Fan& f) {
  ordered_json j;
  j["dim"] = f.dim;
  j["rays"] = ordered_json::array();
  for (const LatticeVector& v : f.rays) {
    ordered_json row = ordered_json::array();
    for (const Int& c : v.coords) row.push_back(json_int(c));
    j["rays"].push_back(std::move(row));
  }
  j["max_cones"] = ordered_json::array();
  for (const Cone& c : f.max_cones) j["max_cones"].push_back(c.rays);
  return j.dump(2) + "\n";
}

InvariantDivisor divisor_from_json(const std::string& text, const Fan& fan) {
  ordered_json j = parse_document(text);
  if (!j.is_object()) bad("divisor document must be an object");
  if (!j.contains("coeffs")) bad("divisor document lacks \"coeffs\"");
  if (!j["coeffs"].is_array()) bad("\"coeffs\" must be an array");

  InvariantDivisor d;
  d.fan = fan;
  for (const ordered_json& e : j["coeffs"])
    d.coeffs.push_back(rat_entry(e, "coefficient"));
  if (d.coeffs.size() != fan.rays.size())
    bad(std::to_string(d.coeffs.size()) + " coefficients for " +
        std::to_string(fan.rays.size()) + " rays");
  return d;
}

std::string divisor_to_json(const InvariantDivisor& d) {
  ordered_json j;
  j["coeffs"] = ordered_json::array();
  for (const Rat& c : d.coeffs) j["coeffs"].push_back(str(c));
  return j.dump(2) + "\n";
}

}  // namespace torifan
