#include "ellarr/input.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace ellarr {

using nlohmann::json;

Rat parse_translation(const std::string& text, const std::string& field) {
  static const std::regex pattern(R"(^(\d+)(?:/(\d+))?$)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) {
    throw ParseError(field + ": expected a rational string \"p/q\", got \"" + text + "\"");
  }
  const Int num(match[1].str());
  const Int den(match[2].matched ? match[2].str() : std::string("1"));
  if (den == 0) throw ParseError(field + ": zero denominator in \"" + text + "\"");
  if (num >= den) {
    throw ParseError(field + ": translation \"" + text + "\" must satisfy 0 <= p < q");
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

Int parse_coefficient(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
  if (v.is_number_unsigned()) return Int(std::to_string(v.get<unsigned long long>()));
  if (v.is_string()) {
    static const std::regex pattern(R"(^-?\d+$)");
    const std::string s = v.get<std::string>();
    if (std::regex_match(s, pattern)) return Int(s);
  }
  throw ParseError(field + ": expected an integer");
}

}  // namespace

ArrangementSpec parse_input(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "dim" && key != "divisors") throw ParseError("document: unknown field \"" + key + "\"");
  }
  if (!doc.contains("dim")) throw ParseError("dim: missing");
  if (!doc["dim"].is_number_unsigned() && !(doc["dim"].is_number_integer() && doc["dim"].get<long long>() >= 0)) {
    throw ParseError("dim: expected a non-negative integer");
  }
  ArrangementSpec spec;
  spec.n = doc["dim"].get<std::size_t>();

  const json divisors = doc.value("divisors", json::array());
  if (!divisors.is_array()) throw ParseError("divisors: expected an array");
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const std::string where = "divisors[" + std::to_string(i) + "]";
    const json& d = divisors[i];
    if (!d.is_object()) throw ParseError(where + ": expected an object");
    for (const auto& [key, value] : d.items()) {
      if (key != "coeffs" && key != "translation") {
        throw ParseError(where + ": unknown field \"" + key + "\"");
      }
    }
    if (!d.contains("coeffs") || !d["coeffs"].is_array()) {
      throw ParseError(where + ".coeffs: expected an array of integers");
    }
    Divisor div;
    for (std::size_t k = 0; k < d["coeffs"].size(); ++k)
      div.coeffs.push_back(parse_coefficient(d["coeffs"][k], where + ".coeffs[" + std::to_string(k) + "]"));
    if (div.coeffs.size() != spec.n) {
      throw ParseError(where + ".coeffs: expected " + std::to_string(spec.n) + " integers, got " +
                       std::to_string(div.coeffs.size()));
    }
    if (d.contains("translation")) {
      const json& t = d["translation"];
      if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_string()) {
        throw ParseError(where + ".translation: expected a pair of rational strings");
      }
      for (std::size_t c = 0; c < 2; ++c)
        div.translation[c] = parse_translation(t[c].get<std::string>(),
                                               where + ".translation[" + std::to_string(c) + "]");
    }
    spec.divisors.push_back(std::move(div));
  }
  return spec;
}

ArrangementSpec read_input_file(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    buffer << in.rdbuf();
  }
  return parse_input(buffer.str());
}

std::string render_input(const ArrangementSpec& spec) {
  json doc;
  doc["dim"] = spec.n;
  doc["divisors"] = json::array();
  for (const Divisor& d : spec.divisors) {
    json coeffs = json::array();
    for (const Int& a : d.coeffs) {
      if (a.fits_slong_p()) {
        coeffs.push_back(a.get_si());
      } else {
        coeffs.push_back(a.get_str());
      }
    }
    json t = json::array();
    for (const Rat& b : d.translation) t.push_back(fractional_part(b).get_str());
    doc["divisors"].push_back({{"coeffs", coeffs}, {"translation", t}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace ellarr
