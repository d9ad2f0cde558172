#include "tnsdim/spec_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace tnsdim {

namespace {

struct RawId {
  bool is_int = false;
  std::int64_t value = 0;
  std::string text;
};

RawId read_id(const json& j, const std::string& where) {
  if (j.is_number_integer()) return {true, j.get<std::int64_t>(), std::to_string(j.get<std::int64_t>())};
  if (j.is_string()) return {false, 0, j.get<std::string>()};
  throw ParseError(where + ": id must be an integer or a string, got " + j.dump());
}

std::int64_t read_positive(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ParseError(where + ": \"" + key + "\" must be an integer, got " + v.dump());
  const auto x = v.get<std::int64_t>();
  if (x < 1) throw ValidationError(where + ": \"" + key + "\" must be >= 1, got " + std::to_string(x));
  return x;
}

}  // namespace

TensorNetwork parse_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("network spec must be a JSON object");
  if (!doc.contains("vertices") || !doc.at("vertices").is_array())
    throw ParseError("network spec needs a \"vertices\" array");
  const json& jv = doc.at("vertices");
  const json empty = json::array();
  const json& je = doc.contains("edges") ? doc.at("edges") : empty;
  if (!je.is_array()) throw ParseError("\"edges\" must be an array");

  std::vector<std::pair<RawId, std::int64_t>> raw;
  for (std::size_t k = 0; k < jv.size(); ++k) {
    const std::string where = "vertex " + std::to_string(k);
    if (!jv[k].is_object() || !jv[k].contains("id")) throw ParseError(where + ": needs an \"id\"");
    raw.emplace_back(read_id(jv[k].at("id"), where), read_positive(jv[k], "n", where + " (" + jv[k].at("id").dump() + ")"));
  }
  const bool all_int = std::all_of(raw.begin(), raw.end(), [](const auto& r) { return r.first.is_int; });
  std::stable_sort(raw.begin(), raw.end(), [&](const auto& a, const auto& b) {
    return all_int ? a.first.value < b.first.value : a.first.text < b.first.text;
  });
  std::map<std::string, std::size_t> pos;
  std::vector<Vertex> vertices;
  for (const auto& [id, n] : raw) {
    if (!pos.emplace(id.text, vertices.size()).second) throw ValidationError("duplicate vertex id " + id.text);
    vertices.push_back({id.text, n});
  }

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < je.size(); ++k) {
    std::string where = "edge " + std::to_string(k);
    const json& e = je[k];
    if (!e.is_object() || !e.contains("ends")) throw ParseError(where + ": needs \"ends\"");
    const json& ends = e.at("ends");
    if (!ends.is_array() || ends.size() != 2) throw ParseError(where + ": \"ends\" must list two ids");
    where += " " + ends.dump();
    const RawId h = read_id(ends[0], where);
    const RawId t = read_id(ends[1], where);
    const std::int64_t m = read_positive(e, "m", where);
    if (h.text == t.text) throw ValidationError(where + ": loop at vertex " + h.text);
    for (const RawId* id : {&h, &t}) {
      if (!pos.count(id->text)) throw ValidationError(where + ": unknown vertex id " + id->text);
    }
    const std::size_t hv = pos.at(h.text), tv = pos.at(t.text);
    if (!pairs.insert(std::minmax(hv, tv)).second)
      throw ValidationError(where + ": duplicate edge {" + h.text + ", " + t.text + "}");
    edges.push_back({hv, tv, m});
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw ParseError("\"name\" must be a string");
    name = doc.at("name").get<std::string>();
  }
  return TensorNetwork(std::move(vertices), std::move(edges), std::move(name));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TensorNetwork read_spec_file(const std::string& path) { return parse_spec(read_file(path)); }

json label_json(const std::string& label) {
  std::int64_t v = 0;
  const auto* end = label.data() + label.size();
  auto [p, ec] = std::from_chars(label.data(), end, v);
  if (ec == std::errc() && p == end && !label.empty() && std::to_string(v) == label) return v;
  return label;
}

json spec_to_json(const TensorNetwork& net) {
  json doc;
  if (!net.name().empty()) doc["name"] = net.name();
  doc["vertices"] = json::array();
  for (const auto& v : net.vertices()) doc["vertices"].push_back({{"id", label_json(v.label)}, {"n", v.n}});
  doc["edges"] = json::array();
  for (const auto& e : net.edges()) {
    doc["edges"].push_back(
        {{"ends", {label_json(net.vertex(e.head).label), label_json(net.vertex(e.tail).label)}}, {"m", e.m}});
  }
  return doc;
}

namespace {

Rational::BigInt parse_bigint(const std::string& s, const std::string& whole) {
  if (s.empty()) throw ParseError("bad number \"" + whole + "\"");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("bad number \"" + whole + "\"");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') throw ParseError("bad number \"" + whole + "\"");
  }
  return Rational::BigInt(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_elem(const std::string& s, const RationalField&) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(s, s), Rational::BigInt(1));
  const auto den = parse_bigint(s.substr(slash + 1), s);
  if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
  return Rational(parse_bigint(s.substr(0, slash), s), den);
}

Fp parse_elem(const std::string& s, const PrimeField& field) {
  const Rational q = parse_elem(s, RationalField{});
  return q.reduce(field.prime());
}

}  // namespace tnsdim
