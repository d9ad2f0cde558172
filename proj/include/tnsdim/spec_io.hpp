#pragma once

// JSON network specs and tensor dumps.
//
// Network spec:
//   {"name": "C3",
//    "vertices": [{"id": 0, "n": 2}, ...],
//    "edges": [{"ends": [0, 1], "m": 2}, ...]}
// Ids are integers or strings. Vertices are sorted by id (numerically when
// every id is an integer); edges keep input order and "ends" gives
// (head, tail).
//
// Tensor dump: an array of {"index": [i_1, ..., i_d], "value": "<int>"} for
// the nonzero entries. Readers also accept {"dims": [...], "entries": [...]},
// which is the form needed when trailing slices are zero.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "tnsdim/errors.hpp"
#include "tnsdim/exactnum.hpp"
#include "tnsdim/netgraph.hpp"
#include "tnsdim/tensor.hpp"

namespace tnsdim {

using nlohmann::json;

TensorNetwork parse_spec(const std::string& text);
TensorNetwork read_spec_file(const std::string& path);
json spec_to_json(const TensorNetwork& net);
/// A vertex label as written in JSON: an integer when it parses as one.
json label_json(const std::string& label);

std::string read_file(const std::string& path);

Fp parse_elem(const std::string& s, const PrimeField& field);
Rational parse_elem(const std::string& s, const RationalField& field);

template <class E>
json tensor_to_json(const DenseTensor<E>& t) {
  json arr = json::array();
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (t[f].is_zero()) continue;
    arr.push_back({{"index", t.multi_index(f)}, {"value", to_string(t[f])}});
  }
  return arr;
}

/// Parses either dump form; `dims` overrides (and is required for a bare
/// array whose trailing indices never appear).
template <class F>
DenseTensor<typename F::Elem> tensor_from_json(const json& doc, const F& field,
                                               std::optional<std::vector<std::size_t>> dims = std::nullopt) {
  const json* entries = &doc;
  if (doc.is_object()) {
    if (!doc.contains("entries")) throw ParseError("tensor object has no \"entries\"");
    entries = &doc.at("entries");
    if (!dims && doc.contains("dims")) dims = doc.at("dims").get<std::vector<std::size_t>>();
  }
  if (!entries->is_array()) throw ParseError("tensor entries must be an array");
  std::vector<std::pair<std::vector<std::size_t>, std::string>> items;
  for (std::size_t k = 0; k < entries->size(); ++k) {
    const json& it = (*entries)[k];
    if (!it.is_object() || !it.contains("index") || !it.contains("value"))
      throw ParseError("tensor entry " + std::to_string(k) + " needs \"index\" and \"value\"");
    std::string value = it.at("value").is_string() ? it.at("value").get<std::string>() : it.at("value").dump();
    items.emplace_back(it.at("index").get<std::vector<std::size_t>>(), value);
  }
  if (!dims) {
    if (items.empty()) throw ParseError("cannot infer dims of an empty tensor");
    dims = std::vector<std::size_t>(items.front().first.size(), 0);
    for (const auto& [idx, _] : items) {
      if (idx.size() != dims->size()) throw ParseError("tensor entries have inconsistent order");
      for (std::size_t k = 0; k < idx.size(); ++k) (*dims)[k] = std::max((*dims)[k], idx[k] + 1);
    }
  }
  DenseTensor<typename F::Elem> t(*dims);
  for (std::size_t k = 0; k < items.size(); ++k) {
    const auto& idx = items[k].first;
    if (idx.size() != dims->size()) throw ParseError("tensor entry " + std::to_string(k) + ": wrong index length");
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (idx[j] >= (*dims)[j]) throw ParseError("tensor entry " + std::to_string(k) + ": index out of range");
    }
    t.at(idx) = parse_elem(items[k].second, field);
  }
  return t;
}

}  // namespace tnsdim
