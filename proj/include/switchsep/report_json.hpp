// report_json.hpp -- JSON serialization for witnesses, reports, and
// quasigroup tables. Uses insertion-ordered objects so output is
// byte-stable for fixed inputs.

#pragma once

#include <json.hpp>

#include "switchsep/circulant.hpp"
#include "switchsep/enumeration.hpp"
#include "switchsep/quasigroup.hpp"
#include "switchsep/separability.hpp"

namespace switchsep {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson witness_to_json(const SeparationWitness& w) {
  return OrderedJson{{"part", w.part.members()},
                     {"switching_set", w.switching_set.members()}};
}

inline OrderedJson search_payload(const SearchReport& r) {
  return OrderedJson{{"order", r.order},
                     {"classes_scanned", r.classes_scanned},
                     {"nonseparable_count", r.nonseparable_count},
                     {"counterexamples", r.counterexamples}};
}

inline OrderedJson gn_payload(const GnReport& r) {
  OrderedJson deletions = OrderedJson::array();
  for (const auto& d : r.deletions)
    deletions.push_back(OrderedJson{
        {"vertex", d.vertex},
        {"separable", d.separable},
        {"expected_pair", {d.expected_pair.first, d.expected_pair.second}},
        {"pair_isolable", d.pair_isolable}});
  OrderedJson pair_deletions;
  if (r.pair_deletions_checked) {
    pair_deletions = OrderedJson::array();
    for (const auto& p : r.pair_deletions)
      pair_deletions.push_back(
          OrderedJson{{"i", p.i}, {"j", p.j}, {"nonseparable", p.nonseparable}});
  } else {
    pair_deletions = "skipped: below order bound";
  }
  return OrderedJson{{"n", r.n},
                     {"m", r.m},
                     {"width", r.width},
                     {"gn_nonseparable", r.gn_nonseparable},
                     {"deletions", deletions},
                     {"pair_deletions", pair_deletions},
                     {"all_ok", r.all_ok()}};
}

inline OrderedJson table_to_json(const QuasigroupTable& t) {
  std::vector<int> values(t.values().begin(), t.values().end());
  return OrderedJson{{"order", t.order()}, {"arity", t.arity()}, {"values", values}};
}

inline QuasigroupTable table_from_json(const OrderedJson& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("arity") || !j.contains("values"))
    throw parse_error("table json: expected {order, arity, values}", 0);
  const int order = j.at("order").get<int>();
  const int arity = j.at("arity").get<int>();
  std::vector<std::uint8_t> values;
  for (const auto& v : j.at("values")) {
    const int x = v.get<int>();
    if (x < 0 || x > 255) throw parse_error("table json: symbol out of byte range", 0);
    values.push_back(static_cast<std::uint8_t>(x));
  }
  return QuasigroupTable(order, arity, std::move(values));
}

}  // namespace switchsep
