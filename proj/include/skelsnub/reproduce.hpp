#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "combinatorics.hpp"
#include "polygon.hpp"
#include "snub.hpp"

namespace skelsnub {

// reference values for the genuine snubs at the cone seeds
inline nlohmann::json expected_genuine() {
  using nlohmann::json;
  auto row = [](const char* name, std::vector<long> fv, long chi, std::vector<std::string> symbols) {
    return json{{"name", name}, {"fvector", fv}, {"euler", chi}, {"symbols", symbols}};
  };
  return json::array({
      row("{4,3}_3", {24, 12, 24, 24, 24, 6, 8}, 2, {"4_s.3.3.3.3", "4_c.3.3.3.3"}),
      row("{6,3}_4", {24, 12, 24, 24, 24, 4, 8}, 0, {"6_s.3.3.3.3", "6_c.3.3.3.3"}),
      row("{6,4}_3", {48, 24, 48, 48, 48, 8, 12}, -4, {"6_s.3.3.4_c.3", "6_c.3.3.4_c.3"}),
      row("{10,5}_3", {120, 60, 120, 120, 120, 12, 24}, -24, {"10_s.3.3.5_c.3", "10_c.3.3.5_c.3"}),
      row("{10,3}_5", {120, 60, 120, 120, 120, 12, 40}, -8, {"10_s.3.3.3.3", "10_c.3.3.3.3"}),
      row("{6,5/2}", {120, 60, 120, 120, 120, 20, 24}, -16, {"6_s.3.3.5/2.3", "6_c.3.3.5/2.3"}),
      row("{6,5}", {120, 60, 120, 120, 120, 20, 24}, -16, {"6_s.3.3.5_c.3", "6_c.3.3.5_c.3"}),
      row("{10/3,5/2}", {120, 60, 120, 120, 120, 12, 24}, -24, {"(10/3)_s.3.3.5/2.3", "10/3.3.3.5/2.3"}),
      row("{10/3,3}", {120, 60, 120, 120, 120, 12, 40}, -8, {"(10/3)_s.3.3.3.3", "10/3.3.3.3.3"}),
  });
}

// reference values for snubs from points fixed by s0; counts are (f0, f1, f2, f2')
inline nlohmann::json expected_degenerate() {
  using nlohmann::json;
  const double r2 = std::sqrt(2.0), s5 = std::sqrt(5.0);
  auto row = [](const char* name, std::array<double, 3> v, const char* symbol, std::vector<long> counts) {
    return json{{"name", name}, {"vertex", v}, {"symbol", symbol}, {"counts", counts}, {"crossed", true}};
  };
  return json::array({
      row("{4,3}_3", {0.5, 0.3, r2 / 10}, "4_s.3.4_s.3", {12, 24, 8, 6}),
      row("{6,3}_4", {0.5, 0.0, r2 / 10}, "6_s.3.6_s.3", {12, 24, 4, 8}),
      row("{6,4}_3", {0.5, 0.1, -0.5}, "6_s.4_c.6_s.4_c", {24, 48, 8, 12}),
      row("{10,5}_3", {(1 + s5) / 2, 0.3, 0.0}, "10_s.5_c.10_s.5_c", {60, 120, 12, 24}),
      row("{10,3}_5", {1.0, 0.0, 0.1}, "10_s.3.10_s.3", {60, 120, 12, 40}),
      row("{6,5/2}", {1.0, 0.1, 0.0}, "6_s.5/2.6_s.5/2", {60, 120, 20, 24}),
      row("{6,5}", {1.0, 0.0, 0.1}, "6_s.5_c.6_s.5_c", {60, 120, 20, 24}),
      row("{10/3,5/2}", {1.0, 0.0, 0.1}, "(10/3)_s.5/2.(10/3)_s.5/2", {60, 120, 12, 24}),
      row("{10/3,3}", {1.0, 0.1, 0.0}, "(10/3)_s.3.(10/3)_s.3", {60, 120, 12, 40}),
  });
}

struct ReproduceRow {
  std::string name;
  std::string observed;
  std::string expected;
  bool ok = false;
};

namespace detail {

inline std::string join(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace detail

inline std::vector<ReproduceRow> reproduce_genuine(const nlohmann::json& expected) {
  std::vector<ReproduceRow> rows;
  for (const auto& e : expected) {
    ReproduceRow row;
    row.name = e.at("name").get<std::string>();
    const auto& entry = lookup(row.name);
    auto poly = build_snub(entry, entry.cone.seed);
    auto fv = f_vector(poly);
    std::vector<long> got{static_cast<long>(fv.f0)};
    for (const auto& x : fv.f1) got.push_back(x ? static_cast<long>(*x) : -1);
    for (const auto& x : fv.f2) got.push_back(x ? static_cast<long>(*x) : -1);
    long chi = euler_characteristic(poly);
    std::string sym = vertex_symbol(poly).str();
    auto want_fv = e.at("fvector").get<std::vector<long>>();
    long want_chi = e.at("euler").get<long>();
    auto symbols = e.at("symbols").get<std::vector<std::string>>();
    bool sym_ok = std::find(symbols.begin(), symbols.end(), sym) != symbols.end();
    row.observed = detail::join(got) + " chi " + std::to_string(chi) + " " + sym;
    std::string alts;
    for (std::size_t i = 0; i < symbols.size(); ++i) alts += (i ? "|" : "") + symbols[i];
    row.expected = detail::join(want_fv) + " chi " + std::to_string(want_chi) + " " + alts;
    row.ok = got == want_fv && chi == want_chi && sym_ok;
    rows.push_back(row);
  }
  return rows;
}

inline std::vector<ReproduceRow> reproduce_degenerate(const nlohmann::json& expected) {
  std::vector<ReproduceRow> rows;
  for (const auto& e : expected) {
    ReproduceRow row;
    row.name = e.at("name").get<std::string>();
    const auto& entry = lookup(row.name);
    auto v = e.at("vertex").get<std::array<double, 3>>();
    auto poly = build_snub(entry, {v[0], v[1], v[2]});
    auto fv = f_vector(poly);
    std::vector<long> got{static_cast<long>(fv.f0), static_cast<long>(fv.f1_total),
                          static_cast<long>(fv.f2[1].value_or(0)), static_cast<long>(fv.f2[2].value_or(0))};
    std::string sym = vertex_symbol(poly).str();
    bool crossed = vertex_figure_shape(poly).crossed;
    auto want = e.at("counts").get<std::vector<long>>();
    auto want_sym = e.at("symbol").get<std::string>();
    bool want_crossed = e.value("crossed", true);
    // the two face counts are compared as a multiset
    bool counts_ok = want.size() == 4 && got[0] == want[0] && got[1] == want[1] &&
                     std::minmax(got[2], got[3]) == std::minmax(want[2], want[3]);
    row.observed = detail::join(got) + " " + sym + (crossed ? " crossed" : " simple");
    row.expected = detail::join(want) + " " + want_sym + (want_crossed ? " crossed" : " simple");
    row.ok = counts_ok && sym == want_sym && crossed == want_crossed;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace skelsnub
