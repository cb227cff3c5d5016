#pragma once

// JSON encoding of verdicts, certificates and census reports. Objects use
// sorted keys, so equal values serialize to identical bytes.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "largeness/analyze.hpp"
#include "largeness/certificate.hpp"
#include "largeness/errors.hpp"
#include "largeness/parse.hpp"

namespace largeness::json_io {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kFormat = 1;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw ParseError("expected an integer", 0);
}

inline Json to_json(const Chi& chi) { return chi.values; }

inline Json to_json(const AbelianInvariants& inv) {
  Json t = Json::array();
  for (const Integer& x : inv.torsion) t.push_back(to_json(x));
  return {{"rank", inv.rank}, {"torsion", t}, {"text", inv.to_string()}};
}

/// Rows are cosets; columns alternate generator, inverse.
inline Json to_json(const CosetTable& t) {
  Json rows = Json::array();
  for (std::size_t c = 0; c < t.index(); ++c) {
    std::vector<int> row(t.data().begin() + static_cast<std::ptrdiff_t>(c * t.columns()),
                         t.data().begin() + static_cast<std::ptrdiff_t>((c + 1) * t.columns()));
    rows.push_back(row);
  }
  return {{"index", t.index()}, {"generators", t.generator_count()}, {"rows", rows}};
}

inline CosetTable table_from_json(const Json& j) {
  const int gens = j.at("generators").get<int>();
  const auto index = j.at("index").get<std::size_t>();
  std::vector<int> data;
  const Json& rows = j.at("rows");
  if (rows.size() != index) throw ParseError("coset table: row count differs from index", 0);
  for (const Json& row : rows) {
    if (row.size() != static_cast<std::size_t>(2 * gens)) throw ParseError("coset table: wrong row width", 0);
    for (const Json& x : row) data.push_back(x.get<int>());
  }
  return CosetTable(gens, index, std::move(data));
}

inline Json to_json(const Certificate& c) {
  Json j = {{"kind", certificate_kind(c)},
            {"chi", nullptr},
            {"prime", nullptr},
            {"subgroup_tables", Json::array()},
            {"abelian_invariants", nullptr}};
  if (const auto* d = std::get_if<DeficiencyAtLeastTwo>(&c)) {
    j["presentation"] = format_presentation(d->presentation);
    Json moves = Json::array();
    for (const EliminationMove& m : d->moves) moves.push_back({{"generator", m.generator}, {"relator", m.relator}});
    j["moves"] = moves;
  } else if (const auto* a = std::get_if<AlexanderVanishes>(&c)) {
    j["chi"] = to_json(a->chi);
    if (a->prime) j["prime"] = to_json(*a->prime);
    for (const CosetTable& t : a->chain) j["subgroup_tables"].push_back(to_json(t));
  } else {
    const auto& h = std::get<HeightOneBigAbelianization>(c);
    j["subgroup_tables"].push_back(to_json(h.subgroup));
    j["abelian_invariants"] = to_json(h.invariants);
  }
  return j;
}

inline AbelianInvariants invariants_from_json(const Json& j) {
  AbelianInvariants inv;
  inv.rank = j.at("rank").get<long>();
  for (const Json& x : j.at("torsion")) inv.torsion.push_back(integer_from_json(x));
  return inv;
}

/// Accepts a certificate object or a whole verdict carrying one.
inline Certificate certificate_from_json(const Json& in) {
  try {
    const Json& j = in.contains("certificate") ? in.at("certificate") : in;
    if (j.is_null()) throw ParseError("verdict carries no certificate", 0);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "DeficiencyAtLeastTwo") {
      DeficiencyAtLeastTwo d{parse_presentation(j.at("presentation").get<std::string>()), {}};
      for (const Json& m : j.at("moves")) d.moves.push_back({m.at("generator").get<Gen>(), m.at("relator").get<int>()});
      return d;
    }
    if (kind == "AlexanderVanishes") {
      AlexanderVanishes a;
      a.chi.values = j.at("chi").get<std::vector<Exp>>();
      if (!j.at("prime").is_null()) a.prime = integer_from_json(j.at("prime"));
      for (const Json& t : j.at("subgroup_tables")) a.chain.push_back(table_from_json(t));
      return a;
    }
    if (kind == "HeightOneBigAbelianization") {
      const Json& tables = j.at("subgroup_tables");
      if (tables.size() != 1) throw ParseError("expected exactly one subgroup table", 0);
      return HeightOneBigAbelianization{table_from_json(tables[0]), invariants_from_json(j.at("abelian_invariants"))};
    }
    throw ParseError("unknown certificate kind '" + kind + "'", 0);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
  }
}

inline Json to_json(const Evidence& e) {
  Json chis = Json::array(), scans = Json::array(), images = Json::array();
  for (const Chi& c : e.chi_set) chis.push_back(to_json(c));
  for (const SubgroupScan& s : e.scans) scans.push_back({{"index", s.index}, {"abelian_invariants", to_json(s.invariants)}});
  for (const FiniteImage& f : e.finite_images) {
    images.push_back({{"degree", f.degree},
                      {"order", f.order},
                      {"abelian", f.abelian},
                      {"metabelian", f.metabelian},
                      {"metacyclic", f.metacyclic}});
  }
  return {{"max_index", e.max_index},       {"chi_set", chis},
          {"scans", scans},                 {"max_perm_degree", e.max_perm_degree},
          {"finite_images", images},        {"observations", e.observations}};
}

inline Json versions() { return {{"largeness", kVersion}, {"format", kFormat}}; }

inline Json to_json(const Verdict& v, std::uint64_t seed) {
  return {{"status", to_string(v.status)},
          {"certificate", v.certificate ? to_json(*v.certificate) : Json(nullptr)},
          {"evidence", to_json(v.evidence)},
          {"seed", seed},
          {"versions", versions()}};
}

inline Json to_json(const CensusReport& r) {
  Json samples = Json::array();
  for (const CensusSample& s : r.samples) {
    samples.push_back({{"exponents", s.exponents},
                       {"status", to_string(s.status)},
                       {"kind", s.kind.empty() ? Json(nullptr) : Json(s.kind)},
                       {"prime", s.prime ? to_json(*s.prime) : Json(nullptr)}});
  }
  const auto n = r.samples.size();
  auto fraction = [n](std::size_t k) { return n == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(n); };
  return {{"k", r.options.k},
          {"bound", r.options.bound},
          {"sample_count", n},
          {"seed", r.options.seed},
          {"max_index", r.options.budget.max_index},
          {"max_perm_degree", r.options.budget.max_perm_degree},
          {"certified", r.certified},
          {"unknown", r.unknown},
          {"certified_fraction", fraction(r.certified)},
          {"unknown_fraction", fraction(r.unknown)},
          {"histogram", r.histogram},
          {"samples", samples},
          {"versions", versions()}};
}

}  // namespace largeness::json_io
