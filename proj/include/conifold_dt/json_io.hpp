#pragma once

// JSON documents and text renderings. Big integers are always written as
// decimal strings; objects keep a fixed key order so output is byte-stable.

#include <json.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "factor_list.hpp"
#include "mmalgebra.hpp"
#include "partial.hpp"
#include "qseries.hpp"
#include "strip.hpp"

namespace conifold_dt {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json small_int(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

inline BigInt parse_bigint(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<long>());
  throw Error(ErrorKind::invalid_argument, "expected an integer or integer string");
}

}  // namespace detail

inline Json to_json(const Triangulation& t) {
  return Json{{"m", t.diagram().m()}, {"n", t.diagram().n()}, {"top_set", t.top_set()}};
}

inline Triangulation triangulation_from_json(const Json& j) {
  return Triangulation(StripDiagram(j.at("m").get<int>(), j.at("n").get<int>()),
                       j.at("top_set").get<std::vector<int>>());
}

inline Json to_json(const ExponentMap& e) {
  Json factors = Json::array();
  for (const auto& [p, exp] : e.factors())
    factors.push_back(Json{{"path", {p.i, p.j}}, {"exp", exp.get_str()}});
  return Json{{"m", e.diagram().m()},
              {"n", e.diagram().n()},
              {"m1_power_times_2", detail::small_int(e.m1_power_times_2())},
              {"factors", std::move(factors)}};
}

inline ExponentMap exponent_map_from_json(const Json& j) {
  ExponentMap out(StripDiagram(j.at("m").get<int>(), j.at("n").get<int>()));
  for (const auto& f : j.at("factors")) {
    const auto path = f.at("path").get<std::vector<int>>();
    if (path.size() != 2) throw Error(ErrorKind::invalid_argument, "path must be [i, j]");
    out.add({path[0], path[1]}, detail::parse_bigint(f.at("exp")));
  }
  out.set_m1_power(Rational(detail::parse_bigint(j.at("m1_power_times_2")), BigInt(2)));
  return out;
}

inline Json to_json(const HomogeneityReport& r) {
  Json out{{"is_homogeneous", r.is_homogeneous}};
  out["degree"] = r.degree ? Json(r.degree->get_str()) : Json(nullptr);
  if (r.witness)
    out["witness"] = Json::array({Json::array({r.witness->first.i, r.witness->first.j}),
                                  Json::array({r.witness->second.i, r.witness->second.j})});
  else
    out["witness"] = nullptr;
  return out;
}

inline Json to_json(const SignedFactorList& f) {
  Json factors = Json::array();
  for (const auto& [x, exp] : f.factors())
    factors.push_back(Json{{"monomial", x.exponents}, {"exp", exp.get_str()}});
  return Json{{"n", f.variable_count()},
              {"m1_power_times_2", detail::small_int(f.m1_power_times_2())},
              {"factors", std::move(factors)}};
}

inline SignedFactorList factor_list_from_json(const Json& j) {
  SignedFactorList out(j.at("n").get<std::size_t>());
  for (const auto& f : j.at("factors"))
    out.add(LaurentMonomial(f.at("monomial").get<std::vector<int>>()),
            detail::parse_bigint(f.at("exp")));
  out.set_m1_power(Rational(detail::parse_bigint(j.at("m1_power_times_2")), BigInt(2)));
  return out;
}

inline Json to_json(const BlockDecomposition& d) {
  Json blocks = Json::array();
  for (const auto& [mk, nk] : d.blocks()) blocks.push_back(Json::array({mk, nk}));
  return Json{{"m", d.diagram().m()}, {"n", d.diagram().n()}, {"blocks", std::move(blocks)}};
}

inline BlockDecomposition decomposition_from_json(const Json& j) {
  std::vector<std::pair<int, int>> blocks;
  for (const auto& b : j.at("blocks")) {
    const auto v = b.get<std::vector<int>>();
    if (v.size() != 2) throw Error(ErrorKind::invalid_argument, "block must be [m_k, n_k]");
    blocks.emplace_back(v[0], v[1]);
  }
  return BlockDecomposition(StripDiagram(j.at("m").get<int>(), j.at("n").get<int>()),
                            std::move(blocks));
}

inline Json to_json(const BlockDecomposition& d, const Factorization& f) {
  Json out = to_json(d);
  Json mult = Json::array();
  Json blocks = Json::array();
  for (const auto& b : f.block_factors) {
    mult.push_back(b.multiplicity.get_str());
    blocks.push_back(Json{{"block", {b.block.first, b.block.second}},
                          {"offset", b.offset},
                          {"multiplicity", b.multiplicity.get_str()},
                          {"total", to_json(b.total)}});
  }
  out["multiplicities"] = std::move(mult);
  out["zpp"] = to_json(f.zpp);
  out["block_factors"] = std::move(blocks);
  return out;
}

inline Json to_json(const QSeries& s) {
  Json terms = Json::array();
  for (int k = 0; k <= s.order(); ++k)
    for (const auto& [x, c] : s.coefficient(k))
      terms.push_back(Json{{"k", k}, {"monomial", x.exponents}, {"coeff", c.get_str()}});
  return Json{{"order", s.order()},
              {"variables", s.variable_count()},
              {"terms", std::move(terms)},
              {"text", to_string(s)}};
}

namespace detail {

inline std::string monomial_text(const LaurentMonomial& x) {
  std::ostringstream os;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const int e = x.exponents[k];
    if (e == 0) continue;
    os << 'Q' << (k + 1);
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace detail

/// MacMahon-product notation, e.g. "M(1,q)^8 * M(Q1^-1Q2,q)^1".
inline std::string render_text(const SignedFactorList& f) {
  std::ostringstream os;
  bool first = true;
  if (f.m1_power() != 0) {
    os << "M(1,q)^" << f.m1_power().get_str();
    first = false;
  }
  for (const auto& [x, e] : f.factors()) {
    if (!first) os << " * ";
    first = false;
    os << "M(" << detail::monomial_text(x) << ",q)^" << e.get_str();
  }
  if (first) os << '1';
  return os.str();
}

inline std::string render_text(const ExponentMap& e) { return render_text(to_factor_list(e)); }

}  // namespace conifold_dt
