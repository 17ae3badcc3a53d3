#pragma once

#include <json.hpp>

#include "descent/global_fields.hpp"
#include "descent/report.hpp"

namespace descent {

using Json = nlohmann::ordered_json;

template <FieldElement K>
Json point_json(const CurvePoint<K>& p) {
  if (p.is_infinity()) return "O";
  return Json::array({to_string(p.x()), to_string(p.y())});
}

template <FieldElement K>
Json curve_json(const WeierstrassCurve<K>& c) {
  return Json::array({to_string(c.a1()), to_string(c.a2()), to_string(c.a3()), to_string(c.a4()), to_string(c.a6())});
}

/// Family document with its computed table and certificates.
template <FieldElement F>
Json family_json(const FamilySpec<F>& fam, const DescentTable<RationalFunction<F>>& table) {
  Json j;
  j["N"] = fam.n;
  j["char"] = fam.characteristic.get_ui();
  j["r"] = fam.r ? Json(to_string(*fam.r)) : Json(nullptr);
  j["s"] = fam.s ? Json(to_string(*fam.s)) : Json(nullptr);
  j["a"] = curve_json(*fam.curve);
  j["P"] = point_json(fam.p);
  j["disc"] = to_string(fam.disc);
  Json delta = Json::array();
  for (const auto& [n, c] : table.entries) delta.push_back({{"n", n}, {"class", c.to_string()}});
  j["delta"] = delta;
  Json points = Json::array();
  for (const auto& [n, p] : table.points) {
    points.push_back({{"n", n}, {"x", to_string(p.x())}, {"y", to_string(p.y())}});
  }
  j["points"] = points;
  Json cert;
  cert["function"] = table.function ? Json(table.function->to_string()) : Json(nullptr);
  cert["norm_constant"] = table.norm_constant ? Json(to_string(*table.norm_constant)) : Json(nullptr);
  cert["unit"] = table.unit ? Json(table.unit->to_string()) : Json(nullptr);
  j["certificates"] = cert;
  j["provenance"] = table.provenance;
  j["notes"] = fam.notes;
  return j;
}

Json certificate_json(const LambdaCertificate& cert);
Json quaternion_json(const Rational& a, const Rational& b, const QuaternionSplitting& q);
Json specialization_json(const Specialization& s);
Json report_json(const VerificationReport& report);
Json fixtures_json();
Json error_json(const Error& e);

}  // namespace descent
