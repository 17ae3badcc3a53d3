#include "descent/serialize.hpp"

namespace descent {

Json certificate_json(const LambdaCertificate& cert) {
  Json j;
  j["N"] = cert.n;
  j["lambda"] = cert.lambda.to_string();
  Json conds = Json::array();
  for (const auto& c : cert.conditions) {
    Json e;
    e["place"] = c.place.to_string();
    if (c.valuation) e["valuation"] = *c.valuation;
    if (c.sign) e["sign"] = *c.sign;
    e["satisfied"] = c.satisfied;
    conds.push_back(e);
  }
  j["conditions"] = conds;
  j["disc_nonzero"] = cert.disc_nonzero;
  j["delta_P"] = cert.delta_value.to_string();
  return j;
}

Json quaternion_json(const Rational& a, const Rational& b, const QuaternionSplitting& q) {
  Json j;
  j["a"] = a.to_string();
  j["b"] = b.to_string();
  j["split"] = q.split;
  Json ram = Json::array();
  for (const auto& v : q.ramification) ram.push_back(v.to_string());
  j["ramification"] = ram;
  return j;
}

Json specialization_json(const Specialization& s) {
  Json j;
  j["N"] = s.n;
  j["lambda"] = s.lambda.to_string();
  j["a"] = curve_json(*s.curve);
  j["P"] = point_json(s.p);
  j["disc"] = s.curve->discriminant().to_string();
  j["j"] = s.curve->j_invariant().to_string();
  return j;
}

Json report_json(const VerificationReport& report) {
  Json fams = Json::array();
  for (const auto& r : report.families) {
    Json j;
    j["N"] = r.n;
    j["char"] = r.characteristic.get_ui();
    j["status"] = to_string(r.status);
    if (r.status == VerifyStatus::Skipped) {
      j["reason"] = r.reason;
    } else {
      j["entries"] = r.entries_checked;
      Json mm = Json::array();
      for (const auto& m : r.mismatches) {
        mm.push_back({{"kind", m.what}, {"n", m.n}, {"computed", m.computed}, {"fixture", m.fixture}});
      }
      j["mismatches"] = mm;
      j["seconds"] = r.seconds;
      Json cert;
      cert["function"] = r.function ? Json(*r.function) : Json(nullptr);
      cert["norm_constant"] = r.norm_constant ? Json(*r.norm_constant) : Json(nullptr);
      cert["unit"] = r.unit ? Json(*r.unit) : Json(nullptr);
      j["certificates"] = cert;
    }
    fams.push_back(j);
  }
  return {{"ok", report.ok()}, {"families", fams}};
}

Json fixtures_json() {
  Json out = Json::array();
  for (const auto& fx : fixtures()) {
    Json j;
    j["N"] = fx.n;
    switch (fx.rule) {
      case CharacteristicRule::Any:
        j["characteristic"] = "any";
        break;
      case CharacteristicRule::NotTwo:
        j["characteristic"] = "not 2";
        break;
      case CharacteristicRule::TwoOnly:
        j["characteristic"] = "2";
        break;
    }
    if (!fx.b.empty()) {
      j["b"] = fx.b;
      j["c"] = fx.c;
    }
    j["r"] = fx.r.empty() ? Json(nullptr) : Json(fx.r);
    j["s"] = fx.s.empty() ? Json(nullptr) : Json(fx.s);
    if (fx.printed) j["displayed_a"] = *fx.printed;
    j["P"] = Json::array({fx.px, fx.py});
    j["disc"] = fx.disc;
    Json delta = Json::array(), points = Json::array();
    for (const auto& row : fx.rows) {
      delta.push_back({{"n", row.n}, {"class", row.delta}});
      if (!row.x.empty()) points.push_back({{"n", row.n}, {"x", row.x}, {"y", row.y}});
    }
    j["delta"] = delta;
    j["points"] = points;
    j["provenance"] = fx.provenance;
    j["delta_hardcoded"] = fx.delta_hardcoded;
    out.push_back(j);
  }
  return out;
}

Json error_json(const Error& e) { return {{"error", to_string(e.code())}, {"message", e.what()}}; }

}  // namespace descent
