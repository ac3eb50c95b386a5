#include "mvhermite/json_io.hpp"

namespace mvh {

json to_json(const Rational& r) { return to_string(r); }

json to_json(const PiScalar& s) {
  return json{{"coeff", to_string(s.coeff)}, {"piPower", s.pi_power}};
}

json to_json(const RMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const RMatPoly& p) {
  json coeffs = json::array();
  for (long k = 0; k <= p.degree(); ++k) coeffs.push_back(to_json(p.coeff(k)));
  return json{{"dim", p.dim()}, {"coeffs", std::move(coeffs)}};
}

json family_to_json(const WeightFamily& fam) {
  json j{{"family", family_name(fam.id())},
         {"N", fam.N()},
         {"nu", to_string(fam.nu())}};
  if (fam.id() == FamilyId::gamma) j["lambda"] = to_string(fam.lambda());
  if (fam.id() == FamilyId::flat) {
    j["rho"] = to_string(fam.rho());
    j["C"] = to_string(fam.Cshift());
  }
  return j;
}

WeightFamily family_from_json(const json& j) {
  FamilyId id = family_from_name(j.at("family").get<std::string>());
  int N = j.at("N").get<int>();
  Rational nu = parse_rational(j.at("nu").get<std::string>());
  Rational lambda =
      j.contains("lambda") ? parse_rational(j["lambda"].get<std::string>()) : Rational(1);
  Rational rho =
      j.contains("rho") ? parse_rational(j["rho"].get<std::string>()) : Rational(1);
  Rational C = j.contains("C") ? parse_rational(j["C"].get<std::string>()) : Rational(0);
  return WeightFamily(id, N, nu, lambda, rho, C);
}

json sequence_to_json(const MVOPSequence& seq) {
  json j = family_to_json(seq.family);
  j["nuShift"] = seq.shift;
  json polys = json::array(), norms = json::array(), bs = json::array(),
       cs = json::array();
  for (const auto& p : seq.polys) polys.push_back(to_json(p));
  for (const auto& h : seq.norms) {
    json diag = json::array();
    for (const auto& e : h) diag.push_back(to_json(e));
    norms.push_back(std::move(diag));
  }
  for (const auto& b : seq.Bn) bs.push_back(to_json(b));
  for (const auto& c : seq.Cn) cs.push_back(to_json(c));
  j["polys"] = std::move(polys);
  j["H"] = std::move(norms);
  j["B"] = std::move(bs);
  j["C"] = std::move(cs);
  return j;
}

}  // namespace mvh
