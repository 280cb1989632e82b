#include "pejm/serialize.hpp"

#include "pejm/errors.hpp"

namespace pejm {

Json to_json(const Weight& w) {
  Json j = Json::array();
  for (const auto& c : w.coords()) j.push_back(to_string(c));
  return j;
}

Weight weight_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("weight JSON must be an array");
  std::vector<Rational> coords;
  for (const auto& c : j) {
    if (c.is_string()) coords.push_back(parse_rational(c.get<std::string>()));
    else if (c.is_number_integer()) coords.emplace_back(c.get<std::int64_t>());
    else throw InputError("weight coordinates must be rational strings");
  }
  return Weight(std::move(coords));
}

Json to_json(const GClass& cls) {
  Json j = Json::array();
  for (const auto& [w, c] : cls.terms()) {
    Json term;
    term["weight"] = to_json(w);
    term["coefficient"] = c;
    term["basis"] = to_string(cls.basis());
    j.push_back(std::move(term));
  }
  return j;
}

Json to_json(const BlockKey& key) {
  Json j;
  j["n"] = key.n;
  Json residues = Json::array();
  for (const auto& r : key.residues) residues.push_back(to_string(r));
  j["residues"] = std::move(residues);
  j["atypical"] = key.atypical;
  j["partial_index"] = key.partial_index ? Json(*key.partial_index) : Json(nullptr);
  return j;
}

Json to_json(const OddReflectionTrace& trace) {
  Json j = Json::array();
  for (const auto& step : trace.steps) {
    Json s;
    s["alpha"] = to_json(step.alpha);
    s["kind"] = to_string(step.kind);
    s["weight"] = to_json(step.weight_after);
    j.push_back(std::move(s));
  }
  return j;
}

Json to_json(const WitnessCertificate& cert) {
  Json j;
  j["lambda"] = to_json(cert.lam);
  j["alpha"] = to_json(cert.alpha);
  j["mu"] = to_json(cert.mu);
  j["s_dot_lambda"] = to_json(cert.s_dot_lam);
  j["socle_member"] = to_json(cert.socle_member);
  j["top_excludes_mu"] = cert.top_excludes_mu;
  j["translation"] = to_string(cert.translation);
  j["u_character"] = to_json(cert.u_character);
  return j;
}

Json to_json(const JantzenReport& report) {
  Json j;
  j["status"] = to_string(report.status);
  Json constituents = Json::array();
  for (const auto& c : report.constituents) {
    Json e;
    e["weight"] = to_json(c.weight);
    e["form"] = to_string(c.form);
    e["mult"] = c.multiplicity;
    constituents.push_back(std::move(e));
  }
  j["constituents"] = std::move(constituents);
  Json socle = Json::array();
  for (const auto& w : report.socle) socle.push_back(to_json(w));
  j["socle"] = std::move(socle);
  Json top = Json::array();
  for (const auto& w : report.top) top.push_back(to_json(w));
  j["top"] = std::move(top);
  j["certificate"] = report.certificate ? to_json(*report.certificate) : Json(nullptr);
  j["character"] = report.character ? to_json(*report.character) : Json(nullptr);
  return j;
}

Json to_json(const BlockReport& report) {
  Json j;
  j["key"] = to_json(report.key);
  j["atypical"] = report.atypical;
  j["jantzen_middles"] = report.jantzen_middles;
  j["kl_theory"] = report.kl_theory;
  j["witness"] = report.witness ? to_json(*report.witness) : Json(nullptr);
  return j;
}

Json to_json(const KLPoly& p) {
  Json j = Json::array();
  for (auto c : p.coeffs()) j.push_back(c);
  return j;
}

}  // namespace pejm
