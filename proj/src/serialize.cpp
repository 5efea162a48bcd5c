#include "rbn/serialize.hpp"

#include "rbn/parse.hpp"

#include <sstream>

namespace rbn {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<long>(x.get_si());
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ParseError("expected an integer in JSON, got " + j.dump());
}

Json rational_json(const Rational& x) { return x.get_str(); }

Json to_json(const CohomologyVector& h) {
  return Json{{"h0", integer_json(h.h0)}, {"h1", integer_json(h.h1)}, {"h2", integer_json(h.h2)}};
}

Json to_json(const ChernCharacter& v) {
  Json j;
  j["r"] = integer_json(v.rank());
  j["c1"] = to_string(v.c1());
  j["ch2"] = rational_json(v.ch2());
  j["chi"] = rational_json(riemann_roch_chi(v));
  return j;
}

Json to_json(const ResolutionReport& rep) {
  Json j;
  j["surface"] = rep.collection.surface.name();
  Json coll = Json::array();
  for (const auto& b : rep.collection.bundles) coll.push_back(to_string(b));
  j["collection"] = coll;
  Json left = Json::object(), right = Json::object();
  for (std::size_t i = 0; i < rep.exponents.size(); ++i)
    (i < rep.split() ? left : right)[to_string(rep.collection.bundles[i])] = integer_json(rep.exponents[i]);
  j["left"] = left;
  j["right"] = right;
  const auto& c = rep.cokernel;
  const Rational chi_val = Rational(c.r) - ratio(intersect(c.c1, canonical(rep.collection.surface)), 2) + c.ch2;
  j["cokernel"] = Json{{"r", integer_json(c.r)}, {"c1", to_string(c.c1)}, {"ch2", rational_json(c.ch2)}, {"chi", rational_json(chi_val)}};
  j["feasible"] = rep.feasible;
  j["notes"] = rep.notes;
  return j;
}

Json to_json(const GoodSum& sum) {
  Json j;
  j["surface"] = sum.surface.name();
  j["N"] = to_string(sum.N);
  Json parts = Json::array();
  for (const auto& l : sum.summands) parts.push_back(to_string(l));
  j["summands"] = parts;
  return j;
}

Json to_json(const WBNWitness& w) {
  Json j = to_json(w.sum);
  j["modifications"] = integer_json(w.modifications);
  j["target"] = Json{{"r", integer_json(w.target.rank())}, {"c1", to_string(w.target.c1())}, {"ch2", rational_json(w.target.ch2())}};
  return j;
}

Json to_json(const WBNVerdict& verdict) {
  Json j;
  j["status"] = to_string(verdict.status);
  if (const auto* res = std::get_if<ResolutionReport>(&verdict.witness)) {
    j["witness"] = Json{{"kind", "resolution"}};
    j["witness"].update(to_json(*res));
  } else if (const auto* w = std::get_if<WBNWitness>(&verdict.witness)) {
    j["witness"] = Json{{"kind", "good_sum"}};
    j["witness"].update(to_json(*w));
  } else if (const auto* lb = std::get_if<LineBundleCertificate>(&verdict.witness)) {
    j["witness"] = Json{{"kind", "line_bundle"},
                        {"line_bundle", to_string(lb->line_bundle)},
                        {"points", integer_json(lb->points)},
                        {"cohomology", to_json(lb->cohomology)},
                        {"method", lb->method}};
  }
  if (verdict.witness_for) j["witness_for"] = to_json(*verdict.witness_for);
  if (verdict.obstruction) {
    const auto& o = *verdict.obstruction;
    Json ob;
    if (o.curve) ob["curve"] = to_string(*o.curve);
    if (o.chi_pairing) ob["chi_pairing"] = integer_json(*o.chi_pairing);
    ob["cohomology"] = "h" + std::to_string(o.cohomology_degree);
    ob["lower_bound"] = integer_json(o.lower_bound);
    if (o.cohomology_degree == 0) ob["h0_lower_bound"] = integer_json(o.lower_bound);
    j["obstruction"] = ob;
  }
  if (verdict.discriminant) j["discriminant"] = rational_json(*verdict.discriminant);
  j["notes"] = verdict.notes;
  return j;
}

GoodSum good_sum_from_json(const Json& j) {
  const Surface s = parse_surface(j.at("surface").get<std::string>());
  GoodSum out{s, parse_divisor(s, j.at("N").get<std::string>()), {}};
  for (const auto& x : j.at("summands")) out.summands.push_back(parse_divisor(s, x.get<std::string>()));
  return out;
}

ChernCharacter character_from_json(const Surface& s, const Json& j) {
  return ChernCharacter(integer_from_json(j.at("r")), parse_divisor(s, j.at("c1").get<std::string>()),
                        parse_rational(j.at("ch2").get<std::string>()));
}

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (j.is_array()) {
    if (j.empty()) os << path << ": []\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else if (j.is_string()) {
    os << path << ": " << j.get<std::string>() << '\n';
  } else {
    os << path << ": " << j.dump() << '\n';
  }
}

}  // namespace

std::string to_text(const Json& j) {
  std::ostringstream os;
  flatten(j, "", os);
  return os.str();
}

}  // namespace rbn
