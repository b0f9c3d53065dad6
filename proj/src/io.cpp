#include "upos/io.hpp"

#include <fstream>
#include <sstream>

#include "upos/degeneracy.hpp"
#include "upos/errors.hpp"

namespace upos {

namespace {

Json rationals(const std::vector<Rational>& xs) {
  Json a = Json::array();
  for (const Rational& x : xs) a.push_back(to_json(x));
  return a;
}

std::vector<Rational> rationals_from(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) throw InvalidInput(std::string("missing array \"") + field + "\"");
  std::vector<Rational> out;
  for (const Json& x : j[field]) out.push_back(rational_from_json(x));
  return out;
}

Json matrix(const IntMatrix& m) {
  Json a = Json::array();
  for (const IntVector& row : m) {
    Json r = Json::array();
    for (const Integer& x : row) {
      if (!x.fits_slong_p()) throw ResourceLimit("lattice entry does not fit a JSON integer");
      r.push_back(x.get_si());
    }
    a.push_back(std::move(r));
  }
  return a;
}

Json strings(const std::vector<AlgebraicNumber>& xs) {
  Json a = Json::array();
  for (const AlgebraicNumber& x : xs) a.push_back(x.str());
  return a;
}

template <class T>
Json optional_rational(const std::optional<T>& x) {
  return x ? to_json(*x) : Json(nullptr);
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw InvalidInput("rationals must be JSON strings, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

Json to_json(const Rational& q) { return to_string(q); }

LRSRep lrs_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("recurrence file must hold a JSON object");
  LRSRep u{rationals_from(j, "recurrence"), rationals_from(j, "initial")};
  u.validate();
  return u;
}

Json to_json(const LRSRep& u) {
  Json j;
  j["recurrence"] = rationals(u.coeffs);
  j["initial"] = rationals(u.initial);
  return j;
}

PolyInstance poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("variables") || !j["variables"].is_number_unsigned()) {
    throw InvalidInput("polynomial file needs an unsigned \"variables\" count");
  }
  if (!j.contains("terms") || !j["terms"].is_array()) throw InvalidInput("polynomial file needs a \"terms\" array");
  PolyInstance f;
  f.variables = j["variables"].get<std::size_t>();
  for (const Json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exponents") || !t["exponents"].is_array()) {
      throw InvalidInput("term needs \"coeff\" and \"exponents\": " + t.dump());
    }
    Monomial m;
    m.coeff = rational_from_json(t["coeff"]);
    for (const Json& e : t["exponents"]) {
      if (!e.is_number_unsigned()) throw InvalidInput("exponents must be non-negative integers");
      m.exponents.push_back(e.get<unsigned>());
    }
    f.terms.push_back(std::move(m));
  }
  f.validate();
  return f;
}

Json to_json(const PolyInstance& f) {
  Json j;
  j["variables"] = f.variables;
  Json terms = Json::array();
  for (const Monomial& m : f.terms) {
    Json t;
    t["coeff"] = to_json(m.coeff);
    t["exponents"] = m.exponents;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["verdict"] = to_string(v.outcome);
  Json residues = Json::array();
  for (const ResidueReport& r : v.residues) {
    Json x;
    x["l"] = r.l;
    x["outcome"] = to_string(r.outcome);
    x["reason"] = to_string(r.reason);
    x["witness"] = r.witness ? rationals(*r.witness) : Json(nullptr);
    x["stage"] = r.torus ? Json(to_string(r.torus->stage)) : Json(nullptr);
    x["dominant_roots"] = strings(r.dominant_roots);
    if (r.torus) {
      x["minimum"] = r.torus->minimum ? Json(r.torus->minimum->str()) : Json(nullptr);
      x["witness_bound"] = optional_rational(r.torus->witness_bound);
      x["lower_bound"] = optional_rational(r.torus->lower_bound);
      x["upper_bound"] = optional_rational(r.torus->upper_bound);
    }
    if (r.lattice) {
      x["lattice_basis"] = matrix(r.lattice->basis);
      x["lattice_completeness"] = to_string(r.lattice->completeness);
    }
    if (!r.note.empty()) x["note"] = r.note;
    residues.push_back(std::move(x));
  }
  j["residues"] = std::move(residues);
  Json d;
  d["order"] = v.diagnostics.order;
  d["M"] = v.diagnostics.M;
  d["dominant_roots"] = strings(v.diagnostics.dominant_roots);
  d["lattice_basis"] = matrix(v.diagnostics.lattice_basis);
  d["lattice_completeness"] =
      v.diagnostics.lattice_completeness ? to_string(*v.diagnostics.lattice_completeness) : "NOT_COMPUTED";
  j["diagnostics"] = std::move(d);
  return j;
}

Json roots_report(const LRSRep& u) {
  const LRSRep m = minimize(u);
  Json j;
  j["order"] = m.order();
  j["minimal"] = to_json(m);
  j["char_poly"] = char_poly(m).str();
  j["simple"] = is_simple(m);
  if (!is_simple(m)) return j;
  const ClosedForm cf = closed_form(m);
  const std::vector<std::size_t> dom = dominant_terms(cf);
  Json terms = Json::array();
  std::vector<AlgebraicNumber> roots;
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    Json t;
    t["root"] = cf.terms[i].root.str();
    t["coeff"] = cf.terms[i].coeff.str();
    t["dominant"] = std::find(dom.begin(), dom.end(), i) != dom.end();
    terms.push_back(std::move(t));
    roots.push_back(cf.terms[i].root);
  }
  j["terms"] = std::move(terms);
  j["M"] = plan_decomposition(roots).M;
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace upos
