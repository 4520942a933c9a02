#include "rootforge/io.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "rootforge/errors.hpp"

namespace rootforge {

namespace {

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ContractError("json: malformed integer string");
    return z;
  }
  throw ContractError("json: expected an integer");
}

}  // namespace

Json to_json(const FieldElement& x) {
  Json out = Json::array();
  for (const auto& q : x.coefficients()) {
    out.push_back(integer_json(q.get_num()));
    out.push_back(integer_json(q.get_den()));
  }
  return out;
}

FieldElement field_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 8) throw ContractError("json: a field element is an array of 8 integers");
  std::array<Rational, 4> c;
  for (std::size_t k = 0; k < 4; ++k) {
    const mpz_class den = integer_from_json(j[2 * k + 1]);
    if (den == 0) throw ContractError("json: zero denominator");
    c[k] = Rational(integer_from_json(j[2 * k]), den);
    c[k].canonicalize();
  }
  return FieldElement(c[0], c[1], c[2], c[3]);
}

Json to_json(const Multivector& m) {
  Json out = Json::array();
  for (std::size_t b = 0; b < kBladeCount; ++b) out.push_back(to_json(m[b]));
  return out;
}

Multivector multivector_from_json(const Json& j) {
  if (!j.is_array() || j.size() != kBladeCount) throw ContractError("json: a multivector is an array of 8 field elements");
  Multivector m;
  for (std::size_t b = 0; b < kBladeCount; ++b) m[b] = field_from_json(j[b]);
  return m;
}

Json to_json(const RootSystem& rs) {
  Json out;
  out["ambient"] = to_string(rs.ambient);
  out["roots"] = Json::array();
  for (const auto& r : rs.roots) out["roots"].push_back(to_json(r));
  out["simple_roots"] = Json::array();
  for (const auto& r : rs.simple_roots) out["simple_roots"].push_back(to_json(r));
  return out;
}

RootSystem root_system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("roots"))
    throw ContractError("json: root system needs 'ambient' and 'roots'");
  RootSystem rs;
  rs.ambient = ambient_from_string(j.at("ambient").get<std::string>());
  for (const auto& r : j.at("roots")) rs.roots.push_back(multivector_from_json(r));
  if (j.contains("simple_roots"))
    for (const auto& r : j.at("simple_roots")) rs.simple_roots.push_back(multivector_from_json(r));
  return rs;
}

Json to_json(const VersorGroup& g, const std::vector<ConjugacyClass>& classes) {
  Json out;
  out["parity"] = g.parity() == Parity::Full ? "full" : "even";
  out["generators"] = Json::array();
  for (const auto& r : g.generators()) out["generators"].push_back(to_json(r));
  out["order"] = g.order();
  out["elements"] = Json::array();
  for (const auto& e : g.elements()) {
    Json je;
    je["number"] = e.seq + 1;
    je["value"] = to_json(e.value);
    je["element_x2"] = to_string_x2(e.value);
    je["path"] = path_string(e);
    je["order"] = element_order(e);
    out["elements"].push_back(std::move(je));
  }
  out["classes"] = Json::array();
  for (const auto& c : classes) {
    Json jc;
    jc["order"] = c.element_order;
    jc["size"] = c.members.size();
    jc["members"] = Json::array();
    for (std::size_t m : c.members) jc["members"].push_back(g.elements()[m].seq + 1);
    out["classes"].push_back(std::move(jc));
  }
  return out;
}

Json to_json(const VertexSet& vs, const EdgeSet& es) {
  Json out;
  out["label"] = vs.label;
  out["vertex_count"] = vs.size();
  out["vertices"] = Json::array();
  for (const auto& v : vs.vertices) out["vertices"].push_back(to_json(v));
  out["edge_count"] = es.size();
  out["edge_inner"] = to_json(es.edge_inner);
  out["edges"] = Json::array();
  for (const auto& [i, j] : es.edges) out["edges"].push_back({i, j});
  return out;
}

std::string root_system_csv(const RootSystem& rs) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << (rs.ambient == Ambient::Dim3 ? "x1,x2,x3\n" : "x1,x2,x3,x4\n");
  for (const auto& r : rs.roots) {
    const auto c = coordinates(rs.ambient, r);
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << to_float(c[k]);
    os << '\n';
  }
  return os.str();
}

std::string edges_csv(const EdgeSet& es) {
  std::ostringstream os;
  os << "i,j\n";
  for (const auto& [i, j] : es.edges) os << i << ',' << j << '\n';
  return os.str();
}

std::string group_table(const VersorGroup& g, const std::vector<ConjugacyClass>& classes) {
  std::ostringstream os;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& c = classes[k];
    if (k) os << '\n';
    os << "# class " << k + 1 << ": order " << c.element_order << ", size " << c.members.size() << '\n';
    os << "Order | Number | Element ×2 | Generator path\n";
    for (std::size_t m : c.members) {
      const GroupElement& e = g.elements()[m];
      os << c.element_order << " | " << e.seq + 1 << " | " << to_string_x2(e.value) << " | " << path_string(e) << '\n';
    }
  }
  return os.str();
}

}  // namespace rootforge
