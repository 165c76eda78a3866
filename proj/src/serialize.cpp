#include "ppav/serialize.hpp"

namespace ppav {

json to_json(const InvolutionType& t) { return json::array({t.x, t.y, t.z}); }

InvolutionType type_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("type must be an [x,y,z] array");
  return InvolutionType(j[0].get<int>(), j[1].get<int>(), j[2].get<int>());
}

json to_json(const SymplecticInvolution& r) {
  return json{{"g", r.g()}, {"type", to_json(r.type())}, {"matrix", to_json(r.matrix())}};
}

SymplecticInvolution involution_from_json(const json& j) {
  if (!j.is_object() || !j.contains("matrix")) throw ParseError("involution needs a matrix");
  SymplecticInvolution r = SymplecticInvolution::from_matrix(integer_matrix_from_json(j["matrix"]));
  if (j.contains("g") && j["g"].get<std::size_t>() != r.g())
    throw ParseError("involution g does not match its matrix size");
  return r;
}

json to_json(const SiegelPoint& z) {
  return json{{"g", z.g()}, {"Z", to_json(z.matrix())}};
}

SiegelPoint siegel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("Z")) throw ParseError("Siegel point needs a Z matrix");
  SiegelPoint z = SiegelPoint::from_matrix(gaussian_matrix_from_json(j["Z"]));
  if (j.contains("g") && j["g"].get<std::size_t>() != z.g())
    throw ParseError("Siegel point g does not match its matrix size");
  return z;
}

json to_json(const LevelStructure& l) {
  json n = l.n().fits_slong_p() ? json(l.n().get_si()) : json(to_string(l.n()));
  return json{{"n", n}, {"g", l.g()}, {"matrix", to_json(l.matrix())}};
}

LevelStructure level_from_json(const json& j) {
  if (!j.is_object() || !j.contains("matrix") || !j.contains("n"))
    throw ParseError("level structure needs n and matrix");
  Integer n = j["n"].is_string() ? int_from_string(j["n"].get<std::string>())
                                 : Integer(std::to_string(j["n"].get<long long>()));
  return LevelStructure::from_matrix(integer_matrix_from_json(j["matrix"]), n);
}

json to_json(const StratumParameters& p) {
  auto list = [](const std::vector<GaussianRational>& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(json{{"re", to_string(e.re)}, {"im", to_string(e.im)}});
    return out;
  };
  return json{{"type", to_json(p.type)}, {"a", list(p.a)},   {"b", list(p.b)},
              {"c", list(p.c)},          {"d", list(p.d)},   {"Zy", to_json(p.Zy)},
              {"Zz", to_json(p.Zz)}};
}

StratumParameters stratum_parameters_from_json(const json& j) {
  auto list = [](const json& arr) {
    if (!arr.is_array()) throw ParseError("stratum parameter lists must be arrays");
    std::vector<GaussianRational> out;
    for (const auto& e : arr) {
      if (!e.is_object() || !e.contains("re") || !e.contains("im"))
        throw ParseError("stratum parameters must have re and im");
      out.emplace_back(rational_from_string(e["re"].get<std::string>()),
                       rational_from_string(e["im"].get<std::string>()));
    }
    return out;
  };
  StratumParameters p;
  p.type = type_from_json(j.at("type"));
  p.a = list(j.at("a"));
  p.b = list(j.at("b"));
  p.c = list(j.at("c"));
  p.d = list(j.at("d"));
  p.Zy = gaussian_matrix_from_json(j.at("Zy"));
  p.Zz = gaussian_matrix_from_json(j.at("Zz"));
  return p;
}

json to_json(const ConnectivityCertificate& c) {
  json nodes = json::array();
  for (const ComponentClass& n : c.nodes)
    nodes.push_back(json{{"type", to_json(n.representative)},
                         {"dual", to_json(n.dual)},
                         {"dimension", n.dimension}});
  json edges = json::array();
  for (const CertificateEdge& e : c.edges)
    edges.push_back(json{{"a", e.a},
                         {"b", e.b},
                         {"witness", to_json(e.witness)},
                         {"inv_a", to_json(e.inv_a)},
                         {"inv_b", to_json(e.inv_b)},
                         {"verified", e.verified}});
  return json{{"g", c.g}, {"nodes", nodes}, {"edges", edges}, {"connected", c.connected}};
}

}  // namespace ppav
