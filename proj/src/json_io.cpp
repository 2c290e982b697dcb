#include "toric/json_io.hpp"

namespace toric {

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  throw ParseError("expected a rational as \"p/q\" or an integer");
}

Json rat_to_json(const Rat& x) { return to_string(x); }

QVec qvec_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  QVec v;
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

Json qvec_to_json(const QVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Lattice lattice_from_json(const Json& j, int expected_dim) {
  if (!j.contains("generators")) throw ParseError("lattice needs \"generators\"");
  std::vector<QVec> gens;
  for (const auto& row : j.at("generators")) gens.push_back(qvec_from_json(row));
  if (expected_dim >= 0 && (gens.empty() || static_cast<int>(gens[0].size()) != expected_dim))
    throw ParseError("lattice generators have the wrong dimension");
  return Lattice::from_generators(gens);
}

Json lattice_to_json(const Lattice& lat) {
  Json j;
  Json gens = Json::array();
  for (const auto& row : lat.generator_matrix().row_list()) gens.push_back(qvec_to_json(row));
  j["generators"] = std::move(gens);
  return j;
}

Cone cone_from_json(const Json& j) {
  if (!j.contains("rays")) throw ParseError("cone needs \"rays\"");
  std::vector<QVec> rays;
  for (const auto& row : j.at("rays")) rays.push_back(qvec_from_json(row));
  if (rays.empty()) throw ParseError("cone needs at least one ray");
  int n = static_cast<int>(rays[0].size());
  Lattice lat = j.contains("lattice") ? lattice_from_json(j.at("lattice"), n) : Lattice::standard(n);
  return Cone::from_rays(lat, rays);
}

ToricPair pair_from_json(const Json& j) {
  Cone cone = cone_from_json(j);
  if (!j.contains("boundary")) return ToricPair(std::move(cone));

  // input coefficients attach to the input rays; carry them to the sorted
  // primitive rays of the constructed cone
  QVec coeffs = qvec_from_json(j.at("boundary"));
  std::vector<QVec> input_rays;
  for (const auto& row : j.at("rays")) input_rays.push_back(qvec_from_json(row));
  if (coeffs.size() != input_rays.size()) throw InvalidBoundary("one boundary coefficient per ray");

  QVec boundary(cone.rays().size(), Rat(0));
  std::vector<bool> assigned(cone.rays().size(), false);
  for (size_t i = 0; i < input_rays.size(); ++i) {
    QVec prim = ray_primitive(input_rays[i], cone.lattice());
    bool found = false;
    for (size_t k = 0; k < cone.rays().size(); ++k) {
      if (cone.rays()[k] != prim) continue;
      if (assigned[k]) throw InvalidBoundary("two input rays lie on the same extreme ray");
      boundary[k] = coeffs[i];
      assigned[k] = true;
      found = true;
      break;
    }
    if (!found) throw InvalidBoundary("input ray is not an extreme ray of the cone");
  }
  for (bool a : assigned)
    if (!a) throw InvalidBoundary("boundary does not cover every extreme ray");
  return ToricPair(std::move(cone), std::move(boundary));
}

Json pair_to_json(const ToricPair& pair) {
  Json j;
  j["lattice"] = lattice_to_json(pair.lattice());
  Json rays = Json::array();
  for (const auto& r : pair.cone().rays()) rays.push_back(qvec_to_json(r));
  j["rays"] = std::move(rays);
  j["boundary"] = qvec_to_json(pair.boundary());
  return j;
}

Json class_group_to_json(const ClassGroupPresentation& cg) {
  Json j;
  j["variables"] = cg.variables;
  j["free_rank"] = cg.free_rank;
  j["torsion"] = Json::array();
  for (const auto& d : cg.torsion) j["torsion"].push_back(d.get_str());
  j["gradings"] = Json::array();
  for (const auto& g : cg.gradings) {
    Json e;
    e["free"] = Json::array();
    for (const auto& x : g.free) e["free"].push_back(x.get_str());
    e["torsion"] = Json::array();
    for (const auto& x : g.torsion) e["torsion"].push_back(x.get_str());
    j["gradings"].push_back(std::move(e));
  }
  return j;
}

Json run_pair_query(const Json& input) {
  ToricPair pair = pair_from_json(input);
  ToricPair::Mld mld = pair.mld();
  Json out;
  out["value"] = to_string(mld.value);
  out["witness"] = qvec_to_json(mld.witness);
  out["index"] = pair.cartier_index().get_str();
  out["class_group"] = class_group_to_json(class_group(pair.cone()));
  return out;
}

Json run_quotient(const Json& input) {
  ToricPair base = input.contains("pair") ? pair_from_json(input.at("pair")) : [&] {
    // default base: smooth orthant pair in the requested dimension
    int n = input.contains("weights") ? static_cast<int>(input.at("weights").size())
                                      : static_cast<int>(input.at("overlattice").at("generators").at(0).size());
    Json cone;
    cone["rays"] = Json::array();
    for (int i = 0; i < n; ++i) {
      Json e = Json::array();
      for (int k = 0; k < n; ++k) e.push_back(k == i ? "1" : "0");
      cone["rays"].push_back(std::move(e));
    }
    return pair_from_json(cone);
  }();

  TorusSubgroup f = [&] {
    if (input.contains("r")) {
      long r = input.at("r").get<long>();
      std::vector<long> weights = input.at("weights").get<std::vector<long>>();
      return TorusSubgroup::cyclic(base.lattice(), r, weights);
    }
    if (input.contains("overlattice"))
      return TorusSubgroup::from_lattices(base.lattice(), lattice_from_json(input.at("overlattice"), base.lattice().dim()));
    throw ParseError("quotient needs \"r\"/\"weights\" or \"overlattice\"");
  }();

  ToricPair quotient = log_quotient(base, f);
  ToricPair::Mld mld = quotient.mld();

  Json verification;
  {
    QVec up = ray_primitive(mld.witness, base.lattice());
    QuotientLdCheck chk = quotient_ld_check(base, f, up);
    verification["upstairs"] = to_string(chk.upstairs);
    verification["downstairs"] = to_string(chk.downstairs);
    verification["ramification"] = chk.ramification.get_str();
    verification["law_holds"] = (chk.downstairs * Rat(chk.ramification) == chk.upstairs);
    verification["functional_preserved"] = (quotient.logdisc_functional() == base.logdisc_functional());
  }

  Json out;
  out["group"] = Json::array();
  for (const auto& d : f.group.invariant_factors) out["group"].push_back(d.get_str());
  out["pair"] = pair_to_json(quotient);
  out["mld"] = to_string(mld.value);
  out["witness"] = qvec_to_json(mld.witness);
  out["index"] = quotient.cartier_index().get_str();
  out["verification"] = std::move(verification);
  return out;
}

Json run_aut(const Json& input) {
  Cone cone = cone_from_json(input);
  std::vector<FanAutomorphism> autos = fan_automorphisms(cone);

  Json out;
  out["aut_order"] = autos.size();
  out["element_orders"] = Json::array();
  for (const auto& g : autos) out["element_orders"].push_back(element_order(g));

  auto ctx = std::make_shared<OuterToricContext>(OuterToricContext::full(cone));
  std::vector<std::pair<int, QVec>> gens;
  if (input.contains("generators")) {
    for (const auto& g : input.at("generators")) {
      IntMatrix basis(cone.dim(), cone.dim());
      if (g.contains("g")) {
        const auto& rows = g.at("g");
        for (int i = 0; i < cone.dim(); ++i)
          for (int k = 0; k < cone.dim(); ++k)
            basis.at(i, k) = Int(static_cast<long>(rows.at(static_cast<size_t>(i)).at(static_cast<size_t>(k)).get<long long>()));
      } else {
        basis = IntMatrix::identity(cone.dim());
      }
      int fi = ctx->index_of(basis);
      if (fi < 0) throw ParseError("generator matrix is not a fan automorphism of this cone");
      QVec t(static_cast<size_t>(cone.dim()), Rat(0));
      if (g.contains("t")) {
        t = qvec_from_json(g.at("t"));
        for (auto& x : t) x = frac(x);
      }
      gens.emplace_back(fi, std::move(t));
    }
  }
  long cap = input.contains("cap") ? input.at("cap").get<long>() : kDefaultClosureCap;
  OuterToricGroup group = group_closure(ctx, gens, cap);
  out["group_order"] = group.size();
  out["jordan"] = jordan_to_json(jordan_report(group));
  return out;
}

}  // namespace toric
