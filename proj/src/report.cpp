#include "petrov/report.hpp"

#include "petrov/algebra.hpp"
#include "petrov/classify.hpp"
#include "petrov/errors.hpp"
#include "petrov/hodge.hpp"

#include <cmath>

namespace petrov {

using json = nlohmann::ordered_json;

namespace {

json judged(double value, double tolerance) {
  return json{{"value", value}, {"tolerance", tolerance}, {"pass", value <= tolerance}};
}

json vec_json(const auto& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json mat_json(const auto& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

double commutation_tolerance(const Mat6& m, const Tolerances& tol) {
  return scaled(tol.identity, max_abs(m));
}

double einstein_residual(const CurvatureTensor& r) {
  const Vec4 eps = frame_signs(r.frame_signature());
  const Mat4 ric = ricci(r).full;
  const Mat4 g = eps.asDiagonal();
  return max_abs(ric - (scalar_curvature(r) / 4.0) * g);
}

json petrov_json(const PetrovReport& p) {
  json clusters = json::array();
  for (const auto& c : p.clusters) {
    clusters.push_back({{"re", c.value.real()},
                        {"im", c.value.imag()},
                        {"algebraic", c.algebraic},
                        {"geometric", c.geometric}});
  }
  return json{{"mode", p.mode == PetrovMode::FullOperator ? "full_operator" : "s_part"},
              {"type", to_string(p.type)},
              {"clusters", clusters},
              {"tolerance_margin", p.tolerance_margin}};
}

json normal_form_json(const CurvatureTensor& r, const Tolerances& tol) {
  const NormalForm nf = normal_form_lorentzian(r, tol);
  return json{{"lambdas", vec_json(nf.lambdas)},
              {"mus", vec_json(nf.mus)},
              {"reconstruction", judged(nf.residual, scaled(1e-9, r.norm()))}};
}

json trace_h_json(const CurvatureTensor& r, Signature deformation, const Tolerances& tol) {
  const TraceH th = trace_h(r, deformation);
  return json{{"deformation", to_string(deformation)},
              {"f", th.f},
              {"residual", judged(th.residual, scaled(tol.identity, r.norm()))}};
}

json not_applicable(const std::string& reason) {
  return json{{"applicable", false}, {"reason", reason}};
}

json riemannian_section(const CurvatureTensor& r, const Tolerances& tol) {
  const Mat6 op = curvature_operator(r).matrix;
  const double res = star_einstein_residual(op, hodge_star(Signature::Riemannian));
  const double t = commutation_tolerance(op, tol);
  json s{{"applicable", true}};
  if (r.frame_signature() == Signature::Lorentzian) {
    s["operator"] = "c_hat_h";
    s["commutation"] = judged(res, t);
    s["trace_h"] = trace_h_json(r, Signature::Riemannian, tol);
    if (res <= t) s["normal_form"] = normal_form_json(r, tol);
    return s;
  }
  if (r.frame_signature() == Signature::Split) return not_applicable("split frame");
  s["operator"] = "curvature_operator";
  s["commutation"] = judged(res, t);
  const WeylBlocks w = weyl_blocks(r);
  s["scal"] = w.scal;
  s["w_plus_minus_w_minus"] = judged(max_abs(w.w_plus - w.w_minus), scaled(tol.identity, r.norm()));
  if (res <= t) s["normal_form"] = normal_form_json(r, tol);
  return s;
}

json lorentzian_section(const CurvatureTensor& r, const Tolerances& tol) {
  if (r.frame_signature() != Signature::Riemannian) {
    return not_applicable("needs a Riemannian-frame tensor");
  }
  const Mat6 op = curvature_operator(r).matrix;
  const double res = star_einstein_residual(op, hodge_star(Signature::Lorentzian));
  const double t = commutation_tolerance(op, tol);
  json s{{"applicable", true}};
  s["commutation"] = judged(res, t);
  const PetrovMode mode = res <= t ? PetrovMode::FullOperator : PetrovMode::SPart;
  s["petrov"] = petrov_json(petrov_type(op, mode, tol));
  const AlmostEinsteinVerdict ae = almost_einstein_check(r, tol);
  s["almost_einstein"] = json{{"lambda", ae.lambda},
                              {"psi", vec_json(ae.psi)},
                              {"residual", judged(ae.residual, ae.tolerance)}};
  const WeylSymmetryVerdict wv = w_plus_equals_w_minus(r, tol);
  s["w_plus_minus_w_minus"] = judged(wv.residual, wv.tolerance);
  return s;
}

json split_section(const CurvatureTensor& r, const Tolerances& tol) {
  if (r.frame_signature() != Signature::Riemannian) {
    return not_applicable("needs a Riemannian-frame tensor");
  }
  const Mat6 op = curvature_operator(r).matrix;
  const double res = star_einstein_residual(op, hodge_star(Signature::Split));
  json s{{"applicable", true}};
  s["commutation"] = judged(res, commutation_tolerance(op, tol));
  s["trace_h"] = trace_h_json(r, Signature::Split, tol);
  return s;
}

json labels_json(const ClassLabels& l) {
  json out = json::object();
  auto put = [&](const char* key, const std::optional<bool>& v) {
    if (v) out[key] = *v;
  };
  put("einstein", l.einstein);
  put("star_l_einstein", l.star_l_einstein);
  put("almost_einstein", l.almost_einstein);
  put("w_plus_equals_w_minus", l.w_plus_equals_w_minus);
  put("star_h_einstein", l.star_h_einstein);
  if (l.petrov_type) out["petrov_type"] = to_string(*l.petrov_type);
  return out;
}

json critical_records_json(const CriticalSearch& search) {
  json records = json::array();
  for (const auto& rec : search.records) {
    records.push_back({{"plane", vec_json(rec.plane)},
                       {"sectional", rec.value},
                       {"relation_to_t", to_string(rec.relation)},
                       {"residual", judged(rec.residual, 1e-7)}});
  }
  return json{{"flavor", to_string(search.records.empty() ? Flavor::Gsec
                                                          : search.records.front().flavor)},
              {"starts", search.starts},
              {"converged", search.converged},
              {"saturated", search.saturated},
              {"incomplete", search.incomplete},
              {"records", records}};
}

json header(const CurvatureFile& file, const Tolerances& tol) {
  json input{{"digest", digest(file)}, {"signature", to_string(file.frame)}};
  for (const auto& [key, value] : file.metadata) {
    if (key == "name") input["name"] = value;
  }
  const CurvatureTensor r = file.tensor();
  input["bianchi"] = judged(r.bianchi_residual(), scaled(tol.bianchi, r.norm()));
  return json{{"report_version", kReportVersion}, {"input", input}};
}

}  // namespace

ClassLabels compute_labels(const CurvatureTensor& r, const Tolerances& tol) {
  ClassLabels l;
  const Mat6 op = curvature_operator(r).matrix;
  const double t = commutation_tolerance(op, tol);
  l.einstein = einstein_residual(r) <= scaled(tol.identity, r.norm());
  switch (r.frame_signature()) {
    case Signature::Riemannian: {
      const bool star_l = star_einstein_residual(op, hodge_star(Signature::Lorentzian)) <= t;
      l.star_l_einstein = star_l;
      l.almost_einstein = almost_einstein_check(r, tol).matches;
      l.w_plus_equals_w_minus = w_plus_equals_w_minus(r, tol).holds;
      l.star_h_einstein = star_einstein_residual(op, hodge_star(Signature::Split)) <= t;
      l.petrov_type =
          petrov_type(op, star_l ? PetrovMode::FullOperator : PetrovMode::SPart, tol).type;
      break;
    }
    case Signature::Lorentzian:
      l.star_h_einstein = star_einstein_residual(op, hodge_star(Signature::Riemannian)) <= t;
      break;
    case Signature::Split:
      break;
  }
  return l;
}

std::vector<std::string> label_mismatches(const ClassLabels& expected, const ClassLabels& actual) {
  std::vector<std::string> out;
  auto check = [&](const char* name, const auto& e, const auto& a) {
    if (e && (!a || *a != *e)) out.emplace_back(name);
  };
  check("einstein", expected.einstein, actual.einstein);
  check("star_l_einstein", expected.star_l_einstein, actual.star_l_einstein);
  check("almost_einstein", expected.almost_einstein, actual.almost_einstein);
  check("w_plus_equals_w_minus", expected.w_plus_equals_w_minus, actual.w_plus_equals_w_minus);
  check("star_h_einstein", expected.star_h_einstein, actual.star_h_einstein);
  check("petrov_type", expected.petrov_type, actual.petrov_type);
  return out;
}

json classify_report(const CurvatureFile& file, const ClassifyOptions& options) {
  const Tolerances& tol = options.tol;
  const CurvatureTensor r = file.tensor();
  json report = header(file, tol);
  report["tolerances"] = json{{"identity", tol.identity}, {"exact", tol.exact},
                              {"cluster", tol.cluster},   {"rank", tol.rank},
                              {"bianchi", tol.bianchi},   {"degenerate", tol.degenerate}};
  json stars = json::array();
  for (Signature s : options.stars) stars.push_back(to_string(s));
  report["stars"] = stars;
  report["einstein"] = judged(einstein_residual(r), scaled(tol.identity, r.norm()));
  for (Signature s : options.stars) {
    const std::string key(to_string(s));
    switch (s) {
      case Signature::Riemannian: report[key] = riemannian_section(r, tol); break;
      case Signature::Lorentzian: report[key] = lorentzian_section(r, tol); break;
      case Signature::Split: report[key] = split_section(r, tol); break;
    }
  }
  report["labels"] = labels_json(compute_labels(r, tol));
  if (options.critical_starts > 0 && r.frame_signature() == Signature::Riemannian) {
    report["critical_planes"] =
        critical_records_json(find_critical_planes(r, Flavor::Gsec, options.critical_starts));
  }
  return report;
}

json decompose_report(const CurvatureFile& file, const Tolerances& tol) {
  const CurvatureTensor r = file.tensor();
  json report = header(file, tol);
  const Mat6 op = curvature_operator(r).matrix;
  report["operator"] = mat_json(op);
  const RicciForm ric = ricci(r);
  report["ricci"] = mat_json(ric.full);
  report["scal"] = scalar_curvature(r);
  if (r.frame_signature() == Signature::Riemannian) {
    const SADecomposition l = sa_decompose(op, hodge_star(Signature::Lorentzian), -1);
    report["star_l"] = json{{"s", mat_json(l.s.matrix)}, {"a", mat_json(l.a.matrix)}};
    report["s_components"] = mat_json(s_components(r));
    const SADecomposition h = sa_decompose(op, hodge_star(Signature::Split), +1);
    report["star_h_split"] = json{{"s", mat_json(h.s.matrix)}, {"a", mat_json(h.a.matrix)}};
    const WeylBlocks w = weyl_blocks(r);
    report["weyl"] = json{{"w_plus", mat_json(w.w_plus)},
                          {"w_minus", mat_json(w.w_minus)},
                          {"k_block", mat_json(w.k_block)}};
  }
  const SADecomposition e = sa_decompose(op, hodge_star(Signature::Riemannian), +1);
  report["star"] = json{{"s", mat_json(e.s.matrix)}, {"a", mat_json(e.a.matrix)}};
  return report;
}

json critical_planes_report(const CurvatureFile& file, Flavor flavor, int starts,
                            std::uint64_t seed, const Tolerances& tol) {
  const CurvatureTensor r = file.tensor();
  if (r.frame_signature() != Signature::Riemannian) {
    throw Error(ErrorCode::WrongFrame, "critical planes need a Riemannian-frame tensor");
  }
  json report = header(file, tol);
  json search = critical_records_json(find_critical_planes(r, flavor, starts, seed, tol));
  search["flavor"] = to_string(flavor);
  report["critical_planes"] = search;
  return report;
}

namespace {

void flatten(const json& node, const std::string& path, std::string& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, path.empty() ? key : path + "." + key, out);
    }
  } else if (node.is_array()) {
    if (node.empty()) out += path + ": []\n";
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten(node[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else if (node.is_string()) {
    out += path + ": " + node.get<std::string>() + "\n";
  } else if (node.is_number_float()) {
    out += path + ": " + format_double(node.get<double>()) + "\n";
  } else {
    out += path + ": " + node.dump() + "\n";
  }
}

}  // namespace

std::string to_text(const json& report) {
  std::string out;
  flatten(report, "", out);
  return out;
}

}  // namespace petrov
