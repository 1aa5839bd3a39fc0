#include "acs/report.hpp"

#include <sstream>

namespace acs {

namespace {

Json verdicts(const MetricReport& r) {
  Json j;
  j["almost_kahler"] = verdict_name(r.almost_kahler);
  j["balanced"] = verdict_name(r.balanced);
  j["skt"] = verdict_name(r.skt);
  j["gauduchon"] = verdict_name(r.gauduchon);
  j["strongly_gauduchon"] = verdict_name(r.strongly_gauduchon);
  j["integral_condition"] = verdict_name(r.integral_condition);
  j["orthogonality"] = verdict_name(r.orthogonality);
  return j;
}

Json forms(const HermitianGeometry& g, const std::vector<Form>& fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back(g.render(f));
  return a;
}

}  // namespace

Json report_header(const std::string& command, const ManifoldDescriptor& manifold,
                   std::optional<std::uint64_t> seed) {
  Json j;
  j["engine"] = kEngineName;
  j["version"] = kEngineVersion;
  j["command"] = command;
  j["manifold"] = manifold.name;
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  return j;
}

Json to_json(const HermitianGeometry& g, const MetricReport& r) {
  Json j;
  j["metric"] = g.metric().to_string();
  j["omega_scale"] = g.omega_scale().to_string();
  j["integrable"] = r.integrable;
  j["invariant_stokes"] = r.invariant_stokes;
  j["verdicts"] = verdicts(r);
  j["omega"] = g.render(r.omega);
  j["d_omega"] = g.render(r.d_omega);
  j["d_omega_n1"] = g.render(r.d_omega_n1);

  Json gd;
  gd["verdict"] = verdict_name(r.gauduchon);
  gd["ddbar_omega_n1"] = g.render(r.gauduchon_detail.ddbar_omega_n1);
  gd["formal"] = r.gauduchon_detail.formal;
  j["gauduchon"] = gd;

  Json sg;
  sg["verdict"] = verdict_name(r.strongly_gauduchon);
  sg["del_omega_n1"] = g.render(r.witness.del_omega_n1);
  sg["witness"] = r.witness.lambda ? Json(g.render(*r.witness.lambda)) : Json(nullptr);
  sg["residual"] = g.render(r.witness.residual);
  sg["reason"] = r.witness.reason;
  j["strongly_gauduchon"] = sg;

  Json ic;
  ic["verdict"] = verdict_name(r.integral_condition);
  ic["harmonic_0_1"] = forms(g, r.integral.harmonic.basis);
  Json values = Json::array();
  for (const auto& v : r.integral.values) {
    Json e;
    e["eta"] = g.render(v.eta);
    e["integrand_coefficient"] = g.render(v.value);
    e["status"] = integral_status_name(v.status);
    e["route"] = v.route;
    e["primitive"] = v.primitive ? Json(g.render(*v.primitive)) : Json(nullptr);
    values.push_back(e);
  }
  ic["values"] = values;
  j["integral_condition"] = ic;

  Json orth;
  orth["verdict"] = verdict_name(r.orthogonality);
  orth["del_star_omega"] = g.render(r.orthogonal.del_star_omega);
  Json pairings = Json::array();
  for (const auto& p : r.orthogonal.pairings) {
    Json e;
    e["coefficient"] = g.render(p.coefficient);
    e["requires_integration"] = p.requires_integration;
    pairings.push_back(e);
  }
  orth["pairings"] = pairings;
  j["orthogonality"] = orth;

  if (r.lee) {
    Json lee;
    lee["theta"] = r.lee->theta.to_string();
    lee["d_star_theta"] = r.lee->d_star_theta.to_string();
    j["lee_form"] = lee;
  } else {
    j["lee_form"] = nullptr;
  }
  Json hodge = Json::array();
  for (const auto& h : r.hodge_numbers) hodge.push_back(Json{{"p", h.p}, {"q", h.q}, {"dimension", h.dimension}});
  j["harmonic_dimensions"] = hodge;
  j["caveats"] = Json::array({"harmonic spaces are computed on invariant forms only"});
  return j;
}

Json to_json(const RelationReport& r, const AlmostComplexStructure& acs) {
  Json j;
  j["all_hold"] = r.all_hold();
  j["del_squared_vanishes"] = r.del_squared_vanishes;
  Json rel = Json::array();
  for (const auto& x : r.relations) {
    Json e;
    e["identity"] = x.identity;
    e["holds"] = x.holds;
    e["counterexample"] = x.counterexample ? Json(render_word(acs.space(), *x.counterexample)) : Json(nullptr);
    e["residual"] = x.residual.to_string(acs.frame_brackets());
    rel.push_back(e);
  }
  j["relations"] = rel;
  return j;
}

Json to_json(const HermitianGeometry& g, const HarmonicBasis& h) {
  Json j;
  j["metric"] = g.metric().to_string();
  j["p"] = h.p;
  j["q"] = h.q;
  j["dimension"] = h.dimension();
  j["basis"] = forms(g, h.basis);
  j["caveats"] = Json::array({"invariant forms only"});
  return j;
}

Json to_json(const BatchSummary& s) {
  Json j;
  j["samples"] = s.samples;
  j["gauduchon"] = s.gauduchon;
  j["strongly_gauduchon"] = s.strongly_gauduchon;
  j["integral_condition"] = s.integral_condition;
  j["vacuous_integral_condition"] = s.vacuous_integral_condition;
  j["sg_without_ic"] = s.sg_without_ic;
  j["ic_orthogonality_disagreements"] = s.ic_orthogonality_disagreements;
  j["integrable_gauduchon_checked"] = s.integrable_gauduchon_checked;
  j["ic_witness_disagreements"] = s.ic_witness_disagreements;
  j["all_sampled_gauduchon_are_sg"] = s.all_sampled_gauduchon_are_sg;
  j["caveats"] = Json::array({"statements hold over the sample only"});
  return j;
}

Json to_json(const ObstructionCertificate& c) {
  Json j;
  j["found"] = c.found;
  j["stage"] = c.stage;
  Json v = Json::array();
  for (const auto& x : c.vector) v.push_back(x.get_str());
  j["vector"] = v;
  j["frame"] = "x1, y1, ..., xn, yn dual to Re phi, Im phi";
  Json fs = Json::array();
  for (const auto& f : c.compatible_closed_forms) fs.push_back(f.to_string());
  j["compatible_closed_forms"] = fs;
  return j;
}

std::string describe(const HermitianGeometry& g, const MetricReport& r) {
  std::ostringstream os;
  os << "metric             " << g.metric().to_string() << "\n"
     << "integrable         " << (r.integrable ? "yes" : "no") << "\n"
     << "omega              " << g.render(r.omega) << "\n"
     << "d omega            " << g.render(r.d_omega) << "\n"
     << "almost_kahler      " << verdict_name(r.almost_kahler) << "\n"
     << "balanced           " << verdict_name(r.balanced) << "\n"
     << "skt                " << verdict_name(r.skt) << "\n"
     << "gauduchon          " << verdict_name(r.gauduchon) << "   del delbar omega^{n-1} = "
     << g.render(r.gauduchon_detail.ddbar_omega_n1) << "\n"
     << "strongly_gauduchon " << verdict_name(r.strongly_gauduchon) << "   del omega^{n-1} = "
     << g.render(r.witness.del_omega_n1);
  if (r.witness.lambda) os << ", witness " << g.render(*r.witness.lambda);
  os << "\n"
     << "integral_condition " << verdict_name(r.integral_condition) << "\n";
  for (const auto& v : r.integral.values)
    os << "  eta = " << g.render(v.eta) << ": " << integral_status_name(v.status) << " (" << v.route << ")\n";
  os << "orthogonality      " << verdict_name(r.orthogonality) << "\n"
     << "harmonic (0,1)     dimension " << r.integral.harmonic.dimension() << " (invariant part)\n";
  return os.str();
}

}  // namespace acs
