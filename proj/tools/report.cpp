#include "report.hpp"

#include <sstream>

namespace qindex {

namespace {

using nlohmann::json;

json point_json(const PolygonPoint& pt) { return json::array({pt.x, pt.y}); }

std::string slope_string(const Side& s) {
  const auto [num, den] = s.slope();
  return std::to_string(num) + "/" + std::to_string(den);
}

json residual_coeffs(const ResidueField::Poly& f) {
  // Coefficient i of y^i, itself a polynomial over F_p in the residue field
  // generator: a list of lists of integers, exact by construction.
  json out = json::array();
  for (const GFPoly& e : f) out.push_back(e.c);
  return out;
}

json side_json(const SideAnalysis& sa) {
  json j;
  j["from"] = point_json(sa.side.from);
  j["to"] = point_json(sa.side.to);
  j["length"] = sa.side.length();
  j["drop"] = sa.side.drop();
  j["degree"] = sa.side.d();
  j["ramification"] = sa.side.e();
  j["slope"] = slope_string(sa.side);
  json r;
  r["coefficients"] = residual_coeffs(sa.residual);
  r["rendered"] = sa.residual_str;
  r["separable"] = sa.separable;
  json fs = json::array();
  for (const auto& [f, mult] : sa.residual_factors) {
    json fj;
    fj["coefficients"] = residual_coeffs(f);
    fj["multiplicity"] = mult;
    fs.push_back(std::move(fj));
  }
  r["factors"] = std::move(fs);
  j["residual"] = std::move(r);
  return j;
}

json phi_json(const PhiAnalysis& pa) {
  json j;
  j["phi"] = pa.phi_bar.to_string();
  j["lift"] = pa.lift.to_string();
  j["multiplicity"] = pa.multiplicity;
  j["regular"] = pa.regular;
  j["index_contribution"] = pa.index_contribution;
  if (pa.has_polygon) {
    json poly;
    json pts = json::array();
    for (const PolygonPoint& pt : pa.polygon.points) pts.push_back(point_json(pt));
    poly["points"] = std::move(pts);
    json hull = json::array();
    for (const PolygonPoint& pt : pa.polygon.hull) hull.push_back(point_json(pt));
    poly["hull"] = std::move(hull);
    json sides = json::array();
    for (const SideAnalysis& sa : pa.sides) sides.push_back(side_json(sa));
    poly["sides"] = std::move(sides);
    j["polygon"] = std::move(poly);
  } else {
    j["polygon"] = nullptr;
  }
  json parts = json::array();
  for (const SplittingPart& part : pa.parts)
    parts.push_back(json{{"e", part.e}, {"f", part.f}});
  j["parts"] = std::move(parts);
  return j;
}

json prime_json(const PrimeAnalysis& pa) {
  json j;
  j["p"] = pa.p;
  j["conclusive"] = pa.conclusive;
  j["used_shift"] = pa.used_shift;
  j["shift_attempts"] = pa.shift_attempts;
  j["shift_trace"] = pa.shift_trace;
  j["shape"] = pa.shape ? json(pa.shape->to_string()) : json(nullptr);
  j["engine_nu"] = pa.engine_nu ? json(*pa.engine_nu) : json(nullptr);
  j["theorem_nu"] = pa.theorem_nu ? json(*pa.theorem_nu) : json(nullptr);
  j["nu"] = pa.nu;
  j["nu_source"] = pa.nu_source;
  j["index_valuation"] = pa.engine ? json(pa.engine->index_valuation) : json(nullptr);
  j["dedekind_maximal"] = pa.dedekind ? json(pa.dedekind->maximal) : json(nullptr);
  j["note"] = pa.note;
  json factors = json::array();
  if (pa.engine)
    for (const PhiAnalysis& f : pa.engine->phis) factors.push_back(phi_json(f));
  j["factors"] = std::move(factors);
  return j;
}

std::string irreducibility_status(const IrreducibilityResult& r) {
  switch (r.status) {
    case IrreducibilityStatus::CertifiedEisenstein: return "certified_eisenstein";
    case IrreducibilityStatus::CertifiedModP: return "certified_mod_p";
    case IrreducibilityStatus::NoSmallFactor: return "no_small_factor";
    case IrreducibilityStatus::Reducible: return "reducible";
    case IrreducibilityStatus::Uncertified: return "uncertified";
  }
  return "uncertified";
}

json params_json(const CaseParameters& ps) {
  json j = json::object();
  auto put = [&](const char* name, const std::optional<Valuation>& v) {
    if (v) j[name] = v->to_string();
  };
  put("mu", ps.mu);
  put("nu", ps.nu);
  put("omega", ps.omega);
  put("tau", ps.tau);
  put("sigma", ps.sigma);
  if (ps.k) j["k"] = *ps.k;
  if (ps.l) j["l"] = *ps.l;
  return j;
}

json match_json(const TheoremMatch& m) {
  json j;
  j["theorem"] = m.theorem;
  j["case"] = m.case_number;
  j["p"] = m.p;
  j["nu_p"] = m.nu_p;
  j["expected_shape"] = m.expected_shape.to_string();
  j["params"] = params_json(m.params);
  j["rendered"] = m.to_string();
  return j;
}

json squarefree_json(const SquarefreeStatus& s) {
  json j;
  switch (s.kind) {
    case SquarefreeStatus::Kind::Squarefree: j["kind"] = "squarefree"; break;
    case SquarefreeStatus::Kind::NotSquarefree: j["kind"] = "not_squarefree"; break;
    case SquarefreeStatus::Kind::UnknownBeyondBound: j["kind"] = "unknown_beyond_bound"; break;
  }
  j["witness"] = s.not_squarefree() ? json(s.witness.str()) : json(nullptr);
  j["bound"] = s.unknown() ? json(s.bound) : json(nullptr);
  return j;
}

json monogenicity_json(const MonogenicityVerdict& v) {
  json j;
  switch (v.kind) {
    case MonogenicityVerdict::Kind::NotMonogenic: j["kind"] = "not_monogenic"; break;
    case MonogenicityVerdict::Kind::FieldMonogenicPolyNot:
      j["kind"] = "field_monogenic_poly_not";
      break;
    case MonogenicityVerdict::Kind::Inconclusive: j["kind"] = "inconclusive"; break;
  }
  j["p"] = v.p;
  j["reason"] = v.reason;
  if (v.theta) {
    j["theta"] = json{{"s", v.theta->s}, {"t", v.theta->t}, {"p", v.theta->p},
                      {"rendered", v.theta->to_string()}};
  } else {
    j["theta"] = nullptr;
  }
  j["theta_minpoly"] = v.theta_minpoly ? json(v.theta_minpoly->to_string()) : json(nullptr);
  j["nu_ind_alpha"] = v.nu_ind_alpha ? json(*v.nu_ind_alpha) : json(nullptr);
  j["dp_squarefree"] = v.dp_squarefree ? squarefree_json(*v.dp_squarefree) : json(nullptr);
  j["rendered"] = v.to_string();
  return j;
}

}  // namespace

json report_to_json(const IndexReport& rep) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["input"] = json{{"a", rep.input.a.str()},
                    {"b", rep.input.b.str()},
                    {"c", rep.input.c.str()},
                    {"polynomial", rep.input.to_string()}};
  json irr;
  irr["status"] = irreducibility_status(rep.irreducibility);
  irr["p"] = rep.irreducibility.p;
  irr["factor"] =
      rep.irreducibility.factor ? json(rep.irreducibility.factor->to_string()) : json(nullptr);
  irr["rendered"] = rep.irreducibility.to_string();
  j["irreducibility"] = std::move(irr);

  json primes = json::array();
  json shapes = json::object();
  for (const PrimeAnalysis& pa : rep.primes) {
    primes.push_back(prime_json(pa));
    shapes[std::to_string(pa.p)] = pa.shape ? json(pa.shape->to_string()) : json(nullptr);
  }
  j["primes"] = std::move(primes);
  j["shapes"] = std::move(shapes);
  j["nu2"] = rep.nu2;
  j["nu3"] = rep.nu3;
  j["i_K"] = rep.i_K.str();
  json matches = json::array();
  for (const TheoremMatch& m : rep.matches) matches.push_back(match_json(m));
  j["matches"] = std::move(matches);
  j["monogenicity"] = monogenicity_json(rep.monogenicity);
  j["caveats"] = rep.caveats;
  j["internal_inconsistency"] = rep.internal_inconsistency;
  return j;
}

json family_to_json(const FamilyReport& rep) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["theorem"] = rep.theorem;
  j["case"] = rep.case_number;
  j["p"] = rep.p;
  j["classes"] = rep.classes;
  j["instances"] = rep.instances;
  j["shift_instances"] = rep.shift_instances;
  j["resamples"] = rep.resamples;
  json cxs = json::array();
  for (const FamilyCounterexample& cx : rep.counterexamples)
    cxs.push_back(json{{"a", cx.a.str()}, {"b", cx.b.str()}, {"c", cx.c.str()},
                       {"what", cx.what}});
  j["counterexamples"] = std::move(cxs);
  json probe;
  probe["applicable"] = rep.probe_applicable;
  probe["candidates"] = rep.probe_candidates;
  probe["extras"] = rep.probe_extras;
  j["probe"] = std::move(probe);
  j["notes"] = rep.notes;
  j["passed"] = rep.passed();
  return j;
}

std::string render_report(const IndexReport& rep) {
  std::ostringstream os;
  os << "F(x) = " << rep.input.to_string() << "\n";
  os << "irreducibility: " << rep.irreducibility.to_string() << "\n";
  if (rep.reducible()) return os.str();

  for (const PrimeAnalysis& pa : rep.primes) {
    os << "p = " << pa.p << ":";
    if (pa.shape) os << " " << pa.p << "O_K = " << pa.shape->to_string() << ",";
    os << " nu_" << pa.p << " = " << pa.nu << " (" << pa.nu_source << ")";
    if (pa.used_shift) os << " [shifted generators]";
    os << "\n";
    if (!pa.note.empty()) os << "  note: " << pa.note << "\n";
    if (!pa.engine) continue;
    for (const PhiAnalysis& f : pa.engine->phis) {
      os << "  factor " << f.phi_bar.to_string() << " (lift " << f.lift.to_string()
         << ", multiplicity " << f.multiplicity << ")";
      if (!f.has_polygon) {
        os << ": no polygon needed\n";
        continue;
      }
      os << "\n    points:";
      for (const PolygonPoint& pt : f.polygon.points) os << " (" << pt.x << "," << pt.y << ")";
      os << "\n";
      for (const SideAnalysis& sa : f.sides) {
        os << "    side (" << sa.side.from.x << "," << sa.side.from.y << ")-(" << sa.side.to.x
           << "," << sa.side.to.y << "): slope " << slope_string(sa.side) << ", residual "
           << sa.residual_str << (sa.separable ? " (separable)" : " (NOT separable)") << "\n";
      }
    }
  }
  os << "nu_2 = " << rep.nu2 << ", nu_3 = " << rep.nu3 << ", i(K) = " << rep.i_K.str() << "\n";
  if (rep.matches.empty()) {
    os << "matches: none\n";
  } else {
    os << "matches:\n";
    for (const TheoremMatch& m : rep.matches) os << "  " << m.to_string() << "\n";
  }
  os << "monogenicity: " << rep.monogenicity.to_string() << "\n";
  for (const std::string& cv : rep.caveats) os << "caveat: " << cv << "\n";
  if (rep.internal_inconsistency) os << "INTERNAL INCONSISTENCY detected (see caveats)\n";
  return os.str();
}

std::string render_family(const FamilyReport& rep) {
  std::ostringstream os;
  os << (rep.passed() ? "PASS" : "FAIL") << ": " << rep.summary() << "\n";
  for (const FamilyCounterexample& cx : rep.counterexamples)
    os << "  counterexample (a,b,c) = (" << cx.a.str() << ", " << cx.b.str() << ", "
       << cx.c.str() << "): " << cx.what << "\n";
  for (const auto& extra : rep.probe_extras) {
    os << "  probe extra class:";
    for (long v : extra) os << " " << v;
    os << " (mod the list modulus)\n";
  }
  for (const std::string& note : rep.notes) os << "  note: " << note << "\n";
  return os.str();
}

}  // namespace qindex
