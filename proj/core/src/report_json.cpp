#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "parabolica/report.hpp"

namespace parabolica {

namespace {

using Json = nlohmann::ordered_json;

Json real(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::stod(buf);
}

// Half-integers (snapped indices, identity sides) are exact.
Json half(double v) {
  if (std::isfinite(v) && std::round(2.0 * v) == 2.0 * v && std::abs(v) < 1e9) {
    return to_string(ratio(static_cast<long>(2.0 * v), 2));
  }
  return real(v);
}

Json pair(double a, double b) { return Json::array({real(a), real(b)}); }

Json index_json(const LineFieldIndex& i) {
  return {{"value", half(i.value)}, {"raw", real(i.raw)}, {"snapped", i.snapped},
          {"samples", i.samples}, {"radius", real(i.radius)}};
}

Json topology_json(const CurveTopology& t) {
  Json comps = Json::array();
  for (const auto& c : t.components) {
    comps.push_back({{"chart", c.chart},
                     {"closed", c.closed},
                     {"oval", c.oval},
                     {"nesting_depth", c.nesting_depth},
                     {"infinity_crossings", c.infinity_crossings},
                     {"points", c.points.size()}});
  }
  Json inf = Json::array();
  for (const auto& z : t.infinity_points) {
    Json e = {{"direction", pair(z.u, z.v)}, {"multiplicity", z.multiplicity}};
    if (z.exact_slope) e["slope"] = to_string(*z.exact_slope);
    if (z.vertical) e["slope"] = "vertical";
    inf.push_back(e);
  }
  return {{"components", comps},
          {"P", t.P},
          {"N", t.N},
          {"pseudo_line", t.pseudo_line},
          {"transversal_to_infinity", t.transversal_to_infinity},
          {"chi_B_plus", t.chi_B_plus},
          {"chi_B_minus", t.chi_B_minus},
          {"b_minus_contains", t.b_minus_contains()},
          {"infinity_points", inf},
          {"scale", real(t.scale)}};
}

Json godrons_json(const GodronSearch& g, int pi, int pe) {
  Json pts = Json::array();
  for (const auto& d : g.godrons) {
    pts.push_back({{"location", pair(d.location.x, d.location.y)},
                   {"direction", real(d.direction.angle)},
                   {"tangency", std::string(to_string(d.tangency))},
                   {"second_derivative", real(d.second_derivative)},
                   {"contact_discriminant", real(d.contact_discriminant)},
                   {"degenerate", d.degenerate}});
  }
  return {{"count", g.godrons.size()}, {"P_i", pi}, {"P_e", pe}, {"points", pts}};
}

Json infinity_json(const InfinityAnalysis& a) {
  Json pts = Json::array();
  for (const auto& p : a.points) {
    const auto& l = p.linearization;
    pts.push_back({{"equator_point", Json::array({real(p.equator_point.x + 0.0), real(p.equator_point.y + 0.0), 0})},
                   {"linear_factor", p.linear_factor},
                   {"multiplicity", p.multiplicity},
                   {"antipode", p.antipode},
                   {"index_Y1", index_json(p.index_Y1)},
                   {"index_Y2", index_json(p.index_Y2)},
                   {"index_projective", half(p.projective.rule)},
                   {"projective_X1", index_json(p.projective.x1)},
                   {"projective_X2", index_json(p.projective.x2)},
                   {"a_coeff", real(p.a_coeff)},
                   {"linearization",
                    {{"DY1", Json::array({pair(l.DY1[0][0], l.DY1[0][1]), pair(l.DY1[1][0], l.DY1[1][1])})},
                     {"DY2", Json::array({pair(l.DY2[0][0], l.DY2[0][1]), pair(l.DY2[1][0], l.DY2[1][1])})},
                     {"eigenvalues_Y1", pair(l.eigen1[0], l.eigen1[1])},
                     {"eigenvalues_Y2", pair(l.eigen2[0], l.eigen2[1])},
                     {"node_field", l.node_field},
                     {"expected_node_field", l.expected_node_field},
                     {"exact", l.exact},
                     {"identity_residual", real(l.identity_residual)},
                     {"pass", l.pass}}}});
  }
  return {{"k", a.k},
          {"squarefree", a.squarefree},
          {"points", pts},
          {"sum_index_Y1", half(a.sum_index_Y1())},
          {"sum_index_Y2", half(a.sum_index_Y2())},
          {"sum_projective_X1", half(a.sum_projective(1))},
          {"sum_projective_X2", half(a.sum_projective(2))}};
}

}  // namespace

std::string to_json(const StructureReport& r, int indent) {
  Json doc;
  doc["input"] = {{"polynomial", r.input}, {"degree", r.degree}, {"hessian", r.hessian}};
  doc["seed"] = r.seed;
  if (r.compactness) {
    const auto& c = *r.compactness;
    doc["compactness"] = {{"hessian_compact", c.hessian_compact},
                          {"unbounded_component_class",
                           c.unbounded_component_class ? Json(std::string(to_string(*c.unbounded_component_class)))
                                                       : Json(nullptr)},
                          {"reason", c.reason}};
  } else {
    doc["compactness"] = nullptr;
  }
  doc["topology"] = r.topology ? topology_json(*r.topology) : Json(nullptr);
  if (r.petrowsky) {
    const auto& p = *r.petrowsky;
    doc["petrowsky"] = {{"k", p.k},
                        {"lower", to_string(ratio(p.twice_lower, 2))},
                        {"upper", to_string(ratio(p.twice_upper, 2))},
                        {"value", p.value},
                        {"pass", p.pass}};
  } else {
    doc["petrowsky"] = nullptr;
  }
  doc["godrons"] = r.godrons ? godrons_json(*r.godrons, r.P_i, r.P_e) : Json(nullptr);
  doc["infinity"] = r.infinity ? infinity_json(*r.infinity) : Json(nullptr);
  doc["index_sum"] = half(r.index_sum);
  const auto& id = r.identity;
  doc["identity"] = {{"evaluated", id.evaluated},
                     {"epsilon", id.epsilon},
                     {"chi", id.chi},
                     {"lhs", half(id.lhs)},
                     {"rhs", half(id.rhs)},
                     {"pass", id.pass},
                     {"refusal", id.refusal}};
  Json bounds = Json::array();
  for (const auto& b : r.bounds) {
    bounds.push_back({{"name", b.name},
                      {"formula", b.formula},
                      {"lower", b.lower ? Json(to_string(*b.lower)) : Json(nullptr)},
                      {"upper", to_string(b.upper)},
                      {"measured", half(b.measured)},
                      {"applicable", b.applicable},
                      {"pass", b.pass},
                      {"note", b.note}});
  }
  doc["bounds"] = bounds;
  Json refusals = Json::array();
  for (const auto& s : r.refusals) refusals.push_back({{"stage", s.stage}, {"code", s.code}, {"reason", s.reason}});
  doc["refusals"] = refusals;
  doc["warnings"] = r.warnings;
  doc["verified"] = r.verified();
  return doc.dump(indent);
}

}  // namespace parabolica
