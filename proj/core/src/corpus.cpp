#include "parabolica/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "parabolica/errors.hpp"
#include "parabolica/text.hpp"

namespace parabolica {

namespace {

CorpusExpectation expect(int godrons, int interior, int P, int N, int chi, int equator, std::string side,
                         Rational identity) {
  CorpusExpectation e;
  e.godrons = godrons;
  e.interior = interior;
  e.P = P;
  e.N = N;
  e.chi_B_minus = chi;
  e.equator_points = equator;
  e.b_minus_contains = std::move(side);
  e.identity = identity;
  return e;
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;
  out.push_back({"q_cubic", "x^2 + y^2 + y*(x^2 + y^2)",
                 "Hessian curve a hyperbola; one godron; two equator singular points",
                 expect(1, 1, 1, 0, 0, 2, "H", ratio(1, 2))});
  out.push_back({"g_quartic", "y*(x+3)*(x-y)*(y+x-3)",
                 "four real lines at infinity; three compact ovals, eight interior godrons",
                 expect(8, 8, 3, 0, -2, 8, "H", Rational(2))});
  out.push_back({"pair_f", "x^4 + 6*x^2*y^2 - y^4 + 3*x^2*y - 3*x*y^2 + 10*y^2 - 10*x^2",
                 "hyperbolic side of the Hessian curve lies in B-",
                 expect(6, 6, 3, 0, -2, 4, "H", Rational(1))});
  out.push_back({"pair_g", "x^4 + 6*x^2*y^2 - y^4 + 3*x^2*y - 3*x*y^2 + 10*y^2 + 10*x^2",
                 "companion of pair_f: elliptic side lies in B-",
                 expect(0, 0, 1, 0, 0, 4, "E", Rational(1))});
  out.push_back({"elliptic_quartic", "x^4 + 3*x^2*y^2 + y^4 + x*y^2 - x^2",
                 "elliptic top form; nested ovals; two interior and two exterior godrons",
                 expect(4, 2, 1, 1, 1, 0, "E", Rational(0))});
  out.push_back({"quintic_transversal", "x^5 - 3*x^3*y^2 + y^5 + x^2 + y^2",
                 "odd degree; Hessian curve crosses infinity transversally",
                 expect(3, 3, 1, 0, 0, 6, "H", ratio(3, 2))});
  out.push_back({"quintic_five_lines", "x^5 - 4*x^3*y^2 + 2*x*y^4 + x^2 + y^2",
                 "five real lines at infinity; godron at (4^(-1/3), 0) enters along its asymptotic curve",
                 expect(5, 5, 1, 0, 0, 10, "H", ratio(5, 2))});
  out.push_back({"three_lines_cubic", "x*y*(x-y) + x^2 - y", "cubic with three real lines at infinity",
                 expect(3, 3, 1, 0, 0, 6, "H", ratio(3, 2))});
  CorpusExpectation flat;
  flat.equator_points = 6;
  flat.refusal = "S_f generic: flat point";
  out.push_back({"flat_cubic", "x*(x^2 - 2*y^2) + y", "flat point at the origin; identity refused", flat});
  return out;
}

std::string text(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e;
  }
  throw Error(ErrorCode::kInvalidArgument, "no corpus entry named '" + name + "'");
}

bool CorpusResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CorpusCheck& c) { return c.pass; }) &&
         report.verified();
}

CorpusResult run_corpus_entry(const CorpusEntry& entry, const ReportOptions& options) {
  CorpusResult res;
  res.entry = &entry;
  const auto t0 = std::chrono::steady_clock::now();
  res.report = full_report(parse_polynomial(entry.polynomial), options);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const StructureReport& r = res.report;
  const CorpusExpectation& e = entry.expect;

  const auto check_int = [&](const char* what, const std::optional<int>& want, std::optional<int> got) {
    if (!want) return;
    res.checks.push_back({what, text(want), text(got), got && *got == *want});
  };
  std::optional<int> godrons, interior, P, N, chi, equator;
  if (r.godrons) {
    godrons = static_cast<int>(r.godrons->godrons.size());
    interior = r.P_i;
  }
  if (r.topology) {
    P = r.topology->P;
    N = r.topology->N;
    chi = r.topology->chi_B_minus;
  }
  if (r.infinity) equator = static_cast<int>(r.infinity->points.size());
  check_int("godrons", e.godrons, godrons);
  check_int("interior", e.interior, interior);
  check_int("P", e.P, P);
  check_int("N", e.N, N);
  check_int("chi(B-)", e.chi_B_minus, chi);
  check_int("equator points", e.equator_points, equator);
  if (e.b_minus_contains) {
    const std::string got = r.topology ? r.topology->b_minus_contains() : "-";
    res.checks.push_back({"B- contains", *e.b_minus_contains, got, got == *e.b_minus_contains});
  }
  if (e.identity) {
    const double want = to_double(*e.identity);
    const bool ok = r.identity.evaluated && r.identity.pass && std::abs(r.identity.lhs - want) < 1e-6;
    res.checks.push_back({"identity", to_string(*e.identity),
                          r.identity.evaluated ? format_half(r.identity.lhs) + " = " + format_half(r.identity.rhs)
                                               : "refused: " + r.identity.refusal,
                          ok});
  }
  if (e.refusal) {
    const std::string got = r.identity.evaluated ? "evaluated" : r.identity.refusal;
    res.checks.push_back({"refusal", *e.refusal, got, got == *e.refusal});
  }
  return res;
}

std::vector<CorpusResult> run_corpus(const ReportOptions& options) {
  std::vector<CorpusResult> out;
  for (const auto& e : corpus()) out.push_back(run_corpus_entry(e, options));
  return out;
}

}  // namespace parabolica
