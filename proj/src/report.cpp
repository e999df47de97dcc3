#include "pinch/report.hpp"

#include <algorithm>
#include <sstream>

#include "pinch/errors.hpp"

namespace pinch {

using nlohmann::json;

namespace {

Tristate tristate_from(const std::string& s) {
  if (s == "yes") return Tristate::Yes;
  if (s == "no") return Tristate::No;
  if (s == "unknown") return Tristate::Unknown;
  throw SpecError("bad tristate '" + s + "'");
}

Normalization normalization_from(const std::string& s) {
  for (auto v : {Normalization::SelfNormal, Normalization::NormalizedByVeronese,
                 Normalization::RegularSpecialCase}) {
    if (s == to_string(v)) return v;
  }
  throw SpecError("bad normalization '" + s + "'");
}

FType ftype_from(const std::string& s) {
  for (auto v : {FType::FRegular, FType::FNilpotent, FType::FInjective, FType::Regular}) {
    if (s == to_string(v)) return v;
  }
  throw SpecError("bad F-singularity type '" + s + "'");
}

FteValue::Kind fte_kind_from(const std::string& s) {
  for (auto v : {FteValue::Kind::Exact, FteValue::Kind::Bound, FteValue::Kind::Unknown}) {
    if (s == to_string(v)) return v;
  }
  throw SpecError("bad Fte kind '" + s + "'");
}

json vectors_to_json(const std::vector<ExponentVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

std::vector<ExponentVector> vectors_from_json(const json& j) {
  std::vector<ExponentVector> out;
  for (const auto& e : j) out.push_back(exponent_vector_from_json(e));
  return out;
}

json to_json(const ClassificationReport& c) {
  return json{{"dimension", c.dimension},
              {"depth", c.depth},
              {"cohen_macaulay", c.cohen_macaulay},
              {"generalized_cm", c.generalized_cm},
              {"gorenstein", to_string(c.gorenstein)},
              {"complete_intersection", to_string(c.complete_intersection)},
              {"a_invariant", c.a_invariant ? json(*c.a_invariant) : json(nullptr)},
              {"normalization", to_string(c.normalization)},
              {"rules", c.rules}};
}

ClassificationReport classification_from_json(const json& j) {
  ClassificationReport c;
  c.dimension = j.at("dimension").get<std::size_t>();
  c.depth = j.at("depth").get<int>();
  c.cohen_macaulay = j.at("cohen_macaulay").get<bool>();
  c.generalized_cm = j.at("generalized_cm").get<bool>();
  c.gorenstein = tristate_from(j.at("gorenstein").get<std::string>());
  c.complete_intersection = tristate_from(j.at("complete_intersection").get<std::string>());
  if (!j.at("a_invariant").is_null()) c.a_invariant = j.at("a_invariant").get<Coord>();
  c.normalization = normalization_from(j.at("normalization").get<std::string>());
  c.rules = j.at("rules").get<std::vector<std::string>>();
  return c;
}

json to_json(const FSingularityReport& f) {
  json fte{{"kind", to_string(f.fte.kind)},
           {"formula", f.fte.formula},
           {"rationale", f.fte.rationale},
           {"value", f.fte.kind == FteValue::Kind::Unknown ? json(nullptr) : json(f.fte.value)}};
  return json{{"p", f.p},
              {"ftype", to_string(f.ftype)},
              {"f_pure", to_string(f.f_pure)},
              {"hsl", {{"value", f.hsl.value}, {"exact", f.hsl.exact}}},
              {"fte", fte},
              {"rules", f.rules}};
}

FSingularityReport fsing_from_json(const json& j) {
  FSingularityReport f;
  f.p = j.at("p").get<int>();
  f.ftype = ftype_from(j.at("ftype").get<std::string>());
  f.f_pure = tristate_from(j.at("f_pure").get<std::string>());
  f.hsl.value = j.at("hsl").at("value").get<int>();
  f.hsl.exact = j.at("hsl").at("exact").get<bool>();
  const auto& fte = j.at("fte");
  f.fte.kind = fte_kind_from(fte.at("kind").get<std::string>());
  f.fte.formula = fte.at("formula").get<std::string>();
  f.fte.rationale = fte.at("rationale").get<std::string>();
  if (!fte.at("value").is_null()) f.fte.value = fte.at("value").get<long long>();
  f.rules = j.at("rules").get<std::vector<std::string>>();
  return f;
}

GapSummary gap_from_json(const json& j) {
  GapSummary g;
  g.form = j.at("form").get<std::string>();
  g.finite = j.at("finite").get<bool>();
  g.members = vectors_from_json(j.at("members"));
  if (j.contains("family")) {
    const auto& fam = j.at("family");
    auto ax = fam.at("axes").get<std::vector<std::size_t>>();
    g.axes = std::make_pair(ax.at(0), ax.at(1));
    g.family_d = fam.at("d").get<Coord>();
  }
  g.sample_degree = j.at("sample_degree").get<Coord>();
  g.sample = vectors_from_json(j.at("sample"));
  if (!j.at("principal_generator").is_null()) {
    g.principal_generator = exponent_vector_from_json(j.at("principal_generator"));
  }
  return g;
}

void append_unique(std::vector<std::string>& out, const std::vector<std::string>& in) {
  for (const auto& s : in) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
}

}  // namespace

json to_json(const ExponentVector& v) { return json(std::vector<Coord>(v.coords().begin(), v.coords().end())); }

ExponentVector exponent_vector_from_json(const json& j) { return ExponentVector(j.get<std::vector<Coord>>()); }

json to_json(const GapSummary& g) {
  json out{{"form", g.form},
           {"finite", g.finite},
           {"members", vectors_to_json(g.members)},
           {"sample_degree", g.sample_degree},
           {"sample", vectors_to_json(g.sample)},
           {"principal_generator", g.principal_generator ? to_json(*g.principal_generator) : json(nullptr)}};
  if (g.axes) {
    out["family"] = {{"family", g.form},
                     {"axes", {g.axes->first, g.axes->second}},
                     {"d", g.family_d}};
  }
  return out;
}

GapSummary summarize_gaps(const CokernelModel& model, Coord sample_degree) {
  GapSummary g;
  g.form = to_string(model.gap.form());
  g.finite = model.gap.is_finite();
  if (g.finite) {
    g.members = model.gap.finite_members();
  } else {
    auto [a, b] = model.gap.axes();
    g.axes = std::make_pair(a + 1, b + 1);
    g.family_d = model.gap.d();
  }
  g.sample_degree = sample_degree;
  g.sample = model.gap.materialize(sample_degree);
  g.principal_generator = model.principal_generator;
  return g;
}

AnalysisReport analyze(const SemigroupSpec& spec, const std::vector<Characteristic>& chars) {
  AnalysisReport r;
  r.n = spec.n();
  r.d = spec.d();
  r.kind = to_string(spec.kind());
  r.removed = spec.removed();

  const Coord horizon = 6 * spec.d();
  CokernelModel model = cokernel_model(spec);
  r.gap = summarize_gaps(model, horizon);
  r.classification = classify(spec);

  if (spec.kind() == SpecKind::SinglePinch) {
    GapCheck check = verify_gap_equivalence(spec, 6);
    std::string detail = check.equal ? "closed form equals oracle through 6 layers"
                                     : std::to_string(check.closed_form_only.size()) + " closed-form-only, " +
                                           std::to_string(check.oracle_only.size()) + " oracle-only";
    r.verification.push_back({"gap-equivalence", check.equal, detail});
  }
  if (model.principal_generator) {
    auto bad = principality_violations(model, horizon);
    r.verification.push_back({"principality", bad.empty(),
                              bad.empty() ? "every gap vector is generator + member to degree 6d"
                                          : "fails at " + bad.front().to_string()});
  }
  if (spec.kind() == SpecKind::MultiPinch) {
    r.verification.push_back({"multipinch-finite", true,
                              std::to_string(model.gap.finite_members().size()) +
                                  " gap vector(s), all coordinates below (n-1)(d^2-d)=" +
                                  std::to_string(multipinch_coordinate_bound(spec.n(), spec.d()))});
  }

  for (const auto& p : chars) {
    FSingularityReport f = f_singularity(spec, p);
    if (!model.gap.empty()) {
      FrobeniusTrace trace = frobenius_on_cokernel(model, p, horizon);
      bool ok = false;
      std::string detail = std::to_string(trace.steps.size()) + " gap vector(s) traced: ";
      switch (trace.family) {
        case FamilyVerdict::KilledInOneStep:
          ok = trace.nilpotency_index == 1;
          detail += "every image is a member";
          break;
        case FamilyVerdict::PersistsForever:
          ok = trace.all_persist();
          detail += "every image stays a gap";
          break;
        case FamilyVerdict::BoundedBy:
          ok = trace.nilpotency_index && *trace.nilpotency_index <= trace.family_bound &&
               f.hsl.value == *trace.nilpotency_index;
          detail += "nilpotency index " +
                    (trace.nilpotency_index ? std::to_string(*trace.nilpotency_index) : std::string("none")) +
                    " <= " + std::to_string(trace.family_bound);
          break;
      }
      r.verification.push_back({"frobenius-trace p=" + std::to_string(p.value()), ok, detail});
    }
    r.f_singularity.push_back(std::move(f));
  }

  append_unique(r.citations, r.classification.rules);
  for (const auto& f : r.f_singularity) append_unique(r.citations, f.rules);
  return r;
}

json to_json(const AnalysisReport& r) {
  json spec{{"n", r.n}, {"d", r.d}, {"kind", r.kind}, {"removed", vectors_to_json(r.removed)}};
  json fs = json::array();
  for (const auto& f : r.f_singularity) fs.push_back(to_json(f));
  json ver = json::array();
  for (const auto& v : r.verification) {
    ver.push_back({{"name", v.name}, {"passed", v.passed}, {"detail", v.detail}});
  }
  return json{{"schema", kSchemaVersion},
              {"spec", spec},
              {"gap", to_json(r.gap)},
              {"classification", to_json(r.classification)},
              {"f_singularity", fs},
              {"verification", ver},
              {"citations", r.citations}};
}

AnalysisReport report_from_json(const json& j) {
  if (j.at("schema").get<std::string>() != kSchemaVersion) throw SpecError("unsupported report schema");
  AnalysisReport r;
  const auto& spec = j.at("spec");
  r.n = spec.at("n").get<std::size_t>();
  r.d = spec.at("d").get<Coord>();
  r.kind = spec.at("kind").get<std::string>();
  r.removed = vectors_from_json(spec.at("removed"));
  r.gap = gap_from_json(j.at("gap"));
  r.classification = classification_from_json(j.at("classification"));
  for (const auto& f : j.at("f_singularity")) r.f_singularity.push_back(fsing_from_json(f));
  for (const auto& v : j.at("verification")) {
    r.verification.push_back(
        {v.at("name").get<std::string>(), v.at("passed").get<bool>(), v.at("detail").get<std::string>()});
  }
  r.citations = j.at("citations").get<std::vector<std::string>>();
  return r;
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "spec: n=" << r.n << " d=" << r.d << " " << r.kind;
  if (!r.removed.empty()) {
    os << " removed:";
    for (const auto& v : r.removed) os << " " << v.to_string();
  }
  os << "\n";

  os << "gaps: " << r.gap.form;
  if (r.gap.finite) {
    os << ", " << r.gap.members.size() << " vector(s)";
    for (const auto& v : r.gap.members) os << " " << v.to_string();
  } else {
    os << " family in axes (" << r.gap.axes->first << "," << r.gap.axes->second << "), infinite; up to degree "
       << r.gap.sample_degree << ":";
    for (const auto& v : r.gap.sample) os << " " << v.to_string();
  }
  os << "\n";
  if (r.gap.principal_generator) os << "cokernel generator: " << r.gap.principal_generator->to_string() << "\n";

  const auto& c = r.classification;
  os << "dimension: " << c.dimension << "\n"
     << "depth: " << c.depth << "\n"
     << "cohen-macaulay: " << (c.cohen_macaulay ? "yes" : "no") << "\n"
     << "generalized-cm: " << (c.generalized_cm ? "yes" : "no") << "\n"
     << "gorenstein: " << to_string(c.gorenstein) << "\n"
     << "complete-intersection: " << to_string(c.complete_intersection) << "\n"
     << "a-invariant: " << (c.a_invariant ? std::to_string(*c.a_invariant) : std::string("n/a")) << "\n"
     << "normalization: " << to_string(c.normalization) << "\n";

  for (const auto& f : r.f_singularity) {
    os << "p=" << f.p << ": " << to_string(f.ftype) << ", f-pure " << to_string(f.f_pure) << ", HSL "
       << (f.hsl.exact ? "= " : "<= ") << f.hsl.value << ", Fte ";
    switch (f.fte.kind) {
      case FteValue::Kind::Exact: os << "= " << f.fte.value; break;
      case FteValue::Kind::Bound: os << "<= " << f.fte.value << " (" << f.fte.formula << ")"; break;
      case FteValue::Kind::Unknown: os << "unknown"; break;
    }
    os << "\n";
  }
  for (const auto& v : r.verification) {
    os << (v.passed ? "PASS " : "FAIL ") << v.name << ": " << v.detail << "\n";
  }
  os << "rules:\n";
  for (const auto& s : r.citations) os << "  - " << s << "\n";
  return os.str();
}

}  // namespace pinch
