#include "unipcert/json_io.hpp"

namespace unipcert {

namespace {

const char* kind_name(UnitarityCertificate::Kind k) {
  switch (k) {
    case UnitarityCertificate::Kind::Direct: return "direct";
    case UnitarityCertificate::Kind::Chain: return "chain";
    case UnitarityCertificate::Kind::Nonintegral: return "nonintegral";
  }
  return "?";
}

}  // namespace

ojson to_json(const RealForm& rf) {
  ojson j;
  if (rf.family == Family::Sp) {
    j["form"] = "sp";
    j["p"] = rf.p;
    j["q"] = rf.q;
  } else {
    j["form"] = "sostar";
    j["n"] = rf.n;
  }
  return j;
}

ojson to_json(const LeviSequence& levi) {
  ojson j = ojson::array();
  for (auto [p, q] : levi.pq) j.push_back(ojson::array({p, q}));
  return j;
}

ojson to_json(const AqDatum& datum) {
  ojson j;
  j["levi"] = to_json(datum.levi);
  j["lambda_doubled"] = datum.lambda_doubled;
  j["infchar_doubled"] = datum.infchar.doubled();
  j["weakly_fair"] = datum.weakly_fair;
  j["dense_orbit"] = datum.dense_orbit.str();
  j["multiplicity"] = datum.multiplicity;
  return j;
}

ojson to_json(const InductionStep& step) {
  ojson j;
  j["k"] = step.k;
  j["r"] = step.r;
  j["a"] = step.a;
  j["a_prime"] = step.a_prime;
  j["b"] = step.b;
  j["source"] = step.source.str();
  j["target"] = step.target.str();
  return j;
}

ojson to_json(const InducedDatum& datum) {
  ojson j;
  j["base_form"] = to_json(datum.base_form);
  j["gl_sizes"] = datum.gl_sizes;
  j["base_orbit"] = datum.base_orbit.str();
  j["infchar_doubled"] = datum.infchar.doubled();
  j["induced_orbit"] = datum.induced_orbit.str();
  return j;
}

ojson to_json(const UnipotentRecord& rec) {
  ojson j;
  j["realform"] = to_json(rec.realform);
  j["orbit"] = rec.orbit.str();
  j["shape"] = rec.shape.str();
  j["infchar_doubled"] = rec.infchar.doubled();
  j["annihilator_tag"] = rec.annihilator_tag;
  j["av_multiplicity"] = rec.av_multiplicity;
  if (rec.dual_even)
    j["dual_even"] = rec.dual_even->str();
  else
    j["dual_even"] = nullptr;
  return j;
}

ojson to_json(const UnitarityCertificate& cert) {
  ojson j;
  j["schema"] = 1;
  j["kind"] = kind_name(cert.kind);
  ojson steps = ojson::array();
  for (const InductionStep& s : cert.steps) steps.push_back(to_json(s));
  j["steps"] = steps;
  if (cert.terminal)
    j["terminal"] = to_json(*cert.terminal);
  else
    j["terminal"] = nullptr;
  if (cert.nonintegral)
    j["datum"] = to_json(*cert.nonintegral);
  else
    j["datum"] = nullptr;
  return j;
}

ojson to_json(const SpecialEntry& entry) {
  ojson j = to_json(entry.certificate);
  if (entry.record) j["record"] = to_json(*entry.record);
  return j;
}

ojson to_json(const IcReport& report) {
  ojson j;
  j["family"] = to_string(report.family);
  j["n"] = report.n;
  j["shapes_checked"] = report.shapes_checked;
  ojson c = ojson::array();
  for (const IcCounterexample& x : report.counterexamples) {
    ojson e;
    e["shape"] = x.shape.str();
    e["chi_match"] = x.chi_match;
    e["dual_even"] = x.dual_even;
    e["parts_criterion"] = x.parts_criterion;
    c.push_back(e);
  }
  j["counterexamples"] = c;
  return j;
}

ojson to_json(const VerifyReport& report) {
  // wall_ms is intentionally omitted: verify output is byte-stable.
  ojson j;
  j["check"] = report.check;
  j["family"] = report.family;
  j["max_n"] = report.max_n;
  j["instances"] = report.instances;
  j["failures"] = report.failures;
  return j;
}

}  // namespace unipcert
