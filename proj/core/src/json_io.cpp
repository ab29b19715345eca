// Copyright 2026 The robust_sched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "robust_sched/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace robust_sched::json_io {
namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

Time as_time(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return v.get<Time>();
}

std::size_t as_index(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::string as_string(const Json& v, const char* what) {
  if (!v.is_string()) throw ParseError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

bool as_bool(const Json& v, const char* what) {
  if (!v.is_boolean()) throw ParseError(std::string(what) + " must be a boolean");
  return v.get<bool>();
}

const Json& as_array(const Json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
  return v;
}

Rational parse_rational(const std::string& s) {
  Time num = 0;
  Time den = 1;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [p, ec] = std::from_chars(first, last, num);
  if (ec != std::errc()) throw ParseError("bad rational '" + s + "'");
  if (p != last) {
    if (*p != '/') throw ParseError("bad rational '" + s + "'");
    auto [q, ec2] = std::from_chars(p + 1, last, den);
    if (ec2 != std::errc() || q != last || den == 0) throw ParseError("bad rational '" + s + "'");
  }
  return Rational(num, den);
}

void put_rational(Json& obj, const std::string& key, const Rational& v) {
  if (v.is_integer()) {
    obj[key] = v.num();
  } else {
    obj[key] = v.to_double();
  }
  obj[key + "Exact"] = v.to_string();
}

Json instance_json(const Instance& inst) {
  Json out;
  out["m"] = inst.machines();
  out["n"] = inst.jobs();
  out["p"] = inst.processing_matrix();
  Json release = Json::array();
  for (const auto& iv : inst.releases()) release.push_back({iv.lo, iv.hi});
  out["release"] = std::move(release);
  return out;
}

Json scenario_json(const Scenario& r) {
  Json out;
  out["r"] = std::vector<Time>(r.values().begin(), r.values().end());
  return out;
}

Scenario scenario_from(const Json& obj) {
  std::vector<Time> r;
  for (const auto& v : as_array(field(obj, "r"), "r")) r.push_back(as_time(v, "release date"));
  return Scenario(std::move(r));
}

}  // namespace

std::string write_instance(const Instance& inst) { return instance_json(inst).dump(2) + "\n"; }

std::string write_instance(const Instance& inst, const GenParams& g) {
  Json out = instance_json(inst);
  Json params;
  params["n"] = g.jobs;
  params["m"] = g.machines;
  params["pLo"] = g.processing_lo;
  params["pHi"] = g.processing_hi;
  params["rDomainHi"] = g.release_domain_hi;
  params["segments"] = g.segments;
  params["offsetLo"] = g.offset_lo;
  params["offsetHi"] = g.offset_hi;
  Json prov;
  prov["params"] = std::move(params);
  prov["seed"] = g.seed;
  prov["generatorVersion"] = std::string(kGeneratorVersion);
  out["provenance"] = std::move(prov);
  return out.dump(2) + "\n";
}

Instance read_instance(std::string_view text) {
  const Json doc = parse(text);
  const std::size_t m = as_index(field(doc, "m"), "m");
  const std::size_t n = as_index(field(doc, "n"), "n");
  const auto& p_json = as_array(field(doc, "p"), "p");
  const auto& r_json = as_array(field(doc, "release"), "release");
  if (p_json.size() != m) throw ParseError("\"p\" must have m rows");
  if (r_json.size() != n) throw ParseError("\"release\" must have n entries");
  std::vector<std::vector<Time>> p;
  p.reserve(m);
  for (const auto& row : p_json) {
    if (!row.is_array() || row.size() != n) throw ParseError("every row of \"p\" must have n entries");
    std::vector<Time> values;
    values.reserve(n);
    for (const auto& v : row) values.push_back(as_time(v, "processing time"));
    p.push_back(std::move(values));
  }
  std::vector<ReleaseInterval> release;
  release.reserve(n);
  for (const auto& pair : r_json) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("release entries must be [lo, hi]");
    release.push_back({as_time(pair[0], "release lo"), as_time(pair[1], "release hi")});
  }
  return Instance(std::move(p), std::move(release));
}

std::string write_schedule(const Schedule& s) {
  Json out;
  out["machines"] = s.sequences();
  return out.dump() + "\n";
}

Schedule read_schedule(std::string_view text) {
  const Json doc = parse(text);
  std::vector<std::vector<JobIndex>> machines;
  for (const auto& seq : as_array(field(doc, "machines"), "machines")) {
    std::vector<JobIndex> jobs;
    for (const auto& v : as_array(seq, "machine sequence")) jobs.push_back(as_index(v, "job index"));
    machines.push_back(std::move(jobs));
  }
  return Schedule(std::move(machines));
}

std::string write_scenario(const Scenario& r) { return scenario_json(r).dump() + "\n"; }

Scenario read_scenario(std::string_view text) { return scenario_from(parse(text)); }

std::string write_regret_report(const RegretReport& report, std::string_view mode) {
  Json out;
  out["mode"] = std::string(mode);
  put_rational(out, "value", report.value);
  out["certified"] = report.certified;
  if (report.scenario_job) {
    out["scenarioJob"] = *report.scenario_job;
  } else {
    out["scenarioJob"] = nullptr;
  }
  out["scenario"] = scenario_json(report.scenario);
  Json terms = Json::array();
  for (const auto& t : report.per_scenario) {
    Json term;
    term["job"] = t.job;
    put_rational(term, "regret", t.regret);
    terms.push_back(std::move(term));
  }
  out["perScenario"] = std::move(terms);
  return out.dump(2) + "\n";
}

RegretReport read_regret_report(std::string_view text, std::string* mode) {
  const Json doc = parse(text);
  RegretReport report;
  if (mode) *mode = as_string(field(doc, "mode"), "mode");
  report.value = parse_rational(as_string(field(doc, "valueExact"), "valueExact"));
  report.certified = as_bool(field(doc, "certified"), "certified");
  const auto& job = field(doc, "scenarioJob");
  if (!job.is_null()) report.scenario_job = as_index(job, "scenarioJob");
  report.scenario = scenario_from(field(doc, "scenario"));
  for (const auto& t : as_array(field(doc, "perScenario"), "perScenario")) {
    report.per_scenario.push_back({as_index(field(t, "job"), "job"),
                                   parse_rational(as_string(field(t, "regretExact"), "regretExact"))});
  }
  return report;
}

std::string write_bounds_report(const BoundsReport& report) {
  Json out;
  put_rational(out, "lbAvg", report.lb_avg);
  out["lb1"] = report.lb1;
  put_rational(out, "lb2", report.lb2);
  out["lb3"] = report.lb3;
  put_rational(out, "combined", report.combined);
  Json anchors = Json::array();
  for (std::size_t j = 0; j < report.per_job.size(); ++j) {
    Json a;
    a["job"] = j;
    put_rational(a, "w", report.per_job[j].w);
    a["wTilde"] = report.per_job[j].w_tilde;
    anchors.push_back(std::move(a));
  }
  out["perJob"] = std::move(anchors);
  return out.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace robust_sched::json_io
