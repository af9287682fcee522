#include "longcycles/certificate.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

#include "longcycles/cycle_oracle.hpp"

namespace longcycles {
namespace {

using Json = nlohmann::ordered_json;

Json path_json(const std::optional<PathWitness>& p) { return p ? Json(p->vertices) : Json(nullptr); }

Json trace_json(const SolveTrace& t) {
  Json j;
  j["branch"] = branch_name(t.branch);
  j["case"] = t.case_kind == CaseKind::kA ? "A" : t.case_kind == CaseKind::kB ? "B" : "none";
  j["c"] = t.c.vertices();
  j["d"] = t.d.vertices();
  j["cd"] = {t.cd.start, t.cd.end};
  j["x"] = t.x;
  j["y"] = t.y;
  j["w"] = t.w;
  j["x1"] = t.x1;
  j["x2"] = t.x2;
  j["x3"] = t.x3;
  j["e1"] = t.e1;
  j["e2"] = t.e2;
  j["e3"] = t.e3;
  j["d_prime"] = t.d_prime ? Json(t.d_prime->vertices) : Json(nullptr);
  j["x_d_prime"] = t.x_d_prime;
  j["p0"] = path_json(t.p0);
  j["q1"] = path_json(t.q1);
  j["q2"] = path_json(t.q2);
  j["q"] = path_json(t.q);
  j["q_prime"] = path_json(t.q_prime);
  j["s"] = t.s;
  j["t"] = t.t;
  j["z"] = t.z;
  j["anomaly"] = t.anomaly;
  return j;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw CertificateFormatError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw CertificateFormatError(std::string("field \"") + key + "\" is not an integer");
  return v.get<int>();
}

std::vector<long long> list_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw CertificateFormatError(std::string("field \"") + key + "\" is not a list");
  std::vector<long long> out;
  for (const Json& e : v) {
    if (!e.is_number_integer()) {
      throw CertificateFormatError(std::string("field \"") + key + "\" holds a non-integer");
    }
    out.push_back(e.get<long long>());
  }
  return out;
}

std::vector<Vertex> vertex_list(const Json& j, const char* key) {
  std::vector<Vertex> out;
  for (long long v : list_field(j, key)) {
    if (v < 0 || v >= Graph::kMaxOrder) {
      throw CertificateFormatError(std::string("field \"") + key + "\" holds an out-of-range vertex");
    }
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

OrientedCycle cycle_field(const Json& j, const char* key) {
  std::vector<Vertex> vs = vertex_list(j, key);
  if (vs.empty()) return {};
  try {
    return OrientedCycle(std::move(vs));
  } catch (const GeometryError& e) {
    throw CertificateFormatError(std::string("field \"") + key + "\": " + e.what());
  }
}

std::optional<PathWitness> path_field(const Json& j, const char* key) {
  if (field(j, key).is_null()) return std::nullopt;
  return PathWitness{vertex_list(j, key)};
}

SolveTrace parse_trace(const Json& j) {
  SolveTrace t;
  const Json& b = field(j, "branch");
  if (!b.is_string()) throw CertificateFormatError("trace branch is not a string");
  const auto branch = branch_from_name(b.get<std::string>());
  if (!branch) throw CertificateFormatError("unknown branch \"" + b.get<std::string>() + "\"");
  t.branch = *branch;
  const Json& kind = field(j, "case");
  if (kind == "A") {
    t.case_kind = CaseKind::kA;
  } else if (kind == "B") {
    t.case_kind = CaseKind::kB;
  } else if (kind == "none") {
    t.case_kind = CaseKind::kNone;
  } else {
    throw CertificateFormatError("unknown trace case");
  }
  t.c = cycle_field(j, "c");
  t.d = cycle_field(j, "d");
  const std::vector<Vertex> cd = vertex_list(j, "cd");
  if (cd.size() != 2) throw CertificateFormatError("trace cd must hold two vertices");
  t.cd = {cd[0], cd[1]};
  t.x = int_field(j, "x");
  t.y = int_field(j, "y");
  t.w = int_field(j, "w");
  t.x1 = vertex_list(j, "x1");
  t.x2 = vertex_list(j, "x2");
  t.x3 = vertex_list(j, "x3");
  t.e1 = vertex_list(j, "e1");
  t.e2 = vertex_list(j, "e2");
  t.e3 = vertex_list(j, "e3");
  if (!field(j, "d_prime").is_null()) t.d_prime = CycleWitness{vertex_list(j, "d_prime")};
  t.x_d_prime = int_field(j, "x_d_prime");
  t.p0 = path_field(j, "p0");
  t.q1 = path_field(j, "q1");
  t.q2 = path_field(j, "q2");
  t.q = path_field(j, "q");
  t.q_prime = path_field(j, "q_prime");
  t.s = int_field(j, "s");
  t.t = int_field(j, "t");
  t.z = int_field(j, "z");
  const Json& anomaly = field(j, "anomaly");
  if (!anomaly.is_string()) throw CertificateFormatError("trace anomaly is not a string");
  t.anomaly = anomaly.get<std::string>();
  return t;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw CertificateFormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::string type_of(const Json& j) {
  const Json& type = field(j, "type");
  if (type != "transversal" && type != "disjoint_pair") {
    throw CertificateFormatError("type must be \"transversal\" or \"disjoint_pair\"");
  }
  return type.get<std::string>();
}

// The certificate as plain lists, so that malformed content can be judged
// rather than rejected during parsing.
struct RawCertificate {
  int ell = 0;
  int n = 0;
  CertificateKind kind = CertificateKind::kTransversal;
  std::vector<long long> vertices;
  std::vector<long long> cycle1;
  std::vector<long long> cycle2;
};

VerifyResult fail(VerifyResult r, std::string reason) {
  r.ok = false;
  r.reason = std::move(reason);
  return r;
}

std::string check_cycle(const Graph& g, int ell, const std::vector<long long>& raw, const char* name) {
  std::set<long long> seen;
  for (long long v : raw) {
    if (v < 0 || v >= g.order()) return std::string(name) + " has out-of-range vertex " + std::to_string(v);
    if (!seen.insert(v).second) return std::string(name) + " repeats vertex " + std::to_string(v);
  }
  if (static_cast<int>(raw.size()) < std::max(ell, 3)) {
    return std::string(name) + " has length " + std::to_string(raw.size()) + " < " + std::to_string(ell);
  }
  const std::vector<Vertex> vs(raw.begin(), raw.end());
  if (!is_cycle_in(g, vs)) return std::string(name) + " is not a cycle of the graph";
  return {};
}

VerifyResult verify_raw(const Graph& g, int ell, const RawCertificate& c) {
  VerifyResult r;
  r.kind = c.kind;
  r.budget = (3 * ell + 7) / 2;
  if (c.ell != ell) return fail(r, "certificate is for ell=" + std::to_string(c.ell));
  if (c.n != g.order()) return fail(r, "certificate is for n=" + std::to_string(c.n));

  if (c.kind == CertificateKind::kTransversal) {
    VertexSet x;
    for (long long v : c.vertices) {
      if (v < 0 || v >= g.order()) return fail(r, "out-of-range vertex " + std::to_string(v));
      if (x.contains(static_cast<Vertex>(v))) return fail(r, "repeated vertex " + std::to_string(v));
      x.insert(static_cast<Vertex>(v));
    }
    r.size = x.size();
    if (r.size > r.budget) {
      return fail(r, "size " + std::to_string(r.size) + " exceeds budget " + std::to_string(r.budget));
    }
    if (has_long_cycle(g, VertexMask(x), ell)) return fail(r, "a long cycle remains");
    r.ok = true;
    return r;
  }

  r.size = static_cast<int>(std::min(c.cycle1.size(), c.cycle2.size()));
  if (auto why = check_cycle(g, ell, c.cycle1, "cycle1"); !why.empty()) return fail(r, why);
  if (auto why = check_cycle(g, ell, c.cycle2, "cycle2"); !why.empty()) return fail(r, why);
  const std::set<long long> first(c.cycle1.begin(), c.cycle1.end());
  for (long long v : c.cycle2) {
    if (first.contains(v)) return fail(r, "cycles share vertex " + std::to_string(v));
  }
  r.ok = true;
  return r;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert, bool with_trace) {
  Json j;
  j["ell"] = cert.ell;
  j["n"] = cert.n;
  j["budget"] = cert.budget();
  if (const auto* pair = std::get_if<DisjointPair>(&cert.result)) {
    j["type"] = "disjoint_pair";
    j["cycle1"] = pair->first.vertices();
    j["cycle2"] = pair->second.vertices();
  } else {
    j["type"] = "transversal";
    j["vertices"] = std::get<Transversal>(cert.result).vertices.to_vector();
  }
  if (with_trace) j["trace"] = trace_json(cert.trace);
  return j.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text) {
  const Json j = parse_json(text);
  Certificate cert;
  cert.ell = int_field(j, "ell");
  cert.n = int_field(j, "n");
  if (cert.ell < 3) throw CertificateFormatError("ell must be at least 3");
  if (type_of(j) == "disjoint_pair") {
    DisjointPair pair{cycle_field(j, "cycle1"), cycle_field(j, "cycle2")};
    if (pair.first.size() == 0 || pair.second.size() == 0) throw CertificateFormatError("empty cycle");
    cert.result = std::move(pair);
  } else {
    cert.result = Transversal{VertexSet::of(vertex_list(j, "vertices"))};
  }
  if (j.contains("trace")) cert.trace = parse_trace(j.at("trace"));
  return cert;
}

VerifyResult verify_certificate(const Graph& g, int ell, const Certificate& cert) {
  RawCertificate raw;
  raw.ell = cert.ell;
  raw.n = cert.n;
  if (const auto* pair = std::get_if<DisjointPair>(&cert.result)) {
    raw.kind = CertificateKind::kDisjointPair;
    raw.cycle1.assign(pair->first.vertices().begin(), pair->first.vertices().end());
    raw.cycle2.assign(pair->second.vertices().begin(), pair->second.vertices().end());
  } else {
    for (Vertex v : std::get<Transversal>(cert.result).vertices) raw.vertices.push_back(v);
  }
  return verify_raw(g, ell, raw);
}

VerifyResult verify_certificate_json(const Graph& g, int ell, std::string_view text) {
  const Json j = parse_json(text);
  RawCertificate raw;
  raw.ell = int_field(j, "ell");
  raw.n = int_field(j, "n");
  if (type_of(j) == "disjoint_pair") {
    raw.kind = CertificateKind::kDisjointPair;
    raw.cycle1 = list_field(j, "cycle1");
    raw.cycle2 = list_field(j, "cycle2");
  } else {
    raw.vertices = list_field(j, "vertices");
  }
  return verify_raw(g, ell, raw);
}

}  // namespace longcycles
