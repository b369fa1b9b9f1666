#include "carnot/io.hpp"

#include <fstream>
#include <sstream>

#include "carnot/errors.hpp"

namespace carnot {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw ParseError(where.empty() ? msg : where + ": " + msg);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

std::size_t natural_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
    fail(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::string string_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

Json subspace_to_json(const Subspace& s) { return mat_to_json(s.basis()); }

Subspace subspace_from_json(const Json& j, std::size_t dim, const std::string& where) {
  return Subspace::span(dim, mat_from_json(j, dim, where));
}

Json trace_to_json(const std::vector<TraceStep>& trace) {
  Json out = Json::array();
  for (const auto& s : trace)
    out.push_back({{"rule", to_string(s.rule)}, {"inputs", mat_to_json(s.inputs)}, {"added", mat_to_json(s.added)}});
  return out;
}

std::vector<TraceStep> trace_from_json(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  std::vector<TraceStep> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string w = where + "[" + std::to_string(i) + "]";
    TraceStep s;
    try {
      s.rule = parse_rule(string_from_json(field(j[i], "rule", w), w + ".rule"));
    } catch (const ParseError& e) {
      fail(w + ".rule", e.what());
    }
    s.inputs = mat_from_json(field(j[i], "inputs", w), dim, w + ".inputs");
    s.added = mat_from_json(field(j[i], "added", w), dim, w + ".added");
    out.push_back(std::move(s));
  }
  return out;
}

Json engel_cert_to_json(const EngelQuotientCert& c) {
  return {{"ideal", subspace_to_json(c.ideal)}, {"n", c.n}, {"lambda", vec_to_json(c.lambda)}, {"layer", c.layer}};
}

Json candidates_to_json(const std::vector<SearchCandidate>& cs) {
  Json out = Json::array();
  for (const auto& c : cs)
    out.push_back({{"ideal3", subspace_to_json(c.ideal3)},
                   {"forced_ideal", subspace_to_json(c.forced_ideal)},
                   {"failure", to_string(c.failure)}});
  return out;
}

}  // namespace

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Vec vec_from_json(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rationals");
  if (j.size() != dim) fail(where, "expected " + std::to_string(dim) + " entries, got " + std::to_string(j.size()));
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

Json mat_to_json(const Mat& m) {
  Json out = Json::array();
  for (const auto& r : m) out.push_back(vec_to_json(r));
  return out;
}

Mat mat_from_json(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of vectors");
  Mat m;
  for (std::size_t i = 0; i < j.size(); ++i) m.push_back(vec_from_json(j[i], dim, where + "[" + std::to_string(i) + "]"));
  return m;
}

Vec parse_vector(const std::string& text, std::size_t dim) {
  Vec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    v.push_back(parse_rational(b == std::string::npos ? "" : item.substr(b, e - b + 1)));
  }
  if (v.size() != dim)
    throw DimensionMismatch("expected " + std::to_string(dim) + " comma-separated entries, got " +
                            std::to_string(v.size()));
  return v;
}

EngelFailure parse_engel_failure(const std::string& s) {
  for (auto f : {EngelFailure::None, EngelFailure::NotStratified, EngelFailure::LayerShape, EngelFailure::XLine,
                 EngelFailure::AdX, EngelFailure::NoAbelianHyperplane, EngelFailure::NonUniqueHyperplane,
                 EngelFailure::GramNotDefinite})
    if (to_string(f) == s) return f;
  throw ParseError("unknown recognizer failure \"" + s + "\"");
}

Presentation presentation_from_json(const Json& j) {
  if (!j.is_object()) fail("", "presentation must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& k = it.key();
    if (k != "schema" && k != "name" && k != "layers" && k != "basis" && k != "brackets" && k != "comment")
      fail(k, "unknown field");
  }
  if (j.contains("schema") && natural_from_json(j["schema"], "schema") != static_cast<std::size_t>(kSchema))
    fail("schema", "unsupported schema version");
  Presentation p;
  p.name = string_from_json(field(j, "name", ""), "name");
  const Json& layers = field(j, "layers", "");
  if (!layers.is_array()) fail("layers", "expected an array");
  for (std::size_t i = 0; i < layers.size(); ++i)
    p.layers.push_back(natural_from_json(layers[i], "layers[" + std::to_string(i) + "]"));
  const Json& basis = field(j, "basis", "");
  if (!basis.is_array()) fail("basis", "expected an array");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::string w = "basis[" + std::to_string(i) + "]";
    std::string name = string_from_json(basis[i], w);
    if (!index.emplace(name, i).second) fail(w, "duplicate basis name \"" + name + "\"");
    p.basis.push_back(name);
  }
  auto lookup = [&](const Json& x, const std::string& w) {
    std::string name = string_from_json(x, w);
    auto it = index.find(name);
    if (it == index.end()) fail(w, "unknown basis element \"" + name + "\"");
    return it->second;
  };
  if (j.contains("brackets")) {
    const Json& br = j["brackets"];
    if (!br.is_array()) fail("brackets", "expected an array");
    for (std::size_t i = 0; i < br.size(); ++i) {
      std::string w = "brackets[" + std::to_string(i) + "]";
      if (!br[i].is_object()) fail(w, "expected an object");
      BracketEntry e;
      e.left = lookup(field(br[i], "left", w), w + ".left");
      e.right = lookup(field(br[i], "right", w), w + ".right");
      const Json& res = field(br[i], "result", w);
      if (!res.is_object()) fail(w + ".result", "expected an object mapping basis names to rationals");
      e.result = zeros(p.basis.size());
      for (auto it = res.begin(); it != res.end(); ++it) {
        std::string wk = w + ".result." + it.key();
        auto idx = index.find(it.key());
        if (idx == index.end()) fail(wk, "unknown basis element \"" + it.key() + "\"");
        e.result[idx->second] = rational_from_json(it.value(), wk);
      }
      p.brackets.push_back(std::move(e));
    }
  }
  return p;
}

Json presentation_to_json(const Presentation& p) {
  Json br = Json::array();
  for (const auto& e : p.brackets) {
    Json res = Json::object();
    for (std::size_t k = 0; k < e.result.size(); ++k)
      if (sgn(e.result[k]) != 0) res[p.basis[k]] = to_string(e.result[k]);
    br.push_back({{"left", p.basis[e.left]}, {"right", p.basis[e.right]}, {"result", res}});
  }
  return {{"schema", kSchema}, {"name", p.name}, {"layers", p.layers}, {"basis", p.basis}, {"brackets", br}};
}

GradedLieAlgebra algebra_from_json(const Json& j) { return GradedLieAlgebra(presentation_from_json(j)); }

Json algebra_to_json(const GradedLieAlgebra& g) { return presentation_to_json(g.presentation()); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto pos = msg.rfind(": ");
    throw ParseError(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                     (pos == std::string::npos ? msg : msg.substr(pos + 2)));
  }
}

GradedLieAlgebra load_algebra(const std::string& path) {
  Json j = read_json_file(path);
  Presentation p;
  try {
    p = presentation_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
  return GradedLieAlgebra(p);
}

Json product_quotient_to_json(const ProductQuotientCert& c) {
  Json factors = Json::array(), images = Json::array();
  for (const auto& f : c.factors) factors.push_back(algebra_to_json(f));
  for (const auto& m : c.images) images.push_back(mat_to_json(m));
  return {{"factors", factors}, {"images", images}};
}

ProductQuotientCert product_quotient_from_json(const GradedLieAlgebra& g, const Json& j) {
  if (!j.is_object()) fail("", "certificate must be a JSON object");
  const Json& factors = field(j, "factors", "");
  const Json& images = field(j, "images", "");
  if (!factors.is_array() || !images.is_array()) fail("", "factors and images must be arrays");
  ProductQuotientCert c;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::string w = "factors[" + std::to_string(i) + "]";
    try {
      c.factors.push_back(algebra_from_json(factors[i]));
    } catch (const ParseError& e) {
      fail(w, e.what());
    }
  }
  for (std::size_t i = 0; i < images.size(); ++i)
    c.images.push_back(mat_from_json(images[i], g.dim(), "images[" + std::to_string(i) + "]"));
  return c;
}

Json to_json(const GradedLieAlgebra& g, const Decision& d) {
  Json cert = {{"kind", to_string(d.kind)}};
  switch (d.kind) {
    case CertKind::None:
    case CertKind::StepTwo:
      break;
    case CertKind::Saturation:
      cert["lambda"] = vec_to_json(d.saturation->lambda);
      cert["conclusion"] = d.saturation->conclusion;
      cert["basis"] = mat_to_json(d.saturation->basis);
      cert["trace"] = trace_to_json(d.saturation->trace);
      break;
    case CertKind::Diamond:
      if (d.diamond) {
        cert["product_quotient"] = product_quotient_to_json(*d.diamond);
      } else if (d.saturation) {
        cert["star_basis"] = mat_to_json(d.saturation->basis);
      }
      break;
    case CertKind::EngelQuotient:
      cert["engel"] = engel_cert_to_json(*d.engel);
      break;
    case CertKind::EngelSearch:
      cert["candidates"] = candidates_to_json(d.search);
      break;
  }
  Json out = {{"schema", kSchema}, {"kind", "decision"}, {"algebra", g.name()}, {"verdict", to_string(d.verdict)}};
  if (d.lambda) out["lambda"] = vec_to_json(*d.lambda);
  out["exhaustive"] = d.exhaustive;
  out["certificate"] = cert;
  out["summary"] = d.summary;
  out["notes"] = d.notes;
  return out;
}

Decision decision_from_json(const GradedLieAlgebra& g, const Json& j) {
  if (!j.is_object()) fail("", "decision must be a JSON object");
  if (natural_from_json(field(j, "schema", ""), "schema") != static_cast<std::size_t>(kSchema))
    fail("schema", "unsupported schema version");
  Decision d;
  std::string v = string_from_json(field(j, "verdict", ""), "verdict");
  if (v == "SEMIGENERATED" || v == "SEMIGENERATING")
    d.verdict = Verdict::Semigenerated;
  else if (v == "NOT_SEMIGENERATED" || v == "NOT_SEMIGENERATING")
    d.verdict = Verdict::NotSemigenerated;
  else if (v == "UNKNOWN")
    d.verdict = Verdict::Unknown;
  else
    fail("verdict", "unknown verdict \"" + v + "\"");
  const std::size_t n = g.dim();
  if (j.contains("lambda")) d.lambda = vec_from_json(j["lambda"], g.rank(), "lambda");
  if (j.contains("exhaustive")) d.exhaustive = j["exhaustive"].is_boolean() && j["exhaustive"].get<bool>();
  if (j.contains("summary")) d.summary = string_from_json(j["summary"], "summary");
  const Json& c = field(j, "certificate", "");
  std::string kind = string_from_json(field(c, "kind", "certificate"), "certificate.kind");
  if (kind == "none") {
    d.kind = CertKind::None;
  } else if (kind == "step-two") {
    d.kind = CertKind::StepTwo;
  } else if (kind == "saturation") {
    d.kind = CertKind::Saturation;
    SaturationCert s;
    s.lambda = vec_from_json(field(c, "lambda", "certificate"), g.rank(), "certificate.lambda");
    s.conclusion = string_from_json(field(c, "conclusion", "certificate"), "certificate.conclusion");
    if (c.contains("basis")) s.basis = mat_from_json(c["basis"], n, "certificate.basis");
    s.trace = trace_from_json(field(c, "trace", "certificate"), n, "certificate.trace");
    d.saturation = std::move(s);
  } else if (kind == "diamond") {
    d.kind = CertKind::Diamond;
    if (c.contains("product_quotient")) {
      try {
        d.diamond = product_quotient_from_json(g, c["product_quotient"]);
      } catch (const ParseError& e) {
        fail("certificate.product_quotient", e.what());
      }
    } else if (c.contains("star_basis")) {
      d.saturation = SaturationCert{{}, {}, "star-basis", mat_from_json(c["star_basis"], n, "certificate.star_basis")};
    }
  } else if (kind == "engel-quotient") {
    d.kind = CertKind::EngelQuotient;
    const Json& e = field(c, "engel", "certificate");
    EngelQuotientCert q;
    q.ideal = subspace_from_json(field(e, "ideal", "certificate.engel"), n, "certificate.engel.ideal");
    q.n = natural_from_json(field(e, "n", "certificate.engel"), "certificate.engel.n");
    q.lambda = vec_from_json(field(e, "lambda", "certificate.engel"), g.rank(), "certificate.engel.lambda");
    if (e.contains("layer")) q.layer = string_from_json(e["layer"], "certificate.engel.layer");
    d.engel = std::move(q);
  } else if (kind == "engel-search") {
    d.kind = CertKind::EngelSearch;
    const Json& cs = field(c, "candidates", "certificate");
    if (!cs.is_array()) fail("certificate.candidates", "expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::string w = "certificate.candidates[" + std::to_string(i) + "]";
      SearchCandidate sc;
      sc.ideal3 = subspace_from_json(field(cs[i], "ideal3", w), n, w + ".ideal3");
      sc.forced_ideal = subspace_from_json(field(cs[i], "forced_ideal", w), n, w + ".forced_ideal");
      try {
        sc.failure = parse_engel_failure(string_from_json(field(cs[i], "failure", w), w + ".failure"));
      } catch (const ParseError& e) {
        fail(w + ".failure", e.what());
      }
      d.search.push_back(std::move(sc));
    }
  } else {
    fail("certificate.kind", "unknown certificate kind \"" + kind + "\"");
  }
  return d;
}

Json to_json(const GradedLieAlgebra& g, const StarReport& r) {
  Json chain = Json::array();
  for (const auto& s : r.chain)
    chain.push_back({{"generator", g.basis_names()[s.generator]},
                     {"coordinate", g.basis_names()[s.coordinate]},
                     {"subspace_before", mat_to_json(s.subspace_before)},
                     {"subspace_after", mat_to_json(s.subspace_after)},
                     {"constraints", mat_to_json(s.constraints)}});
  return {{"schema", kSchema},
          {"kind", "star"},
          {"algebra", g.name()},
          {"answer", to_string(r.answer)},
          {"witness", r.witness},
          {"basis", mat_to_json(r.basis)},
          {"chain", chain},
          {"final_subspace", mat_to_json(r.final_subspace)},
          {"notes", r.notes}};
}

Json to_json(const GradedLieAlgebra& g, const DiamondReport& r) {
  Json out = {{"schema", kSchema}, {"kind", "diamond"}, {"algebra", g.name()},
              {"answer", to_string(r.answer)}, {"reason", r.reason}};
  out["certificate"] = r.certificate ? product_quotient_to_json(*r.certificate) : Json(nullptr);
  out["abelian_hyperplane"] = r.abelian_hyperplane ? subspace_to_json(*r.abelian_hyperplane) : Json(nullptr);
  Json star = to_json(g, r.star);
  star.erase("schema");
  out["star"] = star;
  out["notes"] = r.notes;
  return out;
}

Json to_json(const GradedLieAlgebra& g, const EdgeApprox& e, const Vec& lambda) {
  return {{"schema", kSchema},
          {"kind", "saturation"},
          {"algebra", g.name()},
          {"lambda", vec_to_json(lambda)},
          {"boundary", subspace_to_json(e.boundary)},
          {"E", subspace_to_json(e.E)},
          {"trace", trace_to_json(e.trace)},
          {"extended_difference", e.extended_difference}};
}

Json to_json(const GradedLieAlgebra& g, const EngelSearch& s) {
  Json found = Json::array();
  for (const auto& f : s.found) found.push_back(engel_cert_to_json(f));
  return {{"schema", kSchema}, {"kind", "engel-search"}, {"algebra", g.name()},
          {"exhaustive", s.exhaustive}, {"found", found},
          {"examined", candidates_to_json(s.examined)}, {"notes", s.notes}};
}

Json to_json(const GradedLieAlgebra& g, const Recognition& r) {
  Json out = {{"schema", kSchema}, {"kind", "recognition"}, {"algebra", g.name()}, {"ok", r.ok()}};
  if (r.ok()) {
    const auto& s = *r.structure;
    out["n"] = s.n;
    out["X"] = vec_to_json(s.X);
    out["Y"] = mat_to_json(s.Y);
    out["T"] = mat_to_json(s.T);
    out["Z"] = vec_to_json(s.Z);
    out["gram"] = mat_to_json(s.gram);
    out["gram_sign"] = s.gram_sign;
  } else {
    out["failure"] = to_string(r.failure);
    out["failure_step"] = failure_step(r.failure);
    out["detail"] = r.detail;
  }
  return out;
}

Json to_json(const GradedLieAlgebra& g, const SampleRun& run) {
  Json points = Json::array();
  for (std::size_t i = 0; i < run.points.size(); ++i)
    points.push_back({{"length", run.lengths[i]}, {"log", vec_to_json(run.points[i])}});
  const auto& o = run.options;
  return {{"schema", kSchema},
          {"kind", "sample-run"},
          {"algebra", g.name()},
          {"seed", o.seed},
          {"flags",
           {{"word_length", o.word_length},
            {"variable_length", o.variable_length},
            {"count", o.count},
            {"bound", o.bound},
            {"grid", o.grid}}},
          {"lambda", vec_to_json(run.lambda)},
          {"points", points},
          {"summary", {{"min", vec_to_json(run.min)}, {"max", vec_to_json(run.max)}}}};
}

}  // namespace carnot
