// Command-line front end. Exit codes: 0 definite answer, 2 undecided, 1 error.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "carnot/errors.hpp"
#include "carnot/hall.hpp"
#include "carnot/io.hpp"

using namespace carnot;

namespace {

struct Flags {
  std::string file;
  std::string cert;
  std::string diamond_cert;
  std::string lambda;
  std::string nu;
  std::string generators;
  std::size_t n = 1;
  std::size_t rank = 2;
  std::size_t step = 3;
  std::uint64_t seed = 1;
  std::size_t max_samples = 64;
  std::size_t threads = 1;
  std::size_t word_length = 4;
  std::size_t count = 1000;
  long bound = 2;
  long grid = 4;
  bool fixed_length = false;
  bool json = false;
  bool r2_extended = false;
};

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string set_text(const GradedLieAlgebra& g, const Mat& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ", ";
    out += format_vector(g, vs[i]);
  }
  return out + "}";
}

std::string dims_text(const std::vector<std::size_t>& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? ", " : "") + std::to_string(d[i]);
  return out + ")";
}

SearchOptions search_options(const Flags& f) {
  SearchOptions o;
  o.seed = f.seed;
  o.max_samples = f.max_samples;
  o.threads = f.threads;
  return o;
}

// Semicolon-separated V1 vectors, e.g. "1,0,0;0,1,1".
Mat parse_generators(const GradedLieAlgebra& g, const std::string& text) {
  Mat out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    Vec a = parse_vector(item, g.rank());
    Vec v = zeros(g.dim());
    std::copy(a.begin(), a.end(), v.begin());
    out.push_back(v);
  }
  return out;
}

Vec horizontal_vector(const GradedLieAlgebra& g, const std::string& text) {
  std::size_t commas = static_cast<std::size_t>(std::count(text.begin(), text.end(), ','));
  if (commas + 1 == g.dim()) return parse_vector(text, g.dim());
  Vec a = parse_vector(text, g.rank());
  Vec v = zeros(g.dim());
  std::copy(a.begin(), a.end(), v.begin());
  return v;
}

int exit_for(Verdict v) { return v == Verdict::Unknown ? 2 : 0; }
int exit_for(Answer a) { return a == Answer::Unknown ? 2 : 0; }

int cmd_validate(const Flags& f) {
  GradedLieAlgebra g = load_algebra(f.file);
  if (!g.is_stratified()) {
    std::size_t k = *g.stratification_defect();
    std::cerr << "NotStratified: V" << k + 1 << " != [V1, V" << k << "]\n";
    return 1;
  }
  std::cout << "OK: " << g.name() << " (dim " << g.dim() << ", layers " << dims_text(g.layer_dims())
            << ", stratified)\n";
  return 0;
}

int cmd_info(const Flags& f) {
  GradedLieAlgebra g = load_algebra(f.file);
  CenterInfo c = center(g);
  std::vector<std::size_t> lcs;
  for (const auto& s : lower_central_series(g)) lcs.push_back(s.dim());
  bool strat = g.is_stratified();
  std::optional<bool> trimmed;
  if (strat) trimmed = is_trimmed(g).trimmed;
  if (f.json) {
    Json j = {{"schema", kSchema}, {"kind", "info"}, {"algebra", g.name()}, {"dim", g.dim()},
              {"layers", g.layer_dims()}, {"step", g.step()}, {"stratified", strat},
              {"center_layers", c.layer_dims}, {"lower_central_series", lcs}};
    j["trimmed"] = trimmed ? Json(*trimmed) : Json(nullptr);
    print_json(j);
    return 0;
  }
  std::cout << "name: " << g.name() << "\n"
            << "dimension: " << g.dim() << "; layers: " << dims_text(g.layer_dims()) << "; step: " << g.step() << "\n"
            << "stratified: " << (strat ? "yes" : "no") << "\n"
            << "center: dim " << c.center.dim() << ", by layer " << dims_text(c.layer_dims) << "\n"
            << "lower central series dims: " << dims_text(lcs) << "\n";
  if (trimmed) std::cout << "trimmed: " << (*trimmed ? "yes" : "no") << "\n";
  return 0;
}

int cmd_recognize(const Flags& f) {
  GradedLieAlgebra g = load_algebra(f.file);
  Recognition r = recognize_engel(g);
  if (f.json) {
    print_json(to_json(g, r));
    return 0;
  }
  if (!r.ok()) {
    std::cout << "NOT ENGEL; failure at step " << failure_step(r.failure) << ": " << to_string(r.failure);
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    return 0;
  }
  const auto& s = *r.structure;
  std::cout << "ENGEL; n = " << s.n << "\n";
  std::cout << "X = " << format_vector(g, s.X) << "\n";
  for (std::size_t i = 0; i < s.n; ++i) std::cout << "Y" << i + 1 << " = " << format_vector(g, s.Y[i]) << "\n";
  for (std::size_t i = 0; i < s.n; ++i) std::cout << "T" << i + 1 << " = " << format_vector(g, s.T[i]) << "\n";
  std::cout << "Z = " << format_vector(g, s.Z) << "\n";
  return 0;
}

int cmd_star(const Flags& f) {
  GradedLieAlgebra g = load_algebra(f.file);
  StarReport r = check_type_star(g);
  if (f.json) {
    print_json(to_json(g, r));
  } else if (r.answer == Answer::Yes) {
    std::cout << "YES; basis: " << set_text(g, r.basis) << "\n";
  } else {
    std::cout << to_string(r.answer) << "; witness: " << r.witness << "\n";
  }
  return exit_for(r.answer);
}

int cmd_diamond(const Flags& f) {
  GradedLieAlgebra g = load_algebra(f.file);
  std::optional<ProductQuotientCert> cert;
  if (!f.cert.empty()) cert = product_quotient_from_json(g, read_json_file(f.cert));
  DiamondReport r = check_type_diamond(g, cert);
  if (f.json)
    print_json(to_json(g, r));
  else
    std::cout << to_string(r.answer) << "; " << r.reason << "\n";
  return exit_for(r.answer);
}

SaturationConfig saturation_config(const GradedLieAlgebra& g, const Flags& f) {
  SaturationConfig cfg;
  cfg.r2_extended = f.r2_extended;
  if (!f.generators.empty()) cfg.generators = parse_generators(g, f.generators);
  return cfg;
}

int cmd_saturate(const Flags& f) {
  GradedLieAlgebra g = load_algebra(f.file);
  if (f.lambda.empty()) throw Error("saturate needs --lambda");
  HalfSpace w{parse_vector(f.lambda, g.rank())};
  SaturationConfig cfg = saturation_config(g, f);
  EdgeApprox e = saturate_edge(g, w, cfg);
  Decision d = decide_halfspace(g, w, cfg, search_options(f));
  if (f.json) {
    Json j = to_json(g, e, w.lam);
    j["decision"] = to_json(g, d);
    print_json(j);
    return exit_for(d.verdict);
  }
  Mat listed = e.boundary.basis();
  for (const auto& s : e.trace) listed.insert(listed.end(), s.added.begin(), s.added.end());
  std::cout << "E ⊇ " << set_text(g, listed) << "; ";
  if (d.kind == CertKind::Saturation) {
    const auto& c = d.saturation->conclusion;
    if (c == "V3" || c == "V2")
      std::cout << c << " ⊆ E";
    else if (c == "derived")
      std::cout << "[g,g] ⊆ E";
    else
      std::cout << "diamond terms of " << set_text(g, d.saturation->basis) << " ⊆ E";
    std::cout << " ⇒ half-space semigenerating\n";
  } else if (d.kind == CertKind::EngelQuotient) {
    std::cout << "Engel quotient (ideal = " << (d.engel->ideal.is_zero() ? "0" : set_text(g, d.engel->ideal.basis()))
              << ", n = " << d.engel->n << ") maps W onto a bad half-space ⇒ half-space not semigenerating\n";
  } else {
    std::cout << "undecided\n";
  }
  if (e.extended_difference) std::cout << "note: extended R2 produced additional vectors\n";
  return exit_for(d.verdict);
}

int cmd_decide(const Flags& f) {
  GradedLieAlgebra g = load_algebra(f.file);
  Decision d;
  if (!f.lambda.empty()) {
    d = decide_halfspace(g, HalfSpace{parse_vector(f.lambda, g.rank())}, saturation_config(g, f), search_options(f));
  } else {
    std::optional<ProductQuotientCert> cert;
    if (!f.diamond_cert.empty()) cert = product_quotient_from_json(g, read_json_file(f.diamond_cert));
    d = decide_semigenerated(g, search_options(f), cert);
  }
  if (f.json)
    print_json(to_json(g, d));
  else
    std::cout << d.summary << "\n";
  return exit_for(d.verdict);
}

int cmd_quotients(const Flags& f) {
  GradedLieAlgebra g = load_algebra(f.file);
  SearchOptions o = search_options(f);
  o.max_results = 0;
  EngelSearch s = find_engel_quotients(g, o);
  if (f.json) {
    print_json(to_json(g, s));
  } else {
    for (const auto& c : s.found)
      std::cout << "ideal = " << (c.ideal.is_zero() ? "0" : set_text(g, c.ideal.basis())) << ", n = " << c.n
                << " [" << c.layer << "]\n";
    std::cout << s.found.size() << " Engel quotient(s); exhaustive: " << (s.exhaustive ? "true" : "false") << "\n";
  }
  return s.found.empty() && !s.exhaustive ? 2 : 0;
}

int cmd_abnormal(const Flags& f) {
  GradedLieAlgebra g = load_algebra(f.file);
  if (f.nu.empty()) throw Error("abnormal needs --nu");
  Vec nu = horizontal_vector(g, f.nu);
  bool non = is_nonabnormal(g, nu);
  if (f.json)
    print_json({{"schema", kSchema}, {"kind", "abnormal"}, {"algebra", g.name()}, {"nu", vec_to_json(nu)}, {"abnormal", !non}});
  else
    std::cout << (non ? "NON-ABNORMAL" : "ABNORMAL") << ": " << format_vector(g, nu) << "\n";
  return 0;
}

int cmd_simulate(const Flags& f) {
  GradedLieAlgebra g = load_algebra(f.file);
  if (f.lambda.empty()) throw Error("simulate needs --lambda");
  SampleOptions o;
  o.seed = f.seed;
  o.word_length = f.word_length;
  o.variable_length = !f.fixed_length;
  o.count = f.count;
  o.bound = f.bound;
  o.grid = f.grid;
  o.threads = f.threads;
  SampleRun run = sample_semigroup(g, parse_vector(f.lambda, g.rank()), o);
  print_json(to_json(g, run));
  return 0;
}

int cmd_verify(const Flags& f) {
  GradedLieAlgebra g = load_algebra(f.file);
  if (f.cert.empty()) throw Error("verify needs --cert");
  Json j = read_json_file(f.cert);
  // Accept a saturate report wrapping a decision.
  if (j.contains("decision")) j = j["decision"];
  Decision d = decision_from_json(g, j);
  VerifyResult r = verify_certificate(g, d);
  if (r.ok) {
    std::cout << "VALID; " << to_string(d.verdict) << " (" << to_string(d.kind) << ")\n";
    return 0;
  }
  std::cout << "INVALID; " << r.first_failure << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semigeneration of stratified Lie algebras"};
  app.require_subcommand(1);
  Flags f;

  auto file_arg = [&](CLI::App* s) { s->add_option("file", f.file, "algebra presentation (JSON)")->required(); };
  auto json_flag = [&](CLI::App* s) { s->add_flag("--json", f.json, "emit a JSON report"); };
  auto search_flags = [&](CLI::App* s) {
    s->add_option("--seed", f.seed, "seed for randomized search phases");
    s->add_option("--max-samples", f.max_samples, "random samples in the last search layer");
    s->add_option("--threads", f.threads, "worker threads");
  };

  auto* validate = app.add_subcommand("validate", "check grading, Jacobi identity and stratification");
  file_arg(validate);
  auto* info = app.add_subcommand("info", "layer, center and trimmedness summary");
  file_arg(info);
  json_flag(info);
  auto* free = app.add_subcommand("free", "free nilpotent algebra on a Hall basis");
  free->add_option("--rank", f.rank, "number of generators")->required();
  free->add_option("--step", f.step, "nilpotency step")->required();
  auto* engel = app.add_subcommand("engel", "Engel-type algebra En^n");
  engel->add_option("--n", f.n, "n >= 1")->required();
  auto* recognize = app.add_subcommand("recognize", "recognize an Engel-type algebra");
  file_arg(recognize);
  json_flag(recognize);
  auto* star = app.add_subcommand("star", "type (star) check");
  file_arg(star);
  json_flag(star);
  auto* diamond = app.add_subcommand("diamond", "type (diamond) check");
  file_arg(diamond);
  json_flag(diamond);
  diamond->add_option("--cert", f.cert, "product-quotient certificate (JSON)");
  auto* saturate = app.add_subcommand("saturate", "edge saturation for a half-space");
  file_arg(saturate);
  json_flag(saturate);
  search_flags(saturate);
  saturate->add_option("--lambda", f.lambda, "covector on V1, e.g. \"0,1\"")->required();
  saturate->add_option("--generators", f.generators, "extra R3 generators, V1 coordinates, ';'-separated");
  saturate->add_flag("--r2-extended", f.r2_extended, "let R2 range over V1 + E");
  auto* decide = app.add_subcommand("decide", "decide semigeneration (or one half-space with --lambda)");
  file_arg(decide);
  json_flag(decide);
  search_flags(decide);
  decide->add_option("--lambda", f.lambda, "covector on V1");
  decide->add_option("--generators", f.generators, "extra R3 generators, V1 coordinates, ';'-separated");
  decide->add_option("--diamond-cert", f.diamond_cert, "product-quotient certificate (JSON)");
  auto* quotients = app.add_subcommand("quotients", "search for Engel-type quotients");
  file_arg(quotients);
  json_flag(quotients);
  search_flags(quotients);
  auto* abnormal = app.add_subcommand("abnormal", "abnormality of a horizontal line (step <= 3)");
  file_arg(abnormal);
  json_flag(abnormal);
  abnormal->add_option("--nu", f.nu, "horizontal direction, V1 or full coordinates")->required();
  auto* simulate = app.add_subcommand("simulate", "sample the semigroup generated by exp(W)");
  file_arg(simulate);
  simulate->add_option("--lambda", f.lambda, "covector on V1")->required();
  simulate->add_option("--seed", f.seed, "sampler seed");
  simulate->add_option("--word-length", f.word_length, "maximum word length");
  simulate->add_flag("--fixed-length", f.fixed_length, "use exactly --word-length factors");
  simulate->add_option("--count", f.count, "number of points");
  simulate->add_option("--bound", f.bound, "coordinate bound B");
  simulate->add_option("--grid", f.grid, "grid denominator");
  simulate->add_option("--threads", f.threads, "worker threads");
  auto* verify = app.add_subcommand("verify", "replay a decision certificate");
  file_arg(verify);
  verify->add_option("--cert", f.cert, "decision JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*validate) return cmd_validate(f);
    if (*info) return cmd_info(f);
    if (*free) {
      print_json(algebra_to_json(free_nilpotent(f.rank, f.step).algebra));
      return 0;
    }
    if (*engel) {
      print_json(algebra_to_json(make_engel(f.n)));
      return 0;
    }
    if (*recognize) return cmd_recognize(f);
    if (*star) return cmd_star(f);
    if (*diamond) return cmd_diamond(f);
    if (*saturate) return cmd_saturate(f);
    if (*decide) return cmd_decide(f);
    if (*quotients) return cmd_quotients(f);
    if (*abnormal) return cmd_abnormal(f);
    if (*simulate) return cmd_simulate(f);
    if (*verify) return cmd_verify(f);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
