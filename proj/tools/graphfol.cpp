// graphfol: foliation, left-order and L-space verdicts for graph manifolds.
// Exit codes: 0 computed, 1 internal failure, 2 input error, 3 undecided at
// the search bound.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "graphfol/graphsolver.hpp"
#include "graphfol/jnkernel.hpp"
#include "graphfol/manifest.hpp"
#include "graphfol/oracle.hpp"

using namespace graphfol;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kInternal = 1, kInput = 2, kUndecided = 3;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

std::vector<Rat> rats(const std::string& s) {
  std::vector<Rat> out;
  for (const auto& t : split(s, ',')) out.push_back(parse_rat(t));
  return out;
}

// 1-based list to 0-based set.
std::set<int> indices(const std::string& s) {
  std::set<int> out;
  for (const auto& t : split(s, ',')) {
    Int v = parse_int(t);
    if (v < 1 || v > 100000) throw InputError("index " + t + " out of range (indices start at 1)");
    out.insert(static_cast<int>(v) - 1);
  }
  return out;
}

std::vector<Slope> slopes(const std::string& s) {
  std::vector<Slope> out;
  for (const auto& t : split(s, ';')) out.push_back(Slope::parse(t));
  return out;
}

SeifertPiece piece_of(const std::string& base, const std::string& gammas, int boundary) {
  SeifertPiece p;
  if (base != "P" && base != "Q") throw InputError("base must be P or Q");
  p.base = base == "P" ? Base::P : Base::Q;
  for (const auto& g : rats(gammas)) p.fibres.push_back({denom(g), numer(g)});
  p.boundary_count = boundary;
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return p;
}

std::string join_rats(const std::vector<Rat>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + to_string(x);
  return "{" + s + "}";
}

std::string slopes_str(const SlopeAssignment& a) {
  std::string s;
  for (std::size_t e = 0; e < a.size(); ++e) s += (e ? "; " : "") + std::string("edge ") + std::to_string(e + 1) + " " + a[e].str();
  return s;
}

void print_decision(const std::string& label, const Decision& d) {
  std::cout << label << ": " << verdict_name(d.verdict);
  if (d.verdict == Verdict::YES && !d.witness.empty()) std::cout << " (" << slopes_str(d.witness) << ")";
  std::cout << "\n";
}

struct Options {
  bool json = false;
  std::string b = "0", gammas, taus, J, base = "P", slopes, K, mode = "ctf", manifest;
  int boundary = 1, exhaustive = 0, root = 1, max_den = 30, bound = 12, nls_t = 0;
  std::string lo = "-2", hi = "0";
  bool strong = false;
};

int cmd_jn(const Options& o) {
  JNInstance inst{indices(o.J), parse_int(o.b), rats(o.gammas), rats(o.taus)};
  for (const auto& g : inst.gammas)
    if (g <= 0 || g >= 1) throw InputError("gammas must lie in (0, 1)");
  for (int j : inst.J)
    if (j >= static_cast<int>(inst.taus.size())) throw InputError("J refers to a missing tau");
  JNResult r = jn_decide(inst);
  if (o.json) {
    json out = {{"realizable", r.realizable}, {"rule", r.rule}};
    if (r.witness) out["witness"] = {{"A", r.witness->A.str()}, {"N", r.witness->N.str()}, {"dual", r.witness->dual}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (r.realizable ? "realizable" : "not realizable") << " (" << r.rule << ")\n";
  }
  return kOk;
}

int cmd_interval(const Options& o) {
  auto gammas = rats(o.gammas);
  for (const auto& g : gammas)
    if (g <= 0 || g >= 1) throw InputError("gammas must lie in (0, 1)");
  auto taus = rats(o.taus);
  auto J = indices(o.J);
  for (int j : J)
    if (j >= static_cast<int>(taus.size())) throw InputError("J refers to a missing tau");
  TauIntervalResult r = tau_interval(gammas, J, taus);
  if (o.json)
    std::cout << json{{"T", r.T.str()}, {"T_str", r.T_str.str()}, {"rule", r.rule}}.dump(2) << "\n";
  else
    std::cout << "T = " << r.T.str() << "; T_str = " << r.T_str.str() << "\n";
  return kOk;
}

int cmd_detect(const Options& o) {
  SeifertPiece p = piece_of(o.base, o.gammas, o.boundary);
  SlopeTuple t = slopes(o.slopes);
  if (static_cast<int>(t.size()) != p.boundary_count) throw InputError("need one slope per boundary torus");
  std::set<int> J = indices(o.J);
  for (int j : J)
    if (j >= p.boundary_count) throw InputError("J refers to a missing torus");
  DetectionVerdict d;
  try {
    d = detect_tuple(p, J, t);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::optional<NlsStatus> nls;
  if (o.nls_t) nls = nls_status(p, J, t, o.nls_t);
  if (o.json) {
    json strong = json::array();
    for (int j : d.strongly_on) strong.push_back(j + 1);
    json out = {{"detected", d.detected}, {"j_detected", d.j_detected}, {"strongly_on", strong}, {"rule", d.rule}};
    if (nls) out["nls_status"] = status_name(*nls);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (d.j_detected ? "detected" : "not detected") << " (" << d.rule << ")\n";
    if (nls) std::cout << "status after gluing: " << status_name(*nls) << "\n";
  }
  return kOk;
}

int cmd_homology(const Options& o) {
  Manifest m = load_manifest(o.manifest);
  SmithForm h = homology(canonical_form(m.manifold));
  auto order = h.order();
  if (o.json) {
    json out = {{"h1", h.describe()}, {"order", order ? json(order->str()) : json("infinite")}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "H_1 = " << h.describe() << " (order " << (order ? order->str() : "infinite") << ")\n";
  }
  return kOk;
}

int cmd_classify(const Options& o) {
  Manifest m = load_manifest(o.manifest);
  ClassificationReport r = classify(m.manifold);
  if (o.json) {
    std::cout << classification_json(r).dump(2) << "\n";
  } else {
    std::cout << "H_1 = " << r.h1 << " (order " << r.h1_order.str() << ")\n";
    print_decision("ctf", r.ctf);
    print_decision("lo", r.lo);
    print_decision("horizontal", r.horizontal);
    print_decision("strong", r.strong);
    std::cout << "lspace: " << lspace_name(r.lspace) << "\n";
  }
  bool undecided = r.ctf.verdict == Verdict::UNDECIDED || r.lo.verdict == Verdict::UNDECIDED ||
                   r.horizontal.verdict == Verdict::UNDECIDED || r.strong.verdict == Verdict::UNDECIDED;
  return undecided ? kUndecided : kOk;
}

int cmd_decide(const Options& o, bool mode_given, bool K_given, bool exhaustive_given) {
  Manifest m = load_manifest(o.manifest);
  Mode mode = mode_given ? parse_mode(o.mode) : m.mode.value_or(Mode::CTF);
  std::set<int> K = K_given ? indices(o.K) : m.K;
  int D = exhaustive_given ? o.exhaustive : m.exhaustive.value_or(0);
  if (D > 0) {
    if (mode == Mode::STRONG)
      for (int e = 0; e < static_cast<int>(m.manifold.edges.size()); ++e) K.insert(e);
    OracleResult r = exhaustive_decide(m.manifold, K, D, mode == Mode::HORIZONTAL);
    if (o.json)
      std::cout << oracle_json(r).dump(2) << "\n";
    else if (r.verdict == OracleVerdict::FOUND)
      std::cout << mode_name(mode) << ": yes (" << slopes_str(r.witness) << ")\n";
    else
      std::cout << mode_name(mode) << ": undecided at denominator bound " << D << "\n";
    return r.verdict == OracleVerdict::FOUND ? kOk : kUndecided;
  }
  if (o.root < 1 || o.root > static_cast<int>(m.manifold.pieces.size())) throw InputError("root piece out of range");
  Decision d = decide(m.manifold, K, mode, o.root - 1);
  if (o.json) {
    std::cout << decision_json(d).dump(2) << "\n";
  } else {
    print_decision(mode_name(mode), d);
    for (const auto& t : d.trace) std::cout << "  " << t << "\n";
  }
  return d.verdict == Verdict::UNDECIDED ? kUndecided : kOk;
}

int cmd_gluing(const Options& o) {
  Manifest m = load_manifest(o.manifest);
  SlopeAssignment a = slopes(o.slopes);
  if (a.size() != m.manifold.edges.size()) throw InputError("need one slope per edge");
  std::set<int> K = indices(o.K);
  GluingStatus gs = gluing_status(m.manifold, K, a);
  if (o.json) {
    json closure = json::array();
    for (int e : gs.closure) closure.push_back(e + 1);
    std::cout << json{{"coherent", gs.coherent}, {"unobstructed", gs.unobstructed}, {"closure", closure}, {"notes", gs.notes}}.dump(2) << "\n";
  } else {
    std::cout << "coherent: " << (gs.coherent ? "yes" : "no") << "\nunobstructed: " << (gs.unobstructed ? "yes" : "no") << "\n";
    for (const auto& n : gs.notes) std::cout << "  " << n << "\n";
  }
  return kOk;
}

int cmd_oracle_sample(const Options& o) {
  SeifertPiece p = piece_of(o.base, o.gammas, 1);
  auto taus = rats(o.taus);
  auto J = indices(o.J);
  for (int j : J)
    if (j >= static_cast<int>(taus.size())) throw InputError("J refers to a missing tau");
  if (o.max_den < 1) throw InputError("--max-den must be at least 1");
  SampleGrid grid{o.max_den, parse_rat(o.lo), parse_rat(o.hi)};
  auto pts = sample_detected_set(p, J, taus, grid, o.strong);
  if (o.json) {
    json arr = json::array();
    for (const auto& x : pts) arr.push_back(to_string(x));
    std::cout << json{{"points", arr}, {"count", pts.size()}}.dump(2) << "\n";
  } else {
    std::cout << join_rats(pts) << "\n";
  }
  return kOk;
}

int cmd_oracle_exhaustive(const Options& o) {
  Manifest m = load_manifest(o.manifest);
  if (o.bound < 1) throw InputError("--bound must be at least 1");
  OracleResult r = exhaustive_decide(m.manifold, indices(o.K), o.bound);
  if (o.json)
    std::cout << oracle_json(r).dump(2) << "\n";
  else if (r.verdict == OracleVerdict::FOUND)
    std::cout << "found (" << slopes_str(r.witness) << ")\n";
  else
    std::cout << "no witness up to denominator " << o.bound << " (" << r.assignments_checked << " assignments checked)\n";
  return r.verdict == OracleVerdict::FOUND ? kOk : kUndecided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Taut foliations, left-orders and L-spaces of graph manifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");

  auto add_jn_args = [&](CLI::App* c) {
    c->add_option("--gammas", o.gammas, "exceptional fibre fractions b/a, comma separated");
    c->add_option("--taus", o.taus, "translation numbers, comma separated");
    c->add_option("--J", o.J, "1-based indices of taus that must be conjugate to shifts");
  };
  auto* jn = app.add_subcommand("jn", "realizability of a product of circle lifts");
  add_jn_args(jn);
  jn->add_option("--b", o.b, "product is the shift by b");
  auto* interval = app.add_subcommand("interval", "translation numbers admissible for one more element");
  add_jn_args(interval);

  auto* detect = app.add_subcommand("detect", "detection of a slope tuple by a Seifert piece");
  detect->add_option("--base", o.base, "P or Q");
  detect->add_option("--gammas", o.gammas, "exceptional fibre fractions b/a");
  detect->add_option("--boundary", o.boundary, "number of boundary tori");
  detect->add_option("--slopes", o.slopes, "one slope [p,q] per torus, separated by ';'")->required();
  detect->add_option("--J", o.J, "1-based tori that must be strongly detected");
  detect->add_option("--nls", o.nls_t, "also report the status after gluing N_t along the first torus");

  auto* hom = app.add_subcommand("homology", "first homology of a manifest");
  hom->add_option("manifest", o.manifest)->required();
  auto* cls = app.add_subcommand("classify", "full report for a manifest");
  cls->add_option("manifest", o.manifest)->required();

  auto* dec = app.add_subcommand("decide", "one decision problem for a manifest");
  dec->add_option("manifest", o.manifest)->required();
  auto* mode_opt = dec->add_option("--mode", o.mode, "ctf, lo, horizontal or strong");
  auto* K_opt = dec->add_option("--K", o.K, "1-based edges carried by strongly detected slopes");
  auto* ex_opt = dec->add_option("--exhaustive", o.exhaustive, "bounded search up to this denominator instead of propagation");
  dec->add_option("--root", o.root, "1-based root piece of the tree");

  auto* glu = app.add_subcommand("gluing", "coherence of a slope assignment");
  glu->add_option("manifest", o.manifest)->required();
  glu->add_option("--slopes", o.slopes, "one slope per edge, side-a coordinates, separated by ';'")->required();
  glu->add_option("--K", o.K, "1-based edge set");

  auto* orc = app.add_subcommand("oracle", "brute-force validators");
  orc->require_subcommand(1);
  auto* sample = orc->add_subcommand("sample", "grid sampling of the admissible translation numbers");
  add_jn_args(sample);
  sample->add_option("--max-den", o.max_den, "largest grid denominator");
  sample->add_option("--lo", o.lo, "grid lower end");
  sample->add_option("--hi", o.hi, "grid upper end");
  sample->add_flag("--strong", o.strong, "require the new element to be conjugate to a shift");
  auto* exh = orc->add_subcommand("exhaustive", "bounded-denominator gluing search");
  exh->add_option("manifest", o.manifest)->required();
  exh->add_option("--bound", o.bound, "largest slope denominator");
  exh->add_option("--K", o.K, "1-based edge set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*jn) return cmd_jn(o);
    if (*interval) return cmd_interval(o);
    if (*detect) return cmd_detect(o);
    if (*hom) return cmd_homology(o);
    if (*cls) return cmd_classify(o);
    if (*dec) return cmd_decide(o, mode_opt->count() > 0, K_opt->count() > 0, ex_opt->count() > 0);
    if (*glu) return cmd_gluing(o);
    if (*sample) return cmd_oracle_sample(o);
    if (*exh) return cmd_oracle_exhaustive(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
