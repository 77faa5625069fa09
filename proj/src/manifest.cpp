#include "graphfol/manifest.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace graphfol {

using nlohmann::json;

namespace {

// Maps JSON pointers to the line where each value starts. Runs only on text
// that nlohmann has already accepted.
class PositionScanner {
 public:
  explicit PositionScanner(const std::string& text) : t_(text) {}

  std::map<std::string, int> run() {
    value("");
    return lines_;
  }

 private:
  char peek() const { return i_ < t_.size() ? t_[i_] : '\0'; }

  void skip_ws() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) {
      if (t_[i_] == '\n') ++line_;
      ++i_;
    }
  }

  std::string string_token() {
    std::string s;
    ++i_;
    while (i_ < t_.size() && t_[i_] != '"') {
      if (t_[i_] == '\\') s += t_[i_++];
      s += t_[i_++];
    }
    ++i_;
    return s;
  }

  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~')
        out += "~0";
      else if (c == '/')
        out += "~1";
      else
        out += c;
    }
    return out;
  }

  void value(const std::string& path) {
    skip_ws();
    lines_[path] = line_;
    char c = peek();
    if (c == '{' || c == '[') {
      ++i_;
      skip_ws();
      if (peek() == (c == '{' ? '}' : ']')) {
        ++i_;
        return;
      }
      for (int index = 0;; ++index) {
        skip_ws();
        if (c == '{') {
          std::string key = string_token();
          skip_ws();
          ++i_;  // ':'
          value(path + "/" + escape(key));
        } else {
          value(path + "/" + std::to_string(index));
        }
        skip_ws();
        if (peek() != ',') break;
        ++i_;
      }
      ++i_;
    } else if (c == '"') {
      string_token();
    } else {
      while (i_ < t_.size() && std::string(",]} \t\r\n").find(t_[i_]) == std::string::npos) ++i_;
    }
  }

  const std::string& t_;
  std::size_t i_ = 0;
  int line_ = 1;
  std::map<std::string, int> lines_;
};

class Reader {
 public:
  Reader(const std::string& text) : lines_(PositionScanner(text).run()) {}

  void error(const std::string& path, const std::string& msg) {
    auto it = lines_.find(path);
    int line = it == lines_.end() ? 0 : it->second;
    errors_.push_back("line " + std::to_string(line) + ": " + msg + " (at " + (path.empty() ? "/" : path) + ")");
  }

  void only_fields(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    for (const auto& [key, v] : obj.items()) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || key == a;
      if (!ok) error(path + "/" + key, "unknown field \"" + key + "\"");
    }
  }

  std::optional<Int> integer(const json& v, const std::string& path) {
    try {
      if (v.is_number_integer()) return Int(v.get<long long>());
      if (v.is_string()) return parse_int(v.get<std::string>());
    } catch (const std::exception&) {
    }
    error(path, "expected an integer");
    return std::nullopt;
  }

  std::optional<int> small(const json& v, const std::string& path) {
    auto i = integer(v, path);
    if (!i) return std::nullopt;
    if (*i < -1000000 || *i > 1000000) {
      error(path, "index out of range");
      return std::nullopt;
    }
    return static_cast<int>(*i);
  }

  // 1-based index to 0-based.
  std::optional<int> index(const json& v, const std::string& path) {
    auto i = small(v, path);
    if (!i) return std::nullopt;
    if (*i < 1) {
      error(path, "indices start at 1");
      return std::nullopt;
    }
    return *i - 1;
  }

  std::optional<std::pair<int, int>> torus(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2) {
      error(path, "expected [piece, torus]");
      return std::nullopt;
    }
    auto p = index(v[0], path + "/0");
    auto j = index(v[1], path + "/1");
    if (!p || !j) return std::nullopt;
    return std::make_pair(*p, *j);
  }

  std::optional<Slope> slope(const json& v, const std::string& path) {
    try {
      if (v.is_string()) return Slope::parse(v.get<std::string>());
      if (v.is_array() && v.size() == 2) {
        auto p = integer(v[0], path + "/0");
        auto q = integer(v[1], path + "/1");
        if (!p || !q) return std::nullopt;
        if (gcd_of(*p, *q) != 1) throw std::invalid_argument("slope [" + p->str() + "," + q->str() + "] is not primitive");
        return Slope(*p, *q);
      }
    } catch (const std::invalid_argument& e) {
      error(path, e.what());
      return std::nullopt;
    }
    error(path, "expected a slope [p,q]");
    return std::nullopt;
  }

  std::optional<BasisChange> matrix(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_array() || !v[1].is_array() || v[0].size() != 2 || v[1].size() != 2) {
      error(path, "expected a 2x2 integer matrix");
      return std::nullopt;
    }
    std::optional<Int> e[4];
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) e[2 * r + c] = integer(v[r][c], path + "/" + std::to_string(r) + "/" + std::to_string(c));
    for (const auto& x : e)
      if (!x) return std::nullopt;
    return BasisChange(*e[0], *e[1], *e[2], *e[3]);
  }

  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::map<std::string, int> lines_;
  std::vector<std::string> errors_;
};

void read_piece(Reader& rd, const json& v, const std::string& path, GraphManifold& w) {
  if (!v.is_object()) {
    rd.error(path, "piece must be an object");
    return;
  }
  rd.only_fields(v, path, {"base", "fibres", "boundary"});
  SeifertPiece p;
  if (!v.contains("base") || !v["base"].is_string() || (v["base"] != "P" && v["base"] != "Q"))
    rd.error(path + (v.contains("base") ? "/base" : ""), "base must be \"P\" or \"Q\"");
  else
    p.base = v["base"] == "P" ? Base::P : Base::Q;
  if (v.contains("fibres")) {
    const json& fs = v["fibres"];
    if (!fs.is_array()) rd.error(path + "/fibres", "fibres must be an array of [a,b]");
    for (std::size_t i = 0; fs.is_array() && i < fs.size(); ++i) {
      std::string fp = path + "/fibres/" + std::to_string(i);
      if (!fs[i].is_array() || fs[i].size() != 2) {
        rd.error(fp, "expected [a,b]");
        continue;
      }
      auto a = rd.integer(fs[i][0], fp + "/0");
      auto b = rd.integer(fs[i][1], fp + "/1");
      if (a && b) p.fibres.push_back({*a, *b});
    }
  }
  if (!v.contains("boundary")) {
    rd.error(path, "missing field \"boundary\"");
  } else if (auto r = rd.small(v["boundary"], path + "/boundary")) {
    p.boundary_count = *r;
  }
  w.pieces.push_back(p);
}

void read_edge(Reader& rd, const json& v, const std::string& path, GraphManifold& w) {
  if (!v.is_object()) {
    rd.error(path, "edge must be an object");
    return;
  }
  rd.only_fields(v, path, {"a", "b", "matrix"});
  for (const char* k : {"a", "b", "matrix"})
    if (!v.contains(k)) rd.error(path, std::string("missing field \"") + k + "\"");
  if (!v.contains("a") || !v.contains("b") || !v.contains("matrix")) return;
  auto a = rd.torus(v["a"], path + "/a");
  auto b = rd.torus(v["b"], path + "/b");
  auto m = rd.matrix(v["matrix"], path + "/matrix");
  if (a && b && m) w.edges.push_back({a->first, a->second, b->first, b->second, *m});
}

void read_filling(Reader& rd, const json& v, const std::string& path, GraphManifold& w) {
  if (!v.is_object()) {
    rd.error(path, "filling must be an object");
    return;
  }
  rd.only_fields(v, path, {"piece", "boundary", "slope"});
  for (const char* k : {"piece", "boundary", "slope"})
    if (!v.contains(k)) rd.error(path, std::string("missing field \"") + k + "\"");
  if (!v.contains("piece") || !v.contains("boundary") || !v.contains("slope")) return;
  auto p = rd.index(v["piece"], path + "/piece");
  auto j = rd.index(v["boundary"], path + "/boundary");
  auto s = rd.slope(v["slope"], path + "/slope");
  if (p && j && s) w.fillings.push_back({*p, *j, *s});
}

template <typename F>
void read_array(Reader& rd, const json& doc, const char* key, F&& each) {
  if (!doc.contains(key)) return;
  const json& arr = doc[key];
  std::string path = std::string("/") + key;
  if (!arr.is_array()) {
    rd.error(path, std::string(key) + " must be an array");
    return;
  }
  for (std::size_t i = 0; i < arr.size(); ++i) each(arr[i], path + "/" + std::to_string(i));
}

json int_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

json index_set_json(const std::set<int>& s) {
  json out = json::array();
  for (int e : s) out.push_back(e + 1);
  return out;
}

}  // namespace

Mode parse_mode(const std::string& s) {
  if (s == "ctf") return Mode::CTF;
  if (s == "lo") return Mode::LO;
  if (s == "horizontal") return Mode::HORIZONTAL;
  if (s == "strong") return Mode::STRONG;
  throw InputError("unknown mode \"" + s + "\" (expected ctf, lo, horizontal or strong)");
}

Manifest parse_manifest(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("manifest is not valid JSON: ") + e.what());
  }
  Reader rd(text);
  Manifest m;
  if (!doc.is_object()) {
    rd.error("", "manifest must be a JSON object");
    throw InputError(rd.errors().front());
  }
  rd.only_fields(doc, "", {"pieces", "edges", "fillings", "K", "options"});
  if (!doc.contains("pieces")) rd.error("", "missing field \"pieces\"");
  read_array(rd, doc, "pieces", [&](const json& v, const std::string& p) { read_piece(rd, v, p, m.manifold); });
  read_array(rd, doc, "edges", [&](const json& v, const std::string& p) { read_edge(rd, v, p, m.manifold); });
  read_array(rd, doc, "fillings", [&](const json& v, const std::string& p) { read_filling(rd, v, p, m.manifold); });
  read_array(rd, doc, "K", [&](const json& v, const std::string& p) {
    if (auto e = rd.index(v, p)) m.K.insert(*e);
  });
  if (doc.contains("options")) {
    const json& o = doc["options"];
    if (!o.is_object()) {
      rd.error("/options", "options must be an object");
    } else {
      rd.only_fields(o, "/options", {"mode", "exhaustive"});
      if (o.contains("mode")) {
        try {
          m.mode = parse_mode(o["mode"].is_string() ? o["mode"].get<std::string>() : o["mode"].dump());
        } catch (const InputError& e) {
          rd.error("/options/mode", e.what());
        }
      }
      if (o.contains("exhaustive")) {
        auto d = rd.small(o["exhaustive"], "/options/exhaustive");
        if (d && *d < 1) rd.error("/options/exhaustive", "denominator bound must be at least 1");
        if (d && *d >= 1) m.exhaustive = *d;
      }
    }
  }
  if (!rd.errors().empty()) {
    std::string msg;
    for (const auto& e : rd.errors()) msg += (msg.empty() ? "" : "\n") + e;
    throw InputError(msg);
  }
  m.manifold.validate();
  for (int e : m.K)
    if (e >= static_cast<int>(m.manifold.edges.size())) throw InputError("K refers to edge " + std::to_string(e + 1) + ", which does not exist");
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str());
}

json slope_json(const Slope& s) { return json::array({int_json(s.h_coeff()), int_json(s.dual_coeff())}); }

json manifest_json(const Manifest& m) {
  json doc;
  doc["pieces"] = json::array();
  for (const auto& p : m.manifold.pieces) {
    json fibres = json::array();
    for (const auto& f : p.fibres) fibres.push_back(json::array({int_json(f.a), int_json(f.b)}));
    doc["pieces"].push_back({{"base", p.base == Base::P ? "P" : "Q"}, {"fibres", fibres}, {"boundary", p.boundary_count}});
  }
  doc["edges"] = json::array();
  for (const auto& e : m.manifold.edges) {
    const auto& a = e.matrix.m;
    doc["edges"].push_back({{"a", {e.piece_a + 1, e.boundary_a + 1}},
                            {"b", {e.piece_b + 1, e.boundary_b + 1}},
                            {"matrix", {{int_json(a[0][0]), int_json(a[0][1])}, {int_json(a[1][0]), int_json(a[1][1])}}}});
  }
  if (!m.manifold.fillings.empty()) {
    doc["fillings"] = json::array();
    for (const auto& f : m.manifold.fillings)
      doc["fillings"].push_back({{"piece", f.piece + 1}, {"boundary", f.boundary + 1}, {"slope", slope_json(f.slope)}});
  }
  if (!m.K.empty()) doc["K"] = index_set_json(m.K);
  if (m.mode || m.exhaustive) {
    json o = json::object();
    if (m.mode) o["mode"] = mode_name(*m.mode);
    if (m.exhaustive) o["exhaustive"] = *m.exhaustive;
    doc["options"] = o;
  }
  return doc;
}

std::string serialize_manifest(const Manifest& m) { return manifest_json(m).dump(2) + "\n"; }

json decision_json(const Decision& d) {
  json out = {{"verdict", verdict_name(d.verdict)}, {"K", index_set_json(d.K)}};
  if (d.verdict == Verdict::YES) {
    out["K_used"] = index_set_json(d.K_used);
    json wit = json::array();
    for (const auto& s : d.witness) wit.push_back(slope_json(s));
    out["witness"] = wit;
  }
  out["trace"] = d.trace;
  return out;
}

json classification_json(const ClassificationReport& r) {
  json out = {{"h1", r.h1},
              {"h1_order", int_json(r.h1_order)},
              {"ctf", decision_json(r.ctf)},
              {"lo", decision_json(r.lo)},
              {"horizontal", decision_json(r.horizontal)},
              {"strong", decision_json(r.strong)},
              {"lspace", lspace_name(r.lspace)}};
  if (r.lspace == LSpaceStatus::CONJECTURAL_LSPACE)
    out["lspace_note"] = "conjectural: no left-order exists, and L-spaces are conjectured to be exactly such manifolds";
  return out;
}

json oracle_json(const OracleResult& r) {
  json out = {{"verdict", r.verdict == OracleVerdict::FOUND ? "found" : "exhausted"},
              {"max_denominator", r.max_denominator},
              {"assignments_checked", r.assignments_checked}};
  if (r.verdict == OracleVerdict::FOUND) {
    json wit = json::array();
    for (const auto& s : r.witness) wit.push_back(slope_json(s));
    out["witness"] = wit;
  }
  return out;
}

}  // namespace graphfol
