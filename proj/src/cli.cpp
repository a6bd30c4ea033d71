#include "interlace/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "interlace/compat.hpp"
#include "interlace/edgewise.hpp"
#include "interlace/matrices.hpp"
#include "interlace/realroots.hpp"
#include "interlace/words.hpp"

namespace interlace::cli {

namespace {

using nlohmann::json;

json poly_array(const std::vector<Poly>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json integer_array(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.get_str());
  return out;
}

std::string join(const std::vector<Integer>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += v[k].get_str();
  }
  return out;
}

// Semicolon-separated list of polynomials in ascending-coefficient form.
std::vector<Poly> parse_poly_list(const std::string& text) {
  std::vector<Poly> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ';')) out.push_back(Poly::parse(tok));
  if (out.empty()) throw Error(ErrorCode::ParseError, "no polynomials given");
  return out;
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  // Token by token: trailing zeros are significant here, unlike in Poly::parse.
  std::vector<Integer> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    Rational q = parse_rational(tok);
    if (q.get_den() != 1) throw Error(ErrorCode::ParseError, "expected an integer, got '" + tok + "'");
    out.push_back(q.get_num());
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty vector");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes either the JSON verdict object or the given text lines.
class Reporter {
 public:
  Reporter(std::ostream& out, bool as_json, std::string command, json params)
      : out_(out), as_json_(as_json) {
    doc_["command"] = std::move(command);
    doc_["params"] = std::move(params);
  }

  void line(const std::string& text) { lines_.push_back(text); }
  void result(json value) { doc_["result"] = std::move(value); }
  void witness(json value) { doc_["witness"] = std::move(value); }

  int finish(const std::string& status, int code) {
    doc_["status"] = status;
    if (as_json_) {
      out_ << doc_.dump() << '\n';
    } else {
      for (const auto& l : lines_) out_ << l << '\n';
    }
    return code;
  }

 private:
  std::ostream& out_;
  bool as_json_;
  json doc_;
  std::vector<std::string> lines_;
};

struct EdgewiseArgs {
  int r = 0;
  int n = 0;
  std::string gamma;
  std::optional<int> component;
  bool verify = false;
  bool json = false;
};

int cmd_edgewise(const EdgewiseArgs& a, std::ostream& out) {
  json params = {{"r", a.r}, {"n", a.n}};
  if (!a.gamma.empty()) params["gamma"] = a.gamma;
  if (a.component) params["component"] = *a.component;
  Reporter rep(out, a.json, "edgewise", params);

  std::optional<GammaVector> gamma;
  if (!a.gamma.empty()) gamma = GammaVector::parse(a.gamma);
  const EVector v = gamma ? e_gamma(a.r, a.n, *gamma) : e_vector(a.r, a.n);
  if (a.component && (*a.component < 0 || *a.component >= a.r)) {
    throw Error(ErrorCode::BadParameters, "component must lie in [0, r-1]");
  }

  if (a.component) {
    const Poly& p = v.polys[static_cast<std::size_t>(*a.component)];
    rep.line(p.to_string());
    rep.result(p.to_string());
  } else {
    for (const auto& p : v.polys) rep.line(p.to_string());
    rep.result(poly_array(v.polys));
  }
  if (!a.verify) return rep.finish("OK", kExitOk);

  const std::uint64_t budget = budget_from_env();
  const std::vector<Poly> oracle = gamma ? oracle_E_gamma(a.n, a.r, *gamma, budget) : oracle_E(a.n, a.r, budget);
  if (oracle == v.polys) {
    rep.line("verify: PASS");
    return rep.finish("PASS", kExitOk);
  }
  rep.line("verify: FAIL");
  json w = {{"recurrence", poly_array(v.polys)}, {"enumeration", poly_array(oracle)}};
  rep.line(w.dump());
  rep.witness(w);
  return rep.finish("FAIL", kExitPropertyFailure);
}

struct FhArgs {
  std::string f;
  std::string h;
  bool json = false;
};

int cmd_fh(const FhArgs& a, std::ostream& out) {
  if (a.f.empty() == a.h.empty()) throw Error(ErrorCode::BadParameters, "give exactly one of --f and --h");
  if (!a.f.empty()) {
    Reporter rep(out, a.json, "fh", {{"f", a.f}});
    HVector h = fh_transform({parse_integer_list(a.f)});
    rep.line(join(h.entries));
    rep.result(integer_array(h.entries));
    return rep.finish("OK", kExitOk);
  }
  Reporter rep(out, a.json, "fh", {{"h", a.h}});
  FVector f = hf_transform({parse_integer_list(a.h)});
  rep.line(join(f.entries));
  rep.result(integer_array(f.entries));
  return rep.finish("OK", kExitOk);
}

struct CheckArgs {
  std::string kind;
  std::vector<std::string> polys;
  bool unchecked = false;
  bool json = false;
};

void require_count(const std::vector<Poly>& ps, std::size_t lo, std::size_t hi, const std::string& kind) {
  if (ps.size() < lo || ps.size() > hi) {
    throw Error(ErrorCode::BadParameters, "check " + kind + " takes " +
                                              (lo == hi ? std::to_string(lo) : "at least " + std::to_string(lo)) +
                                              " polynomial(s), got " + std::to_string(ps.size()));
  }
}

int cmd_check(const CheckArgs& a, std::ostream& out) {
  std::vector<Poly> ps;
  for (const auto& s : a.polys) ps.push_back(Poly::parse(s));
  Reporter rep(out, a.json, "check", {{"kind", a.kind}, {"polys", a.polys}, {"unchecked", a.unchecked}});

  if (a.kind == "realrooted") {
    require_count(ps, 1, 1, a.kind);
    const bool ok = is_real_rooted(ps[0]);
    rep.line(ok ? "PASS" : "FAIL");
    if (!ok) {
      json w = {{"polynomial", ps[0].to_string()},
                {"degree", ps[0].degree()},
                {"distinct_real_roots", count_real_roots(ps[0])},
                {"squarefree_degree", squarefree_part(ps[0]).degree()}};
      rep.line(w.dump());
      rep.witness(w);
    }
    return rep.finish(ok ? "PASS" : "FAIL", ok ? kExitOk : kExitPropertyFailure);
  }
  if (a.kind == "interleave") {
    require_count(ps, 2, 2, a.kind);
    const bool ok = interleaves(ps[0], ps[1]);
    rep.line(ok ? "PASS" : "FAIL");
    if (!ok) {
      json w = {{"f", ps[0].to_string()}, {"g", ps[1].to_string()}};
      for (const char* name : {"f", "g"}) {
        const Poly& p = name[0] == 'f' ? ps[0] : ps[1];
        w[std::string(name) + "_roots"] = p.is_zero() ? json::array() : json::parse(certificate_to_json(isolate_roots(p)));
      }
      rep.line(w.dump());
      rep.witness(w);
    }
    return rep.finish(ok ? "PASS" : "FAIL", ok ? kExitOk : kExitPropertyFailure);
  }
  if (a.kind == "compatible" || a.kind == "conditions-ab") {
    require_count(ps, 1, static_cast<std::size_t>(-1), a.kind);
    const SampleGrid grid = SampleGrid::default_grid();
    const Precondition pre = a.unchecked ? Precondition::Unchecked : Precondition::Checked;
    CompatVerdict v;
    if (a.kind == "conditions-ab") {
      v = check_conditions_ab(ps, grid, pre);
    } else if (ps.size() == 2) {
      v = compatible_pair_sampled(ps[0], ps[1], grid, pre);
    } else {
      v = compatible_family_sampled(ps, grid, pre);
    }
    const json verdict = json::parse(verdict_to_json(v));
    rep.line(verdict["status"].get<std::string>());
    if (!v.passed()) {
      rep.line(verdict["witness"].dump());
      rep.witness(verdict["witness"]);
    }
    return rep.finish(verdict["status"].get<std::string>(), v.passed() ? kExitOk : kExitPropertyFailure);
  }
  throw Error(ErrorCode::BadParameters, "unknown check kind '" + a.kind + "'");
}

struct MatrixArgs {
  std::string file;
  std::string polys;
  bool verify = false;
  bool json = false;
};

json rule_json(const PatternVerdict& v) { return v.rule ? json(std::string(to_string(*v.rule))) : json(nullptr); }

int cmd_classify_all(const MatrixArgs& a, std::ostream& out) {
  Reporter rep(out, a.json, "matrix classify-all", json::object());
  const auto pairs = default_sample_pairs();
  const Classification c = classify_all_2x2(pairs);
  std::ostringstream summary;
  summary << "allowed: " << c.allowed.size() << ", forbidden: " << c.forbidden.size()
          << ", disagreements: " << c.disagreements.size();
  rep.line(summary.str());
  json allowed = json::array();
  for (const auto& m : c.allowed) allowed.push_back(m.to_string());
  json forbidden = json::array();
  for (const auto& m : c.forbidden) {
    forbidden.push_back({{"matrix", m.to_string()}, {"rule", rule_json(forbidden_pattern(m))}});
  }
  rep.result({{"allowed", allowed}, {"forbidden", forbidden}, {"disagreements", c.disagreements.size()}});
  if (c.disagreements.empty()) return rep.finish("PASS", kExitOk);
  json w = json::array();
  for (const auto& d : c.disagreements) {
    w.push_back({{"matrix", d.matrix.to_string()}, {"sampled_allowed", d.sampled_allowed}, {"rule", rule_json(d.pattern)}});
  }
  rep.line(w.dump());
  rep.witness(w);
  return rep.finish("FAIL", kExitPropertyFailure);
}

// First 2x2 submatrix rejected by the pattern rules.
std::optional<json> offending_submatrix(const SymMatrix& g) {
  for (std::size_t k = 0; k < g.rows(); ++k)
    for (std::size_t l = k + 1; l < g.rows(); ++l)
      for (std::size_t i = 0; i < g.cols(); ++i)
        for (std::size_t j = i + 1; j < g.cols(); ++j) {
          const SymMatrix sub = g.submatrix(k, l, i, j);
          const PatternVerdict v = forbidden_pattern(sub);
          if (!v.allowed) {
            return json{{"rows", {k, l}}, {"cols", {i, j}}, {"submatrix", sub.to_string()}, {"rule", rule_json(v)}};
          }
        }
  return std::nullopt;
}

int cmd_matrix_check(const MatrixArgs& a, std::ostream& out) {
  const SymMatrix g = SymMatrix::from_json(read_file(a.file));
  Reporter rep(out, a.json, "matrix check", {{"file", a.file}});
  const bool preserves = preserves_check(g);
  const bool ferrers = ferrers_check(g);
  rep.line(std::string("preserves: ") + (preserves ? "PASS" : "FAIL") + ", ferrers: " + (ferrers ? "PASS" : "FAIL"));
  rep.result({{"preserves", preserves}, {"ferrers", ferrers}});
  if (preserves) return rep.finish("PASS", kExitOk);
  json w = *offending_submatrix(g);
  rep.line(w.dump());
  rep.witness(w);
  return rep.finish("FAIL", kExitPropertyFailure);
}

int cmd_matrix_apply(const MatrixArgs& a, std::ostream& out) {
  const SymMatrix g = SymMatrix::from_json(read_file(a.file));
  const std::vector<Poly> fs = parse_poly_list(a.polys);
  Reporter rep(out, a.json, "matrix apply", {{"file", a.file}, {"polys", a.polys}, {"verify", a.verify}});
  if (!a.verify) {
    const std::vector<Poly> gs = apply_matrix(g, fs);
    for (const auto& p : gs) rep.line(p.to_string());
    rep.result(poly_array(gs));
    return rep.finish("OK", kExitOk);
  }
  const ActionReport report = action_property_test(g, fs);
  for (const auto& p : report.output) rep.line(p.to_string());
  rep.result(poly_array(report.output));
  rep.line(std::string("in F+: ") + (report.pass ? "PASS" : "FAIL"));
  if (report.pass) return rep.finish("PASS", kExitOk);
  json w = json::object();
  if (report.violating_pair) {
    w["pair"] = {report.violating_pair->first + 1, report.violating_pair->second + 1};
  }
  w["negative_coefficient"] = report.negative_coefficient;
  rep.line(w.dump());
  rep.witness(w);
  return rep.finish("FAIL", kExitPropertyFailure);
}

int cmd_closure(const MatrixArgs& a, std::ostream& out) {
  Reporter rep(out, a.json, "matrix closure", json::object());
  const std::vector<SymMatrix> closure = generator_closure();
  const Classification c = classify_all_2x2(default_sample_pairs());
  json members = json::array();
  for (const auto& m : closure) {
    rep.line(m.to_string());
    members.push_back(m.to_string());
  }
  std::vector<std::string> outside;
  for (const auto& m : closure) {
    if (!forbidden_pattern(m).allowed) outside.push_back(m.to_string());
  }
  std::vector<std::string> missing;
  for (const auto& m : c.allowed) {
    if (!std::binary_search(closure.begin(), closure.end(), m)) missing.push_back(m.to_string());
  }
  rep.line("size: " + std::to_string(closure.size()));
  rep.line(std::string("equals allowed set: ") + (outside.empty() && missing.empty() ? "yes" : "no"));
  rep.result({{"members", members}, {"size", closure.size()}, {"allowed_size", c.allowed.size()}});
  if (!missing.empty()) {
    // Not a failure: the allowed set from classify-all stays authoritative.
    rep.line("allowed but not generated under the products-in-{0,1,x} convention: " + json(missing).dump());
  }
  if (outside.empty()) return rep.finish("PASS", kExitOk);
  json w = {{"outside_allowed", outside}, {"missing", missing}};
  rep.line(w.dump());
  rep.witness(w);
  return rep.finish("FAIL", kExitPropertyFailure);
}

struct WordsArgs {
  int n = 0;
  int r = 0;
  std::string gamma;
  bool closed = false;
  bool json = false;
};

int cmd_words(const WordsArgs& a, std::ostream& out) {
  json params = {{"n", a.n}, {"r", a.r}, {"closed", a.closed}};
  if (!a.gamma.empty()) params["gamma"] = a.gamma;
  Reporter rep(out, a.json, "words", params);
  const GammaVector gamma = a.gamma.empty() ? GammaVector::zeros(a.r) : GammaVector::parse(a.gamma);
  json words = json::array();
  enumerate_sw_gamma(
      a.n, a.r, gamma, a.closed,
      [&](const Word& w) {
        rep.line(w.to_string());
        words.push_back({{"word", w.to_string()}, {"asc", ascents(w)}});
      },
      budget_from_env());
  rep.result(words);
  return rep.finish("OK", kExitOk);
}

struct RootsArgs {
  std::string poly;
  std::string width;
  bool json = false;
};

int cmd_roots(const RootsArgs& a, std::ostream& out) {
  const Poly f = Poly::parse(a.poly);
  json params = {{"poly", a.poly}};
  if (!a.width.empty()) params["width"] = a.width;
  Reporter rep(out, a.json, "roots", params);
  RootCertificate cert = isolate_roots(f);
  if (!a.width.empty()) cert = refine_certificate(f, cert, parse_rational(a.width));
  const std::string rendered = certificate_to_json(cert);
  rep.line(rendered);
  rep.result(json::parse(rendered));
  return rep.finish("OK", kExitOk);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact real-rootedness, interlacing and edgewise-subdivision toolkit", "interlace"};
  app.require_subcommand(1);

  EdgewiseArgs edge;
  auto* edgewise = app.add_subcommand("edgewise", "Refined ascent polynomials E^i_{r,n} via the recurrence");
  edgewise->add_option("--r", edge.r, "Alphabet size (r >= 2)")->required();
  edgewise->add_option("--n", edge.n, "Word length parameter (n >= 1)")->required();
  edgewise->add_option("--gamma", edge.gamma, "Jump thresholds g0,g1,...");
  edgewise->add_option("--component", edge.component, "Emit only E^i");
  edgewise->add_flag("--verify", edge.verify, "Compare against brute-force enumeration");
  edgewise->add_flag("--json", edge.json, "JSON output");

  FhArgs fh;
  auto* fhcmd = app.add_subcommand("fh", "Convert between f-vectors and h-vectors");
  fhcmd->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  fhcmd->add_option("--f", fh.f, "f-vector f_{-1},f_0,...,f_{d-1}");
  fhcmd->add_option("--h", fh.h, "h-vector h_0,...,h_d");
  fhcmd->add_flag("--json", fh.json, "JSON output");

  CheckArgs chk;
  auto* check = app.add_subcommand("check", "Certify realrooted | interleave | compatible | conditions-ab");
  check->add_option("kind", chk.kind, "Property to check")
      ->required()
      ->check(CLI::IsMember({"realrooted", "interleave", "compatible", "conditions-ab"}));
  check->add_option("polys", chk.polys, "Polynomials as ascending coefficients, e.g. 0,1,1")->required();
  check->add_flag("--unchecked", chk.unchecked, "Skip real-rootedness/sign preconditions for compatibility tests");
  check->add_flag("--json", chk.json, "JSON output");

  MatrixArgs mat;
  auto* matrix = app.add_subcommand("matrix", "{0,1,x} matrices preserving interlacing");
  matrix->require_subcommand(1);
  auto* classify = matrix->add_subcommand("classify-all", "Classify all 81 2x2 matrices two ways");
  auto* mcheck = matrix->add_subcommand("check", "Run the preserves and Ferrers checks on a matrix file");
  mcheck->add_option("file", mat.file, "JSON matrix file")->required();
  auto* mapply = matrix->add_subcommand("apply", "Apply a matrix file to a polynomial sequence");
  mapply->add_option("file", mat.file, "JSON matrix file")->required();
  mapply->add_option("--polys", mat.polys, "Sequence p1;p2;...")->required();
  mapply->add_flag("--verify", mat.verify, "Certify that an F+ input maps into F+");
  auto* closure = matrix->add_subcommand("closure", "Close the seven generators under products");
  for (auto* sub : {classify, mcheck, mapply, closure}) sub->add_flag("--json", mat.json, "JSON output");

  WordsArgs wa;
  auto* words = app.add_subcommand("words", "Enumerate restricted Smirnov words");
  words->add_option("--n", wa.n, "Word length parameter")->required();
  words->add_option("--r", wa.r, "Alphabet size")->required();
  words->add_option("--gamma", wa.gamma, "Jump thresholds g0,g1,...");
  words->add_flag("--closed", wa.closed, "Require the last letter to be 0");
  words->add_flag("--json", wa.json, "JSON output");

  RootsArgs ra;
  auto* roots = app.add_subcommand("roots", "Isolate the real roots of a polynomial");
  roots->add_option("poly", ra.poly, "Ascending coefficients")->required();
  roots->add_option("--width", ra.width, "Refine intervals below this width, e.g. 1/100");
  roots->add_flag("--json", ra.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (edgewise->parsed()) return cmd_edgewise(edge, out);
    if (fhcmd->parsed()) return cmd_fh(fh, out);
    if (check->parsed()) return cmd_check(chk, out);
    if (classify->parsed()) return cmd_classify_all(mat, out);
    if (mcheck->parsed()) return cmd_matrix_check(mat, out);
    if (mapply->parsed()) return cmd_matrix_apply(mat, out);
    if (closure->parsed()) return cmd_closure(mat, out);
    if (words->parsed()) return cmd_words(wa, out);
    if (roots->parsed()) return cmd_roots(ra, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace interlace::cli
