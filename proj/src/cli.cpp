#include "qaff/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "qaff/convolution.hpp"
#include "qaff/drinfeld.hpp"
#include "qaff/errors.hpp"
#include "qaff/flagcomb.hpp"
#include "qaff/polyrep.hpp"
#include "qaff/symmetrize.hpp"

namespace qaff {

namespace {

using json = nlohmann::json;

struct Options {
  // verify
  int n = 2, d = 1, window = 2, samples = 8;
  std::uint64_t seed = 42;
  std::string relations = "abcdefghij";
  // matrices and polynomials
  std::string a, b, c, f = "1", g = "1";
  std::string v;
  int side = 1, ga = 1, gb = 1, index = 0;
  // drinfeld
  std::string lambda, alpha, t = "2";
  // qid
  int max_m = 10;
  std::string eval_at;
  // output
  std::string out_path, format = "json";
};

IntMatrix parse_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError("matrix '" + text + "': " + e.what());
  }
  if (!j.is_array()) throw ParseError("matrix must be a JSON array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError("matrix rows must be arrays");
    std::vector<int> row;
    for (const auto& x : r) {
      if (!x.is_number_integer() || x.get<long>() < 0)
        throw ParseError("matrix entries must be non-negative integers");
      row.push_back(x.get<int>());
    }
    rows.push_back(row);
  }
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw ParseError("matrix must be square");
  return IntMatrix::from_rows(rows);
}

json matrix_json(const IntMatrix& m) { return json(m.rows()); }

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

json class_json(const GradedClass& c) {
  return {{"matrix", matrix_json(c.matrix)}, {"polynomial", c.value.to_string()}};
}

json report_json(const Report& r) {
  json fails = json::array();
  for (const auto& f : r.failures)
    fails.push_back({{"v", f.v},
                     {"indices", f.indices},
                     {"modes", f.modes},
                     {"sample", f.sample},
                     {"lhs", f.lhs},
                     {"rhs", f.rhs}});
  return {{"relation", std::string(1, r.relation)},
          {"n", r.n},
          {"d", r.d},
          {"window", r.window},
          {"samples", r.samples},
          {"seed", r.seed},
          {"checks", r.checks},
          {"passed", r.passed()},
          {"failures", fails}};
}

// Human-readable rendering: one "key: value" line per top-level entry, and a
// table for verification reports.
std::string to_text(const json& j) {
  std::ostringstream os;
  if (j.value("command", "") == "verify") {
    os << "relation  n  d  window  samples  checks  failures  status\n";
    for (const auto& r : j["reports"]) {
      char line[128];
      std::snprintf(line, sizeof line, "%-8s  %d  %d  %6d  %7d  %6ld  %8zu  %s\n",
                    r["relation"].get<std::string>().c_str(), r["n"].get<int>(),
                    r["d"].get<int>(), r["window"].get<int>(), r["samples"].get<int>(),
                    r["checks"].get<long>(), r["failures"].size(),
                    r["passed"].get<bool>() ? "pass" : "FAIL");
      os << line;
      const std::size_t shown = std::min<std::size_t>(r["failures"].size(), 5);
      for (std::size_t k = 0; k < shown; ++k) os << "  witness: " << r["failures"][k].dump() << "\n";
      if (shown < r["failures"].size())
        os << "  ... " << r["failures"].size() - shown << " more in the JSON report\n";
    }
    return os.str();
  }
  for (const auto& [k, v] : j.items()) {
    os << k << ": ";
    if (v.is_string())
      os << v.get<std::string>();
    else
      os << v.dump();
    os << "\n";
  }
  return os.str();
}

struct Outcome {
  json body;
  bool passed = true;
};

Outcome do_verify(const Options& o) {
  json reports = json::array();
  bool ok = true;
  for (char rel : o.relations) {
    if (rel == ',') continue;
    const Report r = verify_relation(rel, o.n, o.d, o.window, o.samples, o.seed);
    ok = ok && r.passed();
    reports.push_back(report_json(r));
  }
  return {{{"command", "verify"}, {"passed", ok}, {"reports", reports}}, ok};
}

Outcome do_compose(const Options& o) {
  const IntMatrix a = parse_matrix(o.a), b = parse_matrix(o.b);
  return {{{"command", "compose"},
           {"a", matrix_json(a)},
           {"b", matrix_json(b)},
           {"result", matrix_json(compose(a, b))}}};
}

Outcome do_decompose(const Options& o) {
  const IntMatrix c = parse_matrix(o.c);
  json steps = json::array(), factors = json::array();
  for (const auto& s : decomposition_steps(c))
    steps.push_back({{"c", matrix_json(s.c)}, {"a", matrix_json(s.a)}, {"b", matrix_json(s.b)},
                     {"length", length(s.c)}});
  const auto fs = generator_decomposition(c);
  for (const auto& m : fs) factors.push_back(matrix_json(m));
  const bool ok = recompose(fs) == c;
  return {{{"command", "decompose"},
           {"matrix", matrix_json(c)},
           {"steps", steps},
           {"factors", factors},
           {"recomposes", ok}},
          ok};
}

Outcome do_star(const std::string& kind, const Options& o) {
  GradedClass r;
  if (kind == "diag") {
    const IntMatrix b = parse_matrix(o.b);
    const int d = b.total();
    r = star_diag(LaurentPoly::parse(o.f, d), b.row_sums(),
                  GradedClass::make(b, LaurentPoly::parse(o.g, d)));
  } else if (kind == "elem") {
    const IntMatrix a = parse_matrix(o.a), b = parse_matrix(o.b);
    r = star_elem(GradedClass::make(a, LaurentPoly::parse(o.f, a.total())),
                  GradedClass::make(b, LaurentPoly::parse(o.g, b.total())));
  } else {
    const Composition v = parse_ints(o.v);
    const int d = total(v) + o.ga + o.gb;
    r = star_grassmann(LaurentPoly::parse(o.f, d), o.ga, LaurentPoly::parse(o.g, d), o.gb, v,
                       o.index);
  }
  return {{{"command", "star " + kind}, {"result", class_json(r)}}};
}

Outcome do_pushforward(const Options& o) {
  const IntMatrix a = parse_matrix(o.a);
  const GradedClass f = GradedClass::make(a, LaurentPoly::parse(o.f, a.total()));
  return {{{"command", "pushforward"},
           {"input", class_json(f)},
           {"side", o.side},
           {"result", pushforward(f, o.side).to_string()}}};
}

JordanData jordan(const Options& o) {
  JordanData j{parse_ints(o.lambda), o.n};
  j.validate();
  return j;
}

Outcome do_drinfeld(const Options& o) {
  const JordanData j = jordan(o);
  const SemisimpleParam s{parse_rationals(o.alpha), parse_rational(o.t)};
  json polys = json::array();
  for (const UPoly& p : drinfeld_polys(j, s)) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    polys.push_back(coeffs);
  }
  json body{{"command", "drinfeld"},
            {"lambda", j.lambda},
            {"n", j.n},
            {"t", s.t.get_str()},
            {"dual", dual_partition(j)},
            {"polys", polys},
            {"semisimple", json::array()}};
  for (const auto& x : build_semisimple(j, s)) body["semisimple"].push_back(x.get_str());
  bool below = true;
  for (int part : j.lambda) below = below && part < j.n;
  if (below) {
    json fs = json::array();
    for (const auto& f : fundamental_factors(j, s))
      fs.push_back({{"omega", f.omega}, {"param", f.param.get_str()}});
    body["factors"] = fs;
  }
  return {body};
}

Outcome do_dual(const Options& o) {
  const JordanData j = jordan(o);
  return {{{"command", "dual"}, {"lambda", j.lambda}, {"n", j.n}, {"dual", dual_partition(j)}}};
}

Outcome do_qid(const Options& o) {
  if (o.max_m < 1) throw PreconditionError("--m must be positive");
  json rows = json::array();
  bool ok = true;
  for (int m = 1; m <= o.max_m; ++m) {
    const QRat lhs = qint(m + 1) + qint(m - 1), rhs = qint(2) * qint(m);
    json row{{"m", m}, {"qint", qint(m).to_string()}, {"identity", lhs == rhs}};
    ok = ok && lhs == rhs;
    if (m <= 5) {
      // Sum over h of Theta_{J - h}(q x_h) for |J| = m.
      std::vector<int> rest;
      SegPartition i{m, {{0}, {}}}, j{m, {{}}};
      for (int k = 0; k < m; ++k) {
        j.pieces[0].push_back(k);
        if (k) rest.push_back(k);
      }
      i.pieces[1] = rest;
      const LaurentPoly s = symmetrize(theta_product(m, rest, qx(0, 1)), i, j).to_poly();
      const bool theta_ok = s == LaurentPoly::constant(m, qint(m));
      row["theta_sum"] = theta_ok;
      ok = ok && theta_ok;
    }
    if (!o.eval_at.empty()) row["value"] = eval_q(qint(m), parse_rational(o.eval_at)).get_str();
    rows.push_back(row);
  }
  return {{{"command", "qid"}, {"passed", ok}, {"rows", rows}}, ok};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quantum affine gl(n): polynomial representation, convolution and Drinfeld data"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out_path, "write the report to this file");
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "check relations (a)-(j) mode by mode");
  verify->add_option("--n", o.n)->required();
  verify->add_option("--d", o.d)->required();
  verify->add_option("--relations", o.relations, "letters, e.g. a,e,f");
  verify->add_option("--window", o.window);
  verify->add_option("--samples", o.samples);
  verify->add_option("--seed", o.seed);

  auto* comp = app.add_subcommand("compose", "generic composition A o B");
  comp->add_option("--a", o.a)->required();
  comp->add_option("--b", o.b)->required();

  auto* dec = app.add_subcommand("decompose", "elementary factors of a matrix");
  dec->add_option("--c", o.c)->required();

  auto* star = app.add_subcommand("star", "product on the associated graded");
  star->require_subcommand(1);
  auto* sdiag = star->add_subcommand("diag", "diagonal left factor");
  sdiag->add_option("--f", o.f);
  sdiag->add_option("--b", o.b)->required();
  sdiag->add_option("--g", o.g);
  auto* selem = star->add_subcommand("elem", "elementary left factor");
  selem->add_option("--a", o.a)->required();
  selem->add_option("--f", o.f);
  selem->add_option("--b", o.b)->required();
  selem->add_option("--g", o.g);
  auto* sgr = star->add_subcommand("grassmann", "Grassmannian product");
  sgr->add_option("--f", o.f);
  sgr->add_option("--a", o.ga)->required();
  sgr->add_option("--g", o.g);
  sgr->add_option("--b", o.gb)->required();
  sgr->add_option("--v", o.v)->required();
  sgr->add_option("--i", o.index, "0-based");

  auto* push = app.add_subcommand("pushforward", "direct image along a projection");
  push->add_option("--a", o.a)->required();
  push->add_option("--f", o.f);
  push->add_option("--side", o.side)->check(CLI::Range(1, 2));

  auto* dr = app.add_subcommand("drinfeld", "Drinfeld polynomials of (lambda, alpha, t)");
  dr->add_option("--lambda", o.lambda)->required();
  dr->add_option("--n", o.n)->required();
  dr->add_option("--alpha", o.alpha)->required();
  dr->add_option("--t", o.t);

  auto* du = app.add_subcommand("dual", "dual partition");
  du->add_option("--lambda", o.lambda)->required();
  du->add_option("--n", o.n)->required();

  auto* qid = app.add_subcommand("qid", "quantum integer identities");
  qid->add_option("--m", o.max_m);
  qid->add_option("--t", o.eval_at, "specialize q");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  Outcome res;
  try {
    if (verify->parsed())
      res = do_verify(o);
    else if (comp->parsed())
      res = do_compose(o);
    else if (dec->parsed())
      res = do_decompose(o);
    else if (sdiag->parsed())
      res = do_star("diag", o);
    else if (selem->parsed())
      res = do_star("elem", o);
    else if (sgr->parsed())
      res = do_star("grassmann", o);
    else if (push->parsed())
      res = do_pushforward(o);
    else if (dr->parsed())
      res = do_drinfeld(o);
    else if (du->parsed())
      res = do_dual(o);
    else
      res = do_qid(o);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const AlgebraError& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  }

  const std::string text = o.format == "json" ? res.body.dump(2) + "\n" : to_text(res.body);
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.out_path << "\n";
      return 2;
    }
    file << text;
  }
  return res.passed ? 0 : 1;
}

}  // namespace qaff
