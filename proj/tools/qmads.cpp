/*
   Copyright 2026 The qmads Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmads/qmads.hpp"

namespace {

using namespace qmads;

struct Source {
  std::vector<std::string> builtin;
  std::string rmatrix;
};

struct Options {
  Source src;
  std::string algebra = "re";
  std::string strategy = "exact";
  std::uint64_t seed = 1;
  int trials = 1;
  int order = 3;
  int trunc = 4;
  int k = 1;
  int kmax = 3;
  std::string kind;
  std::string type = "braided";
  std::string v = "symbolic";
  std::string report = "text";
  std::string out;
  bool no_timing = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Braiding<Scalar> load(const Source& s) {
  if (!s.builtin.empty() && !s.rmatrix.empty()) throw UsageError("give either --builtin or --rmatrix, not both");
  if (!s.builtin.empty()) {
    if (s.builtin.size() != 2) throw UsageError("--builtin takes a name and a dimension");
    int n = 0;
    try {
      n = std::stoi(s.builtin[1]);
    } catch (const std::exception&) {
      throw UsageError("bad dimension '" + s.builtin[1] + "'");
    }
    return builtin_braiding(s.builtin[0], n);
  }
  if (!s.rmatrix.empty()) return validate(read_rmatrix_file(s.rmatrix), std::nullopt, s.rmatrix);
  throw UsageError("a braiding is required: --builtin <name> <N> or --rmatrix <file>");
}

AlgebraKind algebra_kind(const std::string& a) {
  if (a == "re") return AlgebraKind::RE;
  if (a == "mre") return AlgebraKind::ModifiedRE;
  if (a == "ugl") return AlgebraKind::UglN;
  if (a == "rtt") return AlgebraKind::RTT;
  throw UsageError("unknown algebra '" + a + "' (re, mre, ugl, rtt)");
}

Strategy strategy(const Options& o) {
  Strategy s;
  if (o.strategy == "exact") s.kind = StrategyKind::exact;
  else if (o.strategy == "random") s.kind = StrategyKind::random;
  else throw UsageError("unknown strategy '" + o.strategy + "' (exact, random)");
  s.seed = o.seed;
  s.trials = o.trials;
  if (s.trials < 1) throw UsageError("--trials must be positive");
  return s;
}

VectorSpec vector_spec(const std::string& v) {
  if (v == "symbolic") return VectorSpec::symbolic_vector();
  std::vector<Rational> vals;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Scalar x = parse_scalar(item);
    if (!x.is_constant()) throw UsageError("entries of --v must be rational numbers");
    vals.push_back(x.constant_value());
  }
  return VectorSpec::explicit_vector(std::move(vals));
}

CurrentKind check_kind(const Braiding<Scalar>& b, const std::string& kind) {
  CurrentKind natural = baxterize(b).g_kind;
  if (kind.empty()) return natural;
  CurrentKind k;
  if (kind == "rational") k = CurrentKind::rational;
  else if (kind == "hecke") k = CurrentKind::hecke;
  else throw UsageError("unknown --kind '" + kind + "' (rational, hecke)");
  if (k != natural)
    throw UsageError(std::string("the ") + to_string(b.kind) + " braiding '" + b.name + "' baxterizes to the " +
                     to_string(natural) + " current R-matrix, not " + kind);
  return k;
}

int emit(const VerificationReport& r, const Options& o) {
  std::string text;
  if (o.report == "json") text = r.to_json(!o.no_timing).dump(2) + "\n";
  else if (o.report == "text") text = r.to_text();
  else throw UsageError("unknown --report '" + o.report + "' (text, json)");
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write '" + o.out + "'");
    f << text;
    std::cout << r.identity << ": " << (r.passed() ? "pass" : "fail") << " (" << r.passed_count() << "/"
              << r.items.size() << "), report written to " << o.out << "\n";
  } else {
    std::cout << text;
  }
  return r.passed() ? 0 : 1;
}

VerificationReport constant_report(const std::string& what, const Options& o) {
  auto kind = algebra_kind(o.algebra);
  Braiding<Scalar> b = kind == AlgebraKind::UglN && o.src.builtin.empty() && o.src.rmatrix.empty()
                           ? throw UsageError("U(gl(N)) needs a dimension: --builtin flip <N>")
                           : load(o.src);
  if (kind == AlgebraKind::UglN && b.kind != SymmetryKind::Involutive)
    throw UsageError("U(gl(N)) is built on the flip; pass --builtin flip <N>");
  auto body = [&](const auto& bk) -> VerificationReport {
    auto a = present(kind, bk);
    if (what == "ch") return verify_ch(a);
    if (what == "centrality") return verify_centrality(a, o.k);
    if (what == "psum-commute") return verify_powersum_commutativity(a, o.kmax);
    if (what == "simplifications") return verify_simplifications(a, o.kmax);
    return verify_similarity_constant(a, vector_spec(o.v));
  };
  return run_strategy(b, strategy(o), body);
}

VerificationReport yangian_report(const std::string& what, const Options& o) {
  auto b = load(o.src);
  check_kind(b, o.kind);
  YangianType type;
  if (o.type == "braided") type = YangianType::braided;
  else if (o.type == "rtt") type = YangianType::rtt;
  else throw UsageError("unknown --type '" + o.type + "' (braided, rtt)");
  if (type == YangianType::rtt) throw UsageError("the characteristic identities are stated for braided Yangians");
  if (o.order > o.trunc) throw InsufficientTruncation("--order must not exceed --trunc");
  auto body = [&](const auto& bk) -> VerificationReport {
    auto p = current_relations(baxterize(bk), type, o.trunc);
    if (what == "ch-yangian") return verify_ch_yangian(p, o.order, o.trunc);
    return verify_similarity_yangian(p, vector_spec(o.v), o.order, o.trunc);
  };
  return run_strategy(b, strategy(o), body);
}

std::string diag_str(const TensorOperator<Scalar>& D) {
  std::string s;
  for (Index i = 0; i < D.dim(); ++i)
    for (Index j = 0; j < D.dim(); ++j)
      if (!D.get(i, j).is_zero())
        s += "  D[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] = " + D.get(i, j).str() + "\n";
  return s;
}

int rmat_check(const Options& o) {
  VerificationReport r;
  r.identity = "braiding validation";
  r.anchor = "braid relation, symmetry type, skew-invertibility, bi-rank (m|0)";
  r.algebra = "-";
  Stopwatch sw;
  auto item = [&](std::string id, bool ok, std::string detail) {
    ReportItem it;
    it.id = std::move(id);
    it.verdict = ok ? Verdict::Zero : Verdict::NonZero;
    it.strategy = "exact";
    it.detail = std::move(detail);
    it.elapsed_ms = sw.ms();
    r.items.push_back(it);
  };
  try {
    auto b = load(o.src);
    r.braiding = b.name;
    item("QYBE residual", true, "");
    item(std::string("symmetry type ") + to_string(b.kind), true, b.kind == SymmetryKind::Hecke ? "q = " + b.q.str() : "");
    item("skew-inverse", true, "");
    item("bi-rank (" + std::to_string(b.birank_m) + "|0)", true, "");
  } catch (const NotYangBaxter& e) {
    item("QYBE residual", false, e.what());
  } catch (const NotSymmetry& e) {
    item("symmetry type", false, e.what());
  } catch (const NotSkewInvertible& e) {
    item("skew-inverse", false, e.what());
  } catch (const BirankError& e) {
    item("bi-rank", false, e.what());
  }
  if (r.braiding.empty()) r.braiding = !o.src.rmatrix.empty() ? o.src.rmatrix : "input";
  return emit(r, o);
}

int rmat_info(const Options& o, bool skew) {
  auto b = load(o.src);
  if (skew) {
    std::cout << write_rmatrix(b.psi);
    std::cout << "# D = Tr_(2) psi\n" << diag_str(b.D);
    return 0;
  }
  auto c = baxterize(b);
  std::cout << "braiding: " << b.name << "\n"
            << "dimension: " << b.n << "\n"
            << "symmetry: " << to_string(b.kind) << (b.kind == SymmetryKind::Hecke ? " (q = " + b.q.str() + ")" : "")
            << "\n"
            << "bi-rank: (" << b.birank_m << "|0)\n"
            << "current R-matrix: R(u,v) = R - g(u,v) I, " << c.g_formula() << "\n"
            << "trace matrix:\n"
            << diag_str(b.D) << "R-matrix:\n"
            << write_rmatrix(b.R);
  return 0;
}

void add_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--builtin", o.src.builtin, "built-in braiding: flip <N> or uq-gl <N>")->expected(2);
  cmd->add_option("--rmatrix", o.src.rmatrix, "R-matrix file");
}

void add_output(CLI::App* cmd, Options& o) {
  cmd->add_option("--report", o.report, "text or json");
  cmd->add_option("--out", o.out, "write the report to a file");
  cmd->add_flag("--no-timing", o.no_timing, "omit timings from JSON reports");
}

void add_strategy(CLI::App* cmd, Options& o) {
  cmd->add_option("--strategy", o.strategy, "exact (over Q(q)) or random (seeded F_p specializations)");
  cmd->add_option("--seed", o.seed, "seed of the first random trial");
  cmd->add_option("--trials", o.trials, "number of random trials");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qmads: quantum matrix algebras and their characteristic identities"};
  app.set_version_flag("--version", std::string(qmads::kToolVersion));
  app.require_subcommand(1);
  Options o;

  auto* rmat = app.add_subcommand("rmat", "inspect and validate R-matrices");
  rmat->require_subcommand(1);
  auto* rcheck = rmat->add_subcommand("check", "braid relation, symmetry type, skew-invertibility and bi-rank");
  auto* rskew = rmat->add_subcommand("skew-inverse", "print the skew-inverse and the trace matrix D");
  auto* rinfo = rmat->add_subcommand("info", "summary of a braiding");
  for (auto* c : {rcheck, rskew, rinfo}) add_source(c, o);
  add_output(rcheck, o);

  auto* verify = app.add_subcommand("verify", "verify identities");
  verify->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> constant, yangian;
  for (const char* n : {"ch", "centrality", "psum-commute", "simplifications", "ds"})
    constant.emplace_back(n, verify->add_subcommand(n));
  for (const char* n : {"ch-yangian", "ds-yangian"}) yangian.emplace_back(n, verify->add_subcommand(n));
  constant[0].second->description("characteristic identity of the generating matrix");
  constant[1].second->description("[e_k, x_i^j] lies in the ideal (RE)");
  constant[2].second->description("[p_j, p_k] lies in the ideal (RE, RTT)");
  constant[3].second->description("p_k = Tr_R X^k and X^[k] = X^k (RE), or their failure (RTT)");
  constant[4].second->description("companion-form similarity C X = X_can C");
  yangian[0].second->description("Yangian characteristic identity, coefficientwise");
  yangian[1].second->description("Yangian companion-form similarity, coefficientwise");
  for (auto& [n, c] : constant) {
    add_source(c, o);
    add_output(c, o);
    add_strategy(c, o);
    c->add_option("--algebra", o.algebra, "re, mre, ugl or rtt");
    if (n == "centrality") c->add_option("--k", o.k, "index of e_k");
    if (n == "psum-commute" || n == "simplifications") c->add_option("--kmax", o.kmax, "largest k");
    if (n == "ds") c->add_option("--v", o.v, "symbolic or a comma-separated rational vector");
  }
  for (auto& [n, c] : yangian) {
    add_source(c, o);
    add_output(c, o);
    add_strategy(c, o);
    c->add_option("--kind", o.kind, "rational or hecke (must match the braiding)");
    c->add_option("--type", o.type, "braided (default) or rtt");
    c->add_option("--order", o.order, "largest checked order of u^-1");
    c->add_option("--trunc", o.trunc, "truncation order D of the series");
    if (n == "ds-yangian") c->add_option("--v", o.v, "symbolic or a comma-separated rational vector");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rcheck->parsed()) return rmat_check(o);
    if (rskew->parsed()) return rmat_info(o, true);
    if (rinfo->parsed()) return rmat_info(o, false);
    for (auto& [n, c] : constant)
      if (c->parsed()) return emit(constant_report(n, o), o);
    for (auto& [n, c] : yangian)
      if (c->parsed()) return emit(yangian_report(n, o), o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const qmads::ResourceError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const qmads::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
