#include "eamod/cli/app.hpp"

#include <chrono>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eamod/cli/suites.hpp"
#include "eamod/eamod.hpp"

namespace eamod::cli {

namespace {

struct Options {
  std::string kind;
  std::string module;
  std::vector<std::string> inputs;
  std::optional<unsigned> p;
  std::optional<unsigned> k;
  std::optional<unsigned> r;
  std::optional<unsigned> ext;
  std::optional<unsigned> trials;
  std::optional<std::uint64_t> seed;
  std::string lambda = "0";
  std::string mu = "1";
  std::string span;
  std::string embed;
  std::string alpha;
  std::string poly;
  std::string model = "block";
  std::string out;
  std::string format = "json";
  std::string suite;
  bool compare = false;
  bool summands = false;
};

unsigned need(const std::optional<unsigned>& v, const char* flag) {
  if (!v) fail(ErrorCode::BadParams, std::string("missing ") + flag);
  return *v;
}

std::vector<std::string_view> split(std::string_view text, char sep, std::vector<std::size_t>& starts) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = text.find(sep, start);
    const std::size_t end = at == std::string_view::npos ? text.size() : at;
    parts.push_back(text.substr(start, end - start));
    starts.push_back(start);
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

// Semicolon-separated rows of comma-separated field elements.
std::vector<std::vector<Fel>> parse_rows(const FieldCtx& f, const std::string& text) {
  std::vector<std::vector<Fel>> rows;
  if (text.empty()) return rows;
  std::vector<std::size_t> starts;
  const auto parts = split(text, ';', starts);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    try {
      rows.push_back(parse_point(f, parts[i]).coords);
    } catch (const ParseError& e) {
      throw ParseError(starts[i] + e.position(), e.reason());
    }
  }
  return rows;
}

std::vector<std::vector<std::uint64_t>> parse_int_rows(unsigned p, const std::string& text) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& row : parse_rows(FieldCtx::create(p, 1), text)) {
    std::vector<std::uint64_t> v;
    for (Fel c : row) v.push_back(c.code());
    out.push_back(std::move(v));
  }
  return out;
}

FieldCtx build_field(const Options& o) { return FieldCtx::create(need(o.p, "--p"), o.ext.value_or(1)); }

EAModule input(const Options& o, std::size_t i) {
  if (o.inputs.size() <= i) fail(ErrorCode::BadParams, "missing --in module file");
  return read_module_file(o.inputs[i]);
}

EAModule build_module(const Options& o) {
  const std::string& kind = o.kind;
  if (kind == "d1" || kind == "dr") {
    const SymContext ctx(need(o.p, "--p"), need(o.k, "--k"));
    const FieldCtx f = build_field(o);
    if (kind == "dr") return d_r(ctx, f, need(o.r, "-r"));
    if (o.model == "perm") return perm_model_d1(ctx, f);
    if (o.model != "block") fail(ErrorCode::BadParams, "--model must be block or perm");
    return block_model_d1(ctx, f);
  }
  if (kind == "benson") {
    const FieldCtx f = build_field(o);
    return benson_module(f, f.parse(o.lambda), f.parse(o.mu));
  }
  if (kind == "regular") return regular_module(build_field(o), need(o.k, "--k"));
  if (kind == "linear") {
    const FieldCtx f = build_field(o);
    return linear_variety_module(f, need(o.k, "--k"), parse_rows(f, o.span));
  }
  if (kind == "induce" || kind == "restrict") {
    const EAModule m = input(o, 0);
    const auto rows = parse_int_rows(m.p(), o.embed);
    if (kind == "restrict") return restrict_to_subgroup(m, rows);
    return induce(m, rows, need(o.k, "--k"));
  }
  if (kind == "sum" || kind == "tensor") {
    if (o.inputs.size() < 2) fail(ErrorCode::BadParams, kind + " needs at least two --in files");
    EAModule acc = input(o, 0);
    for (std::size_t i = 1; i < o.inputs.size(); ++i) {
      acc = kind == "sum" ? direct_sum(acc, input(o, i)) : tensor(acc, input(o, i));
    }
    return acc;
  }
  if (kind == "wedge") return wedge(input(o, 0), need(o.r, "-r"));
  if (kind == "dual") return dual(input(o, 0));
  fail(ErrorCode::BadParams, "unknown module kind '" + kind + "'");
}

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// Flat objects become a header plus one row; arrays of objects one row each.
std::string json_to_csv(const Json& j) {
  const Json rows = j.is_array() ? j : Json::array({j});
  std::string s;
  if (rows.empty()) return s;
  bool first = true;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
    s += (first ? "" : ",") + it.key();
    first = false;
  }
  s += "\n";
  for (const auto& row : rows) {
    first = true;
    for (auto it = row.begin(); it != row.end(); ++it) {
      s += (first ? "" : ",") + csv_cell(it.value());
      first = false;
    }
    s += "\n";
  }
  return s;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  void emit(const std::string& text) {
    if (o_.out.empty()) {
      out_ << text;
    } else {
      write_text_file(o_.out, text);
    }
  }

  void emit(const Json& j) { emit(o_.format == "csv" ? json_to_csv(j) : dump(j)); }

  int build() {
    const EAModule m = build_module(o_);
    validate(m);
    emit(dump(module_to_json(m)));
    err_ << "built " << o_.kind << ": dim " << m.dim() << ", k " << m.k() << ", field F_" << m.field().order()
         << ", valid\n";
    return 0;
  }

  FieldCtx query_field(const EAModule& m) const {
    if (!o_.ext) return m.field();
    return FieldCtx::create(m.p(), *o_.ext);
  }

  int jordan() {
    const EAModule m = read_module_file(o_.module);
    if (o_.alpha.empty()) fail(ErrorCode::BadParams, "missing --alpha");
    const FieldCtx f = query_field(m);
    const EAModule mx = extend_field(m, f);
    const Point a = parse_point(f, o_.alpha);
    if (a.coords.size() != m.k()) fail(ErrorCode::DimensionMismatch, "--alpha needs k coordinates");
    const JordanType t = point_jordan_type(mx, a);
    Json j;
    j["alpha"] = format_point(f, a);
    j["field_order"] = f.order();
    j["type"] = t.label();
    j["free"] = t.is_free();
    emit(j);
    return 0;
  }

  int generic() {
    const EAModule m = read_module_file(o_.module);
    const unsigned ext = o_.ext.value_or(m.field().is_prime_field() ? 4 : m.field().m());
    const GenericResult g = generic_type(m, ext, o_.trials.value_or(24), o_.seed.value_or(7));
    Json j;
    j["type"] = g.inconclusive ? std::string("Inconclusive") : g.type.label();
    j["attained"] = g.attained;
    j["samples"] = g.samples;
    j["ext_degree"] = g.ext_degree;
    j["observed"] = g.observed.size();
    emit(j);
    return 0;
  }

  int variety() {
    const EAModule m = read_module_file(o_.module);
    const FieldCtx f = query_field(m);
    PointSetReport r = variety_points(m, f);
    if (!o_.poly.empty()) {
      if (o_.poly != "pk") fail(ErrorCode::BadParams, "--poly supports only pk");
      r.target = "pk";
      if (o_.compare) r.comparison = compare_sets(r, zero_points(PkPoly{m.p(), m.k()}, f));
    } else if (o_.compare) {
      fail(ErrorCode::BadParams, "--compare needs --poly");
    }
    emit(o_.format == "csv" ? report_to_csv(r) : dump(report_to_json(r)));
    return 0;
  }

  int projective() {
    const EAModule m = read_module_file(o_.module);
    const ProjectiveResult r = projective_test(m);
    Json j;
    j["dim"] = m.dim();
    j["is_projective"] = r.is_projective;
    j["free_summands"] = r.free_summands;
    emit(j);
    return 0;
  }

  int decompose() {
    const EAModule m = read_module_file(o_.module);
    const FieldCtx f = query_field(m);
    const unsigned trials = o_.trials.value_or(60);
    const Decomposition d = fitting_decompose(extend_field(m, f), trials, o_.seed.value_or(7));
    Json j;
    j["status"] = decompose_status_name(d.status, trials);
    j["trials"] = trials;
    Json parts = Json::array();
    for (const auto& s : d.summands) {
      Json pj;
      pj["dim"] = s.dim();
      pj["projective"] = projective_test(s).is_projective;
      if (o_.summands) pj["module"] = module_to_json(s);
      parts.push_back(std::move(pj));
    }
    if (o_.format == "csv") {
      emit(json_to_csv(parts));
      return 0;
    }
    j["summands"] = std::move(parts);
    emit(dump(j));
    return 0;
  }

  int green() {
    const EAModule m = read_module_file(o_.module);
    const FieldCtx f = query_field(m);
    const auto w = green_witness(m, f);
    Json j;
    j["field_order"] = f.order();
    j["witness"] = w ? format_point(f, *w) : std::string("None");
    emit(j);
    return 0;
  }

  int verify() {
    SuiteOptions so{o_.p, o_.k, o_.ext, o_.seed, o_.trials};
    std::vector<std::string> names;
    if (o_.suite == "all") {
      names = suite_names();
    } else {
      names = {o_.suite};
    }
    std::vector<SuiteReport> reports;
    bool ok = true;
    for (const auto& n : names) {
      const auto t0 = std::chrono::steady_clock::now();
      reports.push_back(run_suite(n, so));
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3f", dt.count());
      err_ << n << ": " << (reports.back().passed() ? "pass" : "FAIL") << " in " << buf << " s\n";
      ok = ok && reports.back().passed();
    }
    if (o_.format == "csv") {
      Json rows = Json::array();
      for (const auto& r : reports) {
        for (const auto& c : r.checks) {
          Json row;
          row["suite"] = r.suite;
          row["id"] = c.id;
          row["paper_anchor"] = c.anchor;
          row["expected"] = c.expected;
          row["actual"] = c.actual;
          row["pass"] = c.pass;
          rows.push_back(std::move(row));
        }
      }
      emit(json_to_csv(rows));
    } else if (reports.size() == 1) {
      emit(dump(suite_to_json(reports[0])));
    } else {
      Json j;
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(suite_to_json(r));
      j["suites"] = std::move(arr);
      j["passed"] = ok;
      emit(dump(j));
    }
    return ok ? 0 : 1;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

void add_query_flags(CLI::App* sub, Options& o) {
  sub->add_option("module", o.module, "eamod-v1 module file")->required();
  sub->add_option("--ext", o.ext, "work over F_{p^m}");
  sub->add_option("--out", o.out, "write the report to a file");
  sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Modules over elementary abelian p-groups: Jordan types and rank varieties"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "construct a module and write it as eamod-v1 JSON");
  build->add_option("kind", o.kind, "d1, dr, benson, linear, induce, restrict, sum, tensor, wedge, dual, regular")
      ->required();
  build->add_option("--p", o.p, "prime");
  build->add_option("--k", o.k, "rank of E");
  build->add_option("-r", o.r, "exterior power or D(r) index");
  build->add_option("--ext", o.ext, "build over F_{p^m}");
  build->add_option("--lambda", o.lambda, "benson: lambda");
  build->add_option("--mu", o.mu, "benson: mu");
  build->add_option("--span", o.span, "linear: basis rows, e.g. \"1,w;0,1\"");
  build->add_option("--embed", o.embed, "induce/restrict: subgroup generators as rows over F_p");
  build->add_option("--model", o.model, "d1: block or perm");
  build->add_option("--in", o.inputs, "input module files");
  build->add_option("--out", o.out, "output file (default stdout)");

  auto* jordan = app.add_subcommand("jordan", "Jordan type of the restriction to u_alpha");
  add_query_flags(jordan, o);
  jordan->add_option("--alpha", o.alpha, "point, e.g. \"1,1,w\"")->required();

  auto* generic = app.add_subcommand("generic", "generic Jordan type by sampling");
  add_query_flags(generic, o);
  generic->add_option("--trials", o.trials, "number of samples");
  generic->add_option("--seed", o.seed, "random seed");

  auto* variety = app.add_subcommand("variety", "sweep all projective points");
  add_query_flags(variety, o);
  variety->add_option("--poly", o.poly, "target hypersurface (pk)");
  variety->add_flag("--compare", o.compare, "compare the variety with the target");

  auto* projective = app.add_subcommand("projective", "projectivity and free summand count");
  add_query_flags(projective, o);

  auto* decompose = app.add_subcommand("decompose", "randomized Fitting decomposition");
  add_query_flags(decompose, o);
  decompose->add_option("--trials", o.trials, "endomorphism draws per summand");
  decompose->add_option("--seed", o.seed, "random seed");
  decompose->add_flag("--summands", o.summands, "include summand modules in the report");

  auto* green = app.add_subcommand("green", "variety point off every base subspace");
  add_query_flags(green, o);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> allowed = suite_names();
  allowed.push_back("all");
  verify->add_option("--suite", o.suite, "suite name or all")->required()->check(CLI::IsMember(allowed));
  verify->add_option("--p", o.p, "prime");
  verify->add_option("--k", o.k, "rank");
  verify->add_option("--ext", o.ext, "extension degree");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--trials", o.trials, "trials");
  verify->add_option("--out", o.out, "write the report to a file");
  verify->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Runner runner(o, out, err);
  int code = 0;
  try {
    if (*build) code = runner.build();
    if (*jordan) code = runner.jordan();
    if (*generic) code = runner.generic();
    if (*variety) code = runner.variety();
    if (*projective) code = runner.projective();
    if (*decompose) code = runner.decompose();
    if (*green) code = runner.green();
    if (*verify) code = runner.verify();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BadParams || e.code() == ErrorCode::ParseFailure ? 2 : 1;
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", dt.count());
  err << "wall time " << buf << " s\n";
  return code;
}

}  // namespace eamod::cli
