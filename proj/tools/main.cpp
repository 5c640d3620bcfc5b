// subspace-bounds: upper bounds on subspace codes from the command line.

#include "subspace_bounds/grassmann.hpp"
#include "subspace_bounds/lp_text.hpp"
#include "subspace_bounds/projective_lp.hpp"
#include "subspace_bounds/projective_sdp.hpp"
#include "subspace_bounds/report.hpp"
#include "subspace_bounds/sdpa_io.hpp"
#include "subspace_bounds/tables.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace subspace_bounds;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

struct Failure {
  int code;
  std::string message;
};

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string text_report(const BoundReport& r) {
  std::ostringstream out;
  out << "method   " << r.method << "\n";
  out << "params   q=" << r.q << " n=" << r.n;
  if (r.k) out << " k=" << *r.k;
  out << " d=" << r.d;
  if (r.metric) out << " metric=" << metric_name(*r.metric);
  out << "\n";
  out << "value    " << (r.raw_exact.empty() ? decimal_string(r.raw_value) : r.raw_exact) << "\n";
  out << "bound    " << (r.floored ? to_string(*r.floored) : std::string("-")) << "\n";
  out << "status   " << r.status << "\n";
  if (!r.cuts_applied.empty()) {
    out << "cuts    ";
    for (const auto& c : r.cuts_applied) out << " " << c;
    out << "\n";
  }
  return out.str();
}

void emit(const std::vector<BoundReport>& reports, const std::string& format, bool timing) {
  if (format == "json") {
    std::cout << (reports.size() == 1 ? report_json(reports.front(), timing) : reports_json(reports, timing))
              << "\n";
    return;
  }
  for (std::size_t i = 0; i < reports.size(); ++i) std::cout << (i ? "\n" : "") << text_report(reports[i]);
}

struct GrassmannArgs {
  int q = 2, n = 0, k = 0, delta = 1;
  std::string method = "combined";
  std::string format = "text";
  bool timing = false;
};

int run_grassmann(const GrassmannArgs& a) {
  const GrassmannParams p{a.n, a.k, a.delta, FieldOrder(a.q)};
  p.validate();
  std::vector<GrassmannMethod> methods;
  if (a.method == "all")
    methods = all_grassmann_methods();
  else
    methods = {parse_grassmann_method(a.method)};
  std::vector<BoundReport> reports;
  auto to_report = [&](const GrassmannBoundReport& g, double ms) {
    BoundReport r;
    r.q = a.q;
    r.n = a.n;
    r.k = a.k;
    r.d = 2 * a.delta;
    r.method = std::string(method_name(g.method));
    if (g.attained_by) r.method += ":" + std::string(method_name(*g.attained_by));
    if (g.applicable) {
      r.raw_exact = to_string(g.value);
      r.raw_value = to_double(g.value);
      r.floored = g.floored;
      r.status = "ok";
    } else {
      r.status = "not_applicable";
    }
    r.wall_ms = ms;
    return r;
  };
  for (auto m : methods) {
    const auto start = std::chrono::steady_clock::now();
    const auto g = grassmann_bound(p, m);
    reports.push_back(to_report(g, ms_since(start)));
  }
  if (methods.size() > 1) {
    const auto start = std::chrono::steady_clock::now();
    reports.push_back(to_report(best_grassmann_bound(p, methods), ms_since(start)));
  }
  emit(reports, a.format, a.timing);
  return 0;
}

struct ProjectiveArgs {
  int q = 2, n = 0, d = 1;
  std::string metric = "subspace";
  std::string method = "ev-lp";
  bool extra_cuts = false;
  bool no_dim_cuts = false;
  bool packing_rows = false;
  double tol = 1e-8;
  std::string precision = "quad";
  std::string format = "text";
  bool timing = false;
  bool verbose = false;
};

int run_projective(const ProjectiveArgs& a) {
  const ProjectiveParams p{a.n, a.d, FieldOrder(a.q), parse_metric(a.metric)};
  p.validate();
  BoundReport r;
  r.q = a.q;
  r.n = a.n;
  r.d = a.d;
  r.metric = p.metric;
  r.method = a.method;
  const auto start = std::chrono::steady_clock::now();
  if (a.method == "ev-lp" || a.method == "ev-ip") {
    const auto model = ev_model(p);
    const CutSet cuts = a.extra_cuts ? theorem51_cuts(p) : CutSet{};
    const auto res = solve_ev(model, cuts, a.method == "ev-lp" ? EvMode::real : EvMode::integer);
    r.raw_exact = to_string(res.value);
    r.raw_value = to_double(res.value);
    r.floored = res.floored;
    r.status = "optimal";
    r.iterations = static_cast<int>(res.work);
    for (const auto& row : model.rows) r.cuts_applied.push_back(row.tag);
    r.cuts_applied.erase(std::unique(r.cuts_applied.begin(), r.cuts_applied.end()), r.cuts_applied.end());
    for (const auto& t : cuts.tags()) r.cuts_applied.push_back(t);
  } else if (a.method == "sdp") {
    SdpModelOptions mo;
    mo.dimension_cuts = !a.no_dim_cuts;
    mo.theorem51_cuts = a.extra_cuts;
    mo.packing_rows = a.packing_rows;
    const auto model = sdp_model(p, mo);
    IpmOptions io;
    io.tol = a.tol;
    io.precision = a.precision == "double" ? IpmPrecision::double_precision : IpmPrecision::quad_precision;
    io.verbose = a.verbose;
    const auto rep = solve_sdp(model, io);
    r.raw_value = rep.value;
    r.floored = rep.floored;
    r.status = std::string(status_name(rep.status));
    r.gap = rep.gap;
    r.iterations = rep.iterations;
    r.cuts_applied = model.cut_tags;
  } else {
    throw std::invalid_argument("unknown method: " + a.method);
  }
  r.wall_ms = ms_since(start);
  emit({r}, a.format, a.timing);
  if (r.status != "optimal") {
    std::cerr << "solver did not converge: " << r.status << "\n";
    return kExitSolver;
  }
  return 0;
}

struct TableArgs {
  int which = 1;
  int max_n = 16;
  std::string format = "text";
  bool no_lp = false;
  bool no_sdp = false;
  double tol = 1e-8;
  bool timing = false;
};

int run_table(const TableArgs& a) {
  TableOptions o;
  o.max_n = a.max_n;
  o.lp = o.ip = !a.no_lp;
  o.sdp = !a.no_sdp;
  o.ipm.tol = a.tol;
  const auto rows = compute_table(a.which, o);
  if (a.format == "json")
    std::cout << format_table_json(a.which, rows, a.timing) << "\n";
  else if (a.format == "csv")
    std::cout << format_table_csv(rows);
  else
    std::cout << format_table_text(a.which, rows);
  return 0;
}

struct ExportArgs {
  std::string model = "sdp";
  int q = 2, n = 0, d = 1;
  std::string metric = "subspace";
  std::string out;
  bool extra_cuts = false;
  bool no_dim_cuts = false;
  bool packing_rows = false;
  bool no_condition = false;
};

int run_export(const ExportArgs& a) {
  const ProjectiveParams p{a.n, a.d, FieldOrder(a.q), parse_metric(a.metric)};
  p.validate();
  std::string text;
  if (a.model == "sdp") {
    SdpModelOptions mo;
    mo.dimension_cuts = !a.no_dim_cuts;
    mo.theorem51_cuts = a.extra_cuts;
    mo.packing_rows = a.packing_rows;
    mo.condition = !a.no_condition;
    text = export_sdpa(lower_to_sdpa(sdp_model(p, mo).program));
  } else if (a.model == "ev-lp") {
    LinearProgram lp = ev_model(p);
    if (a.extra_cuts)
      for (const auto& row : theorem51_cuts(p).rows) lp.rows.push_back(row);
    text = export_lp_text(lp);
  } else {
    throw std::invalid_argument("unknown model: " + a.model);
  }
  if (a.out.empty() || a.out == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(a.out, std::ios::binary);
  if (!f) throw Failure{kExitIo, "cannot open " + a.out + " for writing"};
  f << text;
  f.close();
  if (!f) throw Failure{kExitIo, "failed writing " + a.out};
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper bounds on subspace codes"};
  app.require_subcommand(1);

  GrassmannArgs ga;
  auto* g = app.add_subcommand("grassmann", "bounds on A_q(n, k, 2 delta)");
  g->add_option("--q", ga.q, "field order")->default_val(2);
  g->add_option("--n", ga.n, "ambient dimension")->required();
  g->add_option("--k", ga.k, "codeword dimension")->required();
  g->add_option("--delta", ga.delta, "half the minimum subspace distance")->required();
  g->add_option("--method", ga.method, "bound to evaluate")
      ->check(CLI::IsMember({"sphere", "singleton", "anticode", "johnson1", "johnson2", "combined", "delsarte-lp",
                             "all"}))
      ->default_val("combined");
  g->add_option("--format", ga.format)->check(CLI::IsMember({"text", "json"}))->default_val("text");
  g->add_flag("--timing", ga.timing, "report wall time in JSON (otherwise 0)");

  ProjectiveArgs pa;
  auto* p = app.add_subcommand("projective", "bounds on A_q(n, d) and A^inj_q(n, d)");
  p->add_option("--q", pa.q)->default_val(2);
  p->add_option("--n", pa.n)->required();
  p->add_option("--d", pa.d)->required();
  p->add_option("--metric", pa.metric)->check(CLI::IsMember({"subspace", "injection"}))->default_val("subspace");
  p->add_option("--method", pa.method)->check(CLI::IsMember({"ev-lp", "ev-ip", "sdp"}))->default_val("ev-lp");
  p->add_flag("--extra-cuts", pa.extra_cuts, "add the dimension-distribution cuts for D_c and D_m");
  p->add_flag("--no-dim-cuts", pa.no_dim_cuts, "sdp: drop the per-dimension caps");
  p->add_flag("--packing-rows", pa.packing_rows, "sdp: also add the LP packing rows (experimental)");
  p->add_option("--tol", pa.tol, "relative gap tolerance")->default_val(1e-8);
  p->add_option("--precision", pa.precision)->check(CLI::IsMember({"double", "quad"}))->default_val("quad");
  p->add_option("--format", pa.format)->check(CLI::IsMember({"text", "json"}))->default_val("text");
  p->add_flag("--timing", pa.timing, "report wall time in JSON (otherwise 0)");
  p->add_flag("--verbose", pa.verbose, "print solver iterations to stderr");

  TableArgs ta;
  auto* t = app.add_subcommand("table", "recompute the reference tables");
  t->add_option("--which", ta.which)->check(CLI::IsMember({1, 2}))->default_val(1);
  t->add_option("--max-n", ta.max_n)->default_val(16);
  t->add_option("--format", ta.format)->check(CLI::IsMember({"text", "json", "csv"}))->default_val("text");
  t->add_flag("--no-lp", ta.no_lp);
  t->add_flag("--no-sdp", ta.no_sdp);
  t->add_option("--tol", ta.tol)->default_val(1e-8);
  t->add_flag("--timing", ta.timing, "include per-row wall times in JSON");

  ExportArgs ea;
  auto* e = app.add_subcommand("export", "write a model as SDPA .dat-s or LP text");
  e->add_option("--model", ea.model)->check(CLI::IsMember({"sdp", "ev-lp"}))->default_val("sdp");
  e->add_option("--q", ea.q)->default_val(2);
  e->add_option("--n", ea.n)->required();
  e->add_option("--d", ea.d)->required();
  e->add_option("--metric", ea.metric)->check(CLI::IsMember({"subspace", "injection"}))->default_val("subspace");
  e->add_option("--out", ea.out, "output path, '-' for stdout")->default_val("-");
  e->add_flag("--extra-cuts", ea.extra_cuts);
  e->add_flag("--no-dim-cuts", ea.no_dim_cuts);
  e->add_flag("--packing-rows", ea.packing_rows);
  e->add_flag("--no-condition", ea.no_condition, "skip the diagonal rescaling of the blocks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitInvalid;
  }

  try {
    if (g->parsed()) return run_grassmann(ga);
    if (p->parsed()) return run_projective(pa);
    if (t->parsed()) return run_table(ta);
    if (e->parsed()) return run_export(ea);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::invalid_argument& err) {
    std::cerr << "invalid parameters: " << err.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& err) {
    std::cerr << "solver error: " << err.what() << "\n";
    return kExitSolver;
  }
  return 0;
}
