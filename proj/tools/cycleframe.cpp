// cycleframe: build, verify, check and tabulate k-ARCS of (K_u x K_g)(lambda).
#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "cycleframe/arcs.hpp"
#include "cycleframe/io.hpp"
#include "cycleframe/verify.hpp"

using namespace cycleframe;

namespace {

// Stable exit codes.
enum Exit : int {
  kOk = 0,
  kIo = 1,
  kInfeasible = 2,
  kOpen = 3,
  kUnsupported = 4,
  kBug = 5,
  kVerifyFailed = 6,
};

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Feasible: return kOk;
    case Verdict::Infeasible: return kInfeasible;
    case Verdict::OpenException: return kOpen;
    case Verdict::UnsupportedCase: return kUnsupported;
  }
  return kBug;
}

struct ParamArgs {
  int lambda = 1, k = 4, u = 3, g = 2;
  Params params() const { return {lambda, k, u, g}; }
};

void add_param_options(CLI::App* cmd, ParamArgs& a) {
  cmd->add_option("--lambda", a.lambda, "edge multiplicity")->required();
  cmd->add_option("--k", a.k, "cycle length")->required();
  cmd->add_option("--u", a.u, "number of parts")->required();
  cmd->add_option("--g", a.g, "part size")->required();
}

int cmd_build(const Params& p, const std::string& out, bool verify) {
  const auto f = check_feasibility(p);
  if (f.verdict != Verdict::Feasible) {
    std::cerr << f.describe() << "\n";
    return exit_for(f.verdict);
  }
  Decomposition d;
  try {
    d = build_arcs(p, verify);
  } catch (const FeasibilityError& e) {
    std::cerr << e.feasibility().describe() << "\n";
    return exit_for(e.feasibility().verdict);
  } catch (const Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::UnsupportedBlock ? kUnsupported : kBug;
  }
  const std::string text = canonical_dump(arcs_to_json(d, p));
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream os(out, std::ios::binary);
    if (!os || !(os << text) || !os.flush()) {
      std::cerr << "cannot write " << out << "\n";
      return kIo;
    }
  }
  std::cerr << "built " << to_string(p) << ": " << d.factors.size() << " factors, "
            << f.describe() << "\n";
  return kOk;
}

int cmd_verify(const std::string& in) {
  ParsedArcs parsed;
  try {
    std::ifstream is(in, std::ios::binary);
    if (!is) {
      std::cerr << "cannot read " << in << "\n";
      return kIo;
    }
    parsed = arcs_from_json(nlohmann::json::parse(is));
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kIo;
  }
  const auto report = verify_arcs(parsed.decomposition, parsed.params);
  if (!report.ok()) {
    std::cerr << report.describe() << "\n";
    return kVerifyFailed;
  }
  std::cout << "OK " << to_string(parsed.params) << " " << parsed.decomposition.factors.size()
            << " factors\n";
  return kOk;
}

struct Row {
  Params p;
  std::string verdict;
  std::size_t factors = 0;
  long long millis = 0;
  bool failed = false;
};

Row run_cell(const Params& p, bool inject_fault) {
  Row row{p, {}, 0, 0, false};
  const auto f = check_feasibility(p);
  row.verdict = to_string(f.verdict);
  if (f.verdict != Verdict::Feasible) return row;
  const auto start = std::chrono::steady_clock::now();
  try {
    auto d = build_arcs(p, false);
    if (inject_fault && !d.factors.empty() && !d.factors.back().cycles.empty())
      d.factors.back().cycles.pop_back();
    const auto report = verify_arcs(d, p);
    row.factors = d.factors.size();
    if (!report.ok()) {
      row.verdict = "ConstructionBug";
      row.failed = true;
    }
  } catch (const Error& e) {
    row.verdict = to_string(e.kind());
    row.failed = true;
  }
  row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return row;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

int cmd_table(const std::vector<int>& lambdas, const std::vector<int>& ks, int u_min, int u_max,
              int g_min, int g_max, const std::string& out, const std::vector<int>& fault,
              unsigned jobs) {
  std::vector<Params> cells;
  for (int lambda : lambdas)
    for (int k : ks)
      for (int u : range(u_min, u_max))
        for (int g : range(g_min, g_max)) cells.push_back({lambda, k, u, g});

  std::optional<Params> faulty;
  if (fault.size() == 4) faulty = Params{fault[0], fault[1], fault[2], fault[3]};

  // Cells are independent; rows keep grid order.
  std::vector<Row> rows(cells.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t base = 0; base < cells.size(); base += jobs) {
    std::vector<std::future<Row>> batch;
    for (std::size_t i = base; i < std::min(cells.size(), base + jobs); ++i)
      batch.push_back(std::async(std::launch::async, run_cell, cells[i], faulty == cells[i]));
    for (std::size_t i = 0; i < batch.size(); ++i) rows[base + i] = batch[i].get();
  }

  std::ostringstream csv;
  csv << "lambda,k,u,g,verdict,factors,millis\n";
  bool any_failed = false;
  for (const auto& r : rows) {
    csv << r.p.lambda << ',' << r.p.k << ',' << r.p.u << ',' << r.p.g << ',' << r.verdict << ','
        << r.factors << ',' << r.millis << '\n';
    if (r.failed) {
      any_failed = true;
      std::cerr << "FAILED " << to_string(r.p) << " " << r.verdict << "\n";
    }
  }
  if (out.empty() || out == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream os(out, std::ios::binary);
    if (!os || !(os << csv.str()) || !os.flush()) {
      std::cerr << "cannot write " << out << "\n";
      return kIo;
    }
  }
  return any_failed ? kBug : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-cycle systems of (K_u x K_g)(lambda) with one hole per factor"};
  app.require_subcommand(1);

  ParamArgs build_args;
  std::string build_out;
  bool no_verify = false;
  auto* build = app.add_subcommand("build", "construct and write a decomposition as JSON");
  add_param_options(build, build_args);
  build->add_option("-o,--out", build_out, "output path (default stdout)");
  build->add_flag("--no-verify", no_verify, "skip the internal check (benchmarking only)");

  std::string verify_in;
  auto* verify = app.add_subcommand("verify", "check a JSON decomposition");
  verify->add_option("input", verify_in, "JSON file")->required();

  ParamArgs check_args;
  auto* check = app.add_subcommand("check", "print the verdict without building");
  add_param_options(check, check_args);

  std::vector<int> lambdas{1, 2}, ks{4, 6, 8}, fault;
  int u_min = 3, u_max = 13, g_min = 2, g_max = 8;
  unsigned jobs = 0;
  std::string table_out;
  auto* table = app.add_subcommand("table", "sweep a grid and emit CSV");
  table->add_option("--lambda", lambdas, "lambda values")->delimiter(',');
  table->add_option("--k", ks, "cycle lengths")->delimiter(',');
  table->add_option("--u-min", u_min);
  table->add_option("--u-max", u_max);
  table->add_option("--g-min", g_min);
  table->add_option("--g-max", g_max);
  table->add_option("-j,--jobs", jobs, "worker threads (0 = all cores)");
  table->add_option("-o,--out", table_out, "CSV path (default stdout)");
  // Drops one cycle of the named cell after building; exercises the failure path.
  table->add_option("--inject-fault", fault)->delimiter(',')->expected(4)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kIo;
  }

  try {
    if (*build) return cmd_build(build_args.params(), build_out, !no_verify);
    if (*verify) return cmd_verify(verify_in);
    if (*check) {
      const auto f = check_feasibility(check_args.params());
      std::cout << f.describe() << "\n";
      return exit_for(f.verdict);
    }
    if (*table) return cmd_table(lambdas, ks, u_min, u_max, g_min, g_max, table_out, fault, jobs);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kIo;
  }
  return kOk;
}
