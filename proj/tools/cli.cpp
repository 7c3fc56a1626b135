// Copyright 2026 The Antimagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "antimagic/driver.hpp"
#include "antimagic/errors.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/spider_tree.hpp"
#include "antimagic/text_format.hpp"

namespace antimagic::cli {
namespace {

using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw InvalidInput("cannot write " + path);
}

SpiderTree load_layout(const std::string& spec_path) {
  return materialize_tree(canonicalize(parse_instance(read_file(spec_path))));
}

EdgeLabeling load_labeling(const std::string& path, const SpiderTree& layout) {
  return to_edge_labeling(parse_labeling(read_file(path)), layout);
}

std::string witness(const Tree& tree, const VertexSumReport& report,
                    bool strong) {
  const auto& v = strong ? report.violation : report.collision;
  return v ? v->describe(tree) : std::string("(none)");
}

SweepRecord sweep_one(const CanonicalDoubleSpider& instance, int oracle_max) {
  const auto start = Clock::now();
  SweepRecord rec;
  rec.instance = instance;
  rec.edge_count = instance.edge_count();
  rec.tag = classify(derive_parameters(instance));
  rec.pass = true;
  try {
    const LabelResult result = strongly_antimagic_label(instance.as_spec());
    rec.route = result.route.describe();
    const EdgeLabeling& labeling = result.labeled.labeling;
    const VertexSumReport report =
        verify_strongly_antimagic(result.layout.tree, labeling);
    if (!verify_bijection(labeling)) {
      rec.pass = false;
      rec.detail = "not a bijection: " + report.bijection_problem;
    } else if (!report.strong_ok) {
      rec.pass = false;
      rec.detail = "not strongly antimagic: " +
                   witness(result.layout.tree, report, true);
    }
  } catch (const std::exception& e) {
    rec.pass = false;
    rec.detail = e.what();
  }
  if (oracle_max > 0 && rec.edge_count <= oracle_max) {
    const SpiderTree layout = materialize_tree(instance);
    SearchBudget budget;
    budget.max_edges = oracle_max;
    const SearchResult found = find_strongly_antimagic(layout.tree, budget);
    rec.oracle = found.status;
    if (found.status != SearchStatus::kFound) {
      if (rec.pass) {
        rec.detail = "oracle disagrees: " + std::string(to_string(found.status));
      }
      rec.pass = false;
    } else if (!verify_strongly_antimagic(layout.tree, *found.labeling)
                    .strong_ok) {
      rec.pass = false;
      rec.detail = "oracle witness rejected by verifier";
    }
  }
  rec.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  return rec;
}

int cmd_label(const std::string& spec_path, const std::string& out_path,
              const std::string& dot_path, bool trace, std::ostream& out,
              std::ostream& err) {
  const DoubleSpiderSpec spec = parse_instance(read_file(spec_path));
  LabelResult result;
  try {
    result = strongly_antimagic_label(spec);
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  const EdgeLabeling& labeling = result.labeled.labeling;
  const VertexSumReport report =
      verify_strongly_antimagic(result.layout.tree, labeling);
  if (!report.strong_ok) {
    err << "internal error: output fails the verifier: "
        << (report.bijection_ok ? witness(result.layout.tree, report, true)
                                : report.bijection_problem)
        << '\n';
    return kExitInternal;
  }

  if (trace) {
    err << "# route " << result.route.describe() << '\n';
    err << "# residue " << result.route.residue.to_string() << '\n';
    for (const TraceEntry& t : result.trace) {
      err << "step=" << t.step << " edge=" << t.edge.to_string()
          << " label=" << t.label << '\n';
    }
  }

  const std::string text = format_labeling(result.layout, labeling);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
    out << result.spider.to_string() << " m=" << labeling.edge_count()
        << " route: " << result.route.describe() << '\n';
  }
  if (!dot_path.empty()) write_file(dot_path, export_dot(result.layout, &labeling));
  return kExitOk;
}

int cmd_verify(const std::string& spec_path, const std::string& labeling_path,
               bool strong, std::ostream& out, std::ostream& err) {
  const SpiderTree layout = load_layout(spec_path);
  const EdgeLabeling labeling = load_labeling(labeling_path, layout);
  const VertexSumReport report = evaluate(layout.tree, labeling);
  if (!report.bijection_ok) {
    err << "bijection: FAIL: " << report.bijection_problem << '\n';
    return kExitPropertyFailure;
  }
  out << "bijection: ok\n";
  const bool ok = strong ? report.strong_ok : report.antimagic_ok;
  const char* property = strong ? "strongly antimagic" : "antimagic";
  if (!ok) {
    out << property << ": FAIL\n";
    err << "violation: " << witness(layout.tree, report, strong) << '\n';
    return kExitPropertyFailure;
  }
  out << property << ": ok\n";
  return kExitOk;
}

int cmd_sweep(const SweepOptions& options, const std::string& report_path,
              std::ostream& out, std::ostream& err) {
  if (options.max_edges < 5) {
    throw InvalidInput("--max-edges must be at least 5");
  }
  const auto start = Clock::now();
  const SweepReport report = run_sweep(options);
  for (const SweepRecord& rec : report.records) {
    if (!rec.pass) {
      err << "FAIL " << rec.instance.to_string() << ": " << rec.detail << '\n';
    }
  }
  if (!report_path.empty()) write_file(report_path, report.format());
  out << "instances=" << report.records.size() << " passed=" << report.passed
      << " failed=" << report.failed << '\n';
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
      Clock::now() - start);
  err << "# elapsed " << ms.count() << " ms\n";
  return report.failed == 0 ? kExitOk : kExitPropertyFailure;
}

int cmd_oracle(const std::string& spec_path, bool strong,
               std::optional<double> timeout_seconds, std::ostream& out,
               std::ostream& err) {
  const SpiderTree layout = load_layout(spec_path);
  SearchBudget budget;
  budget.max_edges = kOracleMaxEdges;
  if (timeout_seconds) {
    budget.time_limit = std::chrono::milliseconds(
        static_cast<std::int64_t>(*timeout_seconds * 1000.0));
  }
  SearchResult result;
  try {
    result = strong ? find_strongly_antimagic(layout.tree, budget)
                    : find_antimagic(layout.tree, budget);
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << '\n';
    return kExitBudget;
  }
  out << "# oracle " << to_string(result.status) << " nodes=" << result.nodes
      << '\n';
  switch (result.status) {
    case SearchStatus::kFound:
      out << format_labeling(layout, *result.labeling);
      return kExitOk;
    case SearchStatus::kNone:
      return kExitProvenNone;
    case SearchStatus::kBudgetExhausted:
      return kExitBudget;
  }
  return kExitInternal;
}

int cmd_export_dot(const std::string& spec_path,
                   const std::string& labeling_path,
                   const std::string& out_path) {
  const SpiderTree layout = load_layout(spec_path);
  if (labeling_path.empty()) {
    write_file(out_path, export_dot(layout));
  } else {
    const EdgeLabeling labeling = load_labeling(labeling_path, layout);
    write_file(out_path, export_dot(layout, &labeling));
  }
  return kExitOk;
}

}  // namespace

std::string SweepReport::format() const {
  std::ostringstream text;
  for (const SweepRecord& rec : records) {
    text << rec.instance.to_string() << "\tm=" << rec.edge_count
         << "\ttag=" << to_string(rec.tag) << "\troute=" << rec.route
         << "\tresult=" << (rec.pass ? "pass" : "fail");
    if (rec.oracle) text << "\toracle=" << to_string(*rec.oracle);
    if (!rec.detail.empty()) text << "\tdetail=" << rec.detail;
    text << '\n';
  }
  text << "# instances=" << records.size() << " passed=" << passed
       << " failed=" << failed << '\n';
  return text.str();
}

SweepReport run_sweep(const SweepOptions& options) {
  const std::vector<CanonicalDoubleSpider> instances =
      enumerate_instances(options.max_edges);
  SweepReport report;
  report.records.resize(instances.size());

  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < instances.size(); i = next++) {
      report.records[i] = sweep_one(instances[i], options.oracle_max);
    }
  };
  const int workers = std::max(1, options.workers);
  std::vector<std::jthread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();

  for (const SweepRecord& rec : report.records) {
    (rec.pass ? report.passed : report.failed) += 1;
  }
  return report;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Strongly antimagic labelings of double spiders", "antimagic"};
  app.require_subcommand(1);

  std::string spec_path, out_path, dot_path, labeling_path, report_path;
  bool trace = false;
  bool strong = false;
  SweepOptions sweep;
  sweep.workers = static_cast<int>(
      std::max(1u, std::thread::hardware_concurrency()));
  std::optional<double> timeout_seconds;

  CLI::App* label = app.add_subcommand("label", "Label a double spider");
  label->add_option("--spec", spec_path, "Instance file")->required();
  label->add_option("--out", out_path, "Labeling file (default: stdout)");
  label->add_option("--dot", dot_path, "Also write a labeled DOT graph");
  label->add_flag("--trace", trace, "Write the step trace to stderr");

  CLI::App* verify = app.add_subcommand("verify", "Check a labeling file");
  verify->add_option("--spec", spec_path, "Instance file")->required();
  verify->add_option("--labeling", labeling_path, "Labeling file")->required();
  verify->add_flag("--strong", strong, "Check the strong property");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Label and verify every instance up to m");
  sweep_cmd->add_option("--max-edges", sweep.max_edges, "Largest m")
      ->required();
  sweep_cmd->add_option("--oracle-max", sweep.oracle_max,
                        "Cross-check with the oracle up to this m")
      ->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--workers", sweep.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--report", report_path, "Per-instance report file");

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive search");
  oracle->add_option("--spec", spec_path, "Instance file")->required();
  oracle->add_flag("--strong", strong, "Search for a strong labeling");
  oracle->add_option("--timeout-seconds", timeout_seconds, "Time limit")
      ->check(CLI::PositiveNumber);

  CLI::App* dot = app.add_subcommand("export-dot", "Write a DOT graph");
  dot->add_option("--spec", spec_path, "Instance file")->required();
  dot->add_option("--labeling", labeling_path, "Labeling file");
  dot->add_option("--out", out_path, "DOT file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (*label) return cmd_label(spec_path, out_path, dot_path, trace, out, err);
    if (*verify) return cmd_verify(spec_path, labeling_path, strong, out, err);
    if (*sweep_cmd) return cmd_sweep(sweep, report_path, out, err);
    if (*oracle) return cmd_oracle(spec_path, strong, timeout_seconds, out, err);
    if (*dot) return cmd_export_dot(spec_path, labeling_path, out_path);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitMalformed;
}

}  // namespace antimagic::cli
