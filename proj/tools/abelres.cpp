#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "abel/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"abelres: singular loci and blowup sequences for degree-2 Abel data"};
  app.require_subcommand(1);

  abel::CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "validate a document and report the singular locus");
  check_cmd->add_option("file", check.document, "Abel data document")->required();
  check_cmd->add_flag("--json", check.json, "emit one JSON object");

  abel::ResolveArgs resolve;
  std::string verify_only;
  int max_len = -1;
  auto* resolve_cmd = app.add_subcommand("resolve", "search for or verify a minimal symmetric blowup sequence");
  resolve_cmd->add_option("file", resolve.document, "Abel data document")->required();
  resolve_cmd->add_option("--max-len", max_len, "longest sequence to try");
  resolve_cmd->add_option("--verify-only", verify_only, "sequence file to verify instead of searching");
  resolve_cmd->add_flag("--json", resolve.json, "emit one JSON object");

  abel::DeltaArgs delta;
  auto* delta_cmd = app.add_subcommand("delta", "print delta(i,k,m,n) and w_(i,k)");
  delta_cmd->add_option("file", delta.document, "Abel data document")->required();
  delta_cmd->add_option("--i", delta.i, "1-based vertex")->required();
  delta_cmd->add_option("--k", delta.k, "1-based vertex")->required();
  delta_cmd->add_option("--m", delta.m, "1-based vertex")->required();
  delta_cmd->add_option("--n", delta.n, "1-based vertex")->required();
  delta_cmd->add_flag("--json", delta.json, "emit one JSON object");

  abel::StrataArgs strata;
  auto* strata_cmd = app.add_subcommand("strata", "enumerate stratum representatives on a rational grid");
  strata_cmd->add_option("file", strata.document, "Abel data document (e is ignored)")->required();
  strata_cmd->add_option("--denominator", strata.denominator, "grid denominator D")->capture_default_str();
  strata_cmd->add_option("--bound", strata.bound, "numerators range over [-B*D, B*D]")->capture_default_str();
  strata_cmd->add_flag("--resolve", strata.resolve, "run the full pipeline per representative");
  strata_cmd->add_flag("--json", strata.json, "emit one JSON object");

  abel::ScanArgs scan;
  scan.options.jobs = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
  auto* scan_cmd = app.add_subcommand("scan", "run the pipeline on seeded random instances");
  scan_cmd->add_option("--vertices", scan.options.vertices, "vertex count p")->required();
  scan_cmd->add_option("--max-edges", scan.options.max_edges, "largest edge count")->required();
  scan_cmd->add_option("--count", scan.options.count, "number of instances")->required();
  scan_cmd->add_option("--seed", scan.options.seed, "master seed")->required();
  scan_cmd->add_option("--denominator", scan.options.denominator, "grid denominator D")->capture_default_str();
  scan_cmd->add_option("--bound", scan.options.bound, "numerators range over [-B*D, B*D]")->capture_default_str();
  scan_cmd->add_option("--out", scan.out, "JSONL file to append records to")->required();
  scan_cmd->add_option("--jobs", scan.options.jobs, "worker threads")->capture_default_str();
  scan_cmd->add_flag("--json", scan.json, "emit the summary as one JSON object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : abel::kExitInputError;
  }

  if (*check_cmd) return abel::cmd_check(check, std::cout, std::cerr);
  if (*resolve_cmd) {
    if (max_len >= 0) resolve.max_len = max_len;
    if (!verify_only.empty()) resolve.verify_only = verify_only;
    return abel::cmd_resolve(resolve, std::cout, std::cerr);
  }
  if (*delta_cmd) return abel::cmd_delta(delta, std::cout, std::cerr);
  if (*strata_cmd) return abel::cmd_strata(strata, std::cout, std::cerr);
  return abel::cmd_scan(scan, std::cout, std::cerr);
}
