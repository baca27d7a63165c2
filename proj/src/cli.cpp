#include "hosmt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <sstream>

#include "hosmt/checker.hpp"
#include "hosmt/core_printer.hpp"
#include "hosmt/oracle.hpp"
#include "hosmt/parser.hpp"
#include "hosmt/printer.hpp"
#include "hosmt/processor.hpp"
#include "hosmt/typing.hpp"

namespace hosmt::cli {
namespace {

struct Options {
  std::vector<std::string> files;
  bool verbose = false;
  std::string proof;
  bool oracle = false;
  bool allow_trust = false;
  std::size_t max_steps = kDefaultMaxBetaSteps;
};

struct Input {
  std::string name;  // for diagnostics
  std::string text;
  std::size_t index = 0;
  std::size_t count = 1;
};

using Job = std::function<Result(const Input&, const Options&)>;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

Result fail(const Input& in, const Error& e, int code = kInputError) {
  return {code, {}, format_diagnostic(in.name, e) + "\n"};
}

Result cmd_parse(const Input& in, const Options&) {
  try {
    auto cmds = parse_script(in.text);
    return {kOk, print_script(cmds), {}};
  } catch (const Error& e) {
    return fail(in, e);
  }
}

NameTable names_for(const Signature& sig) {
  NameTable names;
  for (const auto& n : sig.declared()) names.reserve(n);
  return names;
}

Result cmd_check(const Input& in, const Options& opts) {
  try {
    auto cmds = parse_script(in.text);
    CheckedScript checked = check_script(cmds);
    Result r;
    if (opts.verbose) {
      for (const auto& a : checked.assertions) {
        NameTable names = names_for(checked.signature);
        r.out += "(assert " + to_string(a, names) + ")\n";
      }
    }
    return r;
  } catch (const Error& e) {
    return fail(in, e);
  }
}

std::string proof_path(const Options& opts, const Input& in, std::size_t assertion, std::size_t assertions) {
  if (in.count == 1 && assertions == 1) return opts.proof;
  std::string base = opts.proof;
  const std::string ext = ".hoproof";
  if (base.size() > ext.size() && base.compare(base.size() - ext.size(), ext.size(), ext) == 0) {
    base.resize(base.size() - ext.size());
  }
  if (in.count > 1) base += "." + std::to_string(in.index + 1);
  if (assertions > 1) base += "." + std::to_string(assertion + 1);
  return base + ext;
}

Result cmd_process(const Input& in, const Options& opts) {
  std::vector<Command> cmds;
  CheckedScript checked;
  try {
    cmds = parse_script(in.text);
    checked = check_script(cmds);
  } catch (const Error& e) {
    return fail(in, e);
  }
  ProcessOptions popts;
  popts.max_beta_steps = opts.max_steps;
  Result r;
  NameTable names = names_for(checked.signature);
  std::vector<std::string> processed(cmds.size());
  for (std::size_t i = 0; i < checked.assertions.size(); ++i) {
    std::optional<Processed> p;
    try {
      p = process(checked.assertions[i], checked.signature, popts);
    } catch (const DivergenceError& e) {
      return {kDivergence, {}, in.name + ": error: " + e.what() + "\n"};
    }
    std::size_t ci = checked.assert_commands[i];
    SurfaceTerm body = to_surface(p->term, names);
    const SurfaceTerm& original = *cmds[ci].term;
    if (original.kind == SurfaceTerm::Kind::annotated) {
      SurfaceTerm annotated = original;
      annotated.children = {std::move(body)};
      body = std::move(annotated);
    }
    processed[ci] = "(assert " + print_term(body) + ")";
    if (!opts.proof.empty()) {
      std::string path = proof_path(opts, in, i, checked.assertions.size());
      std::ofstream out(path, std::ios::binary);
      out << print_certificate(p->certificate);
      if (!out) return {kIoError, r.out, in.name + ": error: cannot write " + path + "\n"};
      if (opts.verbose) r.err += in.name + ": wrote " + path + "\n";
    }
  }
  for (std::size_t i = 0; i < cmds.size(); ++i) {
    r.out += processed[i].empty() ? print_command(cmds[i]) : processed[i];
    r.out += "\n";
  }
  return r;
}

Result cmd_verify(const Input& in, const Options& opts) {
  Certificate cert;
  try {
    cert = parse_certificate(in.text);
  } catch (const Error& e) {
    return fail(in, e);
  }
  CheckReport report = check_certificate(cert);
  Result r;
  if (opts.verbose) {
    for (const auto& s : report.steps) {
      const char* status = s.check.status == StepStatus::ok        ? "ok"
                           : s.check.status == StepStatus::trusted ? "trusted"
                                                                    : "failed";
      r.out += s.id + " " + status;
      if (!s.check.message.empty()) r.out += ": " + s.check.message;
      r.out += "\n";
    }
  }
  if (report.verdict == Verdict::invalid) {
    r.code = kInvalidProof;
    r.out += in.name + ": invalid\n";
    if (report.first_failure) r.out += report.steps[*report.first_failure].check.message + "\n";
    if (!report.message.empty()) r.out += report.message + "\n";
    return r;
  }
  if (opts.oracle) {
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
      const ProofStep& s = cert.steps[i];
      if (s.is_lemma()) continue;
      std::string verdict;
      try {
        verdict = std::string(oracle_verdict_name(oracle_check(s.judgment(), opts.max_steps).verdict));
      } catch (const std::exception& e) {
        verdict = e.what();
      }
      if (opts.verbose) r.out += s.id + " oracle " + verdict + "\n";
      if (verdict != "lambda-valid" && s.rule != Rule::taut) {
        r.code = kInvalidProof;
        r.out += in.name + ": invalid\n" + "oracle rejects step " + s.id + ": " + verdict + "\n";
        return r;
      }
    }
  }
  if (report.verdict == Verdict::valid_with_trust) {
    r.out += in.name + ": valid-with-trust (" + std::to_string(report.trusted) + " trusted)\n";
    if (!opts.allow_trust) r.code = kTrustedProof;
  } else {
    r.out += in.name + ": valid\n";
  }
  const ProofStep& last = cert.final_step();
  if (opts.verbose && !last.is_lemma()) r.out += print_judgment(last.judgment()) + "\n";
  return r;
}

Result run_batch(const Job& job, const Options& opts, std::string_view stdin_text) {
  std::vector<std::future<Result>> jobs;
  std::vector<Result> early(opts.files.size());
  std::vector<bool> ready(opts.files.size(), false);
  for (std::size_t i = 0; i < opts.files.size(); ++i) {
    const std::string& path = opts.files[i];
    Input in;
    in.index = i;
    in.count = opts.files.size();
    if (path == "-") {
      in.name = "<stdin>";
      in.text = std::string(stdin_text);
    } else {
      in.name = path;
      auto text = read_file(path);
      if (!text) {
        early[i] = {kIoError, {}, path + ": error: cannot read file\n"};
        ready[i] = true;
        jobs.emplace_back();
        continue;
      }
      in.text = std::move(*text);
    }
    jobs.push_back(std::async(std::launch::async, [job, in = std::move(in), &opts] {
      try {
        return job(in, opts);
      } catch (const Error& e) {
        return fail(in, e);
      } catch (const std::exception& e) {
        return Result{kInputError, {}, in.name + ": error: " + e.what() + "\n"};
      }
    }));
  }
  Result total;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Result r = ready[i] ? std::move(early[i]) : jobs[i].get();
    total.out += r.out;
    total.err += r.err;
    if (total.code == kOk) total.code = r.code;
  }
  return total;
}

}  // namespace

Result run(const std::vector<std::string>& args, std::string_view stdin_text) {
  CLI::App app{"Higher-order SMT-LIB front end and proof checker", "hosmt"};
  app.require_subcommand(1);
  Options opts;

  auto add_files = [&](CLI::App* sub) {
    sub->add_option("files", opts.files, "Input files ('-' for standard input)")->required();
  };
  auto* parse = app.add_subcommand("parse", "Parse and print in canonical form");
  add_files(parse);
  auto* check = app.add_subcommand("check", "Parse and type-check");
  add_files(check);
  check->add_flag("--verbose,-v", opts.verbose, "Print the elaborated assertions");
  auto* proc = app.add_subcommand("process", "Normalize assertions and emit certificates");
  add_files(proc);
  proc->add_flag("--verbose,-v", opts.verbose, "Report written certificates");
  proc->add_option("--proof", opts.proof, "Certificate output path");
  proc->add_option("--max-steps", opts.max_steps, "Beta-reduction step limit");
  auto* verify = app.add_subcommand("verify", "Check certificates");
  add_files(verify);
  verify->add_flag("--verbose,-v", opts.verbose, "Print per-step results");
  verify->add_flag("--oracle", opts.oracle, "Cross-check every step with the lambda encoding");
  verify->add_flag("--allow-trust", opts.allow_trust, "Exit 0 on trusted tautology leaves");
  verify->add_option("--max-steps", opts.max_steps, "Beta-reduction step limit");

  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return {code == 0 ? kOk : kInputError, out.str(), err.str()};
  }

  Job job;
  if (*parse) job = cmd_parse;
  if (*check) job = cmd_check;
  if (*proc) job = cmd_process;
  if (*verify) job = cmd_verify;
  return run_batch(job, opts, stdin_text);
}

}  // namespace hosmt::cli
