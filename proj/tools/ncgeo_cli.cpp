// Command-line driver for the ncgeo shared library. Uses only the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ncgeo.h"

namespace {

struct OracleFlags {
  std::vector<std::string> thetas;
  std::vector<std::string> lambda2s;
  int dim = 0;
  double tol = 1e-10;
  bool any_set() const { return !thetas.empty() || !lambda2s.empty() || dim != 0; }
};

void add_oracle_flags(CLI::App* cmd, OracleFlags& flags) {
  cmd->add_option("--theta", flags.thetas, "Representation theta as p/N (repeatable)");
  cmd->add_option("--lambda2", flags.lambda2s, "Sphere representation lambda^2 as a/b (repeatable)");
  cmd->add_option("--dim", flags.dim, "Representation dimension (multiple of N)");
  cmd->add_option("--tol", flags.tol, "Oracle tolerance (default 1e-10)");
}

std::string json_string_array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += ",";
    out += "\"" + items[i] + "\"";
  }
  return out + "]";
}

std::string oracle_opts_json(const OracleFlags& flags, const std::string& fault) {
  std::string out = "{";
  bool first = true;
  auto field = [&](const std::string& text) {
    if (!first) out += ",";
    out += text;
    first = false;
  };
  if (!flags.thetas.empty()) field("\"theta\":" + json_string_array(flags.thetas));
  if (!flags.lambda2s.empty()) field("\"lambda2\":" + json_string_array(flags.lambda2s));
  if (flags.dim != 0) field("\"dim\":" + std::to_string(flags.dim));
  field("\"tol\":" + std::to_string(flags.tol));
  if (!fault.empty()) field("\"inject_fault\":\"" + fault + "\"");
  return out + "}";
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  out << text << "\n";
  return 0;
}

// small RAII helpers around the C API
struct Engine {
  ncg_engine* handle = nullptr;
  ~Engine() { ncg_engine_destroy(handle); }
};

struct OwnedString {
  char* value = nullptr;
  ~OwnedString() { ncg_string_free(value); }
};

int fail_with(const Engine& engine, ncg_status status) {
  std::cerr << "error [" << ncg_status_name(status) << "]: " << ncg_engine_last_error(engine.handle)
            << "\n";
  return 2;
}

std::string to_markdown(const std::string& report_json) {
  OwnedString md;
  if (ncg_report_to_markdown(report_json.c_str(), &md.value) != NCG_OK) return report_json;
  return md.value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact pseudo-Riemannian calculi over the noncommutative torus and 3-sphere"};
  app.require_subcommand(1);

  std::string target = "sphere";
  std::string format = "md";
  std::string out_path;
  std::string fault;
  std::string expression;
  OracleFlags oracle;

  CLI::App* verify = app.add_subcommand(
      "verify", "Build the calculus, solve the connection, verify every identity");
  verify->add_option("--target", target, "torus or sphere")
      ->check(CLI::IsMember({"torus", "sphere"}));
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "md"}));
  verify->add_option("--out", out_path, "Write the report to a file instead of stdout");
  verify->add_option("--inject-fault", fault, "Inject a named fault (negative testing)");
  add_oracle_flags(verify, oracle);

  CLI::App* eval = app.add_subcommand("eval", "Normalize an expression, optionally evaluate it");
  eval->add_option("expression", expression, "Expression in the CLI grammar")->required();
  eval->add_option("--target", target, "torus or sphere")
      ->check(CLI::IsMember({"torus", "sphere"}));
  eval->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md"}));
  eval->add_option("--out", out_path, "Write the output to a file instead of stdout");
  add_oracle_flags(eval, oracle);

  CLI11_PARSE(app, argc, argv);

  Engine engine;
  if (ncg_engine_create(target.c_str(), &engine.handle) != NCG_OK) {
    std::cerr << "error: unknown target '" << target << "'\n";
    return 2;
  }

  if (verify->parsed()) {
    const std::string opts = oracle_opts_json(oracle, fault);
    int all_pass = 0;
    OwnedString report;
    const ncg_status status = ncg_verify(engine.handle, opts.c_str(), &all_pass, &report.value);
    if (status != NCG_OK) return fail_with(engine, status);
    const std::string text = format == "json" ? std::string(report.value)
                                              : to_markdown(report.value);
    const int write_rc = write_output(text, out_path);
    if (write_rc != 0) return write_rc;
    return all_pass == 1 ? 0 : 1;
  }

  // eval
  const std::string opts = oracle.any_set() ? oracle_opts_json(oracle, "") : std::string("{}");
  OwnedString result;
  const ncg_status status = ncg_eval(engine.handle, expression.c_str(), opts.c_str(), &result.value);
  if (status != NCG_OK) return fail_with(engine, status);
  const std::string text =
      format == "json" ? std::string(result.value) : to_markdown(result.value);
  return write_output(text, out_path);
}
