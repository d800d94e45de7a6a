#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "chernlab/bounds.hpp"
#include "chernlab/lab.hpp"
#include "chernlab/session.hpp"

namespace {

using namespace chernlab;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open script: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write: " + path);
  out << contents;
}

std::optional<FieldStmt> parse_field_flag(const std::string& text) {
  if (text.empty()) return std::nullopt;
  FieldStmt f;
  if (text == "qq" || text == "QQ") {
    f.rational = true;
    return f;
  }
  if (text.rfind("fp", 0) == 0 || text.rfind("Fp", 0) == 0) {
    const std::string digits = text.substr(2);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      f.p = std::stoull(digits);
      return f;
    }
  }
  throw CLI::ValidationError("--field", "expected fp<prime> or qq");
}

int run_script(const std::string& path, const std::string& json_out, const std::string& tsv_dir,
               const std::string& field_flag, std::uint64_t seed, int maxdeg) {
  RunOptions opts;
  opts.field_override = parse_field_flag(field_flag);
  opts.seed = seed;
  opts.maxdeg = maxdeg;
  opts.want_tsv = !tsv_dir.empty();

  SessionScript script = parse_session(read_file(path));
  RunResult result = run_session(script, opts);

  if (!json_out.empty())
    write_file(json_out, result.json);
  else
    std::cout << result.json;

  if (!tsv_dir.empty()) {
    std::filesystem::create_directories(tsv_dir);
    for (const auto& [name, contents] : result.tsv)
      write_file((std::filesystem::path(tsv_dir) / name).string(), contents);
  }
  return result.exit_code;
}

int run_demo(const std::string& name, bool list, bool include_expensive) {
  if (list) {
    for (const auto& n : lab_instance_names(include_expensive)) std::cout << n << "\n";
    return 0;
  }
  LabInstance inst = build_lab_instance(name);
  std::cout << "instance " << inst.name << "\n";
  std::cout << "ring " << describe_presented_ring(inst.ring) << "\n";
  const Field& k = inst.ring->ambient()->field();
  std::cout << "field "
            << (k.kind() == FieldKind::rationals
                    ? std::string("QQ")
                    : "Fp(" + std::to_string(k.prime_modulus()) + ")")
            << "\n";
  std::cout << "flags";
  if (inst.flags.domain) std::cout << " domain";
  if (inst.flags.unmixed) std::cout << " unmixed";
  if (inst.flags.buchsbaum) std::cout << " buchsbaum";
  if (inst.flags.normal) std::cout << " normal";
  if (inst.flags.expensive) std::cout << " expensive";
  std::cout << "\n";
  for (const auto& [iname, ideal, parameter] : inst.ideals) {
    std::cout << "ideal " << iname << " = (";
    for (std::size_t i = 0; i < ideal.gens().size(); ++i)
      std::cout << (i ? ", " : "") << ideal.gens()[i].to_string();
    std::cout << ")" << (parameter ? " [parameter]" : "") << "\n";
  }

  bool all_ok = true;
  for (const auto& check : check_expected_values(inst)) {
    std::cout << (check.ok ? "ok   " : "FAIL ") << check.key << " expected " << check.expected
              << " computed " << check.computed << " [" << check.source << "]\n";
    all_ok = all_ok && check.ok;
  }

  if (inst.experiment_negative_e1) {
    ReductionExperiment ex =
        reduction_e1_experiment(inst.ring, RingIdeal::maximal(inst.ring), 1, 42);
    for (const auto& t : ex.trials) {
      if (t.failed) {
        std::cout << "experiment e1(random parameter): " << t.error << "\n";
      } else {
        std::cout << "experiment e1(random parameter) = " << t.e[1]
                  << (t.e[1] < 0 ? " (negative, as predicted)" : " (NOT negative)") << "\n";
        all_ok = all_ok && t.e[1] < 0;
      }
    }
  }
  return all_ok ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Samuel coefficients, homological degrees and bound experiments"};
  app.require_subcommand(1);

  std::string script_path, json_out, tsv_dir, field_flag;
  std::uint64_t seed = 42;
  int maxdeg = chernlab::PolyRing::kDefaultMaxWorkingDegree;
  if (const char* env = std::getenv("CHERNLAB_MAXDEG")) {
    try {
      maxdeg = std::stoi(env);
    } catch (...) {
      std::cerr << "ignoring malformed CHERNLAB_MAXDEG\n";
    }
  }

  CLI::App* run = app.add_subcommand("run", "Execute a session script");
  run->add_option("script", script_path, "Script file")->required();
  run->add_option("--json", json_out, "Write the JSON report here (default: stdout)");
  run->add_option("--tsv", tsv_dir, "Write per-filtration TSV tables into this directory");
  run->add_option("--field", field_flag, "Override the script's field: fp<prime> or qq");
  run->add_option("--seed", seed, "Seed for randomized reductions");
  run->add_option("--maxdeg", maxdeg, "Working-degree guard for basis computations");

  std::string demo_name;
  bool demo_list = false, include_expensive = false;
  CLI::App* demo = app.add_subcommand("demo", "Verify a built-in instance");
  demo->add_option("name", demo_name, "Instance name (see --list)");
  demo->add_flag("--list", demo_list, "List available instances");
  demo->add_flag("--include-expensive", include_expensive,
                 "Include instances that take minutes to build");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return run_script(script_path, json_out, tsv_dir, field_flag, seed, maxdeg);
    if (!demo_list && demo_name.empty()) {
      std::cerr << "demo needs an instance name or --list\n";
      return 3;
    }
    return run_demo(demo_name, demo_list, include_expensive);
  } catch (const chernlab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const chernlab::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const chernlab::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const chernlab::ContextError& e) {
    std::cerr << "context error: " << e.what() << "\n";
    return 3;
  } catch (const chernlab::ResourceError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const chernlab::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
