#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chernlab/field.hpp"
#include "chernlab/polynomial.hpp"

namespace chernlab {

inline constexpr const char* kChernlabVersion = "0.1.0";

// Parsed statements of the line-oriented session language.  Polynomial bodies
// stay as raw text until execution, so a script parses against any field.
struct FieldStmt {
  bool rational = false;
  std::uint64_t p = kDefaultPrime;
  bool operator==(const FieldStmt&) const = default;
};

// Statement equality ignores source line numbers, so a script and its
// canonical reprint compare equal.
struct RingStmt {
  std::string name;
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  std::vector<std::int64_t> weights;  // empty means all 1
  int line = 1;
  bool operator==(const RingStmt& o) const;
};

struct IdealStmt {
  std::string name;
  std::string ring;
  std::vector<std::string> gens;
  int line = 1;
  bool operator==(const IdealStmt& o) const;
};

struct FiltrationStmt {
  std::string name;
  std::string ring;
  std::string kind;  // adic | closure
  std::string seed_ideal;
  int line = 1;
  bool operator==(const FiltrationStmt& o) const;
};

struct CommandStmt {
  std::string kind;
  std::vector<std::string> args;
  std::vector<std::string> flags;
  std::vector<std::pair<std::string, std::int64_t>> options;
  int line = 1;
  bool operator==(const CommandStmt& o) const;

  std::optional<std::int64_t> option(const std::string& key) const;
  bool has_flag(const std::string& key) const;
};

using Statement = std::variant<FieldStmt, RingStmt, IdealStmt, FiltrationStmt, CommandStmt>;

struct SessionScript {
  std::vector<Statement> statements;
  bool operator==(const SessionScript&) const = default;
};

// Grammar, one statement per line, '#' starts a comment:
//   field Fp 32003 | field QQ
//   ring R = poly(x,y,z) / (x*z, y*z, z^2) weights 1,1,1
//   ideal J in R = (x, y, z^2)
//   filtration F in R = adic(J) | closure(J)
//   coeffs R J [maxn=N]
//   closure J
//   hdeg R [rel J]
//   koszul R J
//   bounds R J [buchsbaum] [domain]
//   conjecture1 R J [domain]
//   reductions R J [trials=N] [seed=N]
//   compare R F G
SessionScript parse_session(const std::string& text);

// Canonical form; parse_session(print_session(s)) == s.
std::string print_session(const SessionScript& script);

struct RunOptions {
  std::optional<FieldStmt> field_override;
  std::uint64_t seed = 42;
  int maxdeg = PolyRing::kDefaultMaxWorkingDegree;
  bool want_tsv = false;
};

// exit_code: 0 clean, 3 a command hit a precondition violation, 4 a command
// exhausted a resource or genericity budget, 5 a fully-hypothesised bound
// failed or an applicable conjecture came out inconsistent.  Parse errors and
// internal errors propagate as exceptions (codes 2 and 1 at the CLI).
struct RunResult {
  std::string json;
  std::map<std::string, std::string> tsv;
  int exit_code = 0;
};

RunResult run_session(const SessionScript& script, const RunOptions& opts = {});

}  // namespace chernlab
