#include "chernlab/session.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

#include "chernlab/bounds.hpp"
#include "chernlab/lab.hpp"

namespace chernlab {

bool RingStmt::operator==(const RingStmt& o) const {
  return name == o.name && vars == o.vars && relations == o.relations && weights == o.weights;
}

bool IdealStmt::operator==(const IdealStmt& o) const {
  return name == o.name && ring == o.ring && gens == o.gens;
}

bool FiltrationStmt::operator==(const FiltrationStmt& o) const {
  return name == o.name && ring == o.ring && kind == o.kind && seed_ideal == o.seed_ideal;
}

bool CommandStmt::operator==(const CommandStmt& o) const {
  return kind == o.kind && args == o.args && flags == o.flags && options == o.options;
}

std::optional<std::int64_t> CommandStmt::option(const std::string& key) const {
  for (const auto& [k, v] : options)
    if (k == key) return v;
  return std::nullopt;
}

bool CommandStmt::has_flag(const std::string& key) const {
  return std::find(flags.begin(), flags.end(), key) != flags.end();
}

namespace {

struct CommandSpec {
  std::size_t min_args;
  std::size_t max_args;
  std::vector<std::string> flags;
  std::vector<std::string> options;
};

const std::vector<std::pair<std::string, CommandSpec>> kCommandSpecs = {
    {"coeffs", {2, 2, {}, {"maxn"}}},
    {"closure", {1, 1, {}, {}}},
    {"hdeg", {1, 2, {}, {}}},
    {"koszul", {2, 2, {}, {}}},
    {"bounds", {2, 2, {"buchsbaum", "domain"}, {}}},
    {"conjecture1", {2, 2, {"domain"}, {}}},
    {"reductions", {2, 2, {}, {"trials", "seed"}}},
    {"compare", {3, 3, {}, {}}},
};

const CommandSpec* command_spec(const std::string& kind) {
  for (const auto& [name, spec] : kCommandSpecs)
    if (name == kind) return &spec;
  return nullptr;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

class LineCursor {
public:
  LineCursor(const std::string& text, int line) : s_(text), line_(line) {}

  void skip_ws() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool try_consume(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
      ++i_;
    if (i_ == start || std::isdigit(static_cast<unsigned char>(s_[start])))
      fail("expected a name");
    return s_.substr(start, i_ - start);
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == start) fail("expected an integer");
    return std::stoll(s_.substr(start, i_ - start));
  }
  // Consumes a parenthesized group and returns the raw inside text.
  std::string group() {
    expect('(');
    std::size_t start = i_;
    int depth = 1;
    while (i_ < s_.size() && depth > 0) {
      if (s_[i_] == '(') ++depth;
      if (s_[i_] == ')') --depth;
      ++i_;
    }
    if (depth != 0) fail("unbalanced parentheses");
    return s_.substr(start, i_ - 1 - start);
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line_, static_cast<int>(i_) + 1);
  }
  int line() const { return line_; }

private:
  const std::string& s_;
  std::size_t i_ = 0;
  int line_;
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_group(const std::string& text, LineCursor& cur) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  std::string last = trim(current);
  if (!last.empty()) parts.push_back(last);
  for (const auto& p : parts)
    if (p.empty()) cur.fail("empty entry in list");
  return parts;
}

// Declared-name bookkeeping used to turn undefined references into parse
// errors with a line number.
struct ParseScope {
  std::vector<std::string> rings;
  std::vector<std::string> ideals;
  std::vector<std::string> filtrations;
  std::map<std::string, std::string> owner;  // ideal/filtration -> ring

  bool taken(const std::string& n) const {
    return contains(rings, n) || contains(ideals, n) || contains(filtrations, n);
  }
};

void require_fresh(const std::string& name, const ParseScope& scope, LineCursor& cur) {
  if (scope.taken(name)) cur.fail("name already declared: " + name);
}

void require_ring(const std::string& name, const ParseScope& scope, LineCursor& cur) {
  if (!contains(scope.rings, name)) cur.fail("undeclared ring: " + name);
}

void require_ideal_in(const std::string& name, const std::string& ring, const ParseScope& scope,
                      LineCursor& cur) {
  if (!contains(scope.ideals, name)) cur.fail("undeclared ideal: " + name);
  if (scope.owner.at(name) != ring) cur.fail("ideal " + name + " does not live in " + ring);
}

void require_filtration_in(const std::string& name, const std::string& ring,
                           const ParseScope& scope, LineCursor& cur) {
  if (!contains(scope.filtrations, name)) cur.fail("undeclared filtration: " + name);
  if (scope.owner.at(name) != ring) cur.fail("filtration " + name + " does not live in " + ring);
}

CommandStmt parse_command(const std::string& kind, LineCursor& cur, const ParseScope& scope) {
  const CommandSpec* spec = command_spec(kind);
  CommandStmt cmd;
  cmd.kind = kind;
  cmd.line = cur.line();
  while (!cur.at_end()) {
    std::string word = cur.ident();
    if (kind == "hdeg" && word == "rel") {
      cmd.args.push_back(cur.ident());
      continue;
    }
    if (cur.try_consume('=')) {
      if (!contains(spec->options, word)) cur.fail("unknown option: " + word);
      cmd.options.emplace_back(word, cur.integer());
      continue;
    }
    if (contains(spec->flags, word)) {
      cmd.flags.push_back(word);
      continue;
    }
    cmd.args.push_back(word);
  }
  if (cmd.args.size() < spec->min_args || cmd.args.size() > spec->max_args)
    cur.fail(kind + " takes " + std::to_string(spec->min_args) +
             (spec->min_args == spec->max_args
                  ? ""
                  : " to " + std::to_string(spec->max_args)) +
             " name arguments");

  if (kind == "closure") {
    if (!contains(scope.ideals, cmd.args[0])) cur.fail("undeclared ideal: " + cmd.args[0]);
    return cmd;
  }
  require_ring(cmd.args[0], scope, cur);
  if (kind == "coeffs") {
    const std::string& target = cmd.args[1];
    if (contains(scope.filtrations, target))
      require_filtration_in(target, cmd.args[0], scope, cur);
    else
      require_ideal_in(target, cmd.args[0], scope, cur);
  } else if (kind == "compare") {
    require_filtration_in(cmd.args[1], cmd.args[0], scope, cur);
    require_filtration_in(cmd.args[2], cmd.args[0], scope, cur);
  } else if (cmd.args.size() > 1) {
    require_ideal_in(cmd.args[1], cmd.args[0], scope, cur);
  }
  return cmd;
}

}  // namespace

SessionScript parse_session(const std::string& text) {
  SessionScript script;
  ParseScope scope;
  bool saw_ring = false;
  bool saw_field = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) continue;
    LineCursor cur(raw, lineno);
    std::string head = cur.ident();

    if (head == "field") {
      if (saw_field) cur.fail("duplicate field declaration");
      if (saw_ring) cur.fail("field must be declared before any ring");
      saw_field = true;
      FieldStmt f;
      std::string which = cur.ident();
      if (which == "QQ") {
        f.rational = true;
      } else if (which == "Fp") {
        f.rational = false;
        f.p = static_cast<std::uint64_t>(cur.integer());
        if (f.p < 2) cur.fail("prime must be at least 2");
      } else {
        cur.fail("expected Fp or QQ");
      }
      if (!cur.at_end()) cur.fail("trailing text after field declaration");
      script.statements.push_back(f);
    } else if (head == "ring") {
      saw_ring = true;
      RingStmt r;
      r.line = lineno;
      r.name = cur.ident();
      require_fresh(r.name, scope, cur);
      cur.expect('=');
      if (cur.ident() != "poly") cur.fail("expected poly(...)");
      r.vars = split_group(cur.group(), cur);
      if (r.vars.empty()) cur.fail("a ring needs at least one variable");
      if (cur.try_consume('/')) r.relations = split_group(cur.group(), cur);
      if (!cur.at_end()) {
        if (cur.ident() != "weights") cur.fail("expected weights or end of line");
        r.weights.push_back(cur.integer());
        while (cur.try_consume(',')) r.weights.push_back(cur.integer());
        if (r.weights.size() != r.vars.size())
          cur.fail("weights count does not match variable count");
        for (auto w : r.weights)
          if (w < 1) cur.fail("weights must be positive");
      }
      if (!cur.at_end()) cur.fail("trailing text after ring declaration");
      scope.rings.push_back(r.name);
      script.statements.push_back(std::move(r));
    } else if (head == "ideal") {
      IdealStmt s;
      s.line = lineno;
      s.name = cur.ident();
      require_fresh(s.name, scope, cur);
      if (cur.ident() != "in") cur.fail("expected in");
      s.ring = cur.ident();
      require_ring(s.ring, scope, cur);
      cur.expect('=');
      s.gens = split_group(cur.group(), cur);
      if (!cur.at_end()) cur.fail("trailing text after ideal declaration");
      scope.ideals.push_back(s.name);
      scope.owner[s.name] = s.ring;
      script.statements.push_back(std::move(s));
    } else if (head == "filtration") {
      FiltrationStmt s;
      s.line = lineno;
      s.name = cur.ident();
      require_fresh(s.name, scope, cur);
      if (cur.ident() != "in") cur.fail("expected in");
      s.ring = cur.ident();
      require_ring(s.ring, scope, cur);
      cur.expect('=');
      s.kind = cur.ident();
      if (s.kind != "adic" && s.kind != "closure") cur.fail("expected adic(...) or closure(...)");
      auto inner = split_group(cur.group(), cur);
      if (inner.size() != 1) cur.fail("expected a single ideal name");
      s.seed_ideal = inner[0];
      require_ideal_in(s.seed_ideal, s.ring, scope, cur);
      if (!cur.at_end()) cur.fail("trailing text after filtration declaration");
      scope.filtrations.push_back(s.name);
      scope.owner[s.name] = s.ring;
      script.statements.push_back(std::move(s));
    } else if (command_spec(head)) {
      script.statements.push_back(parse_command(head, cur, scope));
    } else {
      cur.fail("unknown statement: " + head);
    }
  }
  return script;
}

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string print_session(const SessionScript& script) {
  std::ostringstream out;
  for (const auto& stmt : script.statements) {
    if (const auto* f = std::get_if<FieldStmt>(&stmt)) {
      if (f->rational)
        out << "field QQ\n";
      else
        out << "field Fp " << f->p << "\n";
    } else if (const auto* r = std::get_if<RingStmt>(&stmt)) {
      out << "ring " << r->name << " = poly(" << join(r->vars, ",") << ")";
      if (!r->relations.empty()) out << " / (" << join(r->relations, ", ") << ")";
      if (!r->weights.empty()) {
        out << " weights ";
        for (std::size_t i = 0; i < r->weights.size(); ++i)
          out << (i ? "," : "") << r->weights[i];
      }
      out << "\n";
    } else if (const auto* s = std::get_if<IdealStmt>(&stmt)) {
      out << "ideal " << s->name << " in " << s->ring << " = (" << join(s->gens, ", ") << ")\n";
    } else if (const auto* fl = std::get_if<FiltrationStmt>(&stmt)) {
      out << "filtration " << fl->name << " in " << fl->ring << " = " << fl->kind << "("
          << fl->seed_ideal << ")\n";
    } else if (const auto* c = std::get_if<CommandStmt>(&stmt)) {
      out << c->kind;
      if (c->kind == "hdeg") {
        out << " " << c->args[0];
        if (c->args.size() > 1) out << " rel " << c->args[1];
      } else {
        for (const auto& a : c->args) out << " " << a;
      }
      for (const auto& flag : c->flags) out << " " << flag;
      for (const auto& [k, v] : c->options) out << " " << k << "=" << v;
      out << "\n";
    }
  }
  return out.str();
}

namespace {

using OJson = nlohmann::ordered_json;

std::string s64(std::int64_t v) { return std::to_string(v); }

OJson str_array(const std::vector<std::int64_t>& v) {
  OJson a = OJson::array();
  for (auto x : v) a.push_back(s64(x));
  return a;
}

std::string tsv_table(const HilbertSamuelTable& t) {
  std::ostringstream out;
  out << "n\tlength\tdiff\n";
  for (std::size_t n = 0; n < t.lengths.size(); ++n) {
    std::int64_t diff = n ? t.lengths[n] - t.lengths[n - 1] : t.lengths[0];
    out << n << '\t' << t.lengths[n] << '\t' << diff << '\n';
  }
  return out.str();
}

OJson degree_nodes(const DegreeNode& node, const std::string& path, std::int64_t weight) {
  OJson list = OJson::array();
  std::string here = path.empty() ? node.label : path + "." + node.label;
  OJson entry;
  entry["label"] = here;
  entry["dim"] = s64(node.dim);
  entry["base"] = s64(node.base);
  entry["hdeg"] = s64(node.hdeg);
  entry["weight"] = s64(weight);
  list.push_back(std::move(entry));
  for (const auto& [w, child] : node.ext)
    for (auto& sub : degree_nodes(child, here, w)) list.push_back(std::move(sub));
  return list;
}

struct Runner {
  const SessionScript& script;
  const RunOptions& opts;

  FieldStmt field_decl;
  std::map<std::string, PRingP> rings;
  std::map<std::string, RingIdeal> ideals;
  std::map<std::string, std::string> ideal_ring;
  std::map<std::string, GoodFiltration> filts;

  OJson instances = OJson::array();
  std::map<std::string, std::size_t> instance_index;
  std::map<std::string, std::string> tsv;
  int worst = 0;

  Runner(const SessionScript& sc, const RunOptions& op) : script(sc), opts(op) {
    if (opts.field_override) field_decl = *opts.field_override;
  }

  Field field() const {
    return field_decl.rational ? Field::rationals()
                               : Field::prime(static_cast<std::uint32_t>(field_decl.p));
  }

  void raise(int code) { worst = std::max(worst, code); }

  OJson& results_for(const std::string& ring_name) {
    auto it = instance_index.find(ring_name);
    if (it == instance_index.end()) {
      OJson inst;
      inst["name"] = ring_name;
      inst["ring"] = describe_presented_ring(rings.at(ring_name));
      inst["results"] = OJson::array();
      instance_index[ring_name] = instances.size();
      instances.push_back(std::move(inst));
      it = instance_index.find(ring_name);
    }
    return instances[it->second]["results"];
  }

  void declare_ring(const RingStmt& stmt) {
    std::vector<int> weights;
    for (auto w : stmt.weights) weights.push_back(static_cast<int>(w));
    RingP S = PolyRing::make(field(), stmt.vars, weights, MonomialOrder::Kind::grevlex,
                             opts.maxdeg);
    if (stmt.relations.empty()) {
      rings.emplace(stmt.name, PresentedRing::polynomial_ring(S));
      return;
    }
    std::vector<Polynomial> rels;
    for (const auto& text : stmt.relations)
      rels.push_back(parse_polynomial(S, text, stmt.line));
    rings.emplace(stmt.name, PresentedRing::quotient(S, std::move(rels)));
  }

  void declare_ideal(const IdealStmt& stmt) {
    const PRingP& R = rings.at(stmt.ring);
    std::vector<Polynomial> gens;
    for (const auto& text : stmt.gens)
      gens.push_back(parse_polynomial(R->ambient(), text, stmt.line));
    ideals.emplace(stmt.name, RingIdeal(R, std::move(gens)));
    ideal_ring[stmt.name] = stmt.ring;
  }

  void declare_filtration(const FiltrationStmt& stmt) {
    const RingIdeal& seed = ideals.at(stmt.seed_ideal);
    filts.emplace(stmt.name, stmt.kind == "adic" ? GoodFiltration::adic(seed)
                                                 : GoodFiltration::closure_powers(seed));
  }

  void emit(const std::string& ring_name, OJson result) {
    if (!result.contains("provenance")) result["provenance"] = "derived";
    results_for(ring_name).push_back(std::move(result));
  }

  // Wraps one command body so precondition and resource problems become
  // recorded results with the documented exit codes instead of aborts.
  template <typename Fn>
  void guarded(const std::string& ring_name, OJson base, Fn&& body) {
    try {
      body(base);
    } catch (const PreconditionError& e) {
      base["error"] = e.what();
      base["verdict"] = "error";
      raise(3);
    } catch (const DomainError& e) {
      base["error"] = e.what();
      base["verdict"] = "error";
      raise(3);
    } catch (const ResourceError& e) {
      base["error"] = e.what();
      base["verdict"] = "error";
      raise(4);
    }
    emit(ring_name, std::move(base));
  }

  void run_coeffs(const CommandStmt& cmd) {
    const std::string& ring_name = cmd.args[0];
    const std::string& target = cmd.args[1];
    OJson base;
    base["kind"] = "coeffs";
    auto fit = filts.find(target);
    base["inputs"] = {{"ring", ring_name},
                      {"target", target},
                      {"filtration", fit != filts.end() ? fit->second.kind() : "adic"}};
    if (auto maxn = cmd.option("maxn")) base["inputs"]["maxn"] = s64(*maxn);
    guarded(ring_name, std::move(base), [&](OJson& result) {
      const GoodFiltration F =
          fit != filts.end() ? fit->second : GoodFiltration::adic(ideals.at(target));
      auto cc = chern_coefficients(F);
      HilbertSamuelTable table = cc.table;
      if (auto maxn = cmd.option("maxn"))
        if (*maxn + 1 > static_cast<std::int64_t>(table.lengths.size()))
          table = hs_table(F, static_cast<int>(*maxn));
      result["values"] = {{"e", str_array(cc.e)},
                          {"n0", s64(cc.n0)},
                          {"lengths", str_array(table.lengths)}};
      result["verdict"] = "ok";
      if (opts.want_tsv) tsv[ring_name + "." + target + ".tsv"] = tsv_table(table);
    });
  }

  void run_closure(const CommandStmt& cmd) {
    const std::string& ideal_name = cmd.args[0];
    const std::string ring_name = ideal_ring.at(ideal_name);
    OJson base;
    base["kind"] = "closure";
    base["inputs"] = {{"ring", ring_name}, {"ideal", ideal_name}};
    guarded(ring_name, std::move(base), [&](OJson& result) {
      const RingIdeal& I = ideals.at(ideal_name);
      RingIdeal closed = integral_closure_power(I, 1);
      OJson gens = OJson::array();
      for (const auto& g : closed.gens()) gens.push_back(g.to_string());
      auto cc = chern_coefficients(GoodFiltration::closure_powers(I));
      result["values"] = {{"generators", std::move(gens)},
                          {"e", str_array(cc.e)},
                          {"n0", s64(cc.n0)}};
      result["verdict"] = "ok";
    });
  }

  void run_hdeg(const CommandStmt& cmd) {
    const std::string& ring_name = cmd.args[0];
    OJson base;
    base["kind"] = "hdeg";
    base["inputs"] = {{"ring", ring_name}};
    if (cmd.args.size() > 1) base["inputs"]["rel"] = cmd.args[1];
    guarded(ring_name, std::move(base), [&](OJson& result) {
      PModule M = PModule::ring_quotient(rings.at(ring_name));
      DegreeReport rep = cmd.args.size() > 1 ? hdeg_report(M, ideals.at(cmd.args[1]))
                                             : hdeg_report(M);
      result["values"] = {{"relative", rep.relative ? "true" : "false"},
                          {"deg", s64(rep.deg)},
                          {"hdeg", s64(rep.hdeg)},
                          {"nodes", degree_nodes(rep.root, "", 1)}};
      result["verdict"] = "ok";
    });
  }

  void run_koszul(const CommandStmt& cmd) {
    const std::string& ring_name = cmd.args[0];
    OJson base;
    base["kind"] = "koszul";
    base["inputs"] = {{"ring", ring_name}, {"ideal", cmd.args[1]}};
    guarded(ring_name, std::move(base), [&](OJson& result) {
      const PRingP& R = rings.at(ring_name);
      const RingIdeal& J = ideals.at(cmd.args[1]);
      auto h = koszul_homology_lengths(J);
      const std::int64_t lam = J.length();
      auto cc = chern_coefficients(GoodFiltration::adic(J));
      const std::int64_t chi = koszul_chi(h);
      const std::int64_t corr = koszul_correction(h);
      const bool dseq = is_d_sequence(R, J.gens());
      const std::int64_t e1f = koszul_e1(h);
      bool ok = cc.e[0] == lam - corr;
      result["values"] = {{"h", str_array(h)},
                          {"colength", s64(lam)},
                          {"euler", s64(chi)},
                          {"correction", s64(corr)},
                          {"e0", s64(cc.e[0])},
                          {"d_sequence", dseq ? "true" : "false"},
                          {"e1_formula", s64(e1f)}};
      if (cc.e.size() > 1) {
        result["values"]["e1"] = s64(cc.e[1]);
        if (dseq) ok = ok && cc.e[1] == e1f;
      }
      result["verdict"] = ok ? "consistent" : "inconsistent";
      if (!ok) raise(5);
    });
  }

  void run_bounds(const CommandStmt& cmd) {
    const std::string& ring_name = cmd.args[0];
    SuiteFlags fl;
    fl.buchsbaum = cmd.has_flag("buchsbaum");
    fl.domain = cmd.has_flag("domain");
    fl.seed = opts.seed;
    std::vector<BoundReport> reports;
    OJson base;
    base["kind"] = "bounds";
    base["inputs"] = {{"ring", ring_name}, {"ideal", cmd.args[1]}};
    try {
      reports = bound_suite(rings.at(ring_name), ideals.at(cmd.args[1]), fl);
    } catch (const PreconditionError& e) {
      base["error"] = e.what();
      base["verdict"] = "error";
      raise(3);
      emit(ring_name, std::move(base));
      return;
    } catch (const ResourceError& e) {
      base["error"] = e.what();
      base["verdict"] = "error";
      raise(4);
      emit(ring_name, std::move(base));
      return;
    }
    for (const auto& rep : reports) {
      OJson result;
      result["kind"] = "bound";
      result["inputs"] = {{"ring", ring_name}, {"ideal", cmd.args[1]}, {"bound", rep.name}};
      if (fl.buchsbaum) result["inputs"]["buchsbaum"] = "true";
      if (fl.domain) result["inputs"]["domain"] = "true";
      OJson hyps = OJson::array();
      for (const auto& h : rep.hypotheses)
        hyps.push_back({{"name", h.name}, {"satisfied", h.satisfied ? "true" : "false"}});
      OJson values;
      values["relation"] = rep.relation;
      if (rep.lhs) values["lhs"] = s64(*rep.lhs);
      if (rep.rhs) values["rhs"] = s64(*rep.rhs);
      values["hypotheses"] = std::move(hyps);
      for (const auto& [k, v] : rep.data) values[k] = v;
      result["values"] = std::move(values);
      result["verdict"] = to_string(rep.verdict);
      if (rep.verdict == BoundVerdict::fails) raise(5);
      emit(ring_name, std::move(result));
    }
  }

  void run_conjecture1(const CommandStmt& cmd) {
    const std::string& ring_name = cmd.args[0];
    OJson base;
    base["kind"] = "conjecture1";
    base["inputs"] = {{"ring", ring_name},
                      {"ideal", cmd.args[1]},
                      {"applicable", cmd.has_flag("domain") ? "true" : "false"}};
    guarded(ring_name, std::move(base), [&](OJson& result) {
      ConjectureVerdict v = conjecture1_check(rings.at(ring_name), ideals.at(cmd.args[1]),
                                              cmd.has_flag("domain"), ring_name);
      OJson values;
      for (const auto& [k, val] : v.evidence) values[k] = val;
      result["values"] = std::move(values);
      result["verdict"] = v.verdict;
      if (v.verdict == "inconsistent") raise(5);
    });
  }

  void run_reductions(const CommandStmt& cmd) {
    const std::string& ring_name = cmd.args[0];
    const int trials = static_cast<int>(cmd.option("trials").value_or(10));
    const std::uint64_t seed =
        static_cast<std::uint64_t>(cmd.option("seed").value_or(static_cast<std::int64_t>(opts.seed)));
    OJson base;
    base["kind"] = "reductions";
    base["inputs"] = {{"ring", ring_name},
                      {"ideal", cmd.args[1]},
                      {"trials", s64(trials)},
                      {"seed", s64(static_cast<std::int64_t>(seed))}};
    guarded(ring_name, std::move(base), [&](OJson& result) {
      ReductionExperiment ex =
          reduction_e1_experiment(rings.at(ring_name), ideals.at(cmd.args[1]), trials, seed);
      OJson outcomes = OJson::array();
      for (const auto& t : ex.trials) {
        if (t.failed)
          outcomes.push_back({{"error", t.error}});
        else
          outcomes.push_back({{"e", str_array(t.e)}, {"retries", s64(t.retries)}});
      }
      result["values"] = {{"failures", s64(ex.failures)},
                          {"all_agree", ex.all_agree ? "true" : "false"},
                          {"outcomes", std::move(outcomes)}};
      if (ex.failures == static_cast<int>(ex.trials.size())) {
        result["verdict"] = "exhausted";
        raise(4);
      } else {
        result["verdict"] = ex.all_agree ? "agree" : "varies";
      }
    });
  }

  void run_compare(const CommandStmt& cmd) {
    const std::string& ring_name = cmd.args[0];
    OJson base;
    base["kind"] = "compare";
    base["inputs"] = {{"ring", ring_name}, {"first", cmd.args[1]}, {"second", cmd.args[2]}};
    guarded(ring_name, std::move(base), [&](OJson& result) {
      FiltrationComparison cmp =
          compare_filtrations(filts.at(cmd.args[1]), filts.at(cmd.args[2]));
      result["values"] = {
          {"contained", cmp.contained ? "true" : "false"},
          {"first_length_difference",
           cmp.first_length_difference < 0 ? std::string("none")
                                           : s64(cmp.first_length_difference)},
          {"e_inner", str_array(cmp.inner.e)},
          {"e_outer", str_array(cmp.outer.e)}};
      result["verdict"] = "ok";
    });
  }

  RunResult run() {
    for (const auto& stmt : script.statements) {
      if (const auto* f = std::get_if<FieldStmt>(&stmt)) {
        if (!opts.field_override) field_decl = *f;
      } else if (const auto* r = std::get_if<RingStmt>(&stmt)) {
        declare_ring(*r);
      } else if (const auto* s = std::get_if<IdealStmt>(&stmt)) {
        declare_ideal(*s);
      } else if (const auto* fl = std::get_if<FiltrationStmt>(&stmt)) {
        declare_filtration(*fl);
      } else if (const auto* c = std::get_if<CommandStmt>(&stmt)) {
        if (c->kind == "coeffs") run_coeffs(*c);
        else if (c->kind == "closure") run_closure(*c);
        else if (c->kind == "hdeg") run_hdeg(*c);
        else if (c->kind == "koszul") run_koszul(*c);
        else if (c->kind == "bounds") run_bounds(*c);
        else if (c->kind == "conjecture1") run_conjecture1(*c);
        else if (c->kind == "reductions") run_reductions(*c);
        else if (c->kind == "compare") run_compare(*c);
        else throw InternalError("unhandled command: " + c->kind);
      }
    }
    OJson root;
    root["version"] = kChernlabVersion;
    root["seed"] = s64(static_cast<std::int64_t>(opts.seed));
    root["field"] = field_decl.rational ? std::string("QQ")
                                        : "Fp(" + std::to_string(field_decl.p) + ")";
    root["instances"] = std::move(instances);
    RunResult out;
    out.json = root.dump(2) + "\n";
    out.tsv = std::move(tsv);
    out.exit_code = worst;
    return out;
  }
};

}  // namespace

RunResult run_session(const SessionScript& script, const RunOptions& opts) {
  Runner runner(script, opts);
  return runner.run();
}

}  // namespace chernlab
