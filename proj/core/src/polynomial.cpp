#include "chernlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chernlab {

RingP PolyRing::make(Field field, std::vector<std::string> names, std::vector<int> weights,
                     MonomialOrder::Kind order_kind, int max_working_degree) {
  if (weights.empty()) weights.assign(names.size(), 1);
  MonomialOrder ord = order_kind == MonomialOrder::Kind::lex
                          ? MonomialOrder::make_lex(static_cast<int>(names.size()))
                          : MonomialOrder::make_grevlex(weights);
  return make_with_order(field, std::move(names), std::move(weights), std::move(ord),
                         max_working_degree);
}

RingP PolyRing::make_with_order(Field field, std::vector<std::string> names,
                                std::vector<int> weights, MonomialOrder order,
                                int max_working_degree) {
  if (names.empty()) throw DomainError("a polynomial ring needs at least one variable");
  if (weights.size() != names.size())
    throw DomainError("one grading weight per variable required");
  for (int w : weights)
    if (w <= 0) throw DomainError("grading weights must be positive");
  if (order.nvars() != static_cast<int>(names.size()))
    throw ContextError("order arity does not match the variable count");
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw DomainError("duplicate variable name " + names[i]);
  return RingP(new PolyRing(field, std::move(names), std::move(weights), std::move(order),
                            max_working_degree));
}

int PolyRing::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

bool PolyRing::compatible(const PolyRing& o) const {
  return field_ == o.field_ && names_ == o.names_ && weights_ == o.weights_ &&
         order_ == o.order_;
}

void PolyRing::check_degree(std::int64_t d) const {
  if (d > max_working_degree_)
    throw ResourceError("working degree " + std::to_string(d) + " exceeds the budget of " +
                        std::to_string(max_working_degree_) +
                        " (raise --maxdeg / CHERNLAB_MAXDEG)");
}

void require_same_ring(const RingP& a, const RingP& b) {
  if (a == b) return;
  if (!a || !b || !a->compatible(*b))
    throw ContextError("operands live in different rings");
}

Polynomial Polynomial::constant(RingP ring, Scalar c) {
  Polynomial f(ring);
  if (!ring->field().is_zero(c)) f.t_.push_back({std::move(c), Monomial(ring->nvars())});
  return f;
}

Polynomial Polynomial::from_int(RingP ring, long long n) {
  return constant(ring, ring->field().from_int(n));
}

Polynomial Polynomial::variable(RingP ring, int i) {
  if (i < 0 || i >= ring->nvars()) throw DomainError("variable index out of range");
  Monomial m(ring->nvars());
  m[i] = 1;
  Scalar one = ring->field().one();
  return from_monomial(std::move(ring), std::move(one), std::move(m));
}

Polynomial Polynomial::from_monomial(RingP ring, Scalar c, Monomial m) {
  if (m.nvars() != ring->nvars()) throw ContextError("monomial arity mismatch");
  Polynomial f(ring);
  if (!ring->field().is_zero(c)) f.t_.push_back({std::move(c), std::move(m)});
  return f;
}

Polynomial Polynomial::from_terms(RingP ring, std::vector<Term> terms) {
  const auto& ord = ring->order();
  const auto& field = ring->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
  Polynomial f(ring);
  for (auto& t : terms) {
    if (t.m.nvars() != ring->nvars()) throw ContextError("monomial arity mismatch");
    if (!f.t_.empty() && f.t_.back().m == t.m) {
      f.t_.back().c = field.add(f.t_.back().c, t.c);
      if (field.is_zero(f.t_.back().c)) f.t_.pop_back();
    } else if (!field.is_zero(t.c)) {
      f.t_.push_back(std::move(t));
    }
  }
  return f;
}

const Term& Polynomial::lt() const {
  if (t_.empty()) throw DomainError("leading term of the zero polynomial");
  return t_[0];
}

std::int64_t Polynomial::degree() const {
  std::int64_t d = -1;
  for (const auto& t : t_) d = std::max(d, t.m.degree(ring_->weights()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (t_.empty()) return true;
  std::int64_t d = t_[0].m.degree(ring_->weights());
  for (const auto& t : t_)
    if (t.m.degree(ring_->weights()) != d) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  const auto& field = ring_->field();
  const auto& ord = ring_->order();
  Polynomial r(ring_);
  r.t_.reserve(t_.size() + g.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() && j < g.t_.size()) {
    int c = ord.compare(t_[i].m, g.t_[j].m);
    if (c > 0) {
      r.t_.push_back(t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(g.t_[j++]);
    } else {
      Scalar s = field.add(t_[i].c, g.t_[j].c);
      if (!field.is_zero(s)) r.t_.push_back({std::move(s), t_[i].m});
      ++i;
      ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < g.t_.size(); ++j) r.t_.push_back(g.t_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + g.negated(); }

Polynomial Polynomial::negated() const {
  const auto& field = ring_->field();
  Polynomial r(ring_);
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({field.neg(t.c), t.m});
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  const auto& field = ring_->field();
  if (field.is_zero(c)) return zero(ring_);
  Polynomial r(ring_);
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({field.mul(t.c, c), t.m});
  return r;
}

Polynomial Polynomial::mul_term(const Scalar& c, const Monomial& m) const {
  const auto& field = ring_->field();
  if (field.is_zero(c)) return zero(ring_);
  Polynomial r(ring_);
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({field.mul(t.c, c), t.m * m});
  return r;
}

Polynomial Polynomial::axpy_sub(const Scalar& c, const Monomial& m, const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  const auto& field = ring_->field();
  const auto& ord = ring_->order();
  Polynomial r(ring_);
  r.t_.reserve(t_.size() + g.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() && j < g.t_.size()) {
    Monomial gm = g.t_[j].m * m;
    int cmp = ord.compare(t_[i].m, gm);
    if (cmp > 0) {
      r.t_.push_back(t_[i++]);
    } else if (cmp < 0) {
      r.t_.push_back({field.neg(field.mul(c, g.t_[j].c)), std::move(gm)});
      ++j;
    } else {
      Scalar s = field.sub(t_[i].c, field.mul(c, g.t_[j].c));
      if (!field.is_zero(s)) r.t_.push_back({std::move(s), t_[i].m});
      ++i;
      ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < g.t_.size(); ++j)
    r.t_.push_back({field.neg(field.mul(c, g.t_[j].c)), g.t_[j].m * m});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  if (is_zero() || g.is_zero()) return zero(ring_);
  // Accumulate smaller-into-larger with the merge primitive.
  const Polynomial* a = this;
  const Polynomial* b = &g;
  if (a->t_.size() > b->t_.size()) std::swap(a, b);
  const auto& field = ring_->field();
  Polynomial acc = zero(ring_);
  for (const auto& t : a->t_) acc = acc.axpy_sub(field.neg(t.c), t.m, *b);
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lc()));
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= ring_->nvars()) throw DomainError("variable index out of range");
  const auto& field = ring_->field();
  std::vector<Term> out;
  for (const auto& t : t_) {
    if (t.m[var] == 0) continue;
    Term d;
    d.c = field.mul(t.c, field.from_int(t.m[var]));
    d.m = t.m;
    d.m[var] -= 1;
    if (!field.is_zero(d.c)) out.push_back(std::move(d));
  }
  return from_terms(ring_, std::move(out));
}

bool Polynomial::equals(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  if (t_.size() != g.t_.size()) return false;
  const auto& field = ring_->field();
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].m != g.t_[i].m || !field.equal(t_[i].c, g.t_[i].c)) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  const auto& field = ring_->field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    std::string c = field.to_string(t.c);
    bool neg = !c.empty() && c[0] == '-';
    if (first) {
      if (neg) os << "-", c = c.substr(1);
    } else {
      os << (neg ? " - " : " + ");
      if (neg) c = c.substr(1);
    }
    first = false;
    bool unit_coeff = (c == "1");
    bool printed = false;
    if (!unit_coeff || t.m.is_one()) {
      os << c;
      printed = true;
    }
    for (int v = 0; v < ring_->nvars(); ++v) {
      if (t.m[v] == 0) continue;
      if (printed) os << "*";
      os << ring_->name(v);
      if (t.m[v] > 1) os << "^" << t.m[v];
      printed = true;
    }
  }
  return os.str();
}

Polynomial poly_pow(const Polynomial& f, int k) {
  if (k < 0) throw DomainError("negative polynomial power");
  Polynomial r = Polynomial::from_int(f.ring(), 1);
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

Polynomial remap(const Polynomial& f, const RingP& target, const std::vector<int>& var_map) {
  if (static_cast<int>(var_map.size()) != f.ring()->nvars())
    throw DomainError("variable map arity mismatch");
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (int i = 0; i < f.ring()->nvars(); ++i) {
      if (t.m[i] == 0) continue;
      int j = var_map[i];
      if (j < 0 || j >= target->nvars()) throw DomainError("variable map target out of range");
      m[j] += t.m[i];
    }
    Scalar c = f.ring()->field().kind() == FieldKind::prime_field
                   ? target->field().from_int(static_cast<long long>(t.c.fp))
                   : target->field().from_mpq(t.c.rat);
    out.push_back({std::move(c), std::move(m)});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial substitute(const Polynomial& f, const RingP& target,
                      const std::vector<Polynomial>& images) {
  if (static_cast<int>(images.size()) != f.ring()->nvars())
    throw DomainError("one image per source variable required");
  Polynomial acc = Polynomial::zero(target);
  for (const auto& t : f.terms()) {
    Scalar c = f.ring()->field().kind() == FieldKind::prime_field
                   ? target->field().from_int(static_cast<long long>(t.c.fp))
                   : target->field().from_mpq(t.c.rat);
    Polynomial prod = Polynomial::constant(target, c);
    for (int i = 0; i < f.ring()->nvars(); ++i)
      if (t.m[i] > 0) prod = prod * poly_pow(images[i], t.m[i]);
    acc = acc + prod;
  }
  return acc;
}

namespace {

struct PToken {
  enum class Kind { integer, ident, plus, minus, star, caret, slash, lparen, rparen, end };
  Kind kind;
  std::string text;
  int column;
};

class PolyLexer {
public:
  PolyLexer(const std::string& s, int line) : s_(s), line_(line) { advance(); }
  const PToken& peek() const { return tok_; }
  PToken take() {
    PToken t = tok_;
    advance();
    return t;
  }
  int line() const { return line_; }

private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    tok_.column = static_cast<int>(pos_) + 1;
    if (pos_ >= s_.size()) {
      tok_.kind = PToken::Kind::end;
      tok_.text.clear();
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok_.kind = PToken::Kind::integer;
      tok_.text = s_.substr(start, pos_ - start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_'))
        ++pos_;
      tok_.kind = PToken::Kind::ident;
      tok_.text = s_.substr(start, pos_ - start);
      return;
    }
    ++pos_;
    tok_.text = std::string(1, c);
    switch (c) {
      case '+': tok_.kind = PToken::Kind::plus; return;
      case '-': tok_.kind = PToken::Kind::minus; return;
      case '*': tok_.kind = PToken::Kind::star; return;
      case '^': tok_.kind = PToken::Kind::caret; return;
      case '/': tok_.kind = PToken::Kind::slash; return;
      case '(': tok_.kind = PToken::Kind::lparen; return;
      case ')': tok_.kind = PToken::Kind::rparen; return;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'", line_,
                         tok_.column);
    }
  }

  const std::string& s_;
  int line_;
  size_t pos_ = 0;
  PToken tok_;
};

class PolyParser {
public:
  PolyParser(RingP ring, const std::string& s, int line) : ring_(std::move(ring)), lex_(s, line) {}

  Polynomial parse() {
    Polynomial p = parse_sum();
    if (lex_.peek().kind != PToken::Kind::end)
      throw ParseError("trailing input after polynomial", lex_.line(), lex_.peek().column);
    return p;
  }

private:
  Polynomial parse_sum() {
    bool neg = false;
    if (lex_.peek().kind == PToken::Kind::minus) {
      lex_.take();
      neg = true;
    } else if (lex_.peek().kind == PToken::Kind::plus) {
      lex_.take();
    }
    Polynomial acc = parse_product();
    if (neg) acc = acc.negated();
    while (lex_.peek().kind == PToken::Kind::plus || lex_.peek().kind == PToken::Kind::minus) {
      bool minus = lex_.take().kind == PToken::Kind::minus;
      Polynomial t = parse_product();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial parse_product() {
    Polynomial acc = parse_factor();
    while (lex_.peek().kind == PToken::Kind::star) {
      lex_.take();
      acc = acc * parse_factor();
    }
    return acc;
  }

  Polynomial parse_factor() {
    const PToken t = lex_.take();
    Polynomial base = Polynomial::zero(ring_);
    switch (t.kind) {
      case PToken::Kind::integer: {
        long long num = std::stoll(t.text);
        if (lex_.peek().kind == PToken::Kind::slash) {
          lex_.take();
          const PToken d = lex_.take();
          if (d.kind != PToken::Kind::integer)
            throw ParseError("expected denominator after '/'", lex_.line(), d.column);
          if (ring_->field().kind() != FieldKind::rationals)
            throw ParseError("rational literal in a prime-field context", lex_.line(),
                             t.column);
          base = Polynomial::constant(ring_,
                                      ring_->field().from_fraction(num, std::stoll(d.text)));
        } else {
          base = Polynomial::from_int(ring_, num);
        }
        break;
      }
      case PToken::Kind::ident: {
        int v = ring_->var_index(t.text);
        if (v < 0)
          throw ParseError("unknown variable '" + t.text + "'", lex_.line(), t.column);
        Monomial m(ring_->nvars());
        m[v] = 1;
        base = Polynomial::from_monomial(ring_, ring_->field().one(), std::move(m));
        break;
      }
      case PToken::Kind::lparen: {
        base = parse_sum();
        const PToken r = lex_.take();
        if (r.kind != PToken::Kind::rparen)
          throw ParseError("expected ')'", lex_.line(), r.column);
        break;
      }
      default:
        throw ParseError("expected a coefficient, variable or '('", lex_.line(), t.column);
    }
    if (lex_.peek().kind == PToken::Kind::caret) {
      lex_.take();
      const PToken e = lex_.take();
      bool neg = false;
      std::string digits = e.text;
      if (e.kind == PToken::Kind::minus) {
        neg = true;
        const PToken e2 = lex_.take();
        if (e2.kind != PToken::Kind::integer)
          throw ParseError("expected an integer exponent", lex_.line(), e2.column);
        digits = e2.text;
      } else if (e.kind != PToken::Kind::integer) {
        throw ParseError("expected an integer exponent", lex_.line(), e.column);
      }
      if (neg) throw ParseError("negative exponent", lex_.line(), e.column);
      base = poly_pow(base, static_cast<int>(std::stoll(digits)));
    }
    return base;
  }

  RingP ring_;
  PolyLexer lex_;
};

}  // namespace

Polynomial parse_polynomial(const RingP& ring, const std::string& text, int line) {
  return PolyParser(ring, text, line).parse();
}

}  // namespace chernlab
