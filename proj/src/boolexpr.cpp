#include "mincirc/boolexpr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mincirc {

BoolExpr BoolExpr::var(Var v) {
  if (v < 1) throw std::invalid_argument("variable index must be >= 1");
  BoolExpr e(Kind::Var);
  e.var_ = v;
  return e;
}

BoolExpr BoolExpr::constant(bool value) {
  BoolExpr e(Kind::Const);
  e.const_ = value;
  return e;
}

BoolExpr BoolExpr::negation(BoolExpr child) {
  BoolExpr e(Kind::Not);
  e.children_.push_back(std::move(child));
  return e;
}

BoolExpr BoolExpr::conjunction(std::vector<BoolExpr> children) {
  if (children.empty()) throw std::invalid_argument("empty conjunction");
  BoolExpr e(Kind::And);
  e.children_ = std::move(children);
  return e;
}

BoolExpr BoolExpr::disjunction(std::vector<BoolExpr> children) {
  if (children.empty()) throw std::invalid_argument("empty disjunction");
  BoolExpr e(Kind::Or);
  e.children_ = std::move(children);
  return e;
}

BoolExpr BoolExpr::implication(BoolExpr lhs, BoolExpr rhs) {
  BoolExpr e(Kind::Implies);
  e.children_.push_back(std::move(lhs));
  e.children_.push_back(std::move(rhs));
  return e;
}

BoolExpr BoolExpr::equivalence(BoolExpr lhs, BoolExpr rhs) {
  BoolExpr e(Kind::Iff);
  e.children_.push_back(std::move(lhs));
  e.children_.push_back(std::move(rhs));
  return e;
}

Var BoolExpr::variable() const {
  if (kind_ != Kind::Var) throw std::logic_error("not a variable node");
  return var_;
}

bool BoolExpr::constValue() const {
  if (kind_ != Kind::Const) throw std::logic_error("not a constant node");
  return const_;
}

Var BoolExpr::maxVar() const {
  Var m = kind_ == Kind::Var ? var_ : 0;
  for (const BoolExpr& c : children_) m = std::max(m, c.maxVar());
  return m;
}

std::string BoolExpr::toString() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Var:
      os << var_;
      break;
    case Kind::Const:
      os << (const_ ? 'T' : 'F');
      break;
    case Kind::Not:
      os << '!' << children_[0].toString();
      break;
    case Kind::And:
    case Kind::Or: {
      os << '(';
      const char* op = kind_ == Kind::And ? " & " : " | ";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i > 0) os << op;
        os << children_[i].toString();
      }
      os << ')';
      break;
    }
    case Kind::Implies:
      os << '(' << children_[0].toString() << " -> " << children_[1].toString() << ')';
      break;
    case Kind::Iff:
      os << '(' << children_[0].toString() << " <-> " << children_[1].toString() << ')';
      break;
  }
  return os.str();
}

bool evaluate(const Assignment& nu, const BoolExpr& e) {
  switch (e.kind()) {
    case BoolExpr::Kind::Var:
      return nu.value(e.variable());
    case BoolExpr::Kind::Const:
      return e.constValue();
    case BoolExpr::Kind::Not:
      return !evaluate(nu, e.children()[0]);
    case BoolExpr::Kind::And:
      for (const BoolExpr& c : e.children())
        if (!evaluate(nu, c)) return false;
      return true;
    case BoolExpr::Kind::Or:
      for (const BoolExpr& c : e.children())
        if (evaluate(nu, c)) return true;
      return false;
    case BoolExpr::Kind::Implies:
      return !evaluate(nu, e.children()[0]) || evaluate(nu, e.children()[1]);
    case BoolExpr::Kind::Iff:
      return evaluate(nu, e.children()[0]) == evaluate(nu, e.children()[1]);
  }
  throw std::logic_error("unreachable expression kind");
}

QueryParseError::QueryParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : text_(text) {}

  BoolExpr parse() {
    BoolExpr e = parseIff();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  // iff := impl ('<->' iff)?
  BoolExpr parseIff() {
    BoolExpr lhs = parseImpl();
    skipSpace();
    if (tryConsume("<->")) return BoolExpr::equivalence(std::move(lhs), parseIff());
    return lhs;
  }

  // impl := or ('->' impl)?   right-associative
  BoolExpr parseImpl() {
    BoolExpr lhs = parseOr();
    skipSpace();
    if (peek("<->")) return lhs;
    if (tryConsume("->")) return BoolExpr::implication(std::move(lhs), parseImpl());
    return lhs;
  }

  BoolExpr parseOr() {
    std::vector<BoolExpr> children;
    children.push_back(parseAnd());
    for (skipSpace(); peekOr(); skipSpace()) {
      ++pos_;
      children.push_back(parseAnd());
    }
    if (children.size() == 1) return std::move(children[0]);
    return BoolExpr::disjunction(std::move(children));
  }

  BoolExpr parseAnd() {
    std::vector<BoolExpr> children;
    children.push_back(parseUnary());
    for (skipSpace(); pos_ < text_.size() && text_[pos_] == '&'; skipSpace()) {
      ++pos_;
      children.push_back(parseUnary());
    }
    if (children.size() == 1) return std::move(children[0]);
    return BoolExpr::conjunction(std::move(children));
  }

  BoolExpr parseUnary() {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == '!') {
      ++pos_;
      return BoolExpr::negation(parseUnary());
    }
    return parseAtom();
  }

  BoolExpr parseAtom() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BoolExpr e = parseIff();
      skipSpace();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == 'T') {
      ++pos_;
      return BoolExpr::constant(true);
    }
    if (c == 'F') {
      ++pos_;
      return BoolExpr::constant(false);
    }
    if (c == '-') {
      ++pos_;
      return BoolExpr::negation(BoolExpr::var(parseIndex()));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return BoolExpr::var(parseIndex());
    fail("expected atom");
  }

  Var parseIndex() {
    skipSpace();
    std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) fail("variable index too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected variable index");
    if (value == 0) fail("variable index 0 is invalid");
    return static_cast<Var>(value);
  }

  // '|' but not part of a future operator; plain single-char check suffices.
  bool peekOr() const { return pos_ < text_.size() && text_[pos_] == '|'; }

  bool peek(std::string_view token) const {
    return text_.substr(pos_).starts_with(token);
  }

  bool tryConsume(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw QueryParseError(message, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BoolExpr parseQuery(std::string_view text) { return QueryParser(text).parse(); }

}  // namespace mincirc
