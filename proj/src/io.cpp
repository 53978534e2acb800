#include "mincirc/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace mincirc {

ParseError::ParseError(const std::string& message, int line)
    : std::runtime_error(message + " (line " + std::to_string(line) + ")"),
      line_(line) {}

namespace {

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

long long parseInt(std::string_view tok, int line, const char* what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(std::string("expected ") + what + ", got '" +
                         std::string(tok) + "'",
                     line);
  return v;
}

}  // namespace

DimacsFormula parseDimacs(std::istream& in) {
  DimacsFormula result;
  std::string line;
  int lineNo = 0;
  bool headerSeen = false;
  Var nvars = 0;
  std::vector<Lit> pending;
  int pendingRaw = 0;  // literal count before deduplication

  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty() || blank(line)) continue;
    if (line[0] == 'c') continue;
    if (line[0] == '%') break;  // SATLIB-style trailer
    if (line[0] == 'p') {
      if (headerSeen) throw ParseError("duplicate header", lineNo);
      auto toks = tokens(line);
      if (toks.size() != 4 || toks[0] != "p" || toks[1] != "cnf")
        throw ParseError("malformed header, expected 'p cnf <nvars> <nclauses>'",
                         lineNo);
      long long nv = parseInt(toks[2], lineNo, "variable count");
      long long nc = parseInt(toks[3], lineNo, "clause count");
      if (nv < 0 || nc < 0 || nv > 10'000'000)
        throw ParseError("malformed header counts", lineNo);
      nvars = static_cast<Var>(nv);
      result.formula = CnfFormula(nvars);
      headerSeen = true;
      continue;
    }
    if (!headerSeen) throw ParseError("clause before header", lineNo);
    for (std::string_view tok : tokens(line)) {
      long long raw = parseInt(tok, lineNo, "literal");
      if (raw == 0) {
        auto clause = Clause::make(pending);
        if (clause) {
          result.duplicateLiteralsRemoved +=
              pendingRaw - static_cast<int>(clause->size());
          result.formula.addClause(std::move(*clause));
        } else {
          ++result.tautologiesDropped;
        }
        pending.clear();
        pendingRaw = 0;
        continue;
      }
      if (raw > nvars || raw < -static_cast<long long>(nvars))
        throw ParseError("literal index exceeds declared variable count", lineNo);
      pending.push_back(Lit::fromDimacs(static_cast<int>(raw)));
      ++pendingRaw;
    }
  }
  if (!headerSeen) throw ParseError("missing header", lineNo == 0 ? 1 : lineNo);
  if (!pending.empty())
    throw ParseError("unterminated clause at end of input", lineNo);
  return result;
}

DimacsFormula parseDimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parseDimacs(in);
}

void writeDimacs(const CnfFormula& phi, std::ostream& out) {
  out << "p cnf " << phi.universe() << ' ' << phi.numClauses() << '\n';
  for (const Clause& c : phi.clauses()) {
    for (Lit l : c.lits()) out << l.toDimacs() << ' ';
    out << "0\n";
  }
}

std::string toDimacs(const CnfFormula& phi) {
  std::ostringstream os;
  writeDimacs(phi, os);
  return os.str();
}

Partition parsePartition(std::istream& in, Var universe) {
  std::vector<Var> groups[3];
  std::string line;
  int lineNo = 0;
  Var top = universe;

  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty() || blank(line) || line[0] == 'c') continue;
    auto toks = tokens(line);
    int g;
    if (toks[0] == "min")
      g = 0;
    else if (toks[0] == "fix")
      g = 1;
    else if (toks[0] == "var")
      g = 2;
    else
      throw ParseError("expected 'min', 'fix' or 'var'", lineNo);
    if (toks.back() != "0")
      throw ParseError("partition line missing 0 terminator", lineNo);
    for (std::size_t i = 1; i + 1 < toks.size(); ++i) {
      long long v = parseInt(toks[i], lineNo, "variable index");
      if (v < 1) throw ParseError("variable index must be positive", lineNo);
      groups[g].push_back(static_cast<Var>(v));
      top = std::max(top, static_cast<Var>(v));
    }
  }
  try {
    return Partition::make(top, groups[0], groups[1], groups[2]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), lineNo);
  }
}

Partition parsePartition(std::string_view text, Var universe) {
  std::istringstream in{std::string(text)};
  return parsePartition(in, universe);
}

}  // namespace mincirc
