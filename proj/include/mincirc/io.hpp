#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mincirc/formula.hpp"

namespace mincirc {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line);
  int line() const { return line_; }

 private:
  int line_;
};

struct DimacsFormula {
  CnfFormula formula;
  int tautologiesDropped = 0;
  int duplicateLiteralsRemoved = 0;
};

// DIMACS CNF: `c` comment lines, a `p cnf <nvars> <nclauses>` header, then
// 0-terminated clauses. Duplicate literals are merged and tautological
// clauses dropped, both counted. A `%` line ends the clause section.
// Throws ParseError (with line number) on malformed input, literals beyond
// the declared variable count, or an unterminated final clause.
DimacsFormula parseDimacs(std::istream& in);
DimacsFormula parseDimacs(std::string_view text);

void writeDimacs(const CnfFormula& phi, std::ostream& out);
std::string toDimacs(const CnfFormula& phi);

// Partition file: lines `min <ids...> 0`, `fix <ids...> 0`, `var <ids...> 0`;
// `c` comments allowed. Unlisted variables default to `min`. The universe is
// at least `universe`, extended by listed indices beyond it.
Partition parsePartition(std::istream& in, Var universe);
Partition parsePartition(std::string_view text, Var universe);

}  // namespace mincirc
