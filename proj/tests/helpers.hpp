#ifndef SATWALK_TESTS_HELPERS_HPP
#define SATWALK_TESTS_HELPERS_HPP

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "satwalk/cnf.hpp"

namespace satwalk::test {

// Build a formula from DIMACS-style signed 1-based literals; clauses of
// width 1 or 2 are padded by repeating the last literal, as the parser does.
inline Formula mk(int n, std::initializer_list<std::vector<int>> clauses) {
  Formula f;
  f.n = static_cast<std::uint32_t>(n);
  for (const auto &cl : clauses) {
    if (cl.empty() || cl.size() > 3)
      throw std::invalid_argument("mk: clause width must be 1..3");
    std::vector<int> lits(cl);
    while (lits.size() < 3)
      lits.push_back(lits.back());
    Clause c;
    for (int i = 0; i < 3; ++i) {
      int v = lits[static_cast<std::size_t>(i)];
      c.lit[i] = Literal{static_cast<std::uint32_t>((v > 0 ? v : -v) - 1),
                         v < 0};
    }
    f.clauses.push_back(c);
  }
  return f;
}

} // namespace satwalk::test

#endif
