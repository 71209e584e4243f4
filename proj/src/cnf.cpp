#include "satwalk/cnf.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "satwalk/config.hpp"

namespace satwalk {

/*--------------------------------------------------------------------*/

Formula parse_dimacs(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  Formula f;
  long declared_clauses = -1;
  std::vector<long> pending; // literals of the clause being read
  bool have_header = false;

  auto fail = [](const std::string &msg) {
    throw std::runtime_error("dimacs: " + msg);
  };

  auto close_clause = [&](std::vector<long> &lits) {
    if (lits.empty())
      fail("empty clause");
    if (lits.size() > 3)
      fail("clause wider than 3");
    while (lits.size() < 3) // pad by repeating the last literal
      lits.push_back(lits.back());
    Clause c;
    for (int i = 0; i < 3; ++i) {
      long v = lits[static_cast<std::size_t>(i)];
      long var = (v > 0 ? v : -v) - 1;
      if (var < 0 || var >= static_cast<long>(f.n))
        fail("variable " + std::to_string(v > 0 ? v : -v) + " out of range");
      c.lit[i] = Literal{static_cast<std::uint32_t>(var), v < 0};
    }
    f.clauses.push_back(c);
    lits.clear();
  };

  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c')
      continue;
    if (line[0] == 'p') {
      if (have_header)
        fail("duplicate header");
      std::istringstream h(line);
      std::string p, cnf;
      long n = -1;
      h >> p >> cnf >> n >> declared_clauses;
      if (h.fail() || p != "p" || cnf != "cnf" || n < 0 ||
          declared_clauses < 0)
        fail("malformed header '" + line + "'");
      f.n = static_cast<std::uint32_t>(n);
      have_header = true;
      continue;
    }
    if (!have_header)
      fail("clause before header");
    std::istringstream c(line);
    long v;
    while (c >> v) {
      if (v == 0)
        close_clause(pending);
      else
        pending.push_back(v);
    }
    if (!c.eof())
      fail("unexpected token in '" + line + "'");
  }
  if (!have_header)
    fail("missing header");
  if (!pending.empty())
    fail("unterminated clause");
  if (static_cast<long>(f.clauses.size()) != declared_clauses)
    fail("header declares " + std::to_string(declared_clauses) +
         " clauses, found " + std::to_string(f.clauses.size()));
  return f;
}

std::string serialize_dimacs(const Formula &f) {
  std::ostringstream out;
  out << "p cnf " << f.n << ' ' << f.clauses.size() << '\n';
  for (const Clause &c : f.clauses) {
    for (int i = 0; i < 3; ++i) {
      long v = static_cast<long>(c.lit[i].var) + 1;
      out << (c.lit[i].neg ? -v : v) << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

/*--------------------------------------------------------------------*/

bool evaluate(const Formula &f, const Assignment &x) {
  if (x.size() != f.n)
    throw std::invalid_argument("evaluate: assignment length mismatch");
  for (const Clause &c : f.clauses)
    if (!clause_true(c, x))
      return false;
  return true;
}

std::optional<std::uint32_t> first_violated(const Formula &f,
                                            const Assignment &x) {
  if (x.size() != f.n)
    throw std::invalid_argument("first_violated: assignment length mismatch");
  for (std::uint32_t j = 0; j < f.clauses.size(); ++j)
    if (!clause_true(f.clauses[j], x))
      return j;
  return std::nullopt;
}

// Mask form of a clause for dense sweeps: clause true under packed state v
// iff (v & pos) != 0 or (~v & neg) != 0.
struct ClauseMask {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
};

static std::vector<ClauseMask> clause_masks(const Formula &f) {
  std::vector<ClauseMask> m(f.clauses.size());
  for (std::size_t j = 0; j < f.clauses.size(); ++j)
    for (const Literal &l : f.clauses[j].lit) {
      if (l.neg)
        m[j].neg |= 1u << l.var;
      else
        m[j].pos |= 1u << l.var;
    }
  return m;
}

std::uint64_t count_solutions(const Formula &f) {
  if (f.n > static_cast<std::uint32_t>(limits().enum_vars))
    throw std::domain_error("count_solutions: n exceeds enumeration limit");
  const auto masks = clause_masks(f);
  const std::uint64_t space = std::uint64_t(1) << f.n;
  std::uint64_t count = 0;
  for (std::uint64_t v = 0; v < space; ++v) {
    bool sat = true;
    for (const ClauseMask &m : masks) {
      std::uint32_t w = static_cast<std::uint32_t>(v);
      if ((w & m.pos) == 0 && (~w & m.neg) == 0) {
        sat = false;
        break;
      }
    }
    count += sat;
  }
  return count;
}

/*--------------------------------------------------------------------*/

static Clause random_clause(int n, Rng &rng) {
  std::uint32_t v[3];
  v[0] = static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(n)));
  do {
    v[1] = static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(n)));
  } while (v[1] == v[0]);
  do {
    v[2] = static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(n)));
  } while (v[2] == v[0] || v[2] == v[1]);
  Clause c;
  for (int i = 0; i < 3; ++i)
    c.lit[i] = Literal{v[i], rng.coin()};
  return c;
}

Formula generate_random(int n, int L, std::uint64_t seed) {
  if (n < 3)
    throw std::invalid_argument("generate_random: need n >= 3");
  Rng rng(seed);
  Formula f;
  f.n = static_cast<std::uint32_t>(n);
  f.clauses.reserve(static_cast<std::size_t>(L));
  for (int j = 0; j < L; ++j)
    f.clauses.push_back(random_clause(n, rng));
  return f;
}

std::pair<Formula, Assignment> generate_planted(int n, int L,
                                                std::uint64_t seed,
                                                bool unique) {
  if (n < 3)
    throw std::invalid_argument("generate_planted: need n >= 3");
  if (unique && n > limits().enum_vars)
    throw std::domain_error(
        "generate_planted: unique filtering needs n within enumeration limit");
  Rng root(seed);
  for (int attempt = 0; attempt < limits().resample_budget; ++attempt) {
    Rng rng = root.split(static_cast<std::uint64_t>(attempt));
    Assignment star = random_assignment(static_cast<std::uint32_t>(n), rng);
    Formula f;
    f.n = static_cast<std::uint32_t>(n);
    f.clauses.reserve(static_cast<std::size_t>(L));
    while (f.clauses.size() < static_cast<std::size_t>(L)) {
      Clause c = random_clause(n, rng); // rejected unless x* satisfies it
      if (clause_true(c, star))
        f.clauses.push_back(c);
    }
    if (!unique || count_solutions(f) == 1)
      return {std::move(f), std::move(star)};
  }
  throw std::runtime_error("generate_planted: resampling budget exhausted");
}

/*--------------------------------------------------------------------*/

std::string to_bitstring(const Assignment &x) {
  std::string s(x.size(), '0');
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i])
      s[i] = '1';
  return s;
}

Assignment from_bitstring(const std::string &s) {
  Assignment x(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1')
      throw std::invalid_argument("from_bitstring: expected only 0/1");
    x[i] = static_cast<std::uint8_t>(s[i] == '1');
  }
  return x;
}

} // namespace satwalk
