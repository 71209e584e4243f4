#include "satwalk/walk.hpp"

#include <bit>
#include <stdexcept>

#include "satwalk/config.hpp"

namespace satwalk {

WalkTape::WalkTape(const std::vector<std::uint8_t> &symbols)
    : WalkTape(symbols.size()) {
  for (std::size_t i = 0; i < symbols.size(); ++i) set(i, symbols[i]);
}

void WalkTape::set(std::size_t i, std::uint32_t v) {
  if (v > 2) throw std::invalid_argument("tape symbol must be 0, 1 or 2");
  std::uint64_t &word = words_[i >> 5];
  const unsigned shift = (i & 31) * 2;
  word = (word & ~(std::uint64_t(3) << shift)) | (std::uint64_t(v) << shift);
}

std::string WalkTape::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) s[i] = char('0' + get(i));
  return s;
}

WalkTape WalkTape::from_string(const std::string &s) {
  WalkTape w(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '2')
      throw std::invalid_argument("tape string must be over {0,1,2}");
    w.set(i, std::uint32_t(s[i] - '0'));
  }
  return w;
}

WalkTape WalkTape::concat(const WalkTape &a, const WalkTape &b) {
  WalkTape w(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) w.set(i, a.get(i));
  for (std::size_t i = 0; i < b.size(); ++i) w.set(a.size() + i, b.get(i));
  return w;
}

WalkTape random_tape(std::size_t m, Rng &rng) {
  WalkTape w(m);
  for (std::size_t i = 0; i < m; ++i) w.set(i, rng.trit());
  return w;
}

std::uint64_t pow3(std::size_t e) {
  if (e > 40) throw std::domain_error("3^e exceeds 64 bits");
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < e; ++i) p *= 3;
  return p;
}

WalkTape nth_tape(std::size_t m, std::uint64_t rank) {
  if (rank >= pow3(m)) throw std::invalid_argument("tape rank out of range");
  WalkTape w(m);
  for (std::size_t i = 0; i < m; ++i) {
    w.set(i, static_cast<std::uint32_t>(rank % 3));
    rank /= 3;
  }
  return w;
}

std::uint64_t tape_rank(const WalkTape &w) {
  std::uint64_t rank = 0;
  for (std::size_t i = w.size(); i-- > 0;) rank = rank * 3 + w.get(i);
  return rank;
}

WalkTrace schoening_walk(const Formula &f, const Assignment &x0,
                         const WalkTape &w) {
  WalkTrace trace;
  trace.states.reserve(w.size() + 1);
  Assignment x = x0;
  auto violated = first_violated(f, x);
  if (!violated) trace.hit_step = 0;
  trace.states.push_back(x);
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (violated) {
      const Clause &cl = f.clauses[*violated];
      const std::uint32_t var = cl.lit[w.get(j)].var;
      x[var] ^= 1;
      violated = first_violated(f, x);
      if (!violated && !trace.hit_step) trace.hit_step = j + 1;
    }
    trace.states.push_back(x);
  }
  return trace;
}

bool oracle(const Formula &f, const Assignment &x0, const WalkTape &w) {
  WalkEngine engine(f);
  return engine.run(x0, w).has_value();
}

std::optional<Assignment> solve_classical(const Formula &f, std::uint64_t N,
                                          std::size_t m, std::uint64_t seed) {
  WalkEngine engine(f);
  Rng root(seed);
  for (std::uint64_t i = 0; i < N; ++i) {
    Rng rng = root.split(i);
    const Assignment x0 = random_assignment(f.n, rng);
    engine.reset(x0);
    if (engine.satisfied()) return engine.assignment();
    for (std::size_t j = 0; j < m; ++j) {
      engine.step(rng.trit());
      if (engine.satisfied()) return engine.assignment();
    }
  }
  return std::nullopt;
}

std::uint32_t hamming(const Assignment &x, const Assignment &y) {
  if (x.size() != y.size())
    throw std::invalid_argument("hamming distance needs equal lengths");
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

Assignment sample_hamming_sphere(const Assignment &x_star, std::uint32_t h,
                                 Rng &rng) {
  const std::uint32_t n = static_cast<std::uint32_t>(x_star.size());
  if (h > n) throw std::invalid_argument("sphere radius exceeds length");
  std::vector<std::uint32_t> idx(n);
  for (std::uint32_t i = 0; i < n; ++i) idx[i] = i;
  Assignment x = x_star;
  for (std::uint32_t i = 0; i < h; ++i) {
    const std::uint32_t j = i + static_cast<std::uint32_t>(rng.below(n - i));
    std::swap(idx[i], idx[j]);
    x[idx[i]] ^= 1;
  }
  return x;
}

Assignment sample_hamming_sphere(const Assignment &x_star, std::uint32_t h,
                                 std::uint64_t seed) {
  Rng rng(seed);
  return sample_hamming_sphere(x_star, h, rng);
}

/*--------------------------------------------------------------------*/

WalkEngine::WalkEngine(const Formula &f) : f_(&f) {
  const std::uint32_t L = f.num_clauses();
  state_.assign((f.n + 63) / 64, 0);
  sat_count_.assign(L, 0);
  violated_.assign((L + 63) / 64, 0);
  occ_off_.assign(f.n + 1, 0);
  for (const Clause &cl : f.clauses)
    for (const Literal &lit : cl.lit) ++occ_off_[lit.var + 1];
  for (std::uint32_t v = 0; v < f.n; ++v) occ_off_[v + 1] += occ_off_[v];
  occ_clause_.resize(std::size_t(3) * L);
  occ_neg_.resize(std::size_t(3) * L);
  std::vector<std::uint32_t> cursor(occ_off_.begin(), occ_off_.end() - 1);
  for (std::uint32_t j = 0; j < L; ++j)
    for (const Literal &lit : f.clauses[j].lit) {
      const std::uint32_t slot = cursor[lit.var]++;
      occ_clause_[slot] = j;
      occ_neg_[slot] = lit.neg;
    }
}

void WalkEngine::reset(const Assignment &x0) {
  if (x0.size() != f_->n)
    throw std::invalid_argument("assignment length does not match formula");
  std::fill(state_.begin(), state_.end(), 0);
  for (std::uint32_t v = 0; v < f_->n; ++v)
    if (x0[v]) state_[v >> 6] |= std::uint64_t(1) << (v & 63);
  std::fill(violated_.begin(), violated_.end(), 0);
  num_violated_ = 0;
  const std::uint32_t L = f_->num_clauses();
  for (std::uint32_t j = 0; j < L; ++j) {
    std::uint8_t count = 0;
    for (const Literal &lit : f_->clauses[j].lit)
      count += bit(lit.var) != bool(lit.neg);
    sat_count_[j] = count;
    if (count == 0) {
      violated_[j >> 6] |= std::uint64_t(1) << (j & 63);
      ++num_violated_;
    }
  }
}

std::uint32_t WalkEngine::first_violated_index() const {
  for (std::size_t word = 0; word < violated_.size(); ++word)
    if (violated_[word])
      return static_cast<std::uint32_t>(word * 64 +
                                        std::countr_zero(violated_[word]));
  throw std::logic_error("no violated clause");
}

void WalkEngine::flip(std::uint32_t var) {
  state_[var >> 6] ^= std::uint64_t(1) << (var & 63);
  const bool value = bit(var);
  for (std::uint32_t slot = occ_off_[var]; slot < occ_off_[var + 1]; ++slot) {
    const std::uint32_t j = occ_clause_[slot];
    if (value != bool(occ_neg_[slot])) {
      if (++sat_count_[j] == 1) {
        violated_[j >> 6] &= ~(std::uint64_t(1) << (j & 63));
        --num_violated_;
      }
    } else {
      if (--sat_count_[j] == 0) {
        violated_[j >> 6] |= std::uint64_t(1) << (j & 63);
        ++num_violated_;
      }
    }
  }
}

std::optional<std::uint32_t> WalkEngine::step(std::uint32_t c) {
  if (satisfied()) return std::nullopt;
  const std::uint32_t j = first_violated_index();
  const std::uint32_t var = f_->clauses[j].lit[c].var;
  flip(var);
  return var;
}

std::optional<std::size_t> WalkEngine::run(const Assignment &x0,
                                           const WalkTape &w) {
  reset(x0);
  if (satisfied()) return 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    step(w.get(j));
    if (satisfied()) return j + 1;
  }
  return std::nullopt;
}

Assignment WalkEngine::assignment() const {
  Assignment x(f_->n);
  for (std::uint32_t v = 0; v < f_->n; ++v) x[v] = bit(v);
  return x;
}

/*--------------------------------------------------------------------*/

TransTable::TransTable(const Formula &f) : n_(f.n) {
  if (n_ > static_cast<std::uint32_t>(limits().dense_table_vars))
    throw std::domain_error("formula too wide for a dense transition table");
  const std::uint64_t states = num_states();
  sat_.assign(std::size_t((states + 63) / 64), 0);
  trans_.resize(std::size_t(states) * 3);

  const std::uint32_t L = f.num_clauses();
  std::vector<std::uint32_t> pos(L, 0), neg(L, 0);
  for (std::uint32_t j = 0; j < L; ++j)
    for (const Literal &lit : f.clauses[j].lit)
      (lit.neg ? neg[j] : pos[j]) |= std::uint32_t(1) << lit.var;

  for (std::uint64_t v = 0; v < states; ++v) {
    const std::uint32_t state = static_cast<std::uint32_t>(v);
    std::int64_t violated = -1;
    for (std::uint32_t j = 0; j < L; ++j)
      if (!((state & pos[j]) || (~state & neg[j]))) {
        violated = j;
        break;
      }
    if (violated < 0) {
      sat_[v >> 6] |= std::uint64_t(1) << (v & 63);
      for (std::uint32_t c = 0; c < 3; ++c) trans_[v * 3 + c] = state;
    } else {
      const Clause &cl = f.clauses[std::size_t(violated)];
      for (std::uint32_t c = 0; c < 3; ++c)
        trans_[v * 3 + c] = state ^ (std::uint32_t(1) << cl.lit[c].var);
    }
  }
}

std::uint64_t TransTable::solution_count() const {
  std::uint64_t total = 0;
  for (std::uint64_t word : sat_) total += std::popcount(word);
  return total;
}

std::optional<std::size_t> TransTable::run(std::uint32_t state,
                                           const WalkTape &w,
                                           std::size_t from) const {
  if (sat(state)) return from;
  for (std::size_t j = from; j < w.size(); ++j) {
    state = next(state, w.get(j));
    if (sat(state)) return j + 1;
  }
  return std::nullopt;
}

std::uint32_t TransTable::advance(std::uint32_t state,
                                  const WalkTape &w) const {
  for (std::size_t j = 0; j < w.size(); ++j) state = next(state, w.get(j));
  return state;
}

std::vector<std::uint8_t> TransTable::hits_with_tape(const WalkTape &w) const {
  const std::size_t states = std::size_t(num_states());
  std::vector<std::uint8_t> level(states), prev(states);
  for (std::size_t v = 0; v < states; ++v)
    level[v] = sat(static_cast<std::uint32_t>(v));
  for (std::size_t j = w.size(); j-- > 0;) {
    level.swap(prev);
    const std::uint32_t c = w.get(j);
    for (std::size_t v = 0; v < states; ++v) {
      const std::uint32_t state = static_cast<std::uint32_t>(v);
      level[v] = sat(state) ? 1 : prev[next(state, c)];
    }
  }
  return level;
}

} // namespace satwalk
