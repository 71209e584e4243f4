#include "satwalk/grover.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "satwalk/config.hpp"

namespace satwalk {

namespace {

void validate_space(const SearchSpace &s) {
  if (!s.f) throw std::invalid_argument("search space has no formula");
  if (s.x_base.size() != s.f->n)
    throw std::invalid_argument("base assignment length does not match");
  for (std::size_t i = 0; i < s.free_x.size(); ++i) {
    if (s.free_x[i] >= s.f->n)
      throw std::invalid_argument("free start bit out of range");
    if (i > 0 && s.free_x[i] <= s.free_x[i - 1])
      throw std::invalid_argument("free start bits must strictly increase");
  }
  for (std::size_t i = 0; i < s.free_w.size(); ++i) {
    if (s.free_w[i] >= s.w_base.size())
      throw std::invalid_argument("free tape symbol out of range");
    if (i > 0 && s.free_w[i] <= s.free_w[i - 1])
      throw std::invalid_argument("free tape symbols must strictly increase");
  }
}

bool free_w_is_suffix(const SearchSpace &s) {
  const std::size_t R = s.free_w.size();
  for (std::size_t i = 0; i < R; ++i)
    if (s.free_w[i] != s.w_base.size() - R + i) return false;
  return true;
}

// Exact marked-point bookkeeping behind count_marked and emulate_grover.
// Three strategies: a per-state hit map for a fully fixed tape, dynamic
// programming over tape suffixes, and plain enumeration. The table, hit
// map and dp levels are borrowed from a matching GroverContext when one
// is supplied, otherwise built locally.
struct MarkedModel {
  const SearchSpace *space;
  std::uint64_t N = 0, t = 0;
  enum class Mode { fixed_tape, tape_dp, enumerate_all } mode;

  const TransTable *table = nullptr;
  const std::vector<std::uint8_t> *hits = nullptr;             // fixed_tape
  const std::vector<std::vector<std::uint64_t>> *dp = nullptr; // tape_dp
  std::optional<TransTable> own_table;
  std::vector<std::uint8_t> own_hits;
  std::vector<std::vector<std::uint64_t>> own_dp;

  std::uint32_t base_packed = 0;
  std::vector<std::uint64_t> start_marked; // tape_dp, per x point
  WalkTape prefix;                         // tape_dp
  std::vector<std::uint64_t> bitmap;       // enumerate_all

  explicit MarkedModel(const SearchSpace &s, GroverContext *ctx = nullptr)
      : space(&s) {
    validate_space(s);
    N = s.size();
    if (ctx && ctx->formula() != s.f) ctx = nullptr;
    const bool dense =
        ctx ? ctx->table() != nullptr
            : s.f->n <= static_cast<std::uint32_t>(limits().dense_table_vars);
    if (dense && s.free_w.empty()) {
      mode = Mode::fixed_tape;
      build_fixed_tape(ctx);
    } else if (dense && free_w_is_suffix(s) && s.free_w.size() <= 40) {
      mode = Mode::tape_dp;
      build_tape_dp(ctx);
    } else {
      mode = Mode::enumerate_all;
      build_enumeration();
    }
  }

  std::uint32_t packed_start(std::uint64_t j) const {
    std::uint32_t state = base_packed;
    for (std::size_t b = 0; b < space->free_x.size(); ++b)
      if ((j >> b) & 1) state |= std::uint32_t(1) << space->free_x[b];
    return state;
  }

  void pack_base() {
    base_packed = pack_assignment(space->x_base);
    for (std::uint32_t v : space->free_x)
      base_packed &= ~(std::uint32_t(1) << v);
  }

  void build_fixed_tape(GroverContext *ctx) {
    if (ctx) {
      table = ctx->table();
      hits = &ctx->hits_for(space->w_base);
    } else {
      own_table.emplace(*space->f);
      table = &*own_table;
      own_hits = own_table->hits_with_tape(space->w_base);
      hits = &own_hits;
    }
    pack_base();
    for (std::uint64_t j = 0; j < N; ++j) t += (*hits)[packed_start(j)];
  }

  void build_tape_dp(GroverContext *ctx) {
    const std::size_t R = space->free_w.size();
    if (ctx) {
      table = ctx->table();
      dp = &ctx->suffix_counts(R);
    } else {
      own_table.emplace(*space->f);
      table = &*own_table;
      const std::size_t states = std::size_t(table->num_states());
      own_dp.assign(R + 1, std::vector<std::uint64_t>(states, 0));
      for (std::size_t v = 0; v < states; ++v)
        own_dp[0][v] = table->sat(static_cast<std::uint32_t>(v));
      for (std::size_t r = 1; r <= R; ++r)
        for (std::size_t v = 0; v < states; ++v) {
          const std::uint32_t state = static_cast<std::uint32_t>(v);
          if (table->sat(state)) {
            own_dp[r][v] = pow3(r);
          } else {
            own_dp[r][v] = own_dp[r - 1][table->next(state, 0)] +
                           own_dp[r - 1][table->next(state, 1)] +
                           own_dp[r - 1][table->next(state, 2)];
          }
        }
      dp = &own_dp;
    }
    pack_base();
    prefix = WalkTape(space->w_base.size() - R);
    for (std::size_t i = 0; i < prefix.size(); ++i)
      prefix.set(i, space->w_base.get(i));
    const std::uint64_t x_points = std::uint64_t(1) << space->free_x.size();
    start_marked.resize(x_points);
    for (std::uint64_t j = 0; j < x_points; ++j) {
      const std::uint32_t end = table->advance(packed_start(j), prefix);
      start_marked[j] = (*dp)[R][end];
      t += start_marked[j];
    }
  }

  void build_enumeration() {
    if (N > limits().enum_points)
      throw std::domain_error("search space too large to enumerate");
    WalkEngine engine(*space->f);
    bitmap.assign(std::size_t((N + 63) / 64), 0);
    for (std::uint64_t idx = 0; idx < N; ++idx)
      if (engine.run(space->assignment_at(idx), space->tape_at(idx))) {
        bitmap[idx >> 6] |= std::uint64_t(1) << (idx & 63);
        ++t;
      }
  }

  Assignment x_at(std::uint64_t j) const {
    Assignment x = space->x_base;
    for (std::size_t b = 0; b < space->free_x.size(); ++b)
      x[space->free_x[b]] = (j >> b) & 1;
    return x;
  }

  // rank within the marked (want = true) or unmarked class to a point
  GroverDraw unrank(std::uint64_t rank, bool want) const {
    switch (mode) {
      case Mode::fixed_tape: {
        for (std::uint64_t j = 0; j < N; ++j)
          if (bool((*hits)[packed_start(j)]) == want && rank-- == 0)
            return {want, x_at(j), space->w_base, 0, N, t, 0.0};
        break;
      }
      case Mode::tape_dp: {
        const std::size_t R = space->free_w.size();
        const std::uint64_t suffixes = pow3(R);
        for (std::uint64_t j = 0; j < start_marked.size(); ++j) {
          const std::uint64_t in_class =
              want ? start_marked[j] : suffixes - start_marked[j];
          if (rank >= in_class) {
            rank -= in_class;
            continue;
          }
          WalkTape w = space->w_base;
          std::uint32_t state = table->advance(packed_start(j), prefix);
          for (std::size_t lvl = R; lvl > 0; --lvl) {
            const std::size_t pos = space->free_w[R - lvl];
            if (table->sat(state)) { // every suffix from here is a hit
              w.set(pos, static_cast<std::uint32_t>(rank % 3));
              rank /= 3;
              continue;
            }
            std::uint32_t c = 0;
            for (; c < 3; ++c) {
              const std::uint64_t sub = (*dp)[lvl - 1][table->next(state, c)];
              const std::uint64_t cls =
                  want ? sub : pow3(lvl - 1) - sub;
              if (rank < cls) break;
              rank -= cls;
            }
            w.set(pos, c);
            state = table->next(state, c);
          }
          return {want, x_at(j), w, 0, N, t, 0.0};
        }
        break;
      }
      case Mode::enumerate_all: {
        for (std::uint64_t idx = 0; idx < N; ++idx) {
          const bool marked = (bitmap[idx >> 6] >> (idx & 63)) & 1;
          if (marked == want && rank-- == 0)
            return {want, space->assignment_at(idx), space->tape_at(idx),
                    0, N, t, 0.0};
        }
        break;
      }
    }
    throw std::logic_error("class rank out of range");
  }
};

} // namespace

GroverContext::GroverContext(const Formula &f) : f_(&f) {
  if (f.n <= static_cast<std::uint32_t>(limits().dense_table_vars))
    table_.emplace(f);
}

const std::vector<std::uint8_t> &GroverContext::hits_for(const WalkTape &w) {
  if (!table_) throw std::logic_error("context has no dense table");
  if (!hits_tape_ || !(*hits_tape_ == w)) {
    hits_ = table_->hits_with_tape(w);
    hits_tape_ = w;
  }
  return hits_;
}

const std::vector<std::vector<std::uint64_t>> &
GroverContext::suffix_counts(std::size_t R) {
  if (!table_) throw std::logic_error("context has no dense table");
  const std::size_t states = std::size_t(table_->num_states());
  if (counts_.empty()) {
    counts_.emplace_back(states, 0);
    for (std::size_t v = 0; v < states; ++v)
      counts_[0][v] = table_->sat(static_cast<std::uint32_t>(v));
  }
  while (counts_.size() <= R) {
    const std::size_t r = counts_.size();
    const std::vector<std::uint64_t> &prev = counts_[r - 1];
    std::vector<std::uint64_t> level(states, 0);
    for (std::size_t v = 0; v < states; ++v) {
      const std::uint32_t state = static_cast<std::uint32_t>(v);
      if (table_->sat(state)) {
        level[v] = pow3(r);
      } else {
        level[v] = prev[table_->next(state, 0)] +
                   prev[table_->next(state, 1)] +
                   prev[table_->next(state, 2)];
      }
    }
    counts_.push_back(std::move(level));
  }
  return counts_;
}

std::uint64_t SearchSpace::size() const {
  if (free_x.size() > 62)
    throw std::domain_error("search space exceeds 63 bits");
  const unsigned __int128 points =
      (unsigned __int128)(std::uint64_t(1) << free_x.size()) *
      pow3(free_w.size());
  if (points >> 63)
    throw std::domain_error("search space exceeds 63 bits");
  return static_cast<std::uint64_t>(points);
}

Assignment SearchSpace::assignment_at(std::uint64_t idx) const {
  Assignment x = x_base;
  for (std::size_t b = 0; b < free_x.size(); ++b)
    x[free_x[b]] = (idx >> b) & 1;
  return x;
}

WalkTape SearchSpace::tape_at(std::uint64_t idx) const {
  WalkTape w = w_base;
  std::uint64_t w_rank = idx >> free_x.size();
  for (std::size_t i = 0; i < free_w.size(); ++i) {
    w.set(free_w[i], static_cast<std::uint32_t>(w_rank % 3));
    w_rank /= 3;
  }
  return w;
}

std::uint64_t count_marked(const SearchSpace &space, GroverContext *ctx) {
  return MarkedModel(space, ctx).t;
}

std::uint64_t grover_iterations(std::uint64_t N, std::uint64_t t) {
  if (N == 0) throw std::invalid_argument("empty search space");
  if (t > N) throw std::invalid_argument("more marked points than points");
  if (t == 0 || t == N) return 0;
  return static_cast<std::uint64_t>(
      std::floor(std::numbers::pi / 4 * std::sqrt(double(N) / double(t))));
}

double grover_success_prob(std::uint64_t N, std::uint64_t t,
                           std::uint64_t k) {
  if (N == 0) throw std::invalid_argument("empty search space");
  if (t > N) throw std::invalid_argument("more marked points than points");
  if (t == 0) return 0.0;
  if (t == N) return 1.0;
  const double theta = std::asin(std::sqrt(double(t) / double(N)));
  const double s = std::sin(double(2 * k + 1) * theta);
  return s * s;
}

GroverDraw emulate_grover(const SearchSpace &space, Rng &rng,
                          std::optional<std::uint64_t> iterations_override,
                          GroverContext *ctx) {
  const MarkedModel model(space, ctx);
  const std::uint64_t k =
      iterations_override ? *iterations_override
                          : grover_iterations(model.N, model.t);
  const double p = grover_success_prob(model.N, model.t, k);
  GroverDraw draw{};
  if (model.t == 0 || model.t == model.N) {
    draw = model.unrank(rng.below(model.N), model.t == model.N);
  } else if (rng.unit() < p) {
    draw = model.unrank(rng.below(model.t), true);
  } else {
    draw = model.unrank(rng.below(model.N - model.t), false);
  }
  draw.iterations = k;
  draw.success_prob = p;
  return draw;
}

std::uint64_t estimate_qubits(std::uint32_t n, std::size_t m,
                              std::uint32_t L) {
  const std::uint64_t tape_bits =
      static_cast<std::uint64_t>(std::ceil(double(m) * std::log2(3.0)));
  const std::uint64_t counter_bits =
      L <= 1 ? 0 : std::uint64_t(std::bit_width(L - 1));
  return n + tape_bits + m * counter_bits;
}

} // namespace satwalk
