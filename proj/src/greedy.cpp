// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "troplab/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "troplab/error.hpp"

namespace troplab {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

void check_input(const SetFamily& f, const Weighting& x) {
  if (f.empty()) throw PreconditionError("greedy: family is empty");
  if (x.size() != f.ground_size()) throw PreconditionError("greedy: arity mismatch");
  for (const auto& w : x) {
    if (w.sign() < 0) throw PreconditionError("greedy: weights must be nonnegative");
  }
  if (!is_antichain(f)) throw PreconditionError("greedy: family is not an antichain");
}

std::optional<Rational> ratio_of(const Rational& value, const Rational& opt, Sense sense) {
  const Rational& num = sense == Sense::Max ? opt : value;
  const Rational& den = sense == Sense::Max ? value : opt;
  if (den.is_zero()) {
    if (num.is_zero()) return Rational(1);
    return std::nullopt;
  }
  return num / den;
}

// Both oracles scan the family; the scan is restricted to the members still
// consistent with the current partial solution.
GreedyRun best_in(const SetFamily& f, const std::vector<std::size_t>& order) {
  GreedyRun run;
  run.solution = ElementSet(f.ground_size());
  std::vector<std::size_t> above(f.size());
  std::iota(above.begin(), above.end(), 0);
  std::vector<std::size_t> next;
  for (auto e : order) {
    next.clear();
    for (auto i : above) {
      if (f[i].test(e)) next.push_back(i);
    }
    const bool ok = !next.empty();
    if (ok) {
      run.solution.set(e);
      above.swap(next);
    }
    run.trace.push_back({e, ok});
  }
  return run;
}

GreedyRun worst_out(const SetFamily& f, const std::vector<std::size_t>& order) {
  GreedyRun run;
  run.solution = ElementSet(f.ground_size());
  run.solution.set();
  std::vector<std::size_t> below(f.size());
  std::iota(below.begin(), below.end(), 0);
  std::vector<std::size_t> next;
  for (auto e : order) {
    next.clear();
    for (auto i : below) {
      if (!f[i].test(e)) next.push_back(i);
    }
    const bool removed = !next.empty();
    if (removed) {
      run.solution.reset(e);
      below.swap(next);
    }
    run.trace.push_back({e, removed});
  }
  return run;
}

GreedyRun finish(GreedyRun run, const SetFamily& f, const Weighting& x, Sense sense) {
  if (!f.contains(run.solution)) {
    throw InvariantError("greedy: output is not a member of the family");
  }
  run.value = set_weight(run.solution, x);
  run.optimum = optimum(f, x, sense);
  run.ratio = ratio_of(run.value, run.optimum, sense);
  return run;
}

bool worse(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!b) return false;
  if (!a) return true;
  return *a > *b;
}

std::vector<Weighting> structured_weightings(const SetFamily& f) {
  const std::size_t n = f.ground_size();
  std::vector<Weighting> out;
  for (const auto& s : f) {
    Weighting x(n, Rational(0));
    for (auto e : elements_of(s)) x[e] = Rational(1);
    out.push_back(x);
    for (std::size_t c = 0; c < n; ++c) {
      if (s.test(c)) continue;
      Weighting y = x;
      y[c] = Rational(20, 19);
      out.push_back(std::move(y));
    }
  }
  return out;
}

std::optional<Weighting> exchange_weighting(const SetFamily& f) {
  if (!f.uniform_size()) return std::nullopt;
  const MatroidReport report = matroid_check(f);
  if (report.is_matroid || !report.witness) return std::nullopt;
  const ElementSet& a = f[report.witness->a_set];
  const ElementSet& b = f[report.witness->b_set];
  const std::size_t only_b = (b - a).count();
  const Rational delta(1, 2 * static_cast<std::int64_t>(only_b));
  Weighting x(f.ground_size(), Rational(0));
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (a.test(e) && b.test(e)) {
      x[e] = Rational(2);
    } else if (a.test(e) && e != report.witness->element) {
      x[e] = Rational(1) + delta;
    } else if (b.test(e)) {
      x[e] = Rational(1);
    }
  }
  return x;
}

}  // namespace

std::vector<std::size_t> heaviest_first(const Weighting& x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
  return order;
}

std::vector<std::size_t> lightest_first(const Weighting& x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  return order;
}

namespace {

GreedyRun greedy_unchecked(const SetFamily& f, const Weighting& x, Sense sense) {
  const auto order = heaviest_first(x);
  return finish(sense == Sense::Max ? best_in(f, order) : worst_out(f, order), f, x, sense);
}

}  // namespace

GreedyRun greedy_run(const SetFamily& f, const Weighting& x, Sense sense) {
  check_input(f, x);
  return greedy_unchecked(f, x, sense);
}

GreedyRun wrong_strategy_run(const SetFamily& f, const Weighting& x, Sense sense) {
  check_input(f, x);
  const auto order = lightest_first(x);
  return finish(sense == Sense::Max ? worst_out(f, order) : best_in(f, order), f, x, sense);
}

Weighting random_weighting(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> num(0, 30);
  std::uniform_int_distribution<std::int64_t> den(1, 6);
  Weighting x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t p = num(rng);
    x.emplace_back(p, den(rng));
  }
  return x;
}

GreedyEstimate greedy_factor_estimate(const SetFamily& f, std::size_t trials,
                                      std::uint64_t seed, Sense sense, Execution exec) {
  if (f.empty()) throw PreconditionError("greedy-factor: family is empty");
  if (!is_antichain(f)) throw PreconditionError("greedy-factor: family is not an antichain");
  std::vector<Weighting> weightings = structured_weightings(f);
  if (auto w = exchange_weighting(f)) weightings.push_back(std::move(*w));
  GreedyEstimate est;
  est.structured = weightings.size();
  for (std::size_t t = 0; t < trials; ++t) {
    weightings.push_back(random_weighting(f.ground_size(), seed ^ (kGolden * (t + 1))));
  }
  std::vector<std::optional<Rational>> ratios(weightings.size());
  for_each_index(weightings.size(), exec, [&](std::size_t i) {
    ratios[i] = greedy_unchecked(f, weightings[i], sense).ratio;
  });
  est.runs = weightings.size();
  est.max_ratio = Rational(1);
  est.worst = weightings.front();
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (worse(ratios[i], est.max_ratio)) {
      est.max_ratio = ratios[i];
      est.worst = weightings[i];
    }
  }
  const Rational m(static_cast<std::int64_t>(f.max_set_size()));
  if (!est.max_ratio || *est.max_ratio > m) {
    throw InvariantError("greedy-factor: ratio exceeds the largest set size");
  }
  return est;
}

std::optional<Weighting> non_matroid_witness(const SetFamily& f, std::size_t trials,
                                             std::uint64_t seed) {
  check_input(f, Weighting(f.ground_size()));
  if (auto w = exchange_weighting(f)) {
    if (*greedy_unchecked(f, *w, Sense::Max).ratio > Rational(1)) return w;
  }
  for (std::size_t t = 0; t < trials; ++t) {
    Weighting w = random_weighting(f.ground_size(), seed ^ (kGolden * (t + 1)));
    const auto ratio = greedy_unchecked(f, w, Sense::Max).ratio;
    if (!ratio || *ratio > Rational(1)) return w;
  }
  return std::nullopt;
}

SetFamily star_family(std::size_t m) {
  if (m < 1) throw PreconditionError("star: need m >= 1");
  std::vector<std::size_t> leaves(m);
  std::iota(leaves.begin(), leaves.end(), 1);
  return SetFamily(m + 1, {{0}, leaves});
}

Weighting star_weighting(std::size_t m, const Rational& epsilon) {
  if (epsilon.sign() <= 0 || epsilon >= Rational(1)) {
    throw PreconditionError("star: need 0 < epsilon < 1");
  }
  Weighting x(m + 1, Rational(1));
  x[0] = (Rational(1) - epsilon / Rational(2)).reciprocal();
  return x;
}

}  // namespace troplab
