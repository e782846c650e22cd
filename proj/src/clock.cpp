#include "bclock/clock.hpp"

#include "bclock/rng.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>

namespace bclock {

namespace {

struct ScanStats {
  unsigned last_index;  // 1-based
  unsigned laps;
  unsigned run_length;
};

// Allocation-free scan used by the enumerator.
ScanStats scan_stats(const unsigned* labels, unsigned M, unsigned symbols) {
  int cur = -1;
  unsigned laps = 0;
  unsigned run = symbols;
  for (unsigned k = 1; k <= symbols; ++k) {
    int found = -1;
    for (int i = cur + 1; i < static_cast<int>(M); ++i) {
      if (labels[i] == k) {
        found = i;
        break;
      }
    }
    if (found < 0) {
      for (int i = 0; i <= cur; ++i) {
        if (labels[i] == k) {
          found = i;
          break;
        }
      }
      if (found < 0) throw DomainError("label sequence is missing symbol " + std::to_string(k));
      if (laps == 0) run = k - 1;
      ++laps;
    }
    cur = found;
  }
  return {static_cast<unsigned>(cur + 1), laps, run};
}

template <class Fn>
void run_workers(unsigned threads, unsigned tasks, Fn&& task) {
  threads = std::max(1u, std::min(threads, tasks));
  if (threads == 1) {
    for (unsigned t = 0; t < tasks; ++t) task(0u, t);
    return;
  }
  std::atomic<unsigned> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (unsigned t = next++; t < tasks; t = next++) task(w, t);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

ClockSample walk_clock(std::span<const double> positions, std::span<const unsigned> labels, unsigned symbols) {
  if (positions.size() != labels.size()) throw DomainError("walk_clock: positions and labels differ in length");
  const int M = static_cast<int>(labels.size());
  ClockSample s;
  s.index_sequence.reserve(symbols);
  s.spacings.reserve(symbols);
  s.run_length = symbols;
  int cur = -1;
  double here = 0.0;
  for (unsigned k = 1; k <= symbols; ++k) {
    int found = -1;
    bool wrapped = false;
    for (int i = cur + 1; i < M && found < 0; ++i) {
      if (labels[i] == k) found = i;
    }
    if (found < 0) {
      for (int i = 0; i <= cur && found < 0; ++i) {
        if (labels[i] == k) found = i;
      }
      if (found < 0) throw DomainError("walk_clock: missing symbol " + std::to_string(k));
      wrapped = true;
    }
    if (wrapped) {
      if (s.laps == 0) s.run_length = k - 1;
      ++s.laps;
    }
    const double there = positions[found];
    s.spacings.push_back(wrapped ? there + 1.0 - here : there - here);
    s.index_sequence.push_back(static_cast<unsigned>(found + 1));
    here = there;
    cur = found;
  }
  return s;
}

ClockSample scan_permutation(std::span<const unsigned> labels, unsigned symbols) {
  std::vector<double> positions(labels.size());
  for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = static_cast<double>(i) / positions.size();
  ClockSample s = walk_clock(positions, labels, symbols);
  s.spacings.clear();
  return s;
}

ClockSample clock_trial(const MultisetSpec& spec, std::uint64_t seed, std::uint64_t trial, std::uint64_t* redraws) {
  CounterRng rng(seed, trial);
  const unsigned M = spec.total();
  std::vector<std::pair<double, unsigned>> marks(M);
  for (;;) {
    std::size_t pos = 0;
    for (unsigned s = 0; s < spec.symbols(); ++s) {
      for (unsigned r = 0; r < spec.multiplicities[s]; ++r) marks[pos++] = {rng.uniform(), s + 1};
    }
    std::sort(marks.begin(), marks.end());
    bool tie = false;
    for (std::size_t i = 1; i < M && !tie; ++i) tie = marks[i].first == marks[i - 1].first;
    if (!tie) break;
    if (redraws) ++*redraws;
  }
  std::vector<double> positions(M);
  std::vector<unsigned> labels(M);
  for (unsigned i = 0; i < M; ++i) {
    positions[i] = marks[i].first;
    labels[i] = marks[i].second;
  }
  return walk_clock(positions, labels, spec.symbols());
}

void simulate_clock(const MultisetSpec& spec, std::uint64_t seed, std::uint64_t trials,
                    const std::function<void(const ClockSample&)>& sink) {
  for (std::uint64_t t = 0; t < trials; ++t) sink(clock_trial(spec, seed, t));
}

ClockSummary simulate_clock_summary(const MultisetSpec& spec, std::uint64_t seed, std::uint64_t trials,
                                    unsigned threads) {
  if (trials == 0) throw DomainError("simulation needs at least one trial");
  const unsigned M = spec.total();
  const unsigned n = spec.symbols();
  const unsigned chunks = std::max(1u, threads) * 4;
  std::vector<ClockSummary> parts(chunks);
  run_workers(threads, chunks, [&](unsigned, unsigned c) {
    ClockSummary& part = parts[c];
    part.index_counts.assign(M, 0);
    part.laps_counts.assign(n, 0);
    part.run_counts.assign(n, 0);
    const std::uint64_t begin = trials * c / chunks;
    const std::uint64_t end = trials * (c + 1) / chunks;
    for (std::uint64_t t = begin; t < end; ++t) {
      const ClockSample s = clock_trial(spec, seed, t, &part.redraws);
      ++part.index_counts[s.index_sequence.back() - 1];
      ++part.laps_counts[s.laps];
      ++part.run_counts[s.run_length - 1];
    }
    part.trials = end - begin;
  });
  ClockSummary out;
  out.index_counts.assign(M, 0);
  out.laps_counts.assign(n, 0);
  out.run_counts.assign(n, 0);
  for (const auto& p : parts) {
    out.trials += p.trials;
    out.redraws += p.redraws;
    for (unsigned i = 0; i < M; ++i) out.index_counts[i] += p.index_counts[i];
    for (unsigned d = 0; d < n; ++d) {
      out.laps_counts[d] += p.laps_counts[d];
      out.run_counts[d] += p.run_counts[d];
    }
  }
  return out;
}

Integer JointTable::total() const { return counts.sum(); }

IntegerRowVector JointTable::index_marginal() const { return counts.rowwise().sum().transpose(); }

IntegerRowVector JointTable::laps_marginal() const { return counts.colwise().sum(); }

JointEnumeration enumerate_joint(const MultisetSpec& spec, unsigned threads) {
  const unsigned M = spec.total();
  const unsigned n = spec.symbols();
  if (M > kMaxEnumerationSize) {
    throw DomainError("enumerate_joint: M = " + std::to_string(M) + " exceeds the limit " +
                      std::to_string(kMaxEnumerationSize));
  }
  struct Partial {
    IntegerMatrix counts;
    IntegerRowVector runs;
  };
  std::vector<Partial> parts(n);
  run_workers(threads, n, [&](unsigned, unsigned first) {
    // Permutations whose first label is symbol first+1.
    std::vector<unsigned> labels;
    labels.reserve(M);
    labels.push_back(first + 1);
    for (unsigned s = 0; s < n; ++s) {
      for (unsigned r = 0; r < spec.multiplicities[s] - (s == first ? 1 : 0); ++r) labels.push_back(s + 1);
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(M) * n, 0);
    std::vector<std::uint64_t> runs(n, 0);
    do {
      const ScanStats st = scan_stats(labels.data(), M, n);
      ++counts[(st.last_index - 1) * n + st.laps];
      ++runs[st.run_length - 1];
    } while (std::next_permutation(labels.begin() + 1, labels.end()));
    Partial& p = parts[first];
    p.counts = IntegerMatrix::Zero(M, n);
    p.runs = IntegerRowVector::Zero(n);
    for (unsigned i = 0; i < M; ++i) {
      for (unsigned d = 0; d < n; ++d) p.counts(i, d) = Integer(counts[i * n + d]);
    }
    for (unsigned l = 0; l < n; ++l) p.runs(l) = Integer(runs[l]);
  });
  JointEnumeration out{{n, IntegerMatrix::Zero(M, n)}, IntegerRowVector::Zero(n)};
  for (const auto& p : parts) {
    out.table.counts += p.counts;
    out.run_counts += p.runs;
  }
  return out;
}

RationalMatrix TransitionMatrix::probabilities() const {
  RationalMatrix P(entries.rows(), entries.cols());
  for (Eigen::Index i = 0; i < entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < entries.cols(); ++j) P(i, j) = Rational(entries(i, j), normalizer);
  }
  return P;
}

TransitionMatrix q_matrix(unsigned n) {
  if (n < 2) throw DomainError("q_matrix requires n >= 2");
  const long rows = 2 * static_cast<long>(n) - 2;
  const long cols = 2 * static_cast<long>(n);
  TransitionMatrix t{n, IntegerMatrix(rows, cols), binomial(2 * n, 2)};
  for (long x = 1; x <= rows; ++x) {
    for (long y = 1; y <= cols; ++y) {
      long q;
      if (y <= x) {
        q = x - y + 1;
      } else if (y == x + 1) {
        q = cols - 1 - x;
      } else {
        q = cols - y + x;
      }
      t.entries(x - 1, y - 1) = q;
    }
  }
  return t;
}

namespace {

struct InsertionOutcome {
  unsigned y;  // 1-based landing index in the enlarged sequence
  bool wrap;
};

// For each old index x (0-based) of a sequence of length old_len, the
// outcome of every one of the C(old_len + 2, 2) ways to insert a new pair.
std::vector<std::vector<InsertionOutcome>> insertion_outcomes(unsigned old_len) {
  const unsigned len = old_len + 2;
  std::vector<std::vector<InsertionOutcome>> out(old_len);
  for (unsigned a = 1; a <= len; ++a) {
    for (unsigned b = a + 1; b <= len; ++b) {
      for (unsigned x = 1; x <= old_len; ++x) {
        // x-th slot not occupied by a or b
        unsigned shifted = x + (a <= x ? 1 : 0);
        if (b <= shifted) ++shifted;
        InsertionOutcome o;
        if (a > shifted) {
          o = {a, false};
        } else if (b > shifted) {
          o = {b, false};
        } else {
          o = {a, true};
        }
        out[x - 1].push_back(o);
      }
    }
  }
  return out;
}

}  // namespace

TransitionMatrix q_matrix_by_insertion(unsigned n) {
  if (n < 2) throw DomainError("q_matrix_by_insertion requires n >= 2");
  const unsigned old_len = 2 * n - 2;
  TransitionMatrix t{n, IntegerMatrix::Zero(old_len, 2 * n), binomial(2 * n, 2)};
  const auto outcomes = insertion_outcomes(old_len);
  for (unsigned x = 0; x < old_len; ++x) {
    for (const auto& o : outcomes[x]) t.entries(x, o.y - 1) += 1;
  }
  return t;
}

DistributionVector p_vector_markov(unsigned n) {
  if (n == 0) throw DomainError("p_vector_markov requires n >= 1");
  RationalRowVector p(2);
  p << Rational(1), Rational(0);
  for (unsigned k = 2; k <= n; ++k) {
    const RationalRowVector next = p * q_matrix(k).probabilities();
    p = next;
  }
  return {n, DistributionKind::probability, 1, p};
}

JointTable joint_recursion(unsigned n) {
  if (n == 0) throw DomainError("joint_recursion requires n >= 1");
  IntegerMatrix table = IntegerMatrix::Zero(2, 1);
  table(0, 0) = 1;
  for (unsigned k = 1; k < n; ++k) {
    const unsigned old_len = 2 * k;
    const auto outcomes = insertion_outcomes(old_len);
    IntegerMatrix next = IntegerMatrix::Zero(old_len + 2, k + 1);
    for (unsigned x = 0; x < old_len; ++x) {
      for (unsigned d = 0; d < k; ++d) {
        const Integer& c = table(x, d);
        if (c == 0) continue;
        for (const auto& o : outcomes[x]) next(o.y - 1, d + (o.wrap ? 1 : 0)) += c;
      }
    }
    table = std::move(next);
  }
  return {n, table};
}

}  // namespace bclock
