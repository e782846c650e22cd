#pragma once

#include "bclock/bernstein.hpp"
#include "bclock/linalg.hpp"
#include "bclock/multiset.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace bclock {

/// Result of walking the clock once.
///
/// Indices are 1-based positions among the M marked points. `laps` counts
/// the wrap-arounds (descents of the index sequence) and `run_length` is the
/// largest l such that 1, 2, ..., l occurs as a subsequence.
struct ClockSample {
  std::vector<unsigned> index_sequence;
  unsigned laps = 0;
  unsigned run_length = 0;
  std::vector<double> spacings;  ///< X_1..X_n; empty for purely combinatorial walks
};

/// Clockwise scan of a labelling of M hours (labels are symbols 1..n).
/// I_1 is the first hour labelled 1; I_k is the first hour labelled k
/// strictly after I_{k-1}, wrapping around when needed.
ClockSample scan_permutation(std::span<const unsigned> labels, unsigned symbols);

/// Scan of a continuous configuration: `positions` sorted ascending in
/// [0, 1), `labels[i]` the symbol at positions[i]. Also fills the spacings.
ClockSample walk_clock(std::span<const double> positions, std::span<const unsigned> labels, unsigned symbols);

/// One simulated trial; the uniforms come from the stream (seed, trial).
/// Exact ties among the uniforms trigger a redraw, counted in *redraws.
ClockSample clock_trial(const MultisetSpec& spec, std::uint64_t seed, std::uint64_t trial,
                        std::uint64_t* redraws = nullptr);

/// Runs `trials` trials in order and hands each sample to `sink`.
void simulate_clock(const MultisetSpec& spec, std::uint64_t seed, std::uint64_t trials,
                    const std::function<void(const ClockSample&)>& sink);

/// Histogram aggregate of a simulation; identical for any thread count.
struct ClockSummary {
  std::uint64_t trials = 0;
  std::uint64_t redraws = 0;
  std::vector<std::uint64_t> index_counts;   ///< I_n = 1..M at [0..M-1]
  std::vector<std::uint64_t> laps_counts;    ///< D = 0..n-1
  std::vector<std::uint64_t> run_counts;     ///< L = 1..n at [0..n-1]
};

ClockSummary simulate_clock_summary(const MultisetSpec& spec, std::uint64_t seed, std::uint64_t trials,
                                    unsigned threads = 1);

/// #(n; i, d): rows are I = 1..M, columns D = 0..n-1.
struct JointTable {
  unsigned n = 0;
  IntegerMatrix counts;

  Integer total() const;
  IntegerRowVector index_marginal() const;  ///< #(n; i, +)
  IntegerRowVector laps_marginal() const;   ///< #(n; +, d)
};

struct JointEnumeration {
  JointTable table;
  IntegerRowVector run_counts;  ///< L = 1..n
};

inline constexpr unsigned kMaxEnumerationSize = 16;

/// Exhaustive scan of all M!/prod m_i! multiset permutations, visited in
/// lexicographic order and split by first symbol across `threads` workers.
JointEnumeration enumerate_joint(const MultisetSpec& spec, unsigned threads = 1);

/// Q_n for the pair-insertion Markov chain of I_n; rows x = 1..2n-2,
/// columns y = 1..2n. Each row sums to the normalizer C(2n, 2).
struct TransitionMatrix {
  unsigned n = 0;
  IntegerMatrix entries;
  Integer normalizer;

  RationalMatrix probabilities() const;  ///< P_n = Q_n / C(2n, 2)
};

TransitionMatrix q_matrix(unsigned n);

/// Q_n counted directly: insert the pair n, n into every pair of the 2n
/// slots and record where the scan from each old index lands.
TransitionMatrix q_matrix_by_insertion(unsigned n);

/// Forward equation p_n = p_{n-1} P_n from p_1 = (1, 0).
DistributionVector p_vector_markov(unsigned n);

/// #(n; i, d) by dynamic programming over pair insertions; a lap is added
/// exactly when both new symbols land before the current index.
JointTable joint_recursion(unsigned n);

}  // namespace bclock
