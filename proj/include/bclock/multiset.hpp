#pragma once

#include "bclock/types.hpp"

#include <string>
#include <vector>

namespace bclock {

/// Multiplicities (m_1, ..., m_n) of the multiset 1^{m_1} 2^{m_2} ... n^{m_n}.
struct MultisetSpec {
  std::vector<unsigned> multiplicities;

  MultisetSpec() = default;
  explicit MultisetSpec(std::vector<unsigned> m);

  /// All multiplicities equal to `m`, `n` symbols.
  static MultisetSpec uniform(unsigned n, unsigned m);

  unsigned symbols() const { return static_cast<unsigned>(multiplicities.size()); }
  unsigned total() const;  ///< M = sum m_i

  /// M! / prod m_i!
  Integer permutation_count() const;

  /// Spec restricted to the first k symbols.
  MultisetSpec prefix(unsigned k) const;

  std::string to_string() const;  ///< "2,3,2"

  friend bool operator==(const MultisetSpec&, const MultisetSpec&) = default;
};

/// Parses "2,2,2"; throws DomainError on empty or zero entries.
MultisetSpec parse_multiset_spec(const std::string& text);

/// The sum of independent beta(1, m_i) variables uses the same data.
using BetaSumSpec = MultisetSpec;

}  // namespace bclock
