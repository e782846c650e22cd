#include "bclock/multiset.hpp"

#include <numeric>
#include <sstream>

namespace bclock {

MultisetSpec::MultisetSpec(std::vector<unsigned> m) : multiplicities(std::move(m)) {
  if (multiplicities.empty()) throw DomainError("multiset spec needs at least one symbol");
  for (unsigned mi : multiplicities) {
    if (mi == 0) throw DomainError("multiplicities must be positive");
  }
}

MultisetSpec MultisetSpec::uniform(unsigned n, unsigned m) {
  return MultisetSpec(std::vector<unsigned>(n, m));
}

unsigned MultisetSpec::total() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), 0u);
}

Integer MultisetSpec::permutation_count() const {
  Integer r = factorial(total());
  for (unsigned mi : multiplicities) r /= factorial(mi);
  return r;
}

MultisetSpec MultisetSpec::prefix(unsigned k) const {
  if (k == 0 || k > symbols()) throw DomainError("prefix length out of range");
  return MultisetSpec(std::vector<unsigned>(multiplicities.begin(), multiplicities.begin() + k));
}

std::string MultisetSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(multiplicities[i]);
  }
  return s;
}

MultisetSpec parse_multiset_spec(const std::string& text) {
  std::vector<unsigned> m;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception&) {
      throw DomainError("bad multiplicity '" + item + "'");
    }
    if (pos != item.size() || v <= 0) throw DomainError("bad multiplicity '" + item + "'");
    m.push_back(static_cast<unsigned>(v));
  }
  return MultisetSpec(std::move(m));
}

}  // namespace bclock
