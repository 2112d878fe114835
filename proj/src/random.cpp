#include "littlewood/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "littlewood/errors.hpp"

namespace littlewood {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw ParameterError("uniform_int: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  const std::uint64_t limit = (~std::uint64_t{0} / range) * range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

std::vector<std::int64_t> Rng::distinct_sample(std::int64_t lo, std::int64_t hi, std::size_t count) {
  if (hi < lo) throw ParameterError("distinct_sample: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range != 0 && count > range) {
    throw ParameterError("distinct_sample: cannot draw " + std::to_string(count) + " distinct values from a range of " +
                         std::to_string(range));
  }
  std::vector<std::int64_t> out;
  if (range != 0 && range <= 4 * static_cast<std::uint64_t>(count)) {
    // Dense: partial Fisher-Yates over the whole range.
    std::vector<std::int64_t> all(range);
    std::iota(all.begin(), all.end(), lo);
    for (std::size_t i = 0; i < count; ++i) {
      const auto j = static_cast<std::size_t>(uniform_int(static_cast<std::int64_t>(i), static_cast<std::int64_t>(range - 1)));
      std::swap(all[i], all[j]);
    }
    out.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count));
  } else {
    std::set<std::int64_t> seen;
    while (seen.size() < count) seen.insert(uniform_int(lo, hi));
    out.assign(seen.begin(), seen.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rng Rng::split() {
  std::uint64_t z = next() + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return Rng(z ^ (z >> 31));
}

}  // namespace littlewood
