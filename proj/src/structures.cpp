#include "littlewood/structures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace littlewood {

// ---------------------------------------------------------------------------
// GAPs

GapResult gap_rank2(Frequency a, Frequency b, std::int64_t m_count, std::int64_t n_count, bool force) {
  if (a == 0 || b == 0) throw ParameterError("GAP steps a and b must be nonzero");
  if (m_count < 1 || n_count < 1) throw ParameterError("GAP lengths M and N must be positive");
  const bool distinct_condition = checked_mul(a, m_count) < b;
  if (!distinct_condition && !force) {
    throw HypothesisError("a*M < b", "a*M=" + std::to_string(a * m_count) + " >= b=" + std::to_string(b));
  }

  GapResult out;
  std::unordered_map<Frequency, std::pair<std::int64_t, std::int64_t>> first_seen;
  first_seen.reserve(static_cast<std::size_t>(m_count * n_count));
  for (std::int64_t m = 1; m <= m_count; ++m) {
    for (std::int64_t n = 1; n <= n_count; ++n) {
      const Frequency v = checked_add(checked_mul(a, m), checked_mul(b, n));
      auto [it, inserted] = first_seen.try_emplace(v, m, n);
      if (inserted) {
        out.elements.push_back(v);
      } else {
        out.collisions.push_back({it->second.first, it->second.second, m, n, v});
      }
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  if (!out.collisions.empty() && !force) {
    // Only reachable with a negative step, where a*M < b no longer separates rows.
    const auto& c = out.collisions.front();
    std::ostringstream msg;
    msg << out.collisions.size() << " colliding pairs, first (" << c.m1 << "," << c.n1 << ") and (" << c.m2 << ","
        << c.n2 << ") -> " << c.value;
    throw HypothesisError("distinct elements", msg.str());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

struct Failure {
  std::string condition;
  std::string detail;
};

class Validator {
 public:
  ValidationReport run_integer(std::span<const Frequency> set, const DimCertificate& cert) {
    check_integer(set, cert, "");
    return report_;
  }

  ValidationReport run_lattice(const LatticeSet& set, const DimCertificate& cert) {
    check_lattice(set, cert, "");
    return report_;
  }

 private:
  bool fail(const std::string& path, std::string condition, std::string detail) {
    if (report_.pass) {
      report_.pass = false;
      report_.condition = std::move(condition);
      report_.detail = std::move(detail);
      report_.path = path.empty() ? "/" : path;
    }
    return false;
  }

  bool require(bool ok, const std::string& path, const char* condition, const std::string& detail) {
    ++report_.checks;
    return ok || fail(path, condition, detail);
  }

  bool check_sizes(const DimCertificate& cert, const std::string& path) {
    if (!require(!cert.sizes.empty(), path, "rank >= 1", "certificate has no sizes")) return false;
    for (std::int64_t n : cert.sizes) {
      if (!require(n >= 1, path, "n_i >= 1", "size " + std::to_string(n))) return false;
    }
    return true;
  }

  bool check_integer(std::span<const Frequency> set, const DimCertificate& cert, const std::string& path) {
    if (!require(cert.flavor == DimCertificate::Flavor::integer, path, "integer flavor",
                 "lattice certificate presented for an integer set")) {
      return false;
    }
    if (!check_sizes(cert, path)) return false;
    const std::size_t rank = cert.rank();
    if (!require(cert.deltas.size() + 1 == rank, path, "r-1 deltas",
                 std::to_string(cert.deltas.size()) + " deltas for rank " + std::to_string(rank))) {
      return false;
    }
    for (double d : cert.deltas) {
      if (!require(d > 0.0, path, "delta_i > 0", "delta " + std::to_string(d))) return false;
    }
    if (!require(static_cast<std::int64_t>(set.size()) >= cert.sizes[0], path, "|A| >= n_1",
                 "|A|=" + std::to_string(set.size()) + ", n_1=" + std::to_string(cert.sizes[0]))) {
      return false;
    }
    if (rank == 1) return true;

    const double delta = cert.deltas[0];
    if (!require(cert.d1 >= 1 && cert.d2 >= 1, path, "d1, d2 positive",
                 "d1=" + std::to_string(cert.d1) + ", d2=" + std::to_string(cert.d2))) {
      return false;
    }
    const long double gap_bound = (2.0L + static_cast<long double>(delta)) * static_cast<long double>(cert.d1);
    if (!require(static_cast<long double>(cert.d2) > gap_bound, path, "gap condition d2 > (2+delta)d1",
                 "d2=" + std::to_string(cert.d2) + ", (2+delta)d1=" + std::to_string(static_cast<double>(gap_bound)))) {
      return false;
    }
    if (!require(static_cast<std::int64_t>(cert.blocks.size()) >= cert.sizes[0], path, "|I| >= n_1",
                 "|I|=" + std::to_string(cert.blocks.size()) + ", n_1=" + std::to_string(cert.sizes[0]))) {
      return false;
    }

    std::vector<Frequency> keys;
    std::vector<Frequency> rebuilt;
    for (const auto& block : cert.blocks) {
      const std::string here = path + "/k=" + std::to_string(block.key);
      keys.push_back(block.key);
      if (!require(!block.subset.empty(), here, "A_k nonempty", "empty block")) return false;
      if (!require(std::is_sorted(block.subset.begin(), block.subset.end()) &&
                       std::adjacent_find(block.subset.begin(), block.subset.end()) == block.subset.end(),
                   here, "A_k sorted and distinct", "block elements not strictly increasing")) {
        return false;
      }
      const Frequency lo = block.subset.front();
      const Frequency hi = block.subset.back();
      if (!require(lo >= -cert.d1 && hi <= cert.d1, here, "A_k in [-d1, d1]",
                   "block spans [" + std::to_string(lo) + ", " + std::to_string(hi) + "], d1=" + std::to_string(cert.d1))) {
        return false;
      }
      const bool tails_match =
          block.child.sizes == std::vector<std::int64_t>(cert.sizes.begin() + 1, cert.sizes.end()) &&
          block.child.deltas == std::vector<double>(cert.deltas.begin() + 1, cert.deltas.end());
      if (!require(tails_match, here, "child parameters (n_2..n_r; delta_2..)", "child sizes or deltas differ")) {
        return false;
      }
      const Frequency base = checked_mul(block.key, cert.d2);
      for (Frequency a : block.subset) rebuilt.push_back(checked_add(base, a));
    }
    std::sort(keys.begin(), keys.end());
    if (!require(std::adjacent_find(keys.begin(), keys.end()) == keys.end(), path, "distinct block indices",
                 "repeated k in I")) {
      return false;
    }
    std::sort(rebuilt.begin(), rebuilt.end());
    const auto dup = std::adjacent_find(rebuilt.begin(), rebuilt.end());
    if (!require(dup == rebuilt.end(), path, "translated blocks disjoint",
                 dup == rebuilt.end() ? "" : "element " + std::to_string(*dup) + " produced twice")) {
      return false;
    }
    if (!require(std::equal(rebuilt.begin(), rebuilt.end(), set.begin(), set.end()), path,
                 "union of A_k + k d2 equals A", "decomposition does not reproduce the set")) {
      return false;
    }
    for (const auto& block : cert.blocks) {
      if (!check_integer(block.subset, block.child, path + "/k=" + std::to_string(block.key))) return false;
    }
    return true;
  }

  bool check_lattice(const LatticeSet& set, const DimCertificate& cert, const std::string& path) {
    if (!require(cert.flavor == DimCertificate::Flavor::lattice, path, "lattice flavor",
                 "integer certificate presented for a lattice set")) {
      return false;
    }
    if (!check_sizes(cert, path)) return false;
    if (!require(cert.rank() == set.rank(), path, "certificate rank equals set rank",
                 std::to_string(cert.rank()) + " vs " + std::to_string(set.rank()))) {
      return false;
    }
    if (set.rank() == 1) {
      return require(static_cast<std::int64_t>(set.size()) >= cert.sizes[0], path, "|A| >= n_1",
                     "|A|=" + std::to_string(set.size()) + ", n_1=" + std::to_string(cert.sizes[0]));
    }
    const Projection proj = project_and_fibre(set, 0);
    if (!require(static_cast<std::int64_t>(proj.values.size()) >= cert.sizes[0], path, "|A_1| >= n_1",
                 "|A_1|=" + std::to_string(proj.values.size()) + ", n_1=" + std::to_string(cert.sizes[0]))) {
      return false;
    }
    if (!require(cert.blocks.size() == proj.fibres.size(), path, "one child per fibre",
                 std::to_string(cert.blocks.size()) + " children for " + std::to_string(proj.fibres.size()) + " fibres")) {
      return false;
    }
    const std::vector<std::int64_t> tail(cert.sizes.begin() + 1, cert.sizes.end());
    for (const auto& block : cert.blocks) {
      const std::string here = path + "/a1=" + std::to_string(block.key);
      auto it = proj.fibres.find(block.key);
      if (!require(it != proj.fibres.end(), here, "child keyed by a fibre", "no fibre above this coordinate")) {
        return false;
      }
      if (!require(block.child.sizes == tail, here, "child parameters (n_2..n_r)", "child sizes differ")) {
        return false;
      }
      if (!check_lattice(it->second, block.child, here)) return false;
    }
    return true;
  }

  ValidationReport report_;
};

}  // namespace

ValidationReport validate_certificate(const IntegerSet& set, const DimCertificate& cert) {
  return Validator().run_integer(set.elements(), cert);
}

ValidationReport validate_certificate(const LatticeSet& set, const DimCertificate& cert) {
  return Validator().run_lattice(set, cert);
}

// ---------------------------------------------------------------------------
// Lattice constructions

namespace {

void lattice_level(const std::vector<std::int64_t>& sizes, std::size_t level, Shape shape, Rng& rng,
                   std::vector<Frequency>& prefix, std::vector<std::vector<Frequency>>& points,
                   DimCertificate& cert) {
  cert.flavor = DimCertificate::Flavor::lattice;
  cert.sizes.assign(sizes.begin() + static_cast<std::ptrdiff_t>(level), sizes.end());
  const std::int64_t n = sizes[level];
  std::vector<Frequency> coords;
  if (shape == Shape::box) {
    for (std::int64_t i = 1; i <= n; ++i) coords.push_back(i);
  } else {
    coords = rng.distinct_sample(0, 4 * n - 1, static_cast<std::size_t>(n));
  }
  const bool leaf = level + 1 == sizes.size();
  for (Frequency c : coords) {
    prefix.push_back(c);
    if (leaf) {
      points.push_back(prefix);
    } else {
      DimBlock block;
      block.key = c;
      lattice_level(sizes, level + 1, shape, rng, prefix, points, block.child);
      cert.blocks.push_back(std::move(block));
    }
    prefix.pop_back();
  }
}

void check_size_list(const std::vector<std::int64_t>& sizes) {
  if (sizes.empty()) throw ParameterError("need at least one size");
  for (std::int64_t n : sizes) {
    if (n < 1) throw ParameterError("sizes n_i must be >= 1");
  }
}

}  // namespace

StrongLattice build_strong_lattice(const std::vector<std::int64_t>& sizes, Shape shape, Rng& rng) {
  check_size_list(sizes);
  std::vector<Frequency> prefix;
  std::vector<std::vector<Frequency>> points;
  DimCertificate cert;
  lattice_level(sizes, 0, shape, rng, prefix, points, cert);
  return {LatticeSet(sizes.size(), points), std::move(cert)};
}

// ---------------------------------------------------------------------------
// Integer constructions

namespace {

struct Level {
  std::vector<Frequency> elements;  // ascending
  DimCertificate cert;
};

Frequency floor_div(Frequency a, Frequency b) {
  Frequency q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Moves a level so that it sits symmetrically around 0. Leaves shift by the
// exact midpoint; higher levels shift by a multiple of their own d2 so the
// certificate stays a decomposition (the index set absorbs the shift).
void centre_level(Level& level) {
  const Frequency lo = level.elements.front();
  const Frequency hi = level.elements.back();
  const Frequency mid = lo + (hi - lo) / 2;
  Frequency shift = mid;
  if (level.cert.rank() > 1) {
    const Frequency d2 = level.cert.d2;
    const Frequency u = floor_div(checked_add(checked_mul(2, mid), d2), checked_mul(2, d2));
    shift = checked_mul(u, d2);
    for (auto& block : level.cert.blocks) block.key -= u;
  }
  for (auto& x : level.elements) x -= shift;
}

Level integer_level(const StrongIntegerParams& p, std::size_t depth, Rng& rng) {
  Level out;
  out.cert.flavor = DimCertificate::Flavor::integer;
  out.cert.sizes.assign(p.sizes.begin() + static_cast<std::ptrdiff_t>(depth), p.sizes.end());
  out.cert.deltas.assign(p.deltas.begin() + static_cast<std::ptrdiff_t>(depth), p.deltas.end());
  const std::int64_t n = p.sizes[depth];

  if (depth + 1 == p.sizes.size()) {
    if (p.shape == Shape::box) {
      for (std::int64_t i = 0; i < n; ++i) out.elements.push_back(i);
    } else {
      out.elements = rng.distinct_sample(0, checked_mul(4, n) - 1, static_cast<std::size_t>(n));
    }
    return out;
  }

  std::vector<Frequency> index;
  if (p.shape == Shape::box) {
    for (std::int64_t k = 0; k < n; ++k) index.push_back(k);
  } else {
    index = rng.distinct_sample(0, checked_mul(4, n) - 1, static_cast<std::size_t>(n));
  }

  std::vector<Level> children;
  children.reserve(index.size());
  if (p.shape == Shape::box) {
    Level child = integer_level(p, depth + 1, rng);
    centre_level(child);
    children.assign(index.size(), child);
  } else {
    for (std::size_t i = 0; i < index.size(); ++i) {
      Level child = integer_level(p, depth + 1, rng);
      centre_level(child);
      children.push_back(std::move(child));
    }
  }

  Frequency d1 = 1;
  for (const auto& c : children) {
    d1 = std::max({d1, -c.elements.front(), c.elements.back()});
  }
  const long double gap = p.stretch * (2.0L + static_cast<long double>(p.deltas[depth])) * static_cast<long double>(d1);
  if (gap >= 9.0e18L) throw OverflowError("d2 for this construction does not fit in 64 bits");
  const Frequency d2 = static_cast<Frequency>(std::floor(gap)) + 1;
  out.cert.d1 = d1;
  out.cert.d2 = d2;

  for (std::size_t i = 0; i < index.size(); ++i) {
    const Frequency base = checked_mul(index[i], d2);
    for (Frequency a : children[i].elements) out.elements.push_back(checked_add(base, a));
    DimBlock block;
    block.key = index[i];
    block.subset = std::move(children[i].elements);
    block.child = std::move(children[i].cert);
    out.cert.blocks.push_back(std::move(block));
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

}  // namespace

StrongInteger build_strong_integer(const StrongIntegerParams& params, Rng& rng) {
  check_size_list(params.sizes);
  if (params.deltas.size() + 1 != params.sizes.size()) {
    throw ParameterError("need r-1 deltas for r sizes");
  }
  for (double d : params.deltas) {
    if (!(d > 0.0) || !std::isfinite(d)) throw ParameterError("deltas must be positive and finite");
  }
  if (!(params.stretch >= 1.0) || !std::isfinite(params.stretch)) {
    throw ParameterError("stretch must be >= 1");
  }
  // Lower bounds on d1, d2 level by level, so impossible requests fail before
  // any allocation.
  long double d1 = std::max(1.0L, std::floor((params.sizes.back() - 1) / 2.0L));
  for (std::size_t i = params.deltas.size(); i-- > 0;) {
    const long double d2 = params.stretch * (2.0L + static_cast<long double>(params.deltas[i])) * d1;
    if (d2 >= 9.0e18L) throw OverflowError("d2 for this construction does not fit in 64 bits");
    d1 = std::max(d1, std::floor(static_cast<long double>(params.sizes[i] - 1) * d2 / 2.0L));
    if (d1 >= 9.0e18L) throw OverflowError("frequencies for this construction do not fit in 64 bits");
  }
  Level top = integer_level(params, 0, rng);
  return {IntegerSet(std::move(top.elements)), std::move(top.cert)};
}

// ---------------------------------------------------------------------------

Projection project_and_fibre(const LatticeSet& set, std::size_t axis, Rank1Policy policy) {
  if (axis >= set.rank()) {
    throw ParameterError("axis " + std::to_string(axis) + " out of range for rank " + std::to_string(set.rank()));
  }
  if (set.rank() == 1) {
    if (policy == Rank1Policy::reject) throw ParameterError("cannot take fibres of a rank-1 set");
    std::vector<Frequency> v(set.coordinates().begin(), set.coordinates().end());
    return {IntegerSet(std::move(v)), {}};
  }
  std::map<Frequency, std::vector<std::vector<Frequency>>> grouped;
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto p = set.point(i);
    std::vector<Frequency> rest;
    rest.reserve(p.size() - 1);
    for (std::size_t a = 0; a < p.size(); ++a) {
      if (a != axis) rest.push_back(p[a]);
    }
    grouped[p[axis]].push_back(std::move(rest));
  }
  std::vector<Frequency> values;
  std::map<Frequency, LatticeSet> fibres;
  for (auto& [value, pts] : grouped) {
    values.push_back(value);
    fibres.emplace(value, LatticeSet(set.rank() - 1, pts));
  }
  return {IntegerSet(std::move(values)), std::move(fibres)};
}

}  // namespace littlewood
