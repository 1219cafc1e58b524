#include "tverberg/tukey.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "tverberg/lp_feas.hpp"

namespace tverberg {

namespace {

// Vectors (points minus the center) spanning Q^dim, scaled to integers. The
// depth of the origin only depends on the direction of each vector.
struct Level {
  std::size_t dim = 0;
  std::vector<IntVector> vecs;
  std::vector<std::size_t> ids;  // original point index per vector
};

// Coordinates of a subspace spanned by the rows of `basis`, and the map taking
// a functional on those coordinates back to a normal in the ambient space.
struct Subspace {
  std::vector<Vector> basis;
  Matrix gram;

  explicit Subspace(std::vector<Vector> rows) : basis(std::move(rows)), gram(basis.size(), basis.size()) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) gram(i, j) = dot(basis[i], basis[j]);
  }

  // Coordinates are obtained from the normal equations; exact for vectors
  // inside the span.
  IntVector coordinates(const Vector& v) const {
    Vector rhs(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) rhs[j] = dot(basis[j], v);
    return primitive_integer(*solve_linear(gram, rhs));
  }

  // The normal m in the span with <m, B^T x> = <functional, x>.
  Vector lift(const Vector& functional) const {
    Vector y = *solve_linear(gram, functional);
    Vector m(basis.front().size());
    for (std::size_t j = 0; j < basis.size(); ++j) m = m + y[j] * basis[j];
    return m;
  }
};

IntVector normal_of(const std::vector<const IntVector*>& rows, std::size_t dim) {
  IntVector n(dim);
  if (dim == 2) {
    n[0] = (*rows[0])[1];
    n[1] = -(*rows[0])[0];
    return n;
  }
  if (dim == 3) {
    const IntVector& a = *rows[0];
    const IntVector& b = *rows[1];
    n[0] = a[1] * b[2] - a[2] * b[1];
    n[1] = a[2] * b[0] - a[0] * b[2];
    n[2] = a[0] * b[1] - a[1] * b[0];
    return n;
  }
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<IntVector> minor(rows.size(), IntVector(dim - 1));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0, jj = 0; j < dim; ++j)
        if (j != k) minor[i][jj++] = (*rows[i])[j];
    n[k] = integer_det(std::move(minor));
    if (k % 2 == 1) n[k] = -n[k];
  }
  return n;
}

bool all_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

// A hyperplane spanned by vectors of the level, with the sign of every vector
// against its normal. Hyperplanes containing more than dim-1 nonzero vectors
// are visited once, from their index-greedy basis.
struct Candidate {
  IntVector normal;
  std::vector<int> side;
  std::vector<std::size_t> boundary;
  std::vector<std::size_t> spanning;
};

template <class Visit>
void for_each_candidate(const Level& level, Visit&& visit) {
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < level.vecs.size(); ++i)
    if (!all_zero(level.vecs[i])) nonzero.push_back(i);
  const std::size_t k = level.dim - 1;
  if (nonzero.size() < k) return;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  do {
    Candidate cand;
    std::vector<const IntVector*> rows;
    for (std::size_t p : pick) {
      cand.spanning.push_back(nonzero[p]);
      rows.push_back(&level.vecs[nonzero[p]]);
    }
    cand.normal = normal_of(rows, level.dim);
    if (all_zero(cand.normal)) continue;
    cand.side.resize(level.vecs.size());
    std::size_t boundary_nonzero = 0;
    for (std::size_t i = 0; i < level.vecs.size(); ++i) {
      cand.side[i] = sgn(dot(cand.normal, level.vecs[i]));
      if (cand.side[i] == 0) {
        cand.boundary.push_back(i);
        if (!all_zero(level.vecs[i])) ++boundary_nonzero;
      }
    }
    if (boundary_nonzero > k) {
      std::vector<Vector> on_plane;
      for (std::size_t i : cand.boundary) on_plane.push_back(to_rational(level.vecs[i]));
      std::vector<std::size_t> greedy = independent_subset(on_plane);
      for (auto& g : greedy) g = cand.boundary[g];
      if (greedy != cand.spanning) continue;
    }
    visit(cand);
  } while (next_combination(pick, nonzero.size()));
}

// The boundary vectors of a candidate expressed in coordinates of the
// hyperplane, spanned by the candidate's spanning vectors.
std::pair<Level, Subspace> restrict_to_hyperplane(const Level& level, const Candidate& cand) {
  std::vector<Vector> basis;
  for (std::size_t i : cand.spanning) basis.push_back(to_rational(level.vecs[i]));
  Subspace sub(std::move(basis));
  Level down;
  down.dim = level.dim - 1;
  for (std::size_t i : cand.boundary) {
    down.vecs.push_back(sub.coordinates(to_rational(level.vecs[i])));
    down.ids.push_back(level.ids[i]);
  }
  return {std::move(down), std::move(sub)};
}

// sigma*n0 tilted by delta*m, small enough that no vector off the hyperplane
// changes side.
Vector tilt(const Level& level, const Candidate& cand, int sigma, const Vector& m) {
  const Vector n0 = to_rational(cand.normal);
  Scalar delta = 1;
  for (std::size_t i = 0; i < level.vecs.size(); ++i) {
    if (cand.side[i] == 0) continue;
    const Vector v = to_rational(level.vecs[i]);
    Scalar along = abs(dot(m, v));
    if (sgn(along) == 0) continue;
    Scalar limit = abs(dot(n0, v)) / (2 * along);
    if (limit < delta) delta = limit;
  }
  Vector n = Scalar(sigma) * n0;
  return n + delta * m;
}

class DepthSearch {
 public:
  explicit DepthSearch(const std::vector<std::size_t>& block_of) : block_of_(block_of) {}

  struct Found {
    std::size_t count;
    Vector normal;
  };

  std::size_t top_candidates = 0;

  // Best closed half-space through the origin of the level with fewer than
  // `bound` hit blocks, counting blocks already in `hit`.
  std::optional<Found> minimize(const Level& level, const std::vector<char>& hit, std::size_t hit_count,
                                std::size_t bound, bool top) {
    if (level.dim == 1) {
      std::optional<Found> best;
      for (int sigma : {1, -1}) {
        std::vector<char> h = hit;
        std::size_t count = hit_count;
        for (std::size_t i = 0; i < level.vecs.size(); ++i)
          if (sigma * sgn(level.vecs[i][0]) >= 0) mark(h, count, level.ids[i]);
        if (top) ++top_candidates;
        if (count < bound) {
          bound = count;
          best = Found{count, Vector{Scalar(sigma)}};
        }
      }
      return best;
    }

    std::optional<Found> best;
    for_each_candidate(level, [&](const Candidate& cand) {
      std::optional<std::pair<Level, Subspace>> down;
      for (int sigma : {1, -1}) {
        if (top) ++top_candidates;
        std::vector<char> h = hit;
        std::size_t count = hit_count;
        for (std::size_t i = 0; i < level.vecs.size(); ++i)
          if (sigma * cand.side[i] > 0) mark(h, count, level.ids[i]);
        if (count >= bound) continue;
        if (!down) down = restrict_to_hyperplane(level, cand);
        auto sub = minimize(down->first, h, count, bound, false);
        if (!sub) continue;
        bound = sub->count;
        best = Found{sub->count, tilt(level, cand, sigma, down->second.lift(sub->normal))};
      }
    });
    return best;
  }

 private:
  void mark(std::vector<char>& hit, std::size_t& count, std::size_t point) const {
    const std::size_t b = block_of_[point];
    if (!hit[b]) {
      hit[b] = 1;
      ++count;
    }
  }

  const std::vector<std::size_t>& block_of_;
};

// Every leaf half-space of the candidate recursion, deduplicated by the set of
// level vectors it contains.
std::vector<Vector> enumerate_normals(const Level& level) {
  if (level.dim == 1) return {Vector{Scalar(1)}, Vector{Scalar(-1)}};
  std::map<std::vector<bool>, Vector> by_pattern;
  for_each_candidate(level, [&](const Candidate& cand) {
    auto [down, sub] = restrict_to_hyperplane(level, cand);
    const std::vector<Vector> lower = enumerate_normals(down);
    for (int sigma : {1, -1})
      for (const auto& m : lower) {
        Vector n = tilt(level, cand, sigma, sub.lift(m));
        std::vector<bool> pattern(level.vecs.size());
        for (std::size_t i = 0; i < level.vecs.size(); ++i)
          pattern[i] = sgn(dot(n, to_rational(level.vecs[i]))) >= 0;
        by_pattern.emplace(std::move(pattern), std::move(n));
      }
  });
  std::vector<Vector> out;
  for (auto& [pattern, n] : by_pattern) out.push_back(std::move(n));
  return out;
}

// Top-level reduction to the linear span of x - c.
struct Reduced {
  Level level;
  std::optional<Subspace> span;  // absent when x - c spans the whole space
  std::size_t rank = 0;
};

Reduced reduce(const PointConfig& x, const Vector& c) {
  std::vector<Vector> diffs;
  for (const auto& p : x.points) diffs.push_back(p - c);
  Reduced r;
  std::vector<std::size_t> basis_idx = independent_subset(diffs);
  r.rank = basis_idx.size();
  r.level.dim = r.rank;
  r.level.ids.resize(diffs.size());
  std::iota(r.level.ids.begin(), r.level.ids.end(), 0);
  if (r.rank == 0) return r;
  if (r.rank == x.dim) {
    for (const auto& v : diffs) r.level.vecs.push_back(primitive_integer(v));
    return r;
  }
  std::vector<Vector> basis;
  for (std::size_t i : basis_idx) basis.push_back(diffs[i]);
  r.span.emplace(std::move(basis));
  for (const auto& v : diffs) r.level.vecs.push_back(r.span->coordinates(v));
  return r;
}

Vector unit(std::size_t dim) {
  Vector e(dim);
  e[0] = 1;
  return e;
}

HalfSpace through(const Vector& normal, const Vector& c) { return HalfSpace{normal, dot(normal, c)}; }

DepthCertificate solve(const PointConfig& x, const Vector& c, const std::vector<std::size_t>& block_of,
                       std::size_t num_blocks, DepthMode mode) {
  x.validate();
  if (c.size() != x.dim) throw DimensionError("depth: center has wrong dimension");
  DepthCertificate cert;
  cert.mode = mode;
  Reduced r = reduce(x, c);
  if (r.rank == 0) {
    // Every point coincides with c (or there are none).
    std::vector<char> seen(num_blocks);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!seen[block_of[i]]) {
        seen[block_of[i]] = 1;
        ++cert.depth;
      }
    cert.witness = through(unit(x.dim), c);
    return cert;
  }
  DepthSearch search(block_of);
  auto found = search.minimize(r.level, std::vector<char>(num_blocks), 0, num_blocks + 1, true);
  cert.depth = found->count;
  cert.candidate_count = search.top_candidates;
  cert.witness = through(r.span ? r.span->lift(found->normal) : found->normal, c);
  return cert;
}

}  // namespace

std::vector<std::size_t> block_index(const std::vector<std::vector<std::size_t>>& blocks, std::size_t n) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block_of(n, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t i : blocks[b]) {
      if (i >= n) throw std::out_of_range("block refers to point " + std::to_string(i));
      if (block_of[i] != unset) throw std::invalid_argument("blocks are not disjoint");
      block_of[i] = b;
    }
  if (std::find(block_of.begin(), block_of.end(), unset) != block_of.end())
    throw std::invalid_argument("blocks do not cover every point");
  return block_of;
}

std::vector<HalfSpace> candidate_halfspaces(const PointConfig& y, const Vector& c) {
  y.validate();
  if (c.size() != y.dim) throw DimensionError("candidate_halfspaces: center has wrong dimension");
  Reduced r = reduce(y, c);
  if (r.rank == 0) return {through(unit(y.dim), c)};
  std::vector<HalfSpace> family;
  std::map<std::vector<bool>, bool> seen;
  for (const auto& n : enumerate_normals(r.level)) {
    HalfSpace h = through(r.span ? r.span->lift(n) : n, c);
    std::vector<bool> pattern(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) pattern[i] = h.contains(y.points[i]);
    if (seen.emplace(std::move(pattern), true).second) family.push_back(std::move(h));
  }
  return family;
}

DepthCertificate depth(const PointConfig& x, const Vector& c) {
  std::vector<std::size_t> block_of(x.size());
  std::iota(block_of.begin(), block_of.end(), 0);
  return solve(x, c, block_of, x.size(), DepthMode::point);
}

DepthCertificate block_depth(const PointConfig& x, const std::vector<std::vector<std::size_t>>& blocks,
                             const Vector& c) {
  return solve(x, c, block_index(blocks, x.size()), blocks.size(), DepthMode::block);
}

std::size_t blocks_in_halfspace(const PointConfig& x, const std::vector<std::size_t>& block_of, const HalfSpace& h) {
  std::vector<char> seen;
  std::size_t count = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!h.contains(x.points[i])) continue;
    if (block_of[i] >= seen.size()) seen.resize(block_of[i] + 1);
    if (!seen[block_of[i]]) {
      seen[block_of[i]] = 1;
      ++count;
    }
  }
  return count;
}

bool certificate_valid(const PointConfig& x, const Vector& c, const DepthCertificate& cert,
                       const std::vector<std::vector<std::size_t>>* blocks) {
  if (is_zero(cert.witness.normal) || !cert.witness.contains(c)) return false;
  if (cert.mode == DepthMode::block) {
    if (!blocks) return false;
    return blocks_in_halfspace(x, block_index(*blocks, x.size()), cert.witness) == cert.depth;
  }
  return side_counts(x, cert.witness).closed() == cert.depth;
}

std::size_t depth_oracle(const PointConfig& x, const Vector& c, std::uint64_t budget) {
  x.validate();
  const PointConfig shifted = x.translated(c);
  const std::size_t n = x.size();
  std::uint64_t calls = 0;
  std::uint64_t required = 0;
  std::uint64_t layer = 1;  // C(n, s)
  for (std::size_t s = 0; s <= n; ++s) {
    required += layer;
    std::vector<std::size_t> removed(s);
    std::iota(removed.begin(), removed.end(), 0);
    do {
      if (calls >= budget)
        throw BudgetExceeded("depth oracle needs more than " + std::to_string(budget) + " LP calls", required);
      ++calls;
      std::vector<std::size_t> rest;
      for (std::size_t i = 0, k = 0; i < n; ++i) {
        if (k < s && removed[k] == i) ++k;
        else rest.push_back(i);
      }
      if (!origin_in_hull(shifted, rest)) return s;
    } while (s > 0 && next_combination(removed, n));
    layer = layer * (n - s) / (s + 1);
  }
  return n;
}

}  // namespace tverberg
