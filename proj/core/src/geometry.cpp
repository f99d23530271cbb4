#include "coxeter/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coxeter/conjugacy.hpp"

namespace coxeter {

Alcove alcove_of(const AffineWeylGroup& group, const AffineElement& x) {
  const auto& datum = group.datum();
  Alcove a{x, {}, group.act(x, datum.alcove_barycenter)};
  a.vertices.reserve(datum.fundamental_alcove.size());
  for (const auto& v : datum.fundamental_alcove) a.vertices.push_back(group.act(x, v));
  return a;
}

bool alcove_contains(const AffineWeylGroup& group, const AffineElement& x, const RatVector& point, bool closed) {
  RatVector q = group.act(group.inverse(x), point);
  const auto& datum = group.datum();
  for (std::size_t g = 0; g < datum.generator_count(); ++g) {
    Rational f = wall_pairing(datum, g, q);
    if (closed ? f < Rational(0) : f <= Rational(0)) return false;
  }
  return true;
}

namespace {

// Calls f(lambda) for every lambda in [-bound, bound]^n, lexicographically.
template <class F>
void for_each_in_box(std::size_t n, Int bound, F&& f) {
  IntVector lambda(n, -bound);
  for (bool carry = false; !carry;) {
    f(lambda);
    carry = true;
    for (std::size_t i = n; carry && i-- > 0;) {
      if (lambda[i] < bound) {
        ++lambda[i];
        carry = false;
      } else {
        lambda[i] = -bound;
      }
    }
  }
}

void append_edges(const std::vector<RatVector>& v, std::vector<Edge>& edges) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) edges.push_back(v[i] < v[j] ? Edge{v[i], v[j]} : Edge{v[j], v[i]});
}

void sort_unique(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace

std::vector<Alcove> tessellation(const AffineWeylGroup& group, Int bound) {
  check_bound(bound);
  std::vector<Alcove> out;
  for (const auto& w : group.finite_weyl_elements())
    for_each_in_box(group.rank(), bound,
                    [&](const IntVector& lambda) { out.push_back(alcove_of(group, group.make(lambda, w))); });
  return out;
}

LatticeDecorations lattice_decorations(const AffineWeylGroup& group, Int bound) {
  check_bound(bound);
  if (group.rank() != 2) throw std::invalid_argument("coroot lattice decorations exist only in rank 2");
  LatticeDecorations d;
  for (Int a = -bound; a <= bound; ++a)
    for (Int b = -bound; b <= bound; ++b) d.dots.push_back(RatVector{Rational(a), Rational(b)});
  RatVector origin{Rational(0), Rational(0)};
  d.arrows.push_back(Arrow{origin, RatVector{Rational(1), Rational(0)}, kRed});
  d.arrows.push_back(Arrow{origin, RatVector{Rational(0), Rational(1)}, kBlue});
  return d;
}

std::vector<Edge> wireframe_edges(const std::vector<Alcove>& alcoves) {
  std::vector<Edge> edges;
  for (const auto& a : alcoves) append_edges(a.vertices, edges);
  sort_unique(edges);
  return edges;
}

std::vector<Edge> wireframe_edges(const AffineWeylGroup& group, Int bound) {
  check_bound(bound);
  // the star of W0 alcoves around the origin, translated across the box
  std::vector<Edge> star;
  for (const auto& w : group.finite_weyl_elements())
    append_edges(alcove_of(group, group.make(IntVector(group.rank()), w)).vertices, star);
  sort_unique(star);
  std::vector<Edge> edges;
  std::size_t compacted = 0;
  for_each_in_box(group.rank(), bound, [&](const IntVector& lambda) {
    RatVector shift = to_rational(lambda);
    for (const auto& e : star) edges.push_back(Edge{e.a + shift, e.b + shift});
    if (edges.size() > 2 * compacted + 65536) {
      sort_unique(edges);
      compacted = edges.size();
    }
  });
  sort_unique(edges);
  return edges;
}

std::vector<double> display_point(const RootDatum& datum, const RatVector& point) {
  RatVector e = to_euclid(datum, point);
  const std::size_t m = e.size();
  const std::size_t n = datum.rank;
  std::vector<double> out(n, 0.0);
  if (m == n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = e[i].to_double();
    return out;
  }
  // Helmert basis of the sum-zero hyperplane of R^(n+1)
  for (std::size_t k = 1; k <= n; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += e[i].to_double();
    s -= static_cast<double>(k) * e[k].to_double();
    out[k - 1] = s / std::sqrt(static_cast<double>(k * (k + 1)));
  }
  return out;
}

double display_diameter(const RootDatum& datum, const Alcove& alcove) {
  double best = 0.0;
  std::vector<std::vector<double>> pts;
  for (const auto& v : alcove.vertices) pts.push_back(display_point(datum, v));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < pts[i].size(); ++k) d2 += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
      best = std::max(best, std::sqrt(d2));
    }
  }
  return best;
}

}  // namespace coxeter
