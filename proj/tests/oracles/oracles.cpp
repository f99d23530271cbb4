#include "oracles.hpp"

#include <numeric>
#include <stdexcept>

namespace coxeter::oracle {

Map identity_map(std::size_t n) {
  Map f;
  f.n = n;
  for (std::size_t i = 0; i < n; ++i) f.at(i, i) = 1;
  return f;
}

Map compose(const Map& f, const Map& g) {
  Map h;
  h.n = f.n;
  for (std::size_t r = 0; r < f.n; ++r) {
    Int shift = f.b[r];
    for (std::size_t k = 0; k < f.n; ++k) shift += f.at(r, k) * g.b[k];
    h.b[r] = shift;
    for (std::size_t c = 0; c < f.n; ++c)
      for (std::size_t k = 0; k < f.n; ++k) h.at(r, c) += f.at(r, k) * g.at(k, c);
  }
  return h;
}

Map inverse(const Map& f) {
  // the linear part has finite order, so its inverse is a power of it
  Map lin = f;
  lin.b = {};
  Map power = lin, prev = identity_map(f.n);
  for (int k = 0; k < 64; ++k) {
    if (power == identity_map(f.n)) {
      Map inv = prev;
      Map shifted = compose(inv, Map{f.n, identity_map(f.n).m, f.b});
      for (std::size_t i = 0; i < f.n; ++i) inv.b[i] = -shifted.b[i];
      return inv;
    }
    prev = power;
    power = compose(power, lin);
  }
  throw std::logic_error("linear part does not have finite order");
}

RatVector apply(const Map& f, const RatVector& p) {
  RatVector q(f.n);
  for (std::size_t r = 0; r < f.n; ++r) {
    Rational s(f.b[r]);
    for (std::size_t c = 0; c < f.n; ++c) s += Rational(f.at(r, c)) * p[c];
    q[r] = s;
  }
  return q;
}

Map generator_map(const RootDatum& datum, std::size_t label) {
  const auto& g = datum.generators.at(label);
  const std::size_t n = datum.rank;
  IntVector pairing(n), coroot(n);
  Int level = 0;
  if (g.kind == Generator::Kind::simple) {
    for (std::size_t j = 0; j < n; ++j) pairing[j] = datum.cartan(g.simple_index, j);
    coroot[g.simple_index] = 1;
  } else {
    pairing = g.root_pairing;
    coroot = g.coroot;
    level = 1;
  }
  // p -> p - (<beta, p> - level) beta^vee
  Map f = identity_map(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) f.at(r, c) -= coroot[r] * pairing[c];
    f.b[r] = level * coroot[r];
  }
  return f;
}

Map word_map(const RootDatum& datum, const std::vector<std::size_t>& letters) {
  Map f = identity_map(datum.rank);
  for (auto l : letters) f = compose(f, generator_map(datum, l));
  return f;
}

Map from_element(const AffineElement& x) {
  Map f;
  f.n = x.lambda.size();
  for (std::size_t r = 0; r < f.n; ++r) {
    f.b[r] = x.lambda[r];
    for (std::size_t c = 0; c < f.n; ++c) f.at(r, c) = x.w.matrix(r, c);
  }
  return f;
}

AffineElement to_element(const AffineWeylGroup& group, const Map& f) {
  IntMatrix m(f.n);
  IntVector lambda(f.n);
  for (std::size_t r = 0; r < f.n; ++r) {
    lambda[r] = f.b[r];
    for (std::size_t c = 0; c < f.n; ++c) m(r, c) = f.at(r, c);
  }
  return group.make(lambda, group.lookup(m));
}

std::vector<Map> finite_group_closure(const RootDatum& datum) {
  std::vector<Map> gens;
  for (std::size_t l = 0; l < datum.generators.size(); ++l)
    if (datum.generators[l].kind == Generator::Kind::simple) gens.push_back(generator_map(datum, l));
  std::set<Map> seen{identity_map(datum.rank)};
  std::vector<Map> frontier{identity_map(datum.rank)};
  while (!frontier.empty()) {
    std::vector<Map> next;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        Map h = compose(f, g);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

int generator_product_order(const RootDatum& datum, std::size_t a, std::size_t b, int limit) {
  const Map p = compose(generator_map(datum, a), generator_map(datum, b));
  Map q = p;
  for (int k = 1; k <= limit; ++k) {
    if (q == identity_map(datum.rank)) return k;
    q = compose(q, p);
  }
  return 0;
}

namespace {

Int max_abs_b(const Map& f) {
  Int m = 0;
  for (std::size_t i = 0; i < f.n; ++i) m = std::max(m, f.b[i] < 0 ? -f.b[i] : f.b[i]);
  return m;
}

template <class F>
void each_vector(std::size_t n, Int bound, F&& f) {
  std::array<Int, 3> v{};
  for (std::size_t i = 0; i < n; ++i) v[i] = -bound;
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < n && v[i] == bound) v[i++] = -bound;
    if (i == n) return;
    ++v[i];
  }
}

}  // namespace

std::set<AffineElement> conjugacy_class(const AffineWeylGroup& group, const AffineElement& x, Int bound) {
  const std::size_t n = group.rank();
  const auto w0 = finite_group_closure(group.datum());
  const Map fx = from_element(x);
  std::set<Map> found;
  int quiet = 0;
  for (Int radius = 0; quiet < 3 || radius <= 2 * bound; ++radius) {
    const std::size_t before = found.size();
    each_vector(n, radius, [&](const std::array<Int, 3>& mu) {
      Int norm = 0;
      for (std::size_t i = 0; i < n; ++i) norm = std::max(norm, mu[i] < 0 ? -mu[i] : mu[i]);
      if (norm != radius) return;  // shell only
      for (const auto& u : w0) {
        Map z = u;
        for (std::size_t i = 0; i < n; ++i) z.b[i] = mu[i];
        Map c = compose(compose(z, fx), inverse(z));
        if (max_abs_b(c) <= bound) found.insert(c);
      }
    });
    quiet = found.size() == before ? quiet + 1 : 0;
  }
  std::set<AffineElement> out;
  for (const auto& f : found) out.insert(to_element(group, f));
  return out;
}

std::set<AffineElement> coconjugators(const AffineWeylGroup& group, const AffineElement& x, const AffineElement& y,
                                      Int bound) {
  const std::size_t n = group.rank();
  const Map fx = from_element(x), fy = from_element(y);
  std::set<AffineElement> out;
  for (const auto& u : finite_group_closure(group.datum())) {
    each_vector(n, bound, [&](const std::array<Int, 3>& mu) {
      Map z = u;
      for (std::size_t i = 0; i < n; ++i) z.b[i] = mu[i];
      if (compose(z, fx) == compose(fy, z)) out.insert(to_element(group, z));
    });
  }
  return out;
}

std::map<AffineElement, Word> shortest_words(const AffineWeylGroup& group, std::size_t max_length) {
  const auto& datum = group.datum();
  const std::size_t gens = datum.generators.size();
  std::map<Map, Word> first;
  for (std::size_t len = 0; len <= max_length; ++len) {
    std::vector<std::size_t> letters(len, 0);
    while (true) {
      Map f = word_map(datum, letters);
      first.emplace(f, Word{letters});
      std::size_t i = len;
      while (i > 0 && letters[i - 1] == gens - 1) letters[--i] = 0;
      if (i == 0) break;
      ++letters[i - 1];
    }
  }
  std::map<AffineElement, Word> out;
  for (const auto& [f, w] : first) out.emplace(to_element(group, f), w);
  return out;
}

std::size_t rational_rank(const std::vector<IntVector>& rows, std::size_t n) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (std::size_t i = 0; i < n; ++i) row.emplace_back(r[i]);
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == Rational(0)) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == Rational(0)) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = 0; k < n; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool in_integer_span(const std::vector<IntVector>& rows, const IntVector& v, Int coeff_bound) {
  const std::size_t k = rows.size();
  if (k == 0) return is_zero(v);
  std::vector<Int> c(k, -coeff_bound);
  while (true) {
    IntVector s(v.size());
    for (std::size_t i = 0; i < k; ++i) s = s + c[i] * rows[i];
    if (s == v) return true;
    std::size_t i = 0;
    while (i < k && c[i] == coeff_bound) c[i++] = -coeff_bound;
    if (i == k) return false;
    ++c[i];
  }
}

namespace {

Int determinant(std::vector<std::vector<Int>> m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  Int det = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<Int>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Int> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    det += (c % 2 ? -1 : 1) * m[0][c] * determinant(minor);
  }
  return det;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    if (s.size() == k) out.push_back(s);
  }
  return out;
}

}  // namespace

Int mod_in_move_index(const AffineWeylGroup& group, const FiniteWeylElement& w) {
  const std::size_t n = group.rank();
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < n; ++r) {
    IntVector row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = w.matrix(r, c) - (r == c ? 1 : 0);
    rows.push_back(row);
  }
  const std::size_t k = rational_rank(rows, n);
  if (k == 0) return 1;
  Int g = 0;
  for (const auto& rs : subsets(n, k))
    for (const auto& cs : subsets(n, k)) {
      std::vector<std::vector<Int>> m;
      for (auto r : rs) {
        std::vector<Int> row;
        for (auto c : cs) row.push_back(rows[r][c]);
        m.push_back(row);
      }
      g = std::gcd(g, determinant(m));
    }
  return g < 0 ? -g : g;
}

}  // namespace coxeter::oracle
