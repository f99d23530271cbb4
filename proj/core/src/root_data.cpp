#include "coxeter/root_data.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace coxeter {

namespace detail {
// Defined in the generated rootdata_tables.cpp.
std::string_view embedded_root_table(std::string_view tag);
}  // namespace detail

namespace {

constexpr std::array<std::string_view, 8> kTags = {"A1xA1", "A2", "B2", "C2", "G2", "A3", "B3", "C3"};

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::runtime_error("root data line " + std::to_string(line) + ": " + what);
}

Int parse_int(std::string_view tok, int line) {
  Int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) fail(line, "bad integer '" + std::string(tok) + "'");
  return v;
}

Rational parse_rational(std::string_view tok, int line) {
  auto slash = tok.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(tok, line));
  return Rational(parse_int(tok.substr(0, slash), line), parse_int(tok.substr(slash + 1), line));
}

std::vector<std::string> split(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

std::vector<int> parse_int_list(const std::string& tok, int line) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= tok.size()) {
    auto comma = tok.find(',', start);
    auto piece = tok.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(static_cast<int>(parse_int(piece, line)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Solves rows * x = rhs over the rationals; nullopt when singular.
std::optional<RatVector> solve_rational(std::vector<RatVector> rows, RatVector rhs) {
  const std::size_t n = rows.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && rows[piv][col] == Rational(0)) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(rows[piv], rows[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || rows[r][col] == Rational(0)) continue;
      Rational f = rows[r][col] / rows[col][col];
      rows[r] = rows[r] - f * rows[col];
      rhs[r] = rhs[r] - f * rhs[col];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / rows[i][i];
  return x;
}

// Orders the vertices of a convex polygon counterclockwise around `center`, exactly.
void sort_polygon(std::vector<RatVector>& pts, const RatVector& center) {
  auto half = [&](const RatVector& p) {
    Rational dx = p[0] - center[0], dy = p[1] - center[1];
    return (dy > Rational(0) || (dy == Rational(0) && dx > Rational(0))) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const RatVector& a, const RatVector& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cross = (a[0] - center[0]) * (b[1] - center[1]) - (a[1] - center[1]) * (b[0] - center[0]);
    return cross > Rational(0);
  });
}

void compute_alcove(RootDatum& d) {
  const std::size_t n = d.rank;
  const std::size_t m = d.generators.size();
  std::vector<RatVector> verts;
  // every n-subset of walls whose hyperplanes meet in a single point inside all half-spaces
  std::vector<std::size_t> pick(n);
  auto consider = [&]() {
    std::vector<RatVector> rows;
    RatVector rhs(n);
    for (std::size_t k = 0; k < n; ++k) {
      rows.push_back(to_rational(d.generators[pick[k]].root_pairing));
      rhs[k] = Rational(d.generators[pick[k]].level);
    }
    auto p = solve_rational(rows, rhs);
    if (!p) return;
    for (std::size_t g = 0; g < m; ++g)
      if (wall_pairing(d, g, *p) < Rational(0)) return;
    if (std::find(verts.begin(), verts.end(), *p) == verts.end()) verts.push_back(*p);
  };
  auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
    if (depth == n) {
      consider();
      return;
    }
    for (std::size_t g = from; g < m; ++g) {
      pick[depth] = g;
      self(self, depth + 1, g + 1);
    }
  };
  rec(rec, 0, 0);
  std::sort(verts.begin(), verts.end());

  RatVector bary(n);
  for (const auto& v : verts) bary = bary + v;
  bary = Rational(1, static_cast<Int>(verts.size())) * bary;
  if (n == 2) sort_polygon(verts, bary);
  d.fundamental_alcove = std::move(verts);
  d.alcove_barycenter = bary;
}

RootDatum load(CoxeterType type) {
  RootDatum d = parse_root_datum(detail::embedded_root_table(to_string(type)));
  if (d.type != type) throw std::logic_error("embedded root table tag mismatch");
  return d;
}

}  // namespace

IntMatrix Generator::linear_part() const {
  const std::size_t n = coroot.size();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = checked::sub(m(i, j), checked::mul(coroot[i], root_pairing[j]));
  return m;
}

IntVector Generator::translation_part() const { return level * coroot; }

bool RootDatum::is_spherical_generator(std::size_t label) const {
  return label < generators.size() && generators[label].kind == Generator::Kind::simple;
}

std::string_view to_string(CoxeterType type) { return kTags[static_cast<std::size_t>(type)]; }

std::optional<CoxeterType> parse_coxeter_type(std::string_view tag) {
  for (std::size_t i = 0; i < kTags.size(); ++i)
    if (kTags[i] == tag) return static_cast<CoxeterType>(i);
  return std::nullopt;
}

std::size_t rank_of(CoxeterType type) {
  switch (type) {
    case CoxeterType::A3:
    case CoxeterType::B3:
    case CoxeterType::C3:
      return 3;
    default:
      return 2;
  }
}

RootDatum parse_root_datum(std::string_view text) {
  RootDatum d;
  std::vector<std::string> lines;
  {
    std::istringstream is{std::string(text)};
    for (std::string l; std::getline(is, l);) lines.push_back(l);
  }

  bool have_tag = false;
  std::size_t ambient = 0;
  std::vector<std::pair<std::size_t, Generator>> gens;

  auto read_matrix_rows = [&](std::size_t& i, std::size_t count, std::size_t width) {
    std::vector<std::vector<Int>> rows;
    while (rows.size() < count) {
      if (++i >= lines.size()) fail(static_cast<int>(i), "unexpected end of matrix");
      auto toks = split(lines[i]);
      if (toks.empty()) continue;
      if (toks.size() != width) fail(static_cast<int>(i + 1), "matrix row has wrong width");
      std::vector<Int> row;
      for (const auto& t : toks) row.push_back(parse_int(t, static_cast<int>(i + 1)));
      rows.push_back(row);
    }
    return rows;
  };

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int ln = static_cast<int>(i + 1);
    std::string line = lines[i];
    if (auto hash = line.find('#'); hash != std::string::npos && line.rfind("palette", 0) != 0 &&
                                    line.rfind("cycle_color", 0) != 0)
      line = line.substr(0, hash);
    auto toks = split(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];

    if (key == "version") {
      d.version = static_cast<int>(parse_int(toks.at(1), ln));
      if (d.version != 1) fail(ln, "unsupported table version");
    } else if (key == "tag") {
      auto t = parse_coxeter_type(toks.at(1));
      if (!t) fail(ln, "unknown tag");
      d.type = *t;
      have_tag = true;
    } else if (key == "rank") {
      d.rank = static_cast<std::size_t>(parse_int(toks.at(1), ln));
      if (d.rank == 0 || d.rank > kMaxRank) fail(ln, "rank out of range");
    } else if (key == "ambient") {
      ambient = static_cast<std::size_t>(parse_int(toks.at(1), ln));
    } else if (key == "cartan") {
      auto rows = read_matrix_rows(i, d.rank, d.rank);
      d.cartan = IntMatrix(d.rank);
      for (std::size_t r = 0; r < d.rank; ++r)
        for (std::size_t c = 0; c < d.rank; ++c) d.cartan(r, c) = rows[r][c];
    } else if (key == "coroot") {
      if (toks.size() != ambient + 1) fail(ln, "coroot has wrong ambient dimension");
      RatVector v(ambient);
      for (std::size_t k = 0; k < ambient; ++k) v[k] = parse_rational(toks[k + 1], ln);
      d.coroot_euclid.push_back(v);
    } else if (key == "generator") {
      if (toks.size() < 3) fail(ln, "short generator line");
      auto label = static_cast<std::size_t>(parse_int(toks[1], ln));
      Generator g;
      if (toks[2] == "simple") {
        g.kind = Generator::Kind::simple;
        auto idx = parse_int(toks.at(3), ln);
        if (idx < 1 || static_cast<std::size_t>(idx) > d.rank) fail(ln, "simple index out of range");
        g.simple_index = static_cast<std::size_t>(idx - 1);
      } else if (toks[2] == "affine") {
        g.kind = Generator::Kind::affine;
        g.level = 1;
        if (toks.size() != 3 + 2 * d.rank + 1 || toks[3 + d.rank] != ";") fail(ln, "bad affine generator");
        g.root_pairing = IntVector(d.rank);
        g.coroot = IntVector(d.rank);
        for (std::size_t k = 0; k < d.rank; ++k) {
          g.root_pairing[k] = parse_int(toks[3 + k], ln);
          g.coroot[k] = parse_int(toks[4 + d.rank + k], ln);
        }
      } else {
        fail(ln, "generator kind must be simple or affine");
      }
      gens.emplace_back(label, g);
    } else if (key == "coxeter") {
      auto rows = read_matrix_rows(i, gens.size(), gens.size());
      for (const auto& r : rows) d.coxeter_matrix.emplace_back(r.begin(), r.end());
    } else if (key == "palette") {
      d.palette.assign(toks.begin() + 1, toks.end());
    } else if (key == "symmetric") {
      d.symmetric_degree = static_cast<int>(parse_int(toks.at(1), ln));
    } else if (key == "embed") {
      auto idx = static_cast<std::size_t>(parse_int(toks.at(1), ln));
      if (idx < 1 || idx > d.rank) fail(ln, "embed index out of range");
      if (d.embedding.size() < d.rank) d.embedding.resize(d.rank);
      for (std::size_t k = 2; k < toks.size(); ++k) {
        auto pr = parse_int_list(toks[k], ln);
        if (pr.size() != 2) fail(ln, "transposition needs two points");
        d.embedding[idx - 1].emplace_back(pr[0], pr[1]);
      }
    } else if (key == "cycle_color") {
      if (toks.size() != 3) fail(ln, "cycle_color needs partition and color");
      d.cycle_colors[parse_int_list(toks[1], ln)] = toks[2];
    } else {
      fail(ln, "unknown key '" + key + "'");
    }
  }

  if (!have_tag) fail(0, "missing tag");
  if (d.rank != rank_of(d.type)) fail(0, "rank does not match tag");
  if (d.coroot_euclid.size() != d.rank) fail(0, "expected one coroot per rank");

  std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (gens[k].first != k) fail(0, "generator labels must be 0..m-1");
  for (auto& [label, g] : gens) {
    if (g.kind == Generator::Kind::simple) {
      g.root_pairing = d.cartan.row(g.simple_index);
      g.coroot = IntVector(d.rank);
      g.coroot[g.simple_index] = 1;
      d.spherical_generators.push_back(label);
    }
    d.generators.push_back(g);
  }
  if (d.spherical_generators.size() != d.rank) fail(0, "expected one simple generator per rank");
  if (d.coxeter_matrix.size() != d.generators.size()) fail(0, "coxeter matrix size mismatch");

  d.simple_reflection_matrices.resize(d.rank);
  for (const auto& g : d.generators)
    if (g.kind == Generator::Kind::simple) d.simple_reflection_matrices[g.simple_index] = g.linear_part();

  const auto& g0 = d.generators.at(0);
  d.highest_root_pairing = g0.root_pairing;
  d.s0_translation = g0.translation_part();

  compute_alcove(d);
  return d;
}

const RootDatum& root_datum(CoxeterType type) {
  static const std::array<RootDatum, 8> table = [] {
    std::array<RootDatum, 8> t;
    for (auto ty : kAllTypes) t[static_cast<std::size_t>(ty)] = load(ty);
    return t;
  }();
  return table[static_cast<std::size_t>(type)];
}

std::string_view root_datum_table(CoxeterType type) { return detail::embedded_root_table(to_string(type)); }

Rational wall_pairing(const RootDatum& datum, std::size_t gen, const RatVector& point) {
  if (gen >= datum.generators.size()) throw std::out_of_range("generator label out of range");
  const auto& g = datum.generators[gen];
  Rational v = dot(g.root_pairing, point) - Rational(g.level);
  return g.kind == Generator::Kind::simple ? v : -v;
}

RatVector to_euclid(const RootDatum& datum, const RatVector& point) {
  if (point.size() != datum.rank) throw std::invalid_argument("point has wrong rank");
  RatVector out(datum.ambient_dimension());
  for (std::size_t i = 0; i < datum.rank; ++i) out = out + point[i] * datum.coroot_euclid[i];
  return out;
}

std::vector<std::vector<Rational>> coroot_gram(const RootDatum& datum) {
  std::vector<std::vector<Rational>> g(datum.rank, std::vector<Rational>(datum.rank));
  for (std::size_t i = 0; i < datum.rank; ++i)
    for (std::size_t j = 0; j < datum.rank; ++j) g[i][j] = dot(datum.coroot_euclid[i], datum.coroot_euclid[j]);
  return g;
}

}  // namespace coxeter
