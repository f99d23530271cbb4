// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "coxeter/export.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "service.hpp"

using namespace coxeter;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

AffineElement random_element(const AffineWeylGroup& g, std::mt19937& rng, Int range) {
  std::uniform_int_distribution<Int> c(-range, range);
  std::uniform_int_distribution<std::size_t> w(0, g.finite_order() - 1);
  IntVector lambda(g.rank());
  for (auto& x : lambda) x = c(rng);
  return g.make(lambda, g.finite_element(w(rng)));
}

constexpr CoxeterType kPlanar[] = {CoxeterType::A1xA1, CoxeterType::A2, CoxeterType::B2, CoxeterType::C2,
                                   CoxeterType::G2};

Outcome word_decomposition() {
  Outcome o;
  const auto& g = AffineWeylGroup::of(CoxeterType::A2);
  struct Case {
    const char* word;
    IntVector lambda;
    const char* direction;
  };
  for (const auto& c : {Case{"0120102", IntVector{2, 2}, "1"}, Case{"21021021020", IntVector{-2, -3}, "2"}}) {
    double worst = 0.0;
    AffineElement x;
    for (int i = 0; i < 200; ++i) {
      auto t = Clock::now();
      x = g.parse_element(c.word);
      worst = std::max(worst, seconds_since(t));
    }
    o.require(x.lambda == c.lambda && x.w == g.parse_element(c.direction).w,
              std::string(c.word) + " decomposed as " + g.format_semidirect(x));
    o.require(worst < 1e-3, std::string(c.word) + " took " + std::to_string(worst * 1e3) + " ms");
    o.detail = o.pass ? "exact, slowest parse " + std::to_string(worst * 1e3) + " ms" : o.detail;
  }
  return o;
}

Outcome c2_decomposition() {
  Outcome o;
  const auto& g = AffineWeylGroup::of(CoxeterType::C2);
  auto x = g.parse_element("201210121");
  o.require(x.lambda == IntVector{2, 2} && x.w == g.parse_element("2").w, g.format_semidirect(x));
  if (o.pass) o.detail = "201210121 = " + g.format_semidirect(x);
  return o;
}

Outcome finite_orders() {
  Outcome o;
  const std::size_t expected[] = {4, 6, 8, 8, 12, 24, 48, 48};
  std::string got;
  for (std::size_t i = 0; i < kAllTypes.size(); ++i) {
    const auto& g = AffineWeylGroup::of(kAllTypes[i]);
    const auto closure = oracle::finite_group_closure(g.datum()).size();
    o.require(g.finite_order() == expected[i] && closure == expected[i],
              std::string(to_string(kAllTypes[i])) + " has order " + std::to_string(g.finite_order()));
    got += (i ? " " : "") + std::to_string(g.finite_order());
  }
  if (o.pass) o.detail = got;
  return o;
}

Outcome mod_move() {
  Outcome o;
  auto start = Clock::now();
  std::size_t checked = 0;
  for (auto t : kAllTypes) {
    const auto& g = AffineWeylGroup::of(t);
    for (const auto& w : g.finite_weyl_elements()) {
      auto idx = index(mod_set(g, w), move_set(g, g.make(IntVector(g.rank()), w)).lattice_points);
      o.require(idx.is_finite(), std::string(to_string(t)) + " w" + std::to_string(w.id) + " has infinite index");
      ++checked;
    }
  }
  const double elapsed = seconds_since(start);
  const auto& c2 = AffineWeylGroup::of(CoxeterType::C2);
  auto s2 = c2.parse_element("2").w;
  auto idx = index(mod_set(c2, s2), move_set(c2, c2.make(IntVector(2), s2)).lattice_points);
  o.require(idx == LatticeIndex::finite(2), "C2 s_2 index differs from 2");
  o.require(oracle::mod_in_move_index(c2, s2) == 2, "brute-force C2 s_2 index differs from 2");
  o.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = std::to_string(checked) + " directions finite, C2 s_2 index 2, " + std::to_string(elapsed) + " s";
  return o;
}

Outcome class_membership() {
  Outcome o;
  const auto& g = AffineWeylGroup::of(CoxeterType::A2);
  auto cls = conjugacy_class(g, g.parse_element("t_(2,2)*s_1"), 5);
  o.require(cls.contains(g.parse_element("t_(-2,-3)*s_2")), "t_(-2,-3)*s_2 missing");
  if (o.pass) o.detail = "t_(-2,-3)*s_2 among " + std::to_string(cls.elements.size()) + " elements";
  return o;
}

Outcome conjugacy_oracle() {
  Outcome o;
  std::mt19937 rng(20240601);
  auto start = Clock::now();
  std::size_t compared = 0;
  for (auto t : kPlanar) {
    const auto& g = AffineWeylGroup::of(t);
    for (int i = 0; i < 20; ++i) {
      auto x = random_element(g, rng, 2);
      auto cls = conjugacy_class(g, x, 3);
      auto brute = oracle::conjugacy_class(g, x, 3);
      o.require(std::set<AffineElement>(cls.elements.begin(), cls.elements.end()) == brute,
                std::string(to_string(t)) + " " + g.format_semidirect(x));
      compared += brute.size();
    }
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 30.0, "took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = "100 classes, " + std::to_string(compared) + " elements, " + std::to_string(elapsed) + " s";
  return o;
}

Outcome coconjugation_oracle() {
  Outcome o;
  std::mt19937 rng(20240602);
  auto start = Clock::now();
  std::size_t compared = 0;
  for (auto t : kPlanar) {
    const auto& g = AffineWeylGroup::of(t);
    for (int i = 0; i < 20; ++i) {
      auto x = random_element(g, rng, 2);
      auto y = g.conjugate(random_element(g, rng, 2), x);
      auto co = coconjugation_set(g, x, y, 3);
      auto brute = oracle::coconjugators(g, x, y, 3);
      o.require(std::set<AffineElement>(co.elements.begin(), co.elements.end()) == brute,
                std::string(to_string(t)) + " " + g.format_semidirect(x) + " -> " + g.format_semidirect(y));
      for (const auto& z : co.elements) o.require(g.conjugate(z, x) == y, "returned z does not conjugate x to y");
      compared += brute.size();
    }
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 30.0, "took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = "100 pairs, " + std::to_string(compared) + " conjugators, " + std::to_string(elapsed) + " s";
  return o;
}

Outcome rank3_dimensions() {
  Outcome o;
  const auto& g = AffineWeylGroup::of(CoxeterType::A3);
  auto x = g.parse_element("13");
  auto mov = move_set(g, x);
  auto fix = fix_lattice(g, x.w);
  o.require(mov.dimension == 2 && mov.lattice_points.rank() == 2, "Mov(x) rank " + std::to_string(mov.dimension));
  o.require(fix.rank() == 1, "Fix(x) n L rank " + std::to_string(fix.rank()));
  auto cent = centralizer(g, x, 2);
  o.require(!cent.elements.empty(), "centralizer empty");
  for (const auto& z : cent.elements) {
    bool in_coset = false;
    for (const auto& part : cent.family.parts)
      in_coset |= part.direction == z.w && part.lattice == fix && same_coset(z.lambda, part.base, fix);
    o.require(in_coset, g.format_semidirect(z) + " outside the fix-lattice cosets");
  }
  if (o.pass) o.detail = "Mov rank 2, Fix n L rank 1, " + std::to_string(cent.elements.size()) + " centralizer elements";
  return o;
}

Outcome identity_3d() {
  Outcome o;
  for (auto t : {CoxeterType::A3, CoxeterType::B3, CoxeterType::C3}) {
    const auto& g = AffineWeylGroup::of(t);
    auto cls = conjugacy_class(g, g.identity(), 2);
    o.require(cls.elements.size() == 1 && g.is_identity(cls.elements[0]), std::string(to_string(t)) + " class is not {e}");
    auto scene = build_scene(g, cls, g.identity(), std::nullopt);
    bool striped = false;
    for (const auto& a : scene.alcoves) striped |= g.is_identity(a.alcove.element) && a.striped;
    o.require(striped, std::string(to_string(t)) + " identity alcove not striped");
  }
  if (o.pass) o.detail = "A3 B3 C3 give {e}, e striped";
  return o;
}

Outcome reduced_words() {
  Outcome o;
  auto start = Clock::now();
  std::size_t compared = 0;
  for (auto t : {CoxeterType::A2, CoxeterType::B2}) {
    const auto& g = AffineWeylGroup::of(t);
    for (const auto& [x, word] : oracle::shortest_words(g, 6)) {
      o.require(g.lex_first_reduced_word(x) == word,
                std::string(to_string(t)) + " " + g.format_semidirect(x) + " expected " + word.to_string());
      ++compared;
    }
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = std::to_string(compared) + " elements, " + std::to_string(elapsed) + " s";
  return o;
}

Outcome embedding() {
  Outcome o;
  for (auto t : {CoxeterType::B3, CoxeterType::C3}) {
    const auto& g = AffineWeylGroup::of(t);
    std::set<std::vector<int>> image;
    for (const auto& a : g.finite_weyl_elements()) {
      auto pa = embed_in_symmetric_group(g, a);
      image.insert(pa);
      for (const auto& b : g.finite_weyl_elements()) {
        auto pb = embed_in_symmetric_group(g, b);
        std::vector<int> composed(pa.size());
        for (std::size_t i = 0; i < pa.size(); ++i) composed[i] = pa[static_cast<std::size_t>(pb[i])];
        o.require(embed_in_symmetric_group(g, g.multiply(a, b)) == composed,
                  std::string(to_string(t)) + " is not a homomorphism");
      }
    }
    o.require(image.size() == 48, std::string(to_string(t)) + " image has " + std::to_string(image.size()));
    o.require(cycle_type(g, g.identity().w) == Partition{1, 1, 1, 1, 1, 1}, "cycle_type(e)");
    o.require(cycle_type(g, g.parse_element("3").w) == Partition{2, 1, 1, 1, 1}, "cycle_type(s_3)");
  }
  if (o.pass) o.detail = "B3 and C3: 48^2 products, image 48, (1^6), (2,1^4)";
  return o;
}

Outcome determinism() {
  Outcome o;
  auto catalog = nlohmann::json::parse(service::examples_json());
  std::size_t artifacts = 0;
  for (const auto& e : catalog) {
    const auto& r = e["request"];
    service::ComputeRequest req{r["type"].get<std::string>(), r["mode"].get<std::string>(), r["x"].get<std::string>(),
                                std::nullopt, r["bound"].get<Int>()};
    if (r.contains("y")) req.y = r["y"].get<std::string>();
    auto a = service::run_compute(req);
    auto b = service::run_compute(req);
    o.require(a.report == b.report, e["id"].get<std::string>() + " report differs");
    o.require(export_scene_json(a.scene, a.report) == export_scene_json(b.scene, b.report),
              e["id"].get<std::string>() + " scene JSON differs");
    o.require(service::response_body(a) == service::response_body(b), e["id"].get<std::string>() + " body differs");
    artifacts += 3;
    if (a.scene.dimension == 2) {
      o.require(export_svg(a.scene) == export_svg(b.scene), e["id"].get<std::string>() + " SVG differs");
      ++artifacts;
    }
  }
  if (o.pass) o.detail = std::to_string(catalog.size()) + " requests, " + std::to_string(artifacts) + " artifact pairs identical";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"word decomposition in A2", word_decomposition},
      {"word decomposition in C2", c2_decomposition},
      {"finite Weyl group orders", finite_orders},
      {"mod-set index in the move lattice", mod_move},
      {"conjugacy class membership", class_membership},
      {"conjugacy classes equal brute force", conjugacy_oracle},
      {"coconjugation sets equal brute force", coconjugation_oracle},
      {"move and fix dimensions in A3", rank3_dimensions},
      {"identity class in 3D", identity_3d},
      {"lex-first reduced words", reduced_words},
      {"symmetric-group embedding", embedding},
      {"determinism of exports", determinism},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
  }
  std::printf("%d of %d criteria passed\n", n - failures, n);
  return failures == 0 ? 0 : 1;
}
