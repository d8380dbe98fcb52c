#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>

#include "tiltcell/errors.hpp"
#include "tiltcell/rootdata.hpp"

using namespace tiltcell;

namespace {
const RootSystem& rs_of(const char* name) {
  static std::map<std::string, RootSystem> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, build_root_system(CartanDatum::parse(name))).first;
  return it->second;
}
}  // namespace

TEST_CASE("A1 basics") {
  const RootSystem& rs = rs_of("A1");
  CHECK(rs.positive_roots.size() == 1);
  CHECK(rs.coxeter_number == 2);
  CHECK(rs.rho == Vec{1});
  CHECK(rs.wf.size() == 2);
}

TEST_CASE("closure counts and Coxeter numbers") {
  // brute-force orbit oracle: R = W_f . simple roots
  auto orbit_count = [](const RootSystem& rs) {
    std::set<Vec> roots;
    for (int i = 0; i < rs.rank(); ++i) {
      Vec e(rs.rank(), 0);
      e[i] = 1;
      for (int w = 0; w < rs.wf.size(); ++w) roots.insert(rs.wf.apply_root(w, e));
    }
    return roots.size();
  };
  for (auto [name, npos, h] :
       {std::tuple{"A1", 1, 2}, {"A2", 3, 3}, {"B2", 4, 4}, {"G2", 6, 6}, {"A3", 6, 4},
        std::tuple{"C3", 9, 6}, {"B3", 9, 6}, {"D4", 12, 6}, {"F4", 24, 12}}) {
    const RootSystem& rs = rs_of(name);
    CHECK(rs.positive_roots.size() == static_cast<size_t>(npos));
    CHECK(orbit_count(rs) == static_cast<size_t>(2 * npos));
    CHECK(rs.coxeter_number == h);
    CHECK(dot(rs.rho, rs.coroots[rs.highest_short_root]) == h - 1);
    for (int i = 0; i < rs.rank(); ++i) {
      Vec e(rs.rank(), 0);
      e[i] = 1;
      // <rho, alpha_i^vee> = 1 for the simple coroots
      bool found = false;
      for (size_t r = 0; r < rs.positive_roots.size(); ++r)
        if (rs.positive_roots[r] == e) {
          CHECK(dot(rs.rho, rs.coroots[r]) == 1);
          found = true;
        }
      CHECK(found);
    }
  }
}

TEST_CASE("G2 cartan convention") {
  const RootSystem& rs = rs_of("G2");
  CHECK(rs.datum.at(0, 1) * rs.datum.at(1, 0) == 3);
  CHECK(rs.symmetrizer == Vec{1, 3});  // alpha_1 short
  // highest short root = 2a1 + a2, coroot (2,3)
  CHECK(rs.positive_roots[rs.highest_short_root] == Vec{2, 1});
  CHECK(rs.coroots[rs.highest_short_root] == Vec{2, 3});
  CHECK(rs.pairing(rs.rho, rs.highest_short_root) == 5);
  CHECK(rs.pairing(Vec{0, 0}, rs.highest_short_root) == 0);
}

TEST_CASE("weyl group sizes match degree products") {
  CHECK(rs_of("A2").wf.size() == 6);
  CHECK(rs_of("B2").wf.size() == 8);
  CHECK(rs_of("G2").wf.size() == 12);
  CHECK(rs_of("A3").wf.size() == 24);
  CHECK(rs_of("F4").wf.size() == 1152);
}

TEST_CASE("non finite type rejected with the failing minor") {
  CartanDatum d{Family::A, 2, {2, -2, -2, 2}};  // affine-type matrix
  CHECK_THROWS_WITH_AS(d.validate(), doctest::Contains("minor 2"), ConfigError);
  CartanDatum ok{Family::A, 2, {2, -1, -1, 2}};
  CHECK_NOTHROW(ok.validate());
  CartanDatum asym{Family::A, 2, {2, 0, -1, 2}};
  CHECK_THROWS_AS(asym.validate(), ConfigError);
}

TEST_CASE("weyl orbit") {
  const RootSystem& a1 = rs_of("A1");
  auto orb = weyl_orbit(a1, Vec{1});
  CHECK(orb == std::vector<Vec>{Vec{-1}, Vec{1}});
  CHECK(weyl_orbit(a1, Vec{0}) == std::vector<Vec>{Vec{0}});

  const RootSystem& g2 = rs_of("G2");
  CHECK(weyl_orbit(g2, Vec{1, 0}).size() == 6);
  CHECK(weyl_orbit(g2, Vec{0, 0}).size() == 1);
  // orbit sizes divide |W_f|
  for (Vec lam : {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}, Vec{2, 1}})
    CHECK(12 % weyl_orbit(g2, lam).size() == 0);
}

TEST_CASE("signed dominant reduction") {
  const RootSystem& a1 = rs_of("A1");
  SignedDom z = dominant_rep_signed(a1, Vec{-1});  // lambda + rho = 0
  CHECK(z.zero);
  SignedDom m = dominant_rep_signed(a1, Vec{-2});
  CHECK(!m.zero);
  CHECK(m.sign == -1);
  CHECK(m.dom == Vec{0});
  SignedDom id = dominant_rep_signed(a1, Vec{3});
  CHECK(id.sign == 1);
  CHECK(id.dom == Vec{3});
}

TEST_CASE("reduction is equivariant up to sign") {
  for (const char* name : {"A2", "B2", "G2"}) {
    const RootSystem& rs = rs_of(name);
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
      Vec lam(rs.rank());
      for (auto& x : lam) x = static_cast<long long>(rng() % 11) - 5;
      SignedDom base = dominant_rep_signed(rs, lam);
      for (int w = 0; w < rs.wf.size(); ++w) {
        Vec moved = rs.wf.apply(w, lam + rs.rho) - rs.rho;
        SignedDom other = dominant_rep_signed(rs, moved);
        CHECK(other.zero == base.zero);
        if (!base.zero) {
          CHECK(other.dom == base.dom);
          CHECK(other.sign == base.sign * rs.wf.sign(w));
        }
      }
    }
  }
}

TEST_CASE("root lattice solve") {
  const RootSystem& g2 = rs_of("G2");
  Vec rc;
  CHECK(g2.weight_to_root(Vec{1, 0}, rc));
  CHECK(rc == Vec{2, 1});
  CHECK(g2.weight_to_root(Vec{0, 1}, rc));
  CHECK(rc == Vec{3, 2});
  CHECK(g2.dominance_leq(Vec{0, 0}, Vec{1, 0}));
  CHECK(!g2.dominance_leq(Vec{1, 0}, Vec{0, 0}));

  const RootSystem& a2 = rs_of("A2");
  CHECK(!a2.weight_to_root(Vec{1, 0}, rc));  // fundamental weight not in the root lattice
  CHECK(a2.weight_to_root(Vec{1, 1}, rc));   // rho = alpha_1 + alpha_2
  CHECK(rc == Vec{1, 1});
}
