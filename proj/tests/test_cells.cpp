#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tiltcell/cells.hpp"
#include "tiltcell/errors.hpp"

using namespace tiltcell;

namespace {
struct Setup {
  RootSystem rs;
  AffineGroup g;
  KLContext kl;
  Setup(const char* name, long long l)
      : rs(build_root_system(CartanDatum::parse(name))), g(rs, l), kl(g) {}
};
}  // namespace

TEST_CASE("A1 preorder edges") {
  Setup s("A1", 5);
  auto ball = s.g.ball(3);  // e, s0, s0s1, s0s1s0
  auto adj = preorder_graph(s.kl, ball);
  REQUIRE(adj.size() == 4);
  CHECK(adj[0] == std::vector<int>{1});     // e -> s0
  CHECK(adj[1] == std::vector<int>{2});     // s0 -> s0s1, nothing into e
  CHECK(adj[2] == std::vector<int>{1, 3});  // chain continues, descent goes back
  for (size_t i = 0; i < adj.size(); ++i)
    for (int j : adj[i]) CHECK(j != static_cast<int>(i));  // no self loops
  // nothing points at e
  for (size_t i = 1; i < adj.size(); ++i)
    for (int j : adj[i]) CHECK(j != 0);
}

TEST_CASE("A1 cells: identity apart, the rest one cell") {
  Setup s("A1", 5);
  auto p = cell_partition(s.kl, 8);
  REQUIRE(p.cells.size() == 2);
  CHECK(p.cells[p.e_cell()].size() == 1);
  CHECK(p.cells[1 - p.e_cell()].size() == p.ball.size() - 1);
  CHECK(p.e_cell() == 0);
  // order: the nonidentity cell is strictly below
  CHECK(p.reach[0][1]);
  CHECK(!p.reach[1][0]);
  CHECK(subregular_cell(p) == 1);
}

TEST_CASE("identity cell singleton across types") {
  for (auto [name, l, L] : {std::tuple{"A2", 4ll, 6}, {"B2", 6ll, 6}, {"G2", 7ll, 8}}) {
    Setup s(name, l);
    auto p = cell_partition(s.kl, L);
    CHECK(p.cells[p.e_cell()].size() == 1);
    for (size_t c = 0; c < p.cells.size(); ++c)
      if (static_cast<int>(c) != p.e_cell()) CHECK(!p.reach[c][p.e_cell()]);
  }
}

TEST_CASE("stability under truncation") {
  for (auto [name, l, Lmax] :
       {std::tuple{"A1", 5ll, 14}, {"A2", 4ll, 10}, {"B2", 6ll, 10}, {"G2", 7ll, 14}}) {
    Setup s(name, l);
    for (int L = 6; L <= Lmax; L += 2) CHECK_NOTHROW(cell_partition_checked(s.kl, L));
  }
}

TEST_CASE("ideal members") {
  Setup s("A1", 5);
  auto p = cell_partition(s.kl, 8);
  // from the identity cell everything is reachable
  auto all = ideal_members(p, p.e_cell(), false);
  CHECK(all.size() == p.ball.size());
  auto strict = ideal_members(p, p.e_cell(), true);
  CHECK(strict.size() == p.ball.size() - 1);
  CHECK(!strict.count(s.g.identity()));
  // the bottom cell is its own inclusive ideal
  int low = 1 - p.e_cell();
  CHECK(ideal_members(p, low, false).size() == p.cells[low].size());
  CHECK(ideal_members(p, low, true).empty());
}

TEST_CASE("ideal closure under the generator action") {
  for (auto [name, l, L] : {std::tuple{"A1", 5ll, 9}, {"G2", 7ll, 9}}) {
    Setup s(name, l);
    auto p = cell_partition(s.kl, L);
    for (size_t cell = 0; cell < p.cells.size(); ++cell) {
      auto ideal = ideal_members(p, static_cast<int>(cell), false);
      for (const auto& y : ideal) {
        if (s.g.length(y) + 1 > p.L) continue;  // stay inside the safe ball
        for (int gen = 0; gen <= s.g.rank(); ++gen) {
          auto prod = s.kl.act_kl_gen(s.kl.kl_element(y), gen);
          for (const auto& [z, c] : s.kl.kl_expand(prod)) {
            if (p.find(z.elem) < 0) continue;
            CHECK(ideal.count(z.elem));
            (void)c;
          }
        }
      }
    }
  }
}

TEST_CASE("submodule membership") {
  Setup s("A1", 5);
  auto p = cell_partition(s.kl, 8);
  AffineElement e = s.g.identity(), s0 = s.g.gen(0);
  auto below = ideal_members(p, p.e_cell(), true);  // everything but e

  // canonical basis element of the ideal
  CHECK(n1_submodule_member(s.kl, specialize_v1(s.kl.kl_element(s0)), below, p));
  // N1_e has leading term e, excluded
  CHECK(!n1_submodule_member(s.kl, N1Vector{{e, 1}}, below, p));
  // zero vector always belongs
  CHECK(n1_submodule_member(s.kl, N1Vector{}, below, p));
  // escape the ball: leading term beyond L
  AffineElement big = s.g.identity();
  for (int i = 0; i < 10; ++i) big = s.g.mul_gen(big, i % 2);
  CHECK_THROWS_AS(n1_submodule_member(s.kl, N1Vector{{big, 1}}, below, p), TruncationError);
}

TEST_CASE("G2 eight element cell") {
  Setup s("G2", 7);
  auto p = cell_partition_checked(s.kl, 12);
  int sub = subregular_cell(p);
  CHECK(p.cells[sub].size() == 8);
  // it contains the alcove wall-adjacent to the identity alcove
  int s0_idx = p.find(s.g.gen(0));
  REQUIRE(s0_idx >= 0);
  CHECK(p.cell_of[s0_idx] == sub);
  // golden: members of the strict ideal below it at L = 12
  auto strict = ideal_members(p, sub, true);
  CHECK(strict.size() == p.ball.size() - 9);  // all but {e} and the eight
}
