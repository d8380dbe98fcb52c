#include "tiltcell/cells.hpp"

#include <algorithm>
#include <functional>

#include "tiltcell/errors.hpp"

namespace tiltcell {

std::vector<std::vector<int>> preorder_graph(KLContext& kl, const std::vector<WfRep>& ball) {
  const AffineGroup& g = kl.group();
  std::unordered_map<AffineElement, int, AEHash> index;
  for (size_t i = 0; i < ball.size(); ++i) index[ball[i].elem] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(ball.size());
  for (size_t i = 0; i < ball.size(); ++i) {
    const NVector& kx = kl.kl_element(ball[i].elem);
    std::unordered_set<int> targets;
    for (int s = 0; s <= g.rank(); ++s) {
      for (const auto& [y, c] : kl.kl_expand(kl.act_kl_gen(kx, s))) {
        if (y.elem == ball[i].elem) continue;
        auto it = index.find(y.elem);
        if (it != index.end()) targets.insert(it->second);
        (void)c;
      }
    }
    adj[i].assign(targets.begin(), targets.end());
    std::sort(adj[i].begin(), adj[i].end());
  }
  return adj;
}

namespace {

// iterative Tarjan strongly connected components
std::vector<int> scc_of(const std::vector<std::vector<int>>& adj, int& ncomp) {
  int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stack;
  std::vector<char> on_stack(n, 0);
  int counter = 0;
  ncomp = 0;
  struct Frame {
    int v;
    size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (num[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < adj[f.v].size()) {
        int w = adj[f.v][f.edge++];
        if (num[w] < 0) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        if (low[f.v] == num[f.v]) {
          for (;;) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = ncomp;
            if (w == f.v) break;
          }
          ++ncomp;
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  return comp;
}

}  // namespace

CellPartition cell_partition(KLContext& kl, int L) {
  require(L >= 1, "cell_partition needs L >= 1");
  CellPartition p;
  p.L = L;
  p.ball = kl.group().ball(L);
  for (size_t i = 0; i < p.ball.size(); ++i) p.ball_index[p.ball[i].elem] = static_cast<int>(i);
  auto adj = preorder_graph(kl, p.ball);

  int ncomp = 0;
  auto comp = scc_of(adj, ncomp);

  // order cells by their smallest member (ball is sorted), so cell ids are
  // deterministic and cell 0 contains e
  std::vector<int> first_member(ncomp, -1);
  for (int i = static_cast<int>(p.ball.size()) - 1; i >= 0; --i) first_member[comp[i]] = i;
  std::vector<int> order(ncomp);
  for (int c = 0; c < ncomp; ++c) order[c] = c;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return first_member[a] < first_member[b]; });
  std::vector<int> renumber(ncomp);
  for (int rank = 0; rank < ncomp; ++rank) renumber[order[rank]] = rank;

  p.cells.assign(ncomp, {});
  p.cell_of.assign(p.ball.size(), -1);
  for (size_t i = 0; i < p.ball.size(); ++i) {
    int c = renumber[comp[i]];
    p.cell_of[i] = c;
    p.cells[c].push_back(static_cast<int>(i));
  }

  std::vector<std::unordered_set<int>> edges(ncomp);
  for (size_t i = 0; i < p.ball.size(); ++i)
    for (int j : adj[i])
      if (p.cell_of[i] != p.cell_of[j]) edges[p.cell_of[i]].insert(p.cell_of[j]);
  p.cell_edges.assign(ncomp, {});
  for (int c = 0; c < ncomp; ++c) {
    p.cell_edges[c].assign(edges[c].begin(), edges[c].end());
    std::sort(p.cell_edges[c].begin(), p.cell_edges[c].end());
  }

  p.reach.assign(ncomp, std::vector<char>(ncomp, 0));
  std::function<void(int, int)> mark = [&](int root, int c) {
    if (p.reach[root][c]) return;
    p.reach[root][c] = 1;
    for (int d : p.cell_edges[c]) mark(root, d);
  };
  for (int c = 0; c < ncomp; ++c) mark(c, c);

  require(p.cells[p.e_cell()].size() == 1, "the identity does not form a singleton cell");
  for (int c = 0; c < ncomp; ++c)
    require(c == p.e_cell() || !p.reach[c][p.e_cell()], "the identity cell is not maximal");
  return p;
}

// Fragments of the infinite cells join up through elements as much as two
// length shells beyond their own, so the restriction that can be trusted
// after comparing L with L+2 is ball(L-4).
CellPartition cell_partition_checked(KLContext& kl, int L) {
  CellPartition p = cell_partition(kl, L);
  CellPartition q = cell_partition(kl, L + 2);
  std::vector<int> small;
  for (size_t i = 0; i < p.ball.size(); ++i)
    if (p.ball[i].length() <= L - 4) small.push_back(static_cast<int>(i));
  for (int i : small) {
    int qi = q.find(p.ball[i].elem);
    require(qi >= 0, "truncation comparison lost an element");
    for (int j : small) {
      int qj = q.find(p.ball[j].elem);
      bool same_p = p.cell_of[i] == p.cell_of[j];
      bool same_q = q.cell_of[qi] == q.cell_of[qj];
      bool le_p = p.reach[p.cell_of[i]][p.cell_of[j]];
      bool le_q = q.reach[q.cell_of[qi]][q.cell_of[qj]];
      if (same_p != same_q || le_p != le_q)
        throw TruncationError("cell partition at L = " + std::to_string(L) +
                              " is unstable on ball(L-4); enlarge L");
    }
  }
  return p;
}

int subregular_cell(const CellPartition& p) {
  int found = -1;
  for (int c = 0; c < static_cast<int>(p.cells.size()); ++c) {
    if (c == p.e_cell()) continue;
    bool top = true;  // no strict ancestor besides the identity cell
    for (int d = 0; d < static_cast<int>(p.cells.size()); ++d) {
      if (d == c || d == p.e_cell()) continue;
      if (p.reach[d][c]) {
        top = false;
        break;
      }
    }
    if (top) {
      if (found >= 0)
        throw TruncationError("subregular cell is not unique at this truncation");
      found = c;
    }
  }
  if (found < 0) throw TruncationError("no subregular cell at this truncation");
  return found;
}

std::vector<int> ideal_cells(const CellPartition& p, int cell, bool strict) {
  require(cell >= 0 && cell < static_cast<int>(p.cells.size()), "cell index out of range");
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(p.cells.size()); ++c)
    if (p.reach[cell][c] && !(strict && c == cell)) out.push_back(c);
  return out;
}

ElemSet ideal_members(const CellPartition& p, int cell, bool strict) {
  ElemSet out;
  for (int c : ideal_cells(p, cell, strict))
    for (int i : p.cells[c]) out.insert(p.ball[i].elem);
  return out;
}

bool n1_submodule_member(KLContext& kl, N1Vector n, const ElemSet& ideal,
                         const CellPartition& p) {
  const AffineGroup& g = kl.group();
  while (!n.empty()) {
    const AffineElement* pick = nullptr;
    long long pick_len = -1;
    std::vector<int> pick_word;
    for (const auto& [y, c] : n) {
      long long len = g.length(y);
      if (len < pick_len) continue;
      std::vector<int> w = g.lexmin_word(y);
      if (len > pick_len || w < pick_word) {
        pick_len = len;
        pick = &y;
        pick_word = std::move(w);
      }
      (void)c;
    }
    AffineElement y = *pick;
    if (p.find(y) < 0)
      throw TruncationError("submodule membership: support escapes ball(" +
                            std::to_string(p.L) + ")");
    if (!ideal.count(y)) return false;
    long long c = n[y];
    for (const auto& [z, m] : specialize_v1(kl.kl_element(y))) {
      auto it = n.find(z);
      if (it == n.end()) {
        n[z] = -c * m;
        if (n[z] == 0) n.erase(z);
      } else {
        it->second -= c * m;
        if (it->second == 0) n.erase(it);
      }
    }
    require(!n.count(y), "elimination did not remove the leading term");
  }
  return true;
}

}  // namespace tiltcell
