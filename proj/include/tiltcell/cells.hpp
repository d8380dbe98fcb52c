#ifndef TILTCELL_CELLS_HPP
#define TILTCELL_CELLS_HPP

#include <unordered_set>
#include <vector>

#include "tiltcell/hecke.hpp"

namespace tiltcell {

using ElemSet = std::unordered_set<AffineElement, AEHash>;

// Right-cell partition of the length-truncated set of minimal coset
// representatives, with the condensation of the generated preorder.
// Cell 0 is always the singleton {e}, the unique maximal cell.
struct CellPartition {
  int L = 0;
  std::vector<WfRep> ball;  // sorted by (length, word)
  std::unordered_map<AffineElement, int, AEHash> ball_index;
  std::vector<std::vector<int>> cells;      // element indices, each sorted
  std::vector<int> cell_of;                 // element index -> cell index
  std::vector<std::vector<int>> cell_edges; // condensation edges a -> b (b strictly below a)
  std::vector<std::vector<char>> reach;     // reflexive-transitive closure on cells

  int find(const AffineElement& x) const {
    auto it = ball_index.find(x);
    return it == ball_index.end() ? -1 : it->second;
  }
  int e_cell() const { return cell_of[0]; }
};

// graph on ball(L): edge x -> y iff y != x appears in the canonical-basis
// expansion of kl_element(x) * (H_s + v) for some generator s
std::vector<std::vector<int>> preorder_graph(KLContext& kl, const std::vector<WfRep>& ball);

CellPartition cell_partition(KLContext& kl, int L);

// computes at L and L+2 and fails (TruncationError) unless the partitions
// and their orders agree on ball(L-2)
CellPartition cell_partition_checked(KLContext& kl, int L);

// the unique cell != {e} whose only strict ancestor is {e}
int subregular_cell(const CellPartition& p);

// downward closure of a cell in the preorder; strict = exclude the cell itself
std::vector<int> ideal_cells(const CellPartition& p, int cell, bool strict);
ElemSet ideal_members(const CellPartition& p, int cell, bool strict);

// unitriangular elimination at v = 1: true iff the vector lies in the span
// of the canonical basis elements indexed by the ideal. Leading terms that
// leave the ball raise TruncationError.
bool n1_submodule_member(KLContext& kl, N1Vector n, const ElemSet& ideal,
                         const CellPartition& p);

}  // namespace tiltcell

#endif
