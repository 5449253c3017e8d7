#pragma once
// Rectangular standard Young tableaux, their encoding of coordinate-sum
// monotone paths on the permutahedron, realizability via outer sums, and
// plane binary trees with the path counts of the interval polymatroids.

#include <optional>
#include <utility>
#include <vector>

#include "flagpoly/rational.hpp"

namespace flagpoly {

// m x n array of the numbers 1..m*n, strictly increasing along each row and
// down each column.
struct Tableau {
  int m = 0, n = 0;
  std::vector<std::vector<int>> rows;
};
Tableau make_tableau(std::vector<std::vector<int>> rows);

// All tableaux of shape m x n by backtracking (m*n <= 20), in lexicographic
// order of their row-word.
std::vector<Tableau> enumerate_syt(int m, int n);

// (m*n)! divided by the product of hook lengths; equals the enumeration count.
mpz_class hook_count(int m, int n);

// Word of a tableau: letter h is the 1-based row containing the value h.
// Every letter r appears exactly n times, and every prefix contains letter r
// at least as often as r+1.
std::vector<int> word_from_tableau(const Tableau& t);
Tableau tableau_from_word(int m, int n, const std::vector<int>& word);

// The monotone path on the permutahedron of (1, ..., m+n) encoded by a
// tableau, for the objective summing the first m coordinates: each step swaps
// a value x sitting among the first m positions with x+1 sitting further
// right; the path starts at (1, 2, ..., m+n) and ends at
// (n+1, ..., n+m, 1, ..., n). Points are returned as value vectors.
std::vector<std::vector<int>> path_from_tableau(const Tableau& t);
Tableau tableau_from_path(int m, const std::vector<std::vector<int>>& path);

// Whether ranking the outer sums u_i + v_j of strictly increasing u, v
// reproduces t (all sums must be distinct).
bool realizes(const Tableau& t, const Vec& u, const Vec& v);

// Searches for such a pair by strict feasibility over the consecutive-rank
// comparisons; a returned witness has been re-verified by realizes().
std::optional<std::pair<Vec, Vec>> is_realizable(const Tableau& t);

// Tableaux of shape m x n passing is_realizable (m*n <= 16).
long count_realizable(int m, int n);

// Monotone paths on the permutahedron of (1, ..., n) for the sum of k
// coordinates that some weight selects: k! (n-k)! count_realizable(k, n-k).
long coherent_path_count(int n, int k);

// Binary tree whose in-order traversal reads 1..n; children are stored
// 0-based with -1 for absent.
struct PlaneBinaryTree {
  int n = 0;
  int root = -1;
  std::vector<int> left, right;
};

std::vector<PlaneBinaryTree> enumerate_plane_trees(int n);

// Node counts of the left and right subtrees hanging at each node.
std::pair<std::vector<int>, std::vector<int>> subtree_sizes(
    const PlaneBinaryTree& t);

// Linear extensions of the tree ordered toward the root:
// n! / prod_i (L_i + R_i + 1).
long tree_linear_extensions(const PlaneBinaryTree& t);

// The same hook rule for an arbitrary rooted forest given by its parent map
// (-1 at roots); the empty forest counts 1.
long forest_linear_extensions(const std::vector<int>& parent);

// Vertex of the interval-count base polytope selected by any weight ordered
// as a linear extension of t: coordinate j gets (L_j + 1)(R_j + 1).
Vec tree_vertex(const PlaneBinaryTree& t);

// Distinct greedy paths of the tight interval-count polymatroid: the sum over
// plane binary trees on n nodes of the extension count of the tree with all
// leaves removed.
long tight_associahedron_path_count(int n);

}  // namespace flagpoly
