#pragma once

#include <vector>

#include "pafold/laurent.hpp"
#include "pafold/rootloc.hpp"

namespace pafold {

// Directed multigraph on vertices 0..n-1 stored as the n x n matrix of edge
// multiplicities adj[i][j] = number of edges i -> j.
class Digraph {
 public:
  explicit Digraph(std::vector<std::vector<Int>> adj);

  std::size_t size() const { return adj_.size(); }
  const std::vector<std::vector<Int>>& adj() const { return adj_; }

  bool operator==(const Digraph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<std::vector<Int>> adj_;
};

// Strongly connected and aperiodic.  Aperiodicity is the gcd of the lengths
// of closed walks through vertex 0, scanned up to length 2n (sufficient for
// a strongly connected digraph).
bool is_perron_frobenius(const Digraph& d);

// det(tI - A), exact, via the Faddeev-LeVerrier recurrence over integers
// (the divisions in the recurrence are exact).
IntLaurentPoly charpoly(const Digraph& d);

// house(charpoly(d), tol).  DomainError unless is_perron_frobenius(d).
RootEnclosure spectral_radius(const Digraph& d, double tol = 1e-10);

// Edge count minus vertex count.
Int complexity(const Digraph& d);

// Certifies complexity(d) <= spectral_radius(d)^(2n) - 1; Indeterminate when
// the enclosure straddles the threshold.  DomainError unless PF.
Cert ham_song_check(const Digraph& d, double tol = 1e-10);

// n-cycle 1->2->...->n->1 plus one extra edge n->2; charpoly t^n - t - 1.
Digraph min_dilatation_digraph(std::int64_t n);

// Digraph of the transition matrix of the length-3 folding circuit on the
// 2n-edge family track; charpoly LT_{1,n}.
Digraph lt_digraph(std::int64_t n);

// {"n": int, "adj": [[int, ...], ...]}
std::string digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const std::string& text);

}  // namespace pafold
