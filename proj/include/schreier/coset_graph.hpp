#ifndef SCHREIER_COSET_GRAPH_HPP
#define SCHREIER_COSET_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "schreier/rng.hpp"
#include "schreier/series.hpp"
#include "schreier/words.hpp"

namespace schreier {

/// Folded subgroup graph: deterministic symmetric labelled graph whose
/// basepoint loops read exactly the elements of H. Vertex 0 is the
/// basepoint; vertices are numbered in BFS order from it.
struct CoreGraph {
  int rank = 1;
  std::vector<int> edges;  // num_vertices * 2*rank slots, -1 = absent

  int num_vertices() const {
    return rank > 0 ? static_cast<int>(edges.size()) / (2 * rank) : 0;
  }
  int edge(int v, Sym s) const { return edges[static_cast<size_t>(v) * 2 * rank + s]; }
  /// Complete = every vertex has full out-degree 2r, i.e. H has finite index.
  bool complete() const;
};

/// Stallings fold of the loop bouquet spanned by the generators.
CoreGraph fold(const std::vector<GroupWord>& generators, int rank);

/// True iff tracing w from the basepoint stays inside the graph and comes
/// back to the basepoint.
bool membership(const GroupWord& w, const CoreGraph& g);

/// Truncated Schreier coset graph: spheres V_0..V_N, all 2r transitions
/// present for vertices below sphere N (missing core transitions spawn
/// hanging-tree vertices), targets never beyond sphere N. Vertex index
/// order is BFS discovery order.
struct CosetGraph {
  int rank = 1;
  int radius = 0;
  std::vector<int> edges;               // V * 2r, -1 only on sphere-N vertices
  std::vector<int> sphere;              // BFS distance from the basepoint
  std::vector<long long> sphere_sizes;  // v(0..N)

  int num_vertices() const {
    return rank > 0 ? static_cast<int>(edges.size()) / (2 * rank) : 0;
  }
  int edge(int v, Sym s) const { return edges[static_cast<size_t>(v) * 2 * rank + s]; }
};

CosetGraph coset_graph(const CoreGraph& g, int radius);

/// Level-by-level maximal subtree: the parent of a sphere-n vertex lies in
/// sphere n-1, chosen as the smallest vertex index, then smallest label.
struct SpanningTree {
  std::vector<int> parent;      // -1 at the basepoint
  std::vector<Sym> parent_sym;  // label on the edge parent -> vertex
};

SpanningTree spanning_tree(const CosetGraph& cg);
/// Label of the tree path from the basepoint to v; a reduced word of
/// length sphere(v).
GroupWord tree_geodesic(const CosetGraph& cg, const SpanningTree& t, int v);
bool is_tree_edge(const SpanningTree& t, int from, Sym label, int to);

/// Symmetric Schreier generator counts read off the non-tree edges with
/// both endpoints inside the truncation. b(m) counts generator and inverse
/// separately; only lengths m <= 2N are complete and recorded.
struct SchreierGenSet {
  std::vector<long long> b;           // index 0..2N, b[0] = 0
  std::vector<GroupWord> generators;  // words of the counted generators
  std::vector<Rat> a;                 // a(0..N), a(n) = (b(2n-2)+2b(2n-1)+b(2n))/4
  std::vector<Rat> d;                 // d(0..N), d(n) = b(2n)/2
};

SchreierGenSet schreier_generators(const CosetGraph& cg, const SpanningTree& t);

struct GsfgReport {
  std::vector<long long> v;  // sphere sizes v(0..N)
  std::vector<long long> b;  // b(0..2N)
  std::vector<Rat> a;        // a(0..N)
  TruncSeries lhs{0}, rhs{0};
  bool series_ok = false;  // H~(B,t) == (rt-(t+1)/2) H(F/H,t) + (t+1)/2
  bool local_ok = false;   // a(n+1) == ((2r-1)v(n) - v(n+1))/2 for 1 <= n < N
  bool base_ok = false;    // a(1) == (b(1)+b(2)/2)/2 and 2r == b(1)+b(2)/2+v(1)
  bool audit_ok = false;   // 2r v(n) == v(n)+v(n+1)+b(2n)/2+b(2n+1)+b(2n+2)/2
  bool ok = false;
};

GsfgReport verify_generalized_schreier_report(const CoreGraph& g, int radius);
bool verify_generalized_schreier(const CoreGraph& g, int radius);

struct ClassicalResult {
  long long index = 0;
  long long rank_h = 0;
  bool holds = false;
};

/// rk H = (rk F - 1)[F:H] + 1 with rk H computed as half the total b
/// count; requires a complete core (finite index), else throws.
ClassicalResult classical_schreier_check(const CoreGraph& g);

struct EvenReport {
  bool is_even = false;      // all odd b counts vanish
  TruncSeries h_hat{0};      // sum d(n) t^n
  bool halved_ok = false;    // (t+1) H^(B,t) == 2 H~(B,t)
  bool divided_ok = false;   // H^(B,t) == (2rt/(t+1) - 1) H(F/H,t) + 1
  bool doubled_ok = false;   // H(B,t) == 2(2rt^2/(t^2+1) - 1) H(F/H,t^2) + 2
  bool ok = false;
};

EvenReport even_subgroup_series(const CoreGraph& g, int radius);

/// Directed edge handle: the edge leaving `from` with label `label`.
struct EdgeRef {
  int from = -1;
  Sym label = 0;
};

/// Remark-style edge surgery: e1 joins two sphere-(n-1) vertices, e2 two
/// sphere-n vertices, same label; the two edges are cut and pasted
/// crosswise. Degrees per label are preserved; the result keeps the vertex
/// numbering, gets fresh BFS spheres, and is rejected if disconnected.
CosetGraph surgery(const CosetGraph& cg, const SpanningTree& t, const EdgeRef& e1,
                   const EdgeRef& e2);

/// All subgroups of index <= maxIndex, one complete core graph each, via
/// canonical transitive coset tables (basepoint-preserving relabelings are
/// identified, so each subgroup appears exactly once).
std::vector<CoreGraph> enumerate_subgroups(int rank, int maxIndex);

struct SurgeryInstance {
  CosetGraph before, after;
  EdgeRef e1, e2;
  std::vector<long long> b_before, b_after;
  std::vector<long long> v;  // common sphere counts
  bool b_differs = false;
  std::string origin;
  long long attempts = 0;
};

/// Bounded search over enumerated subgroups and random folds for a surgery
/// instance whose b-sequence changes. Returns the first hit, or the last
/// admissible swap tried (b_differs=false) when the budget runs out, or
/// nullopt if no admissible pair exists at all within the budget.
std::optional<SurgeryInstance> find_surgery_instance(int rank, int radius, long long budget,
                                                     uint64_t seed);

GroupWord random_reduced_word(SmallRng& rng, int rank, int length);

std::string dot_core(const CoreGraph& g);
std::string dot_coset(const CosetGraph& cg);

}  // namespace schreier

#endif
