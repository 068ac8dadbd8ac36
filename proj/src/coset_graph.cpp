#include "schreier/coset_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace schreier {

bool CoreGraph::complete() const {
  for (int e : edges)
    if (e < 0) return false;
  return true;
}

namespace {

void check_rank(int rank) {
  if (rank < 1 || rank > max_rank_supported())
    throw std::invalid_argument("free group rank must be between 1 and " +
                                std::to_string(max_rank_supported()));
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // keep the smaller index as representative
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

/// BFS renumbering from the basepoint, symbol order inside each vertex.
/// Gives fold a canonical result independent of merge order.
CoreGraph compact_bfs(int rank, int base, const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> id(n, -1);
  std::vector<int> order;
  id[base] = 0;
  order.push_back(base);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int v = order[qi];
    for (Sym s = 0; s < 2 * rank; ++s) {
      int t = adj[v][s];
      if (t >= 0 && id[t] < 0) {
        id[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }
  CoreGraph g;
  g.rank = rank;
  g.edges.assign(static_cast<size_t>(order.size()) * 2 * rank, -1);
  for (size_t i = 0; i < order.size(); ++i)
    for (Sym s = 0; s < 2 * rank; ++s) {
      int t = adj[order[i]][s];
      if (t >= 0) g.edges[i * 2 * rank + s] = id[t];
    }
  return g;
}

}  // namespace

CoreGraph fold(const std::vector<GroupWord>& generators, int rank) {
  check_rank(rank);
  // bouquet of subdivided loops at vertex 0
  struct Triple { int u; Sym s; int v; };
  std::vector<Triple> triples;
  int vertices = 1;
  for (const GroupWord& raw : generators) {
    GroupWord w = reduce_word(raw.syms);
    if (w.empty()) continue;
    int cur = 0;
    for (size_t i = 0; i + 1 < w.syms.size(); ++i) {
      triples.push_back({cur, w.syms[i], vertices});
      cur = vertices++;
    }
    triples.push_back({cur, w.syms.back(), 0});
  }

  UnionFind uf(vertices);
  // fold to a fixpoint: identify targets whenever determinism fails
  bool changed = true;
  std::vector<std::vector<int>> adj;
  while (changed) {
    changed = false;
    adj.assign(vertices, std::vector<int>(2 * rank, -1));
    for (const Triple& e : triples) {
      int u = uf.find(e.u), v = uf.find(e.v);
      // both directions, so co-determinism conflicts are found too
      for (auto [a, s, b] : {std::tuple<int, Sym, int>{u, e.s, v},
                             std::tuple<int, Sym, int>{v, sym_inverse(e.s), u}}) {
        int& slot = adj[a][s];
        if (slot < 0) {
          slot = b;
        } else if (slot != b) {
          uf.unite(slot, b);
          changed = true;
        }
      }
    }
  }
  return compact_bfs(rank, uf.find(0), adj);
}

bool membership(const GroupWord& w, const CoreGraph& g) {
  int cur = 0;
  for (Sym s : w.syms) {
    cur = g.edge(cur, s);
    if (cur < 0) return false;
  }
  return cur == 0;
}

CosetGraph coset_graph(const CoreGraph& g, int radius) {
  check_rank(g.rank);
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  int r2 = 2 * g.rank;

  CosetGraph cg;
  cg.rank = g.rank;
  cg.radius = radius;

  std::vector<int> core_id;   // new id -> core vertex, -1 for hanging vertices
  std::vector<int> core_map(g.num_vertices(), -1);

  auto add_vertex = [&](int core, int sph) {
    int id = static_cast<int>(core_id.size());
    core_id.push_back(core);
    if (core >= 0) core_map[core] = id;
    cg.sphere.push_back(sph);
    cg.edges.insert(cg.edges.end(), r2, -1);
    return id;
  };
  auto slot = [&](int v, Sym s) -> int& { return cg.edges[static_cast<size_t>(v) * r2 + s]; };

  add_vertex(g.num_vertices() > 0 ? 0 : -1, 0);
  for (int v = 0; v < static_cast<int>(core_id.size()); ++v) {
    int n = cg.sphere[v];
    int core = core_id[v];
    if (n == radius) {
      // do not expand; record core edges to vertices already inside V(<=N)
      if (core >= 0)
        for (Sym s = 0; s < r2; ++s) {
          int ct = g.edge(core, s);
          if (ct >= 0 && core_map[ct] >= 0) slot(v, s) = core_map[ct];
        }
      continue;
    }
    for (Sym s = 0; s < r2; ++s) {
      if (slot(v, s) >= 0) continue;
      int ct = core >= 0 ? g.edge(core, s) : -1;
      int target;
      if (ct >= 0) {
        target = core_map[ct] >= 0 ? core_map[ct] : add_vertex(ct, n + 1);
      } else {
        target = add_vertex(-1, n + 1);  // hanging-tree vertex
      }
      slot(v, s) = target;
      if (cg.edges[static_cast<size_t>(target) * r2 + sym_inverse(s)] < 0)
        cg.edges[static_cast<size_t>(target) * r2 + sym_inverse(s)] = v;
    }
  }

  cg.sphere_sizes.assign(radius + 1, 0);
  for (int sph : cg.sphere) cg.sphere_sizes[sph] += 1;
  return cg;
}

SpanningTree spanning_tree(const CosetGraph& cg) {
  int n = cg.num_vertices();
  SpanningTree t;
  t.parent.assign(n, -1);
  t.parent_sym.assign(n, 0);
  std::vector<char> done(n, 0);
  done[0] = 1;
  // vertex indices are BFS order, so one ascending scan assigns each vertex
  // the earliest parent with the smallest label
  for (int v = 0; v < n; ++v)
    for (Sym s = 0; s < 2 * cg.rank; ++s) {
      int u = cg.edge(v, s);
      if (u < 0 || done[u]) continue;
      if (cg.sphere[u] != cg.sphere[v] + 1) continue;
      t.parent[u] = v;
      t.parent_sym[u] = s;
      done[u] = 1;
    }
  for (int v = 0; v < n; ++v)
    if (!done[v]) throw std::logic_error("coset graph is not connected");
  return t;
}

GroupWord tree_geodesic(const CosetGraph& cg, const SpanningTree& t, int v) {
  GroupWord w;
  while (t.parent[v] >= 0) {
    w.syms.push_back(t.parent_sym[v]);
    v = t.parent[v];
  }
  std::reverse(w.syms.begin(), w.syms.end());
  (void)cg;
  return w;
}

bool is_tree_edge(const SpanningTree& t, int from, Sym label, int to) {
  if (t.parent[to] == from && t.parent_sym[to] == label) return true;
  if (t.parent[from] == to && t.parent_sym[from] == sym_inverse(label)) return true;
  return false;
}

SchreierGenSet schreier_generators(const CosetGraph& cg, const SpanningTree& t) {
  int N = cg.radius;
  if (N < 1) throw std::invalid_argument("schreier_generators needs radius >= 1");
  SchreierGenSet out;
  out.b.assign(2 * N + 1, 0);

  std::vector<GroupWord> geo(cg.num_vertices());
  for (int v = 0; v < cg.num_vertices(); ++v) geo[v] = tree_geodesic(cg, t, v);

  for (int v = 0; v < cg.num_vertices(); ++v)
    for (Sym s = 0; s < 2 * cg.rank; ++s) {
      int u = cg.edge(v, s);
      if (u < 0 || is_tree_edge(t, v, s, u)) continue;
      int len = cg.sphere[v] + cg.sphere[u] + 1;
      if (len > 2 * N) continue;  // V_N x V_N edges are incomplete data
      out.b[len] += 1;
      GroupWord gen = geo[v];
      gen.syms.push_back(s);
      GroupWord back = inverse_word(geo[u]);
      gen.syms.insert(gen.syms.end(), back.syms.begin(), back.syms.end());
      GroupWord reduced = reduce_word(gen.syms);
      if (reduced.syms != gen.syms)
        throw std::logic_error("Schreier generator was not automatically reduced");
      out.generators.push_back(std::move(reduced));
    }

  auto b_at = [&](int m) -> long long { return (m >= 1 && m <= 2 * N) ? out.b[m] : 0; };
  out.a.assign(N + 1, Rat(0));
  out.d.assign(N + 1, Rat(0));
  for (int n = 1; n <= N; ++n) {
    out.a[n] = make_rat(static_cast<long>(b_at(2 * n - 2) + 2 * b_at(2 * n - 1) + b_at(2 * n)), 4);
    out.d[n] = make_rat(static_cast<long>(b_at(2 * n)), 2);
  }
  return out;
}

namespace {

TruncSeries coset_series(const CosetGraph& cg) {
  std::vector<Rat> c(cg.radius + 1);
  for (int n = 0; n <= cg.radius; ++n) c[n] = Rat(static_cast<long>(cg.sphere_sizes[n]));
  return TruncSeries(cg.radius, c);
}

}  // namespace

GsfgReport verify_generalized_schreier_report(const CoreGraph& g, int radius) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  CosetGraph cg = coset_graph(g, radius);
  SpanningTree t = spanning_tree(cg);
  SchreierGenSet gens = schreier_generators(cg, t);

  GsfgReport rep;
  rep.v = cg.sphere_sizes;
  rep.b = gens.b;
  rep.a = gens.a;
  int N = radius;
  long r = g.rank;

  std::vector<Rat> lhs_c(N + 1, Rat(0));
  for (int n = 1; n <= N; ++n) lhs_c[n] = gens.a[n];
  rep.lhs = TruncSeries(N, lhs_c);

  TruncSeries V = coset_series(cg);
  TruncSeries factor(N, [&] {
    std::vector<Rat> c(N + 1, Rat(0));
    c[0] = make_rat(-1, 2);
    if (N >= 1) c[1] = make_rat(2 * r - 1, 2);
    return c;
  }());
  TruncSeries half_t_plus_1(N, [&] {
    std::vector<Rat> c(N + 1, Rat(0));
    c[0] = make_rat(1, 2);
    if (N >= 1) c[1] = make_rat(1, 2);
    return c;
  }());
  rep.rhs = add(mul(factor, V), half_t_plus_1);
  rep.series_ok = rep.lhs == rep.rhs;

  auto vv = [&](int n) -> Rat { return Rat(static_cast<long>(cg.sphere_sizes[n])); };
  rep.local_ok = true;
  for (int n = 1; n + 1 <= N; ++n) {
    Rat expect = (Rat(2 * r - 1) * vv(n) - vv(n + 1)) / 2;
    if (gens.a[n + 1] != expect) rep.local_ok = false;
  }
  Rat b1(static_cast<long>(gens.b[1]));
  Rat b2_half = make_rat(static_cast<long>(gens.b[2]), 2);
  rep.base_ok = gens.a[1] == (b1 + b2_half) / 2 && Rat(2 * r) == b1 + b2_half + vv(1);

  rep.audit_ok = true;
  auto bb = [&](int m) -> Rat { return Rat(static_cast<long>(m <= 2 * N ? gens.b[m] : 0)); };
  for (int n = 1; n < N; ++n) {
    Rat left = Rat(2 * r) * vv(n);
    Rat right = vv(n) + vv(n + 1) + bb(2 * n) / 2 + bb(2 * n + 1) + bb(2 * n + 2) / 2;
    if (left != right) rep.audit_ok = false;
  }

  rep.ok = rep.series_ok && rep.local_ok && rep.base_ok && rep.audit_ok;
  return rep;
}

bool verify_generalized_schreier(const CoreGraph& g, int radius) {
  return verify_generalized_schreier_report(g, radius).ok;
}

ClassicalResult classical_schreier_check(const CoreGraph& g) {
  if (!g.complete())
    throw std::invalid_argument(
        "classical Schreier formula needs finite index, but the core graph is incomplete");
  // radius = diameter + 1 puts every edge strictly inside the truncation
  int n = g.num_vertices();
  std::vector<int> dist(n, -1);
  dist[0] = 0;
  std::queue<int> q;
  q.push(0);
  int diameter = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    diameter = std::max(diameter, dist[v]);
    for (Sym s = 0; s < 2 * g.rank; ++s) {
      int u = g.edge(v, s);
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  CosetGraph cg = coset_graph(g, diameter + 1);
  SchreierGenSet gens = schreier_generators(cg, spanning_tree(cg));
  long long total = 0;
  for (long long c : gens.b) total += c;
  ClassicalResult res;
  res.index = n;
  res.rank_h = total / 2;
  res.holds = res.rank_h == (g.rank - 1) * res.index + 1;
  return res;
}

EvenReport even_subgroup_series(const CoreGraph& g, int radius) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  CosetGraph cg = coset_graph(g, radius);
  SpanningTree t = spanning_tree(cg);
  SchreierGenSet gens = schreier_generators(cg, t);
  int N = radius;
  long r = g.rank;

  EvenReport rep;
  rep.is_even = true;
  for (int m = 1; m <= 2 * N; m += 2)
    if (gens.b[m] != 0) rep.is_even = false;
  rep.h_hat = TruncSeries(N, [&] {
    std::vector<Rat> c(N + 1, Rat(0));
    for (int n = 1; n <= N; ++n) c[n] = gens.d[n];
    return c;
  }());
  if (!rep.is_even) {
    rep.ok = true;  // nothing claimed for uneven subgroups
    return rep;
  }

  TruncSeries V = coset_series(cg);
  // H^(B,t) == 2rt/(t+1) H(F/H,t) - H(F/H,t) + 1
  TruncSeries tV(N, [&] {
    std::vector<Rat> c(N + 1, Rat(0));
    for (int n = 1; n <= N; ++n) c[n] = Rat(2 * r) * V.coeff(n - 1);
    return c;
  }());
  TruncSeries t_plus_1(N, [&] {
    std::vector<Rat> c(N + 1, Rat(0));
    c[0] = 1;
    if (N >= 1) c[1] = 1;
    return c;
  }());
  TruncSeries rhs = add(sub(div_unit(tV, t_plus_1), V), TruncSeries::one(N));
  rep.divided_ok = rep.h_hat == rhs;

  // (t+1) H^ == 2 H~, the bridge between the halved and weighted counts
  TruncSeries htilde(N, [&] {
    std::vector<Rat> c(N + 1, Rat(0));
    for (int n = 1; n <= N; ++n) c[n] = gens.a[n];
    return c;
  }());
  rep.halved_ok = mul(t_plus_1, rep.h_hat) == scale(Rat(2), htilde);

  // doubled form at cap 2N, using the raw doubled census H(B,t)
  int cap2 = 2 * N;
  TruncSeries hb(cap2, [&] {
    std::vector<Rat> c(cap2 + 1, Rat(0));
    for (int m = 1; m <= 2 * N; ++m) c[m] = Rat(static_cast<long>(gens.b[m]));
    return c;
  }());
  TruncSeries V2(cap2, [&] {
    std::vector<Rat> c(cap2 + 1, Rat(0));
    for (int n = 0; n <= N; ++n) c[2 * n] = V.coeff(n);
    return c;
  }());
  TruncSeries t2V2(cap2, [&] {
    std::vector<Rat> c(cap2 + 1, Rat(0));
    for (int m = 2; m <= cap2; ++m) c[m] = Rat(2 * r) * V2.coeff(m - 2);
    return c;
  }());
  TruncSeries t2_plus_1(cap2, [&] {
    std::vector<Rat> c(cap2 + 1, Rat(0));
    c[0] = 1;
    if (cap2 >= 2) c[2] = 1;
    return c;
  }());
  TruncSeries inner = add(sub(div_unit(t2V2, t2_plus_1), V2), TruncSeries::one(cap2));
  rep.doubled_ok = hb == scale(Rat(2), inner);

  rep.ok = rep.halved_ok && rep.divided_ok && rep.doubled_ok;
  return rep;
}

CosetGraph surgery(const CosetGraph& cg, const SpanningTree& t, const EdgeRef& e1,
                   const EdgeRef& e2) {
  if (e1.label != e2.label) throw std::invalid_argument("surgery edges must share a label");
  Sym s = e1.label;
  int o1 = e1.from, o3 = e2.from;
  if (o1 < 0 || o1 >= cg.num_vertices() || o3 < 0 || o3 >= cg.num_vertices())
    throw std::invalid_argument("surgery edge source out of range");
  int o2 = cg.edge(o1, s), o4 = cg.edge(o3, s);
  if (o2 < 0 || o4 < 0) throw std::invalid_argument("surgery edge does not exist");
  if (o1 == o3) throw std::invalid_argument("surgery needs two distinct edges");
  int n = cg.sphere[o3];
  if (cg.sphere[o4] != n || cg.sphere[o1] != n - 1 || cg.sphere[o2] != n - 1)
    throw std::invalid_argument(
        "surgery needs one edge inside sphere n-1 and one inside sphere n");
  if (is_tree_edge(t, o1, s, o2) || is_tree_edge(t, o3, s, o4))
    throw std::invalid_argument("surgery edges must be non-tree edges");

  CosetGraph out = cg;
  int r2 = 2 * cg.rank;
  auto slot = [&](int v, Sym sym) -> int& { return out.edges[static_cast<size_t>(v) * r2 + sym]; };
  slot(o1, s) = o4;
  slot(o4, sym_inverse(s)) = o1;
  slot(o3, s) = o2;
  slot(o2, sym_inverse(s)) = o3;

  // fresh BFS: the graph must stay connected, and spheres are re-derived
  std::vector<int> dist(out.num_vertices(), -1);
  dist[0] = 0;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (Sym sym = 0; sym < r2; ++sym) {
      int u = out.edge(v, sym);
      if (u >= 0 && dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  for (int v = 0; v < out.num_vertices(); ++v)
    if (dist[v] < 0)
      throw std::invalid_argument("surgery would disconnect the coset graph");
  out.sphere = dist;
  out.sphere_sizes.assign(out.radius + 1, 0);
  for (int d : dist) {
    if (d > out.radius) throw std::logic_error("surgery pushed a vertex past the radius");
    out.sphere_sizes[d] += 1;
  }
  return out;
}

namespace {

struct TableEnumerator {
  int rank, target;
  std::vector<int> edges;  // target * 2r
  int used = 1;
  std::vector<CoreGraph>* out;

  int& slot(int v, Sym s) { return edges[static_cast<size_t>(v) * 2 * rank + s]; }

  void run() {
    edges.assign(static_cast<size_t>(target) * 2 * rank, -1);
    used = 1;
    fill(0, 0);
  }

  void fill(int v, Sym s) {
    while (v < used && slot(v, s) >= 0) {
      if (++s == 2 * rank) { s = 0; ++v; }
    }
    if (v >= used) {
      if (used == target) {
        CoreGraph g;
        g.rank = rank;
        g.edges.assign(edges.begin(), edges.begin() + static_cast<size_t>(used) * 2 * rank);
        out->push_back(std::move(g));
      }
      return;
    }
    // existing targets with a free inverse slot, then one fresh vertex;
    // fresh targets always take the next index, which makes every table
    // BFS-canonical and each subgroup appear once
    for (int tgt = 0; tgt <= (used < target ? used : used - 1); ++tgt) {
      if (tgt < used && slot(tgt, sym_inverse(s)) >= 0) continue;
      bool fresh = tgt == used;
      if (fresh) ++used;
      slot(v, s) = tgt;
      slot(tgt, sym_inverse(s)) = v;
      fill(v, s);
      slot(tgt, sym_inverse(s)) = -1;
      slot(v, s) = -1;
      if (fresh) --used;
    }
  }
};

}  // namespace

std::vector<CoreGraph> enumerate_subgroups(int rank, int maxIndex) {
  check_rank(rank);
  if (maxIndex < 1 || maxIndex > 6)
    throw std::invalid_argument("subgroup enumeration supports index 1..6");
  std::vector<CoreGraph> out;
  for (int j = 1; j <= maxIndex; ++j) {
    TableEnumerator e{rank, j, {}, 1, &out};
    e.run();
  }
  return out;
}

GroupWord random_reduced_word(SmallRng& rng, int rank, int length) {
  GroupWord w;
  for (int i = 0; i < length; ++i) {
    Sym s;
    do {
      s = rng.upto(2 * rank);
    } while (!w.syms.empty() && s == sym_inverse(w.syms.back()));
    w.syms.push_back(s);
  }
  return w;
}

std::optional<SurgeryInstance> find_surgery_instance(int rank, int radius, long long budget,
                                                     uint64_t seed) {
  check_rank(rank);
  if (radius < 2) throw std::invalid_argument("surgery search needs radius >= 2");
  SmallRng rng(seed);
  std::optional<SurgeryInstance> admissible;
  long long attempts = 0;

  auto try_graph = [&](const CoreGraph& core, const std::string& origin) -> bool {
    CosetGraph cg = coset_graph(core, radius);
    SpanningTree t = spanning_tree(cg);
    SchreierGenSet before = schreier_generators(cg, t);

    // group same-sphere non-tree edges by (sphere, label)
    std::map<std::pair<int, Sym>, std::vector<EdgeRef>> flat;
    for (int v = 0; v < cg.num_vertices(); ++v)
      for (Sym s = 0; s < 2 * cg.rank; ++s) {
        int u = cg.edge(v, s);
        if (u < 0 || cg.sphere[u] != cg.sphere[v] || is_tree_edge(t, v, s, u)) continue;
        flat[{cg.sphere[v], s}].push_back({v, s});
      }

    for (const auto& [key, lower] : flat) {
      auto [n, s] = key;
      auto upper_it = flat.find({n + 1, s});
      if (upper_it == flat.end()) continue;
      for (const EdgeRef& e1 : lower)
        for (const EdgeRef& e2 : upper_it->second) {
          if (attempts >= budget) return false;
          ++attempts;
          CosetGraph after;
          try {
            after = surgery(cg, t, e1, e2);
          } catch (const std::invalid_argument&) {
            continue;
          }
          SchreierGenSet post = schreier_generators(after, spanning_tree(after));
          SurgeryInstance inst;
          inst.before = cg;
          inst.after = after;
          inst.e1 = e1;
          inst.e2 = e2;
          inst.b_before = before.b;
          inst.b_after = post.b;
          inst.v = cg.sphere_sizes;
          inst.b_differs = before.b != post.b;
          inst.origin = origin;
          inst.attempts = attempts;
          if (inst.b_differs) {
            admissible = inst;
            return true;
          }
          if (!admissible) admissible = inst;
        }
    }
    return false;
  };

  int idx = 0;
  for (const CoreGraph& core : enumerate_subgroups(rank, 4)) {
    if (try_graph(core, "enum:" + std::to_string(idx++))) return admissible;
    if (attempts >= budget) return admissible;
  }
  for (int round = 0; attempts < budget && round < 4096; ++round) {
    std::vector<GroupWord> words;
    int k = rng.range(2, 4);
    for (int i = 0; i < k; ++i) words.push_back(random_reduced_word(rng, rank, rng.range(2, 2 * radius)));
    if (try_graph(fold(words, rank), "fold:" + std::to_string(round))) return admissible;
  }
  return admissible;
}

std::string dot_core(const CoreGraph& g) {
  std::ostringstream os;
  os << "digraph core {\n  rankdir=LR;\n  0 [shape=doublecircle];\n";
  for (int v = 0; v < g.num_vertices(); ++v)
    for (Sym s = 0; s < 2 * g.rank; s += 2) {
      int u = g.edge(v, s);
      if (u >= 0) os << "  " << v << " -> " << u << " [label=\"" << generator_letter(s / 2) << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

std::string dot_coset(const CosetGraph& cg) {
  std::ostringstream os;
  os << "digraph coset {\n  rankdir=LR;\n  0 [shape=doublecircle];\n";
  for (int v = 0; v < cg.num_vertices(); ++v)
    os << "  " << v << " [xlabel=\"V" << cg.sphere[v] << "\"];\n";
  for (int v = 0; v < cg.num_vertices(); ++v)
    for (Sym s = 0; s < 2 * cg.rank; s += 2) {
      int u = cg.edge(v, s);
      if (u >= 0) os << "  " << v << " -> " << u << " [label=\"" << generator_letter(s / 2) << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace schreier
