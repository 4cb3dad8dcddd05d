// Reference bound certificates for named graph families: each builder pairs
// a concrete graph with an explicit decomposition and the closed-form bound
// that decomposition certifies for connected graphs avoiding the family
// member as a minor. evaluate_bound on the certificate must reproduce the
// stored bound exactly; regression and verification harnesses rely on that.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "copbound/decomp.hpp"
#include "copbound/graph.hpp"

namespace copbound {

struct BoundCertificate {
  std::string name;
  Graph graph;
  Decomposition decomposition;
  int bound = 0;
};

namespace detail {

inline PathOrCycle family_path(std::vector<int> vs) {
  return PathOrCycle{std::move(vs), PathOrCycle::Kind::path};
}

inline PathOrCycle family_cycle(std::vector<int> vs) {
  return PathOrCycle{std::move(vs), PathOrCycle::Kind::rooted_cycle};
}

}  // namespace detail

// Wheel with t rim vertices: hub deleted, one rim cycle rooted at vertex 0.
// Load t gives ceil(t/3) cops plus the extra cop unless t is 1, 2, or 4.
inline BoundCertificate wheel_certificate(int t) {
  if (t < 3) throw std::invalid_argument("wheel_certificate needs t >= 3");
  BoundCertificate cert;
  cert.name = "W" + std::to_string(t);
  cert.graph = wheel(t);
  Decomposition& d = cert.decomposition;
  d.h = t;
  d.w = set_of({0});
  std::vector<int> rim(static_cast<size_t>(t) + 1);
  for (int i = 0; i < t; ++i) rim[static_cast<size_t>(i)] = i;
  rim.back() = 0;
  d.paths = {detail::family_cycle(rim)};
  d.assignment = {{0, 0}};
  cert.bound = (t == 4 ? 0 : 1) + (t + 2) / 3;
  return cert;
}

// Complete bipartite graph with a part of three: one vertex of that part
// deleted, the remaining two joined by t internally disjoint length-2 paths,
// each end assigned to its own path. Every load is 1 or 2, for t cops.
inline BoundCertificate three_row_certificate(int t) {
  if (t < 2) throw std::invalid_argument("three_row_certificate needs t >= 2");
  BoundCertificate cert;
  cert.name = "K3," + std::to_string(t);
  cert.graph = complete_bipartite(3, t);
  Decomposition& d = cert.decomposition;
  d.h = 0;
  d.w = set_of({1, 2});
  for (int b = 0; b < t; ++b) d.paths.push_back(detail::family_path({1, 3 + b, 2}));
  d.assignment = {{1, 0}, {2, 1}};
  cert.bound = t;
  return cert;
}

// Complete graph: one vertex deleted, every remaining edge its own path, a
// maximum matching among them, and an assignment that keeps every load at 1
// or 2. Totals floor((t-2)^2/2) cops.
inline BoundCertificate complete_certificate(int t) {
  if (t < 4) throw std::invalid_argument("complete_certificate needs t >= 4");
  BoundCertificate cert;
  cert.name = "K" + std::to_string(t);
  cert.graph = complete_graph(t);
  Decomposition& d = cert.decomposition;
  d.h = t - 1;
  VertexSet w = 0;
  for (int v = 0; v + 1 < t; ++v) w |= bit(v);
  d.w = w;
  std::map<std::pair<int, int>, int> index_of;
  for (int u = 0; u + 1 < t; ++u) {
    for (int v = u + 1; v + 1 < t; ++v) {
      index_of[{u, v}] = static_cast<int>(d.paths.size());
      d.paths.push_back(detail::family_path({u, v}));
    }
  }
  std::vector<int> partner(static_cast<size_t>(t) - 1, -1);
  for (int u = 0; u + 1 < t - 1; u += 2) {
    d.matching.push_back(index_of[{u, u + 1}]);
    partner[static_cast<size_t>(u)] = u + 1;
    partner[static_cast<size_t>(u + 1)] = u;
  }
  for (int v = 0; v + 1 < t; ++v) {
    for (int x = t - 2; x >= 0; --x) {
      if (x == v || x == partner[static_cast<size_t>(v)]) continue;
      d.assignment[v] = index_of[{std::min(v, x), std::max(v, x)}];
      break;
    }
  }
  cert.bound = (t - 2) * (t - 2) / 2;
  return cert;
}

// Two universal vertices over (t-1)/2 disjoint edges and one extra vertex (t
// odd). Contains the two-row complete bipartite graph K_{2,t} as a subgraph,
// so its certificate transfers to K_{2,t}-minor-free graphs. Decomposing at
// one universal vertex leaves (t-1)/2 rooted triangles plus a pendant edge,
// every load 2, for (t+1)/2 cops.
inline Graph triangle_bundle(int t) {
  if (t < 3 || t % 2 == 0)
    throw std::invalid_argument("triangle_bundle needs odd t >= 3");
  const int k = (t - 1) / 2;
  std::vector<Graph> parts(static_cast<size_t>(k), complete_graph(2));
  parts.push_back(complete_graph(1));
  return add_universal(add_universal(disjoint_union(parts)));
}

inline BoundCertificate triangle_bundle_certificate(int t) {
  BoundCertificate cert;
  cert.name = "U(U(" + std::to_string((t - 1) / 2) + "K2+K1))";
  cert.graph = triangle_bundle(t);
  const int k = (t - 1) / 2;
  const int b = 2 * k;
  const int a = 2 * k + 1;
  Decomposition& d = cert.decomposition;
  d.h = 2 * k + 2;
  d.w = set_of({b, a});
  for (int i = 0; i < k; ++i)
    d.paths.push_back(detail::family_cycle({a, 2 * i, 2 * i + 1, a}));
  d.paths.push_back(detail::family_path({b, a}));
  d.assignment = {{a, k}, {b, k}};
  cert.bound = (t + 1) / 2;
  return cert;
}

// The four largest members of the triangle-wye closure family (indices 1..4
// of petersen_family). Deleting the apex leaves two triples joined by all
// six cross edges plus three edge-or-subdivided-edge diagonals; matching the
// shifted cross edges and doubly assigning the remaining three keeps every
// load in {0, 1, 2}, for six cops.
inline BoundCertificate petersen_certificate(int index) {
  BoundCertificate cert;
  cert.name = "P_fam:" + std::to_string(index);
  cert.graph = petersen_family(index);
  Decomposition& d = cert.decomposition;
  d.h = 0;
  d.w = set_of({1, 2, 3, 4, 5, 6});
  using detail::family_path;
  switch (index) {
    case 1:
      d.paths = {family_path({1, 5}), family_path({2, 6}), family_path({3, 4}),
                 family_path({1, 6}), family_path({2, 4}), family_path({3, 5}),
                 family_path({1, 7, 4}), family_path({2, 8, 5}),
                 family_path({3, 9, 6})};
      break;
    case 2:
      d.paths = {family_path({1, 5}), family_path({2, 6}), family_path({3, 4}),
                 family_path({1, 6}), family_path({2, 4}), family_path({3, 5}),
                 family_path({1, 7, 4}), family_path({2, 5}),
                 family_path({3, 8, 6})};
      break;
    case 3:
      d.paths = {family_path({1, 5}), family_path({2, 6}), family_path({3, 4}),
                 family_path({1, 6}), family_path({2, 4}), family_path({3, 5}),
                 family_path({1, 4}), family_path({2, 7, 5}),
                 family_path({3, 6})};
      break;
    case 4:
      d.paths = {family_path({1, 5}), family_path({2, 6}), family_path({3, 4}),
                 family_path({1, 6}), family_path({2, 4}), family_path({3, 5}),
                 family_path({1, 4}), family_path({2, 5}), family_path({3, 6})};
      break;
    default:
      throw std::invalid_argument("petersen_certificate covers indices 1..4");
  }
  d.matching = {0, 1, 2};
  d.assignment = {{1, 3}, {6, 3}, {2, 4}, {4, 4}, {3, 5}, {5, 5}};
  cert.bound = 6;
  return cert;
}

// Universal vertex over t hub-to-hub threads of length 4. Both hubs are
// assigned to the first thread (load 5, which forces the extra cop), every
// other thread has load 3, totalling t+2 cops.
inline BoundCertificate universal_theta_certificate(int t) {
  if (t < 2) throw std::invalid_argument("universal_theta_certificate needs t >= 2");
  BoundCertificate cert;
  cert.name = "U(Ht:" + std::to_string(t) + ")";
  Graph base = theta_graph(t, 4);
  cert.graph = add_universal(base);
  Decomposition& d = cert.decomposition;
  d.h = base.vertex_count();
  d.w = set_of({0, 1});
  for (int i = 0; i < t; ++i)
    d.paths.push_back(detail::family_path({0, 2 + 3 * i, 3 + 3 * i, 4 + 3 * i, 1}));
  d.assignment = {{0, 0}, {1, 0}};
  cert.bound = t + 2;
  return cert;
}

}  // namespace copbound
