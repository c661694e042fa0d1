#include "petal/topology.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "petal/errors.hpp"

namespace petal {

namespace {

// Networks beyond this are outside what the dense routines are meant for.
constexpr long long kMaxNodes = 2'000'000;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void validate_leaf(const LeafKind& leaf) {
  std::visit(
      Overloaded{
          [](const PathBundle& p) {
            if (p.m < 2) throw SpecError("PathBundle requires m >= 2");
            if (p.k < 1) throw SpecError("PathBundle requires k >= 1");
          },
          [](const SymmetricG& g) {
            if (g.m < 1) throw SpecError("SymmetricG requires m >= 1");
            if (g.k < 1) throw SpecError("SymmetricG requires k >= 1");
          },
          [](const AsymmetricG& g) {
            if (g.expand.empty() || g.contract.empty())
              throw SpecError("AsymmetricG requires non-empty expand and contract lists");
            long long pe = 1;
            long long pc = 1;
            for (int k : g.expand) {
              if (k < 1) throw SpecError("AsymmetricG child counts must be >= 1");
              pe *= k;
              if (pe > kMaxNodes) throw SpecError("AsymmetricG leaf level too wide");
            }
            for (int k : g.contract) {
              if (k < 1) throw SpecError("AsymmetricG child counts must be >= 1");
              pc *= k;
              if (pc > kMaxNodes) throw SpecError("AsymmetricG leaf level too wide");
            }
            if (pe != pc)
              throw SpecError("AsymmetricG expand and contract products differ (" +
                              std::to_string(pe) + " vs " + std::to_string(pc) + ")");
          },
          [](const Composite& c) {
            if (c.segments.empty()) throw SpecError("Composite leaf needs at least one segment");
            for (const auto& s : c.segments) validate_leaf(s);
          },
      },
      leaf.kind);
}

void append_layers(const LeafKind& leaf, std::vector<Layer>& out) {
  using K = Layer::Kind;
  std::visit(Overloaded{
                 [&](const PathBundle& p) {
                   out.push_back({K::Expand, p.k});
                   for (int i = 0; i < p.m - 2; ++i) out.push_back({K::Expand, 1});
                   out.push_back({K::Contract, p.k});
                 },
                 [&](const SymmetricG& g) {
                   for (int i = 0; i < g.m; ++i) out.push_back({K::Expand, g.k});
                   for (int i = 0; i < g.m; ++i) out.push_back({K::Contract, g.k});
                 },
                 [&](const AsymmetricG& g) {
                   for (int k : g.expand) out.push_back({K::Expand, k});
                   for (int k : g.contract) out.push_back({K::Contract, k});
                 },
                 [&](const Composite& c) {
                   for (const auto& s : c.segments) append_layers(s, out);
                 },
             },
             leaf.kind);
}

}  // namespace

void validate(const PetalSpec& spec) {
  if (spec.n < 2) throw SpecError("petal networks need n >= 2 leaves");
  validate_leaf(spec.leaf);
  const auto widths = level_widths(layer_profile(spec.leaf));
  long long per_leaf = std::accumulate(widths.begin() + 1, widths.end(), 0LL);
  if (spec.core == CoreKind::CompleteCore) per_leaf += 1;
  if (per_leaf > kMaxNodes / spec.n) throw SpecError("network too large");
}

std::vector<Layer> layer_profile(const LeafKind& leaf) {
  std::vector<Layer> out;
  append_layers(leaf, out);
  return out;
}

std::vector<long long> level_widths(const std::vector<Layer>& layers) {
  std::vector<long long> w{1};
  for (const auto& l : layers) {
    long long next = l.kind == Layer::Kind::Expand ? w.back() * l.factor : w.back() / l.factor;
    if (l.kind == Layer::Kind::Contract && w.back() % l.factor != 0)
      throw SpecError("contraction factor does not divide the level width");
    w.push_back(next);
  }
  return w;
}

std::size_t stratum_count(const PetalSpec& spec) {
  return layer_profile(spec.leaf).size() + 1;
}

std::size_t edge_class_count(const PetalSpec& spec) {
  const auto d = layer_profile(spec.leaf).size();
  return spec.core == CoreKind::CompleteCore ? d + 1 : d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(node_count, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(node_count);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

int Graph::stratum_total() const {
  return stratum_of.empty() ? 0 : *std::max_element(stratum_of.begin(), stratum_of.end()) + 1;
}

Graph build_graph(const PetalSpec& spec) {
  validate(spec);
  const auto layers = layer_profile(spec.leaf);
  const int n = spec.n;

  Graph g;
  auto add_node = [&](int stratum, int leaf) {
    g.stratum_of.push_back(stratum);
    g.leaf_of.push_back(leaf);
    return g.node_count++;
  };
  auto add_edge = [&](int a, int b) { g.edges.emplace_back(std::min(a, b), std::max(a, b)); };

  std::vector<int> anchors;
  if (spec.core == CoreKind::SingleHub) {
    anchors.assign(n, add_node(0, -1));
  } else {
    for (int i = 0; i < n; ++i) anchors.push_back(add_node(0, i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) add_edge(i, j);
  }

  for (int leaf = 0; leaf < n; ++leaf) {
    std::vector<int> prev{anchors[leaf]};
    int depth = 0;
    for (const auto& layer : layers) {
      ++depth;
      std::vector<int> cur;
      if (layer.kind == Layer::Kind::Expand) {
        cur.reserve(prev.size() * layer.factor);
        for (int p : prev) {
          for (int c = 0; c < layer.factor; ++c) {
            int id = add_node(depth, leaf);
            add_edge(p, id);
            cur.push_back(id);
          }
        }
      } else {
        const std::size_t groups = prev.size() / layer.factor;
        for (std::size_t grp = 0; grp < groups; ++grp) {
          int id = add_node(depth, leaf);
          for (int c = 0; c < layer.factor; ++c) add_edge(prev[grp * layer.factor + c], id);
          cur.push_back(id);
        }
      }
      prev = std::move(cur);
    }
  }

  // Hop distance from the hub or core, by breadth-first search.
  g.core_distance.assign(g.node_count, -1);
  const auto adj = g.adjacency();
  std::queue<int> frontier;
  for (int a : anchors) {
    if (g.core_distance[a] < 0) {
      g.core_distance[a] = 0;
      frontier.push(a);
    }
  }
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v : adj[u]) {
      if (g.core_distance[v] < 0) {
        g.core_distance[v] = g.core_distance[u] + 1;
        frontier.push(v);
      }
    }
  }
  return g;
}

std::vector<std::vector<int>> strata(const Graph& graph) {
  std::vector<std::vector<int>> out(graph.stratum_total());
  for (int v = 0; v < graph.node_count; ++v) out[graph.stratum_of[v]].push_back(v);
  return out;
}

std::pair<int, int> edge_class_key(const Graph& graph, std::size_t edge) {
  const auto [u, v] = graph.edges.at(edge);
  const int a = graph.stratum_of[u];
  const int b = graph.stratum_of[v];
  return {std::min(a, b), std::max(a, b)};
}

std::string describe(const LeafKind& leaf) {
  std::ostringstream os;
  auto list = [&](const std::vector<int>& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
  };
  std::visit(Overloaded{
                 [&](const PathBundle& p) { os << "PathBundle(m=" << p.m << ",k=" << p.k << ")"; },
                 [&](const SymmetricG& g) { os << "SymmetricG(m=" << g.m << ",k=" << g.k << ")"; },
                 [&](const AsymmetricG& g) {
                   os << "AsymmetricG(expand=";
                   list(g.expand);
                   os << ",contract=";
                   list(g.contract);
                   os << ")";
                 },
                 [&](const Composite& c) {
                   os << "Composite(";
                   for (std::size_t i = 0; i < c.segments.size(); ++i)
                     os << (i ? "+" : "") << describe(c.segments[i]);
                   os << ")";
                 },
             },
             leaf.kind);
  return os.str();
}

std::string describe(const PetalSpec& spec) {
  std::ostringstream os;
  os << (spec.core == CoreKind::SingleHub ? "hub" : "complete") << " n=" << spec.n << " "
     << describe(spec.leaf);
  return os.str();
}

}  // namespace petal
