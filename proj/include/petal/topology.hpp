#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace petal {

/// k parallel paths of m edges, joined at both ends.
struct PathBundle {
  int m = 2;
  int k = 1;
};

/// Two balanced k-ary trees of height m glued at their leaves.
struct SymmetricG {
  int m = 1;
  int k = 1;
};

/// Expansion tree with per-depth child counts, glued to a contraction tree
/// with per-depth parent counts. Both must reach the same number of leaves.
struct AsymmetricG {
  std::vector<int> expand;
  std::vector<int> contract;
};

struct LeafKind;

/// Segments chained end-to-end: the terminal node of one segment is the
/// entry node of the next.
struct Composite {
  std::vector<LeafKind> segments;
};

struct LeafKind {
  std::variant<PathBundle, SymmetricG, AsymmetricG, Composite> kind;

  LeafKind() : kind(PathBundle{}) {}
  LeafKind(PathBundle p) : kind(p) {}
  LeafKind(SymmetricG g) : kind(g) {}
  LeafKind(AsymmetricG g) : kind(std::move(g)) {}
  LeafKind(Composite c) : kind(std::move(c)) {}
};

enum class CoreKind { SingleHub, CompleteCore };

struct PetalSpec {
  CoreKind core = CoreKind::SingleHub;
  int n = 2;
  LeafKind leaf;
};

/// One layer of edges between depth d-1 and depth d inside a leaf.
/// Expand: every depth-(d-1) node has `factor` children at depth d.
/// Contract: every depth-d node has `factor` neighbours at depth d-1.
struct Layer {
  enum class Kind { Expand, Contract };
  Kind kind = Kind::Expand;
  int factor = 1;
};

/// Throws SpecError when the network description cannot be realized.
void validate(const PetalSpec& spec);

/// Flattened layer sequence of a leaf; depth d edges are element d-1.
std::vector<Layer> layer_profile(const LeafKind& leaf);

/// Node count at each depth 0..D of a single leaf (depth 0 is the attachment
/// node and always has width 1).
std::vector<long long> level_widths(const std::vector<Layer>& layers);

/// Number of stratum classes and edge classes implied by a spec.
std::size_t stratum_count(const PetalSpec& spec);
std::size_t edge_class_count(const PetalSpec& spec);

struct Graph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;  // u < v
  std::vector<int> stratum_of;
  std::vector<int> core_distance;
  std::vector<int> leaf_of;  // -1 for the hub; core node i belongs to leaf i

  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency() const;
  int stratum_total() const;
};

/// Realize a petal network. Node numbering: hub (0) or core nodes (0..n-1)
/// first, then leaf-major, level-major, sibling-minor.
Graph build_graph(const PetalSpec& spec);

/// Partition of the nodes by stratum id; element s lists the nodes of stratum s.
std::vector<std::vector<int>> strata(const Graph& graph);

/// Unordered stratum pair identifying the weight class of an edge.
std::pair<int, int> edge_class_key(const Graph& graph, std::size_t edge);

std::string describe(const PetalSpec& spec);
std::string describe(const LeafKind& leaf);

}  // namespace petal
