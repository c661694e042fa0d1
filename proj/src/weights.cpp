#include "petal/weights.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "petal/errors.hpp"

namespace petal {

namespace {

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

EdgeClass exact_class(int from, int to, Rational w) {
  return EdgeClass{from, to, class_label(from, to), to_double(w), w};
}

}  // namespace

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::Optimal:
      return "optimal";
    case Scheme::MetropolisHastings:
      return "metropolis-hastings";
    case Scheme::Custom:
      return "custom";
  }
  return "custom";
}

std::string class_label(int from_stratum, int to_stratum) {
  if (from_stratum == to_stratum) return "w" + std::to_string(from_stratum);
  return "w" + std::to_string(std::max(from_stratum, to_stratum));
}

const EdgeClass* WeightAssignment::find(int from_stratum, int to_stratum) const {
  const int a = std::min(from_stratum, to_stratum);
  const int b = std::max(from_stratum, to_stratum);
  for (const auto& c : classes)
    if (c.from_stratum == a && c.to_stratum == b) return &c;
  return nullptr;
}

const EdgeClass* WeightAssignment::find(const std::string& label) const {
  for (const auto& c : classes)
    if (c.label == label) return &c;
  return nullptr;
}

Vector WeightAssignment::class_weights() const {
  Vector w;
  w.reserve(classes.size());
  for (const auto& c : classes) w.push_back(c.weight);
  return w;
}

WeightAssignment WeightAssignment::with_class_weights(std::span<const double> weights) const {
  if (weights.size() != classes.size())
    throw SpecError("expected " + std::to_string(classes.size()) + " class weights, got " +
                    std::to_string(weights.size()));
  WeightAssignment out;
  out.scheme = Scheme::Custom;
  out.classes = classes;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    out.classes[i].weight = weights[i];
    out.classes[i].exact.reset();
  }
  return out;
}

WeightAssignment optimal_weights(const PetalSpec& spec) {
  validate(spec);
  const auto layers = layer_profile(spec.leaf);
  WeightAssignment out;
  out.scheme = Scheme::Optimal;
  if (spec.core == CoreKind::CompleteCore) out.classes.push_back(exact_class(0, 0, Rational(1, spec.n)));
  for (std::size_t d = 1; d <= layers.size(); ++d) {
    const std::int64_t k = layers[d - 1].factor;
    Rational w = (d == 1 && spec.core == CoreKind::SingleHub) ? Rational(2, 2 + spec.n * k)
                                                              : Rational(1, 1 + k);
    out.classes.push_back(exact_class(static_cast<int>(d) - 1, static_cast<int>(d), w));
  }
  return out;
}

WeightAssignment metropolis_hastings_weights(const Graph& graph) {
  const auto deg = graph.degrees();
  WeightAssignment out;
  out.scheme = Scheme::MetropolisHastings;
  out.per_edge.reserve(graph.edges.size());

  // Class weights are reported only for classes on which the rule is constant.
  std::map<std::pair<int, int>, std::optional<Rational>> seen;
  std::map<std::pair<int, int>, bool> constant;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto [u, v] = graph.edges[e];
    const Rational w(1, 1 + std::max(deg[u], deg[v]));
    out.per_edge.push_back(to_double(w));
    const auto key = edge_class_key(graph, e);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen[key] = w;
      constant[key] = true;
    } else if (*it->second != w) {
      constant[key] = false;
    }
  }
  for (const auto& [key, w] : seen)
    if (constant[key]) out.classes.push_back(exact_class(key.first, key.second, *w));
  return out;
}

std::vector<double> edge_weights(const Graph& graph, const WeightAssignment& assignment) {
  if (!assignment.per_edge.empty()) {
    if (assignment.per_edge.size() != graph.edges.size())
      throw SpecError("per-edge weights do not match the graph's edge count");
    return assignment.per_edge;
  }
  std::vector<double> w(graph.edges.size());
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto [a, b] = edge_class_key(graph, e);
    const EdgeClass* c = assignment.find(a, b);
    if (c == nullptr)
      throw SpecError("edge " + std::to_string(graph.edges[e].first) + "-" +
                      std::to_string(graph.edges[e].second) + " has no weight (class " +
                      class_label(a, b) + ")");
    w[e] = c->weight;
  }
  return w;
}

WeightMatrix::WeightMatrix(int dimension, std::span<const std::pair<int, int>> edges,
                           std::span<const double> edge_weights)
    : dimension_(dimension), diagonal_(dimension, 1.0), row_start_(dimension + 1, 0) {
  if (edges.size() != edge_weights.size()) throw SpecError("edge/weight count mismatch");
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= dimension || v >= dimension || u == v)
      throw SpecError("invalid edge in weight matrix");
    ++row_start_[u + 1];
    ++row_start_[v + 1];
  }
  for (int i = 0; i < dimension; ++i) row_start_[i + 1] += row_start_[i];
  col_.resize(row_start_.back());
  val_.resize(row_start_.back());
  std::vector<std::size_t> fill(row_start_.begin(), row_start_.end() - 1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    col_[fill[u]] = v;
    val_[fill[u]++] = edge_weights[e];
    col_[fill[v]] = u;
    val_[fill[v]++] = edge_weights[e];
  }
  for (int i = 0; i < dimension; ++i) {
    double off = 0.0;
    for (std::size_t p = row_start_[i]; p < row_start_[i + 1]; ++p) off += val_[p];
    diagonal_[i] = 1.0 - off;
  }
}

void WeightMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (int i = 0; i < dimension_; ++i) {
    double s = diagonal_[i] * x[i];
    for (std::size_t p = row_start_[i]; p < row_start_[i + 1]; ++p) s += val_[p] * x[col_[p]];
    y[i] = s;
  }
}

Matrix WeightMatrix::to_dense() const {
  Matrix m(dimension_, dimension_);
  for (int i = 0; i < dimension_; ++i) {
    m(i, i) = diagonal_[i];
    for (std::size_t p = row_start_[i]; p < row_start_[i + 1]; ++p) m(i, col_[p]) += val_[p];
  }
  return m;
}

double WeightMatrix::row_sum_error() const {
  double worst = 0.0;
  for (int i = 0; i < dimension_; ++i) {
    double s = diagonal_[i];
    for (std::size_t p = row_start_[i]; p < row_start_[i + 1]; ++p) s += val_[p];
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return worst;
}

WeightMatrix assemble_matrix(const Graph& graph, const WeightAssignment& assignment) {
  const auto w = edge_weights(graph, assignment);
  return WeightMatrix(graph.node_count, graph.edges, w);
}

}  // namespace petal
