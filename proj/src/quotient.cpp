#include "petal/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "petal/errors.hpp"
#include "petal/jacobi.hpp"

namespace petal {

namespace {

constexpr double kClassConstancyTol = 1e-12;

bool is_path_bundle(const PetalSpec& spec) {
  return std::holds_alternative<PathBundle>(spec.leaf.kind);
}

// Canonical class keys in class order: core class first for a complete core,
// then one class per layer.
std::vector<std::pair<int, int>> class_keys(const PetalSpec& spec) {
  std::vector<std::pair<int, int>> keys;
  if (spec.core == CoreKind::CompleteCore) keys.emplace_back(0, 0);
  const auto d = layer_profile(spec.leaf).size();
  for (std::size_t i = 1; i <= d; ++i) keys.emplace_back(static_cast<int>(i) - 1, static_cast<int>(i));
  return keys;
}

Vector class_values(const PetalSpec& spec, const WeightAssignment& weights) {
  const auto keys = class_keys(spec);
  Vector out(keys.size(), NAN);
  if (!weights.per_edge.empty()) {
    const Graph g = build_graph(spec);
    if (weights.per_edge.size() != g.edges.size())
      throw SpecError("per-edge weights do not match the graph's edge count");
    std::map<std::pair<int, int>, double> first;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const auto key = edge_class_key(g, e);
      auto [it, inserted] = first.emplace(key, weights.per_edge[e]);
      if (!inserted && std::abs(it->second - weights.per_edge[e]) > kClassConstancyTol)
        throw SpecError("weights are not constant on edge class " + class_label(key.first, key.second));
    }
    for (std::size_t i = 0; i < keys.size(); ++i) out[i] = first.at(keys[i]);
  }
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const EdgeClass* c = weights.find(keys[i].first, keys[i].second);
    if (c != nullptr) {
      if (!std::isnan(out[i]) && std::abs(out[i] - c->weight) > kClassConstancyTol)
        throw SpecError("per-edge weights disagree with class " + c->label);
      out[i] = c->weight;
    }
    if (std::isnan(out[i]))
      throw SpecError("no weight for edge class " + class_label(keys[i].first, keys[i].second));
  }
  return out;
}

Matrix leaf_complement_from_classes(const PetalSpec& spec, std::span<const double> cw) {
  const Graph g = build_graph(spec);
  const auto keys = class_keys(spec);
  std::vector<double> ew(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto key = edge_class_key(g, e);
    const auto it = std::find(keys.begin(), keys.end(), key);
    ew[e] = cw[static_cast<std::size_t>(it - keys.begin())];
  }
  const WeightMatrix w(g.node_count, g.edges, ew);

  // Nodes of leaf 0 away from the hub/core, grouped by level.
  std::vector<int> nodes;
  std::map<int, std::vector<int>> by_level;
  for (int v = 0; v < g.node_count; ++v) {
    if (g.leaf_of[v] == 0 && g.stratum_of[v] > 0) {
      by_level[g.stratum_of[v]].push_back(static_cast<int>(nodes.size()));
      nodes.push_back(v);
    }
  }
  std::map<int, int> local;
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<int>(i);

  Matrix block(nodes.size(), nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    block(i, i) = w.diagonal()[nodes[i]];
    w.for_each_offdiagonal(nodes[i], [&](int j, double val) {
      auto it = local.find(j);
      if (it != local.end()) block(i, it->second) += val;
    });
  }

  // Helmert basis orthogonal to the constant vector on every level.
  std::vector<Vector> basis;
  for (const auto& [level, members] : by_level) {
    for (std::size_t j = 1; j < members.size(); ++j) {
      Vector h(nodes.size(), 0.0);
      const double scale = 1.0 / std::sqrt(static_cast<double>(j * (j + 1)));
      for (std::size_t t = 0; t < j; ++t) h[members[t]] = scale;
      h[members[j]] = -static_cast<double>(j) * scale;
      basis.push_back(std::move(h));
    }
  }
  Matrix q(nodes.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < nodes.size(); ++r) q(r, c) = basis[c][r];
  Matrix out = q.transpose() * block * q;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = i + 1; j < out.cols(); ++j) out(i, j) = out(j, i) = 0.5 * (out(i, j) + out(j, i));
  return out;
}

}  // namespace

Matrix QuotientPair::dual_operator() const {
  if (spec.core == CoreKind::CompleteCore) return w2;
  return w1 - outer(perron, perron);
}

QuotientPair quotient_matrices(const PetalSpec& spec, const WeightAssignment& weights) {
  validate(spec);
  const Vector cw = class_values(spec, weights);
  return quotient_matrices(spec, cw);
}

QuotientPair quotient_matrices(const PetalSpec& spec, std::span<const double> cw) {
  validate(spec);
  const auto layers = layer_profile(spec.leaf);
  const auto widths = level_widths(layers);
  const auto keys = class_keys(spec);
  if (cw.size() != keys.size())
    throw SpecError("expected " + std::to_string(keys.size()) + " class weights, got " +
                    std::to_string(cw.size()));

  const bool hub = spec.core == CoreKind::SingleHub;
  const std::size_t depth = layers.size();
  const std::size_t strata_n = depth + 1;
  const double n = spec.n;
  const std::size_t first_layer_class = hub ? 0 : 1;

  QuotientPair q;
  q.spec = spec;
  q.class_weights.assign(cw.begin(), cw.end());
  for (const auto& [a, b] : keys) q.labels.push_back(class_label(a, b));

  q.stratum_sizes.resize(strata_n);
  q.stratum_sizes[0] = hub ? 1.0 : n;
  for (std::size_t d = 1; d <= depth; ++d) q.stratum_sizes[d] = n * static_cast<double>(widths[d]);
  double total = 0.0;
  for (double s : q.stratum_sizes) total += s;
  q.perron.resize(strata_n);
  for (std::size_t i = 0; i < strata_n; ++i) q.perron[i] = std::sqrt(q.stratum_sizes[i] / total);

  // alpha_d couples strata d-1 and d with the square roots of the per-node
  // edge counts into layer d on each side.
  std::vector<Vector> alpha;
  for (std::size_t d = 1; d <= depth; ++d) {
    const Layer& l = layers[d - 1];
    double up = l.kind == Layer::Kind::Expand ? l.factor : 1.0;
    const double down = l.kind == Layer::Kind::Expand ? 1.0 : l.factor;
    if (d == 1 && hub) up *= n;
    Vector a(strata_n, 0.0);
    a[d - 1] = std::sqrt(up);
    a[d] = -std::sqrt(down);
    alpha.push_back(std::move(a));
  }

  q.w1 = Matrix::identity(strata_n);
  for (std::size_t d = 1; d <= depth; ++d)
    q.w1 = q.w1 - outer(scaled(alpha[d - 1], cw[first_layer_class + d - 1]), alpha[d - 1]);

  if (hub) {
    const std::size_t drop[] = {0};
    q.w2 = q.w1.without(drop);
    for (std::size_t d = 1; d <= depth; ++d) {
      q.primal_basis.emplace_back(alpha[d - 1].begin() + 1, alpha[d - 1].end());
      q.dual_basis.push_back(alpha[d - 1]);
    }
  } else {
    Vector a0(strata_n, 0.0);
    a0[0] = -std::sqrt(n);
    q.w2 = q.w1 - outer(scaled(a0, cw[0]), a0);
    q.primal_basis.push_back(a0);
    for (const auto& a : alpha) q.primal_basis.push_back(a);
    q.dual_basis = q.primal_basis;
  }

  if (is_path_bundle(spec)) {
    const auto pb = std::get<PathBundle>(spec.leaf.kind);
    if (pb.k >= 2) {
      const std::size_t m = static_cast<std::size_t>(pb.m);
      auto layer_w = [&](std::size_t d) { return cw[first_layer_class + d - 1]; };
      Matrix w3(m - 1, m - 1);
      for (std::size_t i = 1; i <= m - 1; ++i) {
        w3(i - 1, i - 1) = 1.0 - layer_w(i) - layer_w(i + 1);
        if (i + 1 <= m - 1) w3(i - 1, i) = w3(i, i - 1) = layer_w(i + 1);
      }
      q.w3 = std::move(w3);
      q.w3_source = W3Source::PathInterior;
    }
  } else {
    Matrix block = leaf_complement_from_classes(spec, cw);
    if (block.rows() > 0) {
      q.w3 = std::move(block);
      q.w3_source = W3Source::LeafComplement;
    }
  }
  return q;
}

Matrix leaf_complement_block(const PetalSpec& spec, const WeightAssignment& weights) {
  validate(spec);
  const Vector cw = class_values(spec, weights);
  return leaf_complement_from_classes(spec, cw);
}

Matrix stratum_quotient(const Matrix& w, const std::vector<std::vector<int>>& parts) {
  Matrix b(parts.size(), parts.size());
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t c = 0; c < parts.size(); ++c) {
      double s = 0.0;
      for (int i : parts[a])
        for (int j : parts[c]) s += w(i, j);
      b(a, c) = s / std::sqrt(static_cast<double>(parts[a].size() * parts[c].size()));
    }
  return b;
}

double cauchy_violation(const Vector& outer, const Vector& inner) {
  if (inner.size() > outer.size()) throw SpecError("compression larger than the matrix");
  const std::size_t d = outer.size() - inner.size();
  double worst = 0.0;
  for (std::size_t j = 0; j < inner.size(); ++j) {
    worst = std::max(worst, outer[j] - inner[j]);
    worst = std::max(worst, inner[j] - outer[j + d]);
  }
  return worst;
}

double downdate_violation(const Vector& lower, const Vector& upper) {
  if (lower.size() != upper.size()) throw SpecError("rank-one update changes the size");
  double worst = 0.0;
  for (std::size_t j = 0; j < upper.size(); ++j) {
    worst = std::max(worst, lower[j] - upper[j]);
    if (j + 1 < lower.size()) worst = std::max(worst, upper[j] - lower[j + 1]);
  }
  return worst;
}

InterlacingReport check_interlacing(const QuotientPair& pair, double tol) {
  InterlacingReport r;
  const Vector e1 = eigenvalues(pair.w1);
  const Vector e2 = eigenvalues(pair.w2);
  if (pair.spec.core == CoreKind::SingleHub) {
    r.w2_violation = cauchy_violation(e1, e2);
  } else {
    // w2 = w1 - n w0 e0 e0^T
    r.w2_violation = pair.class_weights[0] >= 0.0 ? downdate_violation(e2, e1) : downdate_violation(e1, e2);
  }
  r.w2_in_w1 = r.w2_violation <= tol;
  if (pair.w3 && pair.w3_source == W3Source::PathInterior) {
    r.w3_violation = cauchy_violation(e2, eigenvalues(*pair.w3));
    r.w3_in_w2 = r.w3_violation <= tol;
  }
  return r;
}

}  // namespace petal
