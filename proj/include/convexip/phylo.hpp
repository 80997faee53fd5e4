// Minimum squared-parsimony reconstruction of ancestral convex bodies.
//
// The optimal body at node v is the Minkowski combination sum_x lambda_vx chi(x)
// of the leaf bodies. The coefficients depend only on the tree. For each leaf x
// the tree is directed away from x and
//
//   alpha_v = 0                                    (v a leaf)
//   alpha_v = 1 / (deg(v) - sum of children alpha) (v internal)
//   lambda_vx = product of alpha_u over internal u on the path v -> x
//
// which is O(N) per leaf and O(N^2) overall.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "convexip/body.hpp"
#include "convexip/inner_product.hpp"
#include "convexip/newick.hpp"

namespace cvx {

struct LambdaOptions {
  /// Require every internal node to have degree three. When off, the same
  /// recursion runs with the node's actual degree.
  bool strict_binary = true;
};

struct LambdaMatrix {
  std::vector<std::string> node_ids;    // row labels, indexed by node
  std::vector<std::string> leaf_names;  // column labels, sorted
  std::vector<std::size_t> leaf_nodes;  // node index of each column
  std::vector<std::vector<double>> rows;
  /// alpha[j][v]: alpha of node v with the tree directed away from leaf column j.
  std::vector<std::vector<double>> alpha;

  double at(std::size_t node, std::size_t leaf_column) const { return rows[node][leaf_column]; }
};

namespace detail {

inline LambdaMatrix lambda_skeleton(const Phylogeny& t) {
  LambdaMatrix m;
  for (std::size_t v = 0; v < t.size(); ++v) m.node_ids.push_back(t.id(v));
  m.leaf_nodes = t.leaves();
  m.leaf_names = t.leaf_names();
  m.rows.assign(t.size(), std::vector<double>(t.leaf_count(), 0.0));
  return m;
}

}  // namespace detail

inline LambdaMatrix lambda_coefficients(const Phylogeny& t, const LambdaOptions& opt = {}) {
  if (opt.strict_binary && !t.is_binary())
    throw InputError("lambda_coefficients: tree is not binary (strict mode)");
  LambdaMatrix m = detail::lambda_skeleton(t);
  const std::size_t n = t.size();
  std::vector<std::size_t> order, parent(n);
  std::vector<double> alpha(n);
  for (std::size_t j = 0; j < m.leaf_nodes.size(); ++j) {
    const std::size_t x = m.leaf_nodes[j];
    // Preorder away from x.
    order.clear();
    order.push_back(x);
    parent[x] = x;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto v = order[k];
      for (auto u : t.neighbors(v))
        if (u != parent[v]) parent[u] = v, order.push_back(u);
    }
    for (std::size_t k = order.size(); k-- > 1;) {
      const auto v = order[k];
      if (t.is_leaf(v)) {
        alpha[v] = 0.0;
        continue;
      }
      double children = 0.0;
      for (auto u : t.neighbors(v))
        if (u != parent[v]) children += alpha[u];
      alpha[v] = 1.0 / (static_cast<double>(t.degree(v)) - children);
    }
    alpha[x] = 0.0;
    m.rows[x][j] = 1.0;
    for (std::size_t k = 1; k < order.size(); ++k) {
      const auto v = order[k];
      m.rows[v][j] = alpha[v] * (parent[v] == x ? 1.0 : m.rows[parent[v]][j]);
    }
    m.alpha.push_back(alpha);
  }
  return m;
}

/// Independent route: solves deg(v) g_v = sum of neighbours g_u at every
/// internal node with indicator boundary values at the leaves, by dense LU.
inline LambdaMatrix laplacian_oracle(const Phylogeny& t) {
  LambdaMatrix m = detail::lambda_skeleton(t);
  std::vector<std::size_t> internal;
  std::vector<std::ptrdiff_t> slot(t.size(), -1);
  for (std::size_t v = 0; v < t.size(); ++v)
    if (!t.is_leaf(v)) slot[v] = static_cast<std::ptrdiff_t>(internal.size()), internal.push_back(v);
  for (std::size_t j = 0; j < m.leaf_nodes.size(); ++j) m.rows[m.leaf_nodes[j]][j] = 1.0;
  if (internal.empty()) return m;

  const auto k = static_cast<Eigen::Index>(internal.size());
  const auto nl = static_cast<Eigen::Index>(m.leaf_nodes.size());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(k, k);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(k, nl);
  std::map<std::size_t, Eigen::Index> column;
  for (std::size_t j = 0; j < m.leaf_nodes.size(); ++j) column[m.leaf_nodes[j]] = static_cast<Eigen::Index>(j);
  for (Eigen::Index r = 0; r < k; ++r) {
    const auto v = internal[static_cast<std::size_t>(r)];
    lap(r, r) = static_cast<double>(t.degree(v));
    for (auto u : t.neighbors(v)) {
      if (t.is_leaf(u))
        rhs(r, column.at(u)) += 1.0;
      else
        lap(r, slot[u]) -= 1.0;
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(lap);
  if (!lu.isInvertible()) throw InvariantError("laplacian_oracle: singular system on a tree");
  const Eigen::MatrixXd sol = lu.solve(rhs);
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index j = 0; j < nl; ++j) m.rows[internal[static_cast<std::size_t>(r)]][static_cast<std::size_t>(j)] = sol(r, j);
  return m;
}

using LeafAssignment = std::map<std::string, Body>;

/// A body for every node of the tree, indexed like the tree's nodes.
struct Extension {
  std::vector<std::string> node_ids;
  std::vector<Body> bodies;

  const Body& at(const std::string& id) const {
    for (std::size_t i = 0; i < node_ids.size(); ++i)
      if (node_ids[i] == id) return bodies[i];
    throw InputError("extension: unknown node '" + id + "'");
  }
};

/// Throws InputError naming every leaf that is missing or unknown.
inline void check_assignment(const Phylogeny& t, const LeafAssignment& chi) {
  std::vector<std::string> missing, unknown;
  const auto names = t.leaf_names();
  for (const auto& n : names)
    if (!chi.count(n)) missing.push_back(n);
  for (const auto& [n, body] : chi)
    if (!std::binary_search(names.begin(), names.end(), n)) unknown.push_back(n);
  if (!missing.empty() || !unknown.empty()) {
    std::string msg = "leaf mismatch between tree and assignment;";
    auto join = [](const std::vector<std::string>& v) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
      return s;
    };
    if (!missing.empty()) msg += " missing bodies: " + join(missing) + ";";
    if (!unknown.empty()) msg += " not in tree: " + join(unknown) + ";";
    throw InputError(msg);
  }
  const std::size_t d = chi.begin()->second.dim();
  for (const auto& [n, body] : chi) require_dim(body.dim(), d, ("leaf body " + n).c_str());
}

struct ReconstructOptions {
  /// Flatten 2D polytope-only ancestors to explicit canonical polygons.
  bool canonicalize = false;
};

inline Extension reconstruct(const Phylogeny& t, const LeafAssignment& chi, const LambdaMatrix& lambda,
                             const ReconstructOptions& opt = {}) {
  check_assignment(t, chi);
  Extension ext;
  bool polytopal = chi.begin()->second.dim() == 2;
  for (const auto& [n, body] : chi) polytopal = polytopal && is_polytopal(body);
  for (std::size_t v = 0; v < t.size(); ++v) {
    ext.node_ids.push_back(t.id(v));
    if (t.is_leaf(v)) {
      ext.bodies.push_back(chi.at(t.leaf_name(v)));
      continue;
    }
    std::vector<Body> terms;
    for (std::size_t j = 0; j < lambda.leaf_names.size(); ++j) {
      const double w = lambda.at(v, j);
      if (w < 0.0) throw InvariantError("reconstruct: negative lambda coefficient");
      if (w > 0.0) terms.push_back(scale(chi.at(lambda.leaf_names[j]), w));
    }
    Body b = terms.size() == 1 ? terms.front() : Body::sum(std::move(terms));
    if (opt.canonicalize && polytopal) b = canonicalize_2d(b);
    ext.bodies.push_back(std::move(b));
  }
  return ext;
}

inline Extension reconstruct(const Phylogeny& t, const LeafAssignment& chi, const LambdaOptions& lopt = {},
                             const ReconstructOptions& opt = {}) {
  return reconstruct(t, chi, lambda_coefficients(t, lopt), opt);
}

/// Sum over edges of the squared set-inner-product distance.
inline double tree_length(const InnerProduct& ip, const Phylogeny& t, const Extension& ext) {
  if (ext.bodies.size() != t.size()) throw InputError("tree_length: extension does not cover the tree");
  std::vector<Profile> profiles;
  profiles.reserve(t.size());
  for (const auto& b : ext.bodies) profiles.push_back(ip.profile(b));
  double total = 0.0;
  for (auto [u, v] : t.edges()) total += std::max(0.0, ip.distance_sq(profiles[u], profiles[v]));
  return total;
}

inline double tree_length(const SetIP& spec, const Phylogeny& t, const Extension& ext) {
  return tree_length(InnerProduct(spec), t, ext);
}

}  // namespace cvx
