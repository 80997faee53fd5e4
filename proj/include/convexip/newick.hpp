// Unrooted leaf-labelled trees and a Newick reader.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "convexip/core.hpp"

namespace cvx {

/// Unrooted tree. Nodes are numbered in a canonical preorder: the walk starts
/// at the lexicographically smallest leaf and visits neighbours in order of the
/// smallest leaf name in their subtree, so node ids do not depend on how the
/// Newick text happened to order children.
class Phylogeny {
 public:
  /// `names[v]` is the leaf name of v, empty for internal nodes.
  static Phylogeny from_edges(const std::vector<std::string>& names,
                              const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    const std::size_t n = names.size();
    if (edges.size() + 1 != n) throw InputError("phylogeny: a tree on n nodes needs n-1 edges");
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n || u == v) throw InputError("phylogeny: bad edge");
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::set<std::string> seen;
    std::size_t leaves = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (adj[v].size() == 1) {
        if (names[v].empty()) throw InputError("phylogeny: unlabelled degree-one node");
        ++leaves;
      } else if (!names[v].empty()) {
        throw InputError("phylogeny: labelled node '" + names[v] + "' is not a leaf");
      }
      if (!names[v].empty() && !seen.insert(names[v]).second)
        throw InputError("phylogeny: duplicate leaf name '" + names[v] + "'");
    }
    if (leaves < 2) throw InputError("phylogeny: need at least two leaves");

    // Connectivity plus n-1 edges makes it a tree.
    std::vector<bool> reached(n, false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    std::size_t count = 0;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      ++count;
      for (auto u : adj[v])
        if (!reached[u]) reached[u] = true, stack.push_back(u);
    }
    if (count != n) throw InputError("phylogeny: graph is not connected");

    // Smallest leaf name in the subtree of u when entered from parent p.
    std::map<std::pair<std::size_t, std::size_t>, std::string> memo;
    auto min_leaf = [&](auto&& self, std::size_t u, std::size_t p) -> std::string {
      auto key = std::make_pair(u, p);
      if (auto it = memo.find(key); it != memo.end()) return it->second;
      std::string best = names[u];
      for (auto w : adj[u])
        if (w != p) {
          auto m = self(self, w, u);
          if (best.empty() || m < best) best = m;
        }
      memo[key] = best;
      return best;
    };

    std::size_t root = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!names[v].empty() && (root == n || names[v] < names[root])) root = v;

    std::vector<std::size_t> order;
    std::vector<std::size_t> new_index(n);
    auto visit = [&](auto&& self, std::size_t u, std::size_t p) -> void {
      new_index[u] = order.size();
      order.push_back(u);
      std::vector<std::pair<std::string, std::size_t>> kids;
      for (auto w : adj[u])
        if (w != p) kids.emplace_back(min_leaf(min_leaf, w, u), w);
      std::sort(kids.begin(), kids.end());
      for (const auto& [name, w] : kids) self(self, w, u);
    };
    visit(visit, root, n);

    Phylogeny t;
    t.names_.resize(n);
    t.adj_.resize(n);
    std::size_t internal = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto old = order[k];
      t.names_[k] = names[old];
      t.ids_.push_back(names[old].empty() ? "i" + std::to_string(internal++) : names[old]);
      for (auto w : adj[old]) t.adj_[k].push_back(new_index[w]);
      std::sort(t.adj_[k].begin(), t.adj_[k].end());
    }
    for (std::size_t v = 0; v < n; ++v)
      if (t.is_leaf(v)) t.leaves_.push_back(v);
    std::sort(t.leaves_.begin(), t.leaves_.end(),
              [&](std::size_t a, std::size_t b) { return t.names_[a] < t.names_[b]; });
    return t;
  }

  std::size_t size() const { return adj_.size(); }
  std::size_t leaf_count() const { return leaves_.size(); }
  bool is_leaf(std::size_t v) const { return adj_[v].size() == 1; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
  /// Leaf name, or "i<k>" for the k-th internal node in preorder.
  const std::string& id(std::size_t v) const { return ids_[v]; }
  const std::string& leaf_name(std::size_t v) const { return names_[v]; }
  /// Leaf node indices sorted by name.
  const std::vector<std::size_t>& leaves() const { return leaves_; }

  std::vector<std::string> leaf_names() const {
    std::vector<std::string> out;
    for (auto v : leaves_) out.push_back(names_[v]);
    return out;
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t v = 0; v < size(); ++v)
      for (auto u : adj_[v])
        if (v < u) out.emplace_back(v, u);
    return out;
  }

  /// Every internal node has degree three.
  bool is_binary() const {
    for (std::size_t v = 0; v < size(); ++v)
      if (!is_leaf(v) && degree(v) != 3) return false;
    return true;
  }

  /// Messages about ignored input (branch lengths, internal labels).
  std::vector<std::string> warnings;

 private:
  std::vector<std::string> names_;
  std::vector<std::string> ids_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> leaves_;
};

struct NewickOptions {
  bool strict_binary = true;
};

namespace detail {

class NewickReader {
 public:
  explicit NewickReader(std::string_view text) : s_(text) {}

  Phylogeny read(const NewickOptions& opt) {
    skip_ws();
    const std::size_t root = subtree(kNone);
    skip_ws();
    if (peek() == ':') branch_length();
    skip_ws();
    expect(';');
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("newick: trailing characters after ';'", pos_);

    // Suppress a degree-two root by joining its two neighbours.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> root_kids;
    for (const auto& [p, c] : edges_) {
      if (p == root)
        root_kids.push_back(c);
      else
        edges.emplace_back(p, c);
    }
    std::vector<std::string> names = names_;
    if (root_kids.size() == 2) {
      edges.emplace_back(root_kids[0], root_kids[1]);
      // Drop the root node and renumber.
      names.erase(names.begin() + static_cast<std::ptrdiff_t>(root));
      for (auto& [u, v] : edges) {
        if (u > root) --u;
        if (v > root) --v;
      }
    } else {
      for (auto c : root_kids) edges.emplace_back(root, c);
    }
    Phylogeny t = Phylogeny::from_edges(names, edges);
    t.warnings = warnings_;
    if (opt.strict_binary && !t.is_binary())
      throw InputError("newick: tree is not binary (an internal node has degree other than 3)");
    return t;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t subtree(std::size_t parent) {
    skip_ws();
    const std::size_t me = names_.size();
    names_.emplace_back();
    if (parent != kNone) edges_.emplace_back(parent, me);
    if (peek() == '(') {
      ++pos_;
      subtree(me);
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        subtree(me);
        skip_ws();
      }
      expect(')');
      skip_ws();
      if (is_label_char(peek())) {
        label();
        warnings_.push_back("internal node label ignored");
      }
    } else {
      if (!is_label_char(peek())) throw ParseError("newick: expected leaf name or '('", pos_);
      auto name = label();
      if (!seen_.insert(name).second) throw ParseError("newick: duplicate leaf name '" + name + "'", pos_);
      names_[me] = std::move(name);
    }
    skip_ws();
    if (peek() == ':') branch_length();
    return me;
  }

  void branch_length() {
    ++pos_;
    skip_ws();
    const std::string rest(s_.substr(pos_));
    char* end = nullptr;
    std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) throw ParseError("newick: expected branch length", pos_);
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    if (!warned_length_) {
      warnings_.push_back("branch lengths ignored: squared parsimony length is unweighted");
      warned_length_ = true;
    }
  }

  std::string label() {
    const std::size_t start = pos_;
    while (is_label_char(peek())) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  static bool is_label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) {
      const std::string got = pos_ < s_.size() ? std::string("'") + s_[pos_] + "'" : "end of input";
      throw ParseError(std::string("newick: expected '") + c + "', found " + got, pos_);
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::set<std::string> seen_;
  std::vector<std::string> warnings_;
  bool warned_length_ = false;
};

}  // namespace detail

/// Parses a rooted Newick string into an unrooted Phylogeny.
inline Phylogeny parse_newick(std::string_view text, const NewickOptions& opt = {}) {
  return detail::NewickReader(text).read(opt);
}

}  // namespace cvx
