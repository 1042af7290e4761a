#include "nck/tamari.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace nck {

namespace {

std::set<Forest> product_of_sets(const std::vector<std::set<Forest>>& parts) {
  std::set<Forest> acc{Forest()};
  for (const auto& p : parts) {
    std::set<Forest> next;
    for (const auto& a : acc)
      for (const auto& b : p) next.insert(a * b);
    acc = std::move(next);
  }
  return acc;
}

// Split a forest into its first k trees and the rest.
std::pair<Forest, Forest> split_trees(const std::vector<Forest>& trees, size_t k) {
  Forest a, b;
  for (size_t i = 0; i < trees.size(); ++i) (i < k ? a : b) = (i < k ? a : b) * trees[i];
  return {a, b};
}

std::mutex memo_mu;
std::map<Forest, std::set<Forest>> lattice_memo;
std::map<Forest, std::set<Forest>> process_memo;

std::set<Forest> lattice_upset_locked(const Forest& f);

std::set<Forest> lattice_tree(const Forest& t) {
  std::set<Forest> out;
  for (const auto& g : lattice_upset_locked(t.children())) {
    auto trees = g.trees();
    for (size_t k = 0; k <= trees.size(); ++k) {
      auto [a, b] = split_trees(trees, k);
      out.insert(a * Forest::graft(b));
    }
  }
  return out;
}

std::set<Forest> lattice_upset_locked(const Forest& f) {
  if (f.empty()) return {Forest()};
  auto it = lattice_memo.find(f);
  if (it != lattice_memo.end()) return it->second;
  std::set<Forest> out;
  if (f.is_tree()) {
    out = lattice_tree(f);
  } else {
    std::vector<std::set<Forest>> parts;
    for (const auto& t : f.trees()) parts.push_back(lattice_upset_locked(t));
    out = product_of_sets(parts);
  }
  lattice_memo.emplace(f, out);
  return out;
}

std::set<Forest> process_upset_locked(const Forest& f) {
  if (f.empty()) return {Forest()};
  auto it = process_memo.find(f);
  if (it != process_memo.end()) return it->second;
  std::set<Forest> out;
  if (f.is_tree()) {
    for (const auto& g : lattice_upset_locked(f.children())) {
      auto trees = g.trees();
      for (size_t i = 0; i <= trees.size(); ++i) {
        auto [a, b] = split_trees(trees, i);
        out.insert(Forest::graft(a) * b);
      }
    }
  } else {
    std::vector<std::set<Forest>> parts;
    for (const auto& t : f.trees()) parts.push_back(process_upset_locked(t));
    out = product_of_sets(parts);
  }
  process_memo.emplace(f, out);
  return out;
}

struct Node {
  std::vector<Node> kids;
};

Node build(const std::vector<int>& code, size_t& pos) {
  Node n;
  int arity = code[pos++];
  for (int k = 0; k < arity; ++k) n.kids.push_back(build(code, pos));
  return n;
}

void serialize(const Node& n, std::vector<int>& out) {
  out.push_back(static_cast<int>(n.kids.size()));
  for (const auto& c : n.kids) serialize(c, out);
}

// Apply the cover move at every internal non-root node below `parent`.
void collect_moves(Node& root, Node& parent, std::vector<Forest>& out) {
  for (size_t i = 0; i < parent.kids.size(); ++i) {
    Node& x = parent.kids[i];
    if (!x.kids.empty()) {
      Node saved = x;
      Node cut = x.kids.front();
      x.kids.erase(x.kids.begin());
      parent.kids.insert(parent.kids.begin() + static_cast<long>(i), cut);
      std::vector<int> code;
      serialize(root, code);
      out.push_back(Forest::from_code(std::move(code)));
      parent.kids.erase(parent.kids.begin() + static_cast<long>(i));
      parent.kids[i] = std::move(saved);
      collect_moves(root, parent.kids[i], out);
    }
  }
}

}  // namespace

std::set<Forest> lattice_upset(const Forest& f) {
  std::lock_guard<std::mutex> lock(memo_mu);
  return lattice_upset_locked(f);
}

std::set<Forest> upset(const Forest& f) {
  std::lock_guard<std::mutex> lock(memo_mu);
  return process_upset_locked(f);
}

bool leq(const Forest& f, const Forest& g) {
  if (f.size() != g.size()) throw std::invalid_argument("leq: forests of different sizes");
  return upset(f).count(g) > 0;
}

std::set<Forest> downset(const Forest& f) {
  std::set<Forest> out;
  for (const auto& g : enumerate_forests(f.size()))
    if (upset(g).count(f)) out.insert(g);
  return out;
}

std::vector<Forest> tree_covers(const Forest& tree) {
  if (!tree.is_tree()) throw std::invalid_argument("tree_covers expects a tree");
  size_t pos = 0;
  Node root = build(tree.code(), pos);
  std::vector<Forest> out;
  collect_moves(root, root, out);
  return out;
}

std::set<Forest> tree_closure(const Forest& tree) {
  std::set<Forest> seen{tree};
  std::vector<Forest> stack{tree};
  while (!stack.empty()) {
    Forest t = stack.back();
    stack.pop_back();
    for (auto& u : tree_covers(t))
      if (seen.insert(u).second) stack.push_back(u);
  }
  return seen;
}

std::vector<Forest> tamari_linear_order(int n) {
  const auto& all = enumerate_forests(n);
  std::map<Forest, int> indeg;
  std::map<Forest, std::vector<Forest>> succ;
  for (const auto& f : all) indeg[f];
  for (const auto& f : all)
    for (const auto& g : upset(f))
      if (g != f) {
        succ[f].push_back(g);
        ++indeg[g];
      }
  std::set<Forest> ready;
  for (auto& [f, d] : indeg)
    if (d == 0) ready.insert(f);
  std::vector<Forest> order;
  while (!ready.empty()) {
    Forest f = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(f);
    for (const auto& g : succ[f])
      if (--indeg[g] == 0) ready.insert(g);
  }
  if (order.size() != all.size()) throw std::logic_error("upset relation has a cycle");
  return order;
}

}  // namespace nck
