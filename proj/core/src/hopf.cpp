#include "nck/hopf.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace nck {

namespace {

// Words u with u_i <= u_parent(i), generated from the highest label down.
void monotone_words(const Labelled& l, int r, const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> u(l.n + 1, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == 0) {
      emit(u);
      return;
    }
    int cap = l.parent[i] ? u[l.parent[i]] : r;
    for (int v = 1; v <= cap; ++v) {
      u[i] = v;
      rec(i - 1);
    }
  };
  rec(l.n);
}

using ProductKey = std::pair<Forest, Forest>;
std::mutex table_mu;
std::map<int, std::map<ProductKey, std::vector<ProductTerm>>> tables;

const std::map<ProductKey, std::vector<ProductTerm>>& table_for(int n) {
  auto it = tables.find(n);
  if (it != tables.end()) return it->second;
  std::map<ProductKey, std::map<Forest, ProductTerm>> acc;
  for (const auto& f : enumerate_forests(n)) {
    Labelled l = label(f);
    monotone_words(l, 2, [&](const std::vector<int>& u) {
      std::vector<bool> low(n + 1), high(n + 1);
      for (int i = 1; i <= n; ++i) (u[i] == 1 ? low : high)[i] = true;
      ProductKey key{restrict(l, low), restrict(l, high)};
      auto& t = acc[key][f];
      t.forest = f;
      ++t.count;
      if (n > 0 && u[n] == 1) ++t.prec;
    });
  }
  std::map<ProductKey, std::vector<ProductTerm>> out;
  for (auto& [k, m] : acc)
    for (auto& [f, t] : m) out[k].push_back(t);
  return tables.emplace(n, std::move(out)).first->second;
}

}  // namespace

LinComb<ForestTuple, long> y_coproduct(const Forest& f, int r) {
  if (r < 1) throw std::invalid_argument("y_coproduct: r must be positive");
  LinComb<ForestTuple, long> out;
  Labelled l = label(f);
  monotone_words(l, r, [&](const std::vector<int>& u) {
    ForestTuple parts;
    for (int k = 1; k <= r; ++k) {
      std::vector<bool> keep(l.n + 1);
      for (int i = 1; i <= l.n; ++i) keep[i] = u[i] == k;
      parts.push_back(restrict(l, keep));
    }
    out.add(parts, 1);
  });
  return out;
}

const std::vector<ProductTerm>& product_terms(const Forest& a, const Forest& b) {
  static const std::vector<ProductTerm> none;
  std::lock_guard<std::mutex> lock(table_mu);
  const auto& t = table_for(a.size() + b.size());
  auto it = t.find({a, b});
  return it == t.end() ? none : it->second;
}

const std::vector<Forest>& cached_downset(const Forest& f) {
  static std::mutex mu;
  static std::map<int, std::map<Forest, std::vector<Forest>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(f.size());
  if (it == cache.end()) {
    std::map<Forest, std::vector<Forest>> down;
    for (const auto& g : enumerate_forests(f.size()))
      for (const auto& h : upset(g)) down[h].push_back(g);
    it = cache.emplace(f.size(), std::move(down)).first;
  }
  return it->second.at(f);
}

namespace {

struct Slot {
  int node;
  int position;
};

void collect_slots(const Labelled& l, int v, std::vector<Slot>& out) {
  const auto& kids = l.children[v];
  for (size_t p = 0; p < kids.size(); ++p) {
    out.push_back({v, static_cast<int>(p)});
    collect_slots(l, kids[p], out);
  }
  out.push_back({v, static_cast<int>(kids.size())});
}

}  // namespace

XElem<long> brace_basis(const Forest& f, const Forest& tree) {
  if (!tree.is_tree()) throw std::invalid_argument("brace: target must be a tree");
  auto grafts = f.trees();
  Labelled l = label(tree);
  std::vector<Slot> slots;
  collect_slots(l, l.roots[0], slots);
  XElem<long> out;
  std::vector<int> choice(grafts.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t k, int from) {
    if (k == grafts.size()) {
      // inserted[node][position] lists the grafted trees in order
      std::map<std::pair<int, int>, std::vector<size_t>> inserted;
      for (size_t i = 0; i < grafts.size(); ++i) {
        const Slot& s = slots[choice[i]];
        inserted[{s.node, s.position}].push_back(i);
      }
      std::vector<int> code;
      std::function<void(int)> emit = [&](int v) {
        const auto& kids = l.children[v];
        int arity = static_cast<int>(kids.size());
        for (auto& [key, list] : inserted)
          if (key.first == v) arity += static_cast<int>(list.size());
        code.push_back(arity);
        for (size_t p = 0; p <= kids.size(); ++p) {
          auto it = inserted.find({v, static_cast<int>(p)});
          if (it != inserted.end())
            for (size_t i : it->second) code.insert(code.end(), grafts[i].code().begin(), grafts[i].code().end());
          if (p < kids.size()) emit(kids[p]);
        }
      };
      emit(l.roots[0]);
      out.add(Forest::from_code(std::move(code)), 1);
      return;
    }
    for (int s = from; s < static_cast<int>(slots.size()); ++s) {
      choice[k] = s;
      rec(k + 1, s);
    }
  };
  rec(0, 0);
  return out;
}

XElem<long> prelie_basis(const Forest& s, const Forest& t) {
  if (!s.is_tree()) throw std::invalid_argument("prelie: left argument must be a tree");
  return brace_basis(s, t);
}

XElem<long> x_tau(const Forest& representative) {
  auto cls = non_plane_class(representative);
  XElem<long> out;
  for (const auto& t : enumerate_trees(representative.size()))
    if (non_plane_class(t).canonical == cls.canonical) out.add(t, cls.aut_order);
  return out;
}

}  // namespace nck
