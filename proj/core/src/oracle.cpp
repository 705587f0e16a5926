#include "pixcat/oracle.hpp"

#include <map>

namespace pixcat {

namespace {

struct UF {
  std::vector<std::size_t> parent;
  explicit UF(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

FiniteThinCategory LocalizedCategory::surviving(const FiniteThinCategory& base) const {
  auto keep = surviving_classes();
  std::vector<std::string> names;
  for (auto c : keep) {
    std::string n = "[";
    for (std::size_t i = 0; i < classes[c].size(); ++i) {
      if (i) n += "~";
      n += base.objects()[classes[c][i]];
    }
    names.push_back(n + "]");
  }
  std::vector<std::vector<int>> h(keep.size(), std::vector<int>(keep.size(), 0));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) h[i][j] = hom[keep[i]][keep[j]];
  return FiniteThinCategory(std::move(names), std::move(h));
}

std::vector<std::size_t> LocalizedCategory::surviving_classes() const {
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (!dead[c]) keep.push_back(c);
  return keep;
}

LocalizedCategory localization_oracle(
    const FiniteThinCategory& cat,
    const std::vector<std::pair<std::size_t, std::size_t>>& sigma) {
  const std::size_t n = cat.size();
  for (auto [u, v] : sigma) {
    if (u >= n || v >= n) throw input_error("sigma pair out of range");
    if (!cat.hom(u, v)) throw input_error("sigma contains the pair (" + cat.objects()[u] + "," +
                                          cat.objects()[v] + ") outside hom");
  }

  LocalizedCategory out;
  UF uf(n);
  for (auto [u, v] : sigma) uf.unite(u, v);

  std::map<std::size_t, std::size_t> class_id;
  out.class_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = uf.find(i);
    auto it = class_id.find(r);
    if (it == class_id.end()) {
      it = class_id.emplace(r, class_id.size()).first;
      out.classes.emplace_back();
    }
    out.class_of[i] = it->second;
    out.classes[it->second].push_back(i);
  }
  const std::size_t m = out.classes.size();

  // a class dies when it contains a zero object or a killed in-class pair
  out.dead.assign(m, false);
  for (std::size_t c = 0; c < m; ++c)
    for (auto u : out.classes[c]) {
      for (auto v : out.classes[c])
        if (cat.reach(u, v) && !cat.hom(u, v)) out.dead[c] = true;
      if (out.dead[c]) break;
    }

  // candidate representatives per class pair: reachable object pairs;
  // the bit survives iff some candidate exists and none is killed
  out.hom.assign(m, std::vector<int>(m, 0));
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t d = 0; d < m; ++d) {
      if (out.dead[c] || out.dead[d]) continue;
      bool any = false, killed = false;
      for (auto u : out.classes[c])
        for (auto v : out.classes[d]) {
          if (!cat.reach(u, v)) continue;
          any = true;
          if (!cat.hom(u, v)) killed = true;
        }
      out.hom[c][d] = any && !killed ? 1 : 0;
    }

  // zero-closure: a morphism factoring through a zeroed class bit is zero
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t d = 0; d < m; ++d) {
        if (!out.hom[c][d]) continue;
        bool zeroed = false;
        for (auto u : out.classes[c]) {
          for (std::size_t v = 0; v < n && !zeroed; ++v) {
            if (out.dead[out.class_of[v]]) continue;
            if (!cat.reach(u, v)) continue;
            for (auto w : out.classes[d])
              if (cat.reach(v, w) &&
                  (!out.hom[c][out.class_of[v]] || !out.hom[out.class_of[v]][d])) {
                zeroed = true;
                break;
              }
          }
          if (zeroed) break;
        }
        // a factorization through a dead class also kills the bit
        if (!zeroed)
          for (auto u : out.classes[c]) {
            for (std::size_t v = 0; v < n && !zeroed; ++v)
              if (out.dead[out.class_of[v]] && cat.reach(u, v))
                for (auto w : out.classes[d])
                  if (cat.reach(v, w)) {
                    zeroed = true;
                    break;
                  }
            if (zeroed) break;
          }
        if (zeroed) {
          out.hom[c][d] = 0;
          changed = true;
        }
      }
  }

  return out;
}

}  // namespace pixcat
