#include "pixcat/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace pixcat {

FiniteLattice::FiniteLattice(std::vector<std::string> elements, std::vector<std::vector<int>> leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {
  const std::size_t n = elements_.size();
  if (leq_.size() != n) throw input_error("lattice order matrix size mismatch");
  for (const auto& row : leq_)
    if (row.size() != n) throw input_error("lattice order matrix is not square");
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw input_error("lattice order is not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (leq_[a][b] && leq_[b][a] && a != b) throw input_error("lattice order is not antisymmetric");
      for (std::size_t c = 0; c < n && leq_[a][b]; ++c)
        if (leq_[b][c] && !leq_[a][c]) throw input_error("lattice order is not transitive");
    }
  }

  auto bound = [&](std::size_t a, std::size_t b, bool lower) -> std::size_t {
    std::vector<std::size_t> cands;
    for (std::size_t c = 0; c < n; ++c) {
      bool ok = lower ? leq_[c][a] && leq_[c][b] : leq_[a][c] && leq_[b][c];
      if (ok) cands.push_back(c);
    }
    for (auto c : cands) {
      bool extreme = true;
      for (auto d : cands)
        if (lower ? !leq_[d][c] : !leq_[c][d]) extreme = false;
      if (extreme) return c;
    }
    throw input_error("order has no " + std::string(lower ? "meet" : "join") + " for " +
                      elements_[a] + ", " + elements_[b]);
  };

  meet_.assign(n, std::vector<std::size_t>(n));
  join_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      meet_[a][b] = bound(a, b, true);
      join_[a][b] = bound(a, b, false);
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (meet_[a][join_[b][c]] != join_[meet_[a][b]][meet_[a][c]])
          throw input_error("lattice is not distributive at " + elements_[a] + ", " + elements_[b] +
                            ", " + elements_[c]);
}

std::size_t FiniteLattice::index_of(const std::string& label) const {
  auto it = std::find(elements_.begin(), elements_.end(), label);
  if (it == elements_.end()) throw input_error("unknown lattice element '" + label + "'");
  return (std::size_t)(it - elements_.begin());
}

FiniteThinCategory FiniteLattice::to_thin_category() const {
  return FiniteThinCategory(elements_, leq_);
}

bool FiniteLattice::isomorphic_to(const FiniteLattice& other) const {
  if (size() != other.size()) return false;
  // small lattices only: backtracking over order-preserving bijections
  std::vector<std::size_t> img(size(), SIZE_MAX);
  std::vector<bool> used(size(), false);
  std::function<bool(std::size_t)> rec = [&](std::size_t a) -> bool {
    if (a == size()) return true;
    for (std::size_t b = 0; b < size(); ++b) {
      if (used[b]) continue;
      bool ok = true;
      for (std::size_t c = 0; c < a && ok; ++c) {
        ok = leq(a, c) == other.leq(b, img[c]) && leq(c, a) == other.leq(img[c], b);
      }
      if (!ok) continue;
      img[a] = b;
      used[b] = true;
      if (rec(a + 1)) return true;
      used[b] = false;
    }
    return false;
  };
  return rec(0);
}

FiniteLattice FiniteTopology::open_lattice() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < opens.size(); ++i) names.push_back(open_name(i));
  std::vector<std::vector<int>> leq(opens.size(), std::vector<int>(opens.size(), 0));
  for (std::size_t a = 0; a < opens.size(); ++a)
    for (std::size_t b = 0; b < opens.size(); ++b) {
      bool sub = true;
      for (std::size_t p = 0; p < points.size(); ++p) sub = sub && (!opens[a][p] || opens[b][p]);
      leq[a][b] = sub ? 1 : 0;
    }
  return FiniteLattice(std::move(names), std::move(leq));
}

std::string FiniteTopology::open_name(std::size_t i) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t p = 0; p < points.size(); ++p)
    if (opens[i][p]) {
      if (!first) out += ",";
      out += points[p];
      first = false;
    }
  return out + "}";
}

FiniteTopology make_topology(std::vector<std::string> points, std::vector<std::vector<bool>> opens) {
  const std::size_t n = points.size();
  std::set<std::vector<bool>> seen;
  for (auto& o : opens) {
    if (o.size() != n) throw input_error("open set size mismatch");
    seen.insert(o);
  }
  seen.insert(std::vector<bool>(n, false));
  seen.insert(std::vector<bool>(n, true));
  for (const auto& a : seen)
    for (const auto& b : seen) {
      std::vector<bool> uni(n), inter(n);
      for (std::size_t p = 0; p < n; ++p) {
        uni[p] = a[p] || b[p];
        inter[p] = a[p] && b[p];
      }
      if (!seen.count(uni) || !seen.count(inter))
        throw input_error("opens are not closed under union/intersection");
    }
  FiniteTopology t;
  t.points = std::move(points);
  t.opens.assign(seen.begin(), seen.end());
  return t;
}

std::vector<FiniteTopology> enumerate_topologies(const std::vector<std::string>& points) {
  const std::size_t n = points.size();
  const std::size_t subsets = (std::size_t)1 << n;
  std::vector<std::vector<bool>> all;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<bool> s(n);
    for (std::size_t p = 0; p < n; ++p) s[p] = (mask >> p) & 1;
    all.push_back(s);
  }
  // choose any family of proper nonempty subsets; keep the closed ones
  std::vector<std::size_t> proper;
  for (std::size_t mask = 1; mask + 1 < subsets; ++mask) proper.push_back(mask);

  std::vector<FiniteTopology> out;
  for (std::size_t choice = 0; choice < ((std::size_t)1 << proper.size()); ++choice) {
    std::set<std::size_t> fam{0, subsets - 1};
    for (std::size_t i = 0; i < proper.size(); ++i)
      if ((choice >> i) & 1) fam.insert(proper[i]);
    bool closed = true;
    for (auto a : fam) {
      for (auto b : fam) {
        if (!fam.count(a | b) || !fam.count(a & b)) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (!closed) continue;
    FiniteTopology t;
    t.points = points;
    for (auto mask : fam) t.opens.push_back(all[mask]);
    out.push_back(std::move(t));
  }
  return out;
}

FinitePartition lattice_screen(const FiniteLattice& L, const std::vector<std::size_t>& C,
                               std::size_t Y) {
  for (auto u : C)
    if (u >= L.size()) throw input_error("sublattice index out of range");
  std::set<std::size_t> cset(C.begin(), C.end());
  for (auto u : C)
    for (auto v : C)
      if (!cset.count(L.meet(u, v)) || !cset.count(L.join(u, v)))
        throw input_error("C is not a sublattice of L");

  std::map<std::size_t, std::vector<std::string>> fibers;
  for (auto u : C) fibers[L.meet(u, Y)].push_back(L.elements()[u]);
  std::vector<std::string> ground;
  std::vector<std::vector<std::string>> blocks;
  for (auto u : C) ground.push_back(L.elements()[u]);
  for (auto& [z, blk] : fibers) blocks.push_back(std::move(blk));
  return FinitePartition(std::move(ground), std::move(blocks));
}

LatticePixelation pixelate_lattice(const FiniteLattice& L, const std::vector<std::size_t>& C,
                                   std::size_t Y) {
  LatticePixelation out;
  FinitePartition part = lattice_screen(L, C, Y);

  // the thin category of C alone
  std::vector<std::string> cnames;
  std::vector<std::vector<int>> chom(C.size(), std::vector<int>(C.size(), 0));
  for (std::size_t i = 0; i < C.size(); ++i) {
    cnames.push_back(L.elements()[C[i]]);
    for (std::size_t j = 0; j < C.size(); ++j) chom[i][j] = L.leq(C[i], C[j]) ? 1 : 0;
  }
  FiniteThinCategory cat(cnames, chom);

  out.axioms = check_screen_axioms_finite(cat, part);
  if (!out.axioms.all_pass()) {
    out.isomorphic = false;
    out.witness = "lattice screen fails a screen axiom";
    return out;
  }

  std::vector<std::pair<std::size_t, std::size_t>> sigma;
  for (std::size_t i = 0; i < C.size(); ++i)
    for (std::size_t j = 0; j < C.size(); ++j)
      if (i != j && chom[i][j] && part.block_of(cnames[i]) == part.block_of(cnames[j]))
        sigma.push_back({i, j});
  LocalizedCategory loc = localization_oracle(cat, sigma);

  // canonical map: the class of U goes to U meet Y
  std::vector<std::size_t> class_to_meet(loc.classes.size());
  for (std::size_t c = 0; c < loc.classes.size(); ++c) {
    std::set<std::size_t> meets;
    for (auto i : loc.classes[c]) meets.insert(L.meet(C[i], Y));
    if (meets.size() != 1) {
      out.isomorphic = false;
      out.witness = "localized class mixes fibers";
      return out;
    }
    class_to_meet[c] = *meets.begin();
    if (loc.dead[c]) {
      out.isomorphic = false;
      out.witness = "lattice localization produced a dead class";
      return out;
    }
  }

  // C_Y as a lattice
  std::vector<std::size_t> cy;
  for (auto u : C)
    if (std::find(cy.begin(), cy.end(), L.meet(u, Y)) == cy.end()) cy.push_back(L.meet(u, Y));
  std::sort(cy.begin(), cy.end());
  if (cy.size() != loc.classes.size()) {
    out.isomorphic = false;
    out.witness = "class count differs from |C_Y|";
    return out;
  }

  // order isomorphism: hom bits must mirror the order of C_Y
  for (std::size_t c = 0; c < loc.classes.size(); ++c)
    for (std::size_t d = 0; d < loc.classes.size(); ++d) {
      bool lower = L.leq(class_to_meet[c], class_to_meet[d]);
      if ((loc.hom[c][d] != 0) != lower) {
        out.isomorphic = false;
        out.witness = "localized hom disagrees with the order of C_Y at (" +
                      L.elements()[class_to_meet[c]] + "," + L.elements()[class_to_meet[d]] + ")";
        return out;
      }
    }

  std::vector<std::string> names;
  std::vector<std::vector<int>> leq(cy.size(), std::vector<int>(cy.size(), 0));
  for (std::size_t i = 0; i < cy.size(); ++i) {
    names.push_back(L.elements()[cy[i]]);
    for (std::size_t j = 0; j < cy.size(); ++j) leq[i][j] = L.leq(cy[i], cy[j]) ? 1 : 0;
  }
  out.result = FiniteLattice(std::move(names), std::move(leq));
  for (std::size_t c = 0; c < loc.classes.size(); ++c)
    out.canonical_labels.push_back(L.elements()[class_to_meet[c]]);
  return out;
}

namespace {

std::vector<unsigned long long> prime_divisors(unsigned long long n) {
  std::vector<unsigned long long> out;
  for (unsigned long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<unsigned long long> divisors(unsigned long long n) {
  std::vector<unsigned long long> out;
  for (unsigned long long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FiniteTopology spec_zn(unsigned long long n) {
  if (n < 2) throw input_error("spec requires n >= 2");
  auto primes = prime_divisors(n);
  std::vector<std::string> points;
  for (auto p : primes) points.push_back("(" + std::to_string(p) + ")");

  // D(d) = { p | n : p does not divide d }, over all ideals (d), d | n
  std::set<std::vector<bool>> opens;
  for (auto d : divisors(n)) {
    std::vector<bool> open(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) open[i] = d % primes[i] != 0;
    opens.insert(open);
  }
  FiniteTopology t;
  t.points = std::move(points);
  t.opens.assign(opens.begin(), opens.end());
  return t;
}

SubspaceCheck subspace_pixelation_check(const FiniteTopology& X, const std::vector<bool>& Y) {
  SubspaceCheck res;
  if (Y.size() != X.points.size()) throw input_error("subset size mismatch");

  // direct route: the subspace topology on Y
  std::set<std::vector<bool>> sub_opens;
  for (const auto& o : X.opens) {
    std::vector<bool> s(o.size());
    for (std::size_t p = 0; p < o.size(); ++p) s[p] = o[p] && Y[p];
    sub_opens.insert(s);
  }

  // pixelation route: powerset of points as L, opens of X as C, screen at Y
  const std::size_t npts = X.points.size();
  std::vector<std::vector<bool>> all_subsets;
  for (std::size_t mask = 0; mask < ((std::size_t)1 << npts); ++mask) {
    std::vector<bool> s(npts);
    for (std::size_t p = 0; p < npts; ++p) s[p] = (mask >> p) & 1;
    all_subsets.push_back(s);
  }
  std::vector<std::string> lnames;
  for (const auto& s : all_subsets) {
    std::string nm = "{";
    bool first = true;
    for (std::size_t p = 0; p < npts; ++p)
      if (s[p]) {
        nm += (first ? "" : ",") + X.points[p];
        first = false;
      }
    lnames.push_back(nm + "}");
  }
  std::vector<std::vector<int>> leq(all_subsets.size(), std::vector<int>(all_subsets.size(), 0));
  for (std::size_t a = 0; a < all_subsets.size(); ++a)
    for (std::size_t b = 0; b < all_subsets.size(); ++b) {
      bool sub = true;
      for (std::size_t p = 0; p < npts; ++p) sub = sub && (!all_subsets[a][p] || all_subsets[b][p]);
      leq[a][b] = sub ? 1 : 0;
    }
  FiniteLattice L(std::move(lnames), std::move(leq));

  auto subset_index = [&](const std::vector<bool>& s) {
    std::size_t mask = 0;
    for (std::size_t p = 0; p < npts; ++p)
      if (s[p]) mask |= (std::size_t)1 << p;
    return mask;
  };
  std::vector<std::size_t> C;
  for (const auto& o : X.opens) C.push_back(subset_index(o));
  std::sort(C.begin(), C.end());

  LatticePixelation pix = pixelate_lattice(L, C, subset_index(Y));
  if (!pix.axioms.all_pass() || !pix.isomorphic) {
    res.ok = false;
    res.witness = pix.witness;
    return res;
  }

  // canonical comparison: C_Y must be exactly the subspace opens
  std::set<std::vector<bool>> pix_opens;
  for (const auto& label : pix.result.elements()) {
    std::size_t idx = L.index_of(label);
    pix_opens.insert(all_subsets[idx]);
  }
  if (pix_opens != sub_opens) {
    res.ok = false;
    res.witness = "pixelated opens differ from the subspace opens";
  }
  return res;
}

SubspaceCheck spec_zn_localization_check(unsigned long long n, unsigned long long p) {
  if (n % p != 0) throw input_error("p must divide n");
  FiniteTopology spec = spec_zn(n);

  // localized side computed independently: Z/n localized at (p) is Z/p^k
  unsigned long long pk = 1, m = n;
  while (m % p == 0) {
    pk *= p;
    m /= p;
  }
  FiniteTopology local = spec_zn(pk);

  // Y(p) = { q : q contained in p } = { (p) } for distinct primes
  std::vector<bool> Y(spec.points.size(), false);
  std::string pname = "(" + std::to_string(p) + ")";
  for (std::size_t i = 0; i < spec.points.size(); ++i) Y[i] = spec.points[i] == pname;

  SubspaceCheck res = subspace_pixelation_check(spec, Y);
  if (!res.ok) return res;

  // the pixelation equals Top of the localized spectrum
  FiniteLattice lhs = local.open_lattice();
  std::set<std::vector<bool>> sub;
  for (const auto& o : spec.opens) {
    std::vector<bool> s(o.size());
    for (std::size_t q = 0; q < o.size(); ++q) s[q] = o[q] && Y[q];
    sub.insert(s);
  }
  if (sub.size() != lhs.size()) {
    res.ok = false;
    res.witness = "localized spectrum has a different number of opens";
    return res;
  }
  return res;
}

}  // namespace pixcat
