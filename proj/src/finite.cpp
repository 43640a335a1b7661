#include "tukeyspec/finite.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "tukeyspec/errors.hpp"

namespace tukeyspec {

namespace {

int popcount(std::uint32_t m) { return std::popcount(m); }

std::vector<int> mask_bits(std::uint32_t m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if ((m >> i) & 1u) out.push_back(i);
  return out;
}

}  // namespace

std::string mask_str(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int b : mask_bits(mask)) {
    if (!first) out += ",";
    out += std::to_string(b);
    first = false;
  }
  return out + "}";
}

FinitePoset FinitePoset::from_leq_pairs(int n, const std::vector<std::pair<int, int>>& lt) {
  if (n < 1 || n > max_elements) throw DomainError("element count out of range");
  FinitePoset p;
  p.n_ = n;
  p.down_.assign(static_cast<std::size_t>(n), 0);
  for (int t = 0; t < n; ++t) p.down_[static_cast<std::size_t>(t)] |= 1u << t;
  for (auto [a, b] : lt) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw DomainError("element out of range");
    p.down_[static_cast<std::size_t>(b)] |= 1u << a;
  }
  // transitive closure
  for (bool changed = true; changed;) {
    changed = false;
    for (int t = 0; t < n; ++t) {
      std::uint32_t acc = p.down_[static_cast<std::size_t>(t)];
      for (int s : mask_bits(acc)) acc |= p.down_[static_cast<std::size_t>(s)];
      if (acc != p.down_[static_cast<std::size_t>(t)]) {
        p.down_[static_cast<std::size_t>(t)] = acc;
        changed = true;
      }
    }
  }
  // antisymmetry
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t && p.leq(s, t) && p.leq(t, s))
        throw DomainError("not a partial order: cycle through " + std::to_string(s));
  // every down-set is a chain
  for (int t = 0; t < n; ++t) {
    auto ds = mask_bits(p.down(t));
    for (std::size_t i = 0; i < ds.size(); ++i)
      for (std::size_t j = i + 1; j < ds.size(); ++j)
        if (!p.leq(ds[i], ds[j]) && !p.leq(ds[j], ds[i]))
          throw DomainError("not a pseudo-tree: down-set of " + std::to_string(t) +
                            " is not a chain");
  }
  // single root
  int root = -1;
  for (int t = 0; t < n; ++t) {
    if (p.down(t) == (1u << t)) {
      if (root >= 0) throw DomainError("not single-rooted");
      root = t;
    }
  }
  if (root < 0) throw DomainError("not a partial order: no minimal element");
  p.root_ = root;
  p.up_.assign(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (p.leq(s, t)) p.up_[static_cast<std::size_t>(s)] |= 1u << t;
  return p;
}

int FinitePoset::parent(int t) const {
  if (t == root_) return -1;
  std::uint32_t strict = down(t) & ~(1u << t);
  int best = -1;
  for (int s : mask_bits(strict))
    if (best < 0 || leq(best, s)) best = s;
  return best;
}

std::string FinitePoset::edge_list() const {
  std::ostringstream os;
  os << n_;
  for (int t = 0; t < n_; ++t)
    if (parent(t) >= 0) os << "; " << parent(t) << " < " << t;
  return os.str();
}

FinitePoset parse_poset(std::string_view text) {
  std::string src(text);
  std::istringstream is(src);
  long long n = 0;
  if (!(is >> n)) throw ParseError("expected element count", 0);
  if (n < 1 || n > FinitePoset::max_elements)
    throw ParseError("element count out of range", 0);
  std::vector<std::pair<int, int>> lt;
  long long a = 0;
  while (is >> a) {
    char rel = 0;
    long long b = 0;
    if (!(is >> rel) || rel != '<' || !(is >> b))
      throw ParseError("expected line of the form 'a < b'", 0);
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ParseError("element out of range", 0);
    lt.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return FinitePoset::from_leq_pairs(static_cast<int>(n), lt);
}

std::vector<std::uint32_t> initial_chains(const FinitePoset& p) {
  std::vector<std::uint32_t> out;
  std::uint32_t full = p.full();
  for (std::uint32_t m = 1; m <= full; ++m) {
    bool good = true;
    auto bits = mask_bits(m);
    for (std::size_t i = 0; i < bits.size() && good; ++i) {
      if ((p.down(bits[i]) & m) != p.down(bits[i])) good = false;  // downward closed
      for (std::size_t j = i + 1; j < bits.size() && good; ++j)
        if (!p.leq(bits[i], bits[j]) && !p.leq(bits[j], bits[i])) good = false;
    }
    if (good) out.push_back(m);
  }
  return out;
}

std::uint32_t above_chain(const FinitePoset& p, std::uint32_t chain) {
  std::uint32_t out = 0;
  for (int t = 0; t < p.size(); ++t) {
    if ((chain >> t) & 1u) continue;
    if ((p.down(t) & chain) == chain) out |= 1u << t;
  }
  return out;
}

namespace {

bool meets_from_below(const FinitePoset& p, std::uint32_t above, std::uint32_t r) {
  for (int s : mask_bits(above))
    if ((p.down(s) & r) == 0) return false;
  return true;
}

}  // namespace

std::vector<std::uint32_t> approx_successor_sets(const FinitePoset& p, std::uint32_t chain) {
  std::uint32_t above = above_chain(p, chain);
  std::vector<std::uint32_t> out;
  std::uint32_t r = above;
  while (true) {
    if (meets_from_below(p, above, r)) out.push_back(r);
    if (r == 0) break;
    r = (r - 1) & above;
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteFan lambda_fan_finite(const FinitePoset& p, std::uint32_t chain, std::uint32_t succs) {
  std::uint32_t above = above_chain(p, chain);
  if ((succs & ~above) != 0 || !meets_from_below(p, above, succs))
    throw DomainError("not an approximate-successor set");
  std::vector<int> s = mask_bits(succs);
  std::vector<std::uint32_t> strict_down(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) strict_down[i] = p.down(s[i]) & ~chain;
  // group: delta joins the least gamma whose down-set above the chain it meets
  std::vector<int> group_of(s.size(), -1);
  std::vector<std::uint32_t> classes;
  for (std::size_t d = 0; d < s.size(); ++d) {
    std::size_t g = d;
    for (std::size_t e = 0; e < d; ++e) {
      if (strict_down[e] & strict_down[d]) {
        g = e;
        break;
      }
    }
    if (g == d) {
      group_of[d] = static_cast<int>(classes.size());
      classes.push_back(1u << s[d]);
    } else {
      group_of[d] = group_of[g];
      classes[static_cast<std::size_t>(group_of[g])] |= 1u << s[d];
    }
  }
  FiniteFan fan;
  fan.classes = std::move(classes);
  fan.lambda = static_cast<int>(fan.classes.size());
  // each class's down-set above the chain is a non-empty finite chain, so
  // its coinitiality is 1
  fan.thetas.assign(static_cast<std::size_t>(fan.lambda), 1);
  return fan;
}

namespace {

std::string ahu(const std::vector<std::vector<int>>& children, int v) {
  std::vector<std::string> parts;
  for (int c : children[static_cast<std::size_t>(v)]) parts.push_back(ahu(children, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& s : parts) out += s;
  return out + ")";
}

std::vector<std::vector<int>> children_of_parents(const std::vector<int>& parent) {
  std::vector<std::vector<int>> children(parent.size());
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (parent[i] >= 0) children[static_cast<std::size_t>(parent[i])].push_back(static_cast<int>(i));
  return children;
}

std::string ahu_of_parents(const std::vector<int>& parent) {
  return ahu(children_of_parents(parent), 0);
}

}  // namespace

std::vector<std::vector<int>> rooted_trees(int n) {
  if (n < 1 || n > FinitePoset::max_elements) throw DomainError("size out of range");
  std::vector<std::vector<int>> out;
  std::set<std::string> seen;
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  // parent[i] < i enumerates every labeled rooted tree once per labeling;
  // canonical-form deduplication keeps one representative per isomorph
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (seen.insert(ahu_of_parents(parent)).second) out.push_back(parent);
      return;
    }
    for (int par = 0; par < i; ++par) {
      parent[static_cast<std::size_t>(i)] = par;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

FinitePoset poset_from_parents(const std::vector<int>& parent) {
  std::vector<std::pair<int, int>> lt;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (parent[i] >= 0) lt.emplace_back(parent[i], static_cast<int>(i));
  return FinitePoset::from_leq_pairs(static_cast<int>(parent.size()), lt);
}

TreeTerm term_from_parents(const std::vector<int>& parent) {
  auto children = children_of_parents(parent);
  auto rec = [&](auto&& self, int v) -> TreeTerm {
    std::uint64_t trunk_len = 1;
    while (children[static_cast<std::size_t>(v)].size() == 1) {
      v = children[static_cast<std::size_t>(v)].front();
      ++trunk_len;
    }
    TreeTerm t;
    t.trunk = OrderTerm::fin(trunk_len);
    // group isomorphic child subtrees into one branch with a multiplicity
    std::map<std::string, std::pair<int, std::uint64_t>> groups;
    for (int c : children[static_cast<std::size_t>(v)]) {
      std::string key = ahu(children, c);
      auto [it, fresh] = groups.emplace(key, std::make_pair(c, 0));
      it->second.second += 1;
      (void)fresh;
    }
    for (const auto& [key, rep] : groups)
      t.branches.push_back(TreeTerm::Branch{Card::fin(rep.second), self(self, rep.first)});
    return t;
  };
  return rec(rec, 0);
}

std::string canonical_string(const FinitePoset& p) {
  std::vector<int> parent(static_cast<std::size_t>(p.size()));
  for (int t = 0; t < p.size(); ++t) parent[static_cast<std::size_t>(t)] = p.parent(t);
  // relabel so the root is element 0
  if (p.root() != 0) {
    std::vector<int> fixed(parent.size());
    auto map_id = [&](int v) {
      if (v == p.root()) return 0;
      return v < p.root() ? v + 1 : v;
    };
    for (int t = 0; t < p.size(); ++t) {
      int pt = parent[static_cast<std::size_t>(t)];
      fixed[static_cast<std::size_t>(map_id(t))] = pt < 0 ? -1 : map_id(pt);
    }
    parent = std::move(fixed);
  }
  return ahu_of_parents(parent);
}

namespace {

std::uint64_t finite_order_length(const OrderTerm& t) {
  switch (t.kind) {
    case OrderTerm::Kind::Fin:
      return t.n;
    case OrderTerm::Kind::Rev:
      return finite_order_length(t.kids.front());
    case OrderTerm::Kind::Sum: {
      std::uint64_t total = 0;
      for (const auto& k : t.kids) total += finite_order_length(k);
      return total;
    }
    case OrderTerm::Kind::Ord:
    case OrderTerm::Kind::LexSum:
      throw DomainError("not a finite term");
  }
  return 0;
}

// Shared lowering over (trunk, branches): emits cover pairs, returns the
// id of the trunk's top element.
struct Lowering {
  std::vector<std::pair<int, int>> lt;
  int next = 0;

  int fresh() {
    if (next >= FinitePoset::max_elements) throw DomainError("term too large to lower");
    return next++;
  }

  template <typename Term>
  int add(const Term& t) {
    std::uint64_t len = finite_order_length(t.trunk);
    int bottom = fresh();
    int top = bottom;
    for (std::uint64_t i = 1; i < len; ++i) {
      int e = fresh();
      lt.emplace_back(top, e);
      top = e;
    }
    for (const auto& b : t.branches) {
      if (b.mult.is_infinite()) throw DomainError("not a finite term");
      for (std::uint64_t c = 0; c < b.mult.finite_value(); ++c)
        lt.emplace_back(top, add(b.sub));
    }
    return bottom;
  }
};

}  // namespace

FinitePoset lower_tree(const TreeTerm& t) {
  validate_tree(t);
  Lowering lo;
  lo.add(t);
  return FinitePoset::from_leq_pairs(lo.next, lo.lt);
}

FinitePoset lower_ptree(const PTreeTerm& t) {
  validate_ptree(t);
  Lowering lo;
  lo.add(t);
  return FinitePoset::from_leq_pairs(lo.next, lo.lt);
}

FanSweepReport fan_invariance_oracle(int max_n) {
  if (max_n < 1 || max_n > 9) throw DomainError("size bound out of range (1..9)");
  FanSweepReport rep;
  rep.max_n = max_n;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& parent : rooted_trees(n)) {
      FinitePoset p = poset_from_parents(parent);
      ++rep.posets;
      for (std::uint32_t chain : initial_chains(p)) {
        ++rep.chains;
        // minimal elements above the chain realize lambda = |S|
        std::uint32_t above = above_chain(p, chain);
        std::uint32_t minimal = 0;
        for (int t : mask_bits(above))
          if ((p.down(t) & ~(1u << t) & above) == 0) minimal |= 1u << t;
        FiniteFan ref = lambda_fan_finite(p, chain, minimal);
        if (ref.lambda != popcount(minimal))
          rep.violations.push_back("poset [" + p.edge_list() + "] chain " +
                                   mask_str(chain) + ": minimal set " + mask_str(minimal) +
                                   " gives lambda " + std::to_string(ref.lambda));
        for (std::uint32_t s : approx_successor_sets(p, chain)) {
          ++rep.successor_sets;
          FiniteFan fan = lambda_fan_finite(p, chain, s);
          if (fan.lambda != ref.lambda || fan.thetas != ref.thetas)
            rep.violations.push_back("poset [" + p.edge_list() + "] chain " +
                                     mask_str(chain) + " set " + mask_str(s) +
                                     ": lambda " + std::to_string(fan.lambda) +
                                     " != " + std::to_string(ref.lambda));
        }
      }
    }
  }
  return rep;
}

namespace {

std::vector<std::uint32_t> cone_algebra(const FinitePoset& p) {
  std::set<std::uint32_t> alg;
  alg.insert(0);
  alg.insert(p.full());
  for (int t = 0; t < p.size(); ++t) alg.insert(p.up(t));
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::uint32_t> items(alg.begin(), alg.end());
    for (std::uint32_t a : items) {
      if (alg.insert(p.full() & ~a).second) changed = true;
      for (std::uint32_t b : items) {
        if (alg.insert(a & b).second) changed = true;
        if (alg.insert(a | b).second) changed = true;
      }
    }
  }
  return {alg.begin(), alg.end()};
}

}  // namespace

StoneReport stone_correspondence_oracle(const FinitePoset& p) {
  StoneReport rep;
  rep.posets = 1;
  auto alg = cone_algebra(p);
  auto violation = [&rep, &p](const std::string& msg) {
    rep.violations.push_back("poset [" + p.edge_list() + "]: " + msg);
  };

  // atoms of the finite algebra
  std::vector<std::uint32_t> atoms;
  for (std::uint32_t a : alg) {
    if (a == 0) continue;
    bool minimal = true;
    for (std::uint32_t b : alg)
      if (b != 0 && b != a && (b & a) == b) {
        minimal = false;
        break;
      }
    if (minimal) atoms.push_back(a);
  }
  if (static_cast<int>(atoms.size()) != p.size())
    violation("expected " + std::to_string(p.size()) + " atoms, found " +
              std::to_string(atoms.size()));

  // principal ultrafilters at atoms; verify maximality honestly
  std::vector<std::vector<std::uint32_t>> ults;
  for (std::uint32_t a : atoms) {
    std::vector<std::uint32_t> u;
    for (std::uint32_t b : alg)
      if ((b & a) == a) u.push_back(b);
    for (std::uint32_t b : alg) {
      bool in_u = (b & a) == a;
      bool comp_in_u = ((p.full() & ~b) & a) == a;
      if (in_u == comp_in_u) violation("atom " + mask_str(a) + " is not an ultrafilter");
    }
    ults.push_back(std::move(u));
  }
  rep.ultrafilters = ults.size();

  auto chains = initial_chains(p);
  rep.chains = chains.size();
  if (chains.size() != static_cast<std::size_t>(p.size()))
    violation("expected " + std::to_string(p.size()) + " initial chains, found " +
              std::to_string(chains.size()));

  // phi: ultrafilter -> the chain of elements whose cone it contains
  std::set<std::uint32_t> images;
  std::map<std::uint32_t, std::size_t> chain_to_ult;
  for (std::size_t i = 0; i < ults.size(); ++i) {
    std::uint32_t img = 0;
    std::set<std::uint32_t> members(ults[i].begin(), ults[i].end());
    for (int t = 0; t < p.size(); ++t)
      if (members.count(p.up(t))) img |= 1u << t;
    if (std::find(chains.begin(), chains.end(), img) == chains.end())
      violation("phi image " + mask_str(img) + " is not an initial chain");
    if (!images.insert(img).second) violation("phi is not injective at " + mask_str(img));
    chain_to_ult[img] = i;
  }
  for (std::uint32_t c : chains)
    if (!images.count(c)) violation("phi misses chain " + mask_str(c));

  // H_C generates phi^{-1}(C)
  for (std::uint32_t c : chains) {
    ++rep.generator_checks;
    std::uint32_t above = above_chain(p, c);
    std::set<std::uint32_t> gens;
    for (int t : mask_bits(c)) {
      // every finite antichain S of elements above C, including the empty one
      std::uint32_t s = above;
      while (true) {
        bool antichain = true;
        auto bits = mask_bits(s);
        for (std::size_t i = 0; i < bits.size() && antichain; ++i)
          for (std::size_t j = i + 1; j < bits.size() && antichain; ++j)
            if (p.leq(bits[i], bits[j]) || p.leq(bits[j], bits[i])) antichain = false;
        if (antichain) {
          std::uint32_t cones = 0;
          for (int b : mask_bits(s)) cones |= p.up(b);
          gens.insert(p.up(t) & ~cones);
        }
        if (s == 0) break;
        s = (s - 1) & above;
      }
    }
    // close under intersection, then take the upward closure in the algebra
    std::set<std::uint32_t> meets = gens;
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<std::uint32_t> items(meets.begin(), meets.end());
      for (std::uint32_t a : items)
        for (std::uint32_t b : items)
          if (meets.insert(a & b).second) changed = true;
    }
    if (meets.count(0)) violation("H_C for chain " + mask_str(c) + " generates an improper filter");
    std::set<std::uint32_t> generated;
    for (std::uint32_t b : alg)
      for (std::uint32_t f : meets)
        if ((b & f) == f) {
          generated.insert(b);
          break;
        }
    auto it = chain_to_ult.find(c);
    if (it == chain_to_ult.end()) continue;  // already reported
    std::set<std::uint32_t> expected(ults[it->second].begin(), ults[it->second].end());
    if (generated != expected)
      violation("generated filter for chain " + mask_str(c) +
                " differs from the corresponding ultrafilter");
  }
  return rep;
}

StoneReport stone_sweep(int max_n) {
  if (max_n < 1 || max_n > 8) throw DomainError("size bound out of range (1..8)");
  StoneReport rep;
  rep.max_n = max_n;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& parent : rooted_trees(n)) {
      StoneReport one = stone_correspondence_oracle(poset_from_parents(parent));
      rep.posets += one.posets;
      rep.ultrafilters += one.ultrafilters;
      rep.chains += one.chains;
      rep.generator_checks += one.generator_checks;
      rep.violations.insert(rep.violations.end(), one.violations.begin(),
                            one.violations.end());
    }
  }
  return rep;
}

BridgeReport bridge_oracle(int max_n) {
  if (max_n < 1 || max_n > 9) throw DomainError("size bound out of range (1..9)");
  BridgeReport rep;
  rep.max_n = max_n;
  TukeyType one_type;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& parent : rooted_trees(n)) {
      ++rep.terms;
      FinitePoset p = poset_from_parents(parent);
      TreeTerm term = term_from_parents(parent);
      auto fail = [&rep, &p](const std::string& msg) {
        rep.violations.push_back("poset [" + p.edge_list() + "]: " + msg);
      };

      FinitePoset lowered = lower_tree(term);
      if (canonical_string(lowered) != canonical_string(p))
        fail("lowered term is not isomorphic to the source poset");

      auto chains = initial_chains(p);
      if (chains.size() != static_cast<std::size_t>(n))
        fail("chain count " + std::to_string(chains.size()));

      // exhaustive per-chain successor counts
      std::set<std::uint64_t> finite_succ;
      for (std::uint32_t c : chains) {
        std::uint32_t above = above_chain(p, c);
        std::uint32_t minimal = 0;
        for (int t : mask_bits(above))
          if ((p.down(t) & ~(1u << t) & above) == 0) minimal |= 1u << t;
        if (minimal != 0) {
          FiniteFan fan = lambda_fan_finite(p, c, minimal);
          finite_succ.insert(static_cast<std::uint64_t>(fan.lambda));
        } else {
          finite_succ.insert(0);
        }
      }

      std::set<std::uint64_t> symbolic_succ;
      auto classes = tree_chain_classes(term);
      rep.classes += classes.size();
      for (const auto& cl : classes) {
        if (cl.cf != Card::fin(1)) fail("finite term with infinite cofinality class");
        if (cl.succ_count.is_infinite()) fail("finite term with infinite successor count");
        if (!(cl.tukey == one_type)) fail("finite term with non-trivial type");
        symbolic_succ.insert(cl.succ_count.finite_value());
      }
      if (symbolic_succ != finite_succ) fail("successor-count sets differ");

      // the pseudo-tree path must agree, with all fan chains of length 1
      auto pclasses = ptree_chain_classes(embed(term));
      std::set<std::uint64_t> ptree_succ;
      for (const auto& cl : pclasses) {
        for (const auto& fc : cl.fan.classes)
          if (fc.theta != Card::fin(1)) fail("finite term with an infinite fan chain");
        if (cl.fan.lambda.is_infinite())
          fail("finite term with infinite fan width");
        else
          ptree_succ.insert(cl.fan.lambda.finite_value());
        if (!(cl.tukey == one_type)) fail("finite term with non-trivial pseudo-tree type");
      }
      if (ptree_succ != finite_succ) fail("fan-width sets differ");

      if (!(tree_spectrum(term) == std::vector<TukeyType>{one_type}))
        fail("tree spectrum is not {1}");
      if (!(ptree_spectrum(embed(term)) == std::vector<TukeyType>{one_type}))
        fail("pseudo-tree spectrum is not {1}");
    }
  }
  return rep;
}

}  // namespace tukeyspec
