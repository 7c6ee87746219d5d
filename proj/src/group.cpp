#include "galgebra/group.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace galg {

namespace {
constexpr int kTableVerifyCap = 512;
constexpr int kUnitSetCap = 1 << 16;
constexpr int kDenseCap = 2048;  // dense-table threshold for unit-set groups
}  // namespace

Group Group::finalize(Rep rep, bool verify_axioms) {
  int n = rep.size;
  if (rep.names.empty()) {
    rep.names.resize(n);
    for (int i = 0; i < n; ++i) rep.names[i] = "e" + std::to_string(i);
  }
  if (static_cast<int>(rep.names.size()) != n) throw std::invalid_argument("name count does not match group size");
  auto mul = [&rep](int a, int b) {
    return rep.table.empty() ? rep.fn(a, b) : rep.table[static_cast<std::size_t>(a) * rep.size + b];
  };
  if (!rep.table.empty()) {
    for (int v : rep.table)
      if (v < 0 || v >= n) throw std::invalid_argument("multiplication table entry out of range");
    // locate the identity
    int id = -1;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int g = 0; g < n && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
      if (ok) {
        id = e;
        break;
      }
    }
    if (id < 0) throw std::invalid_argument("multiplication table has no identity");
    rep.identity = id;
    rep.inverse.assign(n, -1);
    for (int g = 0; g < n; ++g) {
      for (int h = 0; h < n; ++h)
        if (mul(g, h) == id && mul(h, g) == id) {
          rep.inverse[g] = h;
          break;
        }
      if (rep.inverse[g] < 0) throw std::invalid_argument("element without a two-sided inverse");
    }
    if (verify_axioms && n <= kTableVerifyCap) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
              throw std::invalid_argument("multiplication table is not associative");
    }
  }
  for (int i = 0; i < n; ++i) rep.name_index.emplace(rep.names[i], i);
  return Group(std::make_shared<const Rep>(std::move(rep)));
}

Group Group::from_table(std::vector<std::vector<int>> table, std::vector<std::string> names) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("empty multiplication table");
  Rep rep;
  rep.size = n;
  rep.table.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("multiplication table is not square");
    rep.table.insert(rep.table.end(), row.begin(), row.end());
  }
  rep.names = std::move(names);
  return finalize(std::move(rep), true);
}

Group Group::quasidihedral(int k) {
  if (k < 3 || k > 9) throw std::invalid_argument("quasidihedral parameter k must be in [3, 9]");
  int m = 1 << (k - 1);
  int r = (1 << (k - 2)) - 1;
  int n = 1 << k;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int e1 = 0; e1 < n; ++e1) {
    int i1 = e1 % m, j1 = e1 / m;
    for (int e2 = 0; e2 < n; ++e2) {
      int i2 = e2 % m, j2 = e2 / m;
      // x a = a^r x, so (a^i1 x^j1)(a^i2 x^j2) = a^{i1 + r^j1 i2} x^{j1+j2}
      int i = (i1 + (j1 ? r * i2 : i2)) % m;
      int j = (j1 + j2) % 2;
      table[e1][e2] = i + j * m;
    }
  }
  std::vector<std::string> names(n);
  for (int e = 0; e < n; ++e) {
    int i = e % m, j = e / m;
    std::string s;
    if (i == 1)
      s = "a";
    else if (i > 1)
      s = "a^" + std::to_string(i);
    if (j) s = s.empty() ? "x" : s + "*x";
    if (s.empty()) s = "1";
    names[e] = s;
  }
  return from_table(std::move(table), std::move(names));
}

Group Group::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = i == 0 ? "1" : (i == 1 ? "c" : "c^" + std::to_string(i));
  return from_table(std::move(table), std::move(names));
}

Group Group::direct_product(const Group& a, const Group& b) {
  int na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      table[g][h] = a.mul(g / nb, h / nb) * nb + b.mul(g % nb, h % nb);
  std::vector<std::string> names(n);
  for (int g = 0; g < n; ++g) names[g] = "(" + a.name(g / nb) + "," + b.name(g % nb) + ")";
  return from_table(std::move(table), std::move(names));
}

Group Group::from_unit_set(int size, std::function<int(int, int)> mul, std::vector<std::string> names) {
  if (size < 1) throw std::invalid_argument("unit set is empty");
  if (size > kUnitSetCap) throw std::invalid_argument("unit set exceeds the 2^16 cap");
  Rep rep;
  rep.size = size;
  rep.names = std::move(names);
  // identity: the unique e with e*0 == 0
  int id = -1;
  for (int e = 0; e < size; ++e)
    if (mul(e, 0) == 0 && mul(e, e) == e) {
      id = e;
      break;
    }
  if (id < 0) throw std::invalid_argument("unit set has no identity");
  rep.identity = id;
  rep.inverse.assign(size, -1);
  bool dense = size <= kDenseCap;
  if (dense) rep.table.assign(static_cast<std::size_t>(size) * size, 0);
  // exhaustive closure sweep; every product must resolve to an in-set index
  for (int g = 0; g < size; ++g) {
    for (int h = 0; h < size; ++h) {
      int p = mul(g, h);
      if (p < 0 || p >= size) throw std::invalid_argument("unit set is not closed under multiplication");
      if (dense) rep.table[static_cast<std::size_t>(g) * size + h] = p;
      if (p == id && rep.inverse[g] < 0 && mul(h, g) == id) rep.inverse[g] = h;
    }
    if (rep.inverse[g] < 0) throw std::invalid_argument("unit set element without inverse");
  }
  if (!dense) rep.fn = std::move(mul);
  return finalize(std::move(rep), dense);
}

Group Group::from_stream(std::istream& in) {
  int n;
  if (!(in >> n) || n < 1) throw std::invalid_argument("group table file: bad size line");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (auto& row : table)
    for (auto& v : row)
      if (!(in >> v)) throw std::invalid_argument("group table file: truncated table");
  std::string line;
  std::getline(in, line);  // finish the last table line
  std::vector<std::string> names(n);
  for (auto& nm : names) {
    if (!std::getline(in, nm)) throw std::invalid_argument("group table file: missing name lines");
    while (!nm.empty() && (nm.back() == '\r' || nm.back() == ' ')) nm.pop_back();
  }
  return from_table(std::move(table), std::move(names));
}

void Group::write_stream(std::ostream& out) const {
  int n = size();
  out << n << "\n";
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) out << (h ? " " : "") << mul(g, h);
    out << "\n";
  }
  for (int g = 0; g < n; ++g) out << name(g) << "\n";
}

int Group::power(int g, std::int64_t e) const {
  if (e < 0) return power(inv(g), -e);
  int r = identity(), base = g;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

int Group::element_order(int g) const {
  int e = g, o = 1;
  while (e != identity()) {
    e = mul(e, g);
    ++o;
  }
  return o;
}

bool Group::is_p_regular(int g, std::int64_t p) const { return element_order(g) % p != 0; }

bool Group::is_abelian() const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int Group::index_of(const std::string& name) const {
  auto it = rep_->name_index.find(name);
  return it == rep_->name_index.end() ? -1 : it->second;
}

Subgroup::Subgroup(Group parent, std::vector<int> members) : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!contains(parent_.identity())) throw std::invalid_argument("subgroup must contain the identity");
  // pairwise closure check, capped so that whole-group views of enumerated
  // unit groups stay cheap (their member sets are closed by construction)
  if (order() > 4096) return;
  for (int g : members_) {
    if (!contains(parent_.inv(g))) throw std::invalid_argument("subgroup not closed under inverse");
    for (int h : members_)
      if (!contains(parent_.mul(g, h))) throw std::invalid_argument("subgroup not closed under multiplication");
  }
}

Subgroup Subgroup::trivial(const Group& g) { return Subgroup(g, {g.identity()}); }

Subgroup Subgroup::whole(const Group& g) {
  std::vector<int> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup Subgroup::generated_by(const Group& g, const std::vector<int>& gens) {
  std::set<int> closed{g.identity()};
  std::vector<int> work(gens.begin(), gens.end());
  std::sort(work.begin(), work.end(), std::greater<int>());
  while (!work.empty()) {
    int e = work.back();
    work.pop_back();
    if (closed.count(e)) continue;
    closed.insert(e);
    std::vector<int> added;
    for (int h : closed) {
      added.push_back(g.mul(e, h));
      added.push_back(g.mul(h, e));
    }
    for (int v : added)
      if (!closed.count(v)) work.push_back(v);
  }
  return Subgroup(g, std::vector<int>(closed.begin(), closed.end()));
}

bool Subgroup::contains(int g) const { return std::binary_search(members_.begin(), members_.end(), g); }

bool Subgroup::is_normal() const {
  for (int h = 0; h < parent_.size(); ++h)
    for (int g : members_)
      if (!contains(parent_.conjugate(g, h))) return false;
  return true;
}

std::pair<Group, std::vector<int>> Subgroup::as_group() const {
  int n = order();
  std::vector<int> back(members_);
  std::vector<int> fwd(parent_.size(), -1);
  for (int i = 0; i < n; ++i) fwd[back[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = parent_.name(back[i]);
    for (int j = 0; j < n; ++j) table[i][j] = fwd[parent_.mul(back[i], back[j])];
  }
  return {Group::from_table(std::move(table), std::move(names)), back};
}

std::vector<std::vector<int>> conjugacy_classes(const Group& g) {
  int n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> classes;
  for (int e = 0; e < n; ++e) {
    if (seen[e]) continue;
    std::set<int> orbit;
    for (int h = 0; h < n; ++h) orbit.insert(g.conjugate(e, h));
    std::vector<int> cls(orbit.begin(), orbit.end());
    for (int v : cls) seen[v] = true;
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return classes;
}

Subgroup commutator_subgroup(const Group& g) {
  int n = g.size();
  std::set<int> comms;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) comms.insert(g.commutator(a, b));
  return Subgroup::generated_by(g, std::vector<int>(comms.begin(), comms.end()));
}

QuotientGroup quotient(const Group& g, const Subgroup& n) {
  if (!n.parent().same_rep(g)) throw std::invalid_argument("subgroup belongs to a different group");
  if (!n.is_normal()) throw std::invalid_argument("quotient requires a normal subgroup");
  int sz = g.size();
  std::vector<int> coset_of(sz, -1);
  std::vector<int> reps;
  for (int e = 0; e < sz; ++e) {
    if (coset_of[e] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(e);
    for (int h : n.members()) coset_of[g.mul(e, h)] = c;
  }
  int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    names[i] = "[" + g.name(reps[i]) + "]";
    for (int j = 0; j < m; ++j) table[i][j] = coset_of[g.mul(reps[i], reps[j])];
  }
  return {Group::from_table(std::move(table), std::move(names)), std::move(coset_of)};
}

LowerCentralSeries lower_central_series(const Group& g) {
  LowerCentralSeries out;
  out.series.push_back(Subgroup::whole(g));
  int n = g.size();
  while (true) {
    const Subgroup& cur = out.series.back();
    std::vector<char> hit(n, 0);
    for (int a : cur.members())
      for (int b = 0; b < n; ++b) hit[g.commutator(a, b)] = 1;
    std::vector<int> vals;
    for (int v = 0; v < n; ++v)
      if (hit[v]) vals.push_back(v);
    Subgroup next = Subgroup::generated_by(g, vals);
    if (next == out.series.back()) break;
    out.series.push_back(next);
    if (next.is_trivial()) break;
  }
  if (out.series.back().is_trivial()) {
    // class: last index c (1-based) with gamma_c != 1; the trivial group has
    // class 0
    out.nilpotency_class = static_cast<int>(out.series.size()) - 1;
  }
  return out;
}

}  // namespace galg
