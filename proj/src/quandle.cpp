#include "bsq/quandle.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

namespace bsq {

namespace {

void require_entries_in_range(int size, const std::vector<int>& table,
                              const char* what) {
  if (size < 1) throw std::invalid_argument("size must be positive");
  if (table.size() != static_cast<std::size_t>(size) * size)
    throw std::invalid_argument(std::string(what) + ": table size mismatch");
  for (int v : table)
    if (v < 0 || v >= size)
      throw std::invalid_argument(std::string(what) + ": entry out of range");
}

}  // namespace

AxiomReport check_axioms(const FiniteQuandle& q) {
  require_entries_in_range(q.size, q.table, "quandle");
  AxiomReport report;
  const int n = q.size;
  for (int x = 0; x < n; ++x)
    if (q.at(x, x) != x) report.failures.push_back({1, x});
  for (int y = 0; y < n; ++y) {
    std::vector<int> seen(n, -1);
    for (int x = 0; x < n; ++x) {
      int v = q.at(x, y);
      if (seen[v] >= 0)
        report.failures.push_back({2, seen[v], x, y});
      else
        seen[v] = x;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (q.at(q.at(x, y), z) != q.at(q.at(x, z), q.at(y, z)))
          report.failures.push_back({3, x, y, z});
  return report;
}

FiniteQuandle trivial_quandle(int k) {
  if (k < 1) throw std::invalid_argument("size must be positive");
  FiniteQuandle q{k, std::vector<int>(static_cast<std::size_t>(k) * k)};
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) q.at(x, y) = x;
  return q;
}

FiniteGroupTable make_group(int size, std::vector<int> product) {
  require_entries_in_range(size, product, "group");
  FiniteGroupTable g;
  g.size = size;
  g.product = std::move(product);

  int identity = -1;
  for (int e = 0; e < size; ++e) {
    bool ok = true;
    for (int x = 0; x < size && ok; ++x)
      ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw std::invalid_argument("group: no identity element");
  g.identity = identity;

  g.inverse.assign(size, -1);
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y)
      if (g.mul(x, y) == identity && g.mul(y, x) == identity) {
        g.inverse[x] = y;
        break;
      }
    if (g.inverse[x] < 0)
      throw std::invalid_argument("group: missing inverse");
  }

  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      for (int z = 0; z < size; ++z)
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
          throw std::invalid_argument("group: product is not associative");
  return g;
}

FiniteGroupTable cyclic_group(int k) {
  if (k < 1) throw std::invalid_argument("order must be positive");
  std::vector<int> product(static_cast<std::size_t>(k) * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      product[static_cast<std::size_t>(x) * k + y] = (x + y) % k;
  return make_group(k, std::move(product));
}

FiniteGroupTable symmetric_group(int degree) {
  if (degree < 1 || degree > 5)
    throw std::invalid_argument("symmetric group degree must be in [1, 5]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(degree);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

  const int n = static_cast<int>(perms.size());
  std::vector<int> product(static_cast<std::size_t>(n) * n);
  std::vector<int> composed(degree);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int i = 0; i < degree; ++i) composed[i] = perms[x][perms[y][i]];
      product[static_cast<std::size_t>(x) * n + y] = index[composed];
    }
  return make_group(n, std::move(product));
}

FiniteQuandle conj_quandle(const FiniteGroupTable& g) {
  FiniteQuandle q{g.size, std::vector<int>(static_cast<std::size_t>(g.size) * g.size)};
  for (int x = 0; x < g.size; ++x)
    for (int y = 0; y < g.size; ++y)
      q.at(x, y) = g.mul(g.inv(y), g.mul(x, y));
  return q;
}

FiniteQuandle inverse_table(const FiniteQuandle& q) {
  FiniteQuandle inv{q.size, std::vector<int>(q.table.size())};
  for (int y = 0; y < q.size; ++y)
    for (int x = 0; x < q.size; ++x)
      inv.at(q.at(x, y), y) = x;
  return inv;
}

namespace {

std::vector<int> conjugacy_closure(const FiniteGroupTable& g,
                                   const std::vector<int>& xs) {
  std::set<int> carrier;
  for (int x : xs) {
    if (x < 0 || x >= g.size)
      throw std::invalid_argument("element index out of range");
    for (int h = 0; h < g.size; ++h)
      carrier.insert(g.mul(g.inv(h), g.mul(x, h)));
  }
  return {carrier.begin(), carrier.end()};
}

}  // namespace

DehnQuandle dehn_quandle_finite(const FiniteGroupTable& g,
                                const std::vector<int>& xs) {
  if (xs.empty()) throw std::invalid_argument("generating subset is empty");
  std::vector<int> carrier = conjugacy_closure(g, xs);
  std::map<int, int> pos;
  for (std::size_t i = 0; i < carrier.size(); ++i)
    pos[carrier[i]] = static_cast<int>(i);

  const int n = static_cast<int>(carrier.size());
  FiniteQuandle q{n, std::vector<int>(static_cast<std::size_t>(n) * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      q.at(x, y) = pos.at(g.mul(g.inv(carrier[y]), g.mul(carrier[x], carrier[y])));
  return {std::move(q), std::move(carrier)};
}

std::vector<int> subquandle_closure(const FiniteQuandle& q,
                                    const std::vector<int>& seed) {
  if (seed.empty()) throw std::invalid_argument("seed subset is empty");
  FiniteQuandle inv = inverse_table(q);
  std::set<int> closed;
  std::vector<int> frontier;
  for (int x : seed) {
    if (x < 0 || x >= q.size)
      throw std::invalid_argument("element index out of range");
    if (closed.insert(x).second) frontier.push_back(x);
  }
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int y : closed) {
        for (int v : {q.at(x, y), q.at(y, x), inv.at(x, y), inv.at(y, x)})
          if (closed.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  return {closed.begin(), closed.end()};
}

FiniteQuandle restrict_to(const FiniteQuandle& q, const std::vector<int>& subset) {
  std::map<int, int> pos;
  for (std::size_t i = 0; i < subset.size(); ++i)
    pos[subset[i]] = static_cast<int>(i);
  const int n = static_cast<int>(subset.size());
  FiniteQuandle r{n, std::vector<int>(static_cast<std::size_t>(n) * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto it = pos.find(q.at(subset[x], subset[y]));
      if (it == pos.end())
        throw std::invalid_argument("subset is not closed under the operation");
      r.at(x, y) = it->second;
    }
  return r;
}

AtomWord reduce_atom_word(const AtomWord& w) { return detail::merge_reduce(w); }

AtomWord invert_atom_word(const AtomWord& w) {
  AtomWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->gen, checked_neg(it->exp)});
  return out;
}

AtomWord concat_atom_word(const AtomWord& u, const AtomWord& v) {
  AtomWord out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return reduce_atom_word(out);
}

FreeQuandleElement free_quandle_canonical(std::string atom, AtomWord conjugator) {
  AtomWord w = reduce_atom_word(conjugator);
  // A leading power of the element's own atom is absorbed by conjugation.
  if (!w.empty() && w.front().gen == atom) w.erase(w.begin());
  return {std::move(atom), std::move(w)};
}

std::vector<GroupWord> bounded_closure_bs(const BsPresentation& p,
                                          const std::vector<GroupWord>& generators,
                                          int depth, const ClosureLimits& limits) {
  if (generators.empty())
    throw std::invalid_argument("generator list is empty");
  if (depth < 0 || depth > limits.max_depth)
    throw std::invalid_argument("depth outside the configured bound");

  std::vector<GroupWord> reduced_gens;
  reduced_gens.reserve(generators.size());
  for (const auto& g : generators)
    reduced_gens.push_back(pinch_reduce(g, p, PinchOrder::LeftmostFirst, limits.reduce));

  std::vector<GroupWord> elements;
  auto known = [&](const GroupWord& w) {
    for (const auto& e : elements)
      if (equal(e, w, p, PinchOrder::LeftmostFirst, limits.reduce)) return true;
    return false;
  };
  auto add = [&](const GroupWord& w, std::vector<GroupWord>* frontier) {
    if (known(w)) return;
    if (elements.size() >= limits.max_elements)
      throw LimitError("closure exceeds the configured element limit");
    elements.push_back(w);
    if (frontier) frontier->push_back(w);
  };

  std::vector<GroupWord> frontier;
  for (const auto& g : reduced_gens) add(g, &frontier);
  for (int step = 0; step < depth && !frontier.empty(); ++step) {
    std::vector<GroupWord> next;
    for (const auto& x : frontier)
      for (const auto& g : reduced_gens)
        for (int sign : {+1, -1}) {
          GroupWord w = pinch_reduce(conjugate(x, g, sign), p,
                                     PinchOrder::LeftmostFirst, limits.reduce);
          add(w, &next);
        }
    frontier = std::move(next);
  }
  return elements;
}

namespace {

int read_size_line(std::istream& in, const char* what) {
  long long n;
  if (!(in >> n) || n < 1 || n > 4096)
    throw ParseError(std::string(what) + ": bad size line", 0);
  return static_cast<int>(n);
}

std::vector<int> read_table(std::istream& in, int n, const char* what) {
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (auto& v : table) {
    long long x;
    if (!(in >> x) || x < 0 || x >= n)
      throw ParseError(std::string(what) + ": bad table entry", 0);
    v = static_cast<int>(x);
  }
  return table;
}

}  // namespace

FiniteQuandle read_quandle(std::istream& in) {
  int n = read_size_line(in, "quandle file");
  return {n, read_table(in, n, "quandle file")};
}

void write_quandle(std::ostream& out, const FiniteQuandle& q) {
  out << q.size << '\n';
  for (int x = 0; x < q.size; ++x) {
    for (int y = 0; y < q.size; ++y) out << (y ? " " : "") << q.at(x, y);
    out << '\n';
  }
}

FiniteGroupTable read_group(std::istream& in) {
  int n = read_size_line(in, "group file");
  std::vector<int> product = read_table(in, n, "group file");
  long long e;
  if (!(in >> e) || e < 0 || e >= n)
    throw ParseError("group file: bad identity line", 0);
  FiniteGroupTable g = make_group(n, std::move(product));
  if (g.identity != static_cast<int>(e))
    throw ParseError("group file: identity line does not match the table", 0);
  return g;
}

void write_group(std::ostream& out, const FiniteGroupTable& g) {
  out << g.size << '\n';
  for (int x = 0; x < g.size; ++x) {
    for (int y = 0; y < g.size; ++y) out << (y ? " " : "") << g.mul(x, y);
    out << '\n';
  }
  out << g.identity << '\n';
}

}  // namespace bsq
