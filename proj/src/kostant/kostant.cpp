#include "liekit/kostant/kostant.hpp"

#include "liekit/core/linalg.hpp"
#include "liekit/rootsys/names.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace liekit::kostant {

namespace {

Root negated(Root r) {
  for (auto& x : r) x = -x;
  return r;
}

// (lambda, v) for a weight and a rational vector in simple-root coordinates.
Rational pair_rational(const RootSystem& rs, const Weight& w, const std::vector<Rational>& v) {
  Rational s;
  for (int j = 0; j < rs.rank(); ++j) s += v[j] * Rational(static_cast<long>(rs.half_norms[j]) * w.labels[j]);
  return s;
}

std::string squash(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

EqualRankPair make_pair(const rootsys::GroupId& big, std::vector<Root> roots, int torus, std::string name) {
  EqualRankPair p;
  p.big = rootsys::build_root_system(big);
  p.small_simple_roots = std::move(roots);
  p.torus = torus;
  p.name = name.empty() ? big.str() + "/H" : std::move(name);
  const int r = p.big.rank();
  const auto k = p.small_simple_roots.size();

  std::set<Root> all(p.big.positive_roots.begin(), p.big.positive_roots.end());
  for (const auto& b : p.small_simple_roots) {
    if (static_cast<int>(b.size()) != r) throw InvalidSubgroup("root has wrong length");
    if (!all.count(b) && !all.count(negated(b))) throw InvalidSubgroup("not a root of " + big.str());
  }
  if (torus < 0 || static_cast<int>(k) + torus != r)
    throw NotEqualRank("rank(H) + torus = " + std::to_string(k + static_cast<std::size_t>(std::max(torus, 0))) +
                       " but rank(G) = " + std::to_string(r));

  SparseMatrix gram(k, static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < k; ++i)
    for (int j = 0; j < r; ++j) {
      Root aj(static_cast<std::size_t>(r), 0);
      aj[static_cast<std::size_t>(j)] = 1;
      gram.set(i, static_cast<std::size_t>(j), Rational(p.big.inner(p.small_simple_roots[i], aj)));
    }
  if (rank(gram) != k) throw InvalidSubgroup("roots are linearly dependent");

  rootsys::IntMatrix cartan(k, std::vector<int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const long num = 2 * p.big.inner(p.small_simple_roots[i], p.small_simple_roots[j]);
      const long den = p.big.inner(p.small_simple_roots[i], p.small_simple_roots[i]);
      cartan[i][j] = static_cast<int>(num / den);
      if (i != j && cartan[i][j] > 0) throw InvalidSubgroup("roots do not form a simple system (acute angle)");
    }
  p.small = rootsys::root_system_from_cartan(cartan);

  // Torus directions: the part of the Cartan subalgebra orthogonal to H's roots.
  for (const auto& v : null_space(gram)) p.torus_directions.emplace_back(v.begin(), v.end());
  return p;
}

std::uint64_t euler_number(const EqualRankPair& p) {
  const std::uint64_t g = p.big.weyl_order, h = p.small.weyl_order;
  if (g % h != 0) throw NotDivisible(std::to_string(g) + " is not divisible by " + std::to_string(h));
  return g / h;
}

BigInt Multiplet::signed_sum() const {
  BigInt s = 0;
  for (const auto& e : entries) s += e.sign * e.dim;
  return s;
}

BigInt Multiplet::unsigned_sum() const {
  BigInt s = 0;
  for (const auto& e : entries) s += e.dim;
  return s;
}

Multiplet multiplets(const EqualRankPair& p, std::uint64_t cap) {
  const std::uint64_t chi = euler_number(p);
  if (p.big.weyl_order > cap)
    throw CapExceeded("|W| = " + std::to_string(p.big.weyl_order) + " exceeds the orbit cap " + std::to_string(cap));

  struct Point {
    Weight w;
    int depth;
  };
  std::vector<Point> points;
  const auto& roots = p.small_simple_roots;
  try {
    rootsys::weyl_orbit(p.big, p.big.rho, cap, [&](const Weight& w, int depth) {
      for (const auto& beta : roots) {
        const long c = p.big.pair(w, beta);
        if (c == 0) throw std::logic_error("w(rho) is singular for H: orbit of rho must be regular");
        if (c < 0) return;
      }
      points.push_back({w, depth});
    });
  } catch (const rootsys::OrbitCapExceeded& e) {
    throw CapExceeded(e.what());
  }
  if (points.empty()) throw std::logic_error("no H-dominant orbit point");

  // BFS order: the first point has the smallest standard length.
  std::vector<Root> frame;
  for (const auto& a : p.big.positive_roots) frame.push_back(p.big.pair(points.front().w, a) > 0 ? a : negated(a));

  Multiplet m;
  for (const auto& [w, depth] : points) {
    MultipletEntry e;
    for (const auto& beta : roots)
      e.weight.labels.push_back(static_cast<int>(2 * p.big.pair(w, beta) / p.big.inner(beta, beta)) - 1);
    e.length = static_cast<int>(
        std::count_if(frame.begin(), frame.end(), [&](const Root& a) { return p.big.pair(w, a) < 0; }));
    e.sign = e.length % 2 == 0 ? 1 : -1;
    e.dim = roots.empty() ? BigInt(1) : rootsys::weyl_dim(p.small, e.weight);
    for (const auto& t : p.torus_directions) e.torus_charges.push_back(pair_rational(p.big, w, t));
    m.entries.push_back(std::move(e));
  }
  // Listed by descending torus charge (the U(1) grading), then from the
  // longest frame element down.
  std::sort(m.entries.begin(), m.entries.end(), [](const MultipletEntry& a, const MultipletEntry& b) {
    if (a.torus_charges != b.torus_charges) return b.torus_charges < a.torus_charges;
    if (a.length != b.length) return a.length > b.length;
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.weight < b.weight;
  });
  if (m.entries.size() != chi)
    throw std::logic_error("multiplet has " + std::to_string(m.entries.size()) + " entries, expected " + std::to_string(chi));
  return m;
}

std::vector<SpinSplitTerm> spin_split_under_u(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("spin_split_under_u: 1 <= n <= 12");
  std::vector<SpinSplitTerm> out;
  BigInt binom = 1;
  for (int p = 0; p <= n; ++p) {
    out.push_back({p, binom, p % 2 == 0 ? 1 : -1});
    binom = binom * (n - p) / (p + 1);
  }
  return out;
}

std::vector<std::string> preset_names() { return {"F4/B4", "A4/A3+t", "C3/C1xC2"}; }

EqualRankPair preset(const std::string& name) {
  using rootsys::Family;
  const std::string key = squash(name);
  if (key == "F4/B4") return make_pair({Family::F, 4}, {{-2, -3, -4, -2}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, 0, "F4/B4");
  if (key == "A4/A3+T") return make_pair({Family::A, 4}, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, 1, "A4/A3+t");
  if (key == "C3/C1XC2") return make_pair({Family::C, 3}, {{-2, -2, -1}, {0, 1, 0}, {0, 0, 1}}, 0, "C3/C1xC2");
  throw std::invalid_argument("unknown preset pair: " + name);
}

EqualRankPair resolve_pair(const std::string& big_name, const std::string& small_name) {
  const std::string small = squash(small_name);
  for (const auto& pre : preset_names()) {
    const auto slash = pre.find('/');
    if (squash(pre.substr(slash + 1)) == small && squash(pre.substr(0, slash)) == squash(rootsys::parse_group_name(big_name).id.str()))
      return preset(pre);
  }
  const auto g = rootsys::parse_group_name(big_name);
  if (g.torus != 0) throw InvalidSubgroup("G must be semisimple: " + big_name);
  // Sp(1) x Sp(2) spelled with classical names
  if (g.id == rootsys::GroupId{rootsys::Family::C, 3} && (small == "SP(1)XSP(2)" || small == "SP(2)XSP(1)"))
    return preset("C3/C1xC2");

  const int r = g.id.rank;
  auto simple = [r](int i) {
    Root a(static_cast<std::size_t>(r), 0);
    a[static_cast<std::size_t>(i)] = 1;
    return a;
  };
  if (small.find('X') == std::string::npos) {
    const auto h = rootsys::parse_group_name(small_name);
    if (h.id == g.id && h.torus == 0) {
      std::vector<Root> all;
      for (int i = 0; i < r; ++i) all.push_back(simple(i));
      return make_pair(g.id, all, 0, g.display + "/" + h.display);
    }
    // U(n) inside SU(n+1): drop the last node, keep a torus.
    if (g.id.family == rootsys::Family::A && h.torus == 1 && h.id.family == rootsys::Family::A && h.id.rank == r - 1) {
      std::vector<Root> roots;
      for (int i = 0; i + 1 < r; ++i) roots.push_back(simple(i));
      return make_pair(g.id, roots, 1, g.display + "/" + h.display);
    }
  }
  throw InvalidSubgroup("no built-in embedding of " + small_name + " in " + big_name +
                        " (presets: F4/B4, A4/A3+t, C3/C1xC2; also G/G and SU(n+1)/U(n))");
}

}  // namespace liekit::kostant
