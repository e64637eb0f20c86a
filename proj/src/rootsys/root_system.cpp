#include "liekit/rootsys/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace liekit::rootsys {

std::string GroupId::str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

GroupId GroupId::parse(const std::string& s) {
  if (s.size() < 2) throw InvalidGroupId(s);
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (f < 'A' || f > 'G') throw InvalidGroupId(s);
  const std::string digits = s.substr(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) ||
      digits.size() > 3)
    throw InvalidGroupId(s);
  GroupId id{static_cast<Family>(f), std::stoi(digits)};
  validate(id);
  return id;
}

void validate(const GroupId& id) {
  const int r = id.rank;
  bool ok = false;
  switch (id.family) {
    case Family::A:
    case Family::B:
    case Family::C: ok = r >= 1; break;
    case Family::D: ok = r >= 3; break;  // D2 = A1 x A1 is not simple
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) throw InvalidGroupId(id.str());
}

int known_dimension(const GroupId& id) {
  validate(id);
  const int n = id.rank;
  switch (id.family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : (n == 7 ? 133 : 248);
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

IntMatrix cartan_matrix(const GroupId& id) {
  validate(id);
  const int n = id.rank;
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };  // 0-based
  switch (id.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (n >= 2) a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (n >= 2) a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-6-7-8 with 2 attached to 4
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case Family::G:
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
  }
  return a;
}

namespace {

// Minimal positive integers d_i with d_i a_ij = d_j a_ji, per connected component.
std::vector<int> symmetrizer(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rational> d(n);
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    d[s] = 1;
    comp[s] = ncomp;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || a[i][j] == 0) continue;
        if (a[j][i] == 0) throw std::invalid_argument("Cartan matrix is not symmetrizable");
        Rational dj = d[i] * Rational(a[i][j]) / Rational(a[j][i]);
        if (comp[j] < 0) {
          comp[j] = ncomp;
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          throw std::invalid_argument("Cartan matrix is not symmetrizable");
        }
      }
    }
    ++ncomp;
  }
  std::vector<int> out(n);
  for (int c = 0; c < ncomp; ++c) {
    BigInt l = 1;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) l = lcm(l, d[i].den());
    BigInt g = 0;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) {
        BigInt v = d[i].num() * (l / d[i].den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      }
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) out[i] = static_cast<int>(BigInt(d[i].num() * (l / d[i].den()) / g).get_si());
  }
  return out;
}

int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

std::vector<Root> positive_roots_by_closure(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::set<Root> seen;
  std::vector<Root> all;
  std::vector<Root> layer;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    layer.push_back(r);
    seen.insert(r);
  }
  while (!layer.empty()) {
    std::vector<Root> next;
    for (const auto& beta : layer) {
      all.push_back(beta);
      for (int i = 0; i < n; ++i) {
        // alpha_i-string through beta: beta - p alpha_i .. beta + q alpha_i, p - q = <beta, alpha_i^vee>
        int p = 0;
        Root down = beta;
        while (true) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * a[i][j];
        if (p - pairing > 0) {
          Root up = beta;
          up[i] += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(), [](const Root& x, const Root& y) {
    const int hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : x < y;
  });
  return all;
}

bool is_simple_component(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j)
      if (!seen[j] && a[i][j] != 0) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
  }
  return count == n;
}

}  // namespace

long RootSystem::inner(const Root& x, const Root& y) const {
  long s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (x[i] != 0 && y[j] != 0) s += static_cast<long>(x[i]) * y[j] * half_norms[i] * cartan[i][j];
  return s;
}

long RootSystem::pair(const Weight& w, const Root& beta) const {
  long s = 0;
  for (int j = 0; j < rank(); ++j) s += static_cast<long>(beta[j]) * half_norms[j] * w.labels[j];
  return s;
}

RootSystem root_system_from_cartan(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.size());
  for (const auto& row : cartan)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("Cartan matrix must be square");
  RootSystem rs;
  rs.cartan = cartan;
  rs.half_norms = symmetrizer(cartan);
  rs.positive_roots = positive_roots_by_closure(cartan);
  rs.rho.labels.assign(n, 1);
  rs.exponents = exponents_of(rs);
  for (int m : rs.exponents) rs.degrees.push_back(m + 1);
  rs.weyl_order = weyl_order_of(rs);
  if (is_simple_component(cartan)) rs.coxeter_number = (rs.dim() - n) / n;
  return rs;
}

RootSystem build_root_system(const GroupId& id) {
  RootSystem rs = root_system_from_cartan(cartan_matrix(id));
  rs.id = id;
  return rs;
}

std::vector<int> exponents_of(const RootSystem& rs) {
  std::map<int, int> by_height;
  int top = 0;
  for (const auto& r : rs.positive_roots) {
    const int h = height(r);
    ++by_height[h];
    top = std::max(top, h);
  }
  std::vector<int> ex;
  for (int m = 1; m <= top; ++m) {
    const int mult = by_height[m] - (m + 1 <= top ? by_height[m + 1] : 0);
    for (int k = 0; k < mult; ++k) ex.push_back(m);
  }
  return ex;
}

std::uint64_t weyl_order_of(const RootSystem& rs) {
  std::uint64_t w = 1;
  for (int m : rs.exponents) w *= static_cast<std::uint64_t>(m + 1);
  return w;
}

BigInt weyl_dim(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.labels.size()) != rs.rank())
    throw std::invalid_argument("weyl_dim: weight length differs from rank");
  for (int l : w.labels)
    if (l < 0) throw std::invalid_argument("weyl_dim: weight is not dominant");
  BigInt num = 1, den = 1;
  Weight shifted = w;
  for (auto& l : shifted.labels) l += 1;
  for (const auto& beta : rs.positive_roots) {
    num *= BigInt(rs.pair(shifted, beta));
    den *= BigInt(rs.pair(rs.rho, beta));
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw NonIntegerResult("weyl_dim: non-integral dimension");
  return num / den;
}

Weight fundamental_weight(const RootSystem& rs, int node) {
  Weight w;
  w.labels.assign(rs.rank(), 0);
  w.labels.at(node) = 1;
  return w;
}

std::vector<BigInt> fundamental_dims(const GroupId& id) {
  const RootSystem rs = build_root_system(id);
  std::vector<BigInt> dims;
  for (int i = 0; i < rs.rank(); ++i) dims.push_back(weyl_dim(rs, fundamental_weight(rs, i)));
  return dims;
}

Weight reflect(const RootSystem& rs, const Weight& w, int i) {
  Weight out = w;
  const int li = w.labels[i];
  for (int k = 0; k < rs.rank(); ++k) out.labels[k] -= li * rs.cartan[k][i];
  return out;
}

namespace {

// Open-addressing set of nonzero 64-bit keys.
class KeySet {
public:
  bool insert(std::uint64_t key) {
    if ((size_ + 1) * 2 > slots_.size()) grow();
    return place(slots_, key);
  }

private:
  static std::size_t slot(std::uint64_t k, std::size_t mask) {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k) & mask;
  }
  bool place(std::vector<std::uint64_t>& t, std::uint64_t key) {
    const std::size_t mask = t.size() - 1;
    for (std::size_t s = slot(key, mask);; s = (s + 1) & mask) {
      if (t[s] == key) return false;
      if (t[s] == 0) {
        t[s] = key;
        if (&t == &slots_) ++size_;
        return true;
      }
    }
  }
  void grow() {
    std::vector<std::uint64_t> bigger(slots_.empty() ? 1024 : slots_.size() * 2, 0);
    for (auto k : slots_)
      if (k != 0) place(bigger, k);
    slots_.swap(bigger);
  }

  std::vector<std::uint64_t> slots_;
  std::size_t size_ = 0;
};

std::uint64_t pack(const Weight& w) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < w.labels.size(); ++i) {
    const int l = w.labels[i];
    if (l < -127 || l > 127) throw std::overflow_error("weyl_orbit: label outside packable range");
    key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(l + 128)) << (8 * i);
  }
  return key;
}

}  // namespace

std::uint64_t weyl_orbit(const RootSystem& rs, const Weight& dominant, std::uint64_t cap,
                         const std::function<void(const Weight&, int)>& visit) {
  if (rs.rank() > 8) throw std::invalid_argument("weyl_orbit: rank above 8 unsupported");
  for (int l : dominant.labels)
    if (l < 0) throw std::invalid_argument("weyl_orbit: start weight must be dominant");
  KeySet seen;
  seen.insert(pack(dominant));
  std::vector<Weight> layer{dominant};
  std::uint64_t count = 1;
  int depth = 0;
  while (!layer.empty()) {
    std::vector<Weight> next;
    for (const auto& w : layer) {
      if (visit) visit(w, depth);
      for (int i = 0; i < rs.rank(); ++i) {
        if (w.labels[i] <= 0) continue;  // only move down in the dominance order
        Weight r = reflect(rs, w, i);
        if (seen.insert(pack(r))) {
          if (++count > cap) throw OrbitCapExceeded(cap);
          next.push_back(std::move(r));
        }
      }
    }
    layer = std::move(next);
    ++depth;
  }
  return count;
}

}  // namespace liekit::rootsys
