#include "liekit/builder/clifford.hpp"

#include "liekit/core/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace liekit::builder {

SignedPerm SignedPerm::identity(std::size_t n) {
  SignedPerm p;
  p.target_.resize(n);
  p.sign_.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) p.target_[i] = static_cast<std::uint32_t>(i);
  return p;
}

SignedPerm SignedPerm::word(const std::string& letters) {
  SignedPerm p = identity(std::size_t{1} << letters.size());
  for (std::size_t c = 0; c < p.size(); ++c) {
    std::uint32_t t = 0;
    int s = 1;
    for (std::size_t pos = 0; pos < letters.size(); ++pos) {
      const std::size_t shift = letters.size() - 1 - pos;
      const unsigned bit = (c >> shift) & 1u;
      unsigned out = bit;
      switch (letters[pos]) {
        case 'I': break;
        case 'X': out = bit ^ 1u; break;
        case 'Z': s *= bit ? -1 : 1; break;
        case 'E':  // e0 -> -e1, e1 -> e0
          out = bit ^ 1u;
          s *= bit ? 1 : -1;
          break;
        default: throw std::invalid_argument("SignedPerm::word: bad letter");
      }
      t |= out << shift;
    }
    p.target_[c] = t;
    p.sign_[c] = static_cast<std::int8_t>(s);
  }
  return p;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  if (size() != o.size()) throw std::invalid_argument("SignedPerm: size mismatch");
  SignedPerm p = identity(size());
  for (std::size_t c = 0; c < size(); ++c) {
    const auto mid = o.target_[c];
    p.target_[c] = target_[mid];
    p.sign_[c] = static_cast<std::int8_t>(o.sign_[c] * sign_[mid]);
  }
  return p;
}

SignedPerm SignedPerm::operator-() const {
  SignedPerm p = *this;
  for (auto& s : p.sign_) s = static_cast<std::int8_t>(-s);
  return p;
}

SignedPerm SignedPerm::transpose() const {
  SignedPerm p = identity(size());
  for (std::size_t c = 0; c < size(); ++c) {
    p.target_[target_[c]] = static_cast<std::uint32_t>(c);
    p.sign_[target_[c]] = sign_[c];
  }
  return p;
}

SparseMatrix SignedPerm::to_sparse() const {
  SparseMatrix m(size(), size());
  for (std::size_t c = 0; c < size(); ++c) m.set(target_[c], c, Rational(sign_[c]));
  return m;
}

namespace {

bool letters_anticommute(char a, char b) { return a != 'I' && b != 'I' && a != b; }

bool words_anticommute(const std::string& u, const std::string& v) {
  int count = 0;
  for (std::size_t i = 0; i < u.size(); ++i) count += letters_anticommute(u[i], v[i]);
  return count % 2 == 1;
}

char letter_product(char a, char b) {
  if (a == 'I') return b;
  if (b == 'I') return a;
  if (a == b) return 'I';
  for (char c : std::string("XZE"))
    if (c != a && c != b) return c;
  return 'I';
}

std::string word_product(const std::string& u, const std::string& v) {
  std::string w(u.size(), 'I');
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = letter_product(u[i], v[i]);
  return w;
}

std::vector<std::string> all_words(std::size_t length) {
  std::vector<std::string> out{""};
  for (std::size_t l = 0; l < length; ++l) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (char c : std::string("IXZE")) next.push_back(w + c);
    out = std::move(next);
  }
  return out;
}

// Binary length of the real irreducible module of Cl(n,0), n <= 8.
constexpr int kSmallLength[9] = {0, 0, 1, 2, 3, 3, 4, 4, 4};

std::vector<std::string> gamma_words(int n) {
  if (n <= 8) {
    std::vector<std::string> candidates;
    for (auto& w : all_words(kSmallLength[n]))
      if (std::count(w.begin(), w.end(), 'E') % 2 == 0 && (n == 1 || w.find_first_not_of('I') != std::string::npos))
        candidates.push_back(w);
    std::vector<std::string> chosen;
    std::function<bool(std::size_t)> search = [&](std::size_t from) {
      if (static_cast<int>(chosen.size()) == n) return true;
      for (std::size_t c = from; c < candidates.size(); ++c) {
        if (!std::all_of(chosen.begin(), chosen.end(),
                         [&](const std::string& w) { return words_anticommute(w, candidates[c]); }))
          continue;
        chosen.push_back(candidates[c]);
        if (search(c + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (!search(0)) throw std::logic_error("clifford: no gamma words found");
    return chosen;
  }
  // Cl(n,0) = Cl(8,0) (x) Cl(n-8,0): gamma_i (x) 1 and omega_8 (x) g_j.
  const auto base = gamma_words(8);
  const auto rest = gamma_words(n - 8);
  std::string omega = base[0];
  for (std::size_t i = 1; i < base.size(); ++i) omega = word_product(omega, base[i]);
  const std::string pad(rest.front().size(), 'I');
  std::vector<std::string> out;
  for (const auto& g : base) out.push_back(g + pad);
  for (const auto& g : rest) out.push_back(omega + g);
  return out;
}

SpinorSubspace eigenspace(const SignedPerm& omega, int eigen) {
  SpinorSubspace sub;
  const std::size_t d = omega.size();
  bool pairs = false;
  for (std::size_t c = 0; c < d; ++c) {
    const std::size_t t = omega.target(c);
    if (t == c) {
      if (omega.sign(c) == eigen) {
        DenseVector v(d);
        v[c] = 1;
        sub.basis.push_back(std::move(v));
      }
    } else if (c < t) {
      pairs = true;
      DenseVector v(d);
      v[c] = 1;
      v[t] = omega.sign(c) * eigen;
      sub.basis.push_back(std::move(v));
    }
  }
  sub.norm = pairs ? 2 : 1;
  return sub;
}

}  // namespace

CliffordRep clifford(int n) {
  if (n < 1 || n > 16) throw Unsupported("clifford: n must be in 1..16, got " + std::to_string(n));
  CliffordRep c;
  c.n = n;
  c.words = gamma_words(n);
  for (const auto& w : c.words) c.gammas.push_back(SignedPerm::word(w));
  c.dim_spinor = c.gammas.front().size();
  if (n % 2 == 0) {
    SignedPerm omega = c.gammas[0];
    for (int i = 1; i < n; ++i) omega = omega * c.gammas[i];
    const SignedPerm sq = omega * omega;
    c.chirality_is_complex_structure = sq == -SignedPerm::identity(c.dim_spinor);
    if (!c.chirality_is_complex_structure) {
      c.half_spinors = std::make_pair(eigenspace(omega, 1), eigenspace(omega, -1));
      const SparseMatrix id = SparseMatrix::identity(c.dim_spinor);
      const SparseMatrix w = omega.to_sparse();
      c.half_projectors = std::make_pair((id + w).scaled(Rational(1, 2)), (id - w).scaled(Rational(1, 2)));
    }
    c.chirality = std::move(omega);
  }
  return c;
}

SparseMatrix spin_generator(const CliffordRep& c, int a, int b) {
  return (c.gammas.at(a) * c.gammas.at(b)).to_sparse().scaled(Rational(1, 2));
}

std::vector<SignedPerm> clifford_commutant(const CliffordRep& c) {
  std::vector<SignedPerm> out;
  for (const auto& w : all_words(c.words.front().size())) {
    if (w.find_first_not_of('I') == std::string::npos) continue;
    bool commutes = std::none_of(c.words.begin(), c.words.end(),
                                 [&](const std::string& g) { return words_anticommute(g, w); });
    if (commutes) out.push_back(SignedPerm::word(w));
  }
  return out;
}

SpinorSubspace full_module(const CliffordRep& c) {
  SpinorSubspace sub;
  sub.norm = 1;
  for (std::size_t i = 0; i < c.dim_spinor; ++i) {
    DenseVector v(c.dim_spinor);
    v[i] = 1;
    sub.basis.push_back(std::move(v));
  }
  return sub;
}

namespace {

struct Supports {
  std::vector<std::vector<std::pair<std::size_t, Rational>>> of;  // basis vector -> (coordinate, coefficient)
  std::vector<std::ptrdiff_t> owner;                               // coordinate -> basis vector or -1
};

Supports supports(const SpinorSubspace& sub, std::size_t ambient) {
  Supports s;
  s.of.resize(sub.dim());
  s.owner.assign(ambient, -1);
  for (std::size_t m = 0; m < sub.dim(); ++m)
    for (std::size_t c = 0; c < sub.basis[m].size(); ++c)
      if (!sub.basis[m][c].is_zero()) {
        if (s.owner[c] >= 0) throw std::invalid_argument("restrict_to: basis supports overlap");
        s.owner[c] = static_cast<std::ptrdiff_t>(m);
        s.of[m].emplace_back(c, sub.basis[m][c]);
      }
  return s;
}

}  // namespace

SparseMatrix restrict_to(const SparseMatrix& op, const SpinorSubspace& sub) {
  const std::size_t d = sub.dim();
  const std::size_t ambient = op.cols();
  const Supports sup = supports(sub, ambient);
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(ambient);
  for (const auto& [key, v] : op.entries()) cols[key.second].emplace_back(key.first, v);

  SparseMatrix r(d, d);
  for (std::size_t m = 0; m < d; ++m) {
    std::map<std::size_t, Rational> y;
    for (const auto& [c, coef] : sup.of[m])
      for (const auto& [row, v] : cols[c]) y[row] += v * coef;
    for (const auto& [row, v] : y) {
      if (v.is_zero()) continue;
      if (sup.owner[row] < 0) throw std::invalid_argument("restrict_to: operator leaves the subspace");
      const auto target = static_cast<std::size_t>(sup.owner[row]);
      const Rational& bc = sup.of[target][0].first == row ? sup.of[target][0].second
                                                          : std::find_if(sup.of[target].begin(), sup.of[target].end(),
                                                                         [&](const auto& e) { return e.first == row; })
                                                                ->second;
      r.add(target, m, bc * v / sub.norm);
    }
    // The image must be reproduced exactly by its coordinates in the subspace.
    std::map<std::size_t, Rational> back;
    for (std::size_t k = 0; k < d; ++k) {
      const Rational coef = r.at(k, m);
      if (coef.is_zero()) continue;
      for (const auto& [c, bc] : sup.of[k]) back[c] += coef * bc;
    }
    for (const auto& [row, v] : y)
      if (back[row] != v) throw std::invalid_argument("restrict_to: operator leaves the subspace");
  }
  return r;
}

std::vector<std::pair<int, std::size_t>> spin_wedge_decomposition(int n) {
  const CliffordRep c = clifford(n);
  const bool use_half = c.half_spinors.has_value();
  const SpinorSubspace space = use_half ? c.half_spinors->first : full_module(c);
  const bool scalar_chirality = n % 2 == 1 || use_half;
  const int max_p = scalar_chirality ? n / 2 : n;
  const std::size_t d = space.dim();
  const Supports sup = supports(space, c.dim_spinor);
  auto pair_index = [d](std::size_t a, std::size_t b) { return a * d + b; };

  std::vector<std::pair<int, std::size_t>> out;
  for (int p = 0; p <= max_p; ++p) {
    // Rows: subsets I of size p; entries: antisymmetric part of gamma_I on the space.
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> rows;
    std::vector<int> subset(p);
    std::function<void(int, int)> each = [&](int pos, int from) {
      if (pos == p) {
        SignedPerm g = SignedPerm::identity(c.dim_spinor);
        for (int idx : subset) g = g * c.gammas[idx];
        // Entry (a, b) = <b_a, g b_b>; basis coefficients are +-1 so this stays integral
        // up to the common norm, which does not change ranks.
        std::map<std::pair<std::size_t, std::size_t>, std::int64_t> form;
        for (std::size_t b = 0; b < d; ++b)
          for (const auto& [col, coef] : sup.of[b]) {
            const std::size_t row = g.target(col);
            const std::ptrdiff_t a = sup.owner[row];
            if (a < 0) continue;
            const auto& entries = sup.of[static_cast<std::size_t>(a)];
            const auto hit = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.first == row; });
            form[{static_cast<std::size_t>(a), b}] += g.sign(col) * coef.num().get_si() * hit->second.num().get_si();
          }
        std::vector<std::pair<std::size_t, std::int64_t>> row;
        for (const auto& [key, v] : form) {
          const auto [a, b] = key;
          if (a >= b) continue;
          auto opp = form.find({b, a});
          const std::int64_t anti = v - (opp == form.end() ? 0 : opp->second);
          if (anti != 0) row.emplace_back(pair_index(a, b), anti);
        }
        for (const auto& [key, v] : form) {
          const auto [a, b] = key;
          if (a > b && v != 0 && !form.count({b, a})) row.emplace_back(pair_index(b, a), -v);
        }
        std::sort(row.begin(), row.end());
        // a < b entries only; the a > b side is its negative
        if (!row.empty()) rows.push_back(std::move(row));
        return;
      }
      for (int i = from; i < n; ++i) {
        subset[pos] = i;
        each(pos + 1, i + 1);
      }
    };
    each(0, 0);
    if (rows.empty()) continue;

    // Gram matrix of the rows; rank(M) = rank(M M^T).
    std::map<std::size_t, std::vector<std::pair<std::size_t, std::int64_t>>> columns;
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [col, v] : rows[r]) columns[col].emplace_back(r, v);
    std::vector<std::int64_t> acc(rows.size(), 0);
    std::vector<std::size_t> touched;
    bool diagonal = true;
    std::vector<std::map<std::size_t, std::int64_t>> gram(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (const auto& [col, v] : rows[r])
        for (const auto& [other, w] : columns[col]) {
          if (acc[other] == 0) touched.push_back(other);
          acc[other] += v * w;
        }
      for (auto o : touched) {
        if (acc[o] != 0) {
          gram[r][o] = acc[o];
          if (o != r) diagonal = false;
        }
        acc[o] = 0;
      }
      touched.clear();
    }
    std::size_t rk = 0;
    if (diagonal) {
      for (std::size_t r = 0; r < rows.size(); ++r) rk += gram[r].count(r) ? 1 : 0;
    } else {
      SparseMatrix g(rows.size(), rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [o, v] : gram[r]) g.set(r, o, Rational(v));
      rk = rank(g);
    }
    if (rk > 0) out.emplace_back(p, rk);
  }
  return out;
}

}  // namespace liekit::builder
