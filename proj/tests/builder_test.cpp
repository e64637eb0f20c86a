#include "doctest.h"

#include "liekit/builder/classical.hpp"
#include "liekit/builder/clifford.hpp"
#include "liekit/builder/exceptional.hpp"
#include "liekit/builder/invariants.hpp"
#include "liekit/builder/jacobi.hpp"
#include "liekit/builder/lattice.hpp"
#include "liekit/builder/table_io.hpp"
#include "liekit/core/linalg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

using namespace liekit;
using namespace liekit::builder;

namespace {

// Plain dense Jacobi evaluation from the stored brackets, independent of the
// integer-lattice sweep.
std::vector<Rational> dense_bracket(const StructureTable& t, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  std::vector<Rational> out(t.dim());
  for (const auto& [key, terms] : t.brackets()) {
    const auto [i, j] = key;
    const Rational c = x[i] * y[j] - x[j] * y[i];
    if (c.is_zero()) continue;
    for (const auto& term : terms) out[term.index] += c * term.coeff;
  }
  return out;
}

std::vector<Rational> unit(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n);
  v[i] = 1;
  return v;
}

struct OracleSweep {
  std::uint64_t violations = 0;
  std::optional<std::array<std::size_t, 3>> first;
  std::vector<Rational> first_defect;
};

OracleSweep oracle_sweep(const StructureTable& t) {
  OracleSweep s;
  const auto n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
        auto a = dense_bracket(t, ei, dense_bracket(t, ej, ek));
        const auto b = dense_bracket(t, ej, dense_bracket(t, ek, ei));
        const auto c = dense_bracket(t, ek, dense_bracket(t, ei, ej));
        bool zero = true;
        for (std::size_t m = 0; m < n; ++m) {
          a[m] += b[m] + c[m];
          if (!a[m].is_zero()) zero = false;
        }
        if (zero) continue;
        if (!s.first) {
          s.first = std::array<std::size_t, 3>{i, j, k};
          s.first_defect = a;
        }
        ++s.violations;
      }
  return s;
}

std::vector<Rational> densify(const Terms& terms, std::size_t n) {
  std::vector<Rational> v(n);
  for (const auto& t : terms) v[t.index] = t.coeff;
  return v;
}

StructureTable three_dim(int eyx_sign, Terms ey) {
  StructureTable t("t3", {"e", "x", "y"});
  t.set_bracket(1, 2, {{0, 1}});
  t.set_bracket(0, 1, {{2, eyx_sign}});
  t.set_bracket(0, 2, std::move(ey));
  return t;
}

// Killing form computed directly from ad matrices.
SparseMatrix oracle_killing(const StructureTable& t) {
  std::vector<SparseMatrix> ad;
  for (std::size_t i = 0; i < t.dim(); ++i) ad.push_back(t.ad(i));
  SparseMatrix k(t.dim(), t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j) k.set(i, j, (ad[i] * ad[j]).trace());
  return k;
}

void check_compact(const StructureTable& t) {
  const auto ks = killing_summary(t);
  CHECK(ks.rank == t.dim());
  CHECK(ks.negative_definite);
}

}  // namespace

TEST_SUITE("builder") {

TEST_CASE("structure table basics") {
  StructureTable t("t", {"a", "b", "c"});
  t.set_bracket(1, 0, {{2, 3}});
  CHECK(t.bracket(0, 1) == Terms{{2, -3}});
  CHECK(t.bracket(1, 0) == Terms{{2, 3}});
  CHECK(t.bracket(2, 2).empty());
  t.add_to_bracket(0, 1, 2, 3);
  CHECK(t.bracket(0, 1).empty());
  CHECK(t.stored_coefficients() == 0);
  CHECK_THROWS(t.set_bracket(0, 3, {{0, 1}}));
  CHECK_THROWS(t.set_bracket(0, 1, {{5, 1}}));
  CHECK(canonical_terms({{2, 1}, {0, 1}, {2, -1}}) == Terms{{0, 1}});
}

TEST_CASE("so(2) to so(3) gives [x, y] = e") {
  const auto r = extend_orthogonal(so_table(2), 2);
  CHECK(r.recipe.target == "O(3)-step");
  REQUIRE(r.table.dim() == 3);
  CHECK(r.table.labels() == std::vector<std::string>{"L_1_2", "L_1_3", "L_2_3"});
  CHECK(r.table.bracket(1, 2) == Terms{{0, 1}});
  CHECK(r.jacobi.triples_checked == 1);
  CHECK(r.jacobi.violations == 0);
  CHECK(r.table == so_table(3));
}

TEST_CASE("so(3) has one triple and no violation") {
  const auto rep = verify_jacobi(so_table(3));
  CHECK(rep.triples_checked == 1);
  CHECK(rep.violations == 0);
  CHECK_FALSE(rep.first_violation);
}

TEST_CASE("three-dimensional sign flip is still a Lie algebra") {
  // [x,y] = e, [e,x] = y, [e,y] = x: every Jacobi term is [a, +-a] = 0.
  const auto flipped = three_dim(1, {{1, 1}});
  const auto o = oracle_sweep(flipped);
  CHECK(o.violations == 0);
  CHECK(verify_jacobi(flipped).violations == 0);
  // but not compact: the Killing form is indefinite
  const auto ks = killing_summary(flipped);
  CHECK(ks.rank == 3);
  CHECK_FALSE(ks.negative_definite);
}

TEST_CASE("broken three-dimensional table is caught") {
  // [e,y] = e instead of -x. Hand evaluation: [x,[y,e]] = [x,-e] = [e,x] = y,
  // the other two terms vanish, so the defect is +y.
  const auto bad = three_dim(1, {{0, 1}});
  const auto rep = verify_jacobi(bad);
  CHECK(rep.violations == 1);
  REQUIRE(rep.first_violation);
  CHECK(rep.first_violation->defect == Terms{{2, 1}});
  CHECK(jacobi_defect(bad, 0, 1, 2) == Terms{{2, 1}});
}

TEST_CASE("sweep agrees with the dense oracle on perturbed tables") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto table = t % 2 ? so_table(4) : su_table(3);
    const auto n = table.dim();
    std::size_t i = rng() % n, j = rng() % n, k = rng() % n;
    if (i == j) j = (i + 1) % n;
    table.add_to_bracket(i, j, k, Rational(static_cast<long>(rng() % 5) - 2, 2));
    const auto o = oracle_sweep(table);
    const auto rep = verify_jacobi(table, 1 + t % 4);
    CHECK(rep.triples_checked == triple_count(n));
    CHECK(rep.violations == o.violations);
    CHECK(rep.first_violation.has_value() == o.first.has_value());
    if (o.first && rep.first_violation) {
      CHECK(rep.first_violation->i == (*o.first)[0]);
      CHECK(rep.first_violation->j == (*o.first)[1]);
      CHECK(rep.first_violation->k == (*o.first)[2]);
      CHECK(densify(rep.first_violation->defect, n) == o.first_defect);
    }
  }
}

TEST_CASE("triple counts") {
  CHECK(triple_count(3) == 1);
  CHECK(triple_count(2) == 0);
  CHECK(triple_count(248) == 2'511'496);
}

TEST_CASE("integer lattice clears denominators") {
  StructureTable t("h", {"a", "b", "c"});
  t.set_bracket(0, 1, {{2, Rational(1, 2)}});
  t.set_bracket(0, 2, {{1, Rational(-1, 3)}});
  const IntegerTable it(t);
  CHECK(it.scale() == 6);
  REQUIRE(it.bracket(0, 1).size() == 1);
  CHECK(it.bracket(0, 1)[0].coeff == 3);
  CHECK(it.bracket(1, 0)[0].coeff == -3);
  CHECK(it.bracket(0, 2)[0].coeff == -2);
}

TEST_CASE("orthogonal steps") {
  const auto r = extend_orthogonal(so_table(3), 3);
  CHECK(r.table.dim() == 6);
  CHECK(r.jacobi.violations == 0);
  const auto so9 = orthogonal_by_steps(9);
  CHECK(so9.dim() == 36);
  CHECK(so9 == so_table(9));
  CHECK_THROWS(extend_orthogonal(su_table(2), 3));
}

TEST_CASE("unitary steps") {
  for (auto [n, dim] : {std::pair{2, 8}, {3, 15}, {4, 24}}) {
    const auto r = extend_unitary(su_table(n), n);
    CHECK(r.recipe.target == "SU(" + std::to_string(n + 1) + ")-step");
    CHECK(r.table.dim() == static_cast<std::size_t>(dim));
    CHECK(r.recipe.dim() == static_cast<std::size_t>(dim));
    CHECK(r.jacobi.violations == 0);
    CHECK(r.table == su_table(n + 1));
  }
}

TEST_CASE("symplectic steps") {
  for (auto [n, dim] : {std::pair{1, 10}, {2, 21}}) {
    const auto r = extend_symplectic(sp_table(n), n);
    CHECK(r.table.dim() == static_cast<std::size_t>(dim));
    CHECK(r.recipe.summands.size() == 3);
    CHECK(r.recipe.dim() == static_cast<std::size_t>(dim));
    CHECK(r.jacobi.violations == 0);
    CHECK(r.table == sp_table(n + 1));
  }
}

TEST_CASE("matrix decomposer") {
  const auto basis = orthogonal_matrices(4);
  const MatrixDecomposer dec(basis.elements);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto c = commutator(basis.elements[i], basis.elements[j]);
      const auto terms = dec.decompose(c);
      REQUIRE(terms);
      SparseMatrix back(4, 4);
      for (const auto& t : *terms) back = back + basis.elements[t.index].scaled(t.coeff);
      CHECK(back == c);
    }
  CHECK_FALSE(dec.decompose(SparseMatrix::identity(4)));
  for (const auto& m : unitary_matrices(3).elements) CHECK(m.transpose() == m.scaled(-1));
  for (const auto& m : symplectic_matrices(2).elements) CHECK(m.transpose() == m.scaled(-1));
  CHECK(unitary_matrices(3).size() == 8);
  CHECK(symplectic_matrices(2).size() == 10);
}

TEST_CASE("gamma matrices anticommute for n up to 16") {
  for (int n = 1; n <= 16; ++n) {
    CAPTURE(n);
    const auto c = clifford(n);
    REQUIRE(c.gammas.size() == static_cast<std::size_t>(n));
    const auto id = SparseMatrix::identity(c.dim_spinor);
    std::vector<SparseMatrix> g;
    for (const auto& p : c.gammas) {
      const auto m = p.to_sparse();
      std::vector<int> per_row(c.dim_spinor, 0), per_col(c.dim_spinor, 0);
      for (const auto& [k, v] : m.entries()) {
        ++per_row[k.first];
        ++per_col[k.second];
        CHECK((v == 1 || v == -1));
      }
      CHECK(std::all_of(per_row.begin(), per_row.end(), [](int x) { return x == 1; }));
      CHECK(std::all_of(per_col.begin(), per_col.end(), [](int x) { return x == 1; }));
      g.push_back(m);
    }
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const auto ac = g[i] * g[j] + g[j] * g[i];
        CHECK(ac == (i == j ? id.scaled(2) : SparseMatrix(c.dim_spinor, c.dim_spinor)));
      }
  }
  CHECK_THROWS_AS(clifford(17), Unsupported);
}

TEST_CASE("spinor dimensions") {
  CHECK(clifford(9).dim_spinor == 16);
  const auto c16 = clifford(16);
  REQUIRE(c16.half_projectors);
  REQUIRE(c16.half_spinors);
  CHECK(rank(c16.half_projectors->first) == 128);
  CHECK(c16.half_spinors->first.dim() == 128);
  const auto c12 = clifford(12);
  REQUIRE(c12.half_spinors);
  CHECK(c12.half_spinors->first.dim() == 64);
  // three anticommuting complex structures commuting with every gamma
  const auto js = clifford_commutant(c12);
  std::vector<SignedPerm> anti;
  for (const auto& w : js)
    if (w.is_antisymmetric()) anti.push_back(w);
  REQUIRE(anti.size() >= 2);
  const auto minus_one = -SignedPerm::identity(c12.dim_spinor);
  CHECK(anti[0] * anti[0] == minus_one);
  CHECK(anti[1] * anti[1] == minus_one);
  CHECK(anti[0] * anti[1] == -(anti[1] * anti[0]));
}

TEST_CASE("spin generators close into so(n)") {
  const auto c = clifford(5);
  // [S_01, S_12] = S_02 up to the sign fixed by gamma_1^2 = 1
  const auto s01 = spin_generator(c, 0, 1), s12 = spin_generator(c, 1, 2), s02 = spin_generator(c, 0, 2);
  const auto br = commutator(s01, s12);
  CHECK((br == s02 || br == s02.scaled(-1)));
}

TEST_CASE("antisymmetric square of the spinor") {
  const auto w9 = spin_wedge_decomposition(9);
  CHECK(w9 == std::vector<std::pair<int, std::size_t>>{{2, 36}, {3, 84}});
  std::size_t total = 0;
  for (const auto& [p, d] : w9) total += d;
  CHECK(total == 16 * 15 / 2);
  const auto w16 = spin_wedge_decomposition(16);
  CHECK(std::find(w16.begin(), w16.end(), std::pair<int, std::size_t>{2, 120}) != w16.end());
  total = 0;
  for (const auto& [p, d] : w16) total += d;
  CHECK(total == 128 * 127 / 2);
}

TEST_CASE("exceptional recipes balance") {
  using S = std::vector<std::size_t>;
  const std::map<Exceptional, std::pair<std::size_t, S>> want{
      {Exceptional::G2, {14, {8, 3, 3}}},      {Exceptional::F4, {52, {36, 16}}},
      {Exceptional::E6, {78, {45, 1, 32}}},    {Exceptional::E7, {133, {66, 3, 64}}},
      {Exceptional::E8, {248, {120, 128}}}};
  for (const auto& [e, w] : want) {
    CAPTURE(to_string(e));
    const auto r = exceptional_recipe(e);
    S dims;
    for (const auto& s : r.summands) dims.push_back(s.second);
    CHECK(dims == w.second);
    CHECK(r.dim() == w.first);
    CHECK(parse_exceptional(to_string(e)) == e);
  }
  CHECK_FALSE(parse_exceptional("E9"));
}

TEST_CASE("small exceptional algebras close") {
  for (auto e : {Exceptional::G2, Exceptional::F4, Exceptional::E6, Exceptional::E7}) {
    CAPTURE(to_string(e));
    const auto r = build_exceptional(e);
    CHECK(r.table.dim() == r.recipe.dim());
    CHECK(r.jacobi.violations == 0);
    CHECK(r.jacobi.triples_checked == triple_count(r.table.dim()));
    check_compact(r.table);
  }
}

TEST_CASE("G2 normalization") {
  const auto r = build_exceptional(Exceptional::G2);
  std::map<std::string, Rational> c(r.coefficients.begin(), r.coefficients.end());
  CHECK(c.at("mu_cubic") == 1);
  CHECK(c.at("c_adjoint") == 3);
}

TEST_CASE("E8 sweep does not depend on the worker count") {
  const auto r = build_exceptional(Exceptional::E8, 1);
  CHECK(r.table.dim() == 248);
  CHECK(r.jacobi.violations == 0);
  CHECK(r.jacobi.triples_checked == 2'511'496);
  CHECK(verify_jacobi(r.table, 8) == r.jacobi);
  CHECK(verify_jacobi(r.table, 3) == r.jacobi);
}

TEST_CASE("spin extensions") {
  CHECK(build_spin_extension(9).table.dim() == 52);
  CHECK(build_spin_extension(8).table.dim() == 36);
  CHECK_THROWS_AS(build_spin_extension(10), NormalizationUnsolvable);
}

TEST_CASE("Killing form") {
  // su(2) with [x,y] = e and cyclic: compact
  check_compact(so_table(3));
  const auto k3 = killing_form(so_table(3));
  CHECK(k3 == SparseMatrix::identity(3).scaled(-2));
  StructureTable abelian("ab", {"a", "b"});
  CHECK(killing_form(abelian).is_zero());
  // so(n) in the defining rep: K(X, Y) = (n - 2) tr(XY), and -tr(L L) = 2
  const auto so5 = so_table(5);
  CHECK(killing_form(so5) == SparseMatrix::identity(10).scaled(-6));
  CHECK(killing_form(so5) == oracle_killing(so5));
  const auto g2 = build_exceptional(Exceptional::G2).table;
  CHECK(killing_form(g2) == oracle_killing(g2));
  const auto f4 = build_exceptional(Exceptional::F4).table;
  const auto ks = killing_summary(f4);
  CHECK(ks.rank == 52);
  CHECK(ks.negative_definite);
}

TEST_CASE("maximal torus rank matches the root system") {
  CHECK(torus_rank(build_exceptional(Exceptional::G2).table) == std::optional<std::size_t>(2));
  CHECK(torus_rank(build_exceptional(Exceptional::F4).table) == std::optional<std::size_t>(4));
  CHECK(torus_rank(so_table(7)) == std::optional<std::size_t>(3));
}

TEST_CASE("iterated so(9) matches the even part of F4") {
  const auto steps = orthogonal_by_steps(9);
  const auto even = exceptional_spec(Exceptional::F4).even;
  CHECK(steps.dim() == even.dim());
  const auto a = killing_summary(steps), b = killing_summary(even);
  CHECK(a.rank == b.rank);
  CHECK(a.negative_definite == b.negative_definite);
  CHECK(steps == even);
}

TEST_CASE("classical steps up to so(10), su(6), sp(4)") {
  const auto so10 = orthogonal_by_steps(10);
  CHECK(so10 == so_table(10));
  check_compact(so10);
  const auto su6 = unitary_by_steps(6);
  CHECK(su6 == su_table(6));
  check_compact(su6);
  const auto sp4 = symplectic_by_steps(4);
  CHECK(sp4 == sp_table(4));
  check_compact(sp4);
}

TEST_CASE("export and import round trip") {
  for (const auto& t : {so_table(5), su_table(3), sp_table(2), build_exceptional(Exceptional::G2).table}) {
    CAPTURE(t.name());
    const auto text = export_table(t);
    const auto back = import_table_string(text);
    CHECK(back.dim() == t.dim());
    CHECK(back.brackets() == t.brackets());
    CHECK(export_table(back).substr(text.find('\n')) == text.substr(text.find('\n')));
    for (std::size_t i = 0; i < back.dim(); ++i)
      for (std::size_t j = 0; j < back.dim(); ++j) {
        auto neg = back.bracket(j, i);
        for (auto& term : neg) term.coeff = -term.coeff;
        CHECK(back.bracket(i, j) == neg);
      }
    CHECK(verify_jacobi(back).violations == 0);
  }
}

TEST_CASE("import rejects malformed input") {
  CHECK_THROWS_AS(import_table_string("garbage\n"), TableFormatError);
  CHECK_THROWS_AS(import_table_string("# lie-structure v1 t dim=3\n1 0 2 1 1\n"), TableFormatError);
  CHECK_THROWS_AS(import_table_string("# lie-structure v1 t dim=3\n0 1 3 1 1\n"), TableFormatError);
  CHECK_THROWS_AS(import_table_string("# lie-structure v1 t dim=3\n0 1 2 0 1\n"), TableFormatError);
  CHECK_THROWS_AS(import_table_string("# lie-structure v1 t dim=3\n0 2 1 1 1\n0 1 2 1 1\n"), TableFormatError);
  CHECK_NOTHROW(import_table_string("# lie-structure v1 t dim=3\n0 1 2 1 1\n"));
}

TEST_CASE("corrupted coefficient breaks Jacobi") {
  const auto so5 = so_table(5);
  auto text = export_table(so5);
  // first data line "0 1 2 1 1" becomes "0 1 2 2 1"
  const auto pos = text.find("\n0 1 2 1 1\n");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 11, "\n0 1 2 2 1\n");
  const auto bad = import_table_string(text);
  const auto rep = verify_jacobi(bad);
  const auto o = oracle_sweep(bad);
  CHECK(rep.violations > 0);
  CHECK(rep.violations == o.violations);
  REQUIRE(rep.first_violation);
  REQUIRE(o.first);
  CHECK(rep.first_violation->i == (*o.first)[0]);
  CHECK(rep.first_violation->j == (*o.first)[1]);
  CHECK(rep.first_violation->k == (*o.first)[2]);
}

}  // TEST_SUITE
