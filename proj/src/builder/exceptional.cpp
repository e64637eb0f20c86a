#include "liekit/builder/exceptional.hpp"

#include "liekit/builder/classical.hpp"
#include "liekit/builder/clifford.hpp"

#include <stdexcept>

namespace liekit::builder {

std::optional<Exceptional> parse_exceptional(const std::string& name) {
  std::string s;
  for (char ch : name) s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (s == "G2") return Exceptional::G2;
  if (s == "F4") return Exceptional::F4;
  if (s == "E6") return Exceptional::E6;
  if (s == "E7") return Exceptional::E7;
  if (s == "E8") return Exceptional::E8;
  return std::nullopt;
}

std::string to_string(Exceptional e) {
  switch (e) {
    case Exceptional::G2: return "G2";
    case Exceptional::F4: return "F4";
    case Exceptional::E6: return "E6";
    case Exceptional::E7: return "E7";
    case Exceptional::E8: return "E8";
  }
  return "?";
}

namespace {

// so(n) acting on a spinor subspace. With L_i_j = E_ji - E_ij the
// homomorphism is L_i_j -> -(1/2) gamma_i gamma_j.
GradedSpec spinor_part(std::string name, int n, const CliffordRep& c, const SpinorSubspace& space) {
  GradedSpec spec;
  spec.name = std::move(name);
  spec.even = so_table(n);
  const std::size_t h = spec.even.dim();
  spec.summands.push_back({"adjoint", 0, h, std::vector<Rational>(h, Rational(2))});
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) spec.action.push_back(restrict_to(spin_generator(c, i, j).scaled(-1), space));
  for (std::size_t a = 1; a <= space.dim(); ++a) spec.odd_labels.push_back("psi_" + std::to_string(a));
  spec.odd_norms.assign(space.dim(), space.norm);
  return spec;
}

SpinorSubspace natural_spinor(const CliffordRep& c) {
  return c.half_spinors ? c.half_spinors->first : full_module(c);
}

GradedSpec g2_spec() {
  GradedSpec spec;
  spec.name = "G2";
  const MatrixBasis su3 = unitary_matrices(3);
  spec.even = table_from_matrices(su3, "su(3)");
  spec.summands.push_back({"adjoint", 0, su3.size(), MatrixDecomposer(su3.elements).norms()});
  spec.action = su3.elements;
  for (int a = 1; a <= 6; ++a) spec.odd_labels.push_back("v_" + std::to_string(a));
  spec.odd_norms.assign(6, Rational(1));

  // [u, v] in C^3 carries conj(u x v). Real basis: v_{2k} = e_k, v_{2k+1} = i e_k.
  std::map<std::pair<std::size_t, std::size_t>, Terms> cubic;
  const int eps[3][3] = {{0, 2, 1}, {2, 0, 0}, {1, 0, 0}};  // third index
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const int c = eps[a][b];
      const int sign = (a == 0 && b == 1) || (a == 1 && b == 2) ? 1 : -1;  // eps_abc with a < b
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
          // conj(i^(s+t)) = 1, -i, -1
          const int power = s + t;
          Terms terms;
          if (power == 0) terms.push_back({static_cast<std::size_t>(2 * c), Rational(sign)});
          if (power == 1) terms.push_back({static_cast<std::size_t>(2 * c + 1), Rational(-sign)});
          if (power == 2) terms.push_back({static_cast<std::size_t>(2 * c), Rational(-sign)});
          cubic[{static_cast<std::size_t>(2 * a + s), static_cast<std::size_t>(2 * b + t)}] = std::move(terms);
        }
    }
  spec.cubic = std::move(cubic);
  return spec;
}

GradedSpec e6_spec() {
  const CliffordRep c = clifford(10);
  const SpinorSubspace space = full_module(c);
  GradedSpec spec = spinor_part("E6", 10, c, space);
  spec.even = direct_sum(spec.even, StructureTable("u(1)", {"z"}), "so(10)+u(1)");
  spec.summands.push_back({"u1", spec.summands[0].count, 1, {Rational(1)}});
  spec.action.push_back(restrict_to(c.chirality->to_sparse(), space));
  return spec;
}

GradedSpec e7_spec() {
  const CliffordRep c = clifford(12);
  const SpinorSubspace space = c.half_spinors->first;
  GradedSpec spec = spinor_part("E7", 12, c, space);

  std::vector<SignedPerm> js;
  for (const auto& w : clifford_commutant(c))
    if (w.is_antisymmetric()) js.push_back(w);
  if (js.size() < 2) throw std::logic_error("E7: Clifford commutant lacks two complex structures");
  const SignedPerm j3 = js[0] * js[1];

  StructureTable sp1("sp(1)", {"q_1", "q_2", "q_3"});
  sp1.set_bracket(0, 1, {{2, Rational(1)}});
  sp1.set_bracket(1, 2, {{0, Rational(1)}});
  sp1.set_bracket(2, 0, {{1, Rational(1)}});
  const std::size_t h = spec.summands[0].count;
  spec.even = direct_sum(spec.even, sp1, "so(12)+sp(1)");
  spec.summands.push_back({"sp1", h, 3, std::vector<Rational>(3, Rational(1))});
  for (const SignedPerm* j : std::initializer_list<const SignedPerm*>{&js[0], &js[1], &j3})
    spec.action.push_back(restrict_to(j->to_sparse().scaled(Rational(1, 2)), space));
  return spec;
}

}  // namespace

GradedSpec exceptional_spec(Exceptional e) {
  switch (e) {
    case Exceptional::G2: return g2_spec();
    case Exceptional::F4: {
      const CliffordRep c = clifford(9);
      return spinor_part("F4", 9, c, full_module(c));
    }
    case Exceptional::E6: return e6_spec();
    case Exceptional::E7: return e7_spec();
    case Exceptional::E8: {
      const CliffordRep c = clifford(16);
      return spinor_part("E8", 16, c, c.half_spinors->first);
    }
  }
  throw std::invalid_argument("exceptional_spec: unknown algebra");
}

BuildRecipe exceptional_recipe(Exceptional e) {
  switch (e) {
    case Exceptional::G2: return {"G2", {{"adjoint", 8}, {"vector", 3}, {"covector", 3}}, {"c_adjoint", "mu_cubic"}};
    case Exceptional::F4: return {"F4", {{"adjoint", 36}, {"spinor", 16}}, {"c_adjoint"}};
    case Exceptional::E6: return {"E6", {{"adjoint", 45}, {"u1", 1}, {"spinor", 32}}, {"c_adjoint", "c_u1"}};
    case Exceptional::E7: return {"E7", {{"adjoint", 66}, {"sp1", 3}, {"spinor", 64}}, {"c_adjoint", "c_sp1"}};
    case Exceptional::E8: return {"E8", {{"adjoint", 120}, {"spinor", 128}}, {"c_adjoint"}};
  }
  throw std::invalid_argument("exceptional_recipe: unknown algebra");
}

BuildResult build_exceptional(Exceptional e, unsigned workers) {
  const GradedSpec spec = exceptional_spec(e);
  BuildRecipe recipe = exceptional_recipe(e);
  if (recipe.dim() != spec.even_dim() + spec.odd_dim())
    throw std::logic_error(spec.name + ": recipe and assembled spaces disagree");
  auto sol = solve_graded(spec, workers);
  return {std::move(recipe), std::move(sol.table), std::move(sol.coefficients), std::move(sol.jacobi)};
}

GradedSpec spin_extension_spec(int n) {
  if (n < 3) throw std::invalid_argument("spin extension needs n >= 3");
  const CliffordRep c = clifford(n);
  return spinor_part("so(" + std::to_string(n) + ")+spinor", n, c, natural_spinor(c));
}

BuildResult build_spin_extension(int n, unsigned workers) {
  const GradedSpec spec = spin_extension_spec(n);
  auto sol = solve_graded(spec, workers);
  BuildRecipe recipe{spec.name, {{"adjoint", spec.even_dim()}, {"spinor", spec.odd_dim()}}, spec.coefficient_names()};
  return {std::move(recipe), std::move(sol.table), std::move(sol.coefficients), std::move(sol.jacobi)};
}

}  // namespace liekit::builder
