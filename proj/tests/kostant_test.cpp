#include "doctest.h"

#include "liekit/kostant/kostant.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace liekit;
using namespace liekit::kostant;
using rootsys::Family;

namespace {

std::vector<long> dims_of(const Multiplet& m) {
  std::vector<long> d;
  for (const auto& e : m.entries) d.push_back(e.dim.get_si());
  return d;
}

std::vector<int> signs_of(const Multiplet& m) {
  std::vector<int> s;
  for (const auto& e : m.entries) s.push_back(e.sign);
  return s;
}

BigInt pow2(std::size_t k) { return BigInt(1) << static_cast<mp_bitcnt_t>(k); }

std::size_t half_coset_dim(const EqualRankPair& p) {
  return static_cast<std::size_t>(p.big.dim() - p.small.dim() - p.torus) / 2;
}

// Multiplet as a multiset of (dim, sign) pairs, order-free.
std::multiset<std::pair<long, int>> signature(const Multiplet& m) {
  std::multiset<std::pair<long, int>> s;
  for (const auto& e : m.entries) s.emplace(e.dim.get_si(), e.sign);
  return s;
}

void check_invariants(const EqualRankPair& p) {
  const auto m = multiplets(p);
  CHECK(m.entries.size() == euler_number(p));
  if (m.entries.size() > 1) CHECK(m.signed_sum() == 0);
  CHECK(m.unsigned_sum() == pow2(half_coset_dim(p)));
  for (const auto& e : m.entries) {
    CHECK(e.dim > 0);
    CHECK(e.sign == (e.length % 2 == 0 ? 1 : -1));
  }
}

}  // namespace

TEST_SUITE("kostant") {

TEST_CASE("Euler numbers") {
  CHECK(euler_number(preset("F4/B4")) == 3);
  CHECK(1152 / 384 == 3);
  CHECK(euler_number(preset("A4/A3+t")) == 5);
  CHECK(euler_number(preset("C3/C1xC2")) == 3);
  for (auto id : {rootsys::GroupId{Family::G, 2}, {Family::F, 4}, {Family::A, 3}}) {
    std::vector<Root> simple;
    for (int i = 0; i < id.rank; ++i) {
      Root a(static_cast<std::size_t>(id.rank), 0);
      a[static_cast<std::size_t>(i)] = 1;
      simple.push_back(a);
    }
    const auto p = make_pair(id, simple, 0);
    CHECK(euler_number(p) == 1);
    const auto m = multiplets(p);
    REQUIRE(m.entries.size() == 1);
    CHECK(m.entries[0].dim == 1);
    CHECK(m.entries[0].sign == 1);
  }
}

TEST_CASE("F4 over B4") {
  const auto m = multiplets(preset("F4/B4"));
  CHECK(dims_of(m) == std::vector<long>{44, 128, 84});
  CHECK(signs_of(m) == std::vector<int>{1, -1, 1});
  CHECK(m.signed_sum() == 0);
  CHECK(m.unsigned_sum() == 256);
  CHECK(44 + 128 + 84 == 256);
}

TEST_CASE("SU(5) over U(4)") {
  const auto p = preset("A4/A3+t");
  const auto m = multiplets(p);
  CHECK(dims_of(m) == std::vector<long>{1, 4, 6, 4, 1});
  CHECK(signs_of(m) == std::vector<int>{1, -1, 1, -1, 1});
  CHECK(m.signed_sum() == 0);
  CHECK(m.unsigned_sum() == 16);
  // charges strictly decrease along the listing
  for (std::size_t i = 1; i < m.entries.size(); ++i) {
    REQUIRE(m.entries[i].torus_charges.size() == 1);
    CHECK(m.entries[i].torus_charges[0] < m.entries[i - 1].torus_charges[0]);
  }
  CHECK(resolve_pair("SU(5)", "U(4)").small_simple_roots == p.small_simple_roots);
}

TEST_CASE("Sp(3) over Sp(1) x Sp(2)") {
  const auto p = resolve_pair("Sp(3)", "Sp(1)xSp(2)");
  const auto m = multiplets(p);
  CHECK(m.entries.size() == 3);
  CHECK(m.unsigned_sum() == 16);
  CHECK(m.signed_sum() == 0);
}

TEST_CASE("multiplet invariants") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    check_invariants(preset(name));
  }
  for (int n = 2; n <= 6; ++n) check_invariants(resolve_pair("SU(" + std::to_string(n + 1) + ")", "U(" + std::to_string(n) + ")"));
}

TEST_CASE("reordering the small simple roots changes nothing") {
  const auto base = preset("F4/B4");
  const auto ref = signature(multiplets(base));
  auto roots = base.small_simple_roots;
  std::sort(roots.begin(), roots.end());
  int perms = 0;
  do {
    const auto p = make_pair({Family::F, 4}, roots, 0);
    CHECK(signature(multiplets(p)) == ref);
    ++perms;
  } while (std::next_permutation(roots.begin(), roots.end()));
  CHECK(perms == 24);
}

TEST_CASE("spin split under U(n)") {
  const auto s4 = spin_split_under_u(4);
  REQUIRE(s4.size() == 5);
  const std::vector<std::pair<long, int>> want{{1, 1}, {4, -1}, {6, 1}, {4, -1}, {1, 1}};
  for (std::size_t p = 0; p < 5; ++p) {
    CHECK(s4[p].degree == static_cast<int>(p));
    CHECK(s4[p].dim == want[p].first);
    CHECK(s4[p].sign == want[p].second);
  }
  const auto s1 = spin_split_under_u(1);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0].dim == 1);
  CHECK(s1[1].sign == -1);
  for (int n = 1; n <= 12; ++n) {
    BigInt total = 0, binom = 1;
    const auto s = spin_split_under_u(n);
    for (int p = 0; p <= n; ++p) {
      CHECK(s[static_cast<std::size_t>(p)].dim == binom);
      total += s[static_cast<std::size_t>(p)].dim;
      binom = binom * (n - p) / (p + 1);
    }
    CHECK(total == pow2(static_cast<std::size_t>(n)));
  }
  CHECK_THROWS(spin_split_under_u(0));
  CHECK_THROWS(spin_split_under_u(13));
}

TEST_CASE("spin split agrees with the SU(n+1)/U(n) multiplets") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const auto m = multiplets(resolve_pair("SU(" + std::to_string(n + 1) + ")", "U(" + std::to_string(n) + ")"));
    const auto s = spin_split_under_u(n);
    REQUIRE(m.entries.size() == s.size());
    for (std::size_t p = 0; p < s.size(); ++p) {
      CHECK(m.entries[p].dim == s[p].dim);
      CHECK(m.entries[p].sign == s[p].sign);
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(multiplets(resolve_pair("E8", "E8")), CapExceeded);
  CHECK_THROWS_AS(multiplets(preset("F4/B4"), 100), CapExceeded);
  CHECK_THROWS_AS(make_pair({Family::F, 4}, {{1, 0, 0, 0}}, 0), NotEqualRank);
  CHECK_THROWS_AS(make_pair({Family::A, 2}, {{1, 0}, {1, 0}}, 0), InvalidSubgroup);
  CHECK_THROWS_AS(make_pair({Family::A, 2}, {{2, 0}, {0, 1}}, 0), InvalidSubgroup);
  CHECK_THROWS_AS(resolve_pair("F4", "E6"), InvalidSubgroup);
  CHECK_THROWS(preset("nope"));
}

}  // TEST_SUITE
