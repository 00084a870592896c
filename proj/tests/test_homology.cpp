#include <random>

#include "doctest.h"
#include "segalkit/homology.hpp"
#include "segalkit/segal.hpp"

using namespace segalkit;

namespace {

HomologyGroup free_part(std::size_t b) { return {b, {}}; }

Integer det(const IntMatrix& m, const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) {
  if (r.size() == 1) return m.at(r[0], c[0]);
  Integer out = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    std::vector<std::size_t> rr(r.begin() + 1, r.end()), cc;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (j != k) cc.push_back(c[j]);
    Integer sub = det(m, rr, cc) * m.at(r[0], c[k]);
    out += (k % 2 == 0) ? sub : Integer(-sub);
  }
  return out;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// gcd of the k x k minors: the k-th determinantal divisor.
Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(m.rows, k, 0, cur, rs);
  subsets(m.cols, k, 0, cur, cs);
  Integer g = 0;
  for (auto& r : rs)
    for (auto& c : cs) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(det(m, r, c)));
  return g;
}

}  // namespace

TEST_CASE("chain complexes") {
  auto c1 = chain_complex(*standard(1));
  CHECK(c1.rank(0) == 2);
  CHECK(c1.rank(1) == 1);
  auto d1 = c1.d(1);
  CHECK(d1.rows == 2);
  CHECK(d1.cols == 1);
  CHECK(((d1.at(0, 0) == -1 && d1.at(1, 0) == 1) || (d1.at(0, 0) == 1 && d1.at(1, 0) == -1)));
  auto b2 = chain_complex(*boundary(2));
  CHECK(b2.rank(0) == 3);
  CHECK(b2.rank(1) == 3);
  for (auto x : {standard(3), boundary(3), horn(3, 1), nerve(cyclic_group(3), 3).object, nerve(parallel_pair()).object})
    CHECK(chain_complex(*x).squares_to_zero());
}

TEST_CASE("Smith normal form") {
  CHECK(smith_normal_form(IntMatrix(3, 2)).rank() == 0);
  IntMatrix two(1, 1);
  two.at(0, 0) = 2;
  CHECK(smith_normal_form(two).invariant_factors() == std::vector<Integer>{2});

  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m(1 + trial % 4, 1 + (trial / 4) % 4);
    for (auto& e : m.entries) e = entry(rng);
    auto s = smith_normal_form(m);
    Integer product = 1;
    for (std::size_t k = 0; k < s.diagonal.size(); ++k) {
      if (k > 0) CHECK(s.diagonal[k] % s.diagonal[k - 1] == 0);
      product *= s.diagonal[k];
      CHECK(product == determinantal_divisor(m, k + 1));
    }
    if (s.rank() < std::min(m.rows, m.cols)) CHECK(determinantal_divisor(m, s.rank() + 1) == 0);
  }

  IntMatrix big(2, 2);
  big.at(0, 0) = Integer("123456789012345678901234567890");
  big.at(1, 1) = Integer("987654321098765432109876543210");
  auto s = smith_normal_form(big);
  CHECK(s.rank() == 2);
  CHECK(s.diagonal[0] * s.diagonal[1] == big.at(0, 0) * big.at(1, 1));
}

TEST_CASE("homology of standard objects") {
  CHECK(homology(*boundary(2), 0) == free_part(1));
  CHECK(homology(*boundary(2), 1) == free_part(1));
  CHECK(homology(*boundary(3), 2) == free_part(1));
  CHECK(homology(*boundary(3), 1) == free_part(0));
  for (int n = 0; n <= 3; ++n)
    for (int d = 0; d <= 3; ++d) CHECK(homology(*standard(n), d) == free_part(d == 0 ? 1 : 0));
  auto z3 = homology(*nerve(cyclic_group(3), 2).object, 1);
  CHECK(z3.betti == 0);
  CHECK(z3.torsion == std::vector<Integer>{3});
  CHECK(z3.to_string() == "Z/3");

  // Euler characteristic, and additivity on disjoint unions.
  for (auto x : {boundary(3), horn(3, 2), nerve(parallel_pair()).object, nerve(cyclic_group(2), 4).object}) {
    auto c = chain_complex(*x);
    long chi_cells = 0, chi_betti = 0;
    for (int d = 0; d <= c.top(); ++d) {
      long sign = d % 2 == 0 ? 1 : -1;
      chi_cells += sign * static_cast<long>(c.rank(d));
      chi_betti += sign * static_cast<long>(homology(c, d).betti);
    }
    CHECK(chi_cells == chi_betti);
    auto sum = coproduct<1>({x, boundary(2)}).object;
    for (int d = 0; d <= 3; ++d) {
      auto hx = homology(*x, d), hy = homology(*boundary(2), d), hs = homology(*sum, d);
      CHECK(hs.betti == hx.betti + hy.betti);
      auto t = hx.torsion;
      t.insert(t.end(), hy.torsion.begin(), hy.torsion.end());
      std::sort(t.begin(), t.end());
      auto ts = hs.torsion;
      std::sort(ts.begin(), ts.end());
      CHECK(t == ts);
    }
  }
}

TEST_CASE("weak equivalence refutation") {
  CHECK(we_necessary(SSetMap::identity(boundary(3)), 3).verdict == WeVerdict::Consistent);
  auto collapse = to_point<1>(boundary(1));
  auto r = we_necessary(collapse, 2);
  CHECK(r.verdict == WeVerdict::RefutedWE);
  CHECK(r.reason.find("pi_0") != std::string::npos);
  auto incl = standard_inclusion(boundary(2), 2);
  auto r2 = we_necessary(incl, 2);
  CHECK(r2.verdict == WeVerdict::RefutedWE);
  CHECK(r2.reason.find("degree 2") != std::string::npos);
  CHECK(we_necessary(standard_inclusion(horn(2, 1), 2), 3).verdict == WeVerdict::Consistent);
  CHECK(we_necessary(to_point<1>(standard(3)), 3).verdict == WeVerdict::Consistent);

  // Composites of consistent maps stay consistent.
  auto h = standard_inclusion(horn(3, 0), 3);
  auto p = to_point<1>(standard(3));
  CHECK(we_necessary(h, 3).verdict == WeVerdict::Consistent);
  CHECK(we_necessary(compose(p, h), 3).verdict == WeVerdict::Consistent);
}
