#include "segalkit/homology.hpp"

#include <algorithm>

namespace segalkit {

bool IntMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Integer& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix product: shapes do not match");
  IntMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

std::size_t ChainComplex::rank(int d) const {
  if (d < 0 || d > top()) return 0;
  return generators[static_cast<std::size_t>(d)].size();
}

IntMatrix ChainComplex::d(int degree) const {
  if (degree >= 0 && degree <= top()) return boundary[static_cast<std::size_t>(degree)];
  return IntMatrix(rank(degree - 1), rank(degree));
}

bool ChainComplex::squares_to_zero() const {
  for (int k = 2; k <= top(); ++k)
    if (!(d(k - 1) * d(k)).is_zero()) return false;
  return true;
}

ChainComplex chain_complex(const FinSSet& x) {
  ChainComplex c;
  const int top = x.empty() ? -1 : x.dimension()[0];
  std::vector<std::size_t> index(x.size());
  for (int d = 0; d <= top; ++d) {
    auto gens = x.generators_of_degree({d});
    for (std::size_t i = 0; i < gens.size(); ++i) index[gens[i]] = i;
    c.generators.push_back(std::move(gens));
  }
  for (int d = 0; d <= top; ++d) {
    const auto& gens = c.generators[static_cast<std::size_t>(d)];
    IntMatrix m(d == 0 ? 0 : c.generators[static_cast<std::size_t>(d - 1)].size(), gens.size());
    if (d > 0) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        Simplex s = x.generator_cell(gens[j]);
        for (int i = 0; i <= d; ++i) {
          Simplex f = x.face(s, 0, i);
          if (!f.is_generator()) continue;
          m.at(index[f.gen], j) += (i % 2 == 0) ? 1 : -1;
        }
      }
    }
    c.boundary.push_back(std::move(m));
  }
  return c;
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (auto& v : diagonal)
    if (v > 1) out.push_back(v);
  return out;
}

SmithForm smith_normal_form(IntMatrix m) {
  using boost::multiprecision::abs;
  const std::size_t rows = m.rows, cols = m.cols;
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
  };
  SmithForm out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Pivot of least magnitude in the remaining block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m.at(i, j) != 0 && (pr == rows || abs(m.at(i, j)) < abs(m.at(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;
      swap_rows(t, pr);
      swap_cols(t, pc);
      const Integer p = m.at(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m.at(i, t) == 0) continue;
        Integer q = m.at(i, t) / p;
        for (std::size_t j = t; j < cols; ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m.at(t, j) == 0) continue;
        Integer q = m.at(t, j) / p;
        for (std::size_t i = t; i < rows; ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m.at(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad == rows) {
        out.diagonal.push_back(abs(p));
        break;
      }
      for (std::size_t j = t; j < cols; ++j) m.at(t, j) += m.at(bad, j);
    }
    if (out.diagonal.size() <= t) break;
  }
  return out;
}

std::string HomologyGroup::to_string() const {
  std::string s;
  if (betti > 0) s = betti == 1 ? "Z" : "Z^" + std::to_string(betti);
  for (auto& t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + t.str());
  return s.empty() ? "0" : s;
}

HomologyGroup homology(const ChainComplex& c, int d) {
  HomologyGroup h;
  if (d < 0) return h;
  auto in = smith_normal_form(c.d(d + 1));
  const std::size_t rank_out = d == 0 ? 0 : smith_normal_form(c.d(d)).rank();
  h.betti = c.rank(d) - rank_out - in.rank();
  h.torsion = in.invariant_factors();
  return h;
}

HomologyGroup homology(const FinSSet& x, int d) { return homology(chain_complex(x), d); }

std::vector<HomologyGroup> homology_upto(const FinSSet& x, int top) {
  auto c = chain_complex(x);
  std::vector<HomologyGroup> out;
  for (int d = 0; d <= top; ++d) out.push_back(homology(c, d));
  return out;
}

IntMatrix chain_map(const SSetMap& f, const ChainComplex& cx, const ChainComplex& cy, int d) {
  IntMatrix m(cy.rank(d), cx.rank(d));
  if (d > cx.top()) return m;
  std::vector<std::size_t> index(f.target().size());
  if (d <= cy.top()) {
    const auto& gy = cy.generators[static_cast<std::size_t>(d)];
    for (std::size_t i = 0; i < gy.size(); ++i) index[gy[i]] = i;
  }
  const auto& gx = cx.generators[static_cast<std::size_t>(d)];
  for (std::size_t j = 0; j < gx.size(); ++j) {
    const Simplex& img = f.assignment()[gx[j]];
    if (img.is_generator()) m.at(index[img.gen], j) = 1;
  }
  return m;
}

std::string to_string(WeVerdict v) { return v == WeVerdict::RefutedWE ? "RefutedWE" : "Consistent"; }

WeReport we_necessary(const SSetMap& f, int bound) {
  WeReport rep;
  rep.bound = bound;
  auto cx = pi0(f.source());
  auto cy = pi0(f.target());
  auto map = pi0_map(f);
  std::vector<bool> hit(cy.count(), false);
  bool injective = true;
  for (int c : map) {
    if (hit[static_cast<std::size_t>(c)]) injective = false;
    hit[static_cast<std::size_t>(c)] = true;
  }
  if (!injective || std::find(hit.begin(), hit.end(), false) != hit.end()) {
    rep.verdict = WeVerdict::RefutedWE;
    rep.reason = "pi_0: " + std::to_string(cx.count()) + " components map to " + std::to_string(cy.count()) +
                 (injective ? " without hitting all" : " non-injectively");
    return rep;
  }

  // Cone_d = C_{d-1}(X) + C_d(Y), d(x, y) = (-dx, f(x) + dy).
  auto chx = chain_complex(f.source());
  auto chy = chain_complex(f.target());
  auto cone_d = [&](int d) {
    const std::size_t sx = chx.rank(d - 1), sy = chy.rank(d);
    const std::size_t tx = chx.rank(d - 2), ty = chy.rank(d - 1);
    IntMatrix m(tx + ty, sx + sy);
    IntMatrix dx = chx.d(d - 1), dy = chy.d(d), fx = chain_map(f, chx, chy, d - 1);
    for (std::size_t i = 0; i < tx; ++i)
      for (std::size_t j = 0; j < sx; ++j) m.at(i, j) = -dx.at(i, j);
    for (std::size_t i = 0; i < ty; ++i) {
      for (std::size_t j = 0; j < sx; ++j) m.at(tx + i, j) = fx.at(i, j);
      for (std::size_t j = 0; j < sy; ++j) m.at(tx + i, sx + j) = dy.at(i, j);
    }
    return m;
  };
  for (int d = 0; d <= bound + 1; ++d) {
    const std::size_t rank_here = chx.rank(d - 1) + chy.rank(d);
    const std::size_t out = d == 0 ? 0 : smith_normal_form(cone_d(d)).rank();
    auto in = smith_normal_form(cone_d(d + 1));
    const std::size_t betti = rank_here - out - in.rank();
    if (betti > 0 || !in.invariant_factors().empty()) {
      rep.verdict = WeVerdict::RefutedWE;
      rep.reason = "mapping cone has homology in degree " + std::to_string(d) + ": H_" + std::to_string(d) +
                   (d == 0 ? " is not an isomorphism" : " or H_" + std::to_string(d - 1) + " is not an isomorphism");
      return rep;
    }
  }
  return rep;
}

}  // namespace segalkit
