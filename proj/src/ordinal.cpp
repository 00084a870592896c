#include "segalkit/ordinal.hpp"

#include <algorithm>
#include <sstream>

namespace segalkit {

namespace {

void check_length(std::size_t n) {
  if (n == 0 || n > static_cast<std::size_t>(OrdinalMap::kMaxLength)) {
    throw RangeError("ordinal map length " + std::to_string(n) + " outside [1, " +
                     std::to_string(OrdinalMap::kMaxLength) + "]");
  }
}

}  // namespace

OrdinalMap::OrdinalMap(int cod, std::span<const int> values) {
  check_length(values.size());
  if (cod < 0 || cod >= kMaxLength) throw RangeError("ordinal codomain out of range");
  cod_ = static_cast<std::uint8_t>(cod);
  size_ = static_cast<std::uint8_t>(values.size());
  int prev = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    int v = values[i];
    if (v < 0 || v > cod) throw RangeError("ordinal map value out of range");
    if (v < prev) throw RangeError("ordinal map values must be weakly increasing");
    prev = v;
    values_[i] = static_cast<std::uint8_t>(v);
  }
}

OrdinalMap::OrdinalMap(int cod, std::initializer_list<int> values)
    : OrdinalMap(cod, std::span<const int>(values.begin(), values.size())) {}

OrdinalMap OrdinalMap::identity(int n) {
  if (n < 0) throw RangeError("negative ordinal");
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
  return OrdinalMap(n, v);
}

std::vector<int> OrdinalMap::values() const {
  return std::vector<int>(values_.begin(), values_.begin() + size_);
}

bool OrdinalMap::is_identity() const {
  if (dom() != cod()) return false;
  for (int i = 0; i <= dom(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

bool OrdinalMap::is_injective() const {
  for (int i = 0; i < dom(); ++i)
    if ((*this)(i) == (*this)(i + 1)) return false;
  return true;
}

bool OrdinalMap::is_surjective() const {
  if ((*this)(0) != 0 || (*this)(dom()) != cod()) return false;
  for (int i = 0; i < dom(); ++i)
    if ((*this)(i + 1) - (*this)(i) > 1) return false;
  return true;
}

bool operator<(const OrdinalMap& a, const OrdinalMap& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  if (a.cod_ != b.cod_) return a.cod_ < b.cod_;
  return std::lexicographical_compare(a.values_.begin(), a.values_.begin() + a.size_,
                                      b.values_.begin(), b.values_.begin() + b.size_);
}

std::size_t OrdinalMap::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL ^ (static_cast<std::size_t>(cod_) << 8) ^ size_;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= values_[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string OrdinalMap::to_string() const {
  std::ostringstream os;
  os << '[' << dom() << "]->[" << cod() << "](";
  for (int i = 0; i <= dom(); ++i) os << (i ? "," : "") << (*this)(i);
  os << ')';
  return os.str();
}

OrdinalMap compose(const OrdinalMap& g, const OrdinalMap& f) {
  if (f.cod() != g.dom()) {
    throw RangeError("compose: dimension mismatch " + g.to_string() + " o " + f.to_string());
  }
  std::array<int, OrdinalMap::kMaxLength> v{};
  for (int i = 0; i <= f.dom(); ++i) v[static_cast<std::size_t>(i)] = g(f(i));
  return OrdinalMap(g.cod(), std::span<const int>(v.data(), static_cast<std::size_t>(f.dom()) + 1));
}

OrdinalMap face(int i, int n) {
  if (n < 1 || i < 0 || i > n) throw RangeError("face: index out of range");
  std::vector<int> v;
  for (int k = 0; k <= n; ++k)
    if (k != i) v.push_back(k);
  return OrdinalMap(n, v);
}

OrdinalMap degeneracy(int i, int n) {
  if (n < 0 || i < 0 || i > n) throw RangeError("degeneracy: index out of range");
  std::vector<int> v;
  for (int k = 0; k <= n + 1; ++k) v.push_back(k <= i ? k : k - 1);
  return OrdinalMap(n, v);
}

OrdinalMap delta_tuple(std::span<const int> ks, int n) {
  if (ks.empty()) throw RangeError("delta_tuple: empty tuple");
  return OrdinalMap(n, ks);
}

OrdinalMap delta_tuple(std::initializer_list<int> ks, int n) {
  return delta_tuple(std::span<const int>(ks.begin(), ks.size()), n);
}

OrdinalMap shift(int i, int m, int n) {
  if (m < 0 || i < 0 || i > n - m) throw RangeError("shift: index out of range");
  std::vector<int> v;
  for (int k = 0; k <= m; ++k) v.push_back(k + i);
  return OrdinalMap(n, v);
}

OrdinalMap face2(int i, int j, int n) {
  if (n < 2 || i < 0 || i >= j || j > n) throw RangeError("face2: index out of range");
  std::vector<int> v;
  for (int k = 0; k <= n; ++k)
    if (k != i && k != j) v.push_back(k);
  return OrdinalMap(n, v);
}

OrdinalMap opposite(const OrdinalMap& tau) {
  const int n = tau.dom();
  const int m = tau.cod();
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(n - i)] = m - tau(i);
  return OrdinalMap(m, v);
}

OrdinalMap twist(const OrdinalMap& tau) {
  const int n = tau.dom();
  const int m = tau.cod();
  std::vector<int> v(static_cast<std::size_t>(2 * n + 2));
  for (int i = 0; i <= n; ++i) {
    v[static_cast<std::size_t>(n - i)] = m - tau(i);
    v[static_cast<std::size_t>(n + 1 + i)] = m + 1 + tau(i);
  }
  return OrdinalMap(2 * m + 1, v);
}

OrdinalMap cone_shift(const OrdinalMap& tau) {
  std::vector<int> v{0};
  for (int i = 0; i <= tau.dom(); ++i) v.push_back(tau(i) + 1);
  return OrdinalMap(tau.cod() + 1, v);
}

EpiMono epi_mono_factor(const OrdinalMap& tau) {
  std::vector<int> image;
  std::vector<int> surj;
  for (int i = 0; i <= tau.dom(); ++i) {
    if (image.empty() || image.back() != tau(i)) image.push_back(tau(i));
    surj.push_back(static_cast<int>(image.size()) - 1);
  }
  const int k = static_cast<int>(image.size()) - 1;
  return {OrdinalMap(k, surj), OrdinalMap(tau.cod(), image)};
}

namespace {

void enumerate_rec(int n, int m, int pos, int lo, std::vector<int>& cur,
                   std::vector<OrdinalMap>& out) {
  if (pos > n) {
    out.emplace_back(m, cur);
    return;
  }
  for (int v = lo; v <= m; ++v) {
    cur[static_cast<std::size_t>(pos)] = v;
    enumerate_rec(n, m, pos + 1, v, cur, out);
  }
}

}  // namespace

std::vector<OrdinalMap> enumerate_maps(int n, int m) {
  if (n < 0 || m < 0) throw RangeError("enumerate_maps: negative ordinal");
  std::vector<OrdinalMap> out;
  std::vector<int> cur(static_cast<std::size_t>(n) + 1);
  enumerate_rec(n, m, 0, 0, cur, out);
  return out;
}

std::vector<OrdinalMap> enumerate_surjections(int n, int k) {
  std::vector<OrdinalMap> out;
  if (k > n || k < 0 || n < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(n) + 1, 0);
  // value at position j is cur[j]; each step either stays or increments
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      if (cur[static_cast<std::size_t>(j)] == k) out.emplace_back(k, cur);
      return;
    }
    int v = cur[static_cast<std::size_t>(j)];
    if (k - v <= n - j - 1) {
      cur[static_cast<std::size_t>(j) + 1] = v;
      rec(j + 1);
    }
    if (v < k) {
      cur[static_cast<std::size_t>(j) + 1] = v + 1;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<OrdinalMap> enumerate_injections(int k, int n) {
  std::vector<OrdinalMap> out;
  if (k > n || k < 0 || n < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(k) + 1, 0);
  std::function<void(int, int)> rec = [&](int j, int lo) {
    if (j > k) {
      out.emplace_back(n, cur);
      return;
    }
    for (int v = lo; v <= n - (k - j); ++v) {
      cur[static_cast<std::size_t>(j)] = v;
      rec(j + 1, v + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::string normal_word(const OrdinalMap& tau) {
  auto [surj, inj] = epi_mono_factor(tau);
  std::ostringstream os;
  bool first = true;
  auto emit = [&](char c, int i) {
    os << (first ? "" : " ") << c << i;
    first = false;
  };
  std::vector<int> missing;
  int next = 0;
  for (int v = 0; v <= inj.cod(); ++v) {
    if (next <= inj.dom() && inj(next) == v) {
      ++next;
    } else {
      missing.push_back(v);
    }
  }
  for (auto it = missing.rbegin(); it != missing.rend(); ++it) emit('d', *it);
  for (int j = 0; j < surj.dom(); ++j)
    if (surj(j) == surj(j + 1)) emit('s', j);
  return first ? "id" : os.str();
}

DeltaFunctor DeltaFunctor::identity() {
  return {"id", [](int n) { return n; }, [](const OrdinalMap& t) { return t; },
          [](int top) { return top; }};
}

DeltaFunctor DeltaFunctor::opposite() {
  return {"opposite", [](int n) { return n; },
          [](const OrdinalMap& t) { return segalkit::opposite(t); }, [](int top) { return top; }};
}

DeltaFunctor DeltaFunctor::twist() {
  return {"twist", [](int n) { return 2 * n + 1; },
          [](const OrdinalMap& t) { return segalkit::twist(t); },
          // A cell of level 2n+1 that avoids every mirrored degeneracy pair
          // collapses at most n+1 adjacencies, so n cannot exceed the top
          // dimension of the input.
          [](int top) { return top; }};
}

bool is_functorial(const DeltaFunctor& phi, int size) {
  for (int n = 0; n <= size; ++n) {
    auto id = phi.on_arrows(OrdinalMap::identity(n));
    if (!(id == OrdinalMap::identity(phi.on_objects(n)))) return false;
  }
  for (int a = 0; a <= size; ++a)
    for (int b = 0; b <= size; ++b)
      for (int c = 0; c <= size; ++c)
        for (auto& f : enumerate_maps(a, b))
          for (auto& g : enumerate_maps(b, c)) {
            auto lhs = phi.on_arrows(compose(g, f));
            auto rhs = compose(phi.on_arrows(g), phi.on_arrows(f));
            if (!(lhs == rhs)) return false;
            if (lhs.dom() != phi.on_objects(a) || lhs.cod() != phi.on_objects(c)) return false;
          }
  return true;
}

}  // namespace segalkit
