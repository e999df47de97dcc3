#include "pinch/lattice.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "pinch/errors.hpp"

namespace pinch {

namespace {

void validate_coords(const std::vector<Coord>& coords) {
  if (coords.size() < 2) {
    throw SpecError("exponent vector needs at least 2 coordinates, got " +
                    std::to_string(coords.size()));
  }
  for (Coord c : coords) {
    if (c < 0) throw SpecError("exponent vector coordinates must be nonnegative");
  }
}

}  // namespace

ExponentVector::ExponentVector(std::vector<Coord> coords) : coords_(std::move(coords)) {
  validate_coords(coords_);
}

ExponentVector::ExponentVector(std::initializer_list<Coord> coords) : coords_(coords) {
  validate_coords(coords_);
}

ExponentVector ExponentVector::zero(std::size_t n) { return ExponentVector(std::vector<Coord>(n, 0)); }

Coord ExponentVector::degree() const {
  Coord sum = 0;
  for (Coord c : coords_) sum = checked_add(sum, c);
  return sum;
}

Coord ExponentVector::max() const { return *std::max_element(coords_.begin(), coords_.end()); }

bool ExponentVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c == 0; });
}

bool ExponentVector::dominates(const ExponentVector& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (other.coords_[i] > coords_[i]) return false;
  }
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (other.size() != size()) throw SpecError("adding exponent vectors of different length");
  std::vector<Coord> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = checked_add(coords_[i], other.coords_[i]);
  return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::scaled(Coord factor) const {
  if (factor < 0) throw SpecError("negative scale factor");
  std::vector<Coord> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = checked_mul(coords_[i], factor);
  return ExponentVector(std::move(out));
}

std::optional<ExponentVector> ExponentVector::minus(const ExponentVector& other) const {
  if (!dominates(other)) return std::nullopt;
  std::vector<Coord> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = coords_[i] - other.coords_[i];
  return ExponentVector(std::move(out));
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Coord c : v.coords()) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

ExponentVector parse_exponent_vector(const std::string& text) {
  std::vector<Coord> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw SpecError("empty coordinate in '" + text + "'");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw SpecError("not an integer coordinate: '" + item + "'");
    }
    if (used != item.size()) throw SpecError("not an integer coordinate: '" + item + "'");
    coords.push_back(value);
  }
  return ExponentVector(std::move(coords));
}

Coord checked_add(Coord a, Coord b) {
  Coord out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("exponent arithmetic overflow");
  return out;
}

Coord checked_mul(Coord a, Coord b) {
  Coord out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("exponent arithmetic overflow");
  return out;
}

__extension__ using U128 = unsigned __int128;
__extension__ using I128 = __int128;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  U128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw OverflowError("binomial coefficient overflow");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<ExponentVector> compositions(Coord total, std::size_t parts) {
  std::vector<ExponentVector> out;
  std::vector<Coord> buf(parts, 0);
  std::function<void(std::size_t, Coord)> rec = [&](std::size_t pos, Coord left) {
    if (pos + 1 == parts) {
      buf[pos] = left;
      out.emplace_back(buf);
      return;
    }
    for (Coord v = 0; v <= left; ++v) {
      buf[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (parts >= 2 && total >= 0) rec(0, total);
  return out;
}

ExponentVector perturb(const ExponentVector& a, std::size_t i, std::size_t j) {
  if (i >= a.size() || j >= a.size()) throw SpecError("perturbation index out of range");
  if (i == j) throw SpecError("perturbation needs distinct indices");
  if (a[j] == 0) {
    throw SpecError("perturbation would leave N^n: coordinate " + std::to_string(j + 1) + " is 0");
  }
  std::vector<Coord> out(a.coords().begin(), a.coords().end());
  out[i] = checked_add(out[i], 1);
  out[j] -= 1;
  return ExponentVector(std::move(out));
}

GeneratorSet veronese_generators(std::size_t n, Coord d) {
  if (n < 2) throw SpecError("need n >= 2, got " + std::to_string(n));
  if (d < 2) throw SpecError("need d >= 2, got " + std::to_string(d));
  return GeneratorSet{n, d, compositions(d, n)};
}

const char* to_string(SpecKind kind) {
  switch (kind) {
    case SpecKind::FullVeronese: return "full-veronese";
    case SpecKind::SinglePinch: return "single-pinch";
    case SpecKind::MultiPinch: return "multipinch";
  }
  return "?";
}

const ExponentVector& SemigroupSpec::pinched() const {
  if (kind_ != SpecKind::SinglePinch) throw SpecError("spec is not a single pinch");
  return removed_.front();
}

std::string SemigroupSpec::describe() const {
  std::string s = "n=" + std::to_string(n_) + " d=" + std::to_string(d_) + " " + to_string(kind_);
  if (!removed_.empty()) {
    s += " removed={";
    for (std::size_t i = 0; i < removed_.size(); ++i) {
      if (i) s += ",";
      s += removed_[i].to_string();
    }
    s += "}";
  }
  return s;
}

SemigroupSpec pinch_spec(std::size_t n, Coord d, std::vector<ExponentVector> removed,
                         bool as_multipinch) {
  GeneratorSet all = veronese_generators(n, d);
  for (const auto& m : removed) {
    if (m.size() != n) {
      throw SpecError("removed vector " + m.to_string() + " has length " +
                      std::to_string(m.size()) + ", expected n=" + std::to_string(n));
    }
    if (m.degree() != d) {
      throw SpecError("removed vector " + m.to_string() + " has degree " +
                      std::to_string(m.degree()) + ", expected d=" + std::to_string(d));
    }
  }
  std::sort(removed.begin(), removed.end());
  if (std::adjacent_find(removed.begin(), removed.end()) != removed.end()) {
    throw SpecError("removed vectors must be distinct");
  }

  SemigroupSpec spec;
  spec.n_ = n;
  spec.d_ = d;
  if (removed.empty()) {
    if (as_multipinch) throw SpecError("multipinch needs at least one removed vector");
    spec.kind_ = SpecKind::FullVeronese;
  } else if (removed.size() == 1 && !as_multipinch) {
    spec.kind_ = SpecKind::SinglePinch;
  } else {
    spec.kind_ = SpecKind::MultiPinch;
    if (d <= 2) throw SpecError("multipinch requires d > 2, got d=" + std::to_string(d));
    for (const auto& m : removed) {
      if (m.max() >= d - 1) {
        throw SpecError("multipinch removed vector " + m.to_string() + " has max " +
                        std::to_string(m.max()) + " >= d-1=" + std::to_string(d - 1));
      }
    }
  }

  std::set_difference(all.members.begin(), all.members.end(), removed.begin(), removed.end(),
                      std::back_inserter(spec.generators_));
  if (spec.generators_.empty()) throw SpecError("no generators left after removal");
  spec.removed_ = std::move(removed);
  return spec;
}

std::vector<ExponentVector> multipinch_candidates(std::size_t n, Coord d) {
  std::vector<ExponentVector> out;
  for (auto& v : veronese_generators(n, d).members) {
    if (v.max() < d - 1) out.push_back(std::move(v));
  }
  return out;
}

namespace {

// Bareiss elimination, exact for the small matrices used here.
U128 abs128(I128 x) { return x < 0 ? static_cast<U128>(-x) : static_cast<U128>(x); }

I128 determinant(std::vector<std::vector<I128>> m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  I128 sign = 1, prev = 1;
  for (std::size_t c = 0; c + 1 < k; ++c) {
    if (m[c][c] == 0) {
      std::size_t r = c + 1;
      while (r < k && m[r][c] == 0) ++r;
      if (r == k) return 0;
      std::swap(m[c], m[r]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < k; ++i) {
      for (std::size_t j = c + 1; j < k; ++j) {
        m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
      }
    }
    prev = m[c][c];
  }
  return sign * m[k - 1][k - 1];
}

}  // namespace

GeneratorCone::GeneratorCone(const std::vector<ExponentVector>& generators) {
  if (generators.empty()) throw SpecError("cone needs at least one generator");
  const std::size_t n = generators.front().size();
  // Every axis ray present means the cone is the whole orthant.
  std::size_t axis_rays = 0;
  for (const auto& g : generators) {
    if (std::count(g.coords().begin(), g.coords().end(), 0) == static_cast<std::ptrdiff_t>(n - 1)) ++axis_rays;
  }
  if (axis_rays == n) {
    orthant_ = true;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Coord> e(n, 0);
      e[i] = 1;
      facets_.push_back(std::move(e));
    }
    std::sort(facets_.begin(), facets_.end());
    return;
  }

  const std::size_t g = generators.size();
  const std::size_t pick = n - 1;
  if (binomial(g, pick) > 20'000'000) throw ResourceError("cone facet enumeration too large");

  std::set<std::vector<Coord>> found;
  std::vector<std::size_t> idx(pick);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    // Normal to the span of the chosen rows, via signed maximal minors.
    std::vector<I128> normal(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::vector<std::vector<I128>> minor(pick, std::vector<I128>());
      for (std::size_t r = 0; r < pick; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          if (c != col) minor[r].push_back(generators[idx[r]][c]);
        }
      }
      I128 det = determinant(std::move(minor));
      normal[col] = (col % 2 == 0) ? det : -det;
    }
    if (std::any_of(normal.begin(), normal.end(), [](I128 x) { return x != 0; })) {
      bool pos = false, neg = false;
      for (const auto& gen : generators) {
        I128 dot = 0;
        for (std::size_t c = 0; c < n; ++c) dot += normal[c] * gen[c];
        pos = pos || dot > 0;
        neg = neg || dot < 0;
      }
      if (!(pos && neg)) {
        U128 common = 0;
        for (auto x : normal) common = std::gcd(common, abs128(x));
        std::vector<Coord> primitive(n);
        for (std::size_t c = 0; c < n; ++c) {
          I128 v = normal[c] / static_cast<I128>(common);
          primitive[c] = static_cast<Coord>(neg ? -v : v);
        }
        found.insert(std::move(primitive));
      }
    }
    std::size_t k = pick;
    while (k > 0 && idx[k - 1] == g - pick + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  facets_.assign(found.begin(), found.end());
}

bool GeneratorCone::contains(const ExponentVector& v) const {
  for (const auto& f : facets_) {
    if (f.size() != v.size()) return false;
    I128 dot = 0;
    for (std::size_t c = 0; c < f.size(); ++c) dot += static_cast<I128>(f[c]) * v[c];
    if (dot < 0) return false;
  }
  return true;
}

}  // namespace pinch
