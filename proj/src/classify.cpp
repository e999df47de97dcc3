#include "pinch/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "pinch/errors.hpp"
#include "pinch/layer_kernel.hpp"

namespace pinch {

const char* to_string(Tristate t) {
  switch (t) {
    case Tristate::Yes: return "yes";
    case Tristate::No: return "no";
    case Tristate::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(Normalization t) {
  switch (t) {
    case Normalization::SelfNormal: return "self-normal";
    case Normalization::NormalizedByVeronese: return "normalized-by-veronese";
    case Normalization::RegularSpecialCase: return "regular-special-case";
  }
  return "?";
}

Normalization normalization_type(const SemigroupSpec& spec) {
  switch (spec.kind()) {
    case SpecKind::FullVeronese: return Normalization::SelfNormal;
    case SpecKind::MultiPinch: return Normalization::NormalizedByVeronese;
    case SpecKind::SinglePinch: break;
  }
  const Coord top = spec.pinched().max();
  if (top == spec.d()) return Normalization::SelfNormal;
  if (spec.n() == 2 && spec.d() == 2) return Normalization::RegularSpecialCase;
  return Normalization::NormalizedByVeronese;
}

int depth(const SemigroupSpec& spec) {
  const int n = static_cast<int>(spec.n());
  switch (spec.kind()) {
    case SpecKind::FullVeronese: return n;
    case SpecKind::MultiPinch: return 1;
    case SpecKind::SinglePinch: break;
  }
  const Coord d = spec.d();
  const Coord top = spec.pinched().max();
  if (top == d) return n;
  if (n > 2 && d == 2 && top == 1) return 3;
  if (top == d - 1) return 2;
  return 1;
}

ClassificationReport classify(const SemigroupSpec& spec) {
  ClassificationReport r;
  const std::size_t n = spec.n();
  const Coord d = spec.d();
  r.dimension = n;
  r.depth = depth(spec);
  r.cohen_macaulay = r.depth == static_cast<int>(n);
  r.normalization = normalization_type(spec);

  if (spec.kind() == SpecKind::FullVeronese) {
    r.generalized_cm = true;
    r.gorenstein = n % static_cast<std::size_t>(d) == 0 ? Tristate::Yes : Tristate::No;
    r.complete_intersection = r.gorenstein == Tristate::No ? Tristate::No : Tristate::Unknown;
    r.rules = {"depth: V_{n,d} is normal, hence Cohen-Macaulay",
               "gorenstein: V_{n,d} is Gorenstein iff d divides n"};
    return r;
  }

  if (spec.kind() == SpecKind::MultiPinch) {
    r.generalized_cm = true;
    r.gorenstein = Tristate::No;
    r.complete_intersection = Tristate::No;
    r.rules = {"depth: multipinch cokernel is finite dimensional, so depth is 1",
               "normalization: every x_i^d survives and the gap set is finite, so V_{n,d}",
               "gorenstein/ci: not Cohen-Macaulay"};
    return r;
  }

  const Coord top = spec.pinched().max();
  if (top == d) {
    r.rules.push_back("depth: max(m)=d gives a normal semigroup, depth n");
  } else if (n > 2 && d == 2 && top == 1) {
    r.rules.push_back("depth: d=2, max(m)=1, n>2: x1^2, x2^2 is a maximal regular sequence on the cokernel, depth 3");
  } else if (top == d - 1 && n == 2) {
    r.rules.push_back("depth: n=2, max(m)=d-1: both x^d and y^d are regular, depth 2");
  } else if (top == d - 1) {
    r.rules.push_back("depth: max(m)=d-1: the cokernel is one-dimensional along a coordinate line, depth 2");
  } else {
    r.rules.push_back("depth: max(m)<d-1: cokernel is Artinian, depth 1");
  }
  r.generalized_cm = r.cohen_macaulay || top < d - 1;
  if (top < d - 1) r.rules.push_back("generalized-cm: lower local cohomology has finite length");

  if (!r.cohen_macaulay) {
    r.gorenstein = Tristate::No;
    r.complete_intersection = Tristate::No;
    r.rules.push_back("cohen-macaulay: fails the max(m)=d / n=2,max(m)=d-1 / n=3,d=2,max(m)=1 criterion");
    return r;
  }
  r.rules.push_back("cohen-macaulay: meets the max(m)=d / n=2,max(m)=d-1 / n=3,d=2,max(m)=1 criterion");

  if (n == 2 && top == d - 1) {
    r.gorenstein = Tristate::Yes;
    r.a_invariant = a_invariant(quotient_basis(spec));
    r.rules.push_back("gorenstein: P/(x^d,y^d) has a one-dimensional socle spanned by x^{d-1}y^{d+1}");
  } else if (n == 3 && d == 2 && top == 1) {
    r.gorenstein = Tristate::Yes;
    r.rules.push_back("gorenstein: complete intersection (ae-b^2, ce-d^2)");
  } else if (n == 2 && top == d) {
    r.gorenstein = (d == 2 || d == 3) ? Tristate::Yes : Tristate::No;
    r.rules.push_back("gorenstein: P_{2,d,(d,0)} is isomorphic to V_{2,d-1}, Gorenstein iff d in {2,3}");
  } else {
    r.gorenstein = Tristate::Unknown;
    r.rules.push_back("gorenstein: not determined for n>2, max(m)=d");
  }

  if (n == 3 && d == 2 && top == 1) {
    r.complete_intersection = Tristate::Yes;
    r.rules.push_back("complete-intersection: kernel of the presentation is (ae-b^2, ce-d^2)");
  } else if (n == 2 && d == 2) {
    r.complete_intersection = Tristate::Yes;
    r.rules.push_back("complete-intersection: regular (a polynomial ring in two variables)");
  } else if (r.gorenstein == Tristate::No) {
    r.complete_intersection = Tristate::No;
  } else {
    r.complete_intersection = Tristate::Unknown;
  }
  return r;
}

QuotientBasis quotient_basis(const SemigroupSpec& spec) {
  if (spec.kind() != SpecKind::SinglePinch || spec.n() != 2 || spec.pinched().max() != spec.d() - 1) {
    throw SpecError("quotient basis needs n=2 and a single pinch with max(m)=d-1");
  }
  const Coord d = spec.d();
  LayerTable table = build_layers_parallel(spec, 3);
  const ExponentVector xd{d, 0};
  const ExponentVector yd{0, d};

  auto in_ideal = [&](const ExponentVector& v) {
    auto a = v.minus(xd);
    auto b = v.minus(yd);
    return (a && table.contains(*a)) || (b && table.contains(*b));
  };

  QuotientBasis qb;
  qb.d = d;
  for (int t = 0; t <= 3; ++t) {
    for (auto& v : table.members(t)) {
      if (in_ideal(v)) continue;
      if (t == 3) {
        throw std::logic_error("quotient basis element " + v.to_string() + " above degree 2d");
      }
      qb.basis.push_back(std::move(v));
    }
  }
  std::sort(qb.basis.begin(), qb.basis.end());
  for (const auto& s : qb.basis) {
    bool annihilated = std::all_of(spec.generators().begin(), spec.generators().end(),
                                   [&](const ExponentVector& g) { return in_ideal(s + g); });
    if (annihilated) qb.socle.push_back(s);
  }
  return qb;
}

std::optional<Coord> a_invariant(const QuotientBasis& qb) {
  if (qb.socle.size() != 1) return std::nullopt;
  return qb.socle.front().degree() - 2 * qb.d;
}

bool relation_holds(const BinomialRelation& rel, const std::vector<ExponentVector>& images) {
  if (rel.lhs.size() != images.size() || rel.rhs.size() != images.size()) {
    throw SpecError("relation arity does not match the presentation");
  }
  auto image_of = [&](const ExponentVector& mono) {
    ExponentVector acc = ExponentVector::zero(images.front().size());
    for (std::size_t k = 0; k < images.size(); ++k) acc = acc + images[k].scaled(mono[k]);
    return acc;
  };
  return image_of(rel.lhs) == image_of(rel.rhs);
}

std::vector<ExponentVector> ci_variable_images() {
  return {{2, 0, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
}

std::vector<BinomialRelation> ci_relations() {
  return {{"ae-b^2", {1, 0, 0, 0, 1}, {0, 2, 0, 0, 0}},
          {"ce-d^2", {0, 0, 1, 0, 1}, {0, 0, 0, 2, 0}}};
}

bool verify_ci_presentation() {
  const auto images = ci_variable_images();
  const auto rels = ci_relations();
  return std::all_of(rels.begin(), rels.end(),
                     [&](const BinomialRelation& r) { return relation_holds(r, images); });
}

ExponentVector lower_veronese_iso(const ExponentVector& v, Coord d) {
  if (v.size() != 2) throw SpecError("lower Veronese map takes vectors of length 2");
  if (d < 2) throw SpecError("need d >= 2");
  if (v.degree() % d != 0) {
    throw SpecError(v.to_string() + " has degree not divisible by d=" + std::to_string(d));
  }
  return ExponentVector{v.degree() / d, v[0]};
}

ExponentVector lower_veronese_coordinates(const ExponentVector& image, Coord d) {
  const Coord t = image[0];
  const Coord k = image[1];
  const Coord total = checked_mul(t, d - 1);
  if (k > total) throw SpecError(image.to_string() + " is outside the image cone");
  return ExponentVector{k, total - k};
}

}  // namespace pinch
