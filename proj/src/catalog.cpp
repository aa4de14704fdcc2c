#include "chow/catalog.hpp"

#include <algorithm>

#include "chow/error.hpp"

namespace chow {

namespace {

Monomial mono(size_t ngens, std::initializer_list<std::pair<size_t, int>> exps) {
  std::vector<int> v(ngens, 0);
  for (const auto& [i, e] : exps) v[i] = e;
  return Monomial(std::move(v));
}

TermMap term(const Monomial& m, Rational c) {
  TermMap t;
  if (!c.is_zero()) t.emplace(m, std::move(c));
  return t;
}

/// (1 + c1)^e truncated, for building tangent classes out of line factors.
GradedClass total_power(const GradedClass& one_plus, int e) {
  GradedClass acc = one_plus.ring()->one();
  for (int i = 0; i < e; ++i) acc = acc * one_plus;
  return acc;
}

void register_generators(VarietyModel& X) {
  for (size_t i = 0; i < X.ring->generator_count(); ++i)
    X.named_classes.emplace(X.ring->generators()[i].name, X.ring->generator_class(i));
}

void check_noether_inputs(const VarietyModel& X) {
  // Degree sanity shared by every catalog constructor.
  if (X.degree < 1) inconsistent("catalog variety with degree < 1");
}

}  // namespace

VarietyPtr projective_space(int n) {
  if (n < 1) unsupported("projective_space requires n >= 1");
  RingPresentation::Builder b;
  b.generator("h", 1).dimension(n);
  b.rule(mono(1, {{0, n + 1}}), {});
  b.integral(mono(1, {{0, n}}), Rational(1));
  RingPtr ring = b.build();

  auto X = std::make_shared<VarietyModel>();
  X->name = "P" + std::to_string(n);
  X->ring = ring;
  X->dim = n;
  GradedClass h = ring->generator_class(0);
  X->hyperplane = h;
  X->canonical = Rational(-(n + 1)) * h;
  X->tangent_chern = total_power(ring->one() + h, n + 1);
  X->degree = 1;
  register_generators(*X);
  check_noether_inputs(*X);
  return X;
}

VarietyPtr quadric(int n) {
  if (n < 2) unsupported("quadric requires n >= 2");
  const int m = n / 2;
  RingPresentation::Builder b;
  auto X = std::make_shared<VarietyModel>();

  if (n % 2 == 0) {
    // Generators H (degree 1) and a (degree m); the companion middle class is
    // b = H^m - a. Same-family self-intersection is a point when m is even,
    // zero when m is odd, and the cross term is the complement.
    b.generator("H", 1).generator("a", m).dimension(n);
    b.rule(mono(2, {{0, m + 1}}), term(mono(2, {{0, 1}, {1, 1}}), Rational(2)));
    if (m % 2 == 0) {
      b.rule(mono(2, {{1, 2}}), term(mono(2, {{0, m}, {1, 1}}), Rational(1)));
    } else {
      b.rule(mono(2, {{1, 2}}), {});
    }
    b.integral(mono(2, {{0, m}, {1, 1}}), Rational(1));
    X->ring = b.build();
    GradedClass a = X->ring->generator_class(1);
    GradedClass H = X->ring->generator_class(0);
    X->named_classes.emplace("b", H.pow(m) - a);
  } else {
    // Generators H (degree 1) and the linear-space class b (degree m+1), with
    // H^{m+1} = 2b.
    b.generator("H", 1).generator("b", m + 1).dimension(n);
    b.rule(mono(2, {{0, m + 1}}), term(mono(2, {{1, 1}}), Rational(2)));
    b.integral(mono(2, {{0, m}, {1, 1}}), Rational(1));
    X->ring = b.build();
  }

  X->name = "Q" + std::to_string(n);
  X->dim = n;
  X->is_quadric = true;
  X->quadric_middle = m;
  GradedClass H = X->ring->generator_class(0);
  X->hyperplane = H;
  X->canonical = Rational(-n) * H;
  // c(T_Q) = (1+H)^{n+2} / (1+2H), truncated in the ring.
  GradedClass numer = total_power(X->ring->one() + H, n + 2);
  GradedClass inv = X->ring->one();  // (1+2H)^{-1} = sum (-2H)^j
  GradedClass pw = X->ring->one();
  for (int j = 1; j <= n; ++j) {
    pw = pw * (Rational(-2) * H);
    inv += pw;
  }
  X->tangent_chern = numer * inv;
  X->degree = 2;
  register_generators(*X);
  check_noether_inputs(*X);
  return X;
}

VarietyPtr product(const std::vector<VarietyPtr>& factors) {
  if (factors.size() < 2) malformed("product requires at least 2 factors");
  RingPresentation::Builder b;
  int dim = 0;
  for (size_t f = 0; f < factors.size(); ++f) {
    const auto& F = *factors[f];
    if (!F.projections.empty()) unsupported("nested products are not in the catalog");
    for (const auto& g : F.ring->generators())
      b.generator(g.name + std::to_string(f + 1), g.degree, static_cast<int>(f));
    b.factor_dimension(static_cast<int>(f), F.dim);
    dim += F.dim;
  }
  b.dimension(dim);

  // Generator index offsets per factor.
  std::vector<size_t> offset(factors.size(), 0);
  size_t ngens = 0;
  for (size_t f = 0; f < factors.size(); ++f) {
    offset[f] = ngens;
    ngens += factors[f]->ring->generator_count();
  }

  auto lift = [&](size_t f, const Monomial& m) {
    std::vector<int> v(ngens, 0);
    for (size_t i = 0; i < m.size(); ++i) v[offset[f] + i] = m.exp(i);
    return Monomial(std::move(v));
  };
  auto lift_terms = [&](size_t f, const TermMap& t) {
    TermMap out;
    for (const auto& [m, c] : t) out.emplace(lift(f, m), c);
    return out;
  };

  for (size_t f = 0; f < factors.size(); ++f)
    for (const auto& rule : factors[f]->ring->rules())
      b.rule(lift(f, rule.lead), lift_terms(f, rule.rhs));

  // Top-degree basis is the tensor product of the factor top bases.
  std::vector<std::pair<Monomial, Rational>> tops = {{Monomial::one(ngens), Rational(1)}};
  for (size_t f = 0; f < factors.size(); ++f) {
    std::vector<std::pair<Monomial, Rational>> next;
    for (const auto& [m, v] : tops)
      for (const auto& [fm, fv] : factors[f]->ring->integration_table())
        next.emplace_back(m.times(lift(f, fm)), v * fv);
    tops = std::move(next);
  }
  for (const auto& [m, v] : tops) b.integral(m, v);

  auto X = std::make_shared<VarietyModel>();
  X->ring = b.build();
  X->dim = dim;
  {
    std::string nm;
    for (size_t f = 0; f < factors.size(); ++f) {
      if (f) nm += "x";
      nm += factors[f]->name;
    }
    X->name = nm;
  }

  for (size_t f = 0; f < factors.size(); ++f) {
    Projection proj;
    proj.factor = factors[f];
    for (size_t i = 0; i < factors[f]->ring->generator_count(); ++i)
      proj.gen_map.push_back(static_cast<int>(offset[f] + i));
    X->projections.push_back(std::move(proj));
  }

  GradedClass H = X->ring->zero();
  GradedClass K = X->ring->zero();
  GradedClass tangent = X->ring->one();
  for (size_t f = 0; f < factors.size(); ++f) {
    H += pull_class(factors[f]->hyperplane, X->projections[f], X->ring);
    K += pull_class(factors[f]->canonical, X->projections[f], X->ring);
    tangent = tangent * pull_class(factors[f]->tangent_chern, X->projections[f], X->ring);
  }
  X->hyperplane = H;
  X->canonical = K;
  X->tangent_chern = tangent;
  X->degree = integrate(H.pow(dim)).num();
  register_generators(*X);
  // Factor aliases: the factor's own names resolve to their pullbacks when
  // unambiguous (h on P^a x P^b is ambiguous, h1/h2 are not).
  check_noether_inputs(*X);
  return X;
}

VarietyPtr projective_bundle_over_curve(int rank, long deg_f, int genus) {
  if (rank < 2) unsupported("projective_bundle_over_curve requires rank >= 2");
  if (genus < 0) malformed("negative genus");
  if (genus == 0 && deg_f < 1) malformed("deg F must be >= 1 on a rational base");
  const int n = rank;
  RingPresentation::Builder b;
  b.generator("xi", 1).generator("f", 1).dimension(n);
  b.rule(mono(2, {{1, 2}}), {});  // f^2 = 0
  // Grothendieck relation xi^n = degF * xi^{n-1} f over a curve base.
  b.rule(mono(2, {{0, n}}), term(mono(2, {{0, n - 1}, {1, 1}}), Rational(deg_f)));
  b.integral(mono(2, {{0, n - 1}, {1, 1}}), Rational(1));

  auto X = std::make_shared<VarietyModel>();
  X->ring = b.build();
  X->name = "P(F" + std::to_string(deg_f) + ")/B" + std::to_string(genus);
  X->dim = n;
  GradedClass xi = X->ring->generator_class(0);
  GradedClass f = X->ring->generator_class(1);
  X->hyperplane = xi;
  X->canonical = Rational(-n) * xi + Rational(deg_f + 2 * genus - 2) * f;
  // c(T_X) = (1 + (2-2g) f) * ((1+xi)^n - degF * f * (1+xi)^{n-1})
  GradedClass rel = total_power(X->ring->one() + xi, n) -
                    Rational(deg_f) * (f * total_power(X->ring->one() + xi, n - 1));
  X->tangent_chern = (X->ring->one() + Rational(2 - 2 * genus) * f) * rel;
  X->degree = deg_f;
  register_generators(*X);
  X->notes.push_back("very ampleness of xi is assumed, not verified");
  check_noether_inputs(*X);
  return X;
}

VarietyPtr hirzebruch(int e, long alpha, long beta) {
  if (e < 0) malformed("hirzebruch requires e >= 0");
  RingPresentation::Builder b;
  b.generator("C0", 1).generator("f", 1).dimension(2);
  b.rule(mono(2, {{0, 2}}), term(mono(2, {{0, 1}, {1, 1}}), Rational(-e)));
  b.rule(mono(2, {{1, 2}}), {});
  b.integral(mono(2, {{0, 1}, {1, 1}}), Rational(1));

  auto X = std::make_shared<VarietyModel>();
  X->ring = b.build();
  X->name = "X" + std::to_string(e);
  X->dim = 2;
  GradedClass C0 = X->ring->generator_class(0);
  GradedClass f = X->ring->generator_class(1);
  X->hyperplane = Rational(alpha) * C0 + Rational(beta) * f;
  X->canonical = Rational(-2) * C0 + Rational(-(e + 2)) * f;
  X->tangent_chern = X->ring->one() - X->canonical + Rational(4) * (C0 * f);
  X->degree = integrate(X->hyperplane * X->hyperplane).num();
  if (X->degree < 1) malformed("hirzebruch polarization has non-positive self-intersection");
  register_generators(*X);
  X->notes.push_back("polarization is caller-chosen; only degree positivity is checked");
  return X;
}

VarietyPtr hirzebruch(int e) { return hirzebruch(e, 1, e + 1); }

VarietyPtr blown_up_plane(int k) {
  if (k < 0 || k > 8) unsupported("blown_up_plane supports 0 <= k <= 8");
  RingPresentation::Builder b;
  size_t ngens = static_cast<size_t>(k) + 1;
  b.generator("l", 1);
  for (int i = 1; i <= k; ++i) b.generator("e" + std::to_string(i), 1);
  b.dimension(2);
  for (size_t i = 1; i < ngens; ++i) {
    b.rule(mono(ngens, {{i, 2}}), term(mono(ngens, {{0, 2}}), Rational(-1)));
    b.rule(mono(ngens, {{0, 1}, {i, 1}}), {});
    for (size_t j = i + 1; j < ngens; ++j) b.rule(mono(ngens, {{i, 1}, {j, 1}}), {});
  }
  b.integral(mono(ngens, {{0, 2}}), Rational(1));

  auto X = std::make_shared<VarietyModel>();
  X->ring = b.build();
  X->name = "Bl" + std::to_string(k) + "P2";
  X->dim = 2;
  GradedClass l = X->ring->generator_class(0);
  GradedClass K = Rational(-3) * l;
  for (size_t i = 1; i < ngens; ++i) K += X->ring->generator_class(i);
  X->canonical = K;
  X->hyperplane = -K;
  X->tangent_chern = X->ring->one() - K + Rational(3 + k) * (l * l);
  X->degree = integrate(X->hyperplane * X->hyperplane).num();
  if (X->degree < 1) unsupported("anticanonical polarization degenerates for this k; supply one");
  register_generators(*X);
  X->notes.push_back("polarization defaults to -K; very ampleness is not verified");
  return X;
}

VarietyPtr with_polarization(const VarietyPtr& model, const GradedClass& H) {
  if (H.ring() != model->ring) malformed("polarization lives in a different ring");
  if (H.is_zero() || !H.is_homogeneous(1)) malformed("polarization must be a nonzero degree-1 class");
  auto X = std::make_shared<VarietyModel>(*model);
  X->hyperplane = H;
  Rational d = integrate(H.pow(model->dim));
  if (!d.is_integer() || d.sign() <= 0) malformed("polarization has non-positive degree");
  X->degree = d.num();
  return X;
}

GradedClass pull_class(const GradedClass& on_factor, const Projection& proj, const RingPtr& target) {
  if (on_factor.ring() != proj.factor->ring) malformed("class does not live on the projection's factor");
  TermMap out;
  for (const auto& [m, c] : on_factor.terms()) {
    std::vector<int> v(target->generator_count(), 0);
    for (size_t i = 0; i < m.size(); ++i) v[static_cast<size_t>(proj.gen_map[i])] = m.exp(i);
    out.emplace(Monomial(std::move(v)), c);
  }
  return target->from_terms(std::move(out));
}

GradedClass named_class(const VarietyModel& X, const std::string& name) {
  auto it = X.named_classes.find(name);
  if (it == X.named_classes.end()) malformed("unknown class name '" + name + "' on " + X.name);
  return it->second;
}

}  // namespace chow
