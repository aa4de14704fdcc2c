#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "chow/rational.hpp"

namespace chow {

/// Exponent vector over the generators of one ring presentation.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  static Monomial one(size_t ngens) { return Monomial(std::vector<int>(ngens, 0)); }
  static Monomial generator(size_t ngens, size_t i, int e = 1) {
    std::vector<int> v(ngens, 0);
    v[i] = e;
    return Monomial(std::move(v));
  }

  const std::vector<int>& exps() const { return exps_; }
  int exp(size_t i) const { return exps_[i]; }
  size_t size() const { return exps_.size(); }

  bool is_one() const {
    for (int e : exps_)
      if (e != 0) return false;
    return true;
  }

  bool divides(const Monomial& m) const {
    for (size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > m.exps_[i]) return false;
    return true;
  }

  Monomial times(const Monomial& m) const {
    std::vector<int> v(exps_);
    for (size_t i = 0; i < v.size(); ++i) v[i] += m.exps_[i];
    return Monomial(std::move(v));
  }

  Monomial divide(const Monomial& m) const {
    std::vector<int> v(exps_);
    for (size_t i = 0; i < v.size(); ++i) v[i] -= m.exps_[i];
    return Monomial(std::move(v));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

private:
  std::vector<int> exps_;
};

/// Formal linear combination of monomials; zero coefficients are never stored.
using TermMap = std::map<Monomial, Rational>;

struct Generator {
  std::string name;
  int degree = 1;
  int factor = 0;  // Kunneth factor this generator belongs to
};

struct RewriteRule {
  Monomial lead;
  TermMap rhs;  // already in normal form
};

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

class GradedClass;

/// Presentation of a truncated graded-commutative ring: generators, rewrite
/// rules and a top-degree integration table. Immutable after build().
class RingPresentation : public std::enable_shared_from_this<RingPresentation> {
public:
  class Builder;

  const std::vector<Generator>& generators() const { return gens_; }
  size_t generator_count() const { return gens_.size(); }
  int dimension() const { return dim_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const std::map<Monomial, Rational>& integration_table() const { return integral_; }

  int generator_index(const std::string& name) const;  // -1 when absent

  int degree_of(const Monomial& m) const;
  /// True when the monomial dies for degree reasons (per Kunneth factor).
  bool exceeds_bounds(const Monomial& m) const;

  bool is_basis(const Monomial& m) const { return basis_index_.count(m) != 0; }
  const std::vector<std::vector<Monomial>>& basis_by_degree() const { return basis_by_degree_; }

  /// Normal form of an arbitrary monomial over the generators (not necessarily
  /// within degree bounds; such monomials map to zero).
  TermMap normal_form_terms(const Monomial& m) const;

  /// Same result computed with a randomized rule-application order; used by the
  /// confluence tests, never by the arithmetic paths.
  TermMap normal_form_randomized(const Monomial& m, std::mt19937& rng) const;

  TermMap multiply_terms(const TermMap& a, const TermMap& b) const;
  Rational integrate_terms(const TermMap& a) const;

  std::string monomial_str(const Monomial& m) const;

  GradedClass zero() const;
  GradedClass one() const;
  GradedClass scalar(Rational c) const;
  GradedClass monomial_class(const Monomial& m) const;
  GradedClass generator_class(size_t i) const;
  GradedClass from_terms(TermMap t) const;

private:
  RingPresentation() = default;
  void finish_build();
  TermMap reduce_full(const Monomial& m, int depth) const;

  std::vector<Generator> gens_;
  int dim_ = 0;
  std::map<int, int> factor_dims_;
  std::vector<RewriteRule> rules_;
  std::map<Monomial, Rational> integral_;

  // Precomputed at build time over every monomial within bounds.
  std::map<Monomial, TermMap> normal_forms_;
  std::map<Monomial, size_t> basis_index_;
  std::vector<std::vector<Monomial>> basis_by_degree_;

  friend class Builder;
};

class RingPresentation::Builder {
public:
  Builder& generator(const std::string& name, int degree, int factor = 0);
  Builder& dimension(int n);
  /// Degree bound for one Kunneth factor. Single-factor rings default to the
  /// full dimension; multi-factor rings must bound every factor.
  Builder& factor_dimension(int factor, int dim);
  Builder& rule(Monomial lead, TermMap rhs);
  Builder& integral(Monomial top, Rational value);
  RingPtr build();

private:
  std::vector<Generator> gens_;
  int dim_ = -1;
  std::map<int, int> factor_dims_;
  std::vector<RewriteRule> rules_;
  std::map<Monomial, Rational> integral_;
};

/// Element of a truncated rational Chow ring, stored per degree in the fixed
/// basis-monomial order of its presentation.
class GradedClass {
public:
  GradedClass() = default;  // detached zero; unusable in arithmetic

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  /// Degree-k homogeneous part.
  GradedClass part(int k) const;
  /// Coefficient of the empty monomial.
  Rational scalar_part() const;
  Rational coefficient(const Monomial& m) const;
  int max_degree() const;
  bool is_homogeneous(int k) const;

  GradedClass operator-() const;
  GradedClass& operator+=(const GradedClass& o);
  GradedClass& operator-=(const GradedClass& o);
  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator*(const Rational& c, const GradedClass& a);

  GradedClass pow(int e) const;

  friend bool operator==(const GradedClass& a, const GradedClass& b);
  friend bool operator!=(const GradedClass& a, const GradedClass& b) { return !(a == b); }

  std::string str() const;

private:
  GradedClass(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  TermMap terms_;

  friend class RingPresentation;
};

/// Degree map: integrates the top-degree component of a normal-form class.
Rational integrate(const GradedClass& a);

/// Spec-level entry point: the unique basis-monomial combination equal to m.
GradedClass normal_form(const Monomial& m, const RingPtr& p);

}  // namespace chow
