#include "chow/ring.hpp"

#include <algorithm>
#include <functional>

#include "chow/error.hpp"

namespace chow {

namespace {

void add_term(TermMap& acc, const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = acc.find(m);
  if (it == acc.end()) {
    acc.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

int RingPresentation::generator_index(const std::string& name) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int>(i);
  return -1;
}

int RingPresentation::degree_of(const Monomial& m) const {
  int d = 0;
  for (size_t i = 0; i < gens_.size(); ++i) d += m.exp(i) * gens_[i].degree;
  return d;
}

bool RingPresentation::exceeds_bounds(const Monomial& m) const {
  std::map<int, int> per_factor;
  for (size_t i = 0; i < gens_.size(); ++i)
    per_factor[gens_[i].factor] += m.exp(i) * gens_[i].degree;
  for (const auto& [f, d] : per_factor) {
    auto it = factor_dims_.find(f);
    if (it == factor_dims_.end()) inconsistent("generator factor without a dimension bound");
    if (d > it->second) return true;
  }
  return false;
}

TermMap RingPresentation::normal_form_terms(const Monomial& m) const {
  if (m.size() != gens_.size()) malformed("monomial over a different generator set");
  for (int e : m.exps())
    if (e < 0) malformed("monomial with negative exponent");
  if (exceeds_bounds(m)) return {};
  auto it = normal_forms_.find(m);
  if (it == normal_forms_.end()) inconsistent("monomial missing from the normal-form table");
  return it->second;
}

TermMap RingPresentation::normal_form_randomized(const Monomial& m, std::mt19937& rng) const {
  if (m.size() != gens_.size()) malformed("monomial over a different generator set");
  TermMap work;
  if (!exceeds_bounds(m)) work.emplace(m, Rational(1));
  // Reduce until no (term, rule) pair applies, picking uniformly at random.
  for (long step = 0; step < 200000; ++step) {
    std::vector<std::pair<Monomial, size_t>> applicable;
    for (const auto& [mono, coeff] : work) {
      (void)coeff;
      for (size_t r = 0; r < rules_.size(); ++r)
        if (rules_[r].lead.divides(mono)) applicable.emplace_back(mono, r);
    }
    if (applicable.empty()) return work;
    std::uniform_int_distribution<size_t> pick(0, applicable.size() - 1);
    const auto& [mono, r] = applicable[pick(rng)];
    Rational coeff = work.at(mono);
    work.erase(mono);
    Monomial q = mono.divide(rules_[r].lead);
    for (const auto& [bm, bc] : rules_[r].rhs) {
      Monomial prod = q.times(bm);
      if (!exceeds_bounds(prod)) add_term(work, prod, coeff * bc);
    }
  }
  inconsistent("randomized rewriting did not terminate");
}

TermMap RingPresentation::multiply_terms(const TermMap& a, const TermMap& b) const {
  TermMap acc;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial prod = ma.times(mb);
      if (exceeds_bounds(prod)) continue;
      Rational c = ca * cb;
      for (const auto& [bm, bc] : normal_form_terms(prod)) add_term(acc, bm, c * bc);
    }
  }
  return acc;
}

Rational RingPresentation::integrate_terms(const TermMap& a) const {
  Rational total;
  for (const auto& [m, c] : a) {
    if (degree_of(m) != dim_) continue;
    auto it = integral_.find(m);
    if (it == integral_.end()) inconsistent("top-degree basis monomial missing from the integration table");
    total += c * it->second;
  }
  return total;
}

std::string RingPresentation::monomial_str(const Monomial& m) const {
  std::string s;
  for (size_t i = 0; i < gens_.size(); ++i) {
    int e = m.exp(i);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += gens_[i].name;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

GradedClass RingPresentation::zero() const { return GradedClass(shared_from_this(), {}); }

GradedClass RingPresentation::one() const { return scalar(Rational(1)); }

GradedClass RingPresentation::scalar(Rational c) const {
  TermMap t;
  if (!c.is_zero()) t.emplace(Monomial::one(gens_.size()), std::move(c));
  return GradedClass(shared_from_this(), std::move(t));
}

GradedClass RingPresentation::monomial_class(const Monomial& m) const {
  return GradedClass(shared_from_this(), normal_form_terms(m));
}

GradedClass RingPresentation::generator_class(size_t i) const {
  return monomial_class(Monomial::generator(gens_.size(), i));
}

GradedClass RingPresentation::from_terms(TermMap t) const {
  TermMap acc;
  for (const auto& [m, c] : t)
    for (const auto& [bm, bc] : normal_form_terms(m)) add_term(acc, bm, c * bc);
  return GradedClass(shared_from_this(), std::move(acc));
}

// ---------------------------------------------------------------------------
// Builder

RingPresentation::Builder& RingPresentation::Builder::generator(const std::string& name, int degree,
                                                                int factor) {
  if (degree < 1) malformed("generator degree must be >= 1");
  for (const auto& g : gens_)
    if (g.name == name) malformed("duplicate generator name: " + name);
  gens_.push_back(Generator{name, degree, factor});
  return *this;
}

RingPresentation::Builder& RingPresentation::Builder::dimension(int n) {
  dim_ = n;
  return *this;
}

RingPresentation::Builder& RingPresentation::Builder::factor_dimension(int factor, int dim) {
  factor_dims_[factor] = dim;
  return *this;
}

RingPresentation::Builder& RingPresentation::Builder::rule(Monomial lead, TermMap rhs) {
  rules_.push_back(RewriteRule{std::move(lead), std::move(rhs)});
  return *this;
}

RingPresentation::Builder& RingPresentation::Builder::integral(Monomial top, Rational value) {
  integral_.emplace(std::move(top), std::move(value));
  return *this;
}

RingPtr RingPresentation::Builder::build() {
  if (dim_ < 0) malformed("ring dimension not set");
  if (gens_.empty()) malformed("ring presentation without generators");

  auto ring = std::shared_ptr<RingPresentation>(new RingPresentation());
  ring->gens_ = gens_;
  ring->dim_ = dim_;
  ring->rules_ = rules_;
  ring->integral_ = integral_;

  std::map<int, int> factor_dims = factor_dims_;
  std::map<int, bool> seen;
  for (const auto& g : gens_) seen[g.factor] = true;
  if (factor_dims.empty() && seen.size() == 1) {
    factor_dims[seen.begin()->first] = dim_;
  }
  int total = 0;
  for (const auto& [f, present] : seen) {
    (void)present;
    auto it = factor_dims.find(f);
    if (it == factor_dims.end()) malformed("missing factor dimension bound");
    total += it->second;
  }
  if (total != dim_) malformed("factor dimensions do not sum to the ring dimension");
  ring->factor_dims_ = factor_dims;

  ring->finish_build();
  return ring;
}

// ---------------------------------------------------------------------------
// Build-time table computation

TermMap RingPresentation::reduce_full(const Monomial& m, int depth) const {
  if (depth > 4096) inconsistent("rewrite chain exceeds the termination bound");
  if (exceeds_bounds(m)) return {};
  for (const auto& rule : rules_) {
    if (!rule.lead.divides(m)) continue;
    Monomial q = m.divide(rule.lead);
    TermMap acc;
    for (const auto& [bm, bc] : rule.rhs) {
      for (const auto& [rm, rc] : reduce_full(q.times(bm), depth + 1)) add_term(acc, rm, bc * rc);
    }
    return acc;
  }
  TermMap self;
  self.emplace(m, Rational(1));
  return self;
}

void RingPresentation::finish_build() {
  // Rule sanity: leads nontrivial, right-hand sides already in normal form.
  auto reducible = [&](const Monomial& m) {
    for (const auto& rule : rules_)
      if (rule.lead.divides(m)) return true;
    return false;
  };
  for (const auto& rule : rules_) {
    if (rule.lead.size() != gens_.size()) malformed("rule lead over a different generator set");
    if (rule.lead.is_one()) malformed("rewrite rule with trivial lead");
    for (const auto& [m, c] : rule.rhs) {
      (void)c;
      if (m.size() != gens_.size()) malformed("rule rhs over a different generator set");
      if (exceeds_bounds(m)) malformed("rule rhs exceeds the degree bounds");
      if (reducible(m)) malformed("rule rhs is not in normal form");
    }
  }

  // Enumerate every monomial within the degree bounds and normalize it.
  std::vector<Monomial> all;
  std::vector<int> exps(gens_.size(), 0);
  std::function<void(size_t)> enumerate = [&](size_t i) {
    if (i == gens_.size()) {
      all.push_back(Monomial{exps});
      return;
    }
    for (exps[i] = 0;; ++exps[i]) {
      if (exceeds_bounds(Monomial{exps})) break;
      enumerate(i + 1);
    }
    exps[i] = 0;
  };
  enumerate(0);

  basis_by_degree_.assign(dim_ + 1, {});
  for (const auto& m : all) {
    TermMap nf = reduce_full(m, 0);
    normal_forms_.emplace(m, std::move(nf));
    if (!reducible(m)) basis_by_degree_[degree_of(m)].push_back(m);
  }
  for (auto& level : basis_by_degree_) std::sort(level.begin(), level.end());
  size_t idx = 0;
  for (const auto& level : basis_by_degree_)
    for (const auto& m : level) basis_index_.emplace(m, idx++);

  // The integration table must cover the top-degree basis exactly.
  for (const auto& m : basis_by_degree_[dim_]) {
    if (integral_.find(m) == integral_.end())
      malformed("integration table misses top-degree basis monomial " + monomial_str(m));
  }
  for (const auto& [m, v] : integral_) {
    (void)v;
    if (degree_of(m) != dim_ || !basis_index_.count(m))
      malformed("integration table entry is not a top-degree basis monomial");
  }
}

// ---------------------------------------------------------------------------
// GradedClass

GradedClass GradedClass::part(int k) const {
  TermMap t;
  for (const auto& [m, c] : terms_)
    if (ring_->degree_of(m) == k) t.emplace(m, c);
  return GradedClass(ring_, std::move(t));
}

Rational GradedClass::scalar_part() const {
  if (!ring_) return Rational(0);
  auto it = terms_.find(Monomial::one(ring_->generator_count()));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedClass::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int GradedClass::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    (void)c;
    d = std::max(d, ring_->degree_of(m));
  }
  return d;
}

bool GradedClass::is_homogeneous(int k) const {
  for (const auto& [m, c] : terms_) {
    (void)c;
    if (ring_->degree_of(m) != k) return false;
  }
  return true;
}

GradedClass GradedClass::operator-() const {
  TermMap t;
  for (const auto& [m, c] : terms_) t.emplace(m, -c);
  return GradedClass(ring_, std::move(t));
}

static void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b) malformed("arithmetic on a detached graded class");
  if (a != b) malformed("mismatched ring presentations");
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
  if (!ring_ && terms_.empty()) {
    *this = o;
    return *this;
  }
  require_same_ring(ring_, o.ring_);
  for (const auto& [m, c] : o.terms_) add_term(terms_, m, c);
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) { return *this += -o; }

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
  require_same_ring(a.ring_, b.ring_);
  return GradedClass(a.ring_, a.ring_->multiply_terms(a.terms_, b.terms_));
}

GradedClass operator*(const Rational& c, const GradedClass& a) {
  TermMap t;
  if (!c.is_zero())
    for (const auto& [m, mc] : a.terms_) t.emplace(m, c * mc);
  return GradedClass(a.ring_, std::move(t));
}

GradedClass GradedClass::pow(int e) const {
  if (e < 0) malformed("negative power of a graded class");
  if (!ring_) malformed("power of a detached graded class");
  GradedClass acc = ring_->one();
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool operator==(const GradedClass& a, const GradedClass& b) {
  if (a.ring_ != b.ring_) return false;
  return a.terms_ == b.terms_;
}

std::string GradedClass::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str();
    if (!m.is_one()) s += "*" + ring_->monomial_str(m);
  }
  return s;
}

Rational integrate(const GradedClass& a) {
  if (!a.ring()) return Rational(0);
  return a.ring()->integrate_terms(a.terms());
}

GradedClass normal_form(const Monomial& m, const RingPtr& p) { return p->monomial_class(m); }

}  // namespace chow
