#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "chow/ring.hpp"

namespace chow {

struct VarietyModel;
using VarietyPtr = std::shared_ptr<const VarietyModel>;

/// Projection of a product model onto one of its factors, recorded so bundle
/// pullbacks can substitute generators.
struct Projection {
  VarietyPtr factor;
  std::vector<int> gen_map;  // factor generator index -> product generator index
};

/// A catalog variety: ring presentation, polarization, canonical class,
/// tangent Chern data and degree. Immutable and freely shareable.
struct VarietyModel {
  std::string name;
  RingPtr ring;
  int dim = 0;
  GradedClass hyperplane;    // H, the very ample polarization
  GradedClass canonical;     // K_X
  GradedClass tangent_chern; // total Chern class of the tangent bundle
  Int degree;                // d = integral of H^dim

  // Generator classes plus aliases, for scripts and polynomial input.
  std::map<std::string, GradedClass> named_classes;
  std::vector<Projection> projections;  // nonempty only on product models

  bool is_quadric = false;
  int quadric_middle = 0;  // floor(n/2) on quadric models
  std::vector<std::string> notes;
};

VarietyPtr projective_space(int n);
VarietyPtr quadric(int n);
VarietyPtr product(const std::vector<VarietyPtr>& factors);
VarietyPtr projective_bundle_over_curve(int rank, long deg_f, int genus);
VarietyPtr hirzebruch(int e, long alpha, long beta);  // H = alpha*C0 + beta*f
VarietyPtr hirzebruch(int e);                         // default H = C0 + (e+1)*f
VarietyPtr blown_up_plane(int k);                     // default H = -K
/// Same model with a caller-chosen degree-1 polarization. Only degree
/// positivity is checked; very ampleness is the caller's responsibility.
VarietyPtr with_polarization(const VarietyPtr& model, const GradedClass& H);

/// Pull a class on the projection's factor back into the ambient product ring.
GradedClass pull_class(const GradedClass& on_factor, const Projection& proj, const RingPtr& target);

GradedClass named_class(const VarietyModel& X, const std::string& name);

}  // namespace chow
