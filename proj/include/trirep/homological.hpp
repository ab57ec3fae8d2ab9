#pragma once

#include <vector>

#include "trirep/module.hpp"

namespace trirep {

template <class F>
struct ProjectiveCover {
  FreeModule<F> cover;
  Morphism<F> epi;
};

template <class F>
ProjectiveCover<F> projective_cover(const Module<F>& m);

// p1 --d1--> p0 --eps--> m --> 0, both covers minimal.
template <class F>
struct Presentation {
  FreeModule<F> p0, p1;
  Morphism<F> d1;
  Morphism<F> eps;
};

template <class F>
Presentation<F> minimal_projective_presentation(const Module<F>& m);

// terms[0] -> m is the cover; differentials[i]: terms[i+1] -> terms[i].
template <class F>
struct ProjectiveResolution {
  std::vector<FreeModule<F>> terms;
  std::vector<Morphism<F>> differentials;
  Morphism<F> augmentation;
  bool complete = false;  // reached a zero kernel
  int length() const;
};

class ResolutionTooLong : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Computes terms[0..max_terms-1]; throws ResolutionTooLong when max_terms < 0
// and the algebra-dimension safety bound is exceeded.
template <class F>
ProjectiveResolution<F> minimal_projective_resolution(const Module<F>& m, int max_terms = -1);

// g: P -> X with epi o g = h, for h: P -> Y, P free and epi: X -> Y onto.
template <class F>
Morphism<F> lift_to_free(const FreeModule<F>& p, const Morphism<F>& h, const Morphism<F>& epi);

// g: Y -> Z with g o epi = h, for epi: X -> Y onto and h: X -> Z killing ker epi.
template <class F>
Morphism<F> factor_through_epi(const Morphism<F>& epi, const Morphism<F>& h);

template <class F>
bool is_projective(const Module<F>& m);
template <class F>
bool is_injective(const Module<F>& m);

template <class F>
int proj_dim(const Module<F>& m);
template <class F>
int inj_dim(const Module<F>& m);
template <class F>
int global_dimension(const Algebra<F>& a);

// Hom(P, X) in Yoneda coordinates: the images of the generators of P,
// stacked in summand order.
template <class F>
Index yoneda_dim(const FreeModule<F>& p, const Module<F>& x);

// Matrix of Hom(d, X): Hom(from, X) -> Hom(next, X) for d: next -> from.
template <class F>
Mat<F> induced_hom_map(const FreeModule<F>& from, const FreeModule<F>& next, const Morphism<F>& d, const Module<F>& x);

template <class F>
Morphism<F> yoneda_morphism(const FreeModule<F>& p, const Module<F>& x, const Vec<F>& coords);

template <class F>
struct ExtGroup {
  int degree = 0;
  Index dim = 0;
  Mat<F> cocycles;        // basis of Z^n in Yoneda coordinates of Hom(P_n, X)
  Mat<F> coboundaries;    // basis of B^n
  Mat<F> representatives; // cocycles completing B^n to Z^n
  ProjectiveResolution<F> resolution;
};

template <class F>
ExtGroup<F> ext_group(int n, const Module<F>& m, const Module<F>& x);
template <class F>
Index ext_dim(int n, const Module<F>& m, const Module<F>& x);

}  // namespace trirep
