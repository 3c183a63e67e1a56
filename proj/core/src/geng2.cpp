#include "g2lab/geng2.hpp"

#include "g2lab/poly.hpp"
#include "g2lab/ratfunc.hpp"

namespace g2lab {

template GenG2Pair<Rational> build_structure_forms<Rational>(const Su3Structure<Rational>&,
                                                             const Rational&, const Rational&,
                                                             int);
template GenG2Pair<Poly> build_structure_forms<Poly>(const Su3Structure<Poly>&, const Rational&,
                                                     const Rational&, int);
template GenG2Pair<RatFunc> build_structure_forms<RatFunc>(const Su3Structure<RatFunc>&,
                                                           const Rational&, const Rational&,
                                                           int);

template AffineFormSet<Rational> solve_weak_h<Rational>(const Frame<Rational>&,
                                                        const Form<Rational>&,
                                                        const Form<Rational>&, const Rational&,
                                                        bool);
template AffineFormSet<Rational> solve_strong_h<Rational>(const Frame<Rational>&,
                                                          const Form<Rational>&,
                                                          const Form<Rational>&, bool);
template AffineFormSet<RatFunc> solve_strong_h<RatFunc>(const Frame<RatFunc>&,
                                                        const Form<RatFunc>&,
                                                        const Form<RatFunc>&, bool);

template StrongProductAnalysis<Rational> strong_product_analysis<Rational>(
    const Frame<Rational>&, const Su3Structure<Rational>&);
template StrongProductAnalysis<RatFunc> strong_product_analysis<RatFunc>(
    const Frame<RatFunc>&, const Su3Structure<RatFunc>&);

}  // namespace g2lab
