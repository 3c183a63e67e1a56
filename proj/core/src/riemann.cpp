#include "g2lab/riemann.hpp"

#include "g2lab/poly.hpp"
#include "g2lab/ratfunc.hpp"

namespace g2lab {

template Tensor3<Rational> koszul_connection<Rational>(const Frame<Rational>&);
template Tensor3<Poly> koszul_connection<Poly>(const Frame<Poly>&);
template Tensor3<RatFunc> koszul_connection<RatFunc>(const Frame<RatFunc>&);

template Matrix<Rational> ricci_tensor<Rational>(const Frame<Rational>&);
template Matrix<Poly> ricci_tensor<Poly>(const Frame<Poly>&);

template std::vector<std::vector<Form<RatFunc>>> connection_one_forms<RatFunc>(
    const Frame<RatFunc>&);
template std::vector<std::vector<Form<RatFunc>>> curvature_two_forms<RatFunc>(
    const Frame<RatFunc>&, const std::vector<std::vector<Form<RatFunc>>>&);

}  // namespace g2lab
