#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// runner. Deterministic: every suite draws from a fixed-seed mt19937_64.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "g2lab/form.hpp"
#include "g2lab/frame.hpp"
#include "g2lab/parse.hpp"
#include "g2lab/registry.hpp"
#include "g2lab/su3.hpp"

namespace proptest {

using namespace g2lab;

struct PropertyResult {
  std::string name;
  int cases = 0;
  bool pass = true;
  std::string detail;

  void fail(const std::string& d) {
    if (pass) detail = d;
    pass = false;
  }
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }

  Rational rational() {
    int num = uniform(-9, 9);
    int den = uniform(1, 9);
    return Rational(num, den);
  }

  // Sparse random p-form; roughly 40% of the basis carries a coefficient.
  Form<Rational> form(int n, int p) {
    Form<Rational> f(n);
    for (const auto& idx : degree_indices(n, p))
      if (uniform(0, 9) < 4) f.add_term(idx, rational());
    return f;
  }

  Form<Rational> nonzero_form(int n, int p) {
    Form<Rational> f = form(n, p);
    while (f.is_zero()) f = form(n, p);
    return f;
  }

  Form<Rational> mixed_form(int n) {
    Form<Rational> f(n);
    for (int p = 0; p <= n; ++p)
      if (uniform(0, 2) == 0) f += form(n, p);
    return f;
  }

 private:
  std::mt19937_64 gen_;
};

// All registry coframes at default parameters, as rational-constant frames.
inline std::vector<std::pair<std::string, Frame<Rational>>> registry_frames() {
  std::vector<std::pair<std::string, Frame<Rational>>> out;
  for (const auto& fx : all_fixtures())
    out.emplace_back(fx.id, bind_params(parse_frame(fx.frame), fx.defaults));
  return out;
}

inline PropertyResult prop_d_squared() {
  PropertyResult res{"d-squared"};
  Rng rng(0x5eed0001ULL);
  for (const auto& [id, fr] : registry_frames()) {
    for (int c = 0; c < 6; ++c) {
      Form<Rational> f = rng.mixed_form(fr.dim());
      ++res.cases;
      if (!fr.d(fr.d(f)).is_zero()) res.fail(id + ": d(d(f)) != 0");
    }
    if (!fr.check_d2()) res.fail(id + ": d^2 fails on a generator");
  }
  return res;
}

inline PropertyResult prop_leibniz() {
  PropertyResult res{"leibniz"};
  Rng rng(0x5eed0002ULL);
  for (const auto& [id, fr] : registry_frames()) {
    const int n = fr.dim();
    for (int c = 0; c < 7; ++c) {
      int p = rng.uniform(0, n - 1);
      int q = rng.uniform(0, n - p);
      Form<Rational> a = rng.form(n, p), b = rng.form(n, q);
      Form<Rational> lhs = fr.d(wedge(a, b));
      Form<Rational> rhs = wedge(fr.d(a), b);
      Form<Rational> cross = wedge(a, fr.d(b));
      rhs += (p % 2 == 0) ? cross : -cross;
      ++res.cases;
      if (!(lhs == rhs))
        res.fail(id + ": Leibniz fails at degrees " + std::to_string(p) + "," +
                 std::to_string(q));
    }
  }
  return res;
}

inline PropertyResult prop_graded_commutativity() {
  PropertyResult res{"graded-commutativity"};
  Rng rng(0x5eed0003ULL);
  for (int n : {6, 7, 8}) {
    for (int c = 0; c < 20; ++c) {
      int p = rng.uniform(0, n);
      int q = rng.uniform(0, n);
      Form<Rational> a = rng.form(n, p), b = rng.form(n, q);
      Form<Rational> ab = wedge(a, b), ba = wedge(b, a);
      ++res.cases;
      bool flip = (p * q) % 2 == 1;
      if (!(ab == (flip ? -ba : ba)))
        res.fail("a^b != (-1)^{pq} b^a at n=" + std::to_string(n));
    }
  }
  return res;
}

inline PropertyResult prop_double_star() {
  PropertyResult res{"double-star"};
  Rng rng(0x5eed0004ULL);
  for (int n : {6, 7, 8}) {
    Frame<Rational> fr(n);  // flat orthonormal coframe
    for (int c = 0; c < 20; ++c) {
      int p = rng.uniform(0, n);
      Form<Rational> f = rng.form(n, p);
      Form<Rational> ss = fr.hodge_star(fr.hodge_star(f));
      ++res.cases;
      bool flip = (p * (n - p)) % 2 == 1;
      if (!(ss == (flip ? -f : f)))
        res.fail("** != (-1)^{p(n-p)} at n=" + std::to_string(n) + ", p=" + std::to_string(p));
    }
  }
  return res;
}

inline PropertyResult prop_sigma_involution() {
  PropertyResult res{"sigma-involution"};
  Rng rng(0x5eed0005ULL);
  for (int n : {6, 7, 8}) {
    for (int c = 0; c < 17; ++c) {
      Form<Rational> f = rng.mixed_form(n);
      ++res.cases;
      if (!(sigma(sigma(f)) == f)) res.fail("sigma^2 != id at n=" + std::to_string(n));
    }
  }
  // Degreewise signs: +, -, -, +, repeating with period four.
  for (int p = 0; p <= 7; ++p) {
    Form<Rational> f = rng.nonzero_form(7, p);
    bool flip = p % 4 == 1 || p % 4 == 2;
    ++res.cases;
    if (!(sigma(f) == (flip ? -f : f))) res.fail("sigma sign wrong at p=" + std::to_string(p));
  }
  return res;
}

inline PropertyResult prop_torsion_reconstruction() {
  PropertyResult res{"torsion-reconstruction"};
  Rng rng(0x5eed0006ULL);
  Su3Structure<Rational> s = standard_su3(6);
  auto A = complex_structure_matrix(s);
  std::vector<Form<Rational>> w2 = w2_space_basis(s);
  std::vector<Form<Rational>> w3 = w3_space_basis(s);
  Form<Rational> omega2 = wedge(s.omega, s.omega);
  for (int c = 0; c < 52; ++c) {
    TorsionComponents want{Rational::zero(), Rational::zero(), Form<Rational>(6),
                           Form<Rational>(6), Form<Rational>(6), Form<Rational>(6),
                           Form<Rational>(6)};
    want.nu0 = rng.rational();
    want.alpha0 = rng.rational();
    want.nu1 = rng.form(6, 1);
    want.pi1 = rng.form(6, 1);
    for (const auto& b : w3)
      if (rng.uniform(0, 2) == 0) want.nu3 += rng.rational() * b;
    for (const auto& b : w2)
      if (rng.uniform(0, 2) == 0) want.pi2 += rng.rational() * b;
    for (const auto& b : w2)
      if (rng.uniform(0, 2) == 0) want.sigma2 += rng.rational() * b;

    Form<Rational> d_omega = want.nu0 * s.psi_plus + want.alpha0 * s.psi_minus +
                             wedge(want.nu1, s.omega) + want.nu3;
    Form<Rational> d_psi_plus = (Rational(2, 3) * want.alpha0) * omega2 +
                                wedge(want.pi1, s.psi_plus) - wedge(want.pi2, s.omega);
    Form<Rational> d_psi_minus = (Rational(-2, 3) * want.nu0) * omega2 +
                                 wedge(apply_J(A, want.pi1), s.psi_plus) -
                                 wedge(want.sigma2, s.omega);

    ++res.cases;
    try {
      TorsionComponents got = torsion_solve(s, d_omega, d_psi_plus, d_psi_minus);
      bool same = got.nu0 == want.nu0 && got.alpha0 == want.alpha0 && got.nu1 == want.nu1 &&
                  got.nu3 == want.nu3 && got.pi1 == want.pi1 && got.pi2 == want.pi2 &&
                  got.sigma2 == want.sigma2;
      if (!same) res.fail("components not recovered");
    } catch (const Error& e) {
      res.fail(std::string("solver refused a consistent system: ") + e.what());
    }
  }
  return res;
}

inline PropertyResult prop_lefschetz_injectivity() {
  PropertyResult res{"lefschetz-injectivity"};
  Rng rng(0x5eed0007ULL);
  std::vector<Form<Rational>> omegas;
  omegas.push_back(standard_su3(6).omega);
  {
    Form<Rational> w(6);  // nondegenerate, non-monic block coefficients
    w.add_term(MultiIndex::from_indices({1, 6}), Rational(1));
    w.add_term(MultiIndex::from_indices({2, 5}), Rational(3));
    w.add_term(MultiIndex::from_indices({3, 4}), Rational(2));
    omegas.push_back(w);
  }
  for (const auto& w : omegas) {
    for (int c = 0; c < 26; ++c) {
      Form<Rational> gamma = rng.nonzero_form(6, 2);
      ++res.cases;
      if (wedge(gamma, w).is_zero()) res.fail("nonzero gamma with gamma ^ omega = 0");
    }
  }
  return res;
}

inline std::vector<PropertyResult> run_property_suites() {
  return {prop_d_squared(),
          prop_leibniz(),
          prop_graded_commutativity(),
          prop_double_star(),
          prop_sigma_involution(),
          prop_torsion_reconstruction(),
          prop_lefschetz_injectivity()};
}

}  // namespace proptest
