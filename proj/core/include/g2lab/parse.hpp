#pragma once

#include <map>
#include <string>

#include "g2lab/form.hpp"
#include "g2lab/frame.hpp"
#include "g2lab/poly.hpp"
#include "g2lab/rational.hpp"
#include "g2lab/ratfunc.hpp"

namespace g2lab {

// Term grammar (whitespace-insensitive):
//   form   := ["+"|"-"] term (("+"|"-") term)* | "0"
//   term   := (factor "*")* atom
//   factor := rational | ident ["^" nat]
//   atom   := digits            (index monomial, strictly increasing digits)
//           | factor            (degree-0 term)
//   rational := int ["/" nat]
// A trailing all-digit atom without "/" is the index monomial; otherwise the
// whole term is a scalar. Integer scalars are spelled "n/1" to keep them
// distinct from index monomials.
Form<Poly> parse_form(const std::string& text, int dim);

// Frame tuple "(entry, ..., entry)"; entry i is d(e^i) as a 2-form in the
// same grammar, "0" for closed generators. Dimension = number of entries.
Frame<Poly> parse_frame(const std::string& text);

// Structure file: frame tuple first, then optional "[forms]" and "[params]"
// sections of "name = value" lines. "#" starts a comment.
struct StructureFile {
  std::string frame_text;
  std::map<std::string, std::string> forms;
  std::map<std::string, Rational> params;
};
StructureFile parse_structure_file(const std::string& text);

std::string print_form(const Form<Poly>& f);
std::string print_form(const Form<Rational>& f);
std::string print_form(const Form<RatFunc>& f);
std::string print_frame(const Frame<Poly>& fr);
std::string print_frame(const Frame<Rational>& fr);

// Substitution of named parameters, e.g. binding a = 2 before metric work.
Form<Rational> bind_params(const Form<Poly>& f, const std::map<std::string, Rational>& vals);
Frame<Rational> bind_params(const Frame<Poly>& fr, const std::map<std::string, Rational>& vals);

// Lift of single-parameter data into the rational-function field in `var`.
Form<RatFunc> lift_to_ratfunc(const Form<Poly>& f, const std::string& var);
Frame<RatFunc> lift_to_ratfunc(const Frame<Poly>& fr, const std::string& var);

}  // namespace g2lab
