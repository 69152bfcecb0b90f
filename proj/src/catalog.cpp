#include <cmath>
#include <stdexcept>

#include "fracineq/convexity.hpp"

namespace fracineq::convexity {

FunctionSpec make_function_spec(std::string name, const std::string& f_src,
                                const std::string& fprime_src, Interval domain,
                                std::vector<DeclaredClass> classes,
                                std::optional<double> sup_deriv) {
  if (name.empty()) throw std::invalid_argument("make_function_spec: empty name");
  if (!(domain.lo < domain.hi))
    throw std::invalid_argument("make_function_spec: domain must satisfy lo < hi");
  FunctionSpec fs;
  fs.name = std::move(name);
  fs.f_src = f_src;
  fs.fprime_src = fprime_src;
  fs.f = expr::parse(f_src);
  fs.fprime = expr::parse(fprime_src);
  fs.domain = domain;
  fs.classes = std::move(classes);
  fs.sup_deriv = sup_deriv;
  return fs;
}

const std::vector<FunctionSpec>& catalog() {
  using CK = ClassKind;
  static const std::vector<FunctionSpec> entries = [] {
    std::vector<FunctionSpec> v;
    // Convex powers with f(0) = 0 are m-convex for every m in (0, 1]; the
    // declarations carry m = 1 and one interior value to keep the catalog
    // self-check meaningful without enumerating the whole range.
    v.push_back(make_function_spec(
        "linear", "x", "1", {0, 1},
        {{CK::convex, 1}, {CK::s_convex, 1}, {CK::m_convex, 1}, {CK::m_convex, 0.5},
         {CK::quasi_convex, 1}},
        1.0));
    v.push_back(make_function_spec(
        "square", "x^2", "2*x", {0, 1},
        {{CK::convex, 1}, {CK::s_convex, 1}, {CK::m_convex, 1}, {CK::m_convex, 0.5},
         {CK::quasi_convex, 1}},
        2.0));
    v.push_back(make_function_spec(
        "cube", "x^3", "3*x^2", {0, 1},
        {{CK::convex, 1}, {CK::s_convex, 1}, {CK::m_convex, 1}, {CK::m_convex, 0.5},
         {CK::quasi_convex, 1}},
        3.0));
    // exp is convex but exp(0) = 1 > 0, so it is not m-convex for m < 1
    // (take t = 0, y = 0 in the definition); only m = 1 is declared.
    v.push_back(make_function_spec(
        "exp", "exp(x)", "exp(x)", {0, 1},
        {{CK::convex, 1}, {CK::s_convex, 1}, {CK::m_convex, 1}, {CK::quasi_convex, 1}},
        std::exp(1.0)));
    // x^s is s-convex in the second sense (subadditivity of t^s plus its
    // homogeneity); the domain starts at 0.1 so |f'| stays bounded.  Each is
    // concave, hence quasi-convex, and not declared convex.
    for (double s : {0.25, 0.5, 0.75}) {
      char name[32], fsrc[32], dsrc[48];
      std::snprintf(name, sizeof name, "root_%g", s);
      std::snprintf(fsrc, sizeof fsrc, "x^%g", s);
      std::snprintf(dsrc, sizeof dsrc, "%g*x^(%g - 1)", s, s);
      v.push_back(make_function_spec(name, fsrc, dsrc, {0.1, 1},
                                     {{CK::s_convex, s}, {CK::quasi_convex, 1}},
                                     s * std::pow(0.1, s - 1.0)));
    }
    // Monotone increasing and concave: quasi-convex but in no other class.
    v.push_back(make_function_spec("logshift", "log(1 + x)", "1/(1 + x)", {0, 1},
                                   {{CK::quasi_convex, 1}}, 1.0));
    // Negative control: declares nothing; check_s_convex(s=1) fails on it.
    // (|f'| = 2x is still convex, so the *hypotheses* of the derivative-based
    // bounds hold for it -- only the catalog declarations are "negative".)
    v.push_back(make_function_spec("negcontrol", "-x^2", "-2*x", {0, 1}, {}, 2.0));
    return v;
  }();
  return entries;
}

}  // namespace fracineq::convexity
