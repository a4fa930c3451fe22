#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "denbound.hpp"

#ifndef DENBOUND_DATA_DIR
#define DENBOUND_DATA_DIR "data"
#endif

namespace testing_support {

using namespace denbound;

inline RationalFunction R(const std::string& s) { return parse_expression(s); }

inline Polynomial P(const std::string& s) {
  RationalFunction r = parse_expression(s);
  if (!r.is_polynomial()) throw DomainError("not a polynomial: " + s);
  return r.num();
}

inline std::string data_path(const std::string& name) { return std::string(DENBOUND_DATA_DIR) + "/" + name; }

inline RecurrenceSystem load_system(const std::string& name) {
  std::ifstream in(data_path(name));
  return parse_system(in);
}

inline std::vector<RatFunVector> load_solutions(const std::string& name) {
  std::ifstream in(data_path(name));
  return parse_solutions(in);
}

/// a ~ b: equal up to a nonzero rational constant.
inline bool associated(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return (a / b).is_constant();
}

inline RatFunMatrix matrix(std::size_t n, const std::vector<std::string>& entries) {
  std::vector<RationalFunction> e;
  for (const auto& s : entries) e.push_back(R(s));
  return RatFunMatrix(n, entries.size() / n, std::move(e));
}

inline RatFunMatrix ex_sharp_matrix() {
  return matrix(2, {"((x+2)^2*(2*x+1))/(2*(x+1)^2*(x+3))", "-(x+2)^2/(2*x*(x+1)^2*(x+3))",
                    "-(x+2)^2/(2*(x+1)*(x+3))", "((x+2)^2*(2*x+1))/(2*x*(x+1)*(x+3))"});
}

/// Printed M_{-1} for the sharp example.
inline RatFunMatrix ex_sharp_m_minus1() {
  return matrix(2, {"((2*x-1)*x*(x+2))/(2*(x+1)^2*(x-1))", "(x+2)/(2*(x+1)^2*(x-1))", "(x*(x+2))/(2*(x+1)^2)",
                    "((2*x-1)*(x+2))/(2*(x+1)^2)"});
}

/// The rational solutions ((x+1)(c1+c2 x)/(x(x+2)), (x+1)(c1-c2 x)/(x+2)).
inline RatFunVector ex_sharp_solution(long c1, long c2) {
  const RationalFunction x = RationalFunction::x();
  const RationalFunction a = RationalFunction::constant(c1), b = RationalFunction::constant(c2);
  const RationalFunction one = RationalFunction::constant(1), two = RationalFunction::constant(2);
  return {(x + one) * (a + b * x) / (x * (x + two)), (x + one) * (a - b * x) / (x + two)};
}

inline RatFunMatrix eigenring_matrix() { return load_system("eigenring.sys").M; }

/// Valuation of a nonzero rational function at a monic prime, by repeated
/// division in the test code itself.
inline long naive_valuation(const RationalFunction& a, const Polynomial& p) {
  auto mult = [&](Polynomial f) {
    long k = 0;
    for (;;) {
      auto [q, r] = divmod(f, p);
      if (!r.is_zero()) return k;
      f = q;
      ++k;
    }
  };
  return mult(a.num()) - mult(a.den());
}

}  // namespace testing_support
