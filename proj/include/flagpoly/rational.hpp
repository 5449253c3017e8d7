#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>
#include <vector>

namespace Eigen {

// Exact rational scalar support. All arithmetic in this library is exact;
// epsilon/dummy_precision are zero on purpose.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Literal = mpq_class;
  using Nested = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 100,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace flagpoly {

using Rat = mpq_class;
using Int = mpz_class;

using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or zero denominator.
Rat rat_from_string(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string rat_to_string(const Rat& q);

std::string vec_to_string(const Vec& v);

Vec make_vec(std::initializer_list<long> entries);
Vec make_vec_r(const std::vector<Rat>& entries);

}  // namespace flagpoly
