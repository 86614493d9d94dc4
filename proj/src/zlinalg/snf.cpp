#include "nct/zlinalg/snf.hpp"

namespace nct {

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfResult r{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  detail::smith_reduce<Integer, detail::IntegerEuclid>(r.S, &r.U, &r.V);
  return r;
}

std::vector<Integer> invariant_factors(const SnfResult& snf) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(snf.S.rows(), snf.S.cols()); ++i) out.push_back(snf.S(i, i));
  return out;
}

}  // namespace nct
