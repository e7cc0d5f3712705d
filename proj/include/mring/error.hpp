#ifndef MRING_ERROR_HPP
#define MRING_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mring {

enum class errc {
  empty_bases,
  unequal_basis_sizes,
  exchange_axiom_violation,
  rank_out_of_range,
  element_out_of_range,
  rank_zero,
  ground_set_mismatch,
  not_a_flat,
  invalid_cyclic_data,
  not_nested,
  has_loops,
  coloop_set_too_large,
  invalid_chain,
  not_a_chain,
  grade_mismatch,
  input_has_loops,
  grading_violation,
  incomparable_elements,
  rank_too_small,
  precondition_violated,
  product_is_zero,
  bad_range,
  parse_error,
  validation_error,
  infeasible_spec,
  resource_limit,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

}  // namespace mring

#endif
