#pragma once

#include <stdexcept>
#include <string>

namespace plie {

/// Malformed input: wrong shapes, indices out of range, schema violations.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Vector or subspace dimensions do not agree.
class DimensionError : public InputError {
public:
  using InputError::InputError;
};

/// Well-formed input that fails a mathematical condition (Jacobi, closure,
/// coisotropy, ...). Derived classes carry the witnesses.
class MathRejection : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Named structural conditions a construction can reject on.
enum class Condition {
  not_direct,             // h ∩ n != 0 or dimensions do not add up
  h_not_subalgebra,
  n_not_subalgebra,
  not_coisotropic,        // h^⊥ not closed under the dual bracket
  stabilizer_not_closed,  // ker sigma is not a subalgebra
  coadjoint_leaves_stabilizer,
  not_invariant,          // a differential leaves the invariant subspace
  invalid_representation,
};

const char* condition_name(Condition c);

class ConditionFailure : public MathRejection {
public:
  ConditionFailure(Condition c, const std::string& what) : MathRejection(what), condition_(c) {}
  Condition condition() const { return condition_; }

private:
  Condition condition_;
};

} // namespace plie
