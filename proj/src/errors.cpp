#include "plie/errors.hpp"

namespace plie {

const char* condition_name(Condition c) {
  switch (c) {
  case Condition::not_direct: return "not_direct";
  case Condition::h_not_subalgebra: return "h_not_subalgebra";
  case Condition::n_not_subalgebra: return "n_not_subalgebra";
  case Condition::not_coisotropic: return "not_coisotropic";
  case Condition::stabilizer_not_closed: return "stabilizer_not_closed";
  case Condition::coadjoint_leaves_stabilizer: return "coadjoint_leaves_stabilizer";
  case Condition::not_invariant: return "not_invariant";
  case Condition::invalid_representation: return "invalid_representation";
  }
  return "unknown";
}

} // namespace plie
