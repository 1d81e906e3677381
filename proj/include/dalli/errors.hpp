#pragma once

#include <stdexcept>

namespace dalli {

/// A solver produced a witness that failed verify_alliance. Always a bug in
/// an encoding or a search, never a property of the input.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dalli
