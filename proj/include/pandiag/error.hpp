#pragma once

#include <stdexcept>
#include <string>

namespace pandiag {

// Raised for malformed inputs and violated preconditions throughout the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pandiag
