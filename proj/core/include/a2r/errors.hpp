#pragma once

#include <stdexcept>
#include <string>

namespace a2r {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace a2r
