#pragma once

#include <stdexcept>
#include <string>

namespace ccodes {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Input text that does not denote a transition sequence: bad token, bad
// header, label outside [1, d], dimension outside [0, 64].
class parse_error : public error {
public:
  explicit parse_error(const std::string& what) : error(what) {}
};

// Operation invoked outside its contract: sequence is not a circuit, length
// too short for the method, parameters outside the regime a construction or
// formula is proved for.
class precondition_error : public error {
public:
  explicit precondition_error(const std::string& what) : error(what) {}
};

}  // namespace ccodes
