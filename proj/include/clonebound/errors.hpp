#pragma once

#include <stdexcept>
#include <string>

namespace clonebound {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidBloch : public Error {
public:
  using Error::Error;
};

class InvalidState : public Error {
public:
  using Error::Error;
};

class NotHermitian : public Error {
public:
  using Error::Error;
};

class RequiresPureInput : public Error {
public:
  using Error::Error;
};

class NotInFamily : public Error {
public:
  using Error::Error;
};

class InvalidResolution : public Error {
public:
  using Error::Error;
};

class NotPhysical : public Error {
public:
  using Error::Error;
};

}  // namespace clonebound
