#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace drinfeld {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Invalid argument outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotOnCurve : public Error {
 public:
  NotOnCurve() : Error("point is not on the curve") {}
};

// Evaluation at a pole; order() is the (negative) vanishing order.
class PoleError : public Error {
 public:
  explicit PoleError(int order)
      : Error("function has a pole of order " + std::to_string(-order)), order_(order) {}
  int order() const noexcept { return order_; }

 private:
  int order_;
};

class PrecisionError : public Error {
 public:
  using Error::Error;
};

class ClassNumberUnsupported : public Error {
 public:
  explicit ClassNumberUnsupported(long long h)
      : Error("class number " + std::to_string(h) + " is not supported (need h = 1)"), h_(h) {}
  long long class_number() const noexcept { return h_; }

 private:
  long long h_;
};

class SearchExhausted : public Error {
 public:
  using Error::Error;
};

class RangeUnsupported : public Error {
 public:
  using Error::Error;
};

// A construction produced data violating an identity it is supposed to satisfy.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace drinfeld
