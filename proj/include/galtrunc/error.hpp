#pragma once

#include <stdexcept>
#include <string>

namespace galtrunc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A diagonal Pade entry whose Euclidean stop does not give a genuine
/// approximant of the requested order.
class DefectivePadeError : public Error {
 public:
  DefectivePadeError(unsigned order, const std::string& why)
      : Error("defective Pade approximant at order " + std::to_string(order) + ": " + why),
        order_(order) {}
  unsigned order() const noexcept { return order_; }

 private:
  unsigned order_;
};

inline void require(bool cond, const char* what) {
  if (!cond) throw Error(what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw Error(what);
}

}  // namespace galtrunc
