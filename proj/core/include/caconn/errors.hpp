#pragma once

#include <stdexcept>
#include <string>

namespace caconn {

// An operation's input violated a stated precondition (e.g. a sparsifier was
// handed a graph that is not color-avoiding connected). Witness fields are -1
// when not applicable.
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what, int witness_color = -1,
                              int witness_u = -1, int witness_v = -1)
      : std::runtime_error(what),
        witness_color_(witness_color),
        witness_u_(witness_u),
        witness_v_(witness_v) {}

  int witness_color() const { return witness_color_; }
  int witness_u() const { return witness_u_; }
  int witness_v() const { return witness_v_; }

 private:
  int witness_color_;
  int witness_u_;
  int witness_v_;
};

// An exact search refused to run because the instance exceeds the budget.
class budget_error : public std::runtime_error {
 public:
  budget_error(const std::string& what, int budget, int actual)
      : std::runtime_error(what), budget_(budget), actual_(actual) {}

  int budget() const { return budget_; }
  int actual() const { return actual_; }

 private:
  int budget_;
  int actual_;
};

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace caconn
