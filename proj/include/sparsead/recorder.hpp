#pragma once

#include <functional>
#include <vector>

#include "sparsead/graph.hpp"

namespace sparsead {

class Recorder;

// Handle to a recorded node. Only valid together with the recorder that
// produced it; mixing handles from two recorders throws.
class Var {
 public:
  Var() = default;
  int id() const { return id_; }

 private:
  friend class Recorder;
  Var(Recorder* rec, int id) : rec_(rec), id_(id) {}
  Recorder* rec_ = nullptr;
  int id_ = -1;

  friend Var operator+(Var, Var);
  friend Var operator-(Var, Var);
  friend Var operator*(Var, Var);
  friend Var operator/(Var, Var);
  friend Var operator+(Var, double);
  friend Var operator+(double, Var);
  friend Var operator-(Var, double);
  friend Var operator-(double, Var);
  friend Var operator*(Var, double);
  friend Var operator*(double, Var);
  friend Var operator/(Var, double);
  friend Var operator/(double, Var);
  friend Var operator-(Var);
  friend Var sin(Var);
  friend Var cos(Var);
  friend Var exp(Var);
  friend Var log(Var);
  friend Var sqrt(Var);
  friend Var pow(Var, Var);
  friend Var pow(Var, double);
  friend Var pow(double, Var);
};

// Eager operator-overloading tape builder. Literal doubles fold into the
// *Const operation variants, so the finished tape never holds a constant as
// a separate operand (Const nodes appear only when asked for explicitly).
class Recorder {
 public:
  explicit Recorder(int num_independent);

  int num_independent() const { return n_; }
  int num_nodes() const { return n_ + static_cast<int>(ops_.size()); }

  std::vector<Var> independents();
  Var independent(int j);
  Var constant(double value);

  Var unary(OpTag tag, Var u, double op_const = 0.0);
  Var binary(OpTag tag, Var ua, Var ub);

  // Appends one Copy node per dependent (dependents always form the tape
  // tail) and returns the finished graph. The recorder cannot be used again.
  Graph finish(const std::vector<Var>& dependents);

 private:
  void check_usable() const;
  void check_owned(Var v) const;

  int n_;
  bool finished_ = false;
  std::vector<Graph::Node> ops_;
};

Var operator+(Var, Var);
Var operator-(Var, Var);
Var operator*(Var, Var);
Var operator/(Var, Var);
Var operator+(Var, double);
Var operator+(double, Var);
Var operator-(Var, double);
Var operator-(double, Var);
Var operator*(Var, double);
Var operator*(double, Var);
Var operator/(Var, double);
Var operator/(double, Var);
Var operator-(Var);
Var sin(Var);
Var cos(Var);
Var exp(Var);
Var log(Var);
Var sqrt(Var);
Var pow(Var, Var);
Var pow(Var, double);
Var pow(double, Var);

// Records program(x) on a fresh tape with n independents. The program must
// return at least one dependent.
Graph record(int n,
             const std::function<std::vector<Var>(std::vector<Var>&)>& program);

}  // namespace sparsead
