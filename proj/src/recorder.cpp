#include "sparsead/recorder.hpp"

#include <stdexcept>

namespace sparsead {

Recorder::Recorder(int num_independent) : n_(num_independent) {
  if (n_ < 1)
    throw std::invalid_argument("recorder: need at least one independent");
}

void Recorder::check_usable() const {
  if (finished_) throw std::logic_error("recorder: already finished");
}

void Recorder::check_owned(Var v) const {
  if (v.rec_ != this)
    throw std::invalid_argument("recorder: operand from a different recorder");
  if (v.id_ < 0 || v.id_ >= num_nodes())
    throw std::invalid_argument("recorder: invalid operand handle");
}

std::vector<Var> Recorder::independents() {
  std::vector<Var> xs;
  xs.reserve(n_);
  for (int j = 0; j < n_; ++j) xs.push_back(Var(this, j));
  return xs;
}

Var Recorder::independent(int j) {
  if (j < 0 || j >= n_)
    throw std::invalid_argument("recorder: independent index out of range");
  return Var(this, j);
}

Var Recorder::constant(double value) {
  check_usable();
  Graph::Node nd;
  nd.tag = OpTag::Const;
  nd.c = value;
  ops_.push_back(nd);
  return Var(this, num_nodes() - 1);
}

Var Recorder::unary(OpTag tag, Var u, double op_const) {
  check_usable();
  check_owned(u);
  if (arity(tag) != 1) throw std::invalid_argument("recorder: tag is not unary");
  Graph::Node nd;
  nd.tag = tag;
  nd.a = nd.b = u.id_;
  if (has_const(tag)) nd.c = op_const;
  ops_.push_back(nd);
  return Var(this, num_nodes() - 1);
}

Var Recorder::binary(OpTag tag, Var ua, Var ub) {
  check_usable();
  check_owned(ua);
  check_owned(ub);
  if (arity(tag) != 2)
    throw std::invalid_argument("recorder: tag is not binary");
  Graph::Node nd;
  nd.tag = tag;
  nd.a = ua.id_;
  nd.b = ub.id_;
  ops_.push_back(nd);
  return Var(this, num_nodes() - 1);
}

Graph Recorder::finish(const std::vector<Var>& dependents) {
  check_usable();
  if (dependents.empty())
    throw std::invalid_argument("recorder: need at least one dependent");
  for (Var d : dependents) check_owned(d);
  for (Var d : dependents) {
    Graph::Node nd;
    nd.tag = OpTag::Copy;
    nd.a = nd.b = d.id_;
    ops_.push_back(nd);
  }
  finished_ = true;
  return Graph(n_, static_cast<int>(dependents.size()), std::move(ops_));
}

namespace {

Recorder* checked(Recorder* rec) {
  if (rec == nullptr)
    throw std::invalid_argument("recorder: unbound Var handle");
  return rec;
}

}  // namespace

Var operator+(Var a, Var b) { return checked(a.rec_)->binary(OpTag::Add, a, b); }
Var operator-(Var a, Var b) { return checked(a.rec_)->binary(OpTag::Sub, a, b); }
Var operator*(Var a, Var b) { return checked(a.rec_)->binary(OpTag::Mul, a, b); }
Var operator/(Var a, Var b) { return checked(a.rec_)->binary(OpTag::Div, a, b); }
Var pow(Var a, Var b) { return checked(a.rec_)->binary(OpTag::Pow, a, b); }

Var operator+(Var a, double c) {
  return checked(a.rec_)->unary(OpTag::AddConst, a, c);
}
Var operator+(double c, Var a) {
  return checked(a.rec_)->unary(OpTag::AddConst, a, c);
}
Var operator-(Var a, double c) {
  return checked(a.rec_)->unary(OpTag::SubConstR, a, c);
}
Var operator-(double c, Var a) {
  return checked(a.rec_)->unary(OpTag::SubConstL, a, c);
}
Var operator*(Var a, double c) {
  return checked(a.rec_)->unary(OpTag::MulConst, a, c);
}
Var operator*(double c, Var a) {
  return checked(a.rec_)->unary(OpTag::MulConst, a, c);
}
Var operator/(Var a, double c) {
  return checked(a.rec_)->unary(OpTag::DivConstR, a, c);
}
Var operator/(double c, Var a) {
  return checked(a.rec_)->unary(OpTag::DivConstL, a, c);
}
Var pow(Var a, double c) {
  return checked(a.rec_)->unary(OpTag::PowConstExp, a, c);
}
Var pow(double c, Var a) {
  return checked(a.rec_)->unary(OpTag::PowConstBase, a, c);
}

Var operator-(Var a) { return checked(a.rec_)->unary(OpTag::Neg, a); }
Var sin(Var a) { return checked(a.rec_)->unary(OpTag::Sin, a); }
Var cos(Var a) { return checked(a.rec_)->unary(OpTag::Cos, a); }
Var exp(Var a) { return checked(a.rec_)->unary(OpTag::Exp, a); }
Var log(Var a) { return checked(a.rec_)->unary(OpTag::Log, a); }
Var sqrt(Var a) { return checked(a.rec_)->unary(OpTag::Sqrt, a); }

Graph record(
    int n, const std::function<std::vector<Var>(std::vector<Var>&)>& program) {
  Recorder rec(n);
  std::vector<Var> xs = rec.independents();
  std::vector<Var> ys = program(xs);
  return rec.finish(ys);
}

}  // namespace sparsead
