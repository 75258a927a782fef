#include "sparsead/op_kind.hpp"

#include <array>
#include <cmath>

namespace sparsead {

int arity(OpTag tag) {
  switch (tag) {
    case OpTag::Add:
    case OpTag::Sub:
    case OpTag::Mul:
    case OpTag::Div:
    case OpTag::Pow:
      return 2;
    case OpTag::Const:
      return 0;
    default:
      return 1;
  }
}

bool has_const(OpTag tag) {
  switch (tag) {
    case OpTag::AddConst:
    case OpTag::SubConstL:
    case OpTag::SubConstR:
    case OpTag::MulConst:
    case OpTag::DivConstL:
    case OpTag::DivConstR:
    case OpTag::PowConstExp:
    case OpTag::PowConstBase:
    case OpTag::Const:
      return true;
    default:
      return false;
  }
}

Linearity linearity(OpTag tag) {
  switch (tag) {
    case OpTag::Mul:
      return {false, false, true};
    case OpTag::Div:
      return {false, true, true};
    case OpTag::Pow:
      return {true, true, true};
    case OpTag::Sin:
    case OpTag::Cos:
    case OpTag::Exp:
    case OpTag::Log:
    case OpTag::Sqrt:
    case OpTag::PowConstExp:
      return {true, false, false};
    case OpTag::DivConstL:
    case OpTag::PowConstBase:
      return {false, true, false};
    default:
      return {false, false, false};
  }
}

bool nonlinear(OpTag tag) {
  Linearity l = linearity(tag);
  return l.left || l.right || l.joint;
}

namespace {

constexpr std::array<std::string_view, kNumOpTags> kOpNames = {
    "add",      "sub",       "mul",      "div",       "pow",
    "neg",      "sin",       "cos",      "exp",       "log",
    "sqrt",     "addconst",  "subconstl", "subconstr", "mulconst",
    "divconstl", "divconstr", "powconstexp", "powconstbase",
    "copy",     "const",
};

}  // namespace

std::string_view op_name(OpTag tag) { return kOpNames[static_cast<int>(tag)]; }

std::optional<OpTag> op_from_name(std::string_view name) {
  for (int i = 0; i < kNumOpTags; ++i) {
    if (kOpNames[i] == name) return static_cast<OpTag>(i);
  }
  return std::nullopt;
}

double eval_op(OpTag tag, double op_const, double ua, double ub) {
  switch (tag) {
    case OpTag::Add:
      return ua + ub;
    case OpTag::Sub:
      return ua - ub;
    case OpTag::Mul:
      return ua * ub;
    case OpTag::Div:
      return ua / ub;
    case OpTag::Pow:
      return std::pow(ua, ub);
    case OpTag::Neg:
      return -ua;
    case OpTag::Sin:
      return std::sin(ua);
    case OpTag::Cos:
      return std::cos(ua);
    case OpTag::Exp:
      return std::exp(ua);
    case OpTag::Log:
      return std::log(ua);
    case OpTag::Sqrt:
      return std::sqrt(ua);
    case OpTag::AddConst:
      return ua + op_const;
    case OpTag::SubConstL:
      return op_const - ub;
    case OpTag::SubConstR:
      return ua - op_const;
    case OpTag::MulConst:
      return ua * op_const;
    case OpTag::DivConstL:
      return op_const / ub;
    case OpTag::DivConstR:
      return ua / op_const;
    case OpTag::PowConstExp:
      return std::pow(ua, op_const);
    case OpTag::PowConstBase:
      return std::pow(op_const, ub);
    case OpTag::Copy:
      return ua;
    case OpTag::Const:
      return op_const;
  }
  return 0.0;
}

Partials partials(OpTag tag, double op_const, double ua, double ub) {
  switch (tag) {
    case OpTag::Add:
      return {1.0, 1.0};
    case OpTag::Sub:
      return {1.0, -1.0};
    case OpTag::Mul:
      return {ub, ua};
    case OpTag::Div:
      return {1.0 / ub, -ua / (ub * ub)};
    case OpTag::Pow:
      return {ub * std::pow(ua, ub - 1.0), std::pow(ua, ub) * std::log(ua)};
    case OpTag::Neg:
      return {-1.0, 0.0};
    case OpTag::Sin:
      return {std::cos(ua), 0.0};
    case OpTag::Cos:
      return {-std::sin(ua), 0.0};
    case OpTag::Exp:
      return {std::exp(ua), 0.0};
    case OpTag::Log:
      return {1.0 / ua, 0.0};
    case OpTag::Sqrt:
      return {0.5 / std::sqrt(ua), 0.0};
    case OpTag::AddConst:
      return {1.0, 0.0};
    case OpTag::SubConstL:
      return {0.0, -1.0};
    case OpTag::SubConstR:
      return {1.0, 0.0};
    case OpTag::MulConst:
      return {op_const, 0.0};
    case OpTag::DivConstL:
      return {0.0, -op_const / (ub * ub)};
    case OpTag::DivConstR:
      return {1.0 / op_const, 0.0};
    case OpTag::PowConstExp:
      return {op_const * std::pow(ua, op_const - 1.0), 0.0};
    case OpTag::PowConstBase:
      return {0.0, std::pow(op_const, ub) * std::log(op_const)};
    case OpTag::Copy:
      return {1.0, 0.0};
    case OpTag::Const:
      return {0.0, 0.0};
  }
  return {};
}

Partials2 partials2(OpTag tag, double op_const, double ua, double ub) {
  switch (tag) {
    case OpTag::Mul:
      return {0.0, 1.0, 0.0};
    case OpTag::Div:
      return {0.0, -1.0 / (ub * ub), 2.0 * ua / (ub * ub * ub)};
    case OpTag::Pow: {
      double lg = std::log(ua);
      double d11 = ub * (ub - 1.0) * std::pow(ua, ub - 2.0);
      double d12 = std::pow(ua, ub - 1.0) * (1.0 + ub * lg);
      double d22 = std::pow(ua, ub) * lg * lg;
      return {d11, d12, d22};
    }
    case OpTag::Sin:
      return {-std::sin(ua), 0.0, 0.0};
    case OpTag::Cos:
      return {-std::cos(ua), 0.0, 0.0};
    case OpTag::Exp:
      return {std::exp(ua), 0.0, 0.0};
    case OpTag::Log:
      return {-1.0 / (ua * ua), 0.0, 0.0};
    case OpTag::Sqrt:
      return {-0.25 / (ua * std::sqrt(ua)), 0.0, 0.0};
    case OpTag::DivConstL:
      return {0.0, 0.0, 2.0 * op_const / (ub * ub * ub)};
    case OpTag::PowConstExp:
      return {op_const * (op_const - 1.0) * std::pow(ua, op_const - 2.0), 0.0,
              0.0};
    case OpTag::PowConstBase: {
      double lg = std::log(op_const);
      return {0.0, 0.0, std::pow(op_const, ub) * lg * lg};
    }
    default:
      return {};
  }
}

}  // namespace sparsead
