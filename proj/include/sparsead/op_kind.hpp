#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace sparsead {

// Elementary operation tags. Unary tags store the same node index in both
// operand slots. Tags that fold a constant keep it on the side named by the
// suffix: SubConstL is c - u, SubConstR is u - c, DivConstL is c / u, and so
// on. Const is a nullary source node whose value is the folded constant.
enum class OpTag : std::uint8_t {
  Add,
  Sub,
  Mul,
  Div,
  Pow,
  Neg,
  Sin,
  Cos,
  Exp,
  Log,
  Sqrt,
  AddConst,
  SubConstL,
  SubConstR,
  MulConst,
  DivConstL,
  DivConstR,
  PowConstExp,
  PowConstBase,
  Copy,
  Const,
};

inline constexpr int kNumOpTags = static_cast<int>(OpTag::Const) + 1;

// Number of variable operands: 2 for Add..Pow, 0 for Const, 1 otherwise.
int arity(OpTag tag);
bool has_const(OpTag tag);

// Which second partials of the operation can be nonzero: left is d11,
// right is d22, joint is d12. Constant-on-the-left variants live in slot 2,
// every other unary tag lives in slot 1, so e.g. DivConstL is right-nonlinear.
struct Linearity {
  bool left = false;
  bool right = false;
  bool joint = false;
};
Linearity linearity(OpTag tag);
bool nonlinear(OpTag tag);

// Lower-case tag name used by the text serialization.
std::string_view op_name(OpTag tag);
std::optional<OpTag> op_from_name(std::string_view name);

// Value of the operation at operand values (ua, ub); constant variants read
// op_const. No domain checking here; callers decide how to report trouble.
double eval_op(OpTag tag, double op_const, double ua, double ub);

struct Partials {
  double d1 = 0.0;
  double d2 = 0.0;
};
struct Partials2 {
  double d11 = 0.0;
  double d12 = 0.0;
  double d22 = 0.0;
};

// First and second partial derivatives with respect to the operand slots.
// The slot convention matches linearity(): a unary tag has its whole
// derivative in exactly one slot and zero in the other, so generic binary
// sweep updates are correct for unary nodes with a == b.
Partials partials(OpTag tag, double op_const, double ua, double ub);
Partials2 partials2(OpTag tag, double op_const, double ua, double ub);

}  // namespace sparsead
