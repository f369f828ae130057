#pragma once

#include "troplift/extension.hpp"
#include "troplift/ratfunc.hpp"

namespace troplift {

enum class FieldOp { Add, Sub, Mul, Div };

/// Uniform entry point for exact field arithmetic; division by zero raises
/// DomainError(Kind::DivisionByZero). Mixed extension contexts raise
/// std::logic_error.
template <class K>
K field_op(const K& a, const K& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div:
      if (is_zero(b))
        throw DomainError(DomainError::Kind::DivisionByZero, "division by zero");
      return a / b;
  }
  return a;
}

/// Strict total order for deterministic choices: rationals by value,
/// extension elements lexicographically on their coefficient vectors
/// (constant term first, missing entries read as 0).
bool canonical_less(const Rational& a, const Rational& b);
bool canonical_less(const ExtElement& a, const ExtElement& b);

}  // namespace troplift
