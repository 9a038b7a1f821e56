#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pmvlab/error.hpp"

namespace pmvlab {

/// Anything exposing the basic pseudo MV-algebra signature (M; ⊕, ⁻, ∼, 0, 1).
/// Finite table algebras use carrier indices as elements; interval algebras
/// of ℓ-groups use exact group elements.
template <class A>
concept PseudoMV = std::equality_comparable<typename A::element_type> &&
    requires(const A& m, const typename A::element_type& x) {
      { m.oplus(x, x) } -> std::convertible_to<typename A::element_type>;
      { m.neg_minus(x) } -> std::convertible_to<typename A::element_type>;
      { m.neg_tilde(x) } -> std::convertible_to<typename A::element_type>;
      { m.zero() } -> std::convertible_to<typename A::element_type>;
      { m.one() } -> std::convertible_to<typename A::element_type>;
      { m.contains(x) } -> std::convertible_to<bool>;
    };

template <PseudoMV A>
using ElementOf = typename A::element_type;

/// Derived operations computed literally from ⊕ and the two negations.
namespace formula {

// y ⊙ x = (x⁻ ⊕ y⁻)∼
template <PseudoMV A>
ElementOf<A> odot(const A& m, const ElementOf<A>& x, const ElementOf<A>& y) {
  return m.neg_tilde(m.oplus(m.neg_minus(y), m.neg_minus(x)));
}

// x ∨ y = x ⊕ (x∼ ⊙ y)
template <PseudoMV A>
ElementOf<A> join(const A& m, const ElementOf<A>& x, const ElementOf<A>& y) {
  return m.oplus(x, formula::odot(m, m.neg_tilde(x), y));
}

// x ∧ y = x ⊙ (x⁻ ⊕ y)
template <PseudoMV A>
ElementOf<A> meet(const A& m, const ElementOf<A>& x, const ElementOf<A>& y) {
  return formula::odot(m, x, m.oplus(m.neg_minus(x), y));
}

template <PseudoMV A>
bool leq(const A& m, const ElementOf<A>& x, const ElementOf<A>& y) {
  return m.oplus(m.neg_minus(x), y) == m.one();
}

}  // namespace formula

// Dispatchers: use an algebra's own fast operation when it has one.

template <PseudoMV A>
ElementOf<A> odot(const A& m, const ElementOf<A>& x, const ElementOf<A>& y) {
  if constexpr (requires { m.odot(x, y); })
    return m.odot(x, y);
  else
    return formula::odot(m, x, y);
}

template <PseudoMV A>
ElementOf<A> join(const A& m, const ElementOf<A>& x, const ElementOf<A>& y) {
  if constexpr (requires { m.join(x, y); })
    return m.join(x, y);
  else
    return formula::join(m, x, y);
}

template <PseudoMV A>
ElementOf<A> meet(const A& m, const ElementOf<A>& x, const ElementOf<A>& y) {
  if constexpr (requires { m.meet(x, y); })
    return m.meet(x, y);
  else
    return formula::meet(m, x, y);
}

template <PseudoMV A>
bool leq(const A& m, const ElementOf<A>& x, const ElementOf<A>& y) {
  if constexpr (requires { m.leq(x, y); })
    return m.leq(x, y);
  else
    return formula::leq(m, x, y);
}

/// x ⊖₋ y := x ⊙ y⁻
template <PseudoMV A>
ElementOf<A> minus_left(const A& m, const ElementOf<A>& x, const ElementOf<A>& y) {
  return odot(m, x, m.neg_minus(y));
}

/// y ⊖∼ x := y∼ ⊙ x
template <PseudoMV A>
ElementOf<A> minus_tilde(const A& m, const ElementOf<A>& y, const ElementOf<A>& x) {
  return odot(m, m.neg_tilde(y), x);
}

/// n.x with 0.x = 0, 1.x = x, n.x = (n-1).x ⊕ x.
template <PseudoMV A>
ElementOf<A> times(const A& m, std::size_t n, const ElementOf<A>& x) {
  if (n == 0) return m.zero();
  ElementOf<A> acc = x;
  for (std::size_t k = 2; k <= n; ++k) {
    auto next = m.oplus(acc, x);
    if (next == acc) break;  // n.x is non-decreasing; once stable it stays
    acc = std::move(next);
  }
  return acc;
}

/// xⁿ with x⁰ = 1, x¹ = x, xⁿ = xⁿ⁻¹ ⊙ x.
template <PseudoMV A>
ElementOf<A> power(const A& m, std::size_t n, const ElementOf<A>& x) {
  if (n == 0) return m.one();
  ElementOf<A> acc = x;
  for (std::size_t k = 2; k <= n; ++k) {
    auto next = odot(m, acc, x);
    if (next == acc) break;
    acc = std::move(next);
  }
  return acc;
}

enum class Term { oplus, neg_minus, neg_tilde, odot, join, meet, minus_left, minus_tilde, times, power };

/// Evaluates a derived term. Unary terms read args[0]; times/power also read n.
template <PseudoMV A>
ElementOf<A> eval(const A& m, Term term, std::span<const ElementOf<A>> args, std::size_t n = 0) {
  const std::size_t arity = (term == Term::neg_minus || term == Term::neg_tilde ||
                             term == Term::times || term == Term::power)
                                ? 1
                                : 2;
  if (args.size() != arity)
    throw Error(ErrorCode::precondition_failed, "term expects " + std::to_string(arity) + " argument(s)");
  for (const auto& a : args)
    if (!m.contains(a)) throw Error(ErrorCode::out_of_carrier, "argument is not a carrier element");
  switch (term) {
    case Term::oplus: return m.oplus(args[0], args[1]);
    case Term::neg_minus: return m.neg_minus(args[0]);
    case Term::neg_tilde: return m.neg_tilde(args[0]);
    case Term::odot: return odot(m, args[0], args[1]);
    case Term::join: return join(m, args[0], args[1]);
    case Term::meet: return meet(m, args[0], args[1]);
    case Term::minus_left: return minus_left(m, args[0], args[1]);
    case Term::minus_tilde: return minus_tilde(m, args[0], args[1]);
    case Term::times: return times(m, n, args[0]);
    case Term::power: return power(m, n, args[0]);
  }
  throw Error(ErrorCode::precondition_failed, "unknown term");
}

/// a ⊕ a = a, cross-checked against the disjointness of a from its negations.
template <PseudoMV A>
bool is_boolean(const A& m, const ElementOf<A>& a) {
  if (!m.contains(a)) throw Error(ErrorCode::out_of_carrier, "element is not in the carrier");
  const bool idempotent = m.oplus(a, a) == a;
  const bool minus_disjoint = meet(m, a, m.neg_minus(a)) == m.zero();
  const bool tilde_disjoint = meet(m, a, m.neg_tilde(a)) == m.zero();
  if (idempotent != minus_disjoint || idempotent != tilde_disjoint)
    throw Error(ErrorCode::internal_inconsistency, "Boolean characterisations disagree");
  if (idempotent && !(m.neg_minus(a) == m.neg_tilde(a)))
    throw Error(ErrorCode::internal_inconsistency, "Boolean element with distinct negations");
  return idempotent;
}

/// Checks (A1)-(A8), the dual involution law and carrier closure on one
/// triple. fail(label) is called once per violated law.
template <PseudoMV A, class Fail>
void check_axiom_instance(const A& m, const ElementOf<A>& x, const ElementOf<A>& y,
                          const ElementOf<A>& z, Fail&& fail) {
  const auto& zero = m.zero();
  const auto& one = m.one();
  const auto xy = m.oplus(x, y);
  if (!(m.contains(xy) && m.contains(m.neg_minus(x)) && m.contains(m.neg_tilde(x))))
    fail("closure");
  if (!(m.oplus(x, m.oplus(y, z)) == m.oplus(xy, z))) fail("A1");
  if (!(m.oplus(x, zero) == x && m.oplus(zero, x) == x)) fail("A2");
  if (!(m.oplus(x, one) == one && m.oplus(one, x) == one)) fail("A3");
  if (!(m.neg_tilde(one) == zero && m.neg_minus(one) == zero)) fail("A4");
  if (!(m.neg_tilde(m.oplus(m.neg_minus(x), m.neg_minus(y))) ==
        m.neg_minus(m.oplus(m.neg_tilde(x), m.neg_tilde(y)))))
    fail("A5");
  {
    const auto t1 = m.oplus(x, formula::odot(m, m.neg_tilde(x), y));
    const auto t2 = m.oplus(y, formula::odot(m, m.neg_tilde(y), x));
    const auto t3 = m.oplus(formula::odot(m, x, m.neg_minus(y)), y);
    const auto t4 = m.oplus(formula::odot(m, y, m.neg_minus(x)), x);
    if (!(t1 == t2 && t2 == t3 && t3 == t4)) fail("A6");
    if (!(formula::odot(m, x, m.oplus(m.neg_minus(x), y)) == formula::odot(m, m.oplus(x, m.neg_tilde(y)), y))) fail("A7");
  }
  if (!(m.neg_tilde(m.neg_minus(x)) == x)) fail("A8");
  if (!(m.neg_minus(m.neg_tilde(x)) == x)) fail("A8-dual");
}

}  // namespace pmvlab
