// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "boxsol/box.hpp"
#include "boxsol/interval.hpp"
#include "boxsol/stats.hpp"

namespace boxsol {

// Evaluation arithmetic used by the narrowing algorithms: plain binary64
// intervals, lane-packed binary64 (identical values, vector kernels), or
// binary32 intervals widened outward from the binary64 operands.
enum class Arith { scalar_d, packed_d, scalar_f };

enum class OpKind : std::uint8_t {
    constant,
    variable,
    add,
    sub,
    mul,
    div,
    neg,
    pow_int,
    sin,
    cos,
    tan,
    exp,
    log,
    sinh,
    cosh,
    tanh,
    sqrt,
};

bool op_is_binary(OpKind k);
bool op_is_unary(OpKind k);
const char* op_name(OpKind k);

struct ExprNode {
    OpKind kind;
    std::int32_t a = -1;        // left child / unary operand
    std::int32_t b = -1;        // right child
    std::int32_t var = -1;      // variable index
    std::int32_t exponent = 0;  // pow_int, >= 0
    Interval value;             // constant enclosure (tightest for decimal text)
    std::string text;           // constant spelling, kept for unparse
};

// Immutable expression tree in a flat arena; children precede parents, so
// evaluation is one forward sweep.
class Expr {
public:
    Expr() = default;

    bool valid() const { return root_ >= 0; }
    std::int32_t root() const { return root_; }
    std::size_t size() const { return nodes_.size(); }
    const ExprNode& node(std::int32_t i) const { return nodes_[static_cast<std::size_t>(i)]; }
    const std::vector<ExprNode>& nodes() const { return nodes_; }

    bool mentions(std::int32_t var) const;
    std::int32_t max_var() const;  // -1 when no variables occur

    // Natural-extension evaluation over a box, optionally overriding one slot.
    Interval eval(const Box& box) const;
    Interval eval(const Box& box, std::int32_t override_var, const Interval& x) const;
    Interval eval(const Box& box, std::int32_t override_var, const Interval& x,
                  Arith arith, NarrowStats* stats) const;

    // One paired sweep over two boxes that agree except possibly in
    // `override_var`; each component contains the corresponding eval result.
    std::pair<Interval, Interval> eval_pair(const Box& box1, const Box& box2,
                                            NarrowStats* stats) const;
    std::pair<Interval, Interval> eval_pair(const Box& box, std::int32_t override_var,
                                            const Interval& x1, const Interval& x2,
                                            NarrowStats* stats) const;

    class Builder {
    public:
        std::int32_t constant(double v);
        std::int32_t constant(const Interval& enclosure, std::string text);
        std::int32_t variable(std::int32_t index);
        std::int32_t unary(OpKind k, std::int32_t child);
        std::int32_t binary(OpKind k, std::int32_t lhs, std::int32_t rhs);
        std::int32_t pow(std::int32_t child, std::int32_t exponent);

        // simplifying helpers used when assembling derivatives
        std::int32_t add_s(std::int32_t l, std::int32_t r);
        std::int32_t sub_s(std::int32_t l, std::int32_t r);
        std::int32_t mul_s(std::int32_t l, std::int32_t r);
        std::int32_t div_s(std::int32_t l, std::int32_t r);
        std::int32_t neg_s(std::int32_t c);

        std::int32_t copy_subtree(const Expr& src, std::int32_t index);

        bool is_zero(std::int32_t i) const;
        bool is_one(std::int32_t i) const;

        // Compacts to the nodes reachable from `root` and freezes the tree.
        Expr finish(std::int32_t root);

    private:
        std::int32_t push(ExprNode n);
        std::vector<ExprNode> nodes_;
    };

private:
    friend class Builder;
    std::vector<ExprNode> nodes_;
    std::int32_t root_ = -1;
};

// Symbolic partial derivative with respect to `var`; standard rules,
// d(x^n)/dx = n*x^(n-1), trivial zero/one factors folded away.
Expr differentiate(const Expr& e, std::int32_t var);

// Square system of equations (each expression read as expr = 0) with the
// partial-derivative table computed once at construction.
class ExprSystem {
public:
    ExprSystem() = default;
    ExprSystem(std::size_t arity, std::vector<std::string> var_names,
               std::vector<Expr> equations);

    std::size_t arity() const { return arity_; }
    std::size_t equation_count() const { return equations_.size(); }
    const std::vector<std::string>& var_names() const { return var_names_; }
    const Expr& equation(std::size_t eq) const { return equations_[eq]; }
    const Expr& partial(std::size_t eq, std::size_t var) const { return partials_[eq][var]; }
    bool mentions(std::size_t eq, std::size_t var) const { return mentions_[eq][var] != 0; }

private:
    std::size_t arity_ = 0;
    std::vector<std::string> var_names_;
    std::vector<Expr> equations_;
    std::vector<std::vector<Expr>> partials_;
    std::vector<std::vector<char>> mentions_;
};

// The unary interval function g(x) = f(I1,...,x,...,In) for one variable of
// one equation against a frozen box, plus its derivative.  Pure and freely
// shareable; the box must outlive the projection.
class Projection {
public:
    Projection(const ExprSystem& sys, std::size_t eq, std::size_t var, const Box& box)
        : sys_(&sys), eq_(eq), var_(var), box_(&box) {}

    std::size_t var() const { return var_; }
    std::size_t eq() const { return eq_; }
    const Box& box() const { return *box_; }

    Interval eval(const Interval& x, Arith arith, NarrowStats& stats) const;
    Interval deriv_eval(const Interval& x, Arith arith, NarrowStats& stats) const;

    // paired single-precision evaluations (one packed call, two g-evals)
    std::pair<Interval, Interval> eval_pair(const Interval& x1, const Interval& x2,
                                            NarrowStats& stats) const;
    std::pair<Interval, Interval> deriv_eval_pair(const Interval& x1, const Interval& x2,
                                                  NarrowStats& stats) const;

private:
    const ExprSystem* sys_;
    std::size_t eq_, var_;
    const Box* box_;
};

inline Projection project(const ExprSystem& sys, std::size_t eq, std::size_t var,
                          const Box& box) {
    return Projection(sys, eq, var, box);
}

}  // namespace boxsol
