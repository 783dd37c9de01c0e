// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#include "boxsol/expr.hpp"

#include <cassert>
#include <cstdio>

#include "boxsol/packed.hpp"

namespace boxsol {

bool op_is_binary(OpKind k) {
    switch (k) {
        case OpKind::add:
        case OpKind::sub:
        case OpKind::mul:
        case OpKind::div:
            return true;
        default:
            return false;
    }
}

bool op_is_unary(OpKind k) {
    switch (k) {
        case OpKind::neg:
        case OpKind::sin:
        case OpKind::cos:
        case OpKind::tan:
        case OpKind::exp:
        case OpKind::log:
        case OpKind::sinh:
        case OpKind::cosh:
        case OpKind::tanh:
        case OpKind::sqrt:
            return true;
        default:
            return false;
    }
}

const char* op_name(OpKind k) {
    switch (k) {
        case OpKind::constant: return "const";
        case OpKind::variable: return "var";
        case OpKind::add: return "+";
        case OpKind::sub: return "-";
        case OpKind::mul: return "*";
        case OpKind::div: return "/";
        case OpKind::neg: return "neg";
        case OpKind::pow_int: return "^";
        case OpKind::sin: return "sin";
        case OpKind::cos: return "cos";
        case OpKind::tan: return "tan";
        case OpKind::exp: return "exp";
        case OpKind::log: return "log";
        case OpKind::sinh: return "sinh";
        case OpKind::cosh: return "cosh";
        case OpKind::tanh: return "tanh";
        case OpKind::sqrt: return "sqrt";
    }
    return "?";
}

namespace {

Interval transcend_scalar(OpKind k, const Interval& a) {
    switch (k) {
        case OpKind::sin: return sin(a);
        case OpKind::cos: return cos(a);
        case OpKind::tan: return tan(a);
        case OpKind::exp: return exp(a);
        case OpKind::log: return log(a);
        case OpKind::sinh: return sinh(a);
        case OpKind::cosh: return cosh(a);
        case OpKind::tanh: return tanh(a);
        case OpKind::sqrt: return sqrt(a);
        default: assert(false); return Interval::empty();
    }
}

struct ScalarKernel {
    using V = Interval;
    static V from_interval(const Interval& a) { return a; }
    static V add(const V& a, const V& b) { return boxsol::add(a, b); }
    static V sub(const V& a, const V& b) { return boxsol::sub(a, b); }
    static V mul(const V& a, const V& b) { return boxsol::mul(a, b); }
    static V div(const V& a, const V& b) { return boxsol::div(a, b); }
    static V neg(const V& a) { return boxsol::neg(a); }
    static V pow(const V& a, int n) { return pow_int(a, n); }
    static V transcend(OpKind k, const V& a) { return transcend_scalar(k, a); }
};

struct PackedDKernel {
    using V = packed::PackedD;
    static V from_interval(const Interval& a) { return packed::encode(a); }
    static V add(const V& a, const V& b) { return packed::pd_add(a, b); }
    static V sub(const V& a, const V& b) { return packed::pd_sub(a, b); }
    static V mul(const V& a, const V& b) { return packed::pd_mul(a, b); }
    static V div(const V& a, const V& b) { return packed::pd_div(a, b); }
    static V neg(const V& a) { return packed::pd_neg(a); }
    static V pow(const V& a, int n) { return packed::pd_pow_int(a, n); }
    // not lane-packed; falls back to the scalar kernel
    static V transcend(OpKind k, const V& a) {
        return packed::encode(transcend_scalar(k, packed::decode(a)));
    }
};

struct PairKernel {
    using V = packed::PackedF2;
    static V add(const V& a, const V& b) { return packed::pf2_add(a, b); }
    static V sub(const V& a, const V& b) { return packed::pf2_sub(a, b); }
    static V mul(const V& a, const V& b) { return packed::pf2_mul(a, b); }
    static V div(const V& a, const V& b) { return packed::pf2_div(a, b); }
    static V neg(const V& a) { return packed::pf2_neg(a); }
    static V pow(const V& a, int n) { return packed::pf2_pow_int(a, n); }
    static V transcend(OpKind k, const V& a) {
        auto [x, y] = packed::decode_pair(a);
        return packed::encode_pair(transcend_scalar(k, x), transcend_scalar(k, y));
    }
};

template <class K, class LeafFn>
typename K::V sweep(const Expr& e, LeafFn&& leaf) {
    thread_local std::vector<typename K::V> scratch;
    scratch.resize(e.size());
    const auto& nodes = e.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const ExprNode& n = nodes[i];
        typename K::V v;
        switch (n.kind) {
            case OpKind::constant: v = leaf(n); break;
            case OpKind::variable: v = leaf(n); break;
            case OpKind::add: v = K::add(scratch[n.a], scratch[n.b]); break;
            case OpKind::sub: v = K::sub(scratch[n.a], scratch[n.b]); break;
            case OpKind::mul: v = K::mul(scratch[n.a], scratch[n.b]); break;
            case OpKind::div: v = K::div(scratch[n.a], scratch[n.b]); break;
            case OpKind::neg: v = K::neg(scratch[n.a]); break;
            case OpKind::pow_int: v = K::pow(scratch[n.a], n.exponent); break;
            default: v = K::transcend(n.kind, scratch[n.a]); break;
        }
        scratch[i] = v;
    }
    return scratch[e.root()];
}

}  // namespace

bool Expr::mentions(std::int32_t var) const {
    for (const ExprNode& n : nodes_)
        if (n.kind == OpKind::variable && n.var == var) return true;
    return false;
}

std::int32_t Expr::max_var() const {
    std::int32_t m = -1;
    for (const ExprNode& n : nodes_)
        if (n.kind == OpKind::variable && n.var > m) m = n.var;
    return m;
}

Interval Expr::eval(const Box& box) const { return eval(box, -1, Interval()); }

Interval Expr::eval(const Box& box, std::int32_t override_var, const Interval& x) const {
    return eval(box, override_var, x, Arith::scalar_d, nullptr);
}

Interval Expr::eval(const Box& box, std::int32_t override_var, const Interval& x,
                    Arith arith, NarrowStats*) const {
    assert(valid());
    if (box.failed()) return Interval::empty();
    if (override_var >= 0 && x.is_empty()) return Interval::empty();
    auto slot = [&](std::int32_t v) -> const Interval& {
        return (v == override_var) ? x : box[static_cast<std::size_t>(v)];
    };
    switch (arith) {
        case Arith::scalar_d:
            return sweep<ScalarKernel>(*this, [&](const ExprNode& n) {
                return n.kind == OpKind::constant ? n.value : slot(n.var);
            });
        case Arith::packed_d:
            return packed::decode(sweep<PackedDKernel>(*this, [&](const ExprNode& n) {
                return packed::encode(n.kind == OpKind::constant ? n.value : slot(n.var));
            }));
        case Arith::scalar_f: {
            // single-precision interval arithmetic, one interval per operation
            // (the second half just duplicates the first)
            auto p = sweep<PairKernel>(*this, [&](const ExprNode& n) {
                const Interval& v = n.kind == OpKind::constant ? n.value : slot(n.var);
                return packed::encode_pair(v, v);
            });
            return packed::decode_pair(p).first;
        }
    }
    return Interval::empty();
}

std::pair<Interval, Interval> Expr::eval_pair(const Box& box1, const Box& box2,
                                              NarrowStats*) const {
    assert(valid() && box1.size() == box2.size());
    if (box1.failed() || box2.failed()) {
        const Interval e1 = box1.failed() ? Interval::empty() : eval(box1);
        const Interval e2 = box2.failed() ? Interval::empty() : eval(box2);
        return {e1, e2};
    }
    auto p = sweep<PairKernel>(*this, [&](const ExprNode& n) {
        if (n.kind == OpKind::constant) return packed::encode_pair(n.value, n.value);
        return packed::encode_pair(box1[n.var], box2[n.var]);
    });
    return packed::decode_pair(p);
}

std::pair<Interval, Interval> Expr::eval_pair(const Box& box, std::int32_t override_var,
                                              const Interval& x1, const Interval& x2,
                                              NarrowStats*) const {
    assert(valid());
    if (box.failed() || x1.is_empty() || x2.is_empty()) {
        const Interval e1 = (box.failed() || x1.is_empty())
                                ? Interval::empty()
                                : eval(box, override_var, x1);
        const Interval e2 = (box.failed() || x2.is_empty())
                                ? Interval::empty()
                                : eval(box, override_var, x2);
        return {e1, e2};
    }
    auto p = sweep<PairKernel>(*this, [&](const ExprNode& n) {
        if (n.kind == OpKind::constant) return packed::encode_pair(n.value, n.value);
        if (n.var == override_var) return packed::encode_pair(x1, x2);
        const Interval& v = box[static_cast<std::size_t>(n.var)];
        return packed::encode_pair(v, v);
    });
    return packed::decode_pair(p);
}

// --- Builder ---------------------------------------------------------------

std::int32_t Expr::Builder::push(ExprNode n) {
    nodes_.push_back(std::move(n));
    return static_cast<std::int32_t>(nodes_.size() - 1);
}

std::int32_t Expr::Builder::constant(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    ExprNode n;
    n.kind = OpKind::constant;
    n.value = Interval::point(v);
    n.text = buf;
    return push(std::move(n));
}

std::int32_t Expr::Builder::constant(const Interval& enclosure, std::string text) {
    ExprNode n;
    n.kind = OpKind::constant;
    n.value = enclosure;
    n.text = std::move(text);
    return push(std::move(n));
}

std::int32_t Expr::Builder::variable(std::int32_t index) {
    assert(index >= 0);
    ExprNode n;
    n.kind = OpKind::variable;
    n.var = index;
    return push(std::move(n));
}

std::int32_t Expr::Builder::unary(OpKind k, std::int32_t child) {
    assert(op_is_unary(k) && child >= 0 && child < static_cast<std::int32_t>(nodes_.size()));
    ExprNode n;
    n.kind = k;
    n.a = child;
    return push(std::move(n));
}

std::int32_t Expr::Builder::binary(OpKind k, std::int32_t lhs, std::int32_t rhs) {
    assert(op_is_binary(k));
    assert(lhs >= 0 && lhs < static_cast<std::int32_t>(nodes_.size()));
    assert(rhs >= 0 && rhs < static_cast<std::int32_t>(nodes_.size()));
    ExprNode n;
    n.kind = k;
    n.a = lhs;
    n.b = rhs;
    return push(std::move(n));
}

std::int32_t Expr::Builder::pow(std::int32_t child, std::int32_t exponent) {
    assert(exponent >= 0);
    if (exponent == 0) return constant(1.0);
    if (exponent == 1) return child;
    ExprNode n;
    n.kind = OpKind::pow_int;
    n.a = child;
    n.exponent = exponent;
    return push(std::move(n));
}

bool Expr::Builder::is_zero(std::int32_t i) const {
    const ExprNode& n = nodes_[static_cast<std::size_t>(i)];
    return n.kind == OpKind::constant && n.value == Interval(0.0, 0.0);
}

bool Expr::Builder::is_one(std::int32_t i) const {
    const ExprNode& n = nodes_[static_cast<std::size_t>(i)];
    return n.kind == OpKind::constant && n.value == Interval(1.0, 1.0);
}

std::int32_t Expr::Builder::add_s(std::int32_t l, std::int32_t r) {
    if (is_zero(l)) return r;
    if (is_zero(r)) return l;
    return binary(OpKind::add, l, r);
}

std::int32_t Expr::Builder::sub_s(std::int32_t l, std::int32_t r) {
    if (is_zero(r)) return l;
    if (is_zero(l)) return neg_s(r);
    return binary(OpKind::sub, l, r);
}

std::int32_t Expr::Builder::mul_s(std::int32_t l, std::int32_t r) {
    if (is_zero(l) || is_zero(r)) return is_zero(l) ? l : r;
    if (is_one(l)) return r;
    if (is_one(r)) return l;
    return binary(OpKind::mul, l, r);
}

std::int32_t Expr::Builder::div_s(std::int32_t l, std::int32_t r) {
    if (is_zero(l)) return l;
    if (is_one(r)) return l;
    return binary(OpKind::div, l, r);
}

std::int32_t Expr::Builder::neg_s(std::int32_t c) {
    if (is_zero(c)) return c;
    return unary(OpKind::neg, c);
}

std::int32_t Expr::Builder::copy_subtree(const Expr& src, std::int32_t index) {
    const ExprNode& n = src.node(index);
    switch (n.kind) {
        case OpKind::constant: {
            ExprNode c = n;
            return push(std::move(c));
        }
        case OpKind::variable:
            return variable(n.var);
        case OpKind::pow_int: {
            const std::int32_t a = copy_subtree(src, n.a);
            ExprNode c;
            c.kind = OpKind::pow_int;
            c.a = a;
            c.exponent = n.exponent;
            return push(std::move(c));
        }
        default:
            if (op_is_binary(n.kind)) {
                const std::int32_t a = copy_subtree(src, n.a);
                const std::int32_t b = copy_subtree(src, n.b);
                return binary(n.kind, a, b);
            }
            return unary(n.kind, copy_subtree(src, n.a));
    }
}

Expr Expr::Builder::finish(std::int32_t root) {
    assert(root >= 0 && root < static_cast<std::int32_t>(nodes_.size()));
    // keep only nodes reachable from the root, preserving evaluation order
    std::vector<std::int32_t> remap(nodes_.size(), -1);
    std::vector<char> keep(nodes_.size(), 0);
    std::vector<std::int32_t> stack{root};
    while (!stack.empty()) {
        const std::int32_t i = stack.back();
        stack.pop_back();
        if (keep[static_cast<std::size_t>(i)]) continue;
        keep[static_cast<std::size_t>(i)] = 1;
        const ExprNode& n = nodes_[static_cast<std::size_t>(i)];
        if (n.a >= 0) stack.push_back(n.a);
        if (n.b >= 0) stack.push_back(n.b);
    }
    Expr e;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!keep[i]) continue;
        remap[i] = static_cast<std::int32_t>(e.nodes_.size());
        ExprNode n = std::move(nodes_[i]);
        if (n.a >= 0) n.a = remap[static_cast<std::size_t>(n.a)];
        if (n.b >= 0) n.b = remap[static_cast<std::size_t>(n.b)];
        e.nodes_.push_back(std::move(n));
    }
    e.root_ = remap[static_cast<std::size_t>(root)];
    nodes_.clear();
    return e;
}

// --- differentiation --------------------------------------------------------

namespace {

std::int32_t diff_node(Expr::Builder& b, const Expr& src, std::int32_t idx,
                       std::int32_t var) {
    const ExprNode& n = src.node(idx);
    switch (n.kind) {
        case OpKind::constant:
            return b.constant(0.0);
        case OpKind::variable:
            return b.constant(n.var == var ? 1.0 : 0.0);
        case OpKind::add:
            return b.add_s(diff_node(b, src, n.a, var), diff_node(b, src, n.b, var));
        case OpKind::sub:
            return b.sub_s(diff_node(b, src, n.a, var), diff_node(b, src, n.b, var));
        case OpKind::mul: {
            const std::int32_t du = diff_node(b, src, n.a, var);
            const std::int32_t dv = diff_node(b, src, n.b, var);
            const std::int32_t t1 = b.mul_s(du, b.copy_subtree(src, n.b));
            const std::int32_t t2 = b.mul_s(b.copy_subtree(src, n.a), dv);
            return b.add_s(t1, t2);
        }
        case OpKind::div: {
            const std::int32_t du = diff_node(b, src, n.a, var);
            const std::int32_t dv = diff_node(b, src, n.b, var);
            const std::int32_t num = b.sub_s(b.mul_s(du, b.copy_subtree(src, n.b)),
                                             b.mul_s(b.copy_subtree(src, n.a), dv));
            const std::int32_t den = b.pow(b.copy_subtree(src, n.b), 2);
            return b.div_s(num, den);
        }
        case OpKind::neg:
            return b.neg_s(diff_node(b, src, n.a, var));
        case OpKind::pow_int: {
            if (n.exponent == 0) return b.constant(0.0);
            const std::int32_t du = diff_node(b, src, n.a, var);
            const std::int32_t p = b.pow(b.copy_subtree(src, n.a), n.exponent - 1);
            return b.mul_s(b.mul_s(b.constant(n.exponent), p), du);
        }
        default: {
            // chain rule: f'(u) * u'
            const std::int32_t du = diff_node(b, src, n.a, var);
            std::int32_t fp = -1;
            switch (n.kind) {
                case OpKind::sin:
                    fp = b.unary(OpKind::cos, b.copy_subtree(src, n.a));
                    break;
                case OpKind::cos:
                    fp = b.neg_s(b.unary(OpKind::sin, b.copy_subtree(src, n.a)));
                    break;
                case OpKind::tan:
                    fp = b.add_s(b.constant(1.0),
                                 b.pow(b.unary(OpKind::tan, b.copy_subtree(src, n.a)), 2));
                    break;
                case OpKind::exp:
                    fp = b.unary(OpKind::exp, b.copy_subtree(src, n.a));
                    break;
                case OpKind::log:
                    return b.div_s(du, b.copy_subtree(src, n.a));
                case OpKind::sinh:
                    fp = b.unary(OpKind::cosh, b.copy_subtree(src, n.a));
                    break;
                case OpKind::cosh:
                    fp = b.unary(OpKind::sinh, b.copy_subtree(src, n.a));
                    break;
                case OpKind::tanh:
                    fp = b.sub_s(b.constant(1.0),
                                 b.pow(b.unary(OpKind::tanh, b.copy_subtree(src, n.a)), 2));
                    break;
                case OpKind::sqrt:
                    return b.div_s(du, b.mul_s(b.constant(2.0),
                                               b.unary(OpKind::sqrt, b.copy_subtree(src, n.a))));
                default:
                    assert(false && "unsupported operator in differentiate");
                    return b.constant(0.0);
            }
            return b.mul_s(fp, du);
        }
    }
}

}  // namespace

Expr differentiate(const Expr& e, std::int32_t var) {
    assert(e.valid());
    Expr::Builder b;
    const std::int32_t root = diff_node(b, e, e.root(), var);
    return b.finish(root);
}

// --- ExprSystem / Projection ------------------------------------------------

ExprSystem::ExprSystem(std::size_t arity, std::vector<std::string> var_names,
                       std::vector<Expr> equations)
    : arity_(arity), var_names_(std::move(var_names)), equations_(std::move(equations)) {
    assert(var_names_.size() == arity_);
    partials_.resize(equations_.size());
    mentions_.resize(equations_.size());
    for (std::size_t e = 0; e < equations_.size(); ++e) {
        assert(equations_[e].max_var() < static_cast<std::int32_t>(arity_));
        partials_[e].resize(arity_);
        mentions_[e].assign(arity_, 0);
        for (std::size_t v = 0; v < arity_; ++v) {
            mentions_[e][v] = equations_[e].mentions(static_cast<std::int32_t>(v)) ? 1 : 0;
            partials_[e][v] = differentiate(equations_[e], static_cast<std::int32_t>(v));
        }
    }
}

Interval Projection::eval(const Interval& x, Arith arith, NarrowStats& stats) const {
    stats.g_evals += 1;
    return sys_->equation(eq_).eval(*box_, static_cast<std::int32_t>(var_), x, arith, &stats);
}

Interval Projection::deriv_eval(const Interval& x, Arith arith, NarrowStats& stats) const {
    stats.gprime_evals += 1;
    return sys_->partial(eq_, var_).eval(*box_, static_cast<std::int32_t>(var_), x, arith,
                                         &stats);
}

std::pair<Interval, Interval> Projection::eval_pair(const Interval& x1, const Interval& x2,
                                                    NarrowStats& stats) const {
    stats.g_evals += 2;
    stats.packed_g_calls += 1;
    return sys_->equation(eq_).eval_pair(*box_, static_cast<std::int32_t>(var_), x1, x2,
                                         &stats);
}

std::pair<Interval, Interval> Projection::deriv_eval_pair(const Interval& x1,
                                                          const Interval& x2,
                                                          NarrowStats& stats) const {
    stats.gprime_evals += 2;
    stats.packed_gprime_calls += 1;
    return sys_->partial(eq_, var_).eval_pair(*box_, static_cast<std::int32_t>(var_), x1, x2,
                                              &stats);
}

}  // namespace boxsol
