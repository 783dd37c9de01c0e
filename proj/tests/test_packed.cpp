// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "boxsol/interval.hpp"
#include "boxsol/packed.hpp"
#include "oracle.hpp"

using namespace boxsol;
using packed::Backend;
using packed::PackedD;
using packed::PackedF2;

namespace {

double rand_double(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-18, 18);
    return mant(rng) * std::ldexp(1.0, expo(rng));
}

// interval generator biased toward the awkward cases: zeros on bounds,
// infinities, points, empties
Interval rand_interval(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 11);
    switch (kind(rng)) {
        case 0: return Interval::point(rand_double(rng));
        case 1: return Interval(-kInf, rand_double(rng));
        case 2: return Interval(rand_double(rng), kInf);
        case 3: {
            const double a = rand_double(rng);
            return a <= 0 ? Interval(a, 0.0) : Interval(0.0, a);
        }
        case 4: return Interval(0.0, 0.0);
        case 5: return Interval::entire();
        case 6: return Interval::empty();
        default: {
            double a = rand_double(rng), b = rand_double(rng);
            if (a > b) std::swap(a, b);
            return Interval(a, b);
        }
    }
}

bool bits_equal(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return a.is_empty() && b.is_empty();
    return std::bit_cast<std::uint64_t>(a.lo()) == std::bit_cast<std::uint64_t>(b.lo()) &&
           std::bit_cast<std::uint64_t>(a.hi()) == std::bit_cast<std::uint64_t>(b.hi());
}

// outward rounding of a double-precision interval to binary32 bounds
Interval widen_to_f32(const Interval& a) {
    if (a.is_empty()) return a;
    fp::RoundUpScope up;
    const float nlo = static_cast<float>(-a.lo());
    const float hi = static_cast<float>(a.hi());
    return Interval(-static_cast<double>(nlo), static_cast<double>(hi));
}

template <class PdOp, class ScalarOp>
void check_pd_matches(std::mt19937_64& rng, int iters, PdOp pd_op, ScalarOp s_op) {
    for (int i = 0; i < iters; ++i) {
        const Interval a = rand_interval(rng), b = rand_interval(rng);
        const Interval ref = s_op(a, b);
        for (Backend be : {Backend::lanes, Backend::scalar}) {
            packed::set_backend(be);
            const Interval got = packed::decode(pd_op(packed::encode(a), packed::encode(b)));
            if (!bits_equal(got, ref)) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(ref);
                CAPTURE(got);
                CAPTURE(be == Backend::lanes);
                REQUIRE(bits_equal(got, ref));
            }
        }
    }
    packed::set_backend(Backend::lanes);
}

template <class Pf2Op, class ScalarOp>
void check_pf2_contains(std::mt19937_64& rng, int iters, Pf2Op pf_op, ScalarOp s_op) {
    for (int i = 0; i < iters; ++i) {
        const Interval a1 = rand_interval(rng), b1 = rand_interval(rng);
        const Interval a2 = rand_interval(rng), b2 = rand_interval(rng);
        const Interval r1 = s_op(a1, b1), r2 = s_op(a2, b2);
        for (Backend be : {Backend::lanes, Backend::scalar}) {
            packed::set_backend(be);
            const auto got = packed::decode_pair(
                pf_op(packed::encode_pair(a1, a2), packed::encode_pair(b1, b2)));
            CAPTURE(a1);
            CAPTURE(b1);
            CAPTURE(a2);
            CAPTURE(b2);
            REQUIRE(got.first.contains(r1));
            REQUIRE(got.second.contains(r2));
        }
    }
    packed::set_backend(Backend::lanes);
}

}  // namespace

TEST_CASE("encoding stores the negated left bound") {
    const PackedD p = packed::encode(Interval(1, 2));
    CHECK(p.nlo == -1.0);
    CHECK(p.hi == 2.0);
    CHECK(packed::decode(p) == Interval(1, 2));
}

TEST_CASE("encoding involution") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100000; ++i) {
        const Interval a = rand_interval(rng);
        CHECK(bits_equal(packed::decode(packed::encode(a)), a));
    }
}

TEST_CASE("PackedD ops decode bit-identically to the scalar kernel") {
    std::mt19937_64 rng(2024);
    check_pd_matches(rng, 20000, [](auto a, auto b) { return packed::pd_add(a, b); },
                     [](auto a, auto b) { return add(a, b); });
    check_pd_matches(rng, 20000, [](auto a, auto b) { return packed::pd_sub(a, b); },
                     [](auto a, auto b) { return sub(a, b); });
    check_pd_matches(rng, 20000, [](auto a, auto b) { return packed::pd_mul(a, b); },
                     [](auto a, auto b) { return mul(a, b); });
    check_pd_matches(rng, 20000, [](auto a, auto b) { return packed::pd_div(a, b); },
                     [](auto a, auto b) { return div(a, b); });
}

TEST_CASE("PackedD pow and neg decode bit-identically") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40000; ++i) {
        const Interval a = rand_interval(rng);
        const int n = static_cast<int>(rng() % 7);
        for (Backend be : {Backend::lanes, Backend::scalar}) {
            packed::set_backend(be);
            CHECK(bits_equal(packed::decode(packed::pd_pow_int(packed::encode(a), n)),
                             pow_int(a, n)));
            CHECK(bits_equal(packed::decode(packed::pd_neg(packed::encode(a))), neg(a)));
        }
    }
    packed::set_backend(Backend::lanes);
}

TEST_CASE("PackedD mul annihilator") {
    const PackedD z = packed::encode(Interval(0, 0));
    const PackedD r = packed::pd_mul(z, packed::encode(Interval(-3, 7)));
    CHECK(packed::decode(r) == Interval(0, 0));
}

TEST_CASE("lane and scalar backends agree bit for bit") {
    // already covered per-op above; this documents the kernel switch itself
    REQUIRE(packed::lanes_available());
    packed::set_backend(Backend::scalar);
    CHECK(packed::backend_d() == Backend::scalar);
    packed::set_backend(Backend::lanes);
    CHECK(packed::backend_d() == Backend::lanes);
}

TEST_CASE("PackedF2 halves contain the double results") {
    std::mt19937_64 rng(5150);
    check_pf2_contains(rng, 10000, [](auto a, auto b) { return packed::pf2_add(a, b); },
                       [](auto a, auto b) { return add(a, b); });
    check_pf2_contains(rng, 10000, [](auto a, auto b) { return packed::pf2_sub(a, b); },
                       [](auto a, auto b) { return sub(a, b); });
    check_pf2_contains(rng, 10000, [](auto a, auto b) { return packed::pf2_mul(a, b); },
                       [](auto a, auto b) { return mul(a, b); });
    check_pf2_contains(rng, 10000, [](auto a, auto b) { return packed::pf2_div(a, b); },
                       [](auto a, auto b) { return div(a, b); });
}

TEST_CASE("PackedF2 exact-binary32 addition is exact") {
    const auto p = packed::pf2_add(packed::encode_pair(Interval(1, 2), Interval(5, 6)),
                                   packed::encode_pair(Interval(3, 4), Interval(7, 8)));
    const auto [r1, r2] = packed::decode_pair(p);
    CHECK(r1 == Interval(4, 6));
    CHECK(r2 == Interval(12, 14));
}

TEST_CASE("PackedF2 division by a zero-straddling half") {
    const auto p = packed::pf2_div(packed::encode_pair(Interval(1, 2), Interval(1, 2)),
                                   packed::encode_pair(Interval(-1, 1), Interval(2, 4)));
    const auto [r1, r2] = packed::decode_pair(p);
    CHECK(r1 == Interval::entire());
    CHECK(r2.contains(Interval(0.25, 1)));
}

TEST_CASE("PackedF2 pow halves contain the double results") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20000; ++i) {
        const Interval a = rand_interval(rng), b = rand_interval(rng);
        const int n = static_cast<int>(rng() % 7);
        for (Backend be : {Backend::lanes, Backend::scalar}) {
            packed::set_backend(be);
            const auto [r1, r2] =
                packed::decode_pair(packed::pf2_pow_int(packed::encode_pair(a, b), n));
            CHECK(r1.contains(pow_int(a, n)));
            CHECK(r2.contains(pow_int(b, n)));
        }
    }
    packed::set_backend(Backend::lanes);
}

TEST_CASE("pair conversion rounds outward and never shrinks") {
    // binary32-exact bounds round-trip exactly
    const auto [e1, e2] =
        packed::decode_pair(packed::encode_pair(Interval(1.5, 2.5), Interval(-3, 4)));
    CHECK(e1 == Interval(1.5, 2.5));
    CHECK(e2 == Interval(-3, 4));

    // a third widens but still contains the real third
    const Interval third = div(Interval(1, 1), Interval(3, 3));
    const auto [t1, t2] = packed::decode_pair(packed::encode_pair(third, third));
    CHECK(oracle::contains(t1, oracle::Rational(1) / 3));
    CHECK(t1.contains(third));
    CHECK(t1 == widen_to_f32(third));

    // empties map to empties
    const auto [m1, m2] =
        packed::decode_pair(packed::encode_pair(Interval::empty(), Interval::empty()));
    CHECK(m1.is_empty());
    CHECK(m2.is_empty());

    std::mt19937_64 rng(99);
    for (int i = 0; i < 50000; ++i) {
        const Interval a = rand_interval(rng);
        const auto [w, w2] = packed::decode_pair(packed::encode_pair(a, a));
        CHECK(w.contains(a));
        CHECK(bits_equal(w, w2));
    }
}
