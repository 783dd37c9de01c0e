// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#include "boxsol/packed.hpp"

#include <atomic>
#include <cmath>
#include <limits>

#if defined(__SSE2__)
#include <emmintrin.h>
#define BOXSOL_HAVE_SSE2 1
#endif

namespace boxsol::packed {

namespace {

constexpr Backend kDefaultBackend =
#if defined(BOXSOL_HAVE_SSE2)
    Backend::lanes;
#else
    Backend::scalar;
#endif

std::atomic<Backend> g_backend_d{kDefaultBackend};
std::atomic<Backend> g_backend_f{kDefaultBackend};

// ---------------------------------------------------------------------------
// Portable half-kernels on one encoded interval (nlo = -lo, hi).  These are
// the semantics reference for both PackedD (T = double) and each half of
// PackedF2 (T = float).  All of them require the upward rounding scope.
// ---------------------------------------------------------------------------

template <class T>
struct Enc {
    T nlo, hi;
};

template <class T>
inline bool enc_empty(const Enc<T>& a) {
    return -a.nlo > a.hi;
}

template <class T>
inline Enc<T> enc_empty_v() {
    constexpr T inf = std::numeric_limits<T>::infinity();
    return {-inf, -inf};
}

template <class T>
inline Enc<T> enc_entire_v() {
    constexpr T inf = std::numeric_limits<T>::infinity();
    return {inf, inf};
}

// -0 -> +0 under upward rounding; keeps the two backends bit-identical.
template <class T>
inline Enc<T> nz(Enc<T> p) {
    return {p.nlo + T(0), p.hi + T(0)};
}

template <class T>
inline Enc<T> enc_add(const Enc<T>& a, const Enc<T>& b) {
    if (enc_empty(a) || enc_empty(b)) return enc_empty_v<T>();
    return nz<T>({a.nlo + b.nlo, a.hi + b.hi});
}

template <class T>
inline Enc<T> enc_sub(const Enc<T>& a, const Enc<T>& b) {
    if (enc_empty(a) || enc_empty(b)) return enc_empty_v<T>();
    return nz<T>({a.nlo + b.hi, a.hi + b.nlo});
}

template <class T>
inline Enc<T> enc_neg(const Enc<T>& a) {
    if (enc_empty(a)) return enc_empty_v<T>();
    return {a.hi, a.nlo};
}

template <class T>
inline Enc<T> enc_mul(const Enc<T>& a, const Enc<T>& b) {
    if (enc_empty(a) || enc_empty(b)) return enc_empty_v<T>();
    const T al = -a.nlo, ah = a.hi, bl = -b.nlo, bh = b.hi;
    const T n = detail::max4_fixed((-al) * bl, (-al) * bh, (-ah) * bl, (-ah) * bh);
    const T h = detail::max4_fixed(al * bl, al * bh, ah * bl, ah * bh);
    return nz<T>({n, h});
}

template <class T>
inline Enc<T> enc_div(const Enc<T>& a, const Enc<T>& b) {
    if (enc_empty(a) || enc_empty(b)) return enc_empty_v<T>();
    const T al = -a.nlo, ah = a.hi, bl = -b.nlo, bh = b.hi;
    if (bl < T(0) && bh > T(0)) return enc_entire_v<T>();  // pole interior: hull is the line
    const bool zero_in_b = bl <= T(0) && bh >= T(0);
    const bool zero_in_a = al <= T(0) && ah >= T(0);
    if (zero_in_b && zero_in_a) return enc_entire_v<T>();
    if (bl == T(0) && bh == T(0)) return enc_empty_v<T>();
    // A zero upper bound of b acts as a divisor approaching zero from below.
    const T bh2 = (bh == T(0)) ? T(-0.0) : bh;
    const T n = detail::max4_fixed((-al) / bl, (-al) / bh2, (-ah) / bl, (-ah) / bh2);
    const T h = detail::max4_fixed(al / bl, al / bh2, ah / bl, ah / bh2);
    return nz<T>({n, h});
}

template <class T>
inline Enc<T> enc_pow_int(const Enc<T>& a, int n) {
    if (enc_empty(a)) return enc_empty_v<T>();
    if (n == 0) return {T(-1), T(1)};
    if (n == 1) return a;
    const T al = -a.nlo, ah = a.hi;
    T acc0, acc1, b0, b1;
    if (n % 2 == 0) {
        b0 = std::max(T(0), std::max(al, -ah));  // mignitude
        b1 = std::max(-al, ah);                  // magnitude
        acc0 = T(-1);
        acc1 = T(1);
    } else {
        b0 = std::fabs(al);
        b1 = std::fabs(ah);
        acc0 = (al >= T(0)) ? T(-1) : T(1);
        acc1 = (ah >= T(0)) ? T(1) : T(-1);
    }
    for (int i = 0; i < n; ++i) {
        acc0 = acc0 * b0;
        acc1 = acc1 * b1;
    }
    return nz<T>({acc0, acc1});
}

inline Enc<double> to_enc(const PackedD& p) { return {p.nlo, p.hi}; }
inline PackedD from_enc(const Enc<double>& e) { return {e.nlo, e.hi}; }

inline Enc<float> half(const PackedF2& p, int h) { return {p.l[2 * h], p.l[2 * h + 1]}; }

inline PackedF2 join(const Enc<float>& a, const Enc<float>& b) {
    return PackedF2{{a.nlo, a.hi, b.nlo, b.hi}};
}

#if defined(BOXSOL_HAVE_SSE2)

// ---------------------------------------------------------------------------
// SSE2 lane kernels.  Same candidate algebra as the scalar half-kernels; the
// sign-case resolution of mul/div is done with shuffles, corner fixup masks
// and min/max, never by branching on lane contents.
// ---------------------------------------------------------------------------

inline __m128d ld(const PackedD& p) { return _mm_set_pd(p.hi, p.nlo); }  // lane0=nlo

inline PackedD st(__m128d v) {
    alignas(16) double out[2];
    _mm_store_pd(out, v);
    return {out[0], out[1]};
}

inline __m128d sel_pd(__m128d mask, __m128d a, __m128d b) {
    return _mm_or_pd(_mm_and_pd(mask, a), _mm_andnot_pd(mask, b));
}

inline __m128d swap_pd(__m128d v) { return _mm_shuffle_pd(v, v, 1); }

// all-ones in both lanes iff the encoded interval is empty (-nlo > hi)
inline __m128d empty_mask_pd(__m128d v) {
    const __m128d lo = _mm_xor_pd(v, _mm_set_pd(0.0, -0.0));  // (-nlo, hi)
    const __m128d c = _mm_cmpgt_pd(lo, swap_pd(v));           // lane0: -nlo > hi
    return _mm_shuffle_pd(c, c, 0);
}

// both-lane mask from per-lane predicate results: lane0 AND lane1
inline __m128d both_pd(__m128d m) { return _mm_and_pd(m, swap_pd(m)); }

inline __m128d fix_corners_pd(__m128d p) {
    return _mm_andnot_pd(_mm_cmpunord_pd(p, p), p);  // NaN -> +0
}

inline __m128d nz_pd(__m128d v) { return _mm_add_pd(v, _mm_setzero_pd()); }

const __m128d kSignPd = _mm_set1_pd(-0.0);
const __m128d kEmptyPd = _mm_set1_pd(-std::numeric_limits<double>::infinity());
const __m128d kEntirePd = _mm_set1_pd(std::numeric_limits<double>::infinity());

inline __m128d guard_empty_pd(__m128d a, __m128d b, __m128d result) {
    const __m128d m = _mm_or_pd(empty_mask_pd(a), empty_mask_pd(b));
    return sel_pd(m, kEmptyPd, result);
}

inline __m128d add_pd(__m128d a, __m128d b) {
    return guard_empty_pd(a, b, nz_pd(_mm_add_pd(a, b)));
}

inline __m128d sub_pd(__m128d a, __m128d b) {
    return guard_empty_pd(a, b, nz_pd(_mm_add_pd(a, swap_pd(b))));
}

inline __m128d neg_pd(__m128d a) {
    return guard_empty_pd(a, a, swap_pd(a));
}

// the four corner-product vectors of the encoded mul/div formula
inline void corner_operands_pd(__m128d a, __m128d b, __m128d& a1, __m128d& a2,
                               __m128d& b1, __m128d& b2) {
    a1 = a;                                         // (-al, ah)
    a2 = _mm_xor_pd(swap_pd(a), kSignPd);           // (-ah, al)
    const __m128d bneg = _mm_xor_pd(b, kSignPd);    // (bl, -bh)
    b1 = _mm_unpacklo_pd(bneg, bneg);               // (bl, bl)
    b2 = _mm_unpackhi_pd(b, b);                     // (bh, bh)
}

inline __m128d mul_pd(__m128d a, __m128d b) {
    __m128d a1, a2, b1, b2;
    corner_operands_pd(a, b, a1, a2, b1, b2);
    const __m128d p1 = fix_corners_pd(_mm_mul_pd(a1, b1));
    const __m128d p2 = fix_corners_pd(_mm_mul_pd(a1, b2));
    const __m128d p3 = fix_corners_pd(_mm_mul_pd(a2, b1));
    const __m128d p4 = fix_corners_pd(_mm_mul_pd(a2, b2));
    const __m128d m = _mm_max_pd(_mm_max_pd(p1, p2), _mm_max_pd(p3, p4));
    return guard_empty_pd(a, b, nz_pd(m));
}

inline __m128d div_pd(__m128d a, __m128d b) {
    const __m128d zero = _mm_setzero_pd();
    const __m128d lo_ab = _mm_xor_pd(_mm_unpacklo_pd(a, b), kSignPd);  // (al, bl)
    const __m128d hi_ab = _mm_unpackhi_pd(a, b);                       // (ah, bh)
    // per-value predicates, lane0 = a's, lane1 = b's
    const __m128d contains0 =
        _mm_and_pd(_mm_cmple_pd(lo_ab, zero), _mm_cmpge_pd(hi_ab, zero));
    const __m128d zero_in_a = _mm_shuffle_pd(contains0, contains0, 0);
    const __m128d zero_in_b = _mm_shuffle_pd(contains0, contains0, 3);
    const __m128d interior =
        _mm_and_pd(_mm_cmplt_pd(lo_ab, zero), _mm_cmpgt_pd(hi_ab, zero));
    const __m128d pole = _mm_shuffle_pd(interior, interior, 3);
    const __m128d b_is_0 =
        both_pd(_mm_and_pd(_mm_cmpeq_pd(b, zero), _mm_cmpeq_pd(b, zero)));
    const __m128d mask_entire =
        _mm_or_pd(pole, _mm_and_pd(zero_in_b, zero_in_a));
    const __m128d mask_empty = _mm_andnot_pd(zero_in_a, b_is_0);

    // corner quotients with the -0 substitution for a zero upper bound of b
    __m128d a1, a2, b1, b2;
    corner_operands_pd(a, b, a1, a2, b1, b2);
    const __m128d bh_zero = _mm_cmpeq_pd(b2, zero);
    b2 = sel_pd(bh_zero, kSignPd, b2);
    const __m128d q1 = fix_corners_pd(_mm_div_pd(a1, b1));
    const __m128d q2 = fix_corners_pd(_mm_div_pd(a1, b2));
    const __m128d q3 = fix_corners_pd(_mm_div_pd(a2, b1));
    const __m128d q4 = fix_corners_pd(_mm_div_pd(a2, b2));
    __m128d m = nz_pd(_mm_max_pd(_mm_max_pd(q1, q2), _mm_max_pd(q3, q4)));

    m = sel_pd(mask_entire, kEntirePd, m);
    m = sel_pd(mask_empty, kEmptyPd, m);
    return guard_empty_pd(a, b, m);
}

inline __m128d pow_pd(__m128d a, int n) {
    if (n == 0) return guard_empty_pd(a, a, _mm_set_pd(1.0, -1.0));
    if (n == 1) return guard_empty_pd(a, a, a);
    const __m128d zero = _mm_setzero_pd();
    __m128d base, acc;
    if (n % 2 == 0) {
        const __m128d t = _mm_xor_pd(a, kSignPd);               // (lo, -hi)
        const __m128d mig = _mm_max_pd(_mm_max_pd(t, swap_pd(t)), zero);
        const __m128d mag = _mm_max_pd(a, swap_pd(a));
        base = _mm_move_sd(mag, mig);                           // (mig, mag)
        acc = _mm_set_pd(1.0, -1.0);
    } else {
        base = _mm_andnot_pd(kSignPd, a);                       // (|lo|, |hi|)
        acc = _mm_or_pd(_mm_and_pd(kSignPd, a), _mm_set1_pd(1.0));
    }
    for (int i = 0; i < n; ++i) acc = _mm_mul_pd(acc, base);
    return guard_empty_pd(a, a, nz_pd(acc));
}

// --- 4-lane single-precision variants (two intervals per register) --------

inline __m128 ld4(const PackedF2& p) { return _mm_set_ps(p.l[3], p.l[2], p.l[1], p.l[0]); }

inline PackedF2 st4(__m128 v) {
    alignas(16) float out[4];
    _mm_store_ps(out, v);
    return PackedF2{{out[0], out[1], out[2], out[3]}};
}

inline __m128 sel_ps(__m128 mask, __m128 a, __m128 b) {
    return _mm_or_ps(_mm_and_ps(mask, a), _mm_andnot_ps(mask, b));
}

inline __m128 swap_ps(__m128 v) { return _mm_shuffle_ps(v, v, _MM_SHUFFLE(2, 3, 0, 1)); }

inline __m128 splat_even_ps(__m128 v) { return _mm_shuffle_ps(v, v, _MM_SHUFFLE(2, 2, 0, 0)); }
inline __m128 splat_odd_ps(__m128 v) { return _mm_shuffle_ps(v, v, _MM_SHUFFLE(3, 3, 1, 1)); }

// broadcast a per-lane mask to its whole half after AND-ing the lane pair
inline __m128 both_ps(__m128 m) { return _mm_and_ps(m, swap_ps(m)); }

const __m128 kSignPs = _mm_set1_ps(-0.0f);
const __m128 kEmptyPs = _mm_set1_ps(-std::numeric_limits<float>::infinity());
const __m128 kEntirePs = _mm_set1_ps(std::numeric_limits<float>::infinity());

inline __m128 empty_mask_ps(__m128 v) {
    const __m128 lo = _mm_xor_ps(v, _mm_set_ps(0.0f, -0.0f, 0.0f, -0.0f));
    const __m128 c = _mm_cmpgt_ps(lo, swap_ps(v));  // even lanes: -nlo > hi
    return splat_even_ps(c);
}

inline __m128 fix_corners_ps(__m128 p) {
    return _mm_andnot_ps(_mm_cmpunord_ps(p, p), p);
}

inline __m128 nz_ps(__m128 v) { return _mm_add_ps(v, _mm_setzero_ps()); }

inline __m128 guard_empty_ps(__m128 a, __m128 b, __m128 result) {
    const __m128 m = _mm_or_ps(empty_mask_ps(a), empty_mask_ps(b));
    return sel_ps(m, kEmptyPs, result);
}

inline __m128 add_ps(__m128 a, __m128 b) {
    return guard_empty_ps(a, b, nz_ps(_mm_add_ps(a, b)));
}

inline __m128 sub_ps(__m128 a, __m128 b) {
    return guard_empty_ps(a, b, nz_ps(_mm_add_ps(a, swap_ps(b))));
}

inline __m128 neg_ps(__m128 a) { return guard_empty_ps(a, a, swap_ps(a)); }

inline void corner_operands_ps(__m128 a, __m128 b, __m128& a1, __m128& a2,
                               __m128& b1, __m128& b2) {
    a1 = a;
    a2 = _mm_xor_ps(swap_ps(a), kSignPs);
    const __m128 bneg = _mm_xor_ps(b, kSignPs);
    b1 = splat_even_ps(bneg);  // (bl, bl) per half
    b2 = splat_odd_ps(b);      // (bh, bh) per half
}

inline __m128 mul_ps(__m128 a, __m128 b) {
    __m128 a1, a2, b1, b2;
    corner_operands_ps(a, b, a1, a2, b1, b2);
    const __m128 p1 = fix_corners_ps(_mm_mul_ps(a1, b1));
    const __m128 p2 = fix_corners_ps(_mm_mul_ps(a1, b2));
    const __m128 p3 = fix_corners_ps(_mm_mul_ps(a2, b1));
    const __m128 p4 = fix_corners_ps(_mm_mul_ps(a2, b2));
    const __m128 m = _mm_max_ps(_mm_max_ps(p1, p2), _mm_max_ps(p3, p4));
    return guard_empty_ps(a, b, nz_ps(m));
}

inline __m128 div_ps(__m128 a, __m128 b) {
    const __m128 zero = _mm_setzero_ps();
    const __m128 a_lo = _mm_xor_ps(a, _mm_set_ps(0.0f, -0.0f, 0.0f, -0.0f));
    const __m128 b_lo = _mm_xor_ps(b, _mm_set_ps(0.0f, -0.0f, 0.0f, -0.0f));
    const __m128 zero_in_a = both_ps(
        _mm_and_ps(_mm_cmple_ps(splat_even_ps(a_lo), zero),
                   _mm_cmpge_ps(splat_odd_ps(a), zero)));
    const __m128 zero_in_b = both_ps(
        _mm_and_ps(_mm_cmple_ps(splat_even_ps(b_lo), zero),
                   _mm_cmpge_ps(splat_odd_ps(b), zero)));
    const __m128 pole = both_ps(
        _mm_and_ps(_mm_cmplt_ps(splat_even_ps(b_lo), zero),
                   _mm_cmpgt_ps(splat_odd_ps(b), zero)));
    const __m128 b_is_0 = both_ps(_mm_cmpeq_ps(b, zero));
    const __m128 mask_entire = _mm_or_ps(pole, _mm_and_ps(zero_in_b, zero_in_a));
    const __m128 mask_empty = _mm_andnot_ps(zero_in_a, b_is_0);

    __m128 a1, a2, b1, b2;
    corner_operands_ps(a, b, a1, a2, b1, b2);
    const __m128 bh_zero = _mm_cmpeq_ps(b2, zero);
    b2 = sel_ps(bh_zero, kSignPs, b2);
    const __m128 q1 = fix_corners_ps(_mm_div_ps(a1, b1));
    const __m128 q2 = fix_corners_ps(_mm_div_ps(a1, b2));
    const __m128 q3 = fix_corners_ps(_mm_div_ps(a2, b1));
    const __m128 q4 = fix_corners_ps(_mm_div_ps(a2, b2));
    __m128 m = nz_ps(_mm_max_ps(_mm_max_ps(q1, q2), _mm_max_ps(q3, q4)));

    m = sel_ps(mask_entire, kEntirePs, m);
    m = sel_ps(mask_empty, kEmptyPs, m);
    return guard_empty_ps(a, b, m);
}

inline __m128 pow_ps(__m128 a, int n) {
    if (n == 0) return guard_empty_ps(a, a, _mm_set_ps(1.0f, -1.0f, 1.0f, -1.0f));
    if (n == 1) return guard_empty_ps(a, a, a);
    const __m128 zero = _mm_setzero_ps();
    __m128 base, acc;
    if (n % 2 == 0) {
        const __m128 t = _mm_xor_ps(a, kSignPs);
        const __m128 mig = _mm_max_ps(_mm_max_ps(t, swap_ps(t)), zero);
        const __m128 mag = _mm_max_ps(a, swap_ps(a));
        // (mig, mag) per half
        base = sel_ps(_mm_castsi128_ps(_mm_set_epi32(-1, 0, -1, 0)), mag, mig);
        acc = _mm_set_ps(1.0f, -1.0f, 1.0f, -1.0f);
    } else {
        base = _mm_andnot_ps(kSignPs, a);
        acc = _mm_or_ps(_mm_and_ps(kSignPs, a), _mm_set1_ps(1.0f));
    }
    for (int i = 0; i < n; ++i) acc = _mm_mul_ps(acc, base);
    return guard_empty_ps(a, a, nz_ps(acc));
}

#endif  // BOXSOL_HAVE_SSE2

bool use_lanes() { return g_backend_d.load(std::memory_order_relaxed) == Backend::lanes; }
bool use_lanes_f() { return g_backend_f.load(std::memory_order_relaxed) == Backend::lanes; }

}  // namespace

bool lanes_available() {
#if defined(BOXSOL_HAVE_SSE2)
    return true;
#else
    return false;
#endif
}

Backend backend_d() { return g_backend_d.load(std::memory_order_relaxed); }
Backend backend_f() { return g_backend_f.load(std::memory_order_relaxed); }

void set_backend_d(Backend b) {
    if (b == Backend::lanes && !lanes_available()) b = Backend::scalar;
    g_backend_d.store(b, std::memory_order_relaxed);
}

void set_backend_f(Backend b) {
    if (b == Backend::lanes && !lanes_available()) b = Backend::scalar;
    g_backend_f.store(b, std::memory_order_relaxed);
}

void set_backend(Backend b) {
    set_backend_d(b);
    set_backend_f(b);
}

#if defined(BOXSOL_HAVE_SSE2)
#define BOXSOL_PD_OP(name, expr_lanes, expr_scalar)  \
    PackedD name(const PackedD& a, const PackedD& b) \
    {                                                \
        fp::RoundUpScope up;                         \
        if (use_lanes()) return st(expr_lanes);      \
        return from_enc(expr_scalar);                \
    }
#else
#define BOXSOL_PD_OP(name, expr_lanes, expr_scalar)  \
    PackedD name(const PackedD& a, const PackedD& b) \
    {                                                \
        fp::RoundUpScope up;                         \
        return from_enc(expr_scalar);                \
    }
#endif

BOXSOL_PD_OP(pd_add, add_pd(ld(a), ld(b)), enc_add(to_enc(a), to_enc(b)))
BOXSOL_PD_OP(pd_sub, sub_pd(ld(a), ld(b)), enc_sub(to_enc(a), to_enc(b)))
BOXSOL_PD_OP(pd_mul, mul_pd(ld(a), ld(b)), enc_mul(to_enc(a), to_enc(b)))
BOXSOL_PD_OP(pd_div, div_pd(ld(a), ld(b)), enc_div(to_enc(a), to_enc(b)))
#undef BOXSOL_PD_OP

PackedD pd_neg(const PackedD& a) {
    fp::RoundUpScope up;
#if defined(BOXSOL_HAVE_SSE2)
    if (use_lanes()) return st(neg_pd(ld(a)));
#endif
    return from_enc(enc_neg(to_enc(a)));
}

PackedD pd_pow_int(const PackedD& a, int n) {
    fp::RoundUpScope up;
#if defined(BOXSOL_HAVE_SSE2)
    if (use_lanes()) return st(pow_pd(ld(a), n));
#endif
    return from_enc(enc_pow_int(to_enc(a), n));
}

PackedF2 encode_pair(const Interval& a, const Interval& b) {
    fp::RoundUpScope up;
    // (float) honors the upward direction, so each half is outward-rounded.
    return PackedF2{{static_cast<float>(-a.lo()), static_cast<float>(a.hi()),
                     static_cast<float>(-b.lo()), static_cast<float>(b.hi())}};
}

std::pair<Interval, Interval> decode_pair(const PackedF2& p) {
    auto piece = [](float nlo, float hi) {
        const double lo = -static_cast<double>(nlo);
        const double h = static_cast<double>(hi);
        if (lo > h) return Interval::empty();
        return Interval(lo, h);
    };
    return {piece(p.l[0], p.l[1]), piece(p.l[2], p.l[3])};
}

#if defined(BOXSOL_HAVE_SSE2)
#define BOXSOL_PF2_OP(name, expr_lanes, kernel)                            \
    PackedF2 name(const PackedF2& a, const PackedF2& b)                    \
    {                                                                      \
        fp::RoundUpScope up;                                               \
        if (use_lanes_f()) return st4(expr_lanes);                           \
        return join(kernel(half(a, 0), half(b, 0)), kernel(half(a, 1), half(b, 1))); \
    }
#else
#define BOXSOL_PF2_OP(name, expr_lanes, kernel)                            \
    PackedF2 name(const PackedF2& a, const PackedF2& b)                    \
    {                                                                      \
        fp::RoundUpScope up;                                               \
        return join(kernel(half(a, 0), half(b, 0)), kernel(half(a, 1), half(b, 1))); \
    }
#endif

BOXSOL_PF2_OP(pf2_add, add_ps(ld4(a), ld4(b)), enc_add<float>)
BOXSOL_PF2_OP(pf2_sub, sub_ps(ld4(a), ld4(b)), enc_sub<float>)
BOXSOL_PF2_OP(pf2_mul, mul_ps(ld4(a), ld4(b)), enc_mul<float>)
BOXSOL_PF2_OP(pf2_div, div_ps(ld4(a), ld4(b)), enc_div<float>)
#undef BOXSOL_PF2_OP

PackedF2 pf2_neg(const PackedF2& a) {
    fp::RoundUpScope up;
#if defined(BOXSOL_HAVE_SSE2)
    if (use_lanes_f()) return st4(neg_ps(ld4(a)));
#endif
    return join(enc_neg(half(a, 0)), enc_neg(half(a, 1)));
}

PackedF2 pf2_pow_int(const PackedF2& a, int n) {
    fp::RoundUpScope up;
#if defined(BOXSOL_HAVE_SSE2)
    if (use_lanes_f()) return st4(pow_ps(ld4(a), n));
#endif
    return join(enc_pow_int(half(a, 0), n), enc_pow_int(half(a, 1), n));
}

}  // namespace boxsol::packed
