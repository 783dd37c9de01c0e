// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cassert>
#include <cfenv>
#include <cmath>
#include <limits>

namespace boxsol::fp {

namespace detail {
inline thread_local bool upward_active = false;
}

inline bool upward_active() { return detail::upward_active; }

// Sets the dynamic rounding direction to +inf for the lifetime of the object.
// All interval kernels require an active scope and open their own, so the
// nested case (one thread-local load and a branch) is the hot path.  Lower
// bounds are then obtained through the identity roundDown(x) = -roundUp(-x);
// no per-operation mode switches happen anywhere.
class RoundUpScope {
public:
    RoundUpScope() {
        if (!detail::upward_active) {
            saved_ = std::fegetround();
            std::fesetround(FE_UPWARD);
            detail::upward_active = true;
        }
    }
    ~RoundUpScope() {
        if (saved_ != kInactive) {
            std::fesetround(saved_);
            detail::upward_active = false;
        }
    }
    RoundUpScope(const RoundUpScope&) = delete;
    RoundUpScope& operator=(const RoundUpScope&) = delete;

private:
    static constexpr int kInactive = -1;
    int saved_ = kInactive;
};

// Restores round-to-nearest around libm calls.  The accuracy bounds of the
// math library hold in the default mode only, so every transcendental kernel
// evaluates under this scope and widens the result afterwards.
class RoundNearestScope {
public:
    RoundNearestScope() : saved_(std::fegetround()), was_up_(detail::upward_active) {
        if (saved_ != FE_TONEAREST) std::fesetround(FE_TONEAREST);
        detail::upward_active = false;
    }
    ~RoundNearestScope() {
        if (saved_ != FE_TONEAREST) std::fesetround(saved_);
        detail::upward_active = was_up_;
    }
    RoundNearestScope(const RoundNearestScope&) = delete;
    RoundNearestScope& operator=(const RoundNearestScope&) = delete;

private:
    int saved_;
    bool was_up_;
};

// Successor in the binary64 total order; +inf is a fixed point.
inline double next_float(double x) {
    assert(!std::isnan(x));
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

// Predecessor in the binary64 total order; -inf is a fixed point.
inline double prev_float(double x) {
    assert(!std::isnan(x));
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

inline double step_up(double x, int ulps) {
    for (int i = 0; i < ulps; ++i) x = next_float(x);
    return x;
}

inline double step_down(double x, int ulps) {
    for (int i = 0; i < ulps; ++i) x = prev_float(x);
    return x;
}

inline float next_float32(float x) {
    assert(!std::isnan(x));
    return std::nextafterf(x, std::numeric_limits<float>::infinity());
}

inline float prev_float32(float x) {
    assert(!std::isnan(x));
    return std::nextafterf(x, -std::numeric_limits<float>::infinity());
}

}  // namespace boxsol::fp
