#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "renorm/core/random.hpp"
#include "renorm/l1/weight.hpp"

namespace renorm {

inline constexpr int kMaxMaskLevel = 24;
/// Deepest binary digit a constraint may fix; 2^-kMaxDigit stays a normal double.
inline constexpr int kMaxDigit = 1000;

/// Fixes binary digit `position` (weight 2^-position) of x to `bit`.
struct DigitConstraint {
    int position = 1;
    int bit = 0;
    friend bool operator==(const DigitConstraint&, const DigitConstraint&) = default;
};

/// A finite union of dyadic intervals, stored as a cell mask at a base level
/// (<= 24) intersected with digit constraints at deeper positions. Plain
/// masks cover the usual D_m sets; the constraints let sets such as
/// {x : digit_n(x) = 0} with n in the hundreds be represented exactly.
class DyadicSet {
public:
    /// The whole interval [0,1).
    DyadicSet() = default;

    static DyadicSet full();
    static DyadicSet from_cells(int level, const std::vector<std::uint8_t>& cells);
    /// The single dyadic interval I_s of the given level.
    static DyadicSet cell(int level, std::uint64_t index);

    int base_level() const { return base_level_; }
    const std::vector<DigitConstraint>& constraints() const { return constraints_; }
    /// Finest digit the set depends on.
    int level() const;
    std::uint64_t base_cell_count() const;
    bool has_base_cell(std::uint64_t i) const;
    double measure() const;

    /// this ∩ {digit_position = bit}; position must exceed level().
    DyadicSet restrict(int position, int bit) const;
    /// Equivalent plain mask at level m, level() <= m <= 24.
    DyadicSet to_mask(int m) const;
    /// Maximal runs [a,b) of consecutive base cells.
    std::vector<Interval> base_runs() const;

    std::string mask_hex() const;

    friend bool operator==(const DyadicSet&, const DyadicSet&) = default;

private:
    int base_level_ = 0;
    std::vector<std::uint64_t> words_{1};
    std::vector<DigitConstraint> constraints_;
};

/// A point of [0,1) given by its first binary digits (later digits are 0).
class DyadicPoint {
public:
    explicit DyadicPoint(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {}
    int digit(int position) const;
    /// r_n(x) = +1 when digit n is 0, -1 when it is 1.
    int rademacher(int n) const { return digit(n) ? -1 : 1; }
    bool in(const DyadicSet& set) const;
    std::size_t length() const { return digits_.size(); }

    /// Uniform random point of `set`, resolved to `length` digits.
    static DyadicPoint random_in(const DyadicSet& set, Rng& rng, int length);

private:
    std::vector<std::uint8_t> digits_;
};

}  // namespace renorm
