#include "renorm/l1/dyadic_set.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace renorm {

DyadicSet DyadicSet::full() { return DyadicSet{}; }

DyadicSet DyadicSet::from_cells(int level, const std::vector<std::uint8_t>& cells) {
    if (level < 0 || level > kMaxMaskLevel) throw std::invalid_argument("dyadic set: mask level out of range");
    const std::uint64_t n = std::uint64_t{1} << level;
    if (cells.size() != n) throw std::invalid_argument("dyadic set: need 2^level cell flags");
    DyadicSet s;
    s.base_level_ = level;
    s.words_.assign((n + 63) / 64, 0);
    s.constraints_.clear();
    for (std::uint64_t i = 0; i < n; ++i) {
        if (cells[i]) s.words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return s;
}

DyadicSet DyadicSet::cell(int level, std::uint64_t index) {
    if (level < 0 || level > kMaxMaskLevel) throw std::invalid_argument("dyadic set: cell level out of range");
    if (index >= (std::uint64_t{1} << level)) throw std::invalid_argument("dyadic set: cell index out of range");
    DyadicSet s;
    s.base_level_ = level;
    s.words_.assign(((std::uint64_t{1} << level) + 63) / 64, 0);
    s.words_[index / 64] |= std::uint64_t{1} << (index % 64);
    s.constraints_.clear();
    return s;
}

int DyadicSet::level() const { return constraints_.empty() ? base_level_ : constraints_.back().position; }

std::uint64_t DyadicSet::base_cell_count() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

bool DyadicSet::has_base_cell(std::uint64_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

double DyadicSet::measure() const {
    return std::ldexp(static_cast<double>(base_cell_count()),
                      -base_level_ - static_cast<int>(constraints_.size()));
}

DyadicSet DyadicSet::restrict(int position, int bit) const {
    if (position <= level()) throw std::invalid_argument("dyadic set: restriction digit must exceed the set level");
    if (position > kMaxDigit) throw std::invalid_argument("dyadic set: digit beyond representable depth");
    if (bit != 0 && bit != 1) throw std::invalid_argument("dyadic set: digit value must be 0 or 1");
    DyadicSet s = *this;
    s.constraints_.push_back({position, bit});
    return s;
}

DyadicSet DyadicSet::to_mask(int m) const {
    if (m < level() || m > kMaxMaskLevel) throw std::invalid_argument("dyadic set: cannot express at this level");
    const std::uint64_t n = std::uint64_t{1} << m;
    std::vector<std::uint8_t> cells(n, 0);
    const int shift = m - base_level_;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (!has_base_cell(i >> shift)) continue;
        bool ok = true;
        for (const auto& c : constraints_) {
            if (static_cast<int>((i >> (m - c.position)) & 1U) != c.bit) {
                ok = false;
                break;
            }
        }
        cells[i] = ok ? 1 : 0;
    }
    return from_cells(m, cells);
}

std::vector<Interval> DyadicSet::base_runs() const {
    std::vector<Interval> runs;
    const std::uint64_t n = std::uint64_t{1} << base_level_;
    std::uint64_t i = 0;
    while (i < n) {
        if (!has_base_cell(i)) {
            ++i;
            continue;
        }
        std::uint64_t j = i;
        while (j < n && has_base_cell(j)) ++j;
        runs.push_back({std::ldexp(static_cast<double>(i), -base_level_), std::ldexp(static_cast<double>(j), -base_level_)});
        i = j;
    }
    return runs;
}

std::string DyadicSet::mask_hex() const {
    // Cells in index order, four per hex digit, cell 0 in the high bit of the
    // first digit; levels below 2 are padded with zero bits.
    static const char* kHex = "0123456789abcdef";
    const std::uint64_t n = std::uint64_t{1} << base_level_;
    std::string out;
    for (std::uint64_t i = 0; i < n; i += 4) {
        unsigned nib = 0;
        for (std::uint64_t j = 0; j < 4; ++j) {
            nib <<= 1;
            if (i + j < n && has_base_cell(i + j)) nib |= 1U;
        }
        out.push_back(kHex[nib]);
    }
    return out;
}

int DyadicPoint::digit(int position) const {
    if (position < 1) throw std::invalid_argument("dyadic point: digit positions start at 1");
    const auto idx = static_cast<std::size_t>(position - 1);
    return idx < digits_.size() ? digits_[idx] : 0;
}

bool DyadicPoint::in(const DyadicSet& set) const {
    std::uint64_t cell = 0;
    for (int p = 1; p <= set.base_level(); ++p) cell = (cell << 1) | static_cast<std::uint64_t>(digit(p));
    if (!set.has_base_cell(cell)) return false;
    for (const auto& c : set.constraints()) {
        if (digit(c.position) != c.bit) return false;
    }
    return true;
}

DyadicPoint DyadicPoint::random_in(const DyadicSet& set, Rng& rng, int length) {
    if (length < set.level()) throw std::invalid_argument("dyadic point: length below set level");
    const std::uint64_t cells = set.base_cell_count();
    if (cells == 0) throw std::invalid_argument("dyadic point: empty set");
    std::uint64_t pick = rng.bits() % cells;
    std::uint64_t cell = 0;
    for (std::uint64_t i = 0;; ++i) {
        if (set.has_base_cell(i)) {
            if (pick == 0) {
                cell = i;
                break;
            }
            --pick;
        }
    }
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(length));
    for (int p = 1; p <= set.base_level(); ++p) digits[p - 1] = (cell >> (set.base_level() - p)) & 1U;
    for (int p = set.base_level() + 1; p <= length; ++p) digits[p - 1] = rng.bits() & 1U;
    for (const auto& c : set.constraints()) digits[c.position - 1] = static_cast<std::uint8_t>(c.bit);
    return DyadicPoint(std::move(digits));
}

}  // namespace renorm
