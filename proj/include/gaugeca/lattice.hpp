#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gaugeca {

// Mathematical modulus: result lies in [0, n) for every integer x.
constexpr int mod_floor(int x, int n) {
  int r = x % n;
  return r < 0 ? r + n : r;
}

// One matter cell: a left-moving and a right-moving occupancy bit.
struct MatterCell {
  std::uint8_t minus = 0;
  std::uint8_t plus = 0;
  bool operator==(const MatterCell&) const = default;
};

// One gauge cell: the two bits dressing the local gate.
struct GaugeCell {
  std::uint8_t r = 0;
  std::uint8_t l = 0;
  bool operator==(const GaugeCell&) const = default;
};

inline MatterCell flipped(MatterCell c) {
  return {static_cast<std::uint8_t>(c.minus ^ 1),
          static_cast<std::uint8_t>(c.plus ^ 1)};
}

// Fixed-width ring of cells. Index arithmetic is periodic: at(x) resolves
// x mod width for any integer x, including negatives.
template <typename C>
class RingConfig {
 public:
  explicit RingConfig(int width)
      : width_(checked_width(width)), cells_(static_cast<size_t>(width_)) {}

  int width() const { return width_; }

  const C& at(int x) const { return cells_[static_cast<size_t>(mod_floor(x, width_))]; }
  C& at(int x) { return cells_[static_cast<size_t>(mod_floor(x, width_))]; }

  bool operator==(const RingConfig&) const = default;

 private:
  static int checked_width(int w) {
    if (w < 2) throw std::invalid_argument("ring width must be at least 2");
    return w;
  }

  int width_;
  std::vector<C> cells_;
};

using MatterRing = RingConfig<MatterCell>;
using GaugeRing = RingConfig<GaugeCell>;

// A stack of ring configurations indexed by time t = 0..horizon.
// Row access is strict: out-of-range t is a usage error, never a wrap.
template <typename C>
class SpacetimeDiagram {
 public:
  SpacetimeDiagram(int width, int horizon)
      : rows_(static_cast<size_t>(checked_horizon(horizon)) + 1, RingConfig<C>(width)) {}

  explicit SpacetimeDiagram(std::vector<RingConfig<C>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("diagram needs at least one row");
    for (const auto& r : rows_)
      if (r.width() != rows_.front().width())
        throw std::invalid_argument("diagram rows must share one width");
  }

  int width() const { return rows_.front().width(); }
  int horizon() const { return static_cast<int>(rows_.size()) - 1; }

  const RingConfig<C>& row(int t) const {
    check_row(t);
    return rows_[static_cast<size_t>(t)];
  }
  RingConfig<C>& row(int t) {
    check_row(t);
    return rows_[static_cast<size_t>(t)];
  }

  const C& at(int x, int t) const { return row(t).at(x); }
  C& at(int x, int t) { return row(t).at(x); }

  bool operator==(const SpacetimeDiagram&) const = default;

 private:
  static int checked_horizon(int t) {
    if (t < 0) throw std::invalid_argument("horizon must be non-negative");
    return t;
  }
  void check_row(int t) const {
    if (t < 0 || t >= static_cast<int>(rows_.size()))
      throw std::out_of_range("diagram row index out of range");
  }

  std::vector<RingConfig<C>> rows_;
};

using MatterDiagram = SpacetimeDiagram<MatterCell>;
using GaugeDiagram = SpacetimeDiagram<GaugeCell>;

// One bit per (x, t). Space wraps around the ring, time is strict.
// Used for phi fields and for the J and F invariants.
class BitField {
 public:
  BitField(int width, int horizon)
      : width_(width), horizon_(horizon),
        bits_(static_cast<size_t>(width) * (static_cast<size_t>(horizon) + 1), 0) {
    if (width < 2) throw std::invalid_argument("bit field width must be at least 2");
    if (horizon < 0) throw std::invalid_argument("bit field horizon must be non-negative");
  }

  int width() const { return width_; }
  int horizon() const { return horizon_; }

  std::uint8_t get(int x, int t) const { return bits_[index(x, t)]; }
  void set(int x, int t, std::uint8_t v) { bits_[index(x, t)] = v ? 1 : 0; }

  bool operator==(const BitField&) const = default;

 private:
  size_t index(int x, int t) const {
    if (t < 0 || t > horizon_) throw std::out_of_range("bit field row index out of range");
    return static_cast<size_t>(t) * static_cast<size_t>(width_) +
           static_cast<size_t>(mod_floor(x, width_));
  }

  int width_;
  int horizon_;
  std::vector<std::uint8_t> bits_;
};

using PhiField = BitField;
using JField = BitField;
using FField = BitField;

// Matter and gauge diagrams of one theory run, row-aligned.
struct JointDiagram {
  MatterDiagram matter;
  GaugeDiagram gauge;

  JointDiagram(MatterDiagram m, GaugeDiagram g) : matter(std::move(m)), gauge(std::move(g)) {
    if (matter.width() != gauge.width() || matter.horizon() != gauge.horizon())
      throw std::invalid_argument("matter and gauge diagrams must share one shape");
  }

  int width() const { return matter.width(); }
  int horizon() const { return matter.horizon(); }
};

// --- Enumeration encodings -------------------------------------------------
//
// The exhaustive sweeps index states by integers. Bit order matches the
// serialization order: cell x contributes bit 2x (first token bit: psi_minus
// or A_r) and bit 2x+1 (second token bit: psi_plus or A_l); diagram rows are
// packed earliest-first; phi rows likewise, one bit per site.

inline MatterRing matter_row_from_index(int width, std::uint32_t idx) {
  MatterRing row(width);
  for (int x = 0; x < width; ++x) {
    row.at(x).minus = static_cast<std::uint8_t>((idx >> (2 * x)) & 1u);
    row.at(x).plus = static_cast<std::uint8_t>((idx >> (2 * x + 1)) & 1u);
  }
  return row;
}

inline std::uint32_t matter_row_index(const MatterRing& row) {
  std::uint32_t idx = 0;
  for (int x = 0; x < row.width(); ++x) {
    idx |= static_cast<std::uint32_t>(row.at(x).minus) << (2 * x);
    idx |= static_cast<std::uint32_t>(row.at(x).plus) << (2 * x + 1);
  }
  return idx;
}

inline GaugeRing gauge_row_from_index(int width, std::uint32_t idx) {
  GaugeRing row(width);
  for (int x = 0; x < width; ++x) {
    row.at(x).r = static_cast<std::uint8_t>((idx >> (2 * x)) & 1u);
    row.at(x).l = static_cast<std::uint8_t>((idx >> (2 * x + 1)) & 1u);
  }
  return row;
}

inline std::uint32_t gauge_row_index(const GaugeRing& row) {
  std::uint32_t idx = 0;
  for (int x = 0; x < row.width(); ++x) {
    idx |= static_cast<std::uint32_t>(row.at(x).r) << (2 * x);
    idx |= static_cast<std::uint32_t>(row.at(x).l) << (2 * x + 1);
  }
  return idx;
}

inline GaugeDiagram gauge_diagram_from_index(int width, int horizon, std::uint64_t idx) {
  GaugeDiagram d(width, horizon);
  for (int t = 0; t <= horizon; ++t) {
    d.row(t) = gauge_row_from_index(
        width, static_cast<std::uint32_t>((idx >> (2 * width * t)) & ((1u << (2 * width)) - 1u)));
  }
  return d;
}

inline std::uint64_t gauge_diagram_index(const GaugeDiagram& d) {
  std::uint64_t idx = 0;
  for (int t = 0; t <= d.horizon(); ++t)
    idx |= static_cast<std::uint64_t>(gauge_row_index(d.row(t))) << (2 * d.width() * t);
  return idx;
}

inline MatterDiagram matter_diagram_from_index(int width, int horizon, std::uint64_t idx) {
  MatterDiagram d(width, horizon);
  for (int t = 0; t <= horizon; ++t) {
    d.row(t) = matter_row_from_index(
        width, static_cast<std::uint32_t>((idx >> (2 * width * t)) & ((1u << (2 * width)) - 1u)));
  }
  return d;
}

inline std::uint64_t matter_diagram_index(const MatterDiagram& d) {
  std::uint64_t idx = 0;
  for (int t = 0; t <= d.horizon(); ++t)
    idx |= static_cast<std::uint64_t>(matter_row_index(d.row(t))) << (2 * d.width() * t);
  return idx;
}

inline BitField bitfield_from_index(int width, int horizon, std::uint64_t idx) {
  BitField f(width, horizon);
  for (int t = 0; t <= horizon; ++t)
    for (int x = 0; x < width; ++x)
      f.set(x, t, static_cast<std::uint8_t>((idx >> (t * width + x)) & 1u));
  return f;
}

inline std::uint64_t bitfield_index(const BitField& f) {
  std::uint64_t idx = 0;
  for (int t = 0; t <= f.horizon(); ++t)
    for (int x = 0; x < f.width(); ++x)
      idx |= static_cast<std::uint64_t>(f.get(x, t)) << (t * f.width() + x);
  return idx;
}

}  // namespace gaugeca
