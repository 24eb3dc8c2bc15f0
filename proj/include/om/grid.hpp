#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace om {

/// Planning time axes: H hours per day, D representative days, Y years.
/// Day weights scale each day's contribution to operation cost; when empty,
/// every day counts with weight 1.
struct TimeGrid {
  int hours_per_day = 24;
  int days = 1;
  int years = 1;
  std::vector<double> day_weights;  // size 0 or `days`

  int slots_per_year() const { return hours_per_day * days; }
  int total_slots() const { return hours_per_day * days * years; }

  double weight(int d) const {
    return day_weights.empty() ? 1.0 : day_weights.at(static_cast<std::size_t>(d));
  }

  void validate() const {
    if (hours_per_day < 1 || days < 1 || years < 1)
      throw std::invalid_argument("TimeGrid: H, D and Y must all be >= 1");
    if (!day_weights.empty() && static_cast<int>(day_weights.size()) != days)
      throw std::invalid_argument("TimeGrid: day_weights size must equal days");
    for (double w : day_weights)
      if (w < 0.0) throw std::invalid_argument("TimeGrid: day weights must be >= 0");
  }
};

/// Dense (year, day, hour) table. Storage is year-major so a single day's
/// hours are contiguous.
template <typename T>
class Grid3 {
 public:
  Grid3() = default;
  Grid3(const TimeGrid& g, T fill = T{})
      : hours_(g.hours_per_day), days_(g.days), years_(g.years),
        v_(static_cast<std::size_t>(g.total_slots()), fill) {}
  Grid3(int hours, int days, int years, T fill = T{})
      : hours_(hours), days_(days), years_(years),
        v_(static_cast<std::size_t>(hours) * days * years, fill) {}

  T& at(int y, int d, int h) { return v_[index(y, d, h)]; }
  const T& at(int y, int d, int h) const { return v_[index(y, d, h)]; }

  int hours() const { return hours_; }
  int days() const { return days_; }
  int years() const { return years_; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }

  bool same_shape(const Grid3& o) const {
    return hours_ == o.hours_ && days_ == o.days_ && years_ == o.years_;
  }
  bool matches(const TimeGrid& g) const {
    return hours_ == g.hours_per_day && days_ == g.days && years_ == g.years;
  }

  auto begin() { return v_.begin(); }
  auto end() { return v_.end(); }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<T>& values() const { return v_; }

  friend bool operator==(const Grid3&, const Grid3&) = default;

 private:
  std::size_t index(int y, int d, int h) const {
    if (y < 0 || y >= years_ || d < 0 || d >= days_ || h < 0 || h >= hours_)
      throw std::out_of_range("Grid3: index (" + std::to_string(y) + "," +
                              std::to_string(d) + "," + std::to_string(h) +
                              ") outside " + std::to_string(years_) + "x" +
                              std::to_string(days_) + "x" + std::to_string(hours_));
    return (static_cast<std::size_t>(y) * days_ + d) * hours_ + h;
  }

  int hours_ = 0, days_ = 0, years_ = 0;
  std::vector<T> v_;
};

using Series3 = Grid3<double>;
using Mask3 = Grid3<std::uint8_t>;

}  // namespace om
