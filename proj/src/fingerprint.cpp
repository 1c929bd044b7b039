#include "pmc/fingerprint.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace pmc {

FingerprintParams FingerprintParams::from_seed(std::uint64_t seed, std::uint64_t max_index,
                                               std::uint64_t modulus, std::size_t point_count) {
  if (modulus < 3) throw ParamError("modulus must be an odd prime");
  if (point_count == 0 || point_count > kMaxPoints) throw ParamError("unsupported point count");
  if (max_index >= modulus) throw ParamError("max index must be below the modulus");
  FingerprintParams params;
  params.modulus = modulus;
  params.point_count = point_count;
  params.max_index = max_index;
  SplitMix64 rng(seed);
  const int width = std::bit_width(modulus - 1);
  const std::uint64_t mask = width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  for (std::size_t j = 0; j < kMaxPoints; ++j) {
    std::uint64_t r = 0;
    do {
      r = rng.next() & mask;
    } while (r == 0 || r >= modulus);
    params.points[j] = r;
  }
  return params;
}

FingerprintParams FingerprintParams::with_points(std::uint64_t modulus,
                                                 std::initializer_list<std::uint64_t> points,
                                                 std::uint64_t max_index) {
  if (points.size() == 0 || points.size() > kMaxPoints) throw ParamError("unsupported point count");
  if (max_index >= modulus) throw ParamError("max index must be below the modulus");
  FingerprintParams params;
  params.modulus = modulus;
  params.point_count = points.size();
  params.max_index = max_index;
  std::size_t j = 0;
  for (auto r : points) {
    if (r == 0 || r >= modulus) throw ParamError("evaluation points must lie in [1, p-1]");
    params.points[j++] = r;
  }
  return params;
}

double FingerprintParams::error_bound() const {
  const double per_point = static_cast<double>(max_index) / static_cast<double>(modulus - 1);
  return std::pow(per_point, static_cast<double>(point_count));
}

Fingerprint::Fingerprint(const FingerprintParams& params) : params_(params) {}

void Fingerprint::add(std::uint64_t index, std::int64_t delta) {
  if (index > params_.max_index) {
    throw IndexBoundError("cell index " + std::to_string(index) + " exceeds bound " +
                          std::to_string(params_.max_index));
  }
  if (delta == 0) return;
  const std::uint64_t p = params_.modulus;
  const std::uint64_t d = field::from_signed(delta, p);
  for (std::size_t j = 0; j < params_.point_count; ++j) {
    const std::uint64_t term = field::mul_mod(d, field::pow_mod(params_.points[j], index, p), p);
    values_[j] = field::add_mod(values_[j], term, p);
  }
  cell_count_ += delta;
}

bool Fingerprint::matches(const Fingerprint& other) const {
  return cell_count_ == other.cell_count_ && values_ == other.values_;
}

bool Fingerprint::is_zero() const {
  return cell_count_ == 0 && values_ == decltype(values_){};
}

Fingerprint Fingerprint::resized(std::uint64_t max_index) const {
  FingerprintParams params = params_;
  if (max_index >= params.modulus) throw ParamError("max index must be below the modulus");
  params.max_index = max_index;
  return Fingerprint(params);
}

Fingerprint fp_add(Fingerprint fp, std::uint64_t index, std::int64_t delta) {
  fp.add(index, delta);
  return fp;
}

bool fp_equal(const Fingerprint& a, const Fingerprint& b) {
  if (!(a.params() == b.params())) throw ParamError("fingerprints built with different params");
  return a.matches(b);
}

void ExactCells::add(std::uint64_t index, std::int64_t delta) {
  if (index > max_index_) {
    throw IndexBoundError("cell index " + std::to_string(index) + " exceeds bound " +
                          std::to_string(max_index_));
  }
  if (delta == 0) return;
  cell_count_ += delta;
  auto it = std::lower_bound(cells_.begin(), cells_.end(), index,
                             [](const auto& cell, std::uint64_t i) { return cell.first < i; });
  if (it != cells_.end() && it->first == index) {
    it->second += delta;
    if (it->second == 0) cells_.erase(it);
  } else {
    cells_.insert(it, {index, delta});
  }
}

std::int64_t ExactCells::get(std::uint64_t index) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), index,
                             [](const auto& cell, std::uint64_t i) { return cell.first < i; });
  return it != cells_.end() && it->first == index ? it->second : 0;
}

}  // namespace pmc
