#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <utility>
#include <vector>

#include "pmc/errors.hpp"

namespace pmc {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

namespace field {

__extension__ using u128 = unsigned __int128;

constexpr std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;  // a, b < p < 2^63
  return s >= p ? s - p : s;
}

constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const u128 prod = static_cast<u128>(a) * b;
  if (p == kMersenne61) {
    const std::uint64_t lo = static_cast<std::uint64_t>(prod) & kMersenne61;
    const std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
    return add_mod(lo, hi, kMersenne61);
  }
  return static_cast<std::uint64_t>(prod % p);
}

constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

/// Signed integer reduced into [0, p).
constexpr std::uint64_t from_signed(std::int64_t v, std::uint64_t p) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p;
  const std::uint64_t m = (static_cast<std::uint64_t>(-(v + 1)) + 1) % p;
  return m == 0 ? 0 : p - m;
}

}  // namespace field

/// SplitMix64; used to derive evaluation points from a user seed.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// An independent stream, for giving sub-components their own seeds.
  constexpr SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

/// Field, evaluation points and index bound shared by compared fingerprints.
struct FingerprintParams {
  static constexpr std::size_t kMaxPoints = 2;

  std::uint64_t modulus = kMersenne61;
  std::array<std::uint64_t, kMaxPoints> points{1, 1};
  std::size_t point_count = kMaxPoints;
  std::uint64_t max_index = 0;

  /// Draws `point_count` uniform points in [1, modulus - 1] from `seed`.
  static FingerprintParams from_seed(std::uint64_t seed, std::uint64_t max_index,
                                     std::uint64_t modulus = kMersenne61,
                                     std::size_t point_count = kMaxPoints);

  /// Fixed points; mainly for small-field tests.
  static FingerprintParams with_points(std::uint64_t modulus,
                                       std::initializer_list<std::uint64_t> points,
                                       std::uint64_t max_index);

  /// Probability that arrays differing anywhere compare equal: (d/(p-1))^points.
  double error_bound() const;

  friend bool operator==(const FingerprintParams&, const FingerprintParams&) = default;
};

/// Linear hash of an integer array A: value_j = sum_i A[i] * r_j^i mod p.
class Fingerprint {
 public:
  Fingerprint() = default;
  explicit Fingerprint(const FingerprintParams& params);

  /// A[index] += delta.
  void add(std::uint64_t index, std::int64_t delta);

  bool matches(const Fingerprint& other) const;
  bool is_zero() const;

  std::int64_t cell_count() const { return cell_count_; }
  std::uint64_t value(std::size_t point) const { return values_[point]; }
  const FingerprintParams& params() const { return params_; }
  double error_bound() const { return params_.error_bound(); }

  /// Zero fingerprint with the same points and a new index bound.
  Fingerprint resized(std::uint64_t max_index) const;

 private:
  FingerprintParams params_;
  std::array<std::uint64_t, FingerprintParams::kMaxPoints> values_{};
  std::int64_t cell_count_ = 0;
};

Fingerprint fp_add(Fingerprint fp, std::uint64_t index, std::int64_t delta);

/// Throws ParamError when the fingerprints were built with different params.
bool fp_equal(const Fingerprint& a, const Fingerprint& b);

/// Exact sparse array with the same interface as Fingerprint. Backs the
/// exact checking modes.
class ExactCells {
 public:
  ExactCells() = default;
  explicit ExactCells(std::uint64_t max_index) : max_index_(max_index) {}

  void add(std::uint64_t index, std::int64_t delta);
  std::int64_t get(std::uint64_t index) const;

  bool matches(const ExactCells& other) const { return cells_ == other.cells_; }
  bool is_zero() const { return cells_.empty(); }
  std::int64_t cell_count() const { return cell_count_; }
  std::size_t nonzero_cells() const { return cells_.size(); }
  double error_bound() const { return 0.0; }
  std::uint64_t max_index() const { return max_index_; }

  ExactCells resized(std::uint64_t max_index) const { return ExactCells(max_index); }

 private:
  // Sorted by index; zero cells are erased so equality is structural.
  std::vector<std::pair<std::uint64_t, std::int64_t>> cells_;
  std::uint64_t max_index_ = 0;
  std::int64_t cell_count_ = 0;
};

/// What the checkers need from a cell-array summary.
template <typename A>
concept CellAccumulator = std::copyable<A> && requires(A a, const A ca, std::uint64_t i, std::int64_t d) {
  a.add(i, d);
  { ca.matches(ca) } -> std::convertible_to<bool>;
  { ca.is_zero() } -> std::convertible_to<bool>;
  { ca.cell_count() } -> std::same_as<std::int64_t>;
  { ca.error_bound() } -> std::convertible_to<double>;
  { ca.resized(i) } -> std::same_as<A>;
};

static_assert(CellAccumulator<Fingerprint>);
static_assert(CellAccumulator<ExactCells>);

}  // namespace pmc
