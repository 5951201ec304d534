#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ringlab/error.hpp"

namespace ringlab {

// A permutation of bell positions {1..n}. Permutations act on positions, not
// on the bells: applying p to a row moves the bell in position i to position
// p(i). Composition is left-to-right throughout: (p * q) means first p, then
// q, so (p * q)(i) = q(p(i)). This matches how transition words are read.
//
// Internally positions are 0-based; every public interface that talks about
// points uses 1-based positions.
class Perm {
 public:
  Perm() = default;

  static Perm identity(int degree);

  // images[i] = 0-based image of 0-based position i; must be a bijection.
  static Perm from_images(std::vector<std::uint8_t> images);

  int degree() const { return static_cast<int>(img_.size()); }

  // 1-based action: where does position i go?
  int at(int i) const { return img_[i - 1] + 1; }

  // 0-based action, used by the hot loops.
  std::uint8_t operator[](int i) const { return img_[i]; }

  bool is_identity() const;

  Perm operator*(const Perm& q) const;  // left-to-right: first *this, then q

  Perm inverse() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  const std::vector<std::uint8_t>& images() const { return img_; }

  // Disjoint cycles over 1-based points, each starting at its smallest
  // element, sorted by smallest element; 1-cycles omitted.
  std::vector<std::vector<int>> cycles() const;

 private:
  explicit Perm(std::vector<std::uint8_t> img) : img_(std::move(img)) {}
  std::vector<std::uint8_t> img_;
};

// A row: the n bells listed in order. bells()[i] is the 1-based bell
// identifier sounding in position i+1. Always a permutation of {1..n}.
class Row {
 public:
  Row() = default;

  static Row rounds(int n);
  static Row from_bells(std::vector<std::uint8_t> bells);  // validates

  int size() const { return static_cast<int>(bells_.size()); }
  int bell_at(int position) const { return bells_[position - 1]; }
  const std::vector<std::uint8_t>& bells() const { return bells_; }

  bool operator==(const Row& o) const { return bells_ == o.bells_; }
  bool operator<(const Row& o) const { return bells_ < o.bells_; }

 private:
  explicit Row(std::vector<std::uint8_t> bells) : bells_(std::move(bells)) {}
  std::vector<std::uint8_t> bells_;
};

// Bell in position i moves to position p(i): result[p(i)] = r[i].
Row apply_to_row(const Perm& p, const Row& r);

// Least k >= 1 with p^k = identity (lcm of cycle lengths).
long long order(const Perm& p);

bool is_even(const Perm& p);

// True iff p is a nonidentity product of disjoint transpositions of adjacent
// positions -- the shape rule (3) demands of every transition. The identity
// is not a transition: a change must move at least one pair.
bool is_transition(const Perm& p);

// True iff some position is fixed by both p and q. Consecutive transitions
// sharing a fixed point is exactly a rule-(4R) violation.
bool common_fixed_point(const Perm& p, const Perm& q);

Perm power(const Perm& p, long long k);

void require_same_degree(const Perm& p, const Perm& q);

}  // namespace ringlab

template <>
struct std::hash<ringlab::Perm> {
  std::size_t operator()(const ringlab::Perm& p) const {
    // FNV-1a over the image bytes
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t b : p.images()) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};
