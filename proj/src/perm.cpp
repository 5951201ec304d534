#include "ringlab/perm.hpp"

#include <algorithm>
#include <numeric>

namespace ringlab {

Perm Perm::identity(int degree) {
  if (degree < 1) throw error("invalid-degree", "degree must be >= 1");
  std::vector<std::uint8_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_images(std::vector<std::uint8_t> images) {
  if (images.empty()) throw error("invalid-degree", "degree must be >= 1");
  std::vector<bool> seen(images.size(), false);
  for (std::uint8_t v : images) {
    if (v >= images.size() || seen[v])
      throw error("invalid-perm", "image list is not a bijection");
    seen[v] = true;
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& q) const {
  require_same_degree(*this, q);
  std::vector<std::uint8_t> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) img[i] = q.img_[img_[i]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    img[img_[i]] = static_cast<std::uint8_t>(i);
  return Perm(std::move(img));
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j + 1);
      j = img_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Row Row::rounds(int n) {
  if (n < 1) throw error("invalid-degree", "stage must be >= 1");
  std::vector<std::uint8_t> b(n);
  std::iota(b.begin(), b.end(), 1);
  return Row(std::move(b));
}

Row Row::from_bells(std::vector<std::uint8_t> bells) {
  if (bells.empty()) throw error("row-error", "empty row");
  std::vector<bool> seen(bells.size() + 1, false);
  for (std::uint8_t b : bells) {
    if (b < 1 || b > bells.size())
      throw error("row-error", "bell " + std::to_string(int(b)) +
                                   " out of range for stage " +
                                   std::to_string(bells.size()));
    if (seen[b])
      throw error("row-error", "duplicate bell " + std::to_string(int(b)));
    seen[b] = true;
  }
  return Row(std::move(bells));
}

Row apply_to_row(const Perm& p, const Row& r) {
  if (p.degree() != r.size())
    throw error("degree-error", "permutation degree " +
                                    std::to_string(p.degree()) +
                                    " != row length " +
                                    std::to_string(r.size()));
  std::vector<std::uint8_t> out(r.size());
  for (int i = 0; i < r.size(); ++i) out[p[i]] = r.bells()[i];
  return Row::from_bells(std::move(out));
}

long long order(const Perm& p) {
  long long ord = 1;
  std::vector<bool> seen(p.degree(), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      j = p[j];
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool is_even(const Perm& p) {
  // parity = (degree - number of cycles) mod 2, counting fixed points
  int cycles = 0;
  std::vector<bool> seen(p.degree(), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p[j];
    }
  }
  return (p.degree() - cycles) % 2 == 0;
}

bool is_transition(const Perm& p) {
  bool moves = false;
  for (int i = 0; i < p.degree(); ++i) {
    int im = p[i];
    if (im == i) continue;
    moves = true;
    if (im != i + 1 && im != i - 1) return false;
    if (p[im] != i) return false;  // must swap back: involution of neighbours
  }
  return moves;
}

bool common_fixed_point(const Perm& p, const Perm& q) {
  require_same_degree(p, q);
  for (int i = 0; i < p.degree(); ++i)
    if (p[i] == i && q[i] == i) return true;
  return false;
}

Perm power(const Perm& p, long long k) {
  long long n = order(p);
  k %= n;
  if (k < 0) k += n;
  Perm acc = Perm::identity(p.degree());
  Perm base = p;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

void require_same_degree(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw error("degree-error", "degrees differ: " +
                                    std::to_string(p.degree()) + " vs " +
                                    std::to_string(q.degree()));
}

}  // namespace ringlab
