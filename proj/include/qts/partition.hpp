#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qts {

class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A partition with a fixed ambient length n: parts is a weakly decreasing
// vector of exactly n nonnegative integers.  Trailing zeros are part of the
// identity, so (2,1) and (2,1,0) are different values.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts is nonempty, nonnegative and
  // weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  static Partition zero(int n);
  // Single row (k, 0, ..., 0) of length n.
  static Partition row(int n, int k);
  // (k, ..., k) of length n.
  static Partition rectangle(int n, int k);

  int n() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& parts() const { return parts_; }
  // Largest part, 0 for the empty partition.
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  int weight() const;
  // sum (i-1) mu_i
  int n_stat() const;
  // sum binom(mu_i, 2)
  int n_stat_conj() const;
  // Transpose, with ambient length max(mu_1, 1).
  Partition conjugate() const;
  // Same parts with zeros appended up to length m >= n().
  Partition padded(int m) const;
  bool is_zero() const { return first() == 0; }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

  // "[2,1,0]"
  std::string str() const;
  // Accepts "[2,1,0]", "2,1,0" or "(2,1,0)".
  static Partition parse(std::string_view text);

 private:
  std::vector<int> parts_;
};

// mu_i <= lambda_i for all i.
bool contains(const Partition& lambda, const Partition& mu);
// lambda_1 >= nu_1 >= lambda_2 >= nu_2 >= ... >= lambda_n >= nu_n.
bool is_horizontal_strip(const Partition& lambda, const Partition& nu);

// All mu contained in lambda, lexicographically ascending.
std::vector<Partition> subpartitions(const Partition& lambda);
// All nu with lambda/nu a horizontal strip, lexicographically ascending.
std::vector<Partition> horizontal_strip_predecessors(const Partition& lambda);
// All nu with mu <= nu <= lambda.
std::vector<Partition> interval(const Partition& mu, const Partition& lambda);
// Every partition of length n with parts at most p.
std::vector<Partition> partitions_in_box(int n, int p);

// (n-1, n-2, ..., 1, 0).
std::vector<int> staircase(int n);

}  // namespace qts

template <>
struct std::hash<qts::Partition> {
  std::size_t operator()(const qts::Partition& p) const {
    std::size_t h = p.parts().size();
    for (int x : p.parts()) h = h * 1000003u + static_cast<std::size_t>(x);
    return h;
  }
};
