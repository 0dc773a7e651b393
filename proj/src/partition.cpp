#include "qts/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace qts {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition needs ambient length n >= 1");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing: " + str());
    }
  }
}

Partition Partition::zero(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 0)); }

Partition Partition::row(int n, int k) {
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  parts[0] = k;
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int n, int k) {
  return Partition(std::vector<int>(static_cast<std::size_t>(n), k));
}

int Partition::weight() const {
  int w = 0;
  for (int x : parts_) w += x;
  return w;
}

int Partition::n_stat() const {
  int s = 0;
  for (int i = 0; i < n(); ++i) s += i * parts_[static_cast<std::size_t>(i)];
  return s;
}

int Partition::n_stat_conj() const {
  int s = 0;
  for (int x : parts_) s += x * (x - 1) / 2;
  return s;
}

Partition Partition::conjugate() const {
  const int len = std::max(first(), 1);
  std::vector<int> out(static_cast<std::size_t>(len), 0);
  for (int j = 0; j < first(); ++j) {
    out[static_cast<std::size_t>(j)] = static_cast<int>(
        std::count_if(parts_.begin(), parts_.end(), [j](int x) { return x > j; }));
  }
  return Partition(std::move(out));
}

Partition Partition::padded(int m) const {
  if (m < n()) throw std::invalid_argument("cannot pad a partition to a shorter length");
  std::vector<int> out = parts_;
  out.resize(static_cast<std::size_t>(m), 0);
  return Partition(std::move(out));
}

std::string Partition::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

Partition Partition::parse(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed partition \"" + std::string(text) + "\""); };
  std::string_view s = text;
  auto trim = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  if (s.size() >= 2 && ((s.front() == '[' && s.back() == ']') || (s.front() == '(' && s.back() == ')'))) {
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  while (true) {
    const std::size_t comma = s.find(',');
    std::string_view item = trim(s.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) throw bad();
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return Partition(std::move(parts));
}

namespace {

void require_same_n(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) {
    throw AmbientMismatch("ambient lengths differ: " + a.str() + " vs " + b.str());
  }
}

// Lexicographic enumeration of decreasing vectors with lo_i <= x_i <= hi_i.
std::vector<Partition> enumerate(const std::vector<int>& lo, const std::vector<int>& hi) {
  std::vector<Partition> out;
  const std::size_t n = lo.size();
  std::vector<int> cur(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.emplace_back(cur);
      return;
    }
    const int top = i == 0 ? hi[i] : std::min(hi[i], cur[i - 1]);
    for (int x = lo[i]; x <= top; ++x) {
      cur[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

bool contains(const Partition& lambda, const Partition& mu) {
  require_same_n(lambda, mu);
  for (int i = 0; i < lambda.n(); ++i) {
    if (mu[i] > lambda[i]) return false;
  }
  return true;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& nu) {
  require_same_n(lambda, nu);
  for (int i = 0; i < lambda.n(); ++i) {
    if (nu[i] > lambda[i]) return false;
    if (i + 1 < lambda.n() && nu[i] < lambda[i + 1]) return false;
  }
  return true;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  return enumerate(std::vector<int>(static_cast<std::size_t>(lambda.n()), 0), lambda.parts());
}

std::vector<Partition> horizontal_strip_predecessors(const Partition& lambda) {
  std::vector<int> lo(static_cast<std::size_t>(lambda.n()), 0);
  for (int i = 0; i + 1 < lambda.n(); ++i) lo[static_cast<std::size_t>(i)] = lambda[i + 1];
  return enumerate(lo, lambda.parts());
}

std::vector<Partition> interval(const Partition& mu, const Partition& lambda) {
  require_same_n(mu, lambda);
  if (!contains(lambda, mu)) return {};
  return enumerate(mu.parts(), lambda.parts());
}

std::vector<Partition> partitions_in_box(int n, int p) {
  return subpartitions(Partition::rectangle(n, p));
}

std::vector<int> staircase(int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = n - 1 - i;
  return out;
}

}  // namespace qts
