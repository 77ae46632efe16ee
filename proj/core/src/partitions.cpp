#include "soflag/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace soflag {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  std::erase(parts_, 0u);
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::repeated(unsigned m, unsigned count) {
  return Partition(std::vector<unsigned>(m == 0 ? 0 : count, m));
}

Partition Partition::parse(std::string_view text) {
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.remove_suffix(1);
    return s;
  };
  text = trimmed(text);
  if (text.empty()) return Partition();
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    auto token = trimmed(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    parts.push_back(static_cast<unsigned>(std::stoul(std::string(token))));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return Partition(std::move(parts));
}

unsigned Partition::multiplicity(unsigned m) const {
  return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), m));
}

Partition concat(const Partition& a, const Partition& b) {
  std::vector<unsigned> merged;
  merged.reserve(a.parts_.size() + b.parts_.size());
  std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(), std::back_inserter(merged),
             std::greater<>());
  Partition p;
  p.parts_ = std::move(merged);
  p.degree_ = a.degree_ + b.degree_;
  return p;
}

Partition Partition::without(std::size_t i) const {
  Partition p = *this;
  p.degree_ -= p.parts_.at(i);
  p.parts_.erase(p.parts_.begin() + static_cast<std::ptrdiff_t>(i));
  return p;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::padded() const {
  if (parts_.empty()) return "0";
  if (parts_.size() == 1 && degree_ == parts_[0] && parts_[0] == 1) return "1";
  std::string out = "(" + to_string();
  for (std::size_t i = parts_.size(); i < degree_; ++i) out += ",0";
  return out + ")";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  // Lexicographically larger parts come first.
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end());
}

std::vector<Partition> enumerate_exact(unsigned k) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  // Parts chosen in non-increasing order; recursing on the largest part first
  // yields lexicographically descending output.
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (unsigned m = std::min(remaining, max_part); m >= 1; --m) {
      current.push_back(m);
      rec(remaining - m, m);
      current.pop_back();
    }
  };
  rec(k, k);
  return out;
}

std::vector<Partition> enumerate_upto(unsigned k) {
  std::vector<Partition> out;
  for (unsigned j = 0; j <= k; ++j) {
    auto slice = enumerate_exact(j);
    out.insert(out.end(), std::make_move_iterator(slice.begin()), std::make_move_iterator(slice.end()));
  }
  return out;
}

std::uint64_t partition_count(unsigned k) {
  // Euler's recurrence through generalized pentagonal numbers.
  std::vector<std::uint64_t> p(k + 1, 0);
  p[0] = 1;
  for (unsigned n = 1; n <= k; ++n) {
    std::int64_t acc = 0;
    for (std::int64_t i = 1;; ++i) {
      std::int64_t g1 = i * (3 * i - 1) / 2;
      std::int64_t g2 = i * (3 * i + 1) / 2;
      if (g1 > static_cast<std::int64_t>(n)) break;
      std::int64_t sign = (i % 2 == 1) ? 1 : -1;
      acc += sign * static_cast<std::int64_t>(p[n - g1]);
      if (g2 <= static_cast<std::int64_t>(n)) acc += sign * static_cast<std::int64_t>(p[n - g2]);
    }
    p[n] = static_cast<std::uint64_t>(acc);
  }
  return p[k];
}

}  // namespace soflag
