#include "hypertrees/counting.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

#include "hypertrees/errors.hpp"

namespace hypertrees {
namespace {

// Rows are appended on demand and never modified afterwards.
class TriangleCache {
 public:
  using Recurrence = BigCount (*)(int n, int k, const std::vector<std::vector<BigCount>>& rows);

  explicit TriangleCache(Recurrence next) : next_(next) { rows_.push_back({BigCount(1)}); }

  BigCount at(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) {
      const int m = static_cast<int>(rows_.size());
      std::vector<BigCount> row(m + 1);
      for (int j = 0; j <= m; ++j) row[j] = next_(m, j, rows_);
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  Recurrence next_;
  std::mutex mutex_;
  std::vector<std::vector<BigCount>> rows_;
};

BigCount entry(const std::vector<std::vector<BigCount>>& rows, int n, int k) {
  if (k < 0 || k > n) return 0;
  return rows[n][k];
}

TriangleCache& second_kind() {
  static TriangleCache cache([](int n, int k, const auto& rows) {
    return BigCount(k) * entry(rows, n - 1, k) + entry(rows, n - 1, k - 1);
  });
  return cache;
}

TriangleCache& first_kind() {
  static TriangleCache cache([](int n, int k, const auto& rows) {
    return BigCount(n - 1) * entry(rows, n - 1, k) + entry(rows, n - 1, k - 1);
  });
  return cache;
}

void require(bool condition, ErrorKind kind, const std::string& detail) {
  if (!condition) throw Error(kind, detail);
}

int sum_of(std::span<const int> values) { return std::accumulate(values.begin(), values.end(), 0); }

bool all_nonnegative(std::span<const int> values) {
  return std::all_of(values.begin(), values.end(), [](int v) { return v >= 0; });
}

}  // namespace

BigCount factorial(int n) {
  require(n >= 0, ErrorKind::PartsMismatch, "factorial of a negative number");
  static std::mutex mutex;
  static std::vector<BigCount> table{BigCount(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    table.push_back(table.back() * static_cast<unsigned>(table.size()));
  }
  return table[n];
}

BigCount binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

BigCount multinomial(int n, std::span<const int> parts) {
  require(all_nonnegative(parts) && sum_of(parts) == n, ErrorKind::PartsMismatch,
          "parts do not sum to " + std::to_string(n));
  BigCount denominator = 1;
  for (int p : parts) denominator *= factorial(p);
  return factorial(n) / denominator;
}

BigCount stirling2(int n, int k) { return second_kind().at(n, k); }

BigCount stirling1_unsigned(int n, int k) { return first_kind().at(n, k); }

BigCount set_partitions_of_shape(const SizePartition& lambda) {
  const BigCount ordered = multinomial(lambda.n(), lambda.parts());
  BigCount symmetry = 1;
  for (int nu : lambda.multiplicities()) symmetry *= factorial(nu);
  BigCount quotient;
  BigCount remainder;
  boost::multiprecision::divide_qr(ordered, symmetry, quotient, remainder);
  if (remainder != 0) {
    throw Error(ErrorKind::ProfileMismatch, "multiplicity factor does not divide the multinomial");
  }
  return quotient;
}

BigCount count_hypertrees(const SizePartition& lambda, const DegreeVector& mu) {
  const int n = lambda.n();
  const int k = lambda.k();
  require(k >= 1, ErrorKind::ProfileMismatch, "size partition is empty");
  require(static_cast<int>(mu.mu.size()) == n + 1, ErrorKind::ProfileMismatch,
          "degree vector needs " + std::to_string(n + 1) + " entries");
  require(all_nonnegative(mu.mu) && mu.total() == k - 1, ErrorKind::ProfileMismatch,
          "degree vector must be nonnegative and sum to " + std::to_string(k - 1));
  return set_partitions_of_shape(lambda) * multinomial(k - 1, mu.mu);
}

BigCount count_hypertrees_by_sizes(const SizePartition& lambda) {
  require(lambda.k() >= 1, ErrorKind::ProfileMismatch, "size partition is empty");
  return set_partitions_of_shape(lambda) *
         pow(BigCount(lambda.n() + 1), static_cast<unsigned>(lambda.k() - 1));
}

BigCount count_hypertrees_total(int n, int k) {
  require(k >= 1 && n >= 0, ErrorKind::ProfileMismatch, "need k >= 1");
  return pow(BigCount(n + 1), static_cast<unsigned>(k - 1)) * stirling2(n, k);
}

BigCount weighted_total(int n, int k) {
  require(k >= 1 && n >= 0, ErrorKind::ProfileMismatch, "need k >= 1");
  return pow(BigCount(n + 1), static_cast<unsigned>(k - 1)) * stirling1_unsigned(n, k);
}

BigCount count_bipartite(std::span<const int> alpha, std::span<const int> beta) {
  require(!alpha.empty() && !beta.empty(), ErrorKind::ProfileMismatch, "empty degree vector");
  const int a = static_cast<int>(alpha.size()) - 1;
  const int b = static_cast<int>(beta.size()) - 1;
  require(all_nonnegative(alpha) && sum_of(alpha) == b, ErrorKind::ProfileMismatch,
          "alpha must be nonnegative and sum to b = " + std::to_string(b));
  require(all_nonnegative(beta) && sum_of(beta) == a, ErrorKind::ProfileMismatch,
          "beta must be nonnegative and sum to a = " + std::to_string(a));
  return multinomial(a, beta) * multinomial(b, alpha);
}

BigCount count_bipartite_total(int a, int b) {
  require(a >= 0 && b >= 0, ErrorKind::ProfileMismatch, "negative class size");
  return pow(BigCount(a + 1), static_cast<unsigned>(b)) *
         pow(BigCount(b + 1), static_cast<unsigned>(a));
}

BigCount bipartite_recursion_sum(std::span<const int> alpha, std::span<const int> beta) {
  count_bipartite(alpha, beta);  // profile check
  const int a = static_cast<int>(alpha.size()) - 1;
  const int b = static_cast<int>(beta.size()) - 1;
  const BigCount v_side = multinomial(a, beta);
  std::vector<int> reduced(alpha.begin(), alpha.end());
  BigCount sum = 0;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (reduced[i] == 0) continue;
    --reduced[i];
    sum += v_side * multinomial(b - 1, reduced);
    ++reduced[i];
  }
  return sum;
}

Probability size_profile_probability(const SizePartition& lambda, int n, int k) {
  require(k >= 1 && lambda.n() == n && lambda.k() == k, ErrorKind::ProfileMismatch,
          "lambda must partition n into k parts");
  return Probability(set_partitions_of_shape(lambda), stirling2(n, k));
}

Probability degree_profile_probability(const DegreeVector& mu, int n, int k) {
  require(k >= 1 && k <= n, ErrorKind::ProfileMismatch, "need 1 <= k <= n");
  require(static_cast<int>(mu.mu.size()) == n + 1 && all_nonnegative(mu.mu) &&
              mu.total() == k - 1,
          ErrorKind::ProfileMismatch, "mu must have n + 1 nonnegative entries summing to k - 1");
  return Probability(multinomial(k - 1, mu.mu),
                     pow(BigCount(n + 1), static_cast<unsigned>(k - 1)));
}

IdentitySides split_identity_check(int n) {
  require(n >= 1, ErrorKind::ProfileMismatch, "need n >= 1");
  IdentitySides sides{pow(BigCount(n + 1), static_cast<unsigned>(n - 1)), 0};
  for (int k = 0; k <= n - 1; ++k) {
    sides.rhs += binomial(n, k) * pow(BigCount(k + 1), static_cast<unsigned>(n - 1 - k)) *
                 pow(BigCount(n - k), static_cast<unsigned>(k));
  }
  return sides;
}

namespace {

void partitions_rec(int remaining, int parts_left, int max_part, std::vector<int>& prefix,
                    std::vector<SizePartition>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.emplace_back(prefix);
    return;
  }
  // Each of the remaining parts is at least 1 and at most max_part.
  const int hi = std::min(max_part, remaining - (parts_left - 1));
  for (int p = hi; p >= 1 && p * parts_left >= remaining; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, parts_left - 1, p, prefix, out);
    prefix.pop_back();
  }
}

void compositions_rec(int remaining, int parts_left, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
  if (parts_left == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    prefix.push_back(v);
    compositions_rec(remaining - v, parts_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SizePartition> partitions_into(int n, int k) {
  std::vector<SizePartition> out;
  if (n < 0 || k < 0) return out;
  std::vector<int> prefix;
  partitions_rec(n, k, n, prefix, out);
  return out;
}

std::vector<std::vector<int>> weak_compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (total < 0 || parts < 0) return out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> prefix;
  compositions_rec(total, parts, prefix, out);
  return out;
}

}  // namespace hypertrees
