#include "hypertrees/selftest.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "hypertrees/bipartite_codec.hpp"
#include "hypertrees/counting.hpp"
#include "hypertrees/errors.hpp"
#include "hypertrees/hypertree_codec.hpp"

namespace hypertrees {
namespace {

struct Failure {
  Json report;
};

class Certifier {
 public:
  explicit Certifier(const OracleBounds& bounds) : bounds_(bounds) {}

  int checks() const { return checks_; }
  Json& reports() { return reports_; }

  void expect(bool condition, const std::string& check, Json detail) {
    ++checks_;
    if (condition) return;
    Json failure;
    failure["status"] = "fail";
    failure["check"] = check;
    failure["case"] = std::move(detail);
    throw Failure{std::move(failure)};
  }

  void hypertree_counts(int n, int k) {
    const EnumerationReport census = profile_census(n, k, bounds_);
    Json where{{"n", n}, {"k", k}};
    expect(census.total == count_hypertrees_total(n, k), "hypertree_total", where);
    expect(weighted_census(n, k, bounds_) == weighted_total(n, k), "weighted_total", where);

    std::set<ProfileKey> admissible;
    for (const auto& lambda : partitions_into(n, k)) {
      BigCount row = 0;
      for (const auto& mu : weak_compositions(k - 1, n + 1)) {
        const BigCount formula = count_hypertrees(lambda, DegreeVector{mu});
        auto it = census.per_profile.find({lambda.parts(), mu});
        const BigCount observed = it == census.per_profile.end() ? BigCount(0) : it->second;
        Json profile{{"n", n}, {"k", k}, {"lambda", lambda.parts()}, {"mu", mu},
                     {"formula", formula.str()}, {"census", observed.str()}};
        expect(observed == formula, "profile_count", std::move(profile));
        admissible.insert({lambda.parts(), mu});
        row += formula;
      }
      expect(row == count_hypertrees_by_sizes(lambda), "size_marginal",
             Json{{"n", n}, {"k", k}, {"lambda", lambda.parts()}});
    }
    for (const auto& [key, count] : census.per_profile) {
      expect(admissible.contains(key), "census_profile_admissible",
             Json{{"n", n}, {"k", k}, {"lambda", key.first}, {"mu", key.second}});
    }
    independence(n, k, census);
    reports_.push_back(to_json(census));
  }

  // count(lambda, mu) * total = rowsum(lambda) * colsum(mu).
  void independence(int n, int k, const EnumerationReport& census) {
    std::map<std::vector<int>, BigCount> rows;
    std::map<std::vector<int>, BigCount> cols;
    for (const auto& [key, count] : census.per_profile) {
      rows[key.first] += count;
      cols[key.second] += count;
    }
    for (const auto& lambda : partitions_into(n, k)) {
      for (const auto& mu : weak_compositions(k - 1, n + 1)) {
        auto it = census.per_profile.find({lambda.parts(), mu});
        const BigCount joint = it == census.per_profile.end() ? BigCount(0) : it->second;
        expect(joint * census.total == rows[lambda.parts()] * cols[mu], "independence",
               Json{{"n", n}, {"k", k}, {"lambda", lambda.parts()}, {"mu", mu}});
      }
    }
  }

  void hypertree_roundtrips(int n, int k) {
    for_each_hypertree(
        n, k,
        [&](const Hypertree& tree) {
          const HypertreeCode code = encode(tree);
          expect(decode(code) == tree, "decode_encode", to_json(tree));
        },
        bounds_);
  }

  void code_roundtrips(int n, int k) {
    for_each_set_partition(n, k, [&](const SetPartition& partition) {
      for_each_word(k - 1, n + 1, [&](const std::vector<int>& word) {
        const HypertreeCode code{partition, word};
        expect(encode(decode(code)) == code, "encode_decode", to_json(code));
      });
    });
  }

  void bipartite(int a, int b) {
    const EnumerationReport census = bipartite_census(a, b, bounds_);
    expect(census.total == count_bipartite_total(a, b), "bipartite_total",
           Json{{"a", a}, {"b", b}});
    for (const auto& alpha : weak_compositions(b, a + 1)) {
      for (const auto& beta : weak_compositions(a, b + 1)) {
        auto it = census.per_profile.find({alpha, beta});
        const BigCount observed = it == census.per_profile.end() ? BigCount(0) : it->second;
        const BigCount formula = count_bipartite(alpha, beta);
        expect(observed == formula, "bipartite_profile_count",
               Json{{"a", a}, {"b", b}, {"alpha", alpha}, {"beta", beta},
                    {"formula", formula.str()}, {"census", observed.str()}});
      }
    }
    for_each_bipartite_tree(
        a, b,
        [&](const BipartiteTree& tree) {
          expect(decode_bipartite(encode_bipartite(tree)) == tree, "bipartite_decode_encode",
                 to_json(tree));
        },
        bounds_);
    for_each_word(a, b + 1, [&](const std::vector<int>& w) {
      for_each_word(b, a + 1, [&](const std::vector<int>& w_prime) {
        const BipartiteCode code{a, b, w, w_prime};
        expect(encode_bipartite(decode_bipartite(code)) == code, "bipartite_encode_decode",
               to_json(code));
      });
    });
    reports_.push_back(to_json(census));
  }

  void bipartite_recursion(int a, int b) {
    if (b < 1) return;
    for (const auto& alpha : weak_compositions(b, a + 1)) {
      for (const auto& beta : weak_compositions(a, b + 1)) {
        expect(bipartite_recursion_sum(alpha, beta) == count_bipartite(alpha, beta),
               "bipartite_recursion", Json{{"alpha", alpha}, {"beta", beta}});
      }
    }
  }

  void split_identity(int n) {
    const IdentitySides sides = split_identity_check(n);
    expect(sides.lhs == sides.rhs, "split_identity",
           Json{{"n", n}, {"lhs", sides.lhs.str()}, {"rhs", sides.rhs.str()}});
  }

 private:
  OracleBounds bounds_;
  int checks_ = 0;
  Json reports_ = Json::array();
};

}  // namespace

SelftestOutcome run_selftest(const OracleBounds& bounds) {
  Certifier certifier(bounds);
  try {
    for (int n = 1; n <= bounds.max_n; ++n) {
      for (int k = 1; k <= n; ++k) {
        certifier.hypertree_counts(n, k);
        certifier.hypertree_roundtrips(n, k);
        if (n <= 4) certifier.code_roundtrips(n, k);
      }
    }
    for (int a = 0; a <= bounds.max_ab; ++a)
      for (int b = 0; b <= bounds.max_ab; ++b) certifier.bipartite(a, b);
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= 5; ++b) certifier.bipartite_recursion(a, b);
    for (int n = 1; n <= 20; ++n) certifier.split_identity(n);
  } catch (Failure& failure) {
    return {false, certifier.checks(), std::move(failure.report)};
  } catch (const Error& error) {
    Json report;
    report["status"] = "fail";
    report["check"] = "exception";
    report["case"] = Json{{"error", std::string(error.name())}, {"message", error.what()}};
    return {false, certifier.checks(), std::move(report)};
  }
  Json report;
  report["status"] = "pass";
  report["checks"] = certifier.checks();
  report["reports"] = std::move(certifier.reports());
  return {true, certifier.checks(), std::move(report)};
}

}  // namespace hypertrees
