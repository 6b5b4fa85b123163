#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "realhiggs/partitions.hpp"

using namespace realhiggs;

namespace {

// Euler's pentagonal number recurrence.
std::vector<long> partition_counts(int N) {
    std::vector<long> p(N + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= N; ++n) {
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            long sign = k % 2 ? 1 : -1;
            p[n] += sign * p[n - g1];
            if (g2 <= n) p[n] += sign * p[n - g2];
        }
    }
    return p;
}

// Standard Young tableaux by removing corners.
long syt_count(std::vector<int> parts, std::map<std::vector<int>, long>& memo) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    if (parts.empty()) return 1;
    if (auto it = memo.find(parts); it != memo.end()) return it->second;
    long total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
        auto smaller = parts;
        --smaller[i];
        total += syt_count(smaller, memo);
    }
    return memo[parts] = total;
}

}  // namespace

TEST_CASE("partition counts follow the pentagonal recurrence") {
    auto p = partition_counts(30);
    for (int n = 0; n <= 30; ++n) CHECK(static_cast<long>(enumerate_partitions(n).size()) == p[n]);
}

TEST_CASE("partitions are distinct, valid and reverse lexicographic") {
    for (int n = 1; n <= 12; ++n) {
        auto ps = enumerate_partitions(n);
        std::set<std::vector<int>> seen;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            CHECK(ps[i].size() == n);
            CHECK(seen.insert(ps[i].parts()).second);
            if (i > 0) CHECK(ps[i - 1].parts() > ps[i].parts());
        }
    }
    CHECK(enumerate_partitions(4).front().to_string() == "4");
    CHECK(enumerate_partitions(4).back().to_string() == "1,1,1,1");
}

TEST_CASE("partition validation and parsing") {
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({2, 0}));
    CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
    CHECK(Partition::parse("").empty());
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({3, 1}).contains({1, 0}));
    CHECK_FALSE(Partition({3, 1}).contains({1, 1}));
}

TEST_CASE("arm and leg") {
    Partition mu({4, 2, 1});
    CHECK(arm_leg(mu, {0, 0}) == ArmLeg{3, 2});
    CHECK(arm_leg(mu, {1, 1}) == ArmLeg{0, 0});
    CHECK(arm_leg(mu, {0, 1}) == ArmLeg{2, 1});
    CHECK_THROWS_AS(arm_leg(mu, {2, 1}), std::out_of_range);
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            Partition c = p.conjugate();
            CHECK(c.conjugate() == p);
            for (Box bx : p.boxes()) {
                ArmLeg al = arm_leg(p, bx), cl = arm_leg(c, {bx.col, bx.row});
                CHECK(al.arm == cl.leg);
                CHECK(al.leg == cl.arm);
            }
        }
}

TEST_CASE("hook length formula counts standard tableaux") {
    std::map<std::vector<int>, long> memo;
    for (int n = 1; n <= 9; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            long hooks = 1;
            for (Box bx : p.boxes()) {
                ArmLeg al = arm_leg(p, bx);
                hooks *= al.arm + al.leg + 1;
            }
            long fact = 1;
            for (int i = 2; i <= n; ++i) fact *= i;
            CHECK(fact / hooks == syt_count(p.parts(), memo));
        }
}
