#include "realhiggs/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace realhiggs {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(Box b) const {
    return b.row >= 0 && b.col >= 0 && b.row < length() && b.col < parts_[static_cast<std::size_t>(b.row)];
}

std::vector<Box> Partition::boxes() const {
    std::vector<Box> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int r = 0; r < length(); ++r)
        for (int c = 0; c < parts_[static_cast<std::size_t>(r)]; ++c) out.push_back({r, c});
    return out;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) {
        for (int c = 0; c < parts_[0]; ++c) {
            int h = 0;
            while (h < length() && parts_[static_cast<std::size_t>(h)] > c) ++h;
            conj.push_back(h);
        }
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        parts.push_back(std::stoi(tok));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        enumerate_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate_rec(n, n, cur, out);
    return out;
}

ArmLeg arm_leg(const Partition& mu, Box b) {
    if (!mu.contains(b)) throw std::out_of_range("arm_leg: box outside diagram");
    const auto& p = mu.parts();
    ArmLeg al;
    al.arm = p[static_cast<std::size_t>(b.row)] - b.col - 1;
    for (std::size_t r = static_cast<std::size_t>(b.row) + 1; r < p.size() && p[r] > b.col; ++r) ++al.leg;
    return al;
}

}  // namespace realhiggs
