#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace realhiggs {

/// A cell of a Young diagram, 0-based, English notation.
struct Box {
    int row = 0;
    int col = 0;
};

struct ArmLeg {
    int arm = 0;
    int leg = 0;
    friend bool operator==(const ArmLeg&, const ArmLeg&) = default;
};

/// Young diagram given by weakly decreasing positive row lengths.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    bool contains(Box b) const;
    std::vector<Box> boxes() const;
    Partition conjugate() const;

    /// "2,1"; the empty partition prints as "".
    std::string to_string() const;
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1,...,1).
std::vector<Partition> enumerate_partitions(int n);

/// Arm = boxes to the right of b in its row, leg = boxes below it in its column.
/// Throws std::out_of_range if b is not in mu.
ArmLeg arm_leg(const Partition& mu, Box b);

}  // namespace realhiggs
