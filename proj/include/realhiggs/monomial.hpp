#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <string>

namespace realhiggs {

inline constexpr std::size_t kMaxVars = 12;
inline constexpr int kMaxGenus = static_cast<int>(kMaxVars) - 3;

/// Variable slots: q, z, u (= t^{1/2}), then a1..ag.
enum class VarKind : std::uint8_t { Q, Z, U, Alpha };

struct VarId {
    VarKind kind;
    int alpha = 0;  // 1-based, only for Alpha

    static constexpr VarId q() { return {VarKind::Q, 0}; }
    static constexpr VarId z() { return {VarKind::Z, 0}; }
    static constexpr VarId u() { return {VarKind::U, 0}; }
    static constexpr VarId a(int i) { return {VarKind::Alpha, i}; }

    constexpr std::size_t index() const {
        switch (kind) {
            case VarKind::Q: return 0;
            case VarKind::Z: return 1;
            case VarKind::U: return 2;
            case VarKind::Alpha: break;
        }
        return static_cast<std::size_t>(2 + alpha);
    }
};

inline constexpr std::size_t arity_for_genus(int g) { return static_cast<std::size_t>(3 + g); }

std::string var_name(std::size_t index);

/// Exponent vector. Unused trailing slots stay zero, so the defaulted
/// comparison is lexicographic in the variable order q, z, u, a1, ...
struct Monomial {
    using Exponent = std::int16_t;
    std::array<Exponent, kMaxVars> e{};

    Monomial() = default;
    Monomial(std::initializer_list<int> exps);

    static Monomial of(VarId v, int power = 1) {
        Monomial m;
        m.e[v.index()] = static_cast<Exponent>(power);
        return m;
    }

    Exponent operator[](std::size_t i) const { return e[i]; }
    Exponent& operator[](std::size_t i) { return e[i]; }

    bool is_one() const { return e == std::array<Exponent, kMaxVars>{}; }

    friend Monomial operator+(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<Exponent>(a.e[i] + b.e[i]);
        return r;
    }
    friend Monomial operator-(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<Exponent>(a.e[i] - b.e[i]);
        return r;
    }
    Monomial operator-() const { return Monomial{} - *this; }

    /// Every exponent multiplied by k; throws std::overflow_error past the
    /// 16-bit exponent range.
    Monomial scaled(int k) const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::size_t hash() const {
        std::uint64_t w[3];
        static_assert(sizeof(w) == sizeof(e));
        std::memcpy(w, e.data(), sizeof(w));
        std::uint64_t h = w[0] * 0x9E3779B97F4A7C15ull;
        h ^= (w[1] + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2)) * 0xBF58476D1CE4E5B9ull;
        h ^= (w[2] + 0x94D049BB133111EBull + (h << 6) + (h >> 2)) * 0x9E3779B97F4A7C15ull;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace realhiggs
