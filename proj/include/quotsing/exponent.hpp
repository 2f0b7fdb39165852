#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace quotsing {

/// Subset of the coordinates {0..n-1}; bit i is coordinate i.
using Support = std::uint64_t;

inline constexpr int kMaxDim = 64;

inline bool is_subset(Support a, Support b) { return (a & ~b) == 0; }

/// Exponent vector of a monomial x^m in k[x_1..x_n].
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(int n) : e_(static_cast<std::size_t>(n), 0) {}
    ExponentVector(std::initializer_list<std::int32_t> init) : e_(init) {}
    explicit ExponentVector(std::vector<std::int32_t> entries) : e_(std::move(entries)) {}

    static ExponentVector unit(int n, int i) {
        ExponentVector v(n);
        v.e_[static_cast<std::size_t>(i)] = 1;
        return v;
    }

    int size() const { return static_cast<int>(e_.size()); }
    std::int32_t operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    std::int32_t& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
    std::span<const std::int32_t> entries() const { return e_; }

    std::int64_t degree() const {
        std::int64_t d = 0;
        for (auto x : e_) d += x;
        return d;
    }

    Support support() const {
        Support s = 0;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0) s |= Support{1} << i;
        return s;
    }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
    }

    /// Componentwise <=, i.e. x^this divides x^other.
    bool divides(const ExponentVector& other) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
        ExponentVector r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }

    ExponentVector scaled(std::int32_t k) const {
        ExponentVector r = *this;
        for (auto& x : r.e_) x *= k;
        return r;
    }

    /// Componentwise max (lcm of monomials).
    friend ExponentVector join(const ExponentVector& a, const ExponentVector& b) {
        ExponentVector r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(r.e_[i], b.e_[i]);
        return r;
    }

    /// Componentwise max(a - b, 0).
    friend ExponentVector positive_difference(const ExponentVector& a, const ExponentVector& b) {
        ExponentVector r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i] - b.e_[i], 0);
        return r;
    }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) { return a.e_ <=> b.e_; }

private:
    std::vector<std::int32_t> e_;
};

}  // namespace quotsing
