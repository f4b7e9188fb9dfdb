#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "cycov/errors.hpp"

namespace cycov {

/// Permutation of {0, ..., n-1}. Composition is function composition:
/// (p * q)(x) = p(q(x)).
class Perm {
  public:
    explicit Perm(int n = 0) : img_(static_cast<size_t>(n)) {
        std::iota(img_.begin(), img_.end(), 0);
    }
    explicit Perm(std::vector<int> img) : img_(std::move(img)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<size_t>(v)])
                throw SpecError("not a permutation");
            seen[static_cast<size_t>(v)] = true;
        }
    }

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    friend Perm operator*(const Perm& p, const Perm& q) {
        if (p.n() != q.n()) throw SpecError("permutation size mismatch");
        std::vector<int> img(q.img_.size());
        for (int i = 0; i < q.n(); ++i) img[static_cast<size_t>(i)] = p(q(i));
        Perm out;
        out.img_ = std::move(img);
        return out;
    }

    Perm inverse() const {
        std::vector<int> img(img_.size());
        for (int i = 0; i < n(); ++i) img[static_cast<size_t>(img_[static_cast<size_t>(i)])] = i;
        Perm out;
        out.img_ = std::move(img);
        return out;
    }

    /// s p s^{-1}.
    Perm conjugated_by(const Perm& s) const { return s * (*this) * s.inverse(); }

    bool is_identity() const {
        for (int i = 0; i < n(); ++i)
            if (img_[static_cast<size_t>(i)] != i) return false;
        return true;
    }

    /// Cycle lengths sorted descending (a partition of n).
    std::vector<long long> cycle_type() const {
        std::vector<bool> seen(img_.size(), false);
        std::vector<long long> type;
        for (int i = 0; i < n(); ++i) {
            if (seen[static_cast<size_t>(i)]) continue;
            long long len = 0;
            for (int j = i; !seen[static_cast<size_t>(j)]; j = img_[static_cast<size_t>(j)]) {
                seen[static_cast<size_t>(j)] = true;
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.rbegin(), type.rend());
        return type;
    }

    /// The n-cycle (0 1 ... n-1).
    static Perm full_cycle(int n) {
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = (i + 1) % n;
        Perm out;
        out.img_ = std::move(img);
        return out;
    }

    /// Cycle notation with 1-based symbols; "()" for the identity.
    std::string str() const {
        std::string s;
        std::vector<bool> seen(img_.size(), false);
        for (int i = 0; i < n(); ++i) {
            if (seen[static_cast<size_t>(i)] || img_[static_cast<size_t>(i)] == i) continue;
            s += '(';
            bool first = true;
            for (int j = i; !seen[static_cast<size_t>(j)]; j = img_[static_cast<size_t>(j)]) {
                seen[static_cast<size_t>(j)] = true;
                if (!first) s += ' ';
                s += std::to_string(j + 1);
                first = false;
            }
            s += ')';
        }
        return s.empty() ? "()" : s;
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  private:
    std::vector<int> img_;
};

/// Parses one permutation in cycle notation over 1-based symbols 1..n,
/// e.g. "(1 2 3)(4 5)"; "()" is the identity. Rejects repeats, symbols out
/// of range and malformed bracketing.
inline Perm parse_cycles(const std::string& text, int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(static_cast<size_t>(n), false);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw SpecError("empty permutation literal");
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '(') throw SpecError("expected '(' in cycle notation: " + text);
        ++pos;
        std::vector<int> cyc;
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw SpecError("expected symbol or ')' in cycle notation: " + text);
            int v = std::stoi(text.substr(start, pos - start));
            if (v < 1 || v > n)
                throw SpecError("symbol " + std::to_string(v) + " out of range 1.." + std::to_string(n));
            if (used[static_cast<size_t>(v - 1)])
                throw SpecError("symbol " + std::to_string(v) + " repeated in cycle notation");
            used[static_cast<size_t>(v - 1)] = true;
            cyc.push_back(v - 1);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') ++pos;  // tolerate comma separators
        }
        for (size_t i = 0; i < cyc.size(); ++i)
            img[static_cast<size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
    }
    skip_ws();
    return Perm(std::move(img));
}

}  // namespace cycov
