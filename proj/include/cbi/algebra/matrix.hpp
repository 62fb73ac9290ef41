#pragma once

#include <string>
#include <vector>

#include "cbi/core/rational.hpp"

namespace cbi {

/// Dense square matrix over Q.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    std::size_t size() const { return n_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) {
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend ExactMatrix operator*(const Rational& c, ExactMatrix a) {
        for (auto& v : a.a_) v *= c;
        return a;
    }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        ExactMatrix r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) {
            for (std::size_t l = 0; l < a.n_; ++l) {
                const Rational& x = a(i, l);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += x * b(l, j);
            }
        }
        return r;
    }
    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

    /// True iff every entry with i, j < limit is zero.
    bool leading_block_zero(std::size_t limit) const {
        for (std::size_t i = 0; i < limit && i < n_; ++i) {
            for (std::size_t j = 0; j < limit && j < n_; ++j) {
                if (!(*this)(i, j).is_zero()) return false;
            }
        }
        return true;
    }

    /// Largest |i - j| over nonzero entries (-1 for the zero matrix).
    long bandwidth() const {
        long w = -1;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (!(*this)(i, j).is_zero()) {
                    long d = static_cast<long>(i > j ? i - j : j - i);
                    if (d > w) w = d;
                }
            }
        }
        return w;
    }

private:
    std::size_t n_ = 0;
    std::vector<Rational> a_;
};

}  // namespace cbi
