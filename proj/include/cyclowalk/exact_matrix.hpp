#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclowalk/cyclo_num.hpp"

namespace cyclowalk {

/// Square matrix over ℚ[ζ_n], every entry at the same level n.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t dim, unsigned level) : dim_(dim), level_(level), data_(dim * dim, CycloNum(level)) {}

    static ExactMatrix identity(std::size_t dim, unsigned level) {
        ExactMatrix m(dim, level);
        const auto one = CycloNum::from_rational(level, 1);
        for (std::size_t i = 0; i < dim; ++i) m.data_[i * dim + i] = one;
        return m;
    }

    std::size_t dim() const { return dim_; }
    unsigned level() const { return level_; }

    const CycloNum& operator()(std::size_t i, std::size_t j) const { return data_.at(i * dim_ + j); }

    void set(std::size_t i, std::size_t j, CycloNum v) {
        if (v.level() != level_) throw LevelMismatch(level_, v.level());
        data_.at(i * dim_ + j) = std::move(v);
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        check_compatible(a, b);
        ExactMatrix c(a.dim_, a.level_);
        const std::size_t n = a.dim_;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const CycloNum& aik = a.data_[i * n + k];
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const CycloNum& bkj = b.data_[k * n + j];
                    if (bkj.is_zero()) continue;
                    c.data_[i * n + j] += aik * bkj;
                }
            }
        return c;
    }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        check_compatible(a, b);
        ExactMatrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.dim_ == b.dim_ && a.level_ == b.level_ && a.data_ == b.data_;
    }

    /// Conjugate transpose.
    ExactMatrix adjoint() const {
        ExactMatrix r(dim_, level_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) r.data_[j * dim_ + i] = conj(data_[i * dim_ + j]);
        return r;
    }

    ExactMatrix embedded(unsigned L) const {
        if (L == level_) return *this;
        ExactMatrix r(dim_, L);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = embed(data_[i], L);
        return r;
    }

    CycloNum trace() const {
        CycloNum t(level_);
        for (std::size_t i = 0; i < dim_; ++i) t += data_[i * dim_ + i];
        return t;
    }

    bool is_identity() const { return *this == identity(dim_, level_); }

    ExactMatrix pow(std::uint64_t e) const {
        ExactMatrix result = identity(dim_, level_), base = *this;
        while (e) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

private:
    static void check_compatible(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.level_ != b.level_) throw LevelMismatch(a.level_, b.level_);
        if (a.dim_ != b.dim_)
            throw DimensionMismatch("matrix dimensions " + std::to_string(a.dim_) + " and " + std::to_string(b.dim_));
    }

    std::size_t dim_ = 0;
    unsigned level_ = 1;
    std::vector<CycloNum> data_;
};

/// Throws NotUnitary naming the first row pair whose inner product is wrong.
inline void require_unitary(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            CycloNum ip(m.level());
            for (std::size_t t = 0; t < n; ++t) ip += m(i, t) * conj(m(j, t));
            const auto expected = CycloNum::from_rational(m.level(), i == j ? 1 : 0);
            if (ip != expected)
                throw NotUnitary("matrix is not unitary: <row " + std::to_string(i + 1) + ", row " +
                                 std::to_string(j + 1) + "> = " + ip.to_string() + ", expected " +
                                 (i == j ? "1" : "0"));
        }
}

inline bool is_unitary(const ExactMatrix& m) { return (m * m.adjoint()).is_identity(); }

}  // namespace cyclowalk
