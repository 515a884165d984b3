#pragma once

#include <string>
#include <vector>

#include "gral/scalar.hpp"

namespace gral {

/// Finite group given extensionally by its multiplication table.
/// Element indices are 0..order()-1; construction validates the table.
class FiniteGroup {
public:
    /// Validates associativity, the identity row/column, the Latin-square
    /// property, and computes the inverse table.
    /// Throws NonAssociative, NoIdentity, NoInverse, NotPermutation.
    static FiniteGroup validate(std::vector<std::vector<int32_t>> table, int32_t identity,
                                std::vector<std::string> labels = {});

    static FiniteGroup cyclic(int32_t n);
    static FiniteGroup klein4();
    static FiniteGroup sym3();
    /// "cyclic(n)", "klein4" or "sym3".
    static FiniteGroup preset(const std::string& name);

    int32_t order() const { return n_; }
    int32_t identity() const { return id_; }
    int32_t mul(int32_t s, int32_t t) const;
    int32_t inv(int32_t t) const;
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<int32_t>>& table() const { return table_; }

    bool operator==(const FiniteGroup& o) const {
        return n_ == o.n_ && id_ == o.id_ && table_ == o.table_;
    }

private:
    FiniteGroup() = default;

    int32_t n_ = 0;
    int32_t id_ = 0;
    std::vector<std::vector<int32_t>> table_;
    std::vector<int32_t> inv_;
    std::vector<std::string> labels_;
};

}  // namespace gral
