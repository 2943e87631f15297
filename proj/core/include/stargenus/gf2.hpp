#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace stargenus {

/// Square matrix over Z/2 with bit-packed rows.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    explicit Gf2Matrix(int n);
    Gf2Matrix(std::initializer_list<std::initializer_list<int>> rows);

    static Gf2Matrix identity(int n);

    int size() const { return n_; }
    bool get(int i, int j) const;
    void set(int i, int j, bool value);

    int rank() const;
    int corank() const { return n_ - rank(); }

    Gf2Matrix transpose() const;
    bool is_symmetric() const;

    bool operator==(const Gf2Matrix&) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_; // row-major, words_ words per row
};

int rank(const Gf2Matrix& m);

/// Rows and columns restricted to `indices`, order preserved.
Gf2Matrix principal_submatrix(const Gf2Matrix& m, std::span<const int> indices);

} // namespace stargenus
