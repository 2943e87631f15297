#include "stargenus/gf2.hpp"
#include "stargenus/star_graph.hpp"

#include <utility>

namespace stargenus {

Gf2Matrix::Gf2Matrix(int n)
    : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>((n + 63) / 64), 0)
{
    if (n < 0)
        throw Error("Gf2Matrix: negative size");
}

Gf2Matrix::Gf2Matrix(std::initializer_list<std::initializer_list<int>> rows) : Gf2Matrix(static_cast<int>(rows.size()))
{
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_)
            throw Error("Gf2Matrix: rows must have length n");
        int j = 0;
        for (int x : row)
            set(i, j++, (x & 1) != 0);
        ++i;
    }
}

Gf2Matrix Gf2Matrix::identity(int n)
{
    Gf2Matrix m(n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

bool Gf2Matrix::get(int i, int j) const
{
    return (bits_[static_cast<std::size_t>(i) * words_ + j / 64] >> (j % 64)) & 1U;
}

void Gf2Matrix::set(int i, int j, bool value)
{
    std::uint64_t& w = bits_[static_cast<std::size_t>(i) * words_ + j / 64];
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    w = value ? (w | mask) : (w & ~mask);
}

int Gf2Matrix::rank() const
{
    std::vector<std::uint64_t> a = bits_;
    int r = 0;
    for (int col = 0; col < n_ && r < n_; ++col) {
        const int word = col / 64;
        const std::uint64_t mask = std::uint64_t{1} << (col % 64);
        int pivot = -1;
        for (int i = r; i < n_; ++i) {
            if (a[static_cast<std::size_t>(i) * words_ + word] & mask) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::uint64_t* prow = &a[static_cast<std::size_t>(pivot) * words_];
        if (pivot != r) {
            std::uint64_t* rrow = &a[static_cast<std::size_t>(r) * words_];
            for (int w = 0; w < words_; ++w)
                std::swap(prow[w], rrow[w]);
            prow = rrow;
        }
        for (int i = r + 1; i < n_; ++i) {
            std::uint64_t* row = &a[static_cast<std::size_t>(i) * words_];
            if (row[word] & mask)
                for (int w = word; w < words_; ++w)
                    row[w] ^= prow[w];
        }
        ++r;
    }
    return r;
}

Gf2Matrix Gf2Matrix::transpose() const
{
    Gf2Matrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (get(i, j))
                t.set(j, i, true);
    return t;
}

bool Gf2Matrix::is_symmetric() const
{
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (get(i, j) != get(j, i))
                return false;
    return true;
}

int rank(const Gf2Matrix& m)
{
    return m.rank();
}

Gf2Matrix principal_submatrix(const Gf2Matrix& m, std::span<const int> indices)
{
    for (int i : indices)
        if (i < 0 || i >= m.size())
            throw Error("principal_submatrix: index out of range");
    const int k = static_cast<int>(indices.size());
    Gf2Matrix out(k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (m.get(indices[a], indices[b]))
                out.set(a, b, true);
    return out;
}

} // namespace stargenus
