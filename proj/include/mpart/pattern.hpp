#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mpart {

enum class Entry : std::uint8_t { Zero, One, Star };

char to_char(Entry e) noexcept;

/// Symmetric m x m matrix over {0,1,*}. Entry (i,j) constrains two distinct
/// vertices placed in parts i and j: One forces an edge, Zero forbids one,
/// Star leaves the pair free. Parts are 0-based.
class PatternMatrix {
public:
    static constexpr int kMaxOrder = 64;

    PatternMatrix() = default;

    /// All entries set to `fill`.
    explicit PatternMatrix(int m, Entry fill = Entry::Star);

    /// Throws NotSquare / NotSymmetric when `rows` does not describe a
    /// symmetric square matrix.
    static PatternMatrix from_rows(const std::vector<std::vector<Entry>>& rows);

    int order() const noexcept { return m_; }
    Entry operator()(int i, int j) const noexcept { return entries_[i * m_ + j]; }

    /// Sets (i,j) and (j,i).
    void set(int i, int j, Entry e) noexcept;

    /// Bit j set iff a vertex in part i may be adjacent to a vertex in part j.
    std::uint64_t edge_allowed(int i) const noexcept { return edge_allowed_[i]; }
    /// Bit j set iff a vertex in part i may be non-adjacent to a vertex in part j.
    std::uint64_t non_edge_allowed(int i) const noexcept { return non_edge_allowed_[i]; }

    std::vector<std::string> row_strings() const;
    /// Rows joined with ';', e.g. "0*;*1".
    std::string to_text() const;

    friend bool operator==(const PatternMatrix& a, const PatternMatrix& b) {
        return a.m_ == b.m_ && a.entries_ == b.entries_;
    }

private:
    int m_ = 0;
    std::vector<Entry> entries_;
    std::vector<std::uint64_t> edge_allowed_;
    std::vector<std::uint64_t> non_edge_allowed_;
};

/// Rows separated by ';' or newline, each a string over {0,1,*}. Whitespace
/// inside rows is ignored and empty rows are skipped.
PatternMatrix parse_matrix(std::string_view text);

struct DiagCounts {
    int zeros = 0;
    int ones = 0;
    int stars = 0;
    friend bool operator==(const DiagCounts&, const DiagCounts&) = default;
};

DiagCounts diag_counts(const PatternMatrix& m);

/// First part index whose diagonal entry is Star, or -1.
int first_diagonal_star(const PatternMatrix& m);

/// (A,B,C)-block normal form: zero-diagonal parts first, one-diagonal parts
/// after them. `perm[new_index] = old_index`; A is k x k, B is ell x ell and
/// C is the k x ell cross block.
struct BlockForm {
    std::vector<int> perm;
    int k = 0;
    int ell = 0;
    PatternMatrix permuted;

    Entry a(int i, int j) const { return permuted(i, j); }
    Entry b(int i, int j) const { return permuted(k + i, k + j); }
    Entry c(int i, int j) const { return permuted(i, k + j); }
};

/// Stable sort of part indices by diagonal value. Throws DiagonalStar.
BlockForm normalize_block_form(const PatternMatrix& m);

/// Relabels parts: result(i,j) = m(perm[i], perm[j]).
PatternMatrix permute(const PatternMatrix& m, const std::vector<int>& perm);

bool block_c_has_star(const PatternMatrix& m);
bool is_friendly(const PatternMatrix& m);
bool is_crossed(const PatternMatrix& m);

/// Swaps Zero and One entrywise; Star is fixed.
PatternMatrix complement_matrix(const PatternMatrix& m);

/// M_{k,t}: k x k, zero diagonal, One between the last part and the t parts
/// k-1-t .. k-2 (0-based), Star elsewhere. Requires 1 <= t <= k-1.
PatternMatrix make_m_kt(int k, int t);

/// Zero diagonal on the first k parts, One on the last ell, Star off the
/// diagonal. Partitionable graphs are exactly the (k,ell)-graphs.
PatternMatrix make_kl_matrix(int k, int ell);

}  // namespace mpart
