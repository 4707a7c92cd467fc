#include "mpart/pattern.hpp"

#include "mpart/error.hpp"

#include <algorithm>
#include <numeric>

namespace mpart {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::NotSquare: return "NotSquare";
        case Errc::NotSymmetric: return "NotSymmetric";
        case Errc::BadCharacter: return "BadCharacter";
        case Errc::DiagonalStar: return "DiagonalStar";
        case Errc::BadParameters: return "BadParameters";
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::VertexOutOfRange: return "VertexOutOfRange";
        case Errc::MalformedGraph6: return "MalformedGraph6";
        case Errc::MalformedEdgeList: return "MalformedEdgeList";
        case Errc::TooLarge: return "TooLarge";
        case Errc::PartOutOfRange: return "PartOutOfRange";
        case Errc::ListPartOutOfRange: return "ListPartOutOfRange";
        case Errc::NotSplit: return "NotSplit";
        case Errc::PartNotUniform: return "PartNotUniform";
    }
    return "Unknown";
}

char to_char(Entry e) noexcept {
    switch (e) {
        case Entry::Zero: return '0';
        case Entry::One: return '1';
        case Entry::Star: return '*';
    }
    return '?';
}

PatternMatrix::PatternMatrix(int m, Entry fill) : m_(m) {
    if (m < 1 || m > kMaxOrder) {
        throw Error(Errc::BadParameters, "matrix order must be in [1, 64], got " + std::to_string(m));
    }
    entries_.assign(static_cast<std::size_t>(m) * m, fill);
    edge_allowed_.assign(m, 0);
    non_edge_allowed_.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (fill != Entry::Zero) edge_allowed_[i] |= std::uint64_t{1} << j;
            if (fill != Entry::One) non_edge_allowed_[i] |= std::uint64_t{1} << j;
        }
    }
}

void PatternMatrix::set(int i, int j, Entry e) noexcept {
    entries_[i * m_ + j] = e;
    entries_[j * m_ + i] = e;
    const auto bi = std::uint64_t{1} << i;
    const auto bj = std::uint64_t{1} << j;
    auto update = [](std::uint64_t& mask, std::uint64_t bit, bool on) {
        mask = on ? (mask | bit) : (mask & ~bit);
    };
    update(edge_allowed_[i], bj, e != Entry::Zero);
    update(edge_allowed_[j], bi, e != Entry::Zero);
    update(non_edge_allowed_[i], bj, e != Entry::One);
    update(non_edge_allowed_[j], bi, e != Entry::One);
}

PatternMatrix PatternMatrix::from_rows(const std::vector<std::vector<Entry>>& rows) {
    const int m = static_cast<int>(rows.size());
    if (m == 0) throw Error(Errc::NotSquare, "matrix has no rows");
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m) {
            throw Error(Errc::NotSquare, "row length " + std::to_string(row.size()) +
                                             " differs from row count " + std::to_string(m));
        }
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (rows[i][j] != rows[j][i]) {
                throw Error(Errc::NotSymmetric, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                    ") differs from its transpose");
            }
        }
    }
    PatternMatrix out(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) out.set(i, j, rows[i][j]);
    }
    return out;
}

std::vector<std::string> PatternMatrix::row_strings() const {
    std::vector<std::string> rows(m_);
    for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < m_; ++j) rows[i].push_back(to_char((*this)(i, j)));
    }
    return rows;
}

std::string PatternMatrix::to_text() const {
    std::string out;
    for (const auto& row : row_strings()) {
        if (!out.empty()) out.push_back(';');
        out += row;
    }
    return out;
}

PatternMatrix parse_matrix(std::string_view text) {
    std::vector<std::vector<Entry>> rows;
    std::vector<Entry> current;
    auto flush = [&] {
        if (!current.empty()) rows.push_back(std::move(current));
        current.clear();
    };
    for (char ch : text) {
        switch (ch) {
            case '0': current.push_back(Entry::Zero); break;
            case '1': current.push_back(Entry::One); break;
            case '*': current.push_back(Entry::Star); break;
            case ';':
            case '\n': flush(); break;
            case ' ':
            case '\t':
            case '\r': break;
            default:
                throw Error(Errc::BadCharacter, std::string("unexpected character '") + ch + "' in matrix text");
        }
    }
    flush();
    return PatternMatrix::from_rows(rows);
}

DiagCounts diag_counts(const PatternMatrix& m) {
    DiagCounts c;
    for (int i = 0; i < m.order(); ++i) {
        switch (m(i, i)) {
            case Entry::Zero: ++c.zeros; break;
            case Entry::One: ++c.ones; break;
            case Entry::Star: ++c.stars; break;
        }
    }
    return c;
}

int first_diagonal_star(const PatternMatrix& m) {
    for (int i = 0; i < m.order(); ++i) {
        if (m(i, i) == Entry::Star) return i;
    }
    return -1;
}

PatternMatrix permute(const PatternMatrix& m, const std::vector<int>& perm) {
    PatternMatrix out(m.order());
    for (int i = 0; i < m.order(); ++i) {
        for (int j = i; j < m.order(); ++j) out.set(i, j, m(perm[i], perm[j]));
    }
    return out;
}

BlockForm normalize_block_form(const PatternMatrix& m) {
    if (const int d = first_diagonal_star(m); d >= 0) {
        throw Error(Errc::DiagonalStar, "part " + std::to_string(d) + " has a Star on the diagonal");
    }
    BlockForm form;
    form.perm.resize(m.order());
    std::iota(form.perm.begin(), form.perm.end(), 0);
    std::stable_sort(form.perm.begin(), form.perm.end(), [&](int a, int b) {
        return m(a, a) == Entry::Zero && m(b, b) == Entry::One;
    });
    const auto counts = diag_counts(m);
    form.k = counts.zeros;
    form.ell = counts.ones;
    form.permuted = permute(m, form.perm);
    return form;
}

bool block_c_has_star(const PatternMatrix& m) {
    const auto form = normalize_block_form(m);
    for (int i = 0; i < form.k; ++i) {
        for (int j = 0; j < form.ell; ++j) {
            if (form.c(i, j) == Entry::Star) return true;
        }
    }
    return false;
}

bool is_friendly(const PatternMatrix& m) {
    const auto form = normalize_block_form(m);
    for (int i = 0; i < form.k; ++i) {
        for (int j = 0; j < form.k; ++j) {
            if (form.a(i, j) == Entry::Star) return false;
        }
    }
    for (int i = 0; i < form.ell; ++i) {
        for (int j = 0; j < form.ell; ++j) {
            if (form.b(i, j) == Entry::Star) return false;
        }
    }
    return true;
}

bool is_crossed(const PatternMatrix& m) {
    const auto form = normalize_block_form(m);
    std::vector<bool> row_full(form.k, true);
    std::vector<bool> col_full(form.ell, true);
    for (int i = 0; i < form.k; ++i) {
        for (int j = 0; j < form.ell; ++j) {
            if (form.c(i, j) == Entry::Star) {
                row_full[i] = false;
                col_full[j] = false;
            }
        }
    }
    for (int i = 0; i < form.k; ++i) {
        for (int j = 0; j < form.ell; ++j) {
            if (form.c(i, j) != Entry::Star && !row_full[i] && !col_full[j]) return false;
        }
    }
    return true;
}

PatternMatrix complement_matrix(const PatternMatrix& m) {
    PatternMatrix out(m.order());
    for (int i = 0; i < m.order(); ++i) {
        for (int j = i; j < m.order(); ++j) {
            const Entry e = m(i, j);
            out.set(i, j, e == Entry::Zero ? Entry::One : e == Entry::One ? Entry::Zero : Entry::Star);
        }
    }
    return out;
}

PatternMatrix make_m_kt(int k, int t) {
    if (k < 2 || t < 1 || t > k - 1 || k > PatternMatrix::kMaxOrder) {
        throw Error(Errc::BadParameters, "M_{k,t} needs 1 <= t <= k-1 (k=" + std::to_string(k) +
                                             ", t=" + std::to_string(t) + ")");
    }
    PatternMatrix out(k, Entry::Star);
    for (int i = 0; i < k; ++i) out.set(i, i, Entry::Zero);
    for (int j = k - 1 - t; j <= k - 2; ++j) out.set(k - 1, j, Entry::One);
    return out;
}

PatternMatrix make_kl_matrix(int k, int ell) {
    if (k < 0 || ell < 0 || k + ell < 1) {
        throw Error(Errc::BadParameters, "(k,ell) matrix needs k, ell >= 0 and k+ell >= 1");
    }
    PatternMatrix out(k + ell, Entry::Star);
    for (int i = 0; i < k; ++i) out.set(i, i, Entry::Zero);
    for (int i = k; i < k + ell; ++i) out.set(i, i, Entry::One);
    return out;
}

}  // namespace mpart
