#include "brunnian/alternation.hpp"

#include <sstream>

namespace brunnian {

AlternationTable::AlternationTable(std::size_t size)
    : size_(size), vals_(size * (size - (size ? 1 : 0)) / 2) {}

std::size_t AlternationTable::idx(std::size_t i, std::size_t j) const {
    if (!(1 <= i && i < j && j <= size_))
        throw IndexOutOfRange("alternation table index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") outside 1 <= i < j <= " +
                              std::to_string(size_));
    // column-major: column j starts at (j-1)(j-2)/2
    return (j - 1) * (j - 2) / 2 + (i - 1);
}

const Int& AlternationTable::at(std::size_t i, std::size_t j) const { return vals_[idx(i, j)]; }

void AlternationTable::set(std::size_t i, std::size_t j, Int v) { vals_[idx(i, j)] = std::move(v); }

bool AlternationTable::small_entries() const {
    for (const Int& v : vals_)
        if (v.abs() > Int(1)) return false;
    return true;
}

std::string AlternationTable::render() const {
    std::ostringstream out;
    for (std::size_t i = 1; i < size_; ++i) {
        out << "row " << i << ":";
        for (std::size_t j = 2; j <= size_; ++j) {
            out << ' ';
            if (j <= i)
                out << '.';
            else
                out << at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

AlternationTable alternation_table(const IntMatrix& h, bool reversed) {
    if (!h.square()) throw NotSquare("alternation table needs a square H");
    std::size_t n = h.rows();
    AlternationTable t(n);
    auto entry = [&](std::size_t i, std::size_t j) -> const Int& {
        // 1-based; the reversed orientation relabels b_i as b_{n+1-i}
        if (reversed) return h.at(n - i, n - j);
        return h.at(i - 1, j - 1);
    };
    for (std::size_t j = 2; j <= n; ++j)
        for (std::size_t i = 1; i < j; ++i) t.set(i, j, entry(i, j) - entry(j, i));
    return t;
}

std::size_t run_left(const AlternationTable& t, std::size_t i, std::size_t j) {
    if (!t.at(i, j).is_zero()) return 0;
    std::size_t run = 0;
    for (std::size_t c = j; c > i; --c) {
        if (!t.at(i, c).is_zero()) break;
        ++run;
    }
    return run;
}

std::size_t run_up(const AlternationTable& t, std::size_t i, std::size_t j) {
    if (!t.at(i, j).is_zero()) return 0;
    std::size_t run = 0;
    for (std::size_t r = i; r >= 1; --r) {
        if (!t.at(r, j).is_zero()) break;
        ++run;
    }
    return run;
}

namespace {

bool in_pair(const Int& v, const Int& a, const Int& b) { return v == a || v == b; }

std::string int_str(const Int& v) { return v.to_string(); }

// Shared successor-constraint body of the two run theorems. `run` is the
// horizontal or vertical zero run at (i,j); constrains t(i,j+1).
void check_run_clauses(const AlternationTable& t, std::size_t i, std::size_t j, std::size_t run,
                       const char* even_law, const char* odd_law,
                       std::vector<Violation>& out) {
    const Int& next = t.at(i, j + 1);
    bool even = run % 2 == 0;
    if (run == j - i) {
        // boundary case i = j - run
        Int want(even ? 1 : -1);
        if (!in_pair(next, want, Int(0)))
            out.push_back({even ? even_law : odd_law, i, j + 1,
                           "expected " + int_str(want) + " or 0, got " + int_str(next)});
        return;
    }
    if (j - run < i) return;  // referenced cell outside the table: no constraint
    Int ref = t.at(i, j - run);
    Int want = even ? ref : -ref;
    if (!in_pair(next, want, Int(0)))
        out.push_back({even ? even_law : odd_law, i, j + 1,
                       "expected " + int_str(want) + " or 0, got " + int_str(next)});
}

}  // namespace

std::vector<Violation> check_theorem2(const AlternationTable& t) {
    std::vector<Violation> out;
    for (std::size_t j = 2; j <= t.size(); ++j)
        for (std::size_t i = 1; i < j; ++i) {
            const Int& v = t.at(i, j);
            if (j == i + 1) {
                if (!in_pair(v, Int(0), Int(1)))
                    out.push_back({"theorem2(1)", i, j,
                                   "superdiagonal alternation must be 0 or 1, got " + int_str(v)});
            } else if (v.abs() > Int(1)) {
                out.push_back({"theorem2(1)", i, j,
                               "alternation must be -1, 0 or 1, got " + int_str(v)});
            }
        }
    for (std::size_t j = 2; j + 1 <= t.size(); ++j)
        for (std::size_t i = 1; i < j; ++i)
            check_run_clauses(t, i, j, run_left(t, i, j), "theorem2(2)", "theorem2(3)", out);
    return out;
}

std::vector<Violation> check_theorem3(const AlternationTable& t) {
    std::vector<Violation> out;
    for (std::size_t j = 2; j + 1 <= t.size(); ++j)
        for (std::size_t i = 1; i < j; ++i)
            check_run_clauses(t, i, j, run_up(t, i, j), "theorem3(1)", "theorem3(2)", out);
    return out;
}

std::vector<Violation> check_prop4(const AlternationTable& t) {
    std::vector<Violation> out;
    Int one(1);
    for (std::size_t j = 2; j <= t.size(); ++j)
        for (std::size_t i = 1; i < j; ++i) {
            if (j + 1 <= t.size() && (t.at(i, j) - t.at(i, j + 1)).abs() > one)
                out.push_back({"prop4", i, j,
                               "horizontal neighbours differ by more than 1: " +
                                   int_str(t.at(i, j)) + " vs " + int_str(t.at(i, j + 1))});
            if (i >= 2 && (t.at(i, j) - t.at(i - 1, j)).abs() > one)
                out.push_back({"prop4", i, j,
                               "vertical neighbours differ by more than 1: " +
                                   int_str(t.at(i, j)) + " vs " + int_str(t.at(i - 1, j))});
        }
    return out;
}

std::vector<Violation> check_prop5(const AlternationTable& t) {
    std::vector<Violation> out;
    for (std::size_t j = 2; j <= t.size(); ++j)
        for (std::size_t i = 1; i < j; ++i) {
            if (t.at(i, j).is_zero()) continue;
            std::size_t col = 0, row = 0;
            for (std::size_t k = i; k + 1 <= j; ++k)
                if (!t.at(k, j).is_zero()) ++col;
            for (std::size_t k = i + 1; k <= j; ++k)
                if (!t.at(i, k).is_zero()) ++row;
            if ((col + row) % 2 != 0)
                out.push_back({"prop5", i, j,
                               "column count " + std::to_string(col) + " and row count " +
                                   std::to_string(row) + " differ mod 2"});
        }
    return out;
}

std::vector<Violation> check_theorem7(const MultiBlockForm& f) {
    std::vector<Violation> out;
    Int one(1);
    for (std::size_t l = 0; l < f.num_parts(); ++l) {
        const IntMatrix& h = f.H_blocks[l];
        for (std::size_t j = 1; j < h.cols(); ++j)
            for (std::size_t i = 0; i < j; ++i) {
                Int alt = h.at(i, j) - h.at(j, i);
                if (alt.abs() > one)
                    out.push_back({"theorem7(I)", i + 1, j + 1,
                                   "H_" + std::to_string(l + 1) + " alternation " +
                                       alt.to_string() + " outside {-1,0,1}"});
            }
    }
    for (std::size_t l = 0; l < f.num_parts(); ++l)
        for (std::size_t m = l + 1; m < f.num_parts(); ++m) {
            const IntMatrix& p = f.P_blocks[l][m];
            const IntMatrix& q = f.P_blocks[m][l];
            for (std::size_t i = 0; i < p.rows(); ++i)
                for (std::size_t j = 0; j < p.cols(); ++j) {
                    Int alt = p.at(i, j) - q.at(j, i);
                    if (alt.abs() > one)
                        out.push_back({"theorem7(II)", i + 1, j + 1,
                                       "P_{" + std::to_string(l + 1) + "," + std::to_string(m + 1) +
                                           "} alternation " + alt.to_string() +
                                           " outside {-1,0,1}"});
                }
        }
    return out;
}

std::vector<std::vector<Int>> column_vectors(const AlternationTable& t) {
    std::vector<std::vector<Int>> cols;
    for (std::size_t k = 2; k <= t.size(); ++k) {
        std::vector<Int> col;
        col.reserve(k - 1);
        for (std::size_t i = 1; i < k; ++i) col.push_back(t.at(i, k));
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace brunnian
