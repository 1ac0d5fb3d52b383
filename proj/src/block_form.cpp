#include "brunnian/block_form.hpp"

#include <json.hpp>

namespace brunnian {

using nlohmann::json;

SignDiagonal::SignDiagonal(std::vector<int> s) : signs(std::move(s)) {
    for (int v : signs)
        if (v != 1 && v != -1) throw ValueOutOfRange("sign diagonal entries must be +1 or -1");
}

SeifertBlock2::SeifertBlock2(SignDiagonal e, IntMatrix h) : E(std::move(e)), H(std::move(h)) {
    if (E.size() == 0) throw DimensionMismatch("block form needs n >= 1");
    if (H.rows() != E.size() - 1 || H.cols() != E.size() - 1)
        throw DimensionMismatch("H must be (n-1) x (n-1)");
}

IntMatrix compose_block2(const SeifertBlock2& b) {
    std::size_t n = b.n();
    BidiagonalOnes f(n);
    IntMatrix m(2 * n - 1, 2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = b.E.at(i);
        for (std::size_t j = 0; j + 1 < n; ++j) m.at(i, n + j) = f.entry(i, j);
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) m.at(n + i, n + j) = b.H.at(i, j);
    return m;
}

SeifertBlock2 decompose_block2(const IntMatrix& m) {
    if (!m.square() || m.rows() % 2 == 0 || m.rows() == 0)
        throw NotOddSize("block form matrices are square of odd size 2n-1");
    std::size_t n = (m.rows() + 1) / 2;
    BidiagonalOnes f(n);
    std::vector<int> signs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Int& v = m.at(i, j);
            if (i == j) {
                if (v != Int(1) && v != Int(-1))
                    throw NotBlockForm(i, j, "diagonal of E must be +1 or -1");
                signs[i] = v.to_long() > 0 ? 1 : -1;
            } else if (!v.is_zero()) {
                throw NotBlockForm(i, j, "E block must be diagonal");
            }
        }
        for (std::size_t j = 0; j + 1 < n; ++j)
            if (m.at(i, n + j) != Int(f.entry(i, j)))
                throw NotBlockForm(i, n + j, "upper-right block must match the F pattern");
    }
    IntMatrix h(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (!m.at(n + i, j).is_zero())
                throw NotBlockForm(n + i, j, "lower-left block must be zero");
        for (std::size_t j = 0; j + 1 < n; ++j) h.at(i, j) = m.at(n + i, n + j);
    }
    return SeifertBlock2(SignDiagonal(std::move(signs)), std::move(h));
}

bool trace_split_test(const SeifertBlock2& b) {
    long sum = 0;
    for (int s : b.E.signs) sum += s;
    return sum == 0;
}

std::size_t MultiBlockForm::composed_size() const {
    std::size_t s = 0;
    for (std::size_t p : parts) s += 2 * p - 1;
    return s;
}

MultiBlockForm make_multi_block(std::vector<std::size_t> parts, std::vector<IntMatrix> h_blocks,
                                std::vector<std::vector<IntMatrix>> p_blocks, bool lenient_e,
                                std::vector<SignDiagonal> e_blocks) {
    std::size_t k = parts.size();
    if (k == 0) throw DimensionMismatch("multi form needs at least one part");
    for (std::size_t p : parts)
        if (p == 0 || p % 2 != 0) throw OddPart("every part size must be a positive even count");
    if (h_blocks.size() != k || p_blocks.size() != k)
        throw DimensionMismatch("block lists must match the number of parts");
    if (e_blocks.empty()) {
        for (std::size_t l = 0; l < k; ++l) {
            std::vector<int> signs(parts[l]);
            for (std::size_t i = 0; i < parts[l]; ++i) signs[i] = alternating_sign(i + 1);
            e_blocks.emplace_back(std::move(signs));
        }
    } else if (e_blocks.size() != k) {
        throw DimensionMismatch("E block list must match the number of parts");
    }
    for (std::size_t l = 0; l < k; ++l) {
        if (e_blocks[l].size() != parts[l]) throw DimensionMismatch("E block size mismatch");
        if (!lenient_e)
            for (std::size_t i = 0; i < parts[l]; ++i)
                if (e_blocks[l].at(i) != alternating_sign(i + 1))
                    throw ValueOutOfRange("strict E blocks alternate +1,-1 starting at +1");
        if (h_blocks[l].rows() != parts[l] - 1 || h_blocks[l].cols() != parts[l] - 1)
            throw DimensionMismatch("H block size mismatch");
        if (p_blocks[l].size() != k) throw DimensionMismatch("P grid must be square");
        for (std::size_t m2 = 0; m2 < k; ++m2) {
            if (l == m2) continue;
            if (p_blocks[l][m2].rows() != parts[l] - 1 || p_blocks[l][m2].cols() != parts[m2] - 1)
                throw DimensionMismatch("P block size mismatch");
        }
    }
    MultiBlockForm f;
    f.parts = std::move(parts);
    f.E_blocks = std::move(e_blocks);
    f.H_blocks = std::move(h_blocks);
    f.P_blocks = std::move(p_blocks);
    return f;
}

IntMatrix compose_multi(const MultiBlockForm& f) {
    std::size_t k = f.num_parts();
    std::size_t asize = 0;
    for (std::size_t p : f.parts) asize += p;
    std::vector<std::size_t> aoff(k), boff(k);
    std::size_t off = 0;
    for (std::size_t l = 0; l < k; ++l) {
        aoff[l] = off;
        off += f.parts[l];
    }
    off = asize;
    for (std::size_t l = 0; l < k; ++l) {
        boff[l] = off;
        off += f.parts[l] - 1;
    }
    IntMatrix m(off, off);
    for (std::size_t l = 0; l < k; ++l) {
        std::size_t p = f.parts[l];
        BidiagonalOnes fn(p);
        for (std::size_t i = 0; i < p; ++i) {
            m.at(aoff[l] + i, aoff[l] + i) = f.E_blocks[l].at(i);
            for (std::size_t j = 0; j + 1 < p; ++j)
                m.at(aoff[l] + i, boff[l] + j) = fn.entry(i, j);
        }
        for (std::size_t i = 0; i + 1 < p; ++i)
            for (std::size_t j = 0; j + 1 < p; ++j)
                m.at(boff[l] + i, boff[l] + j) = f.H_blocks[l].at(i, j);
        for (std::size_t m2 = 0; m2 < k; ++m2) {
            if (m2 == l) continue;
            for (std::size_t i = 0; i + 1 < p; ++i)
                for (std::size_t j = 0; j + 1 < f.parts[m2]; ++j)
                    m.at(boff[l] + i, boff[m2] + j) = f.P_blocks[l][m2].at(i, j);
        }
    }
    return m;
}

MultiBlockForm decompose_multi(const IntMatrix& m, const std::vector<std::size_t>& parts,
                               bool lenient_e) {
    if (!m.square()) throw DimensionMismatch("multi form matrices are square");
    std::size_t k = parts.size();
    if (k == 0) throw DimensionMismatch("need at least one part size");
    std::size_t total = 0;
    for (std::size_t p : parts) {
        if (p == 0 || p % 2 != 0) throw OddPart("every part size must be a positive even count");
        total += 2 * p - 1;
    }
    if (total != m.rows())
        throw DimensionMismatch("part sizes do not add up to the matrix size");

    std::size_t asize = 0;
    for (std::size_t p : parts) asize += p;
    std::vector<std::size_t> aoff(k), boff(k);
    std::size_t off = 0;
    for (std::size_t l = 0; l < k; ++l) {
        aoff[l] = off;
        off += parts[l];
    }
    off = asize;
    for (std::size_t l = 0; l < k; ++l) {
        boff[l] = off;
        off += parts[l] - 1;
    }

    std::vector<SignDiagonal> eb;
    for (std::size_t l = 0; l < k; ++l) {
        std::vector<int> signs(parts[l]);
        for (std::size_t i = 0; i < parts[l]; ++i) {
            const Int& v = m.at(aoff[l] + i, aoff[l] + i);
            if (v != Int(1) && v != Int(-1))
                throw NotBlockForm(aoff[l] + i, aoff[l] + i, "diagonal of E must be +1 or -1");
            signs[i] = v.to_long() > 0 ? 1 : -1;
            if (!lenient_e && signs[i] != alternating_sign(i + 1))
                throw NotBlockForm(aoff[l] + i, aoff[l] + i,
                                   "E diagonal must alternate +1,-1 (strict form)");
        }
        eb.emplace_back(std::move(signs));
    }
    // all zero cells of the layout, plus the F patterns
    for (std::size_t i = 0; i < asize; ++i)
        for (std::size_t j = 0; j < asize; ++j)
            if (i != j && !m.at(i, j).is_zero())
                throw NotBlockForm(i, j, "upper-left region must be diagonal");
    for (std::size_t l = 0; l < k; ++l) {
        BidiagonalOnes fn(parts[l]);
        for (std::size_t i = 0; i < parts[l]; ++i)
            for (std::size_t m2 = 0; m2 < k; ++m2)
                for (std::size_t j = 0; j + 1 < parts[m2]; ++j) {
                    const Int& v = m.at(aoff[l] + i, boff[m2] + j);
                    Int want(m2 == l ? fn.entry(i, j) : 0);
                    if (v != want)
                        throw NotBlockForm(aoff[l] + i, boff[m2] + j,
                                           m2 == l ? "upper-right block must match the F pattern"
                                                   : "off-part upper-right block must be zero");
                }
    }
    for (std::size_t i = asize; i < m.rows(); ++i)
        for (std::size_t j = 0; j < asize; ++j)
            if (!m.at(i, j).is_zero()) throw NotBlockForm(i, j, "lower-left region must be zero");

    std::vector<IntMatrix> hb;
    std::vector<std::vector<IntMatrix>> pb(k, std::vector<IntMatrix>(k));
    for (std::size_t l = 0; l < k; ++l) {
        IntMatrix h(parts[l] - 1, parts[l] - 1);
        for (std::size_t i = 0; i + 1 < parts[l]; ++i)
            for (std::size_t j = 0; j + 1 < parts[l]; ++j) h.at(i, j) = m.at(boff[l] + i, boff[l] + j);
        hb.push_back(std::move(h));
        for (std::size_t m2 = 0; m2 < k; ++m2) {
            if (m2 == l) continue;
            IntMatrix p(parts[l] - 1, parts[m2] - 1);
            for (std::size_t i = 0; i + 1 < parts[l]; ++i)
                for (std::size_t j = 0; j + 1 < parts[m2]; ++j)
                    p.at(i, j) = m.at(boff[l] + i, boff[m2] + j);
            pb[l][m2] = std::move(p);
        }
    }
    MultiBlockForm f;
    f.parts = parts;
    f.E_blocks = std::move(eb);
    f.H_blocks = std::move(hb);
    f.P_blocks = std::move(pb);
    return f;
}

MultiBlockForm restrict_parts(const MultiBlockForm& f, const std::vector<std::size_t>& subset) {
    MultiBlockForm r;
    for (std::size_t idx : subset) {
        if (idx >= f.num_parts()) throw IndexOutOfRange("part index out of range");
        r.parts.push_back(f.parts[idx]);
        r.E_blocks.push_back(f.E_blocks[idx]);
        r.H_blocks.push_back(f.H_blocks[idx]);
    }
    std::size_t k = subset.size();
    r.P_blocks.assign(k, std::vector<IntMatrix>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (a != b) r.P_blocks[a][b] = f.P_blocks[subset[a]][subset[b]];
    return r;
}

namespace {

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int& v = m.at(i, j);
            if (v.fits_long())
                row.push_back(v.to_long());
            else
                row.push_back(v.to_string());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Int int_from_json(const json& v) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return Int(v.get<std::string>());
    throw ParseError("expected an integer entry");
}

IntMatrix matrix_from_json(const json& rows, std::size_t want_rows, std::size_t want_cols) {
    if (!rows.is_array() || rows.size() != want_rows)
        throw ParseError("matrix row count mismatch");
    IntMatrix m(want_rows, want_cols);
    for (std::size_t i = 0; i < want_rows; ++i) {
        if (!rows[i].is_array() || rows[i].size() != want_cols)
            throw ParseError("matrix column count mismatch");
        for (std::size_t j = 0; j < want_cols; ++j) m.at(i, j) = int_from_json(rows[i][j]);
    }
    return m;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

}  // namespace

std::string block2_to_json(const SeifertBlock2& b) {
    json j;
    j["n"] = b.n();
    j["E"] = b.E.signs;
    j["H"] = matrix_to_json(b.H);
    return j.dump();
}

SeifertBlock2 block2_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.contains("n") || !j.contains("E") || !j.contains("H"))
        throw ParseError("block form JSON needs keys n, E, H");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        throw ParseError("n must be a count >= 1");
    std::size_t n = j["n"].get<std::size_t>();
    if (!j["E"].is_array() || j["E"].size() != n) throw ParseError("E length must equal n");
    std::vector<int> signs;
    for (const auto& v : j["E"]) signs.push_back(v.get<int>());
    IntMatrix h = matrix_from_json(j["H"], n - 1, n - 1);
    try {
        return SeifertBlock2(SignDiagonal(std::move(signs)), std::move(h));
    } catch (const ValueOutOfRange& e) {
        throw ParseError(e.what());
    }
}

std::string multi_to_json(const MultiBlockForm& f) {
    json j;
    j["parts"] = f.parts;
    json e = json::array();
    for (const auto& blk : f.E_blocks) e.push_back(blk.signs);
    j["E"] = std::move(e);
    json h = json::array();
    for (const auto& blk : f.H_blocks) h.push_back(matrix_to_json(blk));
    j["H"] = std::move(h);
    json p = json::object();
    for (std::size_t l = 0; l < f.num_parts(); ++l)
        for (std::size_t m = 0; m < f.num_parts(); ++m) {
            if (l == m) continue;
            std::string key = std::to_string(l + 1) + "," + std::to_string(m + 1);
            p[key] = matrix_to_json(f.P_blocks[l][m]);
        }
    j["P"] = std::move(p);
    return j.dump();
}

MultiBlockForm multi_from_json(const std::string& text, bool lenient_e) {
    json j = parse_json(text);
    if (!j.contains("parts") || !j.contains("H"))
        throw ParseError("multi form JSON needs keys parts, H");
    std::vector<std::size_t> parts = j["parts"].get<std::vector<std::size_t>>();
    std::size_t k = parts.size();
    std::vector<SignDiagonal> eb;
    if (j.contains("E")) {
        if (!j["E"].is_array() || j["E"].size() != k)
            throw ParseError("E must list one block per part");
        for (std::size_t l = 0; l < k; ++l) {
            std::vector<int> signs = j["E"][l].get<std::vector<int>>();
            try {
                eb.emplace_back(std::move(signs));
            } catch (const ValueOutOfRange& e) {
                throw ParseError(e.what());
            }
        }
    }
    if (!j["H"].is_array() || j["H"].size() != k) throw ParseError("H must list one block per part");
    std::vector<IntMatrix> hb;
    for (std::size_t l = 0; l < k; ++l) {
        if (parts[l] == 0) throw ParseError("part sizes must be positive");
        hb.push_back(matrix_from_json(j["H"][l], parts[l] - 1, parts[l] - 1));
    }
    std::vector<std::vector<IntMatrix>> pb(k, std::vector<IntMatrix>(k));
    for (std::size_t l = 0; l < k; ++l)
        for (std::size_t m = 0; m < k; ++m) {
            if (l == m) continue;
            pb[l][m] = IntMatrix(parts[l] - 1, parts[m] - 1);  // default zero
        }
    if (j.contains("P")) {
        for (auto it = j["P"].begin(); it != j["P"].end(); ++it) {
            std::size_t comma = it.key().find(',');
            if (comma == std::string::npos) throw ParseError("P keys look like \"l,m\"");
            std::size_t l = std::stoul(it.key().substr(0, comma));
            std::size_t m = std::stoul(it.key().substr(comma + 1));
            if (l < 1 || m < 1 || l > k || m > k || l == m) throw ParseError("bad P key " + it.key());
            pb[l - 1][m - 1] = matrix_from_json(it.value(), parts[l - 1] - 1, parts[m - 1] - 1);
        }
    }
    try {
        return make_multi_block(std::move(parts), std::move(hb), std::move(pb), lenient_e,
                                std::move(eb));
    } catch (const ValueOutOfRange& e) {
        throw ParseError(e.what());
    }
}

}  // namespace brunnian
