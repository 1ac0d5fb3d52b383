#include "brunnian/sequences.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace brunnian {

Seq::Seq(int modulus, std::vector<int> entries_in)
    : modulus(modulus), entries(std::move(entries_in)) {
    if (modulus < 2) throw ValueOutOfRange("sequence modulus must be >= 2");
    if (entries.empty()) throw ValueOutOfRange("sequences have at least one entry");
    for (int r : entries)
        if (r < 0 || r >= modulus)
            throw ValueOutOfRange("residue " + std::to_string(r) + " outside [0, " +
                                  std::to_string(modulus - 1) + "]");
}

bool seq_less(const Seq& a, const Seq& b) {
    if (a.modulus != b.modulus) return a.modulus < b.modulus;
    if (a.entries.size() != b.entries.size()) return a.entries.size() < b.entries.size();
    return a.entries < b.entries;
}

std::string to_string(const Seq& s) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (i) out << ", ";
        out << s.entries[i];
    }
    out << ")_" << s.modulus;
    return out.str();
}

namespace {

void skip_ws(const std::string& t, std::size_t& pos) {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
}

int parse_int(const std::string& t, std::size_t& pos) {
    skip_ws(t, pos);
    std::size_t start = pos;
    if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) ++pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(t[start]))))
        throw ParseError("expected an integer in sequence notation");
    return std::stoi(t.substr(start, pos - start));
}

Seq parse_one(const std::string& t, std::size_t& pos) {
    skip_ws(t, pos);
    if (pos >= t.size() || t[pos] != '(') throw ParseError("sequence notation starts with '('");
    ++pos;
    std::vector<int> entries;
    while (true) {
        entries.push_back(parse_int(t, pos));
        skip_ws(t, pos);
        if (pos < t.size() && t[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    skip_ws(t, pos);
    if (pos >= t.size() || t[pos] != ')') throw ParseError("sequence notation: missing ')'");
    ++pos;
    if (pos >= t.size() || t[pos] != '_') throw ParseError("sequence notation: missing '_m'");
    ++pos;
    int modulus = parse_int(t, pos);
    try {
        return Seq(modulus, std::move(entries));
    } catch (const ValueOutOfRange& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

Seq parse_seq(const std::string& text) {
    std::size_t pos = 0;
    Seq s = parse_one(text, pos);
    skip_ws(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters after sequence");
    return s;
}

std::vector<Seq> parse_chain(const std::string& text) {
    std::vector<Seq> chain;
    std::size_t pos = 0;
    skip_ws(text, pos);
    while (pos < text.size()) {
        chain.push_back(parse_one(text, pos));
        skip_ws(text, pos);
        if (pos < text.size() && (text[pos] == ',' || text[pos] == ';')) {
            ++pos;
            skip_ws(text, pos);
        }
    }
    if (chain.empty()) throw ParseError("empty chain");
    return chain;
}

int delta(const Seq& s, int j) {
    if (j < 1 || j > s.modulus - 1)
        throw ValueOutOfRange("delta needs 1 <= j <= m-1, got j = " + std::to_string(j));
    std::size_t count = 0;
    for (int r : s.entries)
        if (r == j) ++count;
    return (count % 2 == 1) ? s.modulus : 0;
}

ParityClass parity_class(const Seq& s) {
    ParityClass c;
    c.modulus = s.modulus;
    c.bits.assign(s.modulus - 1, 0);
    for (int r : s.entries)
        if (r != 0) c.bits[r - 1] ^= 1;
    return c;
}

std::vector<Seq> base_set2() { return {Seq(2, {0}), Seq(2, {1})}; }

std::vector<Seq> extend_set3(const Seq& s2) {
    auto base = base_set2();
    if (!(s2 == base[0] || s2 == base[1])) throw NotInBase("s_2 must be (0)_2 or (1)_2");
    int r = s2.entries[0];
    int d = delta(s2, 1);  // 0 or 2, recorded literally
    return {
        Seq(3, {0}),       Seq(3, {2}),       Seq(3, {r, 2}),
        Seq(3, {r, 1}),    Seq(3, {r, d, 1}), Seq(3, {r, d, 0}),
    };
}

namespace {

// Crossing word of arc b_j at the time arc b_m is built: the entries of s_j
// followed by the records delta(s_i, j) of the later arcs crossing b_j.
std::vector<int> crossing_word(const std::vector<Seq>& history, int m, int j) {
    std::vector<int> w;
    if (j >= 2) w = history[j - 2].entries;
    for (int i = j + 1; i <= m - 1; ++i) w.push_back(delta(history[i - 2], j));
    return w;
}

void validate_history(const std::vector<Seq>& history, int m) {
    if (m < 2) throw ValueOutOfRange("modulus must be >= 2");
    if (history.size() != static_cast<std::size_t>(m - 2))
        throw InvalidHistory("history must hold s_2 .. s_{m-1}");
    for (std::size_t i = 0; i < history.size(); ++i)
        if (history[i].modulus != static_cast<int>(i) + 2)
            throw InvalidHistory("history member " + std::to_string(i) + " has modulus " +
                                 std::to_string(history[i].modulus) + ", expected " +
                                 std::to_string(i + 2));
    if (!history.empty()) {
        auto base = base_set2();
        if (!(history[0] == base[0] || history[0] == base[1]))
            throw InvalidHistory("s_2 must be (0)_2 or (1)_2");
    }
    for (std::size_t i = 1; i < history.size(); ++i) {
        std::vector<Seq> prefix(history.begin(), history.begin() + i);
        auto set = extend_set(prefix, static_cast<int>(i) + 2);
        if (std::find(set.begin(), set.end(), history[i]) == set.end())
            throw InvalidHistory("sequence " + to_string(history[i]) +
                                 " is not in the extension set of its history");
    }
}

}  // namespace

std::vector<LabeledSeq> extend_set_labeled(const std::vector<Seq>& history, int m) {
    validate_history(history, m);
    std::vector<LabeledSeq> out;
    out.push_back({Seq(m, {0}), m - 1, 1, 'l'});
    out.push_back({Seq(m, {m - 1}), m - 1, 1, 'r'});
    std::vector<int> prefix;
    int vtag = 2;
    for (int j = m - 1; j >= 1; --j) {
        auto w = crossing_word(history, m, j);
        prefix.insert(prefix.end(), w.begin(), w.end());
        std::vector<int> far = prefix;
        far.push_back(j);
        out.push_back({Seq(m, std::move(far)), j, vtag, 'l'});
        std::vector<int> next = prefix;
        next.push_back(j >= 2 ? j - 1 : 0);
        out.push_back({Seq(m, std::move(next)), j - 1, vtag, 'r'});
        vtag = 3 - vtag;
    }
    return out;
}

std::vector<Seq> extend_set(const std::vector<Seq>& history, int m) {
    std::vector<Seq> out;
    for (auto& ls : extend_set_labeled(history, m))
        if (std::find(out.begin(), out.end(), ls.seq) == out.end()) out.push_back(ls.seq);
    return out;
}

std::vector<Seq> class_representatives(const std::vector<Seq>& set) {
    std::map<std::vector<std::uint8_t>, Seq> reps;
    for (const Seq& s : set) {
        auto bits = parity_class(s).bits;
        auto it = reps.find(bits);
        if (it == reps.end())
            reps.emplace(bits, s);
        else if (seq_less(s, it->second))
            it->second = s;
    }
    std::vector<Seq> out;
    for (auto& [bits, s] : reps) out.push_back(s);
    std::sort(out.begin(), out.end(), seq_less);
    return out;
}

std::vector<int> g2(const ParityClass& c) {
    if (c.modulus != 2) throw ModulusMismatch("G_2 takes a modulus-2 class");
    return {static_cast<int>(c.bits[0])};
}

std::vector<int> g_step(const XHistory& h, const Seq& s) {
    std::size_t n = h.top();
    if (s.modulus != static_cast<int>(n) + 1)
        throw ModulusMismatch("expected a sequence of modulus " + std::to_string(n + 1) +
                              ", got " + std::to_string(s.modulus));
    std::vector<int> col(n);
    for (std::size_t k = 1; k < n; ++k) {
        if (delta(s, static_cast<int>(k)) == 0) {
            col[k - 1] = 0;
            continue;
        }
        int prev = h.x(k, n);
        if (prev != 0) {
            col[k - 1] = prev;
            continue;
        }
        // zero run x_{k,n}, x_{k,n-1}, ... ; the referenced value sits one
        // column left of the run, with the virtual base x_{k,k} = 1.
        std::size_t b = 0;
        while (n - b > k && h.x(k, n - b) == 0) ++b;
        int ref = (n - b == k) ? 1 : h.x(k, n - b);
        col[k - 1] = (b % 2 == 0) ? ref : -ref;
    }
    col[n - 1] = (delta(s, static_cast<int>(n)) != 0) ? 1 : 0;
    return col;
}

XHistory g_full(const std::vector<Seq>& chain) {
    if (chain.empty()) throw InadmissibleChain("empty chain");
    try {
        validate_history(chain, static_cast<int>(chain.size()) + 2);
    } catch (const InvalidHistory& e) {
        throw InadmissibleChain(e.what());
    }
    XHistory h;
    h.columns.push_back(g2(parity_class(chain[0])));
    for (std::size_t i = 1; i < chain.size(); ++i) h.columns.push_back(g_step(h, chain[i]));
    return h;
}

}  // namespace brunnian
