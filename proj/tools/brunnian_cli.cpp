// Command-line front end: block-form checks, enumerations, Alexander
// polynomials, sublink determinant tests, sequence-set expansions and
// construction recipes. Exit codes: 0 success (realizable / all vanish),
// 1 domain rejection, 2 input or usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "brunnian/alternation.hpp"
#include "brunnian/block_form.hpp"
#include "brunnian/polynomial.hpp"
#include "brunnian/realizability.hpp"
#include "brunnian/sequences.hpp"
#include "brunnian/sublinks.hpp"

using namespace brunnian;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kBadInput = 2;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

// Matrix input: plain text ("rows cols" + entries) or a block-form JSON
// document, which is composed first.
IntMatrix read_matrix(const std::string& text) {
    if (looks_like_json(text)) return compose_block2(block2_from_json(text));
    return IntMatrix::parse_text(text);
}

json tuples_to_json(const std::set<AltTuple>& tuples) {
    json arr = json::array();
    for (const auto& t : tuples) arr.push_back(t);
    return arr;
}

void print_violations(const std::vector<Violation>& violations) {
    for (const auto& v : violations)
        std::cout << "violation [" << v.law << "] at (" << v.i << "," << v.j
                  << "): " << v.detail << "\n";
}

int cmd_check(const std::string& input, const std::string& format, bool reversed) {
    IntMatrix m = read_matrix(slurp(input));
    Verdict v;
    try {
        v = check_matrix(m, reversed);
    } catch (const NotBlockForm& e) {
        if (format == "json") {
            json j;
            j["realizable"] = false;
            j["error"] = std::string(e.what());
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "not a 2-component block form: " << e.what() << "\n";
        }
        return kRejected;
    }
    if (format == "json") {
        std::cout << verdict_to_json(v) << "\n";
    } else {
        std::cout << (v.realizable ? "realizable" : "not realizable") << "\n";
        AlternationTable t = alternation_table(decompose_block2(m).H, reversed);
        if (t.size() >= 2) std::cout << "alternations:\n" << t.render();
        if (v.has_witness && !v.witness.empty()) {
            std::cout << "witness:";
            for (const Seq& s : v.witness) std::cout << ' ' << to_string(s);
            std::cout << "\n";
        }
        print_violations(v.violations);
        for (const auto& n : v.notes) std::cout << "note: " << n << "\n";
    }
    return v.realizable ? kOk : kRejected;
}

int cmd_decompose(const std::string& input, const std::string& format,
                  const std::vector<std::size_t>& parts, bool lenient) {
    std::string text = slurp(input);
    if (parts.empty()) {
        SeifertBlock2 b = decompose_block2(read_matrix(text));
        if (format == "json") {
            std::cout << block2_to_json(b) << "\n";
        } else {
            std::cout << "n = " << b.n() << "\nE = (";
            for (std::size_t i = 0; i < b.n(); ++i)
                std::cout << (i ? ", " : "") << (b.E.at(i) > 0 ? "+1" : "-1");
            std::cout << ")\nH =\n" << b.H.to_text();
        }
        return kOk;
    }
    MultiBlockForm f = decompose_multi(IntMatrix::parse_text(text), parts, lenient);
    if (format == "json") {
        std::cout << multi_to_json(f) << "\n";
    } else {
        std::cout << "parts =";
        for (std::size_t p : f.parts) std::cout << ' ' << p;
        std::cout << "\n";
        for (std::size_t l = 0; l < f.num_parts(); ++l)
            std::cout << "H_" << (l + 1) << " =\n" << f.H_blocks[l].to_text();
        for (std::size_t l = 0; l < f.num_parts(); ++l)
            for (std::size_t m = 0; m < f.num_parts(); ++m)
                if (l != m)
                    std::cout << "P_" << (l + 1) << "," << (m + 1) << " =\n"
                              << f.P_blocks[l][m].to_text();
    }
    return kOk;
}

int cmd_enumerate(int k, const std::string& engine, const std::string& format) {
    auto run = [&](const std::string& name) {
        if (name == "sequence") return enumerate_sequence_engine(k);
        if (name == "constraint") return enumerate_constraint_engine(k);
        return enumerate_chord_engine(k);
    };
    if (engine != "all") {
        auto tuples = run(engine);
        if (format == "json") {
            json j;
            j["k"] = k;
            j["engine"] = engine;
            j["tuples"] = tuples_to_json(tuples);
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& t : tuples) std::cout << tuple_to_string(t) << "\n";
        }
        return kOk;
    }

    auto seq = enumerate_sequence_engine(k);
    auto con = enumerate_constraint_engine(k);
    bool chord_ran = k <= 5;
    std::set<AltTuple> cho;
    if (chord_ran) cho = enumerate_chord_engine(k);
    bool generative_agree = !chord_ran || seq == cho;
    bool superset = std::includes(con.begin(), con.end(), seq.begin(), seq.end());
    std::set<AltTuple> surplus;
    for (const auto& t : con)
        if (!seq.count(t)) surplus.insert(t);

    if (format == "json") {
        json j;
        j["k"] = k;
        j["engines"]["sequence"] = tuples_to_json(seq);
        j["engines"]["constraint"] = tuples_to_json(con);
        if (chord_ran) j["engines"]["chord"] = tuples_to_json(cho);
        j["agreement"]["sequence_eq_chord"] = generative_agree;
        j["agreement"]["constraint_superset"] = superset;
        j["agreement"]["constraint_surplus"] = tuples_to_json(surplus);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "sequence engine: " << seq.size() << " tuples\n";
        if (chord_ran)
            std::cout << "chord engine: " << cho.size() << " tuples ("
                      << (seq == cho ? "agree" : "DISAGREE") << ")\n";
        else
            std::cout << "chord engine: skipped (supports k <= 5)\n";
        std::cout << "constraint engine: " << con.size() << " tuples ("
                  << (superset ? "superset, surplus " + std::to_string(surplus.size())
                               : "NOT A SUPERSET")
                  << ")\n";
        if (!generative_agree) {
            for (const auto& t : seq)
                if (!cho.count(t)) std::cout << "sequence only: " << tuple_to_string(t) << "\n";
            for (const auto& t : cho)
                if (!seq.count(t)) std::cout << "chord only: " << tuple_to_string(t) << "\n";
        }
        for (const auto& t : surplus)
            std::cout << "constraint surplus: " << tuple_to_string(t) << "\n";
        for (const auto& t : seq) std::cout << tuple_to_string(t) << "\n";
    }
    return generative_agree && superset ? kOk : kRejected;
}

int cmd_alexander(const std::string& input, const std::string& format) {
    IntMatrix m = read_matrix(slurp(input));
    if (!m.square()) throw ParseError("alexander needs a square matrix");
    IntPolynomial p = alexander(m);
    if (format == "json") {
        json j;
        j["polynomial"] = p.to_string();
        json coeffs = json::array();
        for (const Int& c : p.coeffs())
            coeffs.push_back(c.fits_long() ? json(c.to_long()) : json(c.to_string()));
        j["coefficients"] = std::move(coeffs);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << p.to_string() << "\n";
    }
    return kOk;
}

int cmd_sublinks(const std::string& input, const std::string& format,
                 const std::vector<std::size_t>& parts, bool lenient) {
    std::string text = slurp(input);
    MultiBlockForm f;
    if (looks_like_json(text)) {
        f = multi_from_json(text, lenient);
    } else {
        if (parts.empty())
            throw ParseError("text matrix input needs --parts to locate the blocks");
        f = decompose_multi(IntMatrix::parse_text(text), parts, lenient);
    }
    auto warnings = check_theorem7(f);
    auto rep = sublink_vanishing(f);
    if (format == "json") {
        json j;
        j["all_vanish"] = rep.all_vanish;
        json subs = json::array();
        for (const auto& e : rep.entries) {
            json one;
            json idx = json::array();
            for (std::size_t s : e.subset) idx.push_back(s + 1);
            one["parts"] = std::move(idx);
            one["det"] = e.det.to_string();
            one["vanishes"] = e.vanishes;
            subs.push_back(std::move(one));
        }
        j["subsets"] = std::move(subs);
        json warn = json::array();
        for (const auto& v : warnings) warn.push_back(v.law + ": " + v.detail);
        j["warnings"] = std::move(warn);
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& v : warnings)
            std::cout << "warning [" << v.law << "]: " << v.detail << "\n";
        for (const auto& e : rep.entries) {
            std::cout << "sublink {";
            for (std::size_t i = 0; i < e.subset.size(); ++i)
                std::cout << (i ? "," : "") << (e.subset[i] + 1);
            std::cout << "}: det = " << e.det.to_string() << " -> "
                      << (e.vanishes ? "vanishes" : "violates") << "\n";
        }
        std::cout << (rep.all_vanish ? "all proper sublink determinants vanish"
                                     : "some proper sublink determinant is nonzero")
                  << "\n";
    }
    return rep.all_vanish ? kOk : kRejected;
}

int cmd_sequences(const std::string& chain_text, const std::string& format) {
    std::vector<Seq> chain = parse_chain(chain_text);
    int m = chain.back().modulus + 1;
    std::vector<Seq> set;
    try {
        set = extend_set(chain, m);
    } catch (const InvalidHistory& e) {
        throw InadmissibleChain(e.what());
    }
    auto classes = class_representatives(set);
    if (format == "json") {
        json j;
        j["modulus"] = m;
        json s = json::array(), c = json::array();
        for (const Seq& x : set) s.push_back(to_string(x));
        for (const Seq& x : classes) c.push_back(to_string(x));
        j["set"] = std::move(s);
        j["classes"] = std::move(c);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "S(";
        for (const Seq& s : chain) std::cout << to_string(s) << ", ";
        std::cout << m << ") = {";
        for (std::size_t i = 0; i < set.size(); ++i)
            std::cout << (i ? ", " : " ") << to_string(set[i]);
        std::cout << " }\n";
        std::cout << "classes: {";
        for (std::size_t i = 0; i < classes.size(); ++i)
            std::cout << (i ? ", " : " ") << '[' << to_string(classes[i]) << ']';
        std::cout << " }\n";
    }
    return kOk;
}

int cmd_plan(const std::string& input, const std::string& format) {
    IntMatrix m = read_matrix(slurp(input));
    SeifertBlock2 b = decompose_block2(m);
    ConstructionPlan p;
    try {
        p = construction_plan(b);
    } catch (const NotRealizable&) {
        Verdict v = check_matrix(m);
        if (format == "json") {
            std::cout << verdict_to_json(v) << "\n";
        } else {
            std::cout << "not realizable\n";
            print_violations(v.violations);
        }
        return kRejected;
    }
    if (format == "json")
        std::cout << plan_to_json(p) << "\n";
    else
        std::cout << plan_to_text(p);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seifert-matrix calculus for Brunnian links"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string input = "-";
    std::string engine = "sequence";
    std::string chain_text;
    std::vector<std::size_t> parts;
    bool lenient = false;
    bool reversed = false;
    int k = 2;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* c_check = app.add_subcommand("check", "decide realizability of a block-form matrix");
    c_check->add_option("input", input, "matrix file or - for stdin");
    c_check->add_flag("--reverse-order", reversed, "extract the table in reversed basis order");
    add_format(c_check);

    auto* c_dec = app.add_subcommand("decompose", "validate and split a block-form matrix");
    c_dec->add_option("input", input, "matrix file or - for stdin");
    c_dec->add_option("--parts", parts, "part sizes of a multi-component form")->delimiter(',');
    c_dec->add_flag("--lenient-E", lenient, "accept any +-1 diagonal in E blocks");
    add_format(c_dec);

    auto* c_enum = app.add_subcommand("enumerate", "enumerate realizable alternation tuples");
    c_enum->add_option("k", k, "table size (number of loops)")->required();
    c_enum->add_option("--engine", engine, "sequence|constraint|chord|all")
        ->check(CLI::IsMember({"sequence", "constraint", "chord", "all"}));
    add_format(c_enum);

    auto* c_alex = app.add_subcommand("alexander", "Alexander polynomial det(M - t M^T)");
    c_alex->add_option("input", input, "matrix file or - for stdin");
    add_format(c_alex);

    auto* c_sub = app.add_subcommand("sublinks", "proper-sublink determinant vanishing report");
    c_sub->add_option("input", input, "multi-form JSON or matrix file, - for stdin");
    c_sub->add_option("--parts", parts, "part sizes for text matrix input")->delimiter(',');
    c_sub->add_flag("--lenient-E", lenient, "accept any +-1 diagonal in E blocks");
    add_format(c_sub);

    auto* c_seq = app.add_subcommand("sequences", "expand the admissible set of a chain");
    c_seq->add_option("chain", chain_text, "chain in text notation, e.g. \"(0)_2\"")->required();
    add_format(c_seq);

    auto* c_plan = app.add_subcommand("plan", "constructive twist/intertwine recipe");
    c_plan->add_option("input", input, "matrix file or - for stdin");
    add_format(c_plan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (c_check->parsed()) return cmd_check(input, format, reversed);
        if (c_dec->parsed()) return cmd_decompose(input, format, parts, lenient);
        if (c_enum->parsed()) return cmd_enumerate(k, engine, format);
        if (c_alex->parsed()) return cmd_alexander(input, format);
        if (c_sub->parsed()) return cmd_sublinks(input, format, parts, lenient);
        if (c_seq->parsed()) return cmd_sequences(chain_text, format);
        if (c_plan->parsed()) return cmd_plan(input, format);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const RangeError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const NotBlockForm& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kRejected;
    } catch (const NotOddSize& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kRejected;
    } catch (const OddPart& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kRejected;
    } catch (const InadmissibleChain& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kRejected;
    } catch (const DimensionMismatch& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRejected;
    }
    return kBadInput;
}
