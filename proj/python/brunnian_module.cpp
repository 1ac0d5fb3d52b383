// Python bindings for the core operations. Matrices travel as lists of lists
// of ints (arbitrary precision both ways), sequences in the text notation
// "(r1, r2, ...)_m".

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brunnian/alternation.hpp"
#include "brunnian/block_form.hpp"
#include "brunnian/polynomial.hpp"
#include "brunnian/realizability.hpp"
#include "brunnian/s_equivalence.hpp"
#include "brunnian/sequences.hpp"
#include "brunnian/sublinks.hpp"

namespace py = pybind11;
using namespace brunnian;

namespace {

Int int_from_py(const py::handle& h) { return Int(py::str(h).cast<std::string>()); }

py::object int_to_py(const Int& v) {
    if (v.fits_long()) return py::int_(v.to_long());
    return py::module_::import("builtins").attr("int")(v.to_string());
}

IntMatrix matrix_from_py(const py::sequence& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : py::sequence(rows[0]).size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        py::sequence row(rows[i]);
        if (row.size() != c) throw DimensionMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = int_from_py(row[j]);
    }
    return m;
}

py::list matrix_to_py(const IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(int_to_py(m.at(i, j)));
        rows.append(std::move(row));
    }
    return rows;
}

py::dict verdict_to_py(const Verdict& v) {
    py::dict d;
    d["realizable"] = v.realizable;
    if (v.has_witness) {
        py::list w;
        for (const Seq& s : v.witness) w.append(to_string(s));
        d["witness"] = std::move(w);
    } else {
        d["witness"] = py::none();
    }
    py::list viols;
    for (const Violation& viol : v.violations) {
        py::dict one;
        one["law"] = viol.law;
        one["i"] = viol.i;
        one["j"] = viol.j;
        one["detail"] = viol.detail;
        viols.append(std::move(one));
    }
    d["violations"] = std::move(viols);
    d["notes"] = v.notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_brunnian, m) {
    m.doc() = "Seifert-matrix calculus for Brunnian links";

    // base first: translators run newest-first, so the specific ones must be
    // registered after the catch-all
    py::register_exception<Error>(m, "BrunnianError");
    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<NotBlockForm>(m, "NotBlockFormError");
    py::register_exception<NotRealizable>(m, "NotRealizableError");
    py::register_exception<InadmissibleChain>(m, "InadmissibleChainError");

    m.def(
        "compose_block2",
        [](const std::vector<int>& e, const py::sequence& h) {
            return matrix_to_py(compose_block2(SeifertBlock2(SignDiagonal(e), matrix_from_py(h))));
        },
        py::arg("E"), py::arg("H"),
        "Compose the 2-component block form (E | F_n ; 0 | H) into a full matrix.");

    m.def(
        "decompose_block2",
        [](const py::sequence& rows) {
            SeifertBlock2 b = decompose_block2(matrix_from_py(rows));
            py::dict d;
            d["n"] = b.n();
            d["E"] = b.E.signs;
            d["H"] = matrix_to_py(b.H);
            return d;
        },
        py::arg("matrix"), "Split a matrix in 2-component block form into (n, E, H).");

    m.def(
        "alexander",
        [](const py::sequence& rows) {
            IntPolynomial p = alexander(matrix_from_py(rows));
            py::dict d;
            d["text"] = p.to_string();
            py::list coeffs;
            for (const Int& c : p.coeffs()) coeffs.append(int_to_py(c));
            d["coefficients"] = std::move(coeffs);
            return d;
        },
        py::arg("matrix"), "Alexander polynomial det(M - t M^T), ascending coefficients.");

    m.def(
        "check_matrix",
        [](const py::sequence& rows, bool reversed) {
            return verdict_to_py(check_matrix(matrix_from_py(rows), reversed));
        },
        py::arg("matrix"), py::arg("reversed") = false,
        "Realizability verdict for a 2-component block-form Seifert matrix.");

    m.def(
        "enumerate_tuples",
        [](int k, const std::string& engine) {
            std::set<AltTuple> out;
            if (engine == "sequence")
                out = enumerate_sequence_engine(k);
            else if (engine == "constraint")
                out = enumerate_constraint_engine(k);
            else if (engine == "chord")
                out = enumerate_chord_engine(k);
            else
                throw ValueOutOfRange("engine must be sequence, constraint or chord");
            return std::vector<AltTuple>(out.begin(), out.end());
        },
        py::arg("k"), py::arg("engine") = "sequence",
        "Realizable alternation tuples of table size k, column-major order.");

    m.def(
        "expand_chain",
        [](const std::string& chain_text) {
            auto chain = parse_chain(chain_text);
            int mod = chain.back().modulus + 1;
            std::vector<Seq> set;
            try {
                set = extend_set(chain, mod);
            } catch (const InvalidHistory& e) {
                throw InadmissibleChain(e.what());
            }
            py::dict d;
            d["modulus"] = mod;
            py::list s, c;
            for (const Seq& x : set) s.append(to_string(x));
            for (const Seq& x : class_representatives(set)) c.append(to_string(x));
            d["set"] = std::move(s);
            d["classes"] = std::move(c);
            return d;
        },
        py::arg("chain"), "Admissible extension set of a chain given in text notation.");

    m.def(
        "g_columns",
        [](const std::string& chain_text) {
            return g_full(parse_chain(chain_text)).columns;
        },
        py::arg("chain"), "Columns of the G recursion along an admissible chain.");

    m.def(
        "construction_plan",
        [](const py::sequence& rows) {
            ConstructionPlan p = construction_plan(decompose_block2(matrix_from_py(rows)));
            py::dict d;
            d["n"] = p.n;
            d["E"] = p.e_signs;
            py::list steps;
            for (const auto& st : p.steps) {
                py::dict s;
                s["clasp"] = st.clasp;
                s["twist"] = int_to_py(st.twist);
                py::list tw;
                for (const Int& v : st.intertwines) tw.append(int_to_py(v));
                s["intertwines"] = std::move(tw);
                s["case"] = st.e_case;
                steps.append(std::move(s));
            }
            d["steps"] = std::move(steps);
            d["text"] = plan_to_text(p);
            return d;
        },
        py::arg("matrix"), "Twist/intertwine recipe for a realizable block form.");

    m.def(
        "sublink_vanishing",
        [](const std::string& form_json, bool lenient) {
            MultiBlockForm f = multi_from_json(form_json, lenient);
            auto rep = sublink_vanishing(f);
            py::list out;
            for (const auto& e : rep.entries) {
                py::dict one;
                py::list idx;
                for (std::size_t s : e.subset) idx.append(s + 1);
                one["parts"] = std::move(idx);
                one["det"] = e.det.to_string();
                one["vanishes"] = e.vanishes;
                out.append(std::move(one));
            }
            return out;
        },
        py::arg("form_json"), py::arg("lenient") = false,
        "Per-subset determinant vanishing report for a multi-component form.");

    m.def(
        "trace_split_test",
        [](const std::vector<int>& e) {
            long sum = 0;
            for (int s : SignDiagonal(e).signs) sum += s;
            return sum == 0;
        },
        py::arg("E"), "True iff the E diagonal sums to zero (algebraically split test).");

    m.def(
        "s_equiv_enlarge",
        [](const py::sequence& rows, const std::string& kind, const py::sequence& border) {
            std::vector<Int> v;
            for (const auto& item : border) v.push_back(int_from_py(item));
            EnlargeKind k = kind == "row" ? EnlargeKind::Row : EnlargeKind::Column;
            return matrix_to_py(s_equiv_enlarge(matrix_from_py(rows), k, v));
        },
        py::arg("matrix"), py::arg("kind"), py::arg("border"),
        "Elementary S-equivalence enlargement (kind: 'row' or 'column').");

    m.def(
        "s_equiv_congruence",
        [](const py::sequence& rows, const py::sequence& u) {
            return matrix_to_py(s_equiv_congruence(matrix_from_py(rows), matrix_from_py(u)));
        },
        py::arg("matrix"), py::arg("U"), "Unimodular congruence U^T M U.");

    m.def(
        "adjacency_pairs",
        [](const std::string& chain_text) {
            auto chain = parse_chain(chain_text);
            int mod = chain.back().modulus + 1;
            auto rep = adjacency_classes(chain, mod);
            py::list out;
            for (const auto& p : rep.pairs) {
                py::dict one;
                one["kind"] = p.kind;
                one["levels"] = py::make_tuple(p.level_a, p.level_b);
                one["elements"] = py::make_tuple(to_string(p.elem_a), to_string(p.elem_b));
                out.append(std::move(one));
            }
            return out;
        },
        py::arg("chain"), "Endpoint adjacency pairs read off the labeled extension set.");
}
