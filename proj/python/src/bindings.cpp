#include "triality/atlas.hpp"
#include "triality/cli.hpp"
#include "triality/errors.hpp"
#include "triality/hurwitz.hpp"
#include "triality/resolvents.hpp"
#include "triality/signed_perm.hpp"
#include "triality/table1.hpp"
#include "triality/triality_model.hpp"
#include "triality/witt.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace triality;

namespace {

std::vector<std::string> coeff_strings(const RationalPolynomial& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

std::vector<Rational> parse_all(const std::vector<std::string>& xs) {
    std::vector<Rational> out;
    for (const auto& x : xs) out.push_back(parse_rational(x));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Triality workbench for the Weyl group W(D4)";

    py::register_exception<TrialityError>(m, "TrialityError");

    m.def("wd4_order", [] { return wd4().size(); });

    m.def("atlas_json", [] {
        return cli::atlas_json(Atlas::standard(), standard_table1_match()).dump();
    }, "The 98 subgroup classes in table row order, as a JSON string.");

    m.def("triality_on_rows", [] {
        const auto& match = standard_table1_match();
        auto t = Atlas::standard().triality_on_classes();
        std::vector<int> out;
        for (int n = 1; n <= static_cast<int>(match.class_of_row.size()); ++n)
            out.push_back(match.row_of_class[t[match.class_of_row[n - 1]]]);
        return out;
    }, "Row images of the triality permutation, indexed from row 1.");

    m.def("resolvent_pair", [](const std::string& a, const std::string& b, const std::string& c,
                               const std::string& e) {
        auto p = resolvent_pair(parse_rational(a), parse_rational(b), parse_rational(c), parse_rational(e));
        return py::make_tuple(coeff_strings(p.f4_prime), coeff_strings(p.f4_second));
    }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("e"),
       "Coefficients (constant first, as p/q strings) of f4' and f4''.");

    m.def("hilbert_symbol", [](const std::string& a, const std::string& b, long long p) {
        return hilbert_symbol(parse_rational(a), parse_rational(b), Place{p});
    }, py::arg("a"), py::arg("b"), py::arg("p"), "p = 0 selects the real place.");

    m.def("is_witt_equivalent", [](const std::vector<std::string>& q1, const std::vector<std::string>& q2) {
        return is_witt_equivalent(DiagonalForm(parse_all(q1)), DiagonalForm(parse_all(q2)));
    });

    m.def("triality_laws_hold", [](const std::vector<int>& generator_keys) {
        std::vector<SignedPermutation> gens;
        for (int k : generator_keys) gens.push_back(SignedPermutation::from_key(k));
        return verify_triality_laws(standard_model(gens)).all_passed();
    }, py::arg("generator_keys") = std::vector<int>{});

    m.def("hurwitz_closed", [] { return hurwitz_group().closed(); });

    m.def("run_cli", [](std::vector<std::string> args) {
        args.insert(args.begin(), "triality");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, "Runs the command-line tool in process; returns (exit code, stdout, stderr).");
}
